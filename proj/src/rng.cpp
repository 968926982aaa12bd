#include "addlab/rng.hpp"

#include <cmath>

namespace addlab {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 rng_for(uint64_t seed, uint64_t counter) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(counter + 1)));
}

Mat haar_unitary(int dim, std::mt19937_64& gen) {
    std::normal_distribution<double> nd(0.0, 1.0);
    Mat g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = cplx(nd(gen), nd(gen));
    // modified Gram-Schmidt on columns
    for (int j = 0; j < dim; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx proj = 0;
            for (int i = 0; i < dim; ++i) proj += std::conj(g(i, k)) * g(i, j);
            for (int i = 0; i < dim; ++i) g(i, j) -= proj * g(i, k);
        }
        double nrm = 0;
        for (int i = 0; i < dim; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        // phase fixing: make the leading entry's phase canonical
        cplx lead = g(j, j);
        cplx phase = std::abs(lead) > 1e-14 ? lead / std::abs(lead) : cplx(1, 0);
        for (int i = 0; i < dim; ++i) g(i, j) /= nrm * phase;
    }
    return g;
}

std::vector<cplx> random_pure_state(int dim, std::mt19937_64& gen) {
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<cplx> v(dim);
    double nrm = 0;
    for (auto& z : v) {
        z = cplx(nd(gen), nd(gen));
        nrm += std::norm(z);
    }
    nrm = std::sqrt(nrm);
    for (auto& z : v) z /= nrm;
    return v;
}

Mat pure_density(const std::vector<cplx>& amp) {
    const int n = static_cast<int>(amp.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = amp[i] * std::conj(amp[j]);
    return m;
}

Mat random_hermitian_01(int dim, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    std::vector<double> lam(dim);
    for (double& x : lam) x = ud(gen);
    Mat u = haar_unitary(dim, gen);
    return u * Mat::diag(lam) * u.dagger();
}

Mat random_density(int dim, std::mt19937_64& gen) {
    std::exponential_distribution<double> ed(1.0);
    std::vector<double> lam(dim);
    double s = 0;
    for (double& x : lam) {
        x = ed(gen);
        s += x;
    }
    for (double& x : lam) x /= s;
    Mat u = haar_unitary(dim, gen);
    return u * Mat::diag(lam) * u.dagger();
}

}  // namespace addlab
