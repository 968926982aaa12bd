#include "addlab/channel.hpp"

#include <algorithm>
#include <cmath>

#include "addlab/eig.hpp"
#include "addlab/io.hpp"
#include "addlab/rng.hpp"

namespace addlab {

Channel Channel::identity(int d) {
    if (d < 1) throw std::invalid_argument("identity: d < 1");
    Channel c;
    c.rep_ = NamedRep{NamedKind::Identity, d, std::nullopt};
    c.dim_in_ = c.dim_out_ = d;
    c.spec_ = "id:" + std::to_string(d);
    return c;
}

Channel Channel::werner_holevo(int d) {
    if (d < 2) throw std::invalid_argument("werner_holevo: d < 2");
    Channel c;
    c.rep_ = NamedRep{NamedKind::WernerHolevo, d, std::nullopt};
    c.dim_in_ = c.dim_out_ = d;
    c.spec_ = "wh:" + std::to_string(d);
    return c;
}

Channel Channel::depolarize(const Mat& sigma) {
    require_hermitian(sigma, 1e-10, "depolarize target");
    if (!is_density_matrix(sigma)) throw std::invalid_argument("depolarize: target not a density matrix");
    Channel c;
    c.rep_ = NamedRep{NamedKind::Depolarize, sigma.rows(), sigma};
    c.dim_in_ = c.dim_out_ = sigma.rows();
    c.spec_ = "depol:" + std::to_string(sigma.rows());
    return c;
}

Channel Channel::from_kraus(std::vector<Mat> ops, const std::string& spec) {
    if (ops.empty()) throw std::invalid_argument("from_kraus: empty list");
    Channel c;
    c.dim_out_ = ops[0].rows();
    c.dim_in_ = ops[0].cols();
    for (const Mat& k : ops)
        if (k.rows() != c.dim_out_ || k.cols() != c.dim_in_)
            throw std::invalid_argument("from_kraus: inconsistent shapes");
    c.rep_ = KrausRep{std::move(ops)};
    c.spec_ = spec;
    return c;
}

Channel Channel::from_superoperator(Mat s, int dim_in, int dim_out, const std::string& spec) {
    if (s.rows() != dim_out * dim_out || s.cols() != dim_in * dim_in)
        throw std::invalid_argument("from_superoperator: shape mismatch");
    Channel c;
    c.dim_in_ = dim_in;
    c.dim_out_ = dim_out;
    c.rep_ = SuperopRep{std::move(s), dim_in, dim_out};
    c.spec_ = spec;
    return c;
}

bool Channel::is_named(NamedKind kind) const {
    const NamedRep* n = std::get_if<NamedRep>(&rep_);
    return n && n->kind == kind;
}

bool Channel::is_named(NamedKind kind, int d) const {
    const NamedRep* n = std::get_if<NamedRep>(&rep_);
    return n && n->kind == kind && n->dim == d;
}

Mat Channel::apply_named(const NamedRep& n, const Mat& rho) const {
    switch (n.kind) {
        case NamedKind::Identity:
            return rho;
        case NamedKind::WernerHolevo: {
            Mat out = Mat::identity(n.dim) * rho.trace() - rho.transpose();
            return out * cplx(1.0 / (n.dim - 1), 0.0);
        }
        case NamedKind::Depolarize:
            return *n.sigma * rho.trace();
    }
    throw std::logic_error("unreachable");
}

Mat Channel::apply(const Mat& rho) const {
    if (rho.rows() != dim_in_ || rho.cols() != dim_in_)
        throw std::invalid_argument("Channel::apply: dimension mismatch");
    if (const NamedRep* n = std::get_if<NamedRep>(&rep_)) return apply_named(*n, rho);
    if (const KrausRep* k = std::get_if<KrausRep>(&rep_)) {
        Mat out(dim_out_, dim_out_);
        for (const Mat& op : k->ops) out += op * rho * op.dagger();
        return out;
    }
    const SuperopRep& s = std::get<SuperopRep>(rep_);
    Mat out(dim_out_, dim_out_);
    for (int i = 0; i < dim_out_; ++i)
        for (int j = 0; j < dim_out_; ++j) {
            cplx acc = 0;
            for (int kk = 0; kk < dim_in_; ++kk)
                for (int l = 0; l < dim_in_; ++l)
                    acc += s.s(i * dim_out_ + j, kk * dim_in_ + l) * rho(kk, l);
            out(i, j) = acc;
        }
    return out;
}

namespace {

std::vector<Mat> wh_kraus(int d) {
    // antisymmetric matrix units (E_ij - E_ji)/sqrt(d-1), i < j
    std::vector<Mat> ks;
    const double norm = 1.0 / std::sqrt(static_cast<double>(d - 1));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Mat a(d, d);
            a(i, j) = norm;
            a(j, i) = -norm;
            ks.push_back(std::move(a));
        }
    return ks;
}

std::vector<Mat> depolarize_kraus(const Mat& sigma) {
    const int d = sigma.rows();
    EigResult e = eig_hermitian(sigma);
    std::vector<Mat> ks;
    for (int i = 0; i < d; ++i) {
        const double s = std::max(0.0, e.values[i]);
        if (s < 1e-15) continue;
        for (int j = 0; j < d; ++j) {
            Mat k(d, d);
            for (int r = 0; r < d; ++r) k(r, j) = std::sqrt(s) * e.vectors(r, i);
            ks.push_back(std::move(k));
        }
    }
    return ks;
}

std::vector<Mat> kraus_from_choi(const Mat& choi, int dim_in, int dim_out) {
    EigResult e = eig_hermitian(choi);
    std::vector<Mat> ks;
    for (size_t m = 0; m < e.values.size(); ++m) {
        const double lam = e.values[m];
        if (lam < -1e-9) throw std::runtime_error("kraus(): Choi matrix not PSD");
        if (lam < 1e-12) continue;
        // eigenvector indexed as (i_in, i_out) per choi() convention
        Mat k(dim_out, dim_in);
        for (int i = 0; i < dim_in; ++i)
            for (int o = 0; o < dim_out; ++o)
                k(o, i) = std::sqrt(lam) * e.vectors(i * dim_out + o, static_cast<int>(m));
        ks.push_back(std::move(k));
    }
    return ks;
}

}  // namespace

const std::vector<Mat>& Channel::kraus() const {
    if (kraus_cache_) return *kraus_cache_;
    auto cache = std::make_shared<std::vector<Mat>>();
    if (const KrausRep* k = std::get_if<KrausRep>(&rep_)) {
        *cache = k->ops;
    } else if (const NamedRep* n = std::get_if<NamedRep>(&rep_)) {
        switch (n->kind) {
            case NamedKind::Identity:
                cache->push_back(Mat::identity(n->dim));
                break;
            case NamedKind::WernerHolevo:
                *cache = wh_kraus(n->dim);
                break;
            case NamedKind::Depolarize:
                *cache = depolarize_kraus(*n->sigma);
                break;
        }
    } else {
        *cache = kraus_from_choi(choi(), dim_in_, dim_out_);
    }
    kraus_cache_ = std::move(cache);
    return *kraus_cache_;
}

Mat Channel::choi() const {
    Mat c(dim_in_ * dim_out_, dim_in_ * dim_out_);
    for (int i = 0; i < dim_in_; ++i)
        for (int j = 0; j < dim_in_; ++j) {
            Mat eij(dim_in_, dim_in_);
            eij(i, j) = 1.0;
            Mat out = apply(eij);
            for (int o = 0; o < dim_out_; ++o)
                for (int p = 0; p < dim_out_; ++p)
                    c(i * dim_out_ + o, j * dim_out_ + p) = out(o, p);
        }
    return c;
}

Channel tensor(const Channel& a, const Channel& b) {
    std::vector<Mat> ks;
    for (const Mat& ka : a.kraus())
        for (const Mat& kb : b.kraus()) ks.push_back(kron(ka, kb));
    return Channel::from_kraus(std::move(ks), a.spec() + "(x)" + b.spec());
}

CptpReport check_cptp(const Channel& ch) {
    Mat c = ch.choi();
    // Hermitize for the eigensolver; non-Hermitian Choi counts as a violation.
    double herm_violation = (c - c.dagger()).max_norm();
    Mat h = (c + c.dagger()) * cplx(0.5, 0.0);
    auto ev = eigvals_hermitian(h);
    double min_ev = ev.empty() ? 0.0 : ev.back();
    bool cp = min_ev >= -1e-9 && herm_violation <= 1e-9;

    // TP: Tr_out Choi = identity on the input space
    Mat tr_out = partial_trace(h, ch.dim_in(), ch.dim_out(), Side::Left);
    double tp_violation = (tr_out - Mat::identity(ch.dim_in())).max_norm();
    bool tp = tp_violation <= 1e-9;

    double viol = std::max({herm_violation, tp_violation, min_ev < 0 ? -min_ev : 0.0});
    return CptpReport{tp, cp, viol};
}

bool check_unitary_covariance(const Channel& ch, int unitary_samples, int state_samples,
                              uint64_t seed) {
    for (int s = 0; s < state_samples; ++s) {
        auto gen = rng_for(seed, 1000 + s);
        Mat rho = pure_density(random_pure_state(ch.dim_in(), gen));
        auto base = eigvals_hermitian(ch.apply(rho));
        for (int u = 0; u < unitary_samples; ++u) {
            auto ugen = rng_for(seed, 2000000 + s * 10000 + u);
            Mat uu = haar_unitary(ch.dim_in(), ugen);
            auto rotated = eigvals_hermitian(ch.apply(uu * rho * uu.dagger()));
            for (size_t i = 0; i < base.size(); ++i)
                if (std::abs(base[i] - rotated[i]) > 1e-7) return false;
        }
    }
    return true;
}

Channel parse_channel_spec(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        KrausFile f = load_kraus_file(spec.substr(1));
        Channel c = Channel::from_kraus(std::move(f.kraus), spec);
        CptpReport rep = check_cptp(c);
        if (!rep.trace_preserving || !rep.completely_positive)
            throw std::invalid_argument("Kraus file " + spec + " is not CPTP (violation " +
                                        std::to_string(rep.max_violation) + ")");
        return c;
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad channel spec: " + spec);
    const std::string name = spec.substr(0, colon);
    const int d = std::stoi(spec.substr(colon + 1));
    if (name == "wh") return Channel::werner_holevo(d);
    if (name == "id") return Channel::identity(d);
    if (name == "depol") {
        if (d < 1) throw std::invalid_argument("depol: d < 1");
        return Channel::depolarize(Mat::identity(d) * cplx(1.0 / d, 0.0));
    }
    throw std::invalid_argument("unknown channel spec: " + spec);
}

}  // namespace addlab
