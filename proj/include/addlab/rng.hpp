#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "addlab/matrix.hpp"

namespace addlab {

// Deterministic per-job generator: jobs (restarts, samples) derive their
// stream from (seed, counter) so results do not depend on execution order.
std::mt19937_64 rng_for(uint64_t seed, uint64_t counter);

// Haar-random unitary via Gram-Schmidt of a Gaussian complex matrix with
// phase fixing on the diagonal of R.
Mat haar_unitary(int dim, std::mt19937_64& gen);

// Uniform random pure state as a column of amplitudes (dim x 1).
std::vector<cplx> random_pure_state(int dim, std::mt19937_64& gen);

Mat pure_density(const std::vector<cplx>& amp);

// Random Hermitian matrix with spectrum drawn uniformly from [0,1]^dim.
Mat random_hermitian_01(int dim, std::mt19937_64& gen);

// Random density matrix (Haar eigenbasis, flat simplex spectrum).
Mat random_density(int dim, std::mt19937_64& gen);

}  // namespace addlab
