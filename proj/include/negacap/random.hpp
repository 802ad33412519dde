#pragma once

#include <cstdint>
#include <random>

#include "negacap/channel.hpp"
#include "negacap/linalg.hpp"

namespace negacap {

using Rng = std::mt19937_64;

ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);
// Haar unitary via Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);
ComplexMatrix random_density(std::size_t n, Rng& rng, std::size_t rank = 0);
ComplexMatrix random_pure_state(std::size_t n, Rng& rng);  // column vector
ComplexMatrix random_psd(std::size_t n, Rng& rng, std::size_t rank = 0);
// CPTP map whose Kraus operators are the blocks of a random isometry.
Channel random_cptp(BipartiteDims dims, std::size_t kraus, Rng& rng);

}  // namespace negacap
