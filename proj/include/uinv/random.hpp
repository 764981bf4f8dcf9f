#pragma once

#include "uinv/matrix.hpp"

#include <cstdint>
#include <random>

namespace uinv {

/// Mixes a master seed with a stream index (splitmix64). Used to give every
/// randomized trial its own reproducible generator.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Sampler for the small exact values used by the randomized checks:
/// integers in [-9, 9] above the diagonal of unipotent matrices, and rationals
/// p/q with p in [-9, 9], q in [1, 9] elsewhere.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform_int(int lo, int hi);
    Rational small_rational();
    Rational nonzero_small_rational();

    /// Upper unitriangular matrix with random integer entries above the diagonal.
    RatMatrix unipotent(int n);
    RatMatrix matrix(int n);
    /// Random matrix with every lower-left corner minor nonzero (resampled until so).
    RatMatrix omega_matrix(int n);
    /// Random matrix of the slice shape: zeros strictly above the anti-diagonal,
    /// nonzero anti-diagonal.
    RatMatrix slice_matrix(int n);

private:
    std::mt19937_64 rng_;
};

}  // namespace uinv
