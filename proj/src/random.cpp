#include "uinv/random.hpp"

#include "uinv/determinant.hpp"

namespace uinv {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int Sampler::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::small_rational() {
    const int num = uniform_int(-9, 9);
    const int den = uniform_int(1, 9);
    return Rational(num, den);
}

Rational Sampler::nonzero_small_rational() {
    while (true) {
        Rational r = small_rational();
        if (!r.is_zero()) return r;
    }
}

RatMatrix Sampler::unipotent(int n) {
    RatMatrix u = identity<Rational>(n);
    for (int r = 0; r < n; ++r) {
        for (int c = r + 1; c < n; ++c) u(r, c) = Rational(uniform_int(-9, 9));
    }
    return u;
}

RatMatrix Sampler::matrix(int n) {
    RatMatrix a(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a(r, c) = small_rational();
    }
    return a;
}

RatMatrix Sampler::omega_matrix(int n) {
    while (true) {
        RatMatrix a = matrix(n);
        bool generic = true;
        for (int k = 1; k <= n && generic; ++k) generic = !corner_minor(a, k).is_zero();
        if (generic) return a;
    }
}

RatMatrix Sampler::slice_matrix(int n) {
    RatMatrix b(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            // 0-based: above the anti-diagonal iff r + c < n - 1.
            if (r + c < n - 1) {
                b(r, c) = Rational(0);
            } else if (r + c == n - 1) {
                b(r, c) = nonzero_small_rational();
            } else {
                b(r, c) = small_rational();
            }
        }
    }
    return b;
}

}  // namespace uinv
