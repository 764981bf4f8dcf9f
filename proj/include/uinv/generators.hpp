#pragma once

// The invariants J[k][i] of the adjoint action restricted to the upper
// unitriangular group U, built from the generic matrix X and its adjugate.

#include "uinv/determinant.hpp"
#include "uinv/random.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace uinv {

/// All valid (k, i) for board size n, ordered by (k, i).
std::vector<GenIndex> all_indices(int n);

/// Generic matrix with x[a][b] at (a, b).
PolyMatrix build_X(int n);
/// adjugate(build_X(n)).
PolyMatrix build_Xstar(int n);

/// Rows i+1..n of `x` stacked over rows n-i+1..n of `xstar`. Works for symbolic
/// and numeric matrices alike. Throws BadIndex unless 0 <= i <= n-1.
template <typename Scalar>
Mat<Scalar> stack_Y(const Mat<Scalar>& x, const Mat<Scalar>& xstar, int i) {
    const int n = static_cast<int>(x.rows());
    if (i < 0 || i > n - 1) {
        throw BadIndex("Y index " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
    }
    Mat<Scalar> y(n, n);
    y.topRows(n - i) = x.bottomRows(n - i);
    y.bottomRows(i) = xstar.bottomRows(i);
    return y;
}

/// Lower-left k x k block of stack_Y(x, xstar, i): the last k-i rows of the
/// corner block of x over the last i rows of the corner block of xstar.
template <typename Scalar>
Mat<Scalar> generator_block(const Mat<Scalar>& x, const Mat<Scalar>& xstar, GenIndex idx) {
    const int n = static_cast<int>(x.rows());
    check_index(idx, n);
    Mat<Scalar> block(idx.k, idx.k);
    block.topRows(idx.k - idx.i) = x.bottomLeftCorner(idx.k - idx.i, idx.k);
    block.bottomRows(idx.i) = xstar.bottomLeftCorner(idx.i, idx.k);
    return block;
}

PolyMatrix build_Y(int i, int n);

/// J[k][i] = corner_minor(build_Y(i, n), k). Throws BadIndex.
Poly build_J(int k, int i, int n);

struct GenMember {
    GenIndex index;
    Poly poly;
    int degree = 0;
    std::size_t terms = 0;
};

/// The n(n+1)/2 generators, ordered by (k, i).
struct GenSet {
    int n = 0;
    std::vector<GenMember> members;

    const GenMember& at(GenIndex idx) const { return members.at(lex_position(idx)); }
    std::size_t size() const { return members.size(); }
};

GenSet generator_set(int n);

/// Values of all generators at a point, ordered by (k, i).
struct Fingerprint {
    int n = 0;
    std::vector<Rational> values;

    const Rational& at(GenIndex idx) const { return values.at(lex_position(idx)); }
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Generator values computed from a matrix and its adjugate with the supplied
/// determinant routine. Used for numeric, dual-number and symbolic scalars.
template <typename Scalar, typename DetFn>
std::vector<Scalar> generator_values_with(const Mat<Scalar>& a, const Mat<Scalar>& adj, DetFn&& det_fn) {
    const int n = static_cast<int>(a.rows());
    std::vector<Scalar> values;
    values.reserve(index_count(n));
    for (const GenIndex idx : all_indices(n)) values.push_back(det_fn(generator_block(a, adj, idx)));
    return values;
}

/// Numeric fast path: adjugate once, then one Bareiss determinant per generator.
Fingerprint invariant_fingerprint(const RatMatrix& a);

/// Fingerprint by evaluating the expanded symbolic generators (slow reference).
Fingerprint symbolic_fingerprint(const GenSet& gens, const RatMatrix& a);

/// Point assigning x[a][b] = m(a, b).
Assignment entry_assignment(const RatMatrix& m);

/// g^{-1} a g.
RatMatrix conjugate(const RatMatrix& g, const RatMatrix& a);
PolyMatrix conjugate(const PolyMatrix& g, const PolyMatrix& a);

/// E + t * e_{a,b} with t a polynomial (usually a parameter variable), 1-based.
PolyMatrix elementary_unipotent(int n, int a, int b, const Poly& t);

/// rho_g f: substitutes x[a][b] by entry (a, b) of g^{-1} X g and expands.
/// Throws Singular if g has no inverse over the polynomial ring.
Poly rho(const PolyMatrix& g, const Poly& f, int n);

struct InvarianceWitness {
    int trial = 0;
    RatMatrix u;
    RatMatrix a;
    Rational before;  // f(A)
    Rational after;   // f(u^{-1} A u)
};

struct InvarianceVerdict {
    bool pass = true;
    std::uint64_t seed = 0;
    int trials = 0;
    std::optional<InvarianceWitness> witness;
};

/// Randomized invariance check of an arbitrary function of a matrix. Trial t
/// draws u and A from derive_seed(seed, t); the first mismatch is reported.
template <typename F>
InvarianceVerdict check_invariance_fn(F&& f, int n, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    InvarianceVerdict verdict;
    verdict.seed = seed;
    for (int t = 0; t < trials; ++t) {
        Sampler sampler(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const RatMatrix u = sampler.unipotent(n);
        const RatMatrix a = sampler.omega_matrix(n);
        Rational before = f(a);
        Rational after = f(conjugate(u, a));
        verdict.trials = t + 1;
        if (before != after) {
            verdict.pass = false;
            verdict.witness = InvarianceWitness{t, u, a, std::move(before), std::move(after)};
            break;
        }
    }
    return verdict;
}

/// Randomized invariance check of a polynomial in the x-variables of size n.
InvarianceVerdict check_invariance(const Poly& f, int n, int trials, std::uint64_t seed);

/// Default number of random trials per generator.
inline constexpr int kDefaultTrials = 20;

}  // namespace uinv
