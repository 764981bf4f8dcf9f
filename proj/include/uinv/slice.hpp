#pragma once

// The anti-triangular slice: matrices with zeros strictly above the
// anti-diagonal. Its coordinates s[k][i] sit at (i-k+n+1, k); restricting the
// generators to it gives a triangular system in those coordinates.

#include "uinv/generators.hpp"

#include <compare>
#include <memory>
#include <vector>

namespace uinv {

/// Slice matrix: s[k][i] at (i-k+n+1, k), zero strictly above the anti-diagonal.
PolyMatrix build_S(int n);

/// Slice ordering: s[1][0] < ... < s[n][0] < s[2][1] < s[3][2] < s[3][1] < ... < s[n][1].
std::strong_ordering coord_cmp(GenIndex a, GenIndex b, int n);

/// All coordinates in ascending slice order.
std::vector<GenIndex> slice_order(int n);

/// Restriction to the slice: x[a][b] becomes the matching s[k][i], or 0
/// strictly above the anti-diagonal.
Poly restrict_to_slice(const Poly& f, int n);

/// Restriction of J[k][i] computed directly on the slice, as the generator
/// minor of build_S(n) and its adjugate. Agrees with
/// restrict_to_slice(build_J(k, i, n), n) because restriction is a ring map.
Poly restricted_generator(GenIndex idx, int n);

/// pi(J[k][i]) = phi * s[k][i] + psi with phi, psi in strictly smaller coordinates.
struct TriDecomp {
    GenIndex index;
    Poly phi;
    Poly psi;
};

/// Splits an already restricted generator by degree in s[k][i]. Throws
/// StructureViolation if the degree is not exactly 1, phi vanishes, or phi/psi
/// mention a coordinate not smaller than s[k][i].
TriDecomp split_linear(const Poly& restricted, GenIndex idx, int n);

/// split_linear(restricted_generator(idx, n), idx, n). Throws BadIndex.
TriDecomp tri_decompose(int k, int i, int n);

/// Block-determinant cross-check: with C_i the lower-left i x i corner of
/// adj(S) and S_{k,i} the last k-i rows of S in columns i+1..k,
/// pi(J[k][i]) = (-1)^{i(k-i)} det(C_i) det(S_{k,i}).
struct BlockCheck {
    Poly det_c;
    Poly det_s;
    int sign = 1;
    bool c_is_monomial = false;
    bool matches = false;
};

BlockCheck block_formula_check(GenIndex idx, int n);

/// Point of the slice, coordinates stored in (k, i) order.
struct SlicePoint {
    int n = 0;
    std::vector<Rational> coords;

    const Rational& at(GenIndex idx) const { return coords.at(lex_position(idx)); }

    /// The slice matrix with these coordinates.
    RatMatrix matrix() const;

    /// Reads the coordinates off a slice-shaped matrix. Entries strictly above
    /// the anti-diagonal are ignored.
    static SlicePoint from_matrix(const RatMatrix& b);

    friend bool operator==(const SlicePoint&, const SlicePoint&) = default;
};

/// Point assigning s[k][i] its coordinate.
Assignment slice_assignment(const SlicePoint& p);

/// Triangular systems are built symbolically up to this size; beyond it
/// solve_slice probes phi and psi numerically.
inline constexpr int kSymbolicSliceLimit = 12;

/// Cached symbolic triangular system for one board size.
class SliceSystem {
public:
    /// Shared instance for n; built once, safe to request concurrently.
    static std::shared_ptr<const SliceSystem> get(int n);

    explicit SliceSystem(int n);

    int n() const { return n_; }
    const PolyMatrix& s() const { return s_; }
    const PolyMatrix& s_adjugate() const { return s_adj_; }
    /// Decompositions in ascending slice order.
    const std::vector<TriDecomp>& decompositions() const { return decomps_; }
    const TriDecomp& at(GenIndex idx) const { return decomps_.at(slice_rank(idx, n_)); }

private:
    int n_;
    PolyMatrix s_;
    PolyMatrix s_adj_;
    std::vector<TriDecomp> decomps_;
};

/// Recovers the slice point whose fingerprint is `values`, solving the
/// triangular system in ascending slice order. Throws DegenerateInput if a
/// phi vanishes at the solved prefix or an anti-diagonal coordinate solves to 0.
SlicePoint solve_slice(const Fingerprint& values);

/// Same system solved with phi and psi obtained by numeric evaluation of the
/// generator at two points (s[k][i] = 0 and 1) instead of from symbolic
/// decompositions. Usable for any n.
SlicePoint solve_slice_numeric(const Fingerprint& values);

}  // namespace uinv
