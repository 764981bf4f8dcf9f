#pragma once

// Orbit-level operations on the open set Omega (all lower-left corner minors
// nonzero): membership, canonical slice points, orbit equivalence, and the
// rank checks behind independence of the generators.

#include "uinv/slice.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace uinv {

/// Order k of the first vanishing lower-left corner minor, or nullopt in Omega.
std::optional<int> first_vanishing_corner(const RatMatrix& a);

bool in_omega(const RatMatrix& a);

/// Zeros strictly above the anti-diagonal and a nonzero anti-diagonal.
bool in_L(const RatMatrix& a);

/// The unique slice point in the U-orbit of `a`, recovered from the invariants.
/// Throws NotInOmega, or DegenerateInput when `a` lies in Omega but off the
/// generic part where some phi vanishes and the invariants stop separating
/// orbits (e.g. n = 3 slice points with s[2][1] = 0 lose s[3][1]).
SlicePoint canonicalize(const RatMatrix& a);

/// True iff the invariants (and so the canonical points) solve cleanly
/// for `a`. Throws NotInOmega.
bool is_generic(const RatMatrix& a);

/// Some u in U with u^{-1} a u = b, found by solving the linear system
/// a u = u b; nullopt if none exists. Works for any pair of square matrices.
std::optional<RatMatrix> conjugating_unipotent(const RatMatrix& a, const RatMatrix& b);

/// Same U-orbit. Different fingerprints mean different orbits; equal
/// fingerprints decide it on the generic part, and conjugating_unipotent
/// settles the rest. Throws NotInOmega if either matrix is outside Omega.
bool orbit_equivalent(const RatMatrix& a, const RatMatrix& b);

/// Jacobian [dJ[k][i] / dx[a][b]] at `a`, rows in (k, i) order, columns
/// row-major over (a, b). Exact, by forward-mode dual numbers.
RatMatrix generator_jacobian(const RatMatrix& a);

/// Slice Jacobian [d pi(J[k][i]) / d s[p][q]] at a slice matrix, with rows and
/// columns both in ascending slice order.
RatMatrix slice_jacobian(const RatMatrix& b);

enum class VerdictStatus { Pass, Fail, Inconclusive };

std::string to_string(VerdictStatus status);

struct IndependenceVerdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    int n = 0;
    int rank = 0;
    int expected = 0;
    int attempts = 0;
    std::uint64_t seed = 0;
};

/// Retries at fresh points when the rank drops at a special point.
inline constexpr int kIndependenceRetries = 3;

/// Exact rank of the generator Jacobian at a random point of Omega. Passes iff
/// the rank is n(n+1)/2; a short rank is retried up to kIndependenceRetries
/// times at fresh points, then reported inconclusive.
IndependenceVerdict independence_check(int n, std::uint64_t seed);

enum class CheckMode { Symbolic, Numeric };

struct TriangularityVerdict {
    VerdictStatus status = VerdictStatus::Fail;
    CheckMode mode = CheckMode::Numeric;
    int n = 0;
    std::uint64_t seed = 0;
    /// Diagonal entries phi[k][i] at the sample point, in ascending slice order.
    std::vector<Rational> diagonal;
    std::string failure;
    int attempts = 0;
};

/// Checks that the slice Jacobian is lower-triangular with nonzero diagonal.
/// Symbolic mode proves the zero pattern on polynomials and matches the
/// diagonal against phi; numeric mode checks the pattern at a random slice point.
/// A nonzero entry above the diagonal fails at once. A diagonal entry that
/// vanishes at the sample point only says the point is special, so it is
/// retried like independence_check and reported inconclusive if it persists.
TriangularityVerdict slice_triangularity_check(int n, std::uint64_t seed, CheckMode mode);

}  // namespace uinv
