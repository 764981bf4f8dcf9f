#pragma once

#include "uinv/errors.hpp"
#include "uinv/matrix.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uinv {

namespace detail {

// Laplace expansion along successive rows. A minor is identified by the set of
// columns still available; its rows are the last popcount(mask) rows. Results
// are memoized per call, and zero entries are skipped, so structured matrices
// only touch the minors they need.
template <typename Scalar>
class CofactorExpansion {
public:
    explicit CofactorExpansion(const Mat<Scalar>& m)
        : m_(m), n_(static_cast<int>(m.rows())), memo_(std::size_t{1} << n_) {}

    Scalar run() {
        if (n_ == 0) return Scalar(1);
        return minor(static_cast<std::uint32_t>((std::uint64_t{1} << n_) - 1));
    }

private:
    const Scalar& minor(std::uint32_t mask) {
        auto& slot = memo_[mask];
        if (slot) return *slot;
        const int size = std::popcount(mask);
        const int row = n_ - size;
        Scalar acc(0);
        if (size == 1) {
            acc = m_(row, std::countr_zero(mask));
        } else {
            int position = 0;
            for (int c = 0; c < n_; ++c) {
                if (!(mask & (1U << c))) continue;
                const Scalar& entry = m_(row, c);
                if (!is_zero(entry)) {
                    const Scalar& sub = minor(mask & ~(1U << c));
                    if (!is_zero(sub)) {
                        if (position % 2 == 0) {
                            acc += entry * sub;
                        } else {
                            acc -= entry * sub;
                        }
                    }
                }
                ++position;
            }
        }
        slot = std::move(acc);
        return *slot;
    }

    const Mat<Scalar>& m_;
    int n_;
    std::vector<std::optional<Scalar>> memo_;
};

}  // namespace detail

/// Largest order accepted by the cofactor expansion (memo table is 2^n).
inline constexpr int kMaxCofactorOrder = 24;

/// Division-free determinant by memoized cofactor expansion. Works over any
/// commutative ring scalar.
template <typename Scalar>
Scalar det_cofactor(const Mat<Scalar>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() > kMaxCofactorOrder) throw std::invalid_argument("matrix too large for cofactor expansion");
    return detail::CofactorExpansion<Scalar>(m).run();
}

/// Fraction-free (Bareiss) determinant: rows are scaled to integers, eliminated
/// with exact integer division, then the scaling is undone.
Rational det_bareiss(const RatMatrix& m);

/// Determinant. Numeric matrices take the Bareiss path.
inline Rational det(const RatMatrix& m) { return det_bareiss(m); }

/// Determinant. Constant-entry matrices take the Bareiss path; others use
/// memoized cofactor expansion.
Poly det(const PolyMatrix& m);

/// Matrix with row `row` and column `col` removed (0-based).
template <typename Scalar>
Mat<Scalar> drop_row_col(const Mat<Scalar>& m, Eigen::Index row, Eigen::Index col) {
    const Eigen::Index n = m.rows();
    Mat<Scalar> out(n - 1, m.cols() - 1);
    for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == row) continue;
        for (Eigen::Index c = 0, cc = 0; c < m.cols(); ++c) {
            if (c == col) continue;
            out(rr, cc++) = m(r, c);
        }
        ++rr;
    }
    return out;
}

/// Adjugate computed cofactor by cofactor with the given determinant routine,
/// so it is defined on singular matrices.
template <typename Scalar, typename DetFn>
Mat<Scalar> adjugate_with(const Mat<Scalar>& m, DetFn&& det_fn) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of a non-square matrix");
    const Eigen::Index n = m.rows();
    Mat<Scalar> adj(n, n);
    if (n == 1) {
        adj(0, 0) = Scalar(1);
        return adj;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            Scalar cof = det_fn(drop_row_col(m, c, r));
            adj(r, c) = ((r + c) % 2 == 0) ? std::move(cof) : Scalar(-cof);
        }
    }
    return adj;
}

RatMatrix adjugate(const RatMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);

/// Rows n-k+1..n and columns 1..k (1-based) of a square matrix.
template <typename Scalar>
Mat<Scalar> corner_block(const Mat<Scalar>& m, int k) {
    const int n = static_cast<int>(m.rows());
    if (k < 1 || k > n) {
        throw BadOrder("corner minor order " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    return m.bottomLeftCorner(k, k);
}

/// Determinant of the lower-left k x k block; throws BadOrder unless 1 <= k <= n.
inline Rational corner_minor(const RatMatrix& m, int k) { return det(corner_block(m, k)); }
inline Poly corner_minor(const PolyMatrix& m, int k) { return det(corner_block(m, k)); }

/// Coefficient-wise product; avoids Eigen's blocked kernels for heavy scalars.
template <typename Scalar>
Mat<Scalar> mat_mul(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    Mat<Scalar> out(a.rows(), b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            Scalar acc(0);
            for (Eigen::Index j = 0; j < a.cols(); ++j) {
                if (is_zero(a(r, j)) || is_zero(b(j, c))) continue;
                acc += a(r, j) * b(j, c);
            }
            out(r, c) = std::move(acc);
        }
    }
    return out;
}

/// Exact inverse by Gauss-Jordan elimination; throws Singular.
RatMatrix mat_inverse(const RatMatrix& m);

/// Inverse over the polynomial ring: requires a nonzero constant determinant
/// (e.g. a unipotent matrix with symbolic entries). Throws Singular otherwise.
PolyMatrix mat_inverse(const PolyMatrix& m);

/// Exact rank by fraction-free elimination.
int rank(const RatMatrix& m);

/// One solution of m * v = rhs (free unknowns set to 0), or nullopt if the
/// system is inconsistent. Gauss-Jordan over the rationals.
std::optional<std::vector<Rational>> solve_linear(const RatMatrix& m, const std::vector<Rational>& rhs);

}  // namespace uinv
