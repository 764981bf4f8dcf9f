#include "uinv/determinant.hpp"

#include <stdexcept>
#include <utility>

namespace uinv {

PolyMatrix to_poly(const RatMatrix& m) {
    PolyMatrix out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = Poly(m(r, c));
    }
    return out;
}

bool is_constant(const PolyMatrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (!m(r, c).is_constant()) return false;
        }
    }
    return true;
}

RatMatrix to_rational(const PolyMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (!m(r, c).is_constant()) throw std::invalid_argument("matrix entry is not constant");
            out(r, c) = m(r, c).constant_value();
        }
    }
    return out;
}

namespace {

using IntMatrix = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;

// Scales each row by the lcm of its denominators. Returns the integer matrix
// and the product of the scale factors.
std::pair<IntMatrix, mpz_class> clear_denominators(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    mpz_class total = 1;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).mpq().get_den_mpz_t());
        }
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const mpq_class& q = m(r, c).mpq();
            out(r, c) = q.get_num() * (l / q.get_den());
        }
        total *= l;
    }
    return {std::move(out), std::move(total)};
}

}  // namespace

Rational det_bareiss(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return Rational(1);
    auto [a, scale] = clear_denominators(m);
    mpz_class prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return Rational(0);
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    mpq_class result(a(n - 1, n - 1) * sign, scale);
    result.canonicalize();
    return Rational(std::move(result));
}

Poly det(const PolyMatrix& m) {
    if (is_constant(m)) return Poly(det_bareiss(to_rational(m)));
    return det_cofactor(m);
}

RatMatrix adjugate(const RatMatrix& m) {
    return adjugate_with(m, [](const RatMatrix& minor) { return det_bareiss(minor); });
}

PolyMatrix adjugate(const PolyMatrix& m) {
    if (is_constant(m)) return to_poly(adjugate(to_rational(m)));
    return adjugate_with(m, [](const PolyMatrix& minor) { return det_cofactor(minor); });
}

RatMatrix mat_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const Eigen::Index n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = identity<Rational>(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = k;
        while (pivot < n && a(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw Singular("matrix is singular");
        if (pivot != k) {
            a.row(k).swap(a.row(pivot));
            inv.row(k).swap(inv.row(pivot));
        }
        const Rational scale = Rational(1) / a(k, k);
        for (Eigen::Index j = 0; j < n; ++j) {
            a(k, j) *= scale;
            inv(k, j) *= scale;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            const Rational f = a(i, k);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
                if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

PolyMatrix mat_inverse(const PolyMatrix& m) {
    if (is_constant(m)) return to_poly(mat_inverse(to_rational(m)));
    const Poly d = det(m);
    if (!d.is_constant() || d.is_zero()) {
        throw Singular("determinant is not a nonzero constant");
    }
    PolyMatrix inv = adjugate(m);
    const Rational scale = Rational(1) / d.constant_value();
    for (Eigen::Index r = 0; r < inv.rows(); ++r) {
        for (Eigen::Index c = 0; c < inv.cols(); ++c) inv(r, c) *= scale;
    }
    return inv;
}

int rank(const RatMatrix& m) {
    auto [a, scale] = clear_denominators(m);
    (void)scale;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    mpz_class prev = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = r;
        while (pivot < rows && a(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) a.row(r).swap(a.row(pivot));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                mpz_class v = a(i, j) * a(r, c) - a(i, c) * a(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<std::vector<Rational>> solve_linear(const RatMatrix& m, const std::vector<Rational>& rhs) {
    if (static_cast<Eigen::Index>(rhs.size()) != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    RatMatrix a(rows, cols + 1);
    a.leftCols(cols) = m;
    for (Eigen::Index r = 0; r < rows; ++r) a(r, cols) = rhs[r];
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = r;
        while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) a.row(r).swap(a.row(pivot));
        const Rational inv = Rational(1) / a(r, c);
        for (Eigen::Index j = c; j <= cols; ++j) a(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Rational f = a(i, c);
            for (Eigen::Index j = c; j <= cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    for (Eigen::Index i = r; i < rows; ++i) {
        if (!a(i, cols).is_zero()) return std::nullopt;
    }
    std::vector<Rational> v(static_cast<std::size_t>(cols), Rational(0));
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = a(static_cast<Eigen::Index>(p), cols);
    return v;
}

}  // namespace uinv
