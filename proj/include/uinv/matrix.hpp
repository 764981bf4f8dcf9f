#pragma once

// Dense matrices over the exact scalar types. Eigen supplies storage, blocks
// and products; everything that needs division or exactness lives in
// determinant.hpp.

#include "uinv/poly.hpp"
#include "uinv/rational.hpp"

#include <Eigen/Core>

namespace uinv {

/// Forward-mode dual number a + b*eps with eps^2 = 0, over any commutative ring.
template <typename T>
struct Dual {
    T re{};
    T eps{};

    Dual() = default;
    Dual(long v) : re(v), eps(0) {}  // NOLINT(google-explicit-constructor)
    Dual(T r, T e) : re(std::move(r)), eps(std::move(e)) {}

    Dual operator-() const { return {-re, -eps}; }
    Dual& operator+=(const Dual& o) { re += o.re; eps += o.eps; return *this; }
    Dual& operator-=(const Dual& o) { re -= o.re; eps -= o.eps; return *this; }
    Dual& operator*=(const Dual& o) {
        eps = re * o.eps + eps * o.re;
        re *= o.re;
        return *this;
    }
    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
    friend bool operator==(const Dual& a, const Dual& b) { return a.re == b.re && a.eps == b.eps; }
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Poly& p) { return p.is_zero(); }
template <typename T>
bool is_zero(const Dual<T>& d) { return is_zero(d.re) && is_zero(d.eps); }

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatMatrix = Mat<Rational>;
using PolyMatrix = Mat<Poly>;

/// n x n identity over any of the exact scalars.
template <typename Scalar>
Mat<Scalar> identity(Eigen::Index n) {
    Mat<Scalar> m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = Scalar(r == c ? 1 : 0);
    }
    return m;
}

/// Lifts a numeric matrix to constant polynomials.
PolyMatrix to_poly(const RatMatrix& m);

/// Constant entries of a polynomial matrix; throws std::invalid_argument if any
/// entry is not constant.
RatMatrix to_rational(const PolyMatrix& m);

bool is_constant(const PolyMatrix& m);

}  // namespace uinv

namespace Eigen {

template <>
struct NumTraits<uinv::Rational> : GenericNumTraits<uinv::Rational> {
    using Real = uinv::Rational;
    using NonInteger = uinv::Rational;
    using Nested = uinv::Rational;
    using Literal = uinv::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 100,
        MulCost = 100,
    };
    static constexpr int digits10() { return 0; }
};

template <>
struct NumTraits<uinv::Poly> : GenericNumTraits<uinv::Poly> {
    using Real = uinv::Poly;
    using NonInteger = uinv::Poly;
    using Nested = uinv::Poly;
    using Literal = uinv::Poly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 1000,
        MulCost = 10000,
    };
    // Exact scalars: stream printing needs a precision but none applies.
    static constexpr int digits10() { return 0; }
};

template <typename T>
struct NumTraits<uinv::Dual<T>> : GenericNumTraits<uinv::Dual<T>> {
    using Real = uinv::Dual<T>;
    using NonInteger = uinv::Dual<T>;
    using Nested = uinv::Dual<T>;
    using Literal = uinv::Dual<T>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 200,
        MulCost = 300,
    };
    static constexpr int digits10() { return 0; }
};

}  // namespace Eigen
