#pragma once

#include "uinv/rational.hpp"
#include "uinv/var.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace uinv {

struct Power {
    VarId var;
    std::uint32_t exp;

    friend bool operator==(const Power&, const Power&) = default;
};

/// Product of variable powers, kept sorted by variable with positive exponents.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(VarId var, std::uint32_t exp = 1);
    /// Builds from unsorted powers; merges repeated variables and drops zero exponents.
    static Monomial from_powers(std::vector<Power> powers);

    const std::vector<Power>& powers() const { return powers_; }
    std::uint32_t degree() const { return degree_; }
    bool is_one() const { return powers_.empty(); }
    std::uint32_t exponent(VarId var) const;

    /// Same monomial with `var` removed entirely.
    Monomial without(VarId var) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.powers_ == b.powers_;
    }

    std::size_t hash() const;

private:
    std::vector<Power> powers_;
    std::uint32_t degree_ = 0;
};

/// Graded-lex comparison: total degree first, then lexicographic with lower
/// VarId codes more significant. Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial mono;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

using Assignment = std::unordered_map<VarId, Rational>;
using Substitution = std::unordered_map<VarId, class Poly>;

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// descending graded-lex order with no zero coefficients, so structural
/// equality is polynomial equality.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& constant);
    explicit Poly(long constant) : Poly(Rational(constant)) {}

    static Poly var(VarId v);
    static Poly monomial(Monomial mono, Rational coeff);
    /// Normalizes arbitrary terms: merges duplicates, drops zeros, sorts.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    /// Constant term value; only meaningful when is_constant().
    Rational constant_value() const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Variables occurring in the polynomial, ascending.
    std::vector<VarId> variables() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
    friend Poly operator*(Poly p, const Rational& c) { return p *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    friend class PolyBuilder;
    std::vector<Term> terms_;
};

/// Accumulates terms and produces a normalized Poly.
class PolyBuilder {
public:
    void add(const Monomial& mono, const Rational& coeff);
    void add(const Poly& p);
    void add_product(const Poly& a, const Poly& b);
    Poly build();

private:
    std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

Poly pow(const Poly& base, unsigned exp);

/// Exact value of p at the point. Throws MissingAssignment if a variable of p
/// has no value.
Rational eval(const Poly& p, const Assignment& point);

Poly partial(const Poly& p, VarId v);

/// Highest power of v in p; 0 if v is absent; -1 for the zero polynomial.
int degree_in(const Poly& p, VarId v);

/// Coefficient of v^d in p viewed as a polynomial in v.
Poly coefficient_of(const Poly& p, VarId v, std::uint32_t d);

/// Replaces each mapped variable by its image and expands. Unmapped variables are kept.
Poly substitute(const Poly& p, const Substitution& images);

/// Canonical text form, e.g. "-3/2*x[1][1]^2 + x[2][1]*s[1][0] - 1".
std::string to_text(const Poly& p);

/// Parses the text form. Variables x[a][b] and s[k][i] attach to board size n.
Poly parse_poly(std::string_view text, int n);

}  // namespace uinv
