#include "uinv/poly.hpp"

#include "uinv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace uinv {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(VarId var, std::uint32_t exp) {
    Monomial m;
    if (exp > 0) {
        m.powers_.push_back({var, exp});
        m.degree_ = exp;
    }
    return m;
}

Monomial Monomial::from_powers(std::vector<Power> powers) {
    std::sort(powers.begin(), powers.end(), [](const Power& a, const Power& b) { return a.var < b.var; });
    Monomial m;
    for (const auto& p : powers) {
        if (p.exp == 0) continue;
        if (!m.powers_.empty() && m.powers_.back().var == p.var) {
            m.powers_.back().exp += p.exp;
        } else {
            m.powers_.push_back(p);
        }
        m.degree_ += p.exp;
    }
    return m;
}

std::uint32_t Monomial::exponent(VarId var) const {
    const auto it = std::lower_bound(powers_.begin(), powers_.end(), var,
                                     [](const Power& p, VarId v) { return p.var < v; });
    return (it != powers_.end() && it->var == var) ? it->exp : 0;
}

Monomial Monomial::without(VarId var) const {
    Monomial m;
    m.powers_.reserve(powers_.size());
    for (const auto& p : powers_) {
        if (p.var == var) continue;
        m.powers_.push_back(p);
        m.degree_ += p.exp;
    }
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.powers_.reserve(a.powers_.size() + b.powers_.size());
    auto ia = a.powers_.begin();
    auto ib = b.powers_.begin();
    while (ia != a.powers_.end() && ib != b.powers_.end()) {
        if (ia->var < ib->var) {
            m.powers_.push_back(*ia++);
        } else if (ib->var < ia->var) {
            m.powers_.push_back(*ib++);
        } else {
            m.powers_.push_back({ia->var, ia->exp + ib->exp});
            ++ia;
            ++ib;
        }
    }
    m.powers_.insert(m.powers_.end(), ia, a.powers_.end());
    m.powers_.insert(m.powers_.end(), ib, b.powers_.end());
    m.degree_ = a.degree_ + b.degree_;
    return m;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0xCBF29CE484222325ULL;
    for (const auto& p : powers_) {
        h ^= (static_cast<std::size_t>(p.var.code()) << 8) ^ p.exp;
        h *= 0x100000001B3ULL;
    }
    return h;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    const std::size_t len = std::min(pa.size(), pb.size());
    for (std::size_t j = 0; j < len; ++j) {
        if (pa[j].var != pb[j].var) return pa[j].var < pb[j].var ? 1 : -1;
        if (pa[j].exp != pb[j].exp) return pa[j].exp > pb[j].exp ? 1 : -1;
    }
    if (pa.size() != pb.size()) return pa.size() > pb.size() ? 1 : -1;
    return 0;
}

namespace {

bool term_before(const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; }

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, Combine combine_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        const int c = grlex_compare(ia->mono, ib->mono);
        if (c > 0) {
            out.push_back(*ia++);
        } else if (c < 0) {
            out.push_back({ib->mono, combine_b(ib->coeff)});
            ++ib;
        } else {
            Rational sum = ia->coeff + combine_b(ib->coeff);
            if (!sum.is_zero()) out.push_back({ia->mono, std::move(sum)});
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, a.end());
    for (; ib != b.end(); ++ib) out.push_back({ib->mono, combine_b(ib->coeff)});
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) terms_.push_back({Monomial(), constant});
}

Poly Poly::var(VarId v) { return monomial(Monomial::of(v), Rational(1)); }

Poly Poly::monomial(Monomial mono, Rational coeff) {
    Poly p;
    if (!coeff.is_zero()) p.terms_.push_back({std::move(mono), std::move(coeff)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    PolyBuilder b;
    for (const auto& t : terms) b.add(t.mono, t.coeff);
    return b.build();
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    const auto& last = terms_.back();
    return last.mono.is_one() ? last.coeff : Rational(0);
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.front().mono.degree());
}

std::vector<VarId> Poly::variables() const {
    std::vector<VarId> vars;
    for (const auto& t : terms_) {
        for (const auto& p : t.mono.powers()) vars.push_back(p.var);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge_terms(terms_, o.terms_, [](const Rational& c) { return c; });
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge_terms(terms_, o.terms_, [](const Rational& c) { return -c; });
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    return r += b;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    return r -= b;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.is_constant()) return b * a.constant_value();
    if (b.is_constant()) return a * b.constant_value();
    if (a.term_count() == 1 && b.term_count() == 1) {
        return Poly::monomial(a.terms()[0].mono * b.terms()[0].mono, a.terms()[0].coeff * b.terms()[0].coeff);
    }
    PolyBuilder builder;
    builder.add_product(a, b);
    return builder.build();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_text(p); }

// ---------------------------------------------------------------------------
// PolyBuilder

void PolyBuilder::add(const Monomial& mono, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(mono, coeff);
    if (!inserted) it->second += coeff;
}

void PolyBuilder::add(const Poly& p) {
    for (const auto& t : p.terms()) add(t.mono, t.coeff);
}

void PolyBuilder::add_product(const Poly& a, const Poly& b) {
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) add(ta.mono * tb.mono, ta.coeff * tb.coeff);
    }
}

Poly PolyBuilder::build() {
    std::vector<Term> terms;
    terms.reserve(acc_.size());
    for (auto& [mono, coeff] : acc_) {
        if (!coeff.is_zero()) terms.push_back({mono, std::move(coeff)});
    }
    acc_.clear();
    std::sort(terms.begin(), terms.end(), term_before);
    Poly p;
    p.terms_ = std::move(terms);
    return p;
}

// ---------------------------------------------------------------------------
// Free operations

Poly pow(const Poly& base, unsigned exp) {
    Poly result(Rational(1));
    Poly sq = base;
    while (exp > 0) {
        if (exp & 1U) result *= sq;
        exp >>= 1U;
        if (exp > 0) sq *= sq;
    }
    return result;
}

Rational eval(const Poly& p, const Assignment& point) {
    Rational total(0);
    for (const auto& t : p.terms()) {
        Rational value = t.coeff;
        for (const auto& pw : t.mono.powers()) {
            const auto it = point.find(pw.var);
            if (it == point.end()) throw MissingAssignment("no value for " + pw.var.name());
            value *= pow(it->second, pw.exp);
        }
        total += value;
    }
    return total;
}

Poly partial(const Poly& p, VarId v) {
    PolyBuilder b;
    for (const auto& t : p.terms()) {
        const std::uint32_t e = t.mono.exponent(v);
        if (e == 0) continue;
        Monomial reduced = t.mono.without(v) * Monomial::of(v, e - 1);
        b.add(reduced, t.coeff * Rational(static_cast<long>(e)));
    }
    return b.build();
}

int degree_in(const Poly& p, VarId v) {
    if (p.is_zero()) return -1;
    std::uint32_t d = 0;
    for (const auto& t : p.terms()) d = std::max(d, t.mono.exponent(v));
    return static_cast<int>(d);
}

Poly coefficient_of(const Poly& p, VarId v, std::uint32_t d) {
    PolyBuilder b;
    for (const auto& t : p.terms()) {
        if (t.mono.exponent(v) == d) b.add(t.mono.without(v), t.coeff);
    }
    return b.build();
}

Poly substitute(const Poly& p, const Substitution& images) {
    // Powers of each image are reused across terms.
    std::unordered_map<VarId, std::map<std::uint32_t, Poly>> power_cache;
    auto image_power = [&](VarId v, const Poly& image, std::uint32_t e) -> const Poly& {
        auto& by_exp = power_cache[v];
        auto it = by_exp.find(e);
        if (it != by_exp.end()) return it->second;
        Poly value = e == 1 ? image : pow(image, e);
        return by_exp.emplace(e, std::move(value)).first->second;
    };

    PolyBuilder b;
    for (const auto& t : p.terms()) {
        std::vector<Power> kept;
        Poly factor(t.coeff);
        for (const auto& pw : t.mono.powers()) {
            const auto it = images.find(pw.var);
            if (it == images.end()) {
                kept.push_back(pw);
            } else {
                factor *= image_power(pw.var, it->second, pw.exp);
                if (factor.is_zero()) break;
            }
        }
        if (factor.is_zero()) continue;
        const Monomial rest = Monomial::from_powers(std::move(kept));
        for (const auto& ft : factor.terms()) b.add(ft.mono * rest, ft.coeff);
    }
    return b.build();
}

// ---------------------------------------------------------------------------
// Text form

std::string to_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coeff.sign() < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(t.coeff);
        bool need_star = false;
        if (!mag.is_one() || t.mono.is_one()) {
            out += mag.str();
            need_star = true;
        }
        for (const auto& pw : t.mono.powers()) {
            if (need_star) out += '*';
            out += pw.var.name();
            if (pw.exp > 1) out += '^' + std::to_string(pw.exp);
            need_star = true;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int n) : text_(text), n_(n) {}

    Poly parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        PolyBuilder b;
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [mono, coeff] = parse_term();
            b.add(mono, sign < 0 ? -coeff : coeff);
        }
        return b.build();
    }

private:
    std::pair<Monomial, Rational> parse_term() {
        Rational coeff(1);
        std::vector<Power> powers;
        while (true) {
            skip_ws();
            if (at_end()) fail("unexpected end of term");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_rational();
            } else {
                const VarId v = parse_var();
                std::uint32_t exp = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    exp = static_cast<std::uint32_t>(parse_digits());
                }
                powers.push_back({v, exp});
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return {Monomial::from_powers(std::move(powers)), coeff};
    }

    Rational parse_rational() {
        const std::size_t start = pos_;
        parse_digits();
        if (!at_end() && peek() == '/') {
            ++pos_;
            parse_digits();
        }
        return Rational::parse(text_.substr(start, pos_ - start));
    }

    unsigned long parse_digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    VarId parse_var() {
        const std::size_t start = pos_;
        if (peek() == 't') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        } else if (peek() == 'x' || peek() == 's') {
            ++pos_;
            for (int bracket = 0; bracket < 2; ++bracket) {
                if (at_end() || peek() != '[') fail("expected '['");
                while (!at_end() && peek() != ']') ++pos_;
                if (at_end()) fail("unterminated '['");
                ++pos_;
            }
        } else {
            fail("unexpected character");
        }
        const auto name = text_.substr(start, pos_ - start);
        const auto v = VarId::parse(name, n_);
        if (!v) fail("invalid variable '" + std::string(name) + "'");
        return *v;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in polynomial");
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, int n) { return PolyParser(text, n).parse(); }

}  // namespace uinv
