#include "uinv/rational.hpp"

#include "uinv/errors.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace uinv {

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    if (pos == s.size()) return false;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (!is_integer_literal(s)) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::string_view body = trim(text);
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(body, text));
    }
    const mpz_class num = parse_integer(body.substr(0, slash), text);
    const mpz_class den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::size_t Rational::hash() const {
    // Low limbs of numerator and denominator are enough to spread canonical values.
    const std::size_t num = mpz_getlimbn(q_.get_num_mpz_t(), 0);
    const std::size_t den = mpz_getlimbn(q_.get_den_mpz_t(), 0);
    const std::size_t s = static_cast<std::size_t>(sign() + 1);
    return (num * 0x9E3779B97F4A7C15ULL) ^ (den + 0x632BE59BD9B4E019ULL + (s << 7));
}

Rational pow(const Rational& base, unsigned exp) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), exp);
    return Rational(mpq_class(num, den));
}

}  // namespace uinv
