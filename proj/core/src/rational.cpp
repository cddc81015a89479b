#include "cxorder/rational.hpp"

#include <cctype>
#include <ostream>

#include "cxorder/error.hpp"

namespace cxorder {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::MassMismatch: return "MassMismatch";
    case ErrorKind::NotLattice: return "NotLattice";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotMajorized: return "NotMajorized";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::NotSStep: return "NotSStep";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotNonneg: return "NotNonneg";
    case ErrorKind::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorKind::NonConvexTestFn: return "NonConvexTestFn";
    case ErrorKind::ModeArity: return "ModeArity";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::Parse: return "ParseError";
    }
    return "Error";
}

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::BadParameter, "zero denominator");
    value_ = mpq_class(static_cast<long>(num), 1) / mpq_class(static_cast<long>(den), 1);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

// Reads an optionally signed run of decimal digits starting at `pos`.
mpz_class read_integer(std::string_view text, std::size_t& pos, std::size_t base) {
    const std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError(base + start, "expected an integer");
    mpz_class v(std::string(text.substr(digits, pos - digits)), 10);
    return negative ? mpz_class(-v) : v;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    mpz_class num = read_integer(text, pos, 0);
    mpz_class den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t den_pos = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
            throw ParseError(pos, "denominator must be unsigned");
        den = read_integer(text, pos, 0);
        if (den == 0) throw ParseError(den_pos, "zero denominator");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError(pos, "unexpected character '" + std::string(1, text[pos]) + "' in fraction");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::BadParameter, "division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(unsigned exponent) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    return Rational(mpq_class(n, d));
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const { return value_.get_str(10); }

std::string Rational::decimal(int digits) const {
    if (digits <= 0) {
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
        return q.get_str();
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = ::abs(value_.get_num()) * scale;
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), value_.get_den_mpz_t());
    std::string s = q.get_str();
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    if (sign() < 0) s.insert(0, "-");
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational();
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(mpq_class(c));
}

} // namespace cxorder
