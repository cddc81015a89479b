#include "cxorder/parse.hpp"

#include <cctype>
#include <map>

#include "cxorder/error.hpp"

namespace cxorder {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ == s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    std::size_t pos() const { return pos_; }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a keyword");
        return std::string(s_.substr(start, pos_ - start));
    }

    /// Signed fraction "p" or "p/q"; stops before anything else.
    Rational fraction(bool allow_sign = true) {
        skip_ws();
        const std::size_t start = pos_;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        digits();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            digits();
        }
        try {
            return Rational::parse(s_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(start + e.position(), "malformed fraction");
        }
    }

    unsigned integer() {
        skip_ws();
        const std::size_t start = pos_;
        digits();
        unsigned long v = std::stoul(std::string(s_.substr(start, pos_ - start)));
        if (v > 100000) throw ParseError(start, "integer too large");
        return static_cast<unsigned>(v);
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

private:
    void digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

ConvexTestFn parse_fn(Cursor& c) {
    const std::size_t at = c.pos();
    const std::string w = c.word();
    if (w == "affine") {
        Rational a = c.fraction();
        Rational b = c.fraction();
        return ConvexTestFn::affine(std::move(a), std::move(b));
    }
    if (w == "quad") return ConvexTestFn::quad(c.fraction());
    if (w == "hinge") {
        Rational knot = c.fraction();
        Rational coeff = c.fraction();
        return ConvexTestFn::hinge(std::move(knot), std::move(coeff));
    }
    if (w == "sum") {
        c.expect('(');
        ConvexTestFn total;
        if (c.accept(')')) return total;
        do {
            total += parse_fn(c);
        } while (c.accept(','));
        c.expect(')');
        return total;
    }
    throw ParseError(at, "unknown test function '" + w + "'");
}

std::vector<Rational> fractions(Cursor& c, std::size_t count) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(c.fraction());
    return v;
}

MultiFn parse_g(Cursor& c, std::size_t arity) {
    const std::size_t at = c.pos();
    const std::string w = c.word();
    if (w == "mono") {
        Rational coeff = c.fraction();
        std::vector<unsigned> exps;
        for (std::size_t i = 0; i < arity; ++i) exps.push_back(c.integer());
        return MultiFn::mono(std::move(coeff), std::move(exps));
    }
    if (w == "absdiff") {
        c.skip_ws();
        const std::size_t ipos = c.pos();
        const unsigned i = c.integer();
        const unsigned j = c.integer();
        if (i == 0 || j == 0 || i > arity || j > arity) throw ParseError(ipos, "absdiff indices must lie in 1.." + std::to_string(arity));
        return MultiFn::abs_diff(arity, i - 1, j - 1, c.fraction());
    }
    if (w == "hinge") {
        Rational coeff = c.fraction();
        Rational knot = c.fraction();
        return MultiFn::hinge(std::move(coeff), std::move(knot), fractions(c, arity));
    }
    if (w == "pow") {
        Rational coeff = c.fraction();
        const unsigned power = c.integer();
        Rational offset = c.fraction();
        return MultiFn::pow_lin(std::move(coeff), power, std::move(offset), fractions(c, arity));
    }
    if (w == "phi") {
        c.expect('[');
        ConvexTestFn phi = parse_fn(c);
        c.expect(']');
        return MultiFn::composed(std::move(phi), fractions(c, arity));
    }
    if (w == "sum") {
        c.expect('(');
        MultiFn total(arity);
        if (c.accept(')')) return total;
        do {
            total += parse_g(c, arity);
        } while (c.accept(','));
        c.expect(')');
        return total;
    }
    throw ParseError(at, "unknown function atom '" + w + "'");
}

} // namespace

ConvexTestFn parse_test_fn(std::string_view text) {
    Cursor c(text);
    ConvexTestFn f = parse_fn(c);
    if (!c.at_end()) c.fail("trailing input");
    return f;
}

MultiFn parse_multi_fn(std::string_view text, std::size_t arity) {
    if (arity == 0) throw Error(ErrorKind::ArityMismatch, "function arity must be at least 1");
    Cursor c(text);
    MultiFn g = parse_g(c, arity);
    if (!c.at_end()) c.fail("trailing input");
    return g;
}

MVPolynomial parse_polynomial(std::string_view text, std::size_t arity) {
    struct Term {
        Rational coeff;
        std::map<std::size_t, unsigned> exps;
        std::size_t pos;
    };
    std::vector<Term> terms;
    std::size_t max_var = 0;
    Cursor c(text);
    bool first = true;
    while (first || !c.at_end()) {
        Rational sign(1);
        if (c.accept('-')) sign = Rational(-1);
        else if (!c.accept('+') && !first) c.fail("expected '+' or '-'");
        first = false;

        Term t{sign, {}, c.pos()};
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            t.coeff *= c.fraction(false);
            any = true;
            c.accept('*');
        }
        while (c.peek() == 'x') {
            c.expect('x');
            const std::size_t vpos = c.pos();
            const unsigned idx = c.integer();
            if (idx == 0) throw ParseError(vpos, "variables are numbered from x1");
            unsigned e = 1;
            if (c.accept('^')) e = c.integer();
            t.exps[idx - 1] += e;
            max_var = std::max<std::size_t>(max_var, idx);
            any = true;
            c.accept('*');
        }
        if (!any) c.fail("expected a coefficient or a variable");
        terms.push_back(std::move(t));
    }
    if (arity == 0) arity = std::max<std::size_t>(max_var, 1);
    MVPolynomial p(arity);
    for (const auto& t : terms) {
        Monomial m(arity, 0);
        for (const auto& [i, e] : t.exps) {
            if (i >= arity) throw ParseError(t.pos, "variable x" + std::to_string(i + 1) + " exceeds arity " + std::to_string(arity));
            m[i] = e;
        }
        p.add_term(m, t.coeff);
    }
    return p;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    Cursor c(text);
    std::vector<Rational> out;
    do {
        out.push_back(c.fraction());
    } while (c.accept(','));
    if (!c.at_end()) c.fail("expected ','");
    return out;
}

std::vector<unsigned> parse_unsigned_list(std::string_view text) {
    Cursor c(text);
    std::vector<unsigned> out;
    do {
        out.push_back(c.integer());
    } while (c.accept(','));
    if (!c.at_end()) c.fail("expected ','");
    return out;
}

} // namespace cxorder
