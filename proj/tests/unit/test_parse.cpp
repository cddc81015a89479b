#include <gtest/gtest.h>

#include "cxorder/error.hpp"
#include "cxorder/parse.hpp"
#include "generators.hpp"

using namespace cxorder;

namespace {

Rational r(const char* s) { return Rational::parse(s); }

template <class F>
std::size_t parse_error_at(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no ParseError";
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST(ParseTestFn, Atoms) {
    EXPECT_EQ(parse_test_fn("affine 1 -2"), ConvexTestFn::affine(r("1"), r("-2")));
    EXPECT_EQ(parse_test_fn("quad 1/3"), ConvexTestFn::quad(r("1/3")));
    EXPECT_EQ(parse_test_fn("  hinge 1/2 3 "), ConvexTestFn::hinge(r("1/2"), r("3")));
    EXPECT_EQ(parse_test_fn("sum()"), ConvexTestFn());
    const auto f = parse_test_fn("sum(hinge 2 1, quad 1, affine 0 -1)");
    EXPECT_EQ(f(Rational(3)), Rational(1) + Rational(9) - Rational(3));
    EXPECT_EQ(parse_test_fn("sum(sum(hinge 1 1), hinge 1 1)")(Rational(2)), Rational(2));
}

TEST(ParseTestFn, NotCheckedForConvexity) {
    const auto f = parse_test_fn("hinge 0 -1");
    EXPECT_FALSE(f.certified_convex());
    EXPECT_THROW(f.require_convex(), Error);
}

TEST(ParseTestFn, Errors) {
    EXPECT_EQ(parse_error_at([] { parse_test_fn("cube 1"); }), 0u);
    EXPECT_EQ(parse_error_at([] { parse_test_fn("hinge 1"); }), 7u);
    EXPECT_EQ(parse_error_at([] { parse_test_fn("hinge 1 2 junk"); }), 10u);
    EXPECT_EQ(parse_error_at([] { parse_test_fn("quad 1/0"); }), 5u + 2u);
    EXPECT_EQ(parse_error_at([] { parse_test_fn("sum(quad 1"); }), 10u);
    EXPECT_EQ(parse_error_at([] { parse_test_fn(""); }), 0u);
    EXPECT_THROW(parse_test_fn("affine 0.5 1"), ParseError);
}

TEST(ParseTestFn, RoundTrip) {
    testsupport::Gen g(81);
    for (int i = 0; i < 200; ++i) {
        const auto f = g.convex_fn(4);
        EXPECT_EQ(parse_test_fn(f.str()), f) << f.str();
    }
}

TEST(ParsePolynomial, Terms) {
    const auto p = parse_polynomial("1/2 * x1^3 x2 + 1/2 * x1 x2^3");
    EXPECT_EQ(p.arity(), 2u);
    EXPECT_EQ(p.coefficient({3, 1}), r("1/2"));
    EXPECT_EQ(p.coefficient({1, 3}), r("1/2"));
    EXPECT_EQ(p.terms().size(), 2u);

    const auto q = parse_polynomial("-x1 + 3 - 2/3*x2*x2", 3);
    EXPECT_EQ(q.arity(), 3u);
    EXPECT_EQ(q.coefficient({1, 0, 0}), r("-1"));
    EXPECT_EQ(q.coefficient({0, 0, 0}), r("3"));
    EXPECT_EQ(q.coefficient({0, 2, 0}), r("-2/3"));

    EXPECT_EQ(parse_polynomial("x1 - x1").is_zero(), true);
    EXPECT_EQ(parse_polynomial("7").arity(), 1u);
    EXPECT_EQ(parse_polynomial("x2^0", 2).coefficient({0, 0}), Rational(1));
}

TEST(ParsePolynomial, Errors) {
    EXPECT_EQ(parse_error_at([] { parse_polynomial("x1 x2", 1); }), 0u);
    EXPECT_EQ(parse_error_at([] { parse_polynomial("x1 + x0"); }), 6u);
    EXPECT_EQ(parse_error_at([] { parse_polynomial("x1 +"); }), 4u);
    EXPECT_EQ(parse_error_at([] { parse_polynomial("x1 x2 3"); }), 6u);
    EXPECT_EQ(parse_error_at([] { parse_polynomial("y1"); }), 0u);
    EXPECT_EQ(parse_error_at([] { parse_polynomial("x"); }), 1u);
    EXPECT_THROW(parse_polynomial(""), ParseError);
}

TEST(ParsePolynomial, RoundTrip) {
    testsupport::Gen g(82);
    for (int i = 0; i < 200; ++i) {
        const std::size_t m = static_cast<std::size_t>(g.integer(1, 4));
        MVPolynomial p(m);
        const int k = g.integer(0, 5);
        for (int t = 0; t < k; ++t) {
            Monomial e(m);
            for (auto& x : e) x = static_cast<unsigned>(g.integer(0, 3));
            p.add_term(e, g.small_rational(3, 5));
        }
        if (p.is_zero()) continue;
        EXPECT_EQ(parse_polynomial(p.str(), m), p) << p.str();
    }
}

TEST(ParseMultiFn, Atoms) {
    const std::vector<Rational> u{r("1/4"), r("3/4")};
    EXPECT_EQ(parse_multi_fn("mono 2 1 1", 2)(u), r("3/8"));
    EXPECT_EQ(parse_multi_fn("absdiff 2 1 1", 2)(u), r("1/2"));
    EXPECT_EQ(parse_multi_fn("hinge 1 1/2 1 1", 2)(u), r("1/2"));
    EXPECT_EQ(parse_multi_fn("pow 1 2 -1 1 1", 2)(u), Rational());
    EXPECT_EQ(parse_multi_fn("phi[hinge 0 1] 1/2 1/2", 2)(u), r("1/2"));
    EXPECT_EQ(parse_multi_fn("sum(absdiff 1 2 1, mono 1 0 0)", 2)(u), r("3/2"));
    EXPECT_EQ(parse_multi_fn("sum()", 3).arity(), 3u);
}

TEST(ParseMultiFn, Errors) {
    EXPECT_EQ(parse_error_at([] { parse_multi_fn("absdiff 1 3 1", 2); }), 8u);
    EXPECT_EQ(parse_error_at([] { parse_multi_fn("absdiff 0 1 1", 2); }), 8u);
    EXPECT_EQ(parse_error_at([] { parse_multi_fn("mono 1 1", 2); }), 8u);
    EXPECT_EQ(parse_error_at([] { parse_multi_fn("phi[quad 1 1 1", 2); }), 11u);
    EXPECT_EQ(parse_error_at([] { parse_multi_fn("blob", 2); }), 0u);
    EXPECT_EQ(parse_error_at([] { parse_multi_fn("mono 1 0 0 0", 2); }), 11u);
    try {
        parse_multi_fn("mono 1", 0);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
    }
}

TEST(ParseLists, Rationals) {
    EXPECT_EQ(parse_rational_list("1/2,3/4,1"), (std::vector<Rational>{r("1/2"), r("3/4"), r("1")}));
    EXPECT_EQ(parse_rational_list(" -1 , 2/4 "), (std::vector<Rational>{r("-1"), r("1/2")}));
    EXPECT_EQ(parse_error_at([] { parse_rational_list("1,,2"); }), 2u);
    EXPECT_EQ(parse_error_at([] { parse_rational_list("1;2"); }), 1u);
    EXPECT_EQ(parse_error_at([] { parse_rational_list(""); }), 0u);
}

TEST(ParseLists, Unsigned) {
    EXPECT_EQ(parse_unsigned_list("3,0,12"), (std::vector<unsigned>{3, 0, 12}));
    EXPECT_EQ(parse_error_at([] { parse_unsigned_list("1,-2"); }), 2u);
    EXPECT_EQ(parse_error_at([] { parse_unsigned_list("1,2 3"); }), 4u);
    EXPECT_EQ(parse_error_at([] { parse_unsigned_list("1000001"); }), 0u);
}
