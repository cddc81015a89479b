#include <gtest/gtest.h>

#include "cxorder/bernstein.hpp"
#include "cxorder/conv_poly.hpp"
#include "cxorder/error.hpp"
#include "cxorder/parse.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cxorder;
using testsupport::to_dist;

namespace {

Rational r(const char* s) { return Rational::parse(s); }

MVPolynomial poly(const char* text, std::size_t arity = 0) { return parse_polynomial(text, arity); }

const DiscreteMeasure d0 = dirac(Rational(0));
const DiscreteMeasure coin = make_measure({{Rational(0), Rational(1, 2)}, {Rational(1), Rational(1, 2)}});

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Parse;
}

std::map<std::vector<unsigned>, Rational> terms_of(const MVPolynomial& p) {
    return {p.terms().begin(), p.terms().end()};
}

} // namespace

TEST(MVPolynomial, Arithmetic) {
    const auto x = MVPolynomial::variable(2, 0), y = MVPolynomial::variable(2, 1);
    const auto sq = (x - y) * (x - y);
    EXPECT_EQ(sq, poly("x1^2 - 2 x1 x2 + x2^2", 2));
    EXPECT_EQ(sq.total_degree(), 2u);
    EXPECT_FALSE(sq.nonneg());
    EXPECT_TRUE((x * y).nonneg());
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ(sq.coefficient({1, 1}), Rational(-2));
    EXPECT_EQ(sq.coefficient({3, 0}), Rational());
    EXPECT_EQ(MVPolynomial::constant(2, r("3/2")) * r("2/3"), MVPolynomial::constant(2, Rational(1)));
    const std::vector<Rational> pt{Rational(3), Rational(1)};
    EXPECT_EQ(sq.evaluate(pt), Rational(4));
    EXPECT_EQ(kind_of([&] { x + MVPolynomial::variable(3, 0); }), ErrorKind::ArityMismatch);
    EXPECT_EQ(kind_of([&] { MVPolynomial p(2); p.add_term({1}, Rational(1)); }), ErrorKind::ArityMismatch);
}

TEST(MVPolynomial, StrRoundTrips) {
    const auto p = poly("1/2 * x1^3 x2 - 3 + x2^2", 2);
    EXPECT_EQ(parse_polynomial(p.str(), 2), p);
}

TEST(WPolynomial, Examples) {
    EXPECT_EQ(w_polynomial({1, 1}), poly("x1 x2"));
    EXPECT_EQ(w_polynomial({2, 0}), poly("1/2 x1^2 + 1/2 x2^2"));
    EXPECT_EQ(w_polynomial({2, 1, 0}),
              poly("1/6 x1^2 x2 + 1/6 x1^2 x3 + 1/6 x2^2 x1 + 1/6 x2^2 x3 + 1/6 x3^2 x1 + 1/6 x3^2 x2"));
}

TEST(WPolynomial, PermutationInvariantAndMatchesOracle) {
    testsupport::Gen g(61);
    for (int i = 0; i < 100; ++i) {
        const auto [p, q] = g.majorized_pair(g.integer(1, 4), 4);
        const auto w = w_polynomial(p);
        EXPECT_EQ(w, w_polynomial(p.sorted()));
        EXPECT_EQ(terms_of(w), testsupport::oracle_w_poly(p.entries()));
        EXPECT_TRUE(w.nonneg());
    }
}

TEST(PolyEval, Examples) {
    const std::vector<DiscreteMeasure> ms{d0, coin};
    EXPECT_EQ(poly_eval_measures(poly("1/2 x1^3 x2 + 1/2 x1 x2^3"), ms),
              make_measure({{Rational(0), r("5/16")}, {Rational(1), r("7/16")}, {Rational(2), r("3/16")},
                            {Rational(3), r("1/16")}}));
    EXPECT_EQ(poly_eval_measures(poly("1/8 x1^4 + 3/4 x1^2 x2^2 + 1/8 x2^4"), ms),
              make_measure({{Rational(0), r("41/128")}, {Rational(1), r("52/128")}, {Rational(2), r("30/128")},
                            {Rational(3), r("4/128")}, {Rational(4), r("1/128")}}));
    EXPECT_EQ(poly_eval_measures(poly("x1^2"), std::vector{dirac(Rational(1))}), dirac(Rational(2)));
    EXPECT_EQ(poly_eval_measures(poly("3"), std::vector{coin}), dirac(Rational(0), Rational(3)));
}

TEST(PolyEval, Errors) {
    EXPECT_EQ(kind_of([] { poly_eval_measures(poly("x1 - x2"), std::vector{d0, coin}); }), ErrorKind::NotNonneg);
    EXPECT_EQ(kind_of([] { poly_eval_measures(poly("x1 x2"), std::vector{d0}); }), ErrorKind::ArityMismatch);
}

TEST(PolyEval, HomomorphismAndOracle) {
    testsupport::Gen g(62);
    auto random_poly = [&](std::size_t arity) {
        MVPolynomial p(arity);
        const int terms = g.integer(1, 3);
        for (int t = 0; t < terms; ++t) {
            Monomial e(arity);
            for (auto& k : e) k = static_cast<unsigned>(g.integer(0, 2));
            p.add_term(e, g.positive_rational(5, 4));
        }
        return p;
    };
    for (int i = 0; i < 60; ++i) {
        const std::size_t arity = static_cast<std::size_t>(g.integer(1, 3));
        std::vector<DiscreteMeasure> ms;
        std::vector<testsupport::Dist> ds;
        for (std::size_t k = 0; k < arity; ++k) {
            ms.push_back(g.measure(3, g.positive_rational(3, 2)));
            ds.push_back(to_dist(ms.back()));
        }
        const auto P = random_poly(arity), Q = random_poly(arity);
        const auto pe = poly_eval_measures(P, ms), qe = poly_eval_measures(Q, ms);
        EXPECT_EQ(poly_eval_measures(P * Q, ms), convolve(pe, qe));
        EXPECT_EQ(poly_eval_measures(P + Q, ms), mix(std::vector{Rational(1), Rational(1)}, std::vector{pe, qe}));
        EXPECT_EQ(to_dist(pe), testsupport::oracle_poly_eval(terms_of(P), ds));
    }
}

TEST(MomentConsistency, Examples) {
    const auto P = poly("1/2 x1^3 x2 + 1/2 x1 x2^3"), Q = poly("1/8 x1^4 + 3/4 x1^2 x2^2 + 1/8 x2^4");
    const std::vector<Rational> ones{Rational(1), Rational(1)};
    testsupport::Gen g(63);
    for (int i = 0; i < 10; ++i) {
        const std::vector<Rational> b{g.small_rational(), g.small_rational()};
        EXPECT_TRUE(moment_consistency(P, Q, ones, b));
    }
    EXPECT_TRUE(moment_consistency(P, P, std::vector{r("2"), r("1/3")}, std::vector{r("5"), r("-1")}));
    EXPECT_FALSE(moment_consistency(poly("x1 x2"), poly("x1^2", 2), std::vector{Rational(1), Rational(2)},
                                    std::vector{Rational(1), Rational(0)}));
    EXPECT_EQ(kind_of([&] { moment_consistency(P, poly("x1 x2 x3"), ones, ones); }), ErrorKind::ArityMismatch);
}

TEST(MomentConsistency, FollowsFromConvexOrder) {
    const std::vector<DiscreteMeasure> ms{binomial_measure(2, r("1/4")), binomial_measure(2, r("3/4"))};
    const auto P = w_polynomial({2, 1}), Q = w_polynomial({3, 0});
    ASSERT_TRUE(leq_cx(poly_eval_measures(P, ms), poly_eval_measures(Q, ms)).holds);
    const std::vector<Rational> mass{ms[0].mass(), ms[1].mass()}, mean{ms[0].mean(), ms[1].mean()};
    EXPECT_TRUE(moment_consistency(P, Q, mass, mean));
}

TEST(SosStep, Examples) {
    const auto a = sos_step_decomposition({1, 1}, {2, 0});
    ASSERT_EQ(a.terms.size(), 1u);
    EXPECT_EQ(a.terms[0].u, 0u);
    EXPECT_EQ(a.terms[0].v, 1u);
    EXPECT_EQ(a.terms[0].r, MVPolynomial::constant(2, r("1/2")));

    const auto b = sos_step_decomposition({2, 1}, {3, 0});
    ASSERT_EQ(b.terms.size(), 1u);
    EXPECT_EQ(b.terms[0].r, poly("1/2 x1 + 1/2 x2"));
    EXPECT_EQ(b.expand(), w_polynomial({3, 0}) - w_polynomial({2, 1}));

    EXPECT_EQ(kind_of([] { sos_step_decomposition({2, 1}, {2, 1}); }), ErrorKind::NotSStep);
    EXPECT_EQ(kind_of([] { sos_step_decomposition({1, 1, 1, 1}, {4, 0, 0, 0}); }), ErrorKind::NotSStep);
}

TEST(SosStep, ExpandsForAllSmallSteps) {
    for (unsigned a = 0; a <= 4; ++a)
        for (unsigned b = 0; b <= a; ++b)
            for (unsigned c = 0; c <= b; ++c) {
                const ExponentTuple p{a, b, c};
                for (unsigned x = 0; x <= 5; ++x)
                    for (unsigned y = 0; y <= x; ++y)
                        for (unsigned z = 0; z <= y; ++z) {
                            const ExponentTuple q{x, y, z};
                            if (!is_s_step(p, q)) continue;
                            const auto d = sos_step_decomposition(p, q);
                            auto expected = testsupport::oracle_w_poly(q.entries());
                            for (const auto& [e, coef] : testsupport::oracle_w_poly(p.entries())) expected[e] -= coef;
                            std::erase_if(expected, [](const auto& kv) { return kv.second.is_zero(); });
                            EXPECT_EQ(terms_of(d.expand()), expected) << p.str() << " -> " << q.str();
                            for (const auto& t : d.terms) EXPECT_TRUE(t.r.nonneg());
                        }
            }
}

TEST(SosCxCheck, Examples) {
    const auto d = sos_step_decomposition({1, 1}, {2, 0});
    const std::vector<DiscreteMeasure> bin{binomial_measure(1, r("1/4")), binomial_measure(1, r("3/4"))};
    EXPECT_TRUE(sos_cx_check(w_polynomial({1, 1}), w_polynomial({2, 0}), d, bin).holds);
    const std::vector<DiscreteMeasure> same{coin, coin};
    EXPECT_TRUE(sos_cx_check(w_polynomial({1, 1}), w_polynomial({2, 0}), d, same).holds);
}

TEST(SosCxCheck, PaperExampleHasNoValidDecomposition) {
    const auto P = poly("1/2 x1^3 x2 + 1/2 x1 x2^3"), Q = poly("1/8 x1^4 + 3/4 x1^2 x2^2 + 1/8 x2^4");
    const std::vector<DiscreteMeasure> ms{d0, coin};
    // Q - P = 1/8 (x1 - x2)^4 cannot be written with a non-negative R.
    SosDecomposition square{2, {{0, 1, poly("1/8 x1^2 - 1/4 x1 x2 + 1/8 x2^2")}}};
    EXPECT_EQ(square.expand(), Q - P);
    EXPECT_EQ(kind_of([&] { sos_cx_check(P, Q, square, ms); }), ErrorKind::NotNonneg);
    SosDecomposition wrong{2, {{0, 1, poly("1/8 x1^2 + 1/8 x2^2")}}};
    EXPECT_EQ(kind_of([&] { sos_cx_check(P, Q, wrong, ms); }), ErrorKind::DecompositionMismatch);
    const auto v = leq_cx(poly_eval_measures(P, ms), poly_eval_measures(Q, ms));
    ASSERT_FALSE(v.holds);
    EXPECT_EQ(integrate_hinge(poly_eval_measures(P, ms), Rational(2)), r("1/16"));
    EXPECT_EQ(integrate_hinge(poly_eval_measures(Q, ms), Rational(2)), r("6/128"));
}

TEST(SosCxCheck, PairwiseCriterionFailure) {
    const auto d = sos_step_decomposition({1, 1}, {2, 0});
    const std::vector<DiscreteMeasure> ms{make_measure({{Rational(0), r("1/2")}, {Rational(3), r("1/2")}}),
                                          make_measure({{Rational(1), r("1/2")}, {Rational(2), r("1/2")}})};
    const auto v = sos_cx_check(w_polynomial({1, 1}), w_polynomial({2, 0}), d, ms);
    ASSERT_FALSE(v.holds);
    EXPECT_EQ(v.witness->context, "criterion fails for pair (1,2)");
    EXPECT_EQ(kind_of([&] { sos_cx_check(w_polynomial({1, 1}), w_polynomial({2, 0}), d, std::vector{d0, dirac(Rational(0), Rational(2))}); }),
              ErrorKind::MassMismatch);
}

TEST(MuirheadCx, Examples) {
    const std::vector<DiscreteMeasure> bins{binomial_measure(2, r("1/4")), binomial_measure(2, r("1/2")),
                                            binomial_measure(2, r("3/4"))};
    EXPECT_TRUE(muirhead_cx_check({1, 1, 1}, {3, 0, 0}, bins).holds);
    const std::vector<DiscreteMeasure> same(3, coin);
    EXPECT_TRUE(muirhead_cx_check({1, 1, 1}, {3, 0, 0}, same).holds);

    // Three-point measures ordered by <=st.
    const std::vector<DiscreteMeasure> st{
        make_measure({{Rational(0), r("1/2")}, {Rational(1), r("1/4")}, {Rational(2), r("1/4")}}),
        make_measure({{Rational(0), r("1/4")}, {Rational(1), r("1/2")}, {Rational(2), r("1/4")}}),
        make_measure({{Rational(0), r("1/8")}, {Rational(1), r("1/4")}, {Rational(2), r("5/8")}})};
    EXPECT_TRUE(muirhead_cx_check({2, 1, 1}, {3, 1, 0}, st).holds);
}

TEST(MuirheadCx, ErrorsAndFailures) {
    const std::vector<DiscreteMeasure> two{coin, coin};
    EXPECT_EQ(kind_of([&] { muirhead_cx_check({2, 0}, {1, 1}, two); }), ErrorKind::NotMajorized);
    EXPECT_EQ(kind_of([&] { muirhead_cx_check({1, 1, 1}, {3, 0, 0}, two); }), ErrorKind::LengthMismatch);
    EXPECT_EQ(kind_of([&] { muirhead_cx_check({1, 1}, {2, 0}, std::vector{coin, dirac(Rational(0), Rational(2))}); }),
              ErrorKind::MassMismatch);
    const std::vector<DiscreteMeasure> bad{make_measure({{Rational(0), r("1/2")}, {Rational(3), r("1/2")}}),
                                           make_measure({{Rational(1), r("1/2")}, {Rational(2), r("1/2")}})};
    const auto v = muirhead_cx_check({1, 1}, {2, 0}, bad);
    EXPECT_FALSE(v.holds);
}

TEST(MuirheadCx, StOrderedBinomials) {
    testsupport::Gen g(64);
    for (int i = 0; i < 40; ++i) {
        const auto [p, q] = g.majorized_pair(3, 3);
        const unsigned n = static_cast<unsigned>(g.integer(1, 3));
        std::vector<DiscreteMeasure> ms;
        for (int k = 0; k < 3; ++k) ms.push_back(binomial_measure(n, Rational(g.integer(0, 4), 4)));
        EXPECT_TRUE(muirhead_cx_check(p, q, ms).holds) << p.str() << " " << q.str();
    }
}
