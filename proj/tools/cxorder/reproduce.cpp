#include <vector>

#include "cxorder/bernstein.hpp"
#include "cxorder/conv_poly.hpp"
#include "cxorder/error.hpp"
#include "cxorder/interval.hpp"
#include "cxorder/measure.hpp"
#include "cxorder/multi_fn.hpp"
#include "cxorder/parse.hpp"
#include "output.hpp"

namespace cxorder::cli {

namespace {

Rational q(const char* text) { return Rational::parse(text); }

// Prints "label: computed (expected) ok|MISMATCH" and returns whether they agree.
bool check(const Output& o, const std::string& label, const Rational& computed, const Rational& expected,
           const std::string& shown) {
    const bool ok = computed == expected;
    o.out << "  " << label << ": " << o.num(computed) << "  expected " << shown << (ok ? "  ok" : "  MISMATCH") << "\n";
    return ok;
}

bool check_atoms(const Output& o, const std::string& name, const DiscreteMeasure& m,
                 const std::vector<const char*>& expected) {
    o.out << name << " atoms at 0.." << expected.size() - 1 << ":\n";
    bool ok = m.size() == expected.size();
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const Rational x(static_cast<std::int64_t>(k));
        const Rational w = m.cdf(x) - (k == 0 ? Rational() : m.cdf(Rational(static_cast<std::int64_t>(k) - 1)));
        ok = check(o, "delta_" + std::to_string(k), w, q(expected[k]), expected[k]) && ok;
    }
    return ok;
}

int example_3(const Output& o) {
    const DiscreteMeasure mu = dirac(Rational(0));
    const DiscreteMeasure nu = make_measure({{Rational(0), q("1/2")}, {Rational(1), q("1/2")}});
    const std::vector<DiscreteMeasure> ms{mu, nu};
    const MVPolynomial P = parse_polynomial("1/2 * x1^3 x2 + 1/2 * x1 x2^3", 2);
    const MVPolynomial Q = parse_polynomial("1/8 * x1^4 + 3/4 * x1^2 x2^2 + 1/8 * x2^4", 2);
    o.out << "mu = delta_0, nu = 1/2 delta_0 + 1/2 delta_1\n";
    o.out << "P = " << P.str() << "\nQ = " << Q.str() << "\n";

    const DiscreteMeasure pm = poly_eval_measures(P, ms);
    const DiscreteMeasure qm = poly_eval_measures(Q, ms);
    bool ok = check_atoms(o, "P(mu,nu)", pm, {"5/16", "7/16", "3/16", "1/16"});
    ok = check_atoms(o, "Q(mu,nu)", qm, {"41/128", "52/128", "30/128", "4/128", "1/128"}) && ok;

    o.out << "hinge (x-2)_+:\n";
    const Rational hp = integrate_hinge(pm, Rational(2));
    const Rational hq = integrate_hinge(qm, Rational(2));
    ok = check(o, "against P(mu,nu)", hp, q("1/16"), "1/16") && ok;
    ok = check(o, "against Q(mu,nu)", hq, q("6/128"), "6/128") && ok;
    o.out << "  " << o.num(hp) << (hp > hq ? " > " : " <= ") << o.num(hq) << "\n";

    const OrderVerdict v = leq_cx(pm, qm);
    o.out << "verdict: " << (v.holds ? "P(mu,nu) ≼cx Q(mu,nu)" : "not ≼cx") << " (" << describe(v) << ")\n";
    ok = ok && !v.holds && hp > hq;
    return ok ? Holds : Fails;
}

int gavrea_p4(const Rational& eps, const Output& o) {
    const Rational x = q("1/4"), y = q("3/4");
    const ConvexTestFn phi = ConvexTestFn::affine(Rational(0), Rational(1));
    o.out << "n = 1, x = 1/4, y = 3/4, phi(u) = u, eps = " << o.num(eps) << "\n";
    const P4Result r = gavrea_p4_sum(1, x, y, phi, eps);
    o.out << "double sum in " << r.value.str() << "\n";
    o.out << "truncated sum " << o.num(r.truncated_sum) << " (" << r.truncated_sum.decimal(12) << ")\n";
    o.out << "truncation radius " << o.num(r.radius) << ", terms " << r.terms_x << "x" << r.terms_y << "\n";

    // The same sum equals -int_0^inf 4n/(2n+t)^3 ((F-G)*(F-G))(t) dt; the
    // profile is positive on (0, inf) here, so the sign must be negative.
    int sign = 0;
    try {
        sign = certified_sign(r.value);
    } catch (const Error&) {
        o.out << "sign: inconclusive at this eps\n";
        return Inconclusive;
    }
    o.out << "sign: " << (sign < 0 ? "certified negative" : "not negative") << "  expected negative"
          << (sign < 0 ? "  ok" : "  MISMATCH") << "\n";
    if (sign < 0) o.out << "the inequality fails for phi(u) = u\n";
    return sign < 0 ? Holds : Fails;
}

int absdiff(const Output& o) {
    const MultiFn g = MultiFn::abs_diff(2, 0, 1);
    const std::vector<unsigned> ns{1, 1};
    auto B = [&](const char* a, const char* b) {
        const std::vector<Rational> at{q(a), q(b)};
        return tensor_bernstein(g, ns, at);
    };
    const Rational exy = B("0", "1"), eyx = B("1", "0"), exx = B("0", "0"), eyy = B("1", "1");
    o.out << "g(u,v) = |u-v|, n = 1, x = 0, y = 1\n";
    o.out << "E g(X,Y) + E g(Y,X) = " << exy << "+" << eyx << (exy + eyx > exx + eyy ? " > " : " <= ") << exx
          << "+" << eyy << " = E g(X1,X2) + E g(Y1,Y2)\n";
    const Rational gap = gav_gap(GavMode::P1Prime, g, ns, std::vector<Rational>{Rational(0), Rational(1)});
    bool ok = check(o, "P1' gap", gap, Rational(-2), "-2");
    ok = ok && exy == 1 && eyx == 1 && exx == 0 && eyy == 0;
    if (ok) o.out << "1+1 > 0+0: the symmetric Bernstein inequality is violated\n";
    return ok ? Holds : Fails;
}

int rasa_binomial(const Output& o) {
    const unsigned n = 2;
    const Rational x = q("1/4"), y = q("3/4");
    const DiscreteMeasure bx = binomial_measure(n, x);
    const DiscreteMeasure by = binomial_measure(n, y);
    o.out << "n = 2, x = 1/4, y = 3/4\n";
    const auto r = rasa_criterion(bx, by);
    o.out << "(F-G)*(F-G) at integers:";
    for (std::int64_t a = 0; a <= 2 * n; ++a) o.out << " " << o.num(r.profile(Rational(a)));
    o.out << "\n";
    const ConvexTestFn phi = ConvexTestFn::hinge(q("1/2"));
    o.out << "gap for phi = (t-1/2)_+: " << o.num(rasa_gap(n, x, y, phi)) << "\n";
    const bool direct = rasa_direct(bx, by).holds;
    o.out << "criterion " << describe(r.verdict) << ", direct " << (direct ? "holds" : "fails") << "\n";
    const bool ok = r.verdict.holds && direct;
    o.out << (ok ? "holds" : "MISMATCH") << "\n";
    return ok ? Holds : Fails;
}

} // namespace

int reproduce(const std::string& which, const Rational& eps, const Output& o) {
    if (which == "example-3") return example_3(o);
    if (which == "gavrea-p4") return gavrea_p4(eps, o);
    if (which == "absdiff") return absdiff(o);
    return rasa_binomial(o);
}

} // namespace cxorder::cli
