#include "cxorder/order.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cxorder/error.hpp"

namespace cxorder {

std::string describe(const OrderVerdict& v) {
    if (!v.conclusive) return "inconclusive";
    if (v.holds) return "holds";
    std::ostringstream os;
    os << "fails";
    if (v.witness) {
        const Witness& w = *v.witness;
        switch (w.kind) {
        case WitnessKind::Point: os << "; witness A=" << w.point << " gap=" << w.gap; break;
        case WitnessKind::MassMismatch: os << "; mass mismatch " << w.gap; break;
        case WitnessKind::MeanMismatch: os << "; mean mismatch " << w.gap; break;
        }
        if (!w.context.empty()) os << " (" << w.context << ")";
    }
    return os.str();
}

Rational PiecewiseLinear::operator()(const Rational& a) const {
    if (breakpoints.empty() || a <= breakpoints.front() || a >= breakpoints.back()) return Rational();
    const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), a);
    const auto hi = static_cast<std::size_t>(it - breakpoints.begin());
    if (*it == a) return values[hi];
    const auto lo = hi - 1;
    const Rational t = (a - breakpoints[lo]) / (breakpoints[hi] - breakpoints[lo]);
    return values[lo] + t * (values[hi] - values[lo]);
}

bool PiecewiseLinear::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v.is_zero(); });
}

OrderVerdict leq_st(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    if (mu.mass() != nu.mass())
        return OrderVerdict::fail({WitnessKind::MassMismatch, {}, mu.mass() - nu.mass(), {}});
    std::set<Rational> points;
    for (const auto& a : mu.atoms()) points.insert(a.x);
    for (const auto& b : nu.atoms()) points.insert(b.x);
    for (const auto& x : points) {
        const Rational gap = mu.cdf(x) - nu.cdf(x);
        if (gap.sign() < 0) return OrderVerdict::fail({WitnessKind::Point, x, gap, {}});
    }
    return OrderVerdict::pass();
}

// Completeness of the finite knot set: with equal mass and mean, the map
// A -> hinge(nu, A) - hinge(mu, A) is affine between consecutive support
// points of mu + nu, vanishes identically left of the support (both sides
// equal mean - A * mass there) and right of it (both sides are 0). A
// piecewise-linear function that is zero outside [min, max] attains its
// minimum at one of its breakpoints, so checking those knots suffices.
OrderVerdict leq_cx(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    if (mu.mass() != nu.mass())
        return OrderVerdict::fail({WitnessKind::MassMismatch, {}, mu.mass() - nu.mass(), {}});
    if (mu.mean() != nu.mean())
        return OrderVerdict::fail({WitnessKind::MeanMismatch, {}, mu.mean() - nu.mean(), {}});
    std::set<Rational> knots;
    for (const auto& a : mu.atoms()) knots.insert(a.x);
    for (const auto& b : nu.atoms()) knots.insert(b.x);
    for (const auto& knot : knots) {
        const Rational gap = integrate_hinge(nu, knot) - integrate_hinge(mu, knot);
        if (gap.sign() < 0) return OrderVerdict::fail({WitnessKind::Point, knot, gap, {}});
    }
    return OrderVerdict::pass();
}

RasaResult rasa_criterion(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    const StepFunction h = cdf_diff(mu, nu);
    RasaResult result;
    if (h.is_zero()) return result;

    // H = sum_k J_k 1_[b_k, inf), so (H*H)'' = sum_{k,l} J_k J_l delta_{b_k+b_l}
    // and H*H(A) = sum_{k,l} J_k J_l (A - b_k - b_l)_+. Sweep the sorted sums,
    // carrying the slope.
    std::vector<Rational> jumps(h.breakpoints.size());
    Rational prev;
    for (std::size_t i = 0; i < h.breakpoints.size(); ++i) {
        const Rational level = i < h.values.size() ? h.values[i] : Rational();
        jumps[i] = level - prev;
        prev = level;
    }
    std::map<Rational, Rational> kinks;
    for (std::size_t k = 0; k < jumps.size(); ++k)
        for (std::size_t l = 0; l < jumps.size(); ++l)
            kinks[h.breakpoints[k] + h.breakpoints[l]] += jumps[k] * jumps[l];

    PiecewiseLinear& profile = result.profile;
    profile.breakpoints.reserve(kinks.size());
    profile.values.reserve(kinks.size());
    Rational value, slope;
    for (const auto& [s, kink] : kinks) {
        if (!profile.breakpoints.empty()) value += slope * (s - profile.breakpoints.back());
        profile.breakpoints.push_back(s);
        profile.values.push_back(value);
        slope += kink;
    }

    std::size_t argmin = 0;
    for (std::size_t i = 1; i < profile.values.size(); ++i)
        if (profile.values[i] < profile.values[argmin]) argmin = i;
    if (profile.values[argmin].sign() < 0)
        result.verdict = OrderVerdict::fail({WitnessKind::Point, profile.breakpoints[argmin], profile.values[argmin], {}});
    return result;
}

OrderVerdict rasa_direct(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    const DiscreteMeasure cross = convolve(mu, nu);
    const std::vector<Rational> two{Rational(2)};
    const std::vector<Rational> ones{Rational(1), Rational(1)};
    const DiscreteMeasure lhs = mix(two, std::vector<DiscreteMeasure>{cross});
    const DiscreteMeasure rhs = mix(ones, std::vector<DiscreteMeasure>{convolve(mu, mu), convolve(nu, nu)});
    return leq_cx(lhs, rhs);
}

Rational integrate(const DiscreteMeasure& mu, const ConvexTestFn& phi) {
    Rational total;
    for (const auto& a : mu.atoms()) total += phi(a.x) * a.w;
    return total;
}

Rational gap_functional(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const ConvexTestFn& phi) {
    if (mu.mass() != nu.mass())
        throw Error(ErrorKind::MassMismatch, "masses " + mu.mass().str() + " and " + nu.mass().str());
    phi.require_convex();
    return integrate(convolve(mu, mu), phi) + integrate(convolve(nu, nu), phi)
         - Rational(2) * integrate(convolve(mu, nu), phi);
}

} // namespace cxorder
