#include "cxorder/measure.hpp"

#include <algorithm>
#include <map>

#include "cxorder/error.hpp"

namespace cxorder {

DiscreteMeasure make_measure(std::vector<Atom> atoms) {
    std::map<Rational, Rational> merged;
    for (auto& a : atoms) {
        if (a.w.sign() < 0)
            throw Error(ErrorKind::NegativeWeight, "weight " + a.w.str() + " at position " + a.x.str());
        if (a.w.is_zero()) continue;
        merged[std::move(a.x)] += a.w;
    }
    std::vector<Atom> canonical;
    canonical.reserve(merged.size());
    for (auto& [x, w] : merged) canonical.push_back({x, w});
    return DiscreteMeasure(std::move(canonical));
}

DiscreteMeasure dirac(const Rational& x, const Rational& w) { return make_measure({{x, w}}); }

Rational DiscreteMeasure::mass() const {
    Rational m;
    for (const auto& a : atoms_) m += a.w;
    return m;
}

Rational DiscreteMeasure::mean() const {
    Rational m;
    for (const auto& a : atoms_) m += a.x * a.w;
    return m;
}

Rational DiscreteMeasure::cdf(const Rational& x) const {
    Rational f;
    for (const auto& a : atoms_) {
        if (a.x > x) break;
        f += a.w;
    }
    return f;
}

Moments moments(const DiscreteMeasure& mu) { return {mu.mass(), mu.mean()}; }

DiscreteMeasure convolve(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    std::map<Rational, Rational> acc;
    for (const auto& a : mu.atoms())
        for (const auto& b : nu.atoms()) acc[a.x + b.x] += a.w * b.w;
    std::vector<Atom> atoms;
    atoms.reserve(acc.size());
    for (auto& [x, w] : acc) atoms.push_back({x, w});
    return make_measure(std::move(atoms));
}

DiscreteMeasure convolution_power(const DiscreteMeasure& mu, unsigned k) {
    DiscreteMeasure result = dirac(Rational(0));
    DiscreteMeasure base = mu;
    while (k > 0) {
        if (k & 1u) result = convolve(result, base);
        k >>= 1u;
        if (k > 0) base = convolve(base, base);
    }
    return result;
}

DiscreteMeasure mix(std::span<const Rational> coeffs, std::span<const DiscreteMeasure> measures) {
    if (coeffs.size() != measures.size())
        throw Error(ErrorKind::LengthMismatch, "mix needs one coefficient per measure");
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].sign() < 0)
            throw Error(ErrorKind::NegativeWeight, "mixing coefficient " + coeffs[i].str());
        if (coeffs[i].is_zero()) continue;
        for (const auto& a : measures[i].atoms()) atoms.push_back({a.x, coeffs[i] * a.w});
    }
    return make_measure(std::move(atoms));
}

Rational integrate_hinge(const DiscreteMeasure& mu, const Rational& knot) {
    Rational total;
    for (const auto& a : mu.atoms())
        if (a.x > knot) total += (a.x - knot) * a.w;
    return total;
}

Rational StepFunction::operator()(const Rational& x) const {
    if (breakpoints.empty() || x < breakpoints.front() || x >= breakpoints.back()) return Rational();
    // Last breakpoint <= x.
    const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
    return values[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
}

StepFunction cdf_diff(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    if (mu.mass() != nu.mass())
        throw Error(ErrorKind::MassMismatch, "masses " + mu.mass().str() + " and " + nu.mass().str());

    // Jump of H at each support point, then running sum.
    std::map<Rational, Rational> jumps;
    for (const auto& a : mu.atoms()) jumps[a.x] += a.w;
    for (const auto& b : nu.atoms()) jumps[b.x] -= b.w;

    StepFunction h;
    Rational level;
    for (const auto& [x, jump] : jumps) {
        if (jump.is_zero()) continue;
        level += jump;
        if (!h.values.empty() && h.values.back() == level) continue;
        if (h.breakpoints.empty() && level.is_zero()) continue;
        h.breakpoints.push_back(x);
        h.values.push_back(level);
    }
    // The last pushed level is the value beyond the support, which is 0 under
    // equal masses; it becomes the closing breakpoint.
    if (!h.values.empty()) h.values.pop_back();
    if (h.values.empty()) h.breakpoints.clear();
    return h;
}

} // namespace cxorder
