#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cxorder/rational.hpp"

namespace cxorder {

struct Atom {
    Rational x;  // position
    Rational w;  // weight, > 0 once inside a DiscreteMeasure

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite non-negative measure with rational atoms. Positions are strictly
/// increasing and every stored weight is positive; the empty atom list is
/// the zero measure.
class DiscreteMeasure {
public:
    DiscreteMeasure() = default;

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    Rational mass() const;
    /// Raw first moment, sum of x * w. Not normalised by the mass.
    Rational mean() const;

    /// F(x) = mu((-inf, x]).
    Rational cdf(const Rational& x) const;

    const Rational& min_position() const { return atoms_.front().x; }
    const Rational& max_position() const { return atoms_.back().x; }

    friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

private:
    friend DiscreteMeasure make_measure(std::vector<Atom> atoms);
    explicit DiscreteMeasure(std::vector<Atom> canonical) : atoms_(std::move(canonical)) {}

    std::vector<Atom> atoms_;
};

/// Merges equal positions, drops zero weights. Throws NegativeWeight.
DiscreteMeasure make_measure(std::vector<Atom> atoms);

/// w * delta_x.
DiscreteMeasure dirac(const Rational& x, const Rational& w = Rational(1));

struct Moments {
    Rational mass;
    Rational mean;
};

Moments moments(const DiscreteMeasure& mu);

DiscreteMeasure convolve(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// mu^{*k}; k = 0 gives delta_0.
DiscreteMeasure convolution_power(const DiscreteMeasure& mu, unsigned k);

/// Non-negative linear combination sum coeffs[i] * measures[i].
/// Throws NegativeWeight, LengthMismatch.
DiscreteMeasure mix(std::span<const Rational> coeffs, std::span<const DiscreteMeasure> measures);

/// Integral of (x - A)_+ against mu.
Rational integrate_hinge(const DiscreteMeasure& mu, const Rational& knot);

/// Compactly supported right-continuous step function. `values[i]` holds on
/// [breakpoints[i], breakpoints[i+1]); the function is 0 elsewhere.
/// Canonical form: adjacent intervals carry different values and the outer
/// intervals are non-zero, so the zero function has no breakpoints.
struct StepFunction {
    std::vector<Rational> breakpoints;
    std::vector<Rational> values;

    Rational operator()(const Rational& x) const;
    bool is_zero() const { return breakpoints.empty(); }

    friend bool operator==(const StepFunction&, const StepFunction&) = default;
};

/// H = F_mu - F_nu. Throws MassMismatch when the masses differ, since H
/// would not vanish at +infinity.
StepFunction cdf_diff(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

} // namespace cxorder
