#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxorder/measure.hpp"
#include "cxorder/test_fn.hpp"

namespace cxorder {

enum class WitnessKind {
    Point,         // `point` violates the inequality, `gap` < 0 is the slack
    MassMismatch,  // `gap` = mass(lhs) - mass(rhs) != 0
    MeanMismatch,  // `gap` = mean(lhs) - mean(rhs) != 0
};

struct Witness {
    WitnessKind kind = WitnessKind::Point;
    Rational point;
    Rational gap;
    std::string context;  // free-form locator, e.g. "pair (1,2)"
};

/// Outcome of an order test. A failing verdict always carries a witness.
/// `conclusive` is false only for truncated inputs where neither outcome
/// could be certified.
struct OrderVerdict {
    bool holds = true;
    std::optional<Witness> witness;
    bool conclusive = true;

    static OrderVerdict pass() { return {}; }
    static OrderVerdict fail(Witness w) { return {false, std::move(w), true}; }
    static OrderVerdict inconclusive() { return {false, std::nullopt, false}; }
};

std::string describe(const OrderVerdict& v);

/// Continuous function, affine between consecutive breakpoints, zero outside
/// [front, back]. Empty breakpoints is the zero function.
struct PiecewiseLinear {
    std::vector<Rational> breakpoints;
    std::vector<Rational> values;

    Rational operator()(const Rational& a) const;
    bool is_zero() const;
};

struct RasaResult {
    OrderVerdict verdict;
    PiecewiseLinear profile;
};

/// mu <=_st nu: equal masses and F_mu >= F_nu everywhere. The witness is the
/// smallest atom position where F_mu < F_nu, with gap F_mu - F_nu.
OrderVerdict leq_st(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// mu <=_cx nu. The witness gap is hinge(nu, A) - hinge(mu, A) at the
/// smallest violating knot A.
OrderVerdict leq_cx(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// (F - G) * (F - G) on the grid of pairwise breakpoint sums, and whether it
/// is non-negative. Throws MassMismatch.
RasaResult rasa_criterion(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// 2 mu*nu <=_cx mu*mu + nu*nu evaluated directly on the convolutions. Shares
/// no code with rasa_criterion beyond convolution and hinge integration.
OrderVerdict rasa_direct(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// Integral of a test function against a measure.
Rational integrate(const DiscreteMeasure& mu, const ConvexTestFn& phi);

/// Integral of phi against mu*mu + nu*nu - 2 mu*nu. Throws MassMismatch and
/// NonConvexTestFn.
Rational gap_functional(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const ConvexTestFn& phi);

} // namespace cxorder
