#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cxorder/interval.hpp"
#include "cxorder/measure.hpp"
#include "cxorder/order.hpp"

namespace cxorder {

/// Masses at 0, 1, ..., K of a measure on the non-negative integers.
///
/// `coeffs[k]` is exact when `coeff_slack` is 0; otherwise the true mass at k
/// lies in [coeffs[k], coeffs[k] * (1 + coeff_slack)]. `tail_bound` is a
/// certified upper bound on `total_mass - sum(coeffs)`, and is 0 exactly for
/// a complete finite-support sequence. `total_mass` is the mass of the
/// untruncated measure.
struct LatticeSeq {
    std::vector<Rational> coeffs;
    Rational tail_bound;
    Rational total_mass;
    Rational coeff_slack;

    bool complete() const { return tail_bound.is_zero() && coeff_slack.is_zero(); }
    Rational listed_mass() const;
    /// Last index K.
    std::size_t last_index() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Throws NotLattice when some atom is negative or non-integer.
LatticeSeq as_lattice(const DiscreteMeasure& mu);

/// Coefficients of ((f - g) / (z - 1))^2, the Euler self-product of
/// d(i) = sum_{k<=i} (b_k - a_k). For complete inputs the full list; for
/// truncated exact inputs only the indices 0..min(K_a, K_b), which depend on
/// listed coefficients alone. Throws MassMismatch, and BadParameter for
/// inputs with inexact coefficients.
std::vector<Rational> genfun_square_coeffs(const LatticeSeq& a, const LatticeSeq& b);

/// Non-negativity of every coefficient above. On truncated inputs the
/// verdict is `fails` when a certified-negative coefficient appears in the
/// certified prefix and `inconclusive` otherwise. Witness point = index.
OrderVerdict genfun_test(const LatticeSeq& a, const LatticeSeq& b);

/// Tail sums Fbar(i) = sum_{k>i} a_k of a complete sequence, i = 0..K-1.
std::vector<Rational> tail_sums(const LatticeSeq& a);

struct FamilySpec {
    enum class Kind { NegBinomial, Poisson };
    Kind kind = Kind::NegBinomial;
    unsigned n = 0;      // negative binomial index in C(n+k, k)(1-x)^{n+1} x^k
    Rational parameter;  // x for NegBinomial, lambda for Poisson

    /// "negbinomial:n,x" or "poisson:lambda".
    static FamilySpec parse(std::string_view text);
    std::string str() const;
};

/// The default truncation tolerance, 2^-40.
Rational default_truncation_eps();

/// Exact (negative binomial) or lower-bound (Poisson) coefficients up to the
/// smallest K whose geometric-ratio certificate pushes `tail_bound` below
/// eps. Throws BadParameter.
LatticeSeq truncated_family(const FamilySpec& family, const Rational& eps);

} // namespace cxorder
