#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cxorder/majorization.hpp"
#include "cxorder/measure.hpp"
#include "cxorder/order.hpp"

namespace cxorder {

using Monomial = std::vector<unsigned>;

/// Sparse polynomial in x1..xm with rational coefficients. No zero
/// coefficient is ever stored.
class MVPolynomial {
public:
    explicit MVPolynomial(std::size_t arity = 1);

    static MVPolynomial constant(std::size_t arity, const Rational& c);
    static MVPolynomial variable(std::size_t arity, std::size_t index);

    std::size_t arity() const { return arity_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^exponents. Throws ArityMismatch on a wrong-length monomial.
    void add_term(const Monomial& exponents, const Rational& c);
    Rational coefficient(const Monomial& exponents) const;

    /// Certifies that every coefficient is >= 0.
    bool nonneg() const;
    unsigned total_degree() const;

    Rational evaluate(std::span<const Rational> point) const;
    /// Directional derivative along `direction` at `point`.
    Rational directional_derivative(std::span<const Rational> point, std::span<const Rational> direction) const;

    MVPolynomial& operator+=(const MVPolynomial& o);
    MVPolynomial& operator-=(const MVPolynomial& o);
    MVPolynomial& operator*=(const Rational& k);
    friend MVPolynomial operator+(MVPolynomial a, const MVPolynomial& b) { return a += b; }
    friend MVPolynomial operator-(MVPolynomial a, const MVPolynomial& b) { return a -= b; }
    friend MVPolynomial operator*(MVPolynomial a, const Rational& k) { return a *= k; }
    friend MVPolynomial operator*(const MVPolynomial& a, const MVPolynomial& b);

    /// "c * x1^a x2^b + ..." accepted back by parse_polynomial.
    std::string str() const;

    friend bool operator==(const MVPolynomial&, const MVPolynomial&) = default;

private:
    void require_same_arity(const MVPolynomial& o) const;

    std::size_t arity_;
    std::map<Monomial, Rational> terms_;
};

/// Symmetrised monomial average (1/m!) sum_pi prod_l x_{pi(l)}^{p_l}.
MVPolynomial w_polynomial(const ExponentTuple& p);

/// Substitutes measures for variables, products becoming convolutions.
/// Throws NotNonneg, ArityMismatch.
DiscreteMeasure poly_eval_measures(const MVPolynomial& poly, std::span<const DiscreteMeasure> measures);

/// P(a) = Q(a) and dP/db(a) = dQ/db(a). Throws ArityMismatch.
bool moment_consistency(const MVPolynomial& p, const MVPolynomial& q, std::span<const Rational> a,
                        std::span<const Rational> b);

struct SosTerm {
    std::size_t u;  // 0-based, u < v
    std::size_t v;
    MVPolynomial r;
};

/// sum over terms of (x_u - x_v)^2 R_{u,v}.
struct SosDecomposition {
    std::size_t arity = 1;
    std::vector<SosTerm> terms;

    MVPolynomial expand() const;
};

/// W^q - W^p written as sum_{u<v} (x_u - x_v)^2 R_{u,v} with non-negative
/// R, validated by full expansion. Throws NotSStep.
SosDecomposition sos_step_decomposition(const ExponentTuple& p, const ExponentTuple& q);

/// Checks that D expands to Q - P with non-negative R's, that every pair of
/// measures satisfies the criterion, then confirms P(mu) <=_cx Q(mu)
/// directly. Throws DecompositionMismatch, MassMismatch, NotNonneg,
/// ArityMismatch.
OrderVerdict sos_cx_check(const MVPolynomial& p, const MVPolynomial& q, const SosDecomposition& d,
                          std::span<const DiscreteMeasure> measures);

/// W^p(mu) <=_cx W^q(mu) verified step by step along the S-step chain.
/// Throws NotMajorized, MassMismatch, LengthMismatch.
OrderVerdict muirhead_cx_check(const ExponentTuple& p, const ExponentTuple& q, std::span<const DiscreteMeasure> measures);

} // namespace cxorder
