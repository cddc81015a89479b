#include "cxorder/conv_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cxorder/error.hpp"

namespace cxorder {

MVPolynomial::MVPolynomial(std::size_t arity) : arity_(arity) {
    if (arity_ == 0) throw Error(ErrorKind::ArityMismatch, "polynomial arity must be at least 1");
}

MVPolynomial MVPolynomial::constant(std::size_t arity, const Rational& c) {
    MVPolynomial p(arity);
    p.add_term(Monomial(arity, 0), c);
    return p;
}

MVPolynomial MVPolynomial::variable(std::size_t arity, std::size_t index) {
    MVPolynomial p(arity);
    Monomial m(arity, 0);
    m.at(index) = 1;
    p.add_term(m, Rational(1));
    return p;
}

void MVPolynomial::add_term(const Monomial& exponents, const Rational& c) {
    if (exponents.size() != arity_)
        throw Error(ErrorKind::ArityMismatch, "monomial of length " + std::to_string(exponents.size()) + " in a polynomial of arity " + std::to_string(arity_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MVPolynomial::coefficient(const Monomial& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational() : it->second;
}

bool MVPolynomial::nonneg() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.sign() > 0; });
}

unsigned MVPolynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
    return d;
}

Rational MVPolynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != arity_) throw Error(ErrorKind::ArityMismatch, "evaluation point has the wrong length");
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < arity_; ++i)
            if (m[i] > 0) term *= point[i].pow(m[i]);
        sum += term;
    }
    return sum;
}

Rational MVPolynomial::directional_derivative(std::span<const Rational> point, std::span<const Rational> direction) const {
    if (point.size() != arity_ || direction.size() != arity_)
        throw Error(ErrorKind::ArityMismatch, "point and direction must match the arity");
    Rational sum;
    for (const auto& [m, c] : terms_) {
        for (std::size_t j = 0; j < arity_; ++j) {
            if (m[j] == 0 || direction[j].is_zero()) continue;
            Rational term = c * Rational(m[j]) * direction[j];
            for (std::size_t i = 0; i < arity_; ++i) {
                const unsigned e = i == j ? m[i] - 1 : m[i];
                if (e > 0) term *= point[i].pow(e);
            }
            sum += term;
        }
    }
    return sum;
}

void MVPolynomial::require_same_arity(const MVPolynomial& o) const {
    if (arity_ != o.arity_) throw Error(ErrorKind::ArityMismatch, "polynomials of arity " + std::to_string(arity_) + " and " + std::to_string(o.arity_));
}

MVPolynomial& MVPolynomial::operator+=(const MVPolynomial& o) {
    require_same_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MVPolynomial& MVPolynomial::operator-=(const MVPolynomial& o) {
    require_same_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MVPolynomial& MVPolynomial::operator*=(const Rational& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
}

MVPolynomial operator*(const MVPolynomial& a, const MVPolynomial& b) {
    a.require_same_arity(b);
    MVPolynomial out(a.arity_);
    Monomial m(a.arity_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

std::string MVPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending monomial order reads more naturally (x1^2 before x2^2).
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        os << c.abs();
        bool any = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << (any ? " " : " * ") << "x" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
            any = true;
        }
    }
    return os.str();
}

MVPolynomial w_polynomial(const ExponentTuple& p) {
    MVPolynomial w(p.size());
    const Rational weight = arrangement_weight(p);
    for_each_arrangement(p, [&](const std::vector<unsigned>& a) { w.add_term(a, weight); });
    return w;
}

namespace {

class PowerCache {
public:
    explicit PowerCache(std::span<const DiscreteMeasure> measures) : measures_(measures), powers_(measures.size()) {}

    const DiscreteMeasure& power(std::size_t i, unsigned k) {
        auto& table = powers_[i];
        if (table.empty()) table.push_back(dirac(Rational(0)));
        while (table.size() <= k) table.push_back(convolve(table.back(), measures_[i]));
        return table[k];
    }

private:
    std::span<const DiscreteMeasure> measures_;
    std::vector<std::vector<DiscreteMeasure>> powers_;
};

DiscreteMeasure eval_with_cache(const MVPolynomial& poly, PowerCache& cache) {
    if (!poly.nonneg()) throw Error(ErrorKind::NotNonneg, "polynomial " + poly.str() + " has a negative coefficient");
    std::vector<Rational> coeffs;
    std::vector<DiscreteMeasure> parts;
    for (const auto& [m, c] : poly.terms()) {
        DiscreteMeasure term = dirac(Rational(0));
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = convolve(term, cache.power(i, m[i]));
        coeffs.push_back(c);
        parts.push_back(std::move(term));
    }
    return mix(coeffs, parts);
}

void require_measure_count(std::size_t arity, std::span<const DiscreteMeasure> measures) {
    if (measures.size() != arity)
        throw Error(ErrorKind::ArityMismatch, std::to_string(measures.size()) + " measures for " + std::to_string(arity) + " variables");
}

void require_equal_masses(std::span<const DiscreteMeasure> measures) {
    for (std::size_t i = 1; i < measures.size(); ++i)
        if (measures[i].mass() != measures[0].mass())
            throw Error(ErrorKind::MassMismatch, "measure " + std::to_string(i + 1) + " has mass " + measures[i].mass().str() + ", measure 1 has " + measures[0].mass().str());
}

// First pair (i, j), i < j, whose CDF difference fails the criterion.
std::optional<Witness> pairwise_criterion(std::span<const DiscreteMeasure> measures) {
    for (std::size_t i = 0; i < measures.size(); ++i) {
        for (std::size_t j = i + 1; j < measures.size(); ++j) {
            auto r = rasa_criterion(measures[i], measures[j]);
            if (!r.verdict.holds) {
                Witness w = *r.verdict.witness;
                w.context = "criterion fails for pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                return w;
            }
        }
    }
    return std::nullopt;
}

} // namespace

DiscreteMeasure poly_eval_measures(const MVPolynomial& poly, std::span<const DiscreteMeasure> measures) {
    require_measure_count(poly.arity(), measures);
    PowerCache cache(measures);
    return eval_with_cache(poly, cache);
}

bool moment_consistency(const MVPolynomial& p, const MVPolynomial& q, std::span<const Rational> a,
                        std::span<const Rational> b) {
    if (p.arity() != q.arity()) throw Error(ErrorKind::ArityMismatch, "P and Q have different arities");
    return p.evaluate(a) == q.evaluate(a) && p.directional_derivative(a, b) == q.directional_derivative(a, b);
}

MVPolynomial SosDecomposition::expand() const {
    MVPolynomial total(arity);
    for (const auto& t : terms) {
        const MVPolynomial diff = MVPolynomial::variable(arity, t.u) - MVPolynomial::variable(arity, t.v);
        total += diff * diff * t.r;
    }
    return total;
}

SosDecomposition sos_step_decomposition(const ExponentTuple& p, const ExponentTuple& q) {
    if (!is_s_step(p, q)) throw Error(ErrorKind::NotSStep, p.str() + " -> " + q.str() + " is not a single-unit transfer");
    const auto ps = p.sorted(), qs = q.sorted();
    const std::size_t m = ps.size();
    std::size_t l1 = 0, l2 = 0;
    for (std::size_t l = 0; l < m; ++l) {
        if (qs[l] == ps[l] + 1) l1 = l;
        if (qs[l] + 1 == ps[l]) l2 = l;
    }
    const unsigned top = ps[l1], bottom = qs[l2];

    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), m);
    const Rational inv_fact(mpq_class(1, fact));

    // Positions other than l1, l2 receive the exponents p^_l under every
    // bijection onto the variables other than u, v.
    std::vector<unsigned> rest;
    for (std::size_t l = 0; l < m; ++l)
        if (l != l1 && l != l2) rest.push_back(ps[l]);

    SosDecomposition d;
    d.arity = m;
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = u + 1; v < m; ++v) {
            std::vector<std::size_t> others;
            for (std::size_t i = 0; i < m; ++i)
                if (i != u && i != v) others.push_back(i);
            MVPolynomial r(m);
            std::sort(others.begin(), others.end());
            do {
                Monomial base(m, 0);
                for (std::size_t k = 0; k < others.size(); ++k) base[others[k]] = rest[k];
                for (unsigned j = bottom; j + 1 <= top; ++j) {
                    Monomial mono = base;
                    mono[u] += j;
                    mono[v] += top + bottom - 1 - j;
                    r.add_term(mono, inv_fact);
                }
            } while (std::next_permutation(others.begin(), others.end()));
            if (!r.is_zero()) d.terms.push_back({u, v, std::move(r)});
        }
    }

    if (d.expand() != w_polynomial(qs) - w_polynomial(ps))
        throw Error(ErrorKind::DecompositionMismatch, "internal: S-step decomposition for " + ps.str() + " -> " + qs.str() + " does not expand to W^q - W^p");
    return d;
}

OrderVerdict sos_cx_check(const MVPolynomial& p, const MVPolynomial& q, const SosDecomposition& d,
                          std::span<const DiscreteMeasure> measures) {
    if (p.arity() != q.arity() || d.arity != p.arity())
        throw Error(ErrorKind::ArityMismatch, "P, Q and the decomposition must share one arity");
    require_measure_count(p.arity(), measures);
    if (!p.nonneg() || !q.nonneg()) throw Error(ErrorKind::NotNonneg, "P and Q must have non-negative coefficients");
    for (const auto& t : d.terms) {
        if (t.u == t.v || t.u >= d.arity || t.v >= d.arity)
            throw Error(ErrorKind::DecompositionMismatch, "term indices out of range");
        if (!t.r.nonneg())
            throw Error(ErrorKind::NotNonneg, "R_{" + std::to_string(t.u + 1) + "," + std::to_string(t.v + 1) + "} = " + t.r.str() + " has a negative coefficient");
    }
    if (d.expand() != q - p) throw Error(ErrorKind::DecompositionMismatch, "decomposition does not expand to Q - P");
    require_equal_masses(measures);

    if (auto w = pairwise_criterion(measures)) return OrderVerdict::fail(*w);

    PowerCache cache(measures);
    OrderVerdict direct = leq_cx(eval_with_cache(p, cache), eval_with_cache(q, cache));
    if (!direct.holds && direct.witness) direct.witness->context = "direct convex-order check of P(mu) and Q(mu)";
    return direct;
}

OrderVerdict muirhead_cx_check(const ExponentTuple& p, const ExponentTuple& q, std::span<const DiscreteMeasure> measures) {
    if (!majorizes(p, q)) throw Error(ErrorKind::NotMajorized, p.str() + " is not majorized by " + q.str());
    if (measures.size() != p.size())
        throw Error(ErrorKind::LengthMismatch, std::to_string(measures.size()) + " measures for tuples of length " + std::to_string(p.size()));
    require_equal_masses(measures);

    if (auto w = pairwise_criterion(measures)) return OrderVerdict::fail(*w);

    const auto chain = s_step_chain(p, q);
    PowerCache cache(measures);
    std::optional<DiscreteMeasure> previous;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        DiscreteMeasure current = eval_with_cache(w_polynomial(chain[i]), cache);
        if (previous) {
            OrderVerdict step = leq_cx(*previous, current);
            if (!step.holds) {
                if (step.witness) step.witness->context = "step " + chain[i - 1].str() + " -> " + chain[i].str();
                return step;
            }
        }
        previous = std::move(current);
    }
    return OrderVerdict::pass();
}

} // namespace cxorder
