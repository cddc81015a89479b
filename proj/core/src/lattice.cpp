#include "cxorder/lattice.hpp"

#include <algorithm>

#include "cxorder/error.hpp"

namespace cxorder {

int certified_sign(const IntervalValue& v) {
    if (v.hi.sign() < 0) return -1;
    if (v.lo.sign() > 0) return 1;
    if (v.lo.is_zero() && v.hi.is_zero()) return 0;
    throw Error(ErrorKind::Inconclusive, "interval " + v.str() + " contains 0");
}

Rational LatticeSeq::listed_mass() const {
    Rational m;
    for (const auto& c : coeffs) m += c;
    return m;
}

LatticeSeq as_lattice(const DiscreteMeasure& mu) {
    LatticeSeq seq;
    for (const auto& a : mu.atoms()) {
        if (!a.x.is_integer() || a.x.sign() < 0)
            throw Error(ErrorKind::NotLattice, "atom at " + a.x.str() + " is not a non-negative integer");
    }
    if (!mu.empty()) {
        const std::size_t last = mu.max_position().floor().get_ui();
        seq.coeffs.assign(last + 1, Rational());
        for (const auto& a : mu.atoms()) seq.coeffs[a.x.floor().get_ui()] = a.w;
    }
    seq.total_mass = mu.mass();
    return seq;
}

namespace {

void require_equal_mass(const LatticeSeq& a, const LatticeSeq& b) {
    if (a.total_mass != b.total_mass)
        throw Error(ErrorKind::MassMismatch, "masses " + a.total_mass.str() + " and " + b.total_mass.str());
}

std::vector<Rational> euler_square(const std::vector<Rational>& d, std::size_t count) {
    std::vector<Rational> out(count);
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t i = 0; i <= k && i < d.size(); ++i)
            if (k - i < d.size()) out[k] += d[i] * d[k - i];
    return out;
}

Rational coeff_or_zero(const LatticeSeq& s, std::size_t i) { return i < s.coeffs.size() ? s.coeffs[i] : Rational(); }

} // namespace

std::vector<Rational> genfun_square_coeffs(const LatticeSeq& a, const LatticeSeq& b) {
    require_equal_mass(a, b);
    if (!a.coeff_slack.is_zero() || !b.coeff_slack.is_zero())
        throw Error(ErrorKind::BadParameter, "coefficients are enclosures, not exact values");

    if (a.complete() && b.complete()) {
        // d(K) = 0 under equal mass, so indices 0..K-1 carry everything.
        const std::size_t last = std::max(a.last_index(), b.last_index());
        std::vector<Rational> d(last);
        Rational run;
        for (std::size_t i = 0; i < last; ++i) {
            run += coeff_or_zero(b, i) - coeff_or_zero(a, i);
            d[i] = run;
        }
        return euler_square(d, d.empty() ? 0 : 2 * d.size() - 1);
    }

    // Truncated: d(i) needs coefficients up to i only, so d is exact on
    // 0..K with K the shorter listing, and so is the square on 0..K.
    std::size_t last = a.complete() ? b.last_index() : b.complete() ? a.last_index() : std::min(a.last_index(), b.last_index());
    std::vector<Rational> d(last + 1);
    Rational run;
    for (std::size_t i = 0; i <= last; ++i) {
        run += coeff_or_zero(b, i) - coeff_or_zero(a, i);
        d[i] = run;
    }
    return euler_square(d, d.size());
}

OrderVerdict genfun_test(const LatticeSeq& a, const LatticeSeq& b) {
    require_equal_mass(a, b);
    const bool exact = a.coeff_slack.is_zero() && b.coeff_slack.is_zero();

    if (exact) {
        const auto sq = genfun_square_coeffs(a, b);
        for (std::size_t k = 0; k < sq.size(); ++k)
            if (sq[k].sign() < 0) return OrderVerdict::fail({WitnessKind::Point, Rational(static_cast<std::int64_t>(k)), sq[k], {}});
        return a.complete() && b.complete() ? OrderVerdict::pass() : OrderVerdict::inconclusive();
    }

    // Enclosed coefficients: carry intervals through d and its square.
    auto enclose = [](const LatticeSeq& s, std::size_t i) {
        const Rational c = coeff_or_zero(s, i);
        return IntervalValue{c, c * (Rational(1) + s.coeff_slack)};
    };
    const std::size_t last = a.complete() ? b.last_index() : b.complete() ? a.last_index() : std::min(a.last_index(), b.last_index());
    std::vector<IntervalValue> d;
    IntervalValue run = IntervalValue::point(Rational());
    for (std::size_t i = 0; i <= last; ++i) {
        run = run + enclose(b, i) - enclose(a, i);
        d.push_back(run);
    }
    for (std::size_t k = 0; k < d.size(); ++k) {
        IntervalValue c = IntervalValue::point(Rational());
        for (std::size_t i = 0; i <= k; ++i) c = c + d[i] * d[k - i];
        if (c.hi.sign() < 0) return OrderVerdict::fail({WitnessKind::Point, Rational(static_cast<std::int64_t>(k)), c.hi, "upper end of the enclosure"});
    }
    return OrderVerdict::inconclusive();
}

std::vector<Rational> tail_sums(const LatticeSeq& a) {
    std::vector<Rational> out(a.last_index());
    Rational tail = a.total_mass;
    for (std::size_t i = 0; i < out.size(); ++i) {
        tail -= a.coeffs[i];
        out[i] = tail;
    }
    return out;
}

FamilySpec FamilySpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError(0, "expected family:parameters");
    const std::string_view name = text.substr(0, colon);
    const std::string_view params = text.substr(colon + 1);
    FamilySpec spec;
    if (name == "negbinomial") {
        const auto comma = params.find(',');
        if (comma == std::string_view::npos) throw ParseError(colon + 1, "negbinomial needs n,x");
        const Rational n = Rational::parse(params.substr(0, comma));
        if (!n.is_integer() || n.sign() < 0) throw ParseError(colon + 1, "n must be a non-negative integer");
        spec.kind = Kind::NegBinomial;
        spec.n = static_cast<unsigned>(n.floor().get_ui());
        try {
            spec.parameter = Rational::parse(params.substr(comma + 1));
        } catch (const ParseError& e) {
            throw ParseError(colon + 2 + comma + e.position(), "bad x");
        }
    } else if (name == "poisson") {
        spec.kind = Kind::Poisson;
        try {
            spec.parameter = Rational::parse(params);
        } catch (const ParseError& e) {
            throw ParseError(colon + 1 + e.position(), "bad lambda");
        }
    } else {
        throw ParseError(0, "unknown family '" + std::string(name) + "'");
    }
    return spec;
}

std::string FamilySpec::str() const {
    if (kind == Kind::Poisson) return "poisson:" + parameter.str();
    return "negbinomial:" + std::to_string(n) + "," + parameter.str();
}

Rational default_truncation_eps() { return Rational(1) / Rational(2).pow(40); }

namespace {

// a_{k+1} / a_k = x (n + k + 1) / (k + 1), non-increasing in k.
LatticeSeq truncate_negbinomial(unsigned n, const Rational& x, const Rational& eps) {
    const Rational one(1);
    if (x.sign() <= 0 || x >= one) throw Error(ErrorKind::BadParameter, "negbinomial needs 0 < x < 1");
    LatticeSeq seq;
    seq.total_mass = one;
    Rational term = (one - x).pow(n + 1);  // a_0
    for (unsigned k = 0;; ++k) {
        seq.coeffs.push_back(term);
        const Rational next = term * x * Rational(n + k + 1) / Rational(k + 1);  // a_{k+1}
        const Rational ratio = x * Rational(n + k + 2) / Rational(k + 2);        // bounds a_{j+1}/a_j, j > k
        if (ratio < one) {
            const Rational tail = next / (one - ratio);
            if (tail < eps) {
                seq.tail_bound = tail;
                return seq;
            }
        }
        term = next;
    }
}

// e^{-lambda} is irrational, so coefficients are lower bounds built from a
// certified enclosure [lo, hi] of e^{-lambda}.
LatticeSeq truncate_poisson(const Rational& lambda, const Rational& eps) {
    const Rational one(1);
    if (lambda.sign() <= 0) throw Error(ErrorKind::BadParameter, "poisson needs lambda > 0");

    // e^lambda in [S_J, S_J + R_J], R_J = t_{J+1} / (1 - lambda/(J+2)).
    Rational partial = one, term = one, lo, hi, slack;
    const Rational target_slack = eps / Rational(64);
    for (unsigned j = 0;; ++j) {
        const Rational next = term * lambda / Rational(j + 1);
        const Rational ratio = lambda / Rational(j + 2);
        if (ratio < one) {
            const Rational rem = next / (one - ratio);
            slack = rem / partial;  // hi/lo - 1
            if (slack < target_slack) {
                lo = one / (partial + rem);
                hi = one / partial;
                break;
            }
        }
        partial += next;
        term = next;
    }

    LatticeSeq seq;
    seq.total_mass = one;
    seq.coeff_slack = slack;
    Rational scaled = one;  // lambda^k / k!
    Rational listed;
    for (unsigned k = 0;; ++k) {
        seq.coeffs.push_back(lo * scaled);
        listed += scaled;
        const Rational next = scaled * lambda / Rational(k + 1);
        const Rational ratio = lambda / Rational(k + 2);
        if (ratio < one) {
            // Unlisted mass: the tail beyond k plus the slack on listed terms.
            const Rational tail = hi * next / (one - ratio) + (hi - lo) * listed;
            if (tail < eps) {
                seq.tail_bound = tail;
                return seq;
            }
        }
        scaled = next;
    }
}

} // namespace

LatticeSeq truncated_family(const FamilySpec& family, const Rational& eps) {
    if (eps.sign() <= 0) throw Error(ErrorKind::BadParameter, "eps must be positive");
    if (family.kind == FamilySpec::Kind::NegBinomial) return truncate_negbinomial(family.n, family.parameter, eps);
    return truncate_poisson(family.parameter, eps);
}

} // namespace cxorder
