#pragma once

// Reference computations written from the definitions, sharing no code with
// the library beyond Rational. Slow and simple on purpose.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "cxorder/measure.hpp"

namespace testsupport {

using cxorder::Rational;
using Dist = std::map<Rational, Rational>;

inline Dist to_dist(const cxorder::DiscreteMeasure& m) {
    Dist d;
    for (const auto& a : m.atoms()) d[a.x] += a.w;
    return d;
}

inline Dist oracle_convolve(const Dist& a, const Dist& b) {
    Dist out;
    for (const auto& [x, w] : a)
        for (const auto& [y, v] : b) out[x + y] += w * v;
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

inline Dist oracle_add(Dist a, const Dist& b, const Rational& k) {
    for (const auto& [x, w] : b) a[x] += k * w;
    std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
    return a;
}

inline Rational oracle_mass(const Dist& d) {
    Rational s;
    for (const auto& [x, w] : d) s += w;
    return s;
}

inline Rational oracle_first_moment(const Dist& d) {
    Rational s;
    for (const auto& [x, w] : d) s += x * w;
    return s;
}

inline Rational oracle_hinge(const Dist& d, const Rational& a) {
    Rational s;
    for (const auto& [x, w] : d)
        if (x > a) s += (x - a) * w;
    return s;
}

inline Rational oracle_cdf(const Dist& d, const Rational& t) {
    Rational s;
    for (const auto& [x, w] : d)
        if (x <= t) s += w;
    return s;
}

/// ((F-G)*(F-G))(a) = integral of H(t) H(a-t) dt, H = F - G, integrated
/// piece by piece: both factors are constant between consecutive points of
/// {x} and {a - x}.
inline Rational oracle_overlap_profile(const Dist& mu, const Dist& nu, const Rational& a) {
    std::vector<Rational> cuts;
    for (const Dist* d : {&mu, &nu})
        for (const auto& [x, w] : *d) {
            cuts.push_back(x);
            cuts.push_back(a - x);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto H = [&](const Rational& t) { return oracle_cdf(mu, t) - oracle_cdf(nu, t); };
    Rational total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
        total += (cuts[i + 1] - cuts[i]) * H(mid) * H(a - mid);
    }
    return total;
}

/// Integral of (u - a)_+ against mu*mu + nu*nu - 2 mu*nu, pair by pair.
inline Rational oracle_hinge_gap(const Dist& mu, const Dist& nu, const Rational& a) {
    auto pairs = [&](const Dist& p, const Dist& q) {
        Rational s;
        for (const auto& [x, w] : p)
            for (const auto& [y, v] : q)
                if (x + y > a) s += (x + y - a) * w * v;
        return s;
    };
    return pairs(mu, mu) + pairs(nu, nu) - Rational(2) * pairs(mu, nu);
}

/// Equal mass, equal first moment and the hinge inequality at every atom.
inline bool oracle_leq_cx(const Dist& mu, const Dist& nu) {
    if (oracle_mass(mu) != oracle_mass(nu)) return false;
    if (oracle_first_moment(mu) != oracle_first_moment(nu)) return false;
    for (const Dist* d : {&mu, &nu})
        for (const auto& [x, w] : *d)
            if (oracle_hinge(mu, x) > oracle_hinge(nu, x)) return false;
    return true;
}

inline bool oracle_leq_st(const Dist& mu, const Dist& nu) {
    if (oracle_mass(mu) != oracle_mass(nu)) return false;
    for (const Dist* d : {&mu, &nu})
        for (const auto& [x, w] : *d)
            if (oracle_cdf(mu, x) < oracle_cdf(nu, x)) return false;
    return true;
}

/// Bernstein weights as the n-fold convolution of a Bernoulli law.
inline Dist oracle_binomial(unsigned n, const Rational& x) {
    Dist bern;
    if (x != Rational(1)) bern[Rational(0)] = Rational(1) - x;
    if (!x.is_zero()) bern[Rational(1)] = x;
    Dist out{{Rational(0), Rational(1)}};
    for (unsigned i = 0; i < n; ++i) out = oracle_convolve(out, bern);
    return out;
}

/// (1/m!) sum over all m! permutations of prod x_i^{p_pi(i)}.
inline Rational oracle_w(std::vector<unsigned> p, const std::vector<Rational>& xs) {
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rational total;
    long count = 0;
    do {
        Rational term(1);
        for (std::size_t i = 0; i < p.size(); ++i) term *= xs[i].pow(p[perm[i]]);
        total += term;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / Rational(count);
}

/// Coefficients of W^p over all permutations, keyed by exponent vector.
inline std::map<std::vector<unsigned>, Rational> oracle_w_poly(const std::vector<unsigned>& p) {
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::vector<unsigned>, Rational> out;
    long count = 0;
    do {
        std::vector<unsigned> e(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) e[i] = p[perm[i]];
        out[e] += Rational(1);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& [e, c] : out) c /= Rational(count);
    return out;
}

/// Karamata: p is majorized by q iff sums agree and sum (p_i - c)_+ <= sum (q_i - c)_+ for every c.
inline bool oracle_majorizes(const std::vector<unsigned>& p, const std::vector<unsigned>& q) {
    if (std::accumulate(p.begin(), p.end(), 0u) != std::accumulate(q.begin(), q.end(), 0u)) return false;
    const unsigned top = std::max(*std::max_element(p.begin(), p.end()), *std::max_element(q.begin(), q.end()));
    for (unsigned c = 0; c <= top; ++c) {
        unsigned sp = 0, sq = 0;
        for (unsigned v : p) sp += v > c ? v - c : 0;
        for (unsigned v : q) sq += v > c ? v - c : 0;
        if (sp > sq) return false;
    }
    return true;
}

/// Euler self-product of partial sums, via (b - a)^2 times 1/(1 - z)^2.
inline std::vector<Rational> oracle_euler_square(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                                 std::size_t count) {
    const std::size_t len = std::max(a.size(), b.size());
    std::vector<Rational> diff(len);
    for (std::size_t i = 0; i < len; ++i)
        diff[i] = (i < b.size() ? b[i] : Rational()) - (i < a.size() ? a[i] : Rational());
    std::vector<Rational> sq(2 * len);
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j) sq[i + j] += diff[i] * diff[j];
    std::vector<Rational> out(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t k = 0; k <= i && k < sq.size(); ++k)
            out[i] += Rational(static_cast<std::int64_t>(i - k + 1)) * sq[k];
    return out;
}

/// Law of sum_terms c * (X_1^{(1)} + ... + X_{e_1}^{(1)} + ...): every
/// monomial becomes the convolution of independent copies, enumerated atom
/// tuple by atom tuple.
inline Dist oracle_poly_eval(const std::map<std::vector<unsigned>, Rational>& terms, const std::vector<Dist>& ms) {
    Dist out;
    for (const auto& [e, c] : terms) {
        std::vector<const Dist*> factors;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) factors.push_back(&ms[i]);
        std::vector<Dist::const_iterator> it;
        for (const Dist* f : factors) it.push_back(f->begin());
        for (;;) {
            Rational x, w = c;
            for (const auto& i : it) {
                x += i->first;
                w *= i->second;
            }
            out[x] += w;
            std::size_t d = 0;
            while (d < it.size() && ++it[d] == factors[d]->end()) {
                it[d] = factors[d]->begin();
                ++d;
            }
            if (d == it.size()) break;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

} // namespace testsupport
