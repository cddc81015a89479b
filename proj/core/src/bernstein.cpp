#include "cxorder/bernstein.hpp"

#include <algorithm>
#include <thread>

#include "cxorder/error.hpp"
#include "cxorder/lattice.hpp"

namespace cxorder {

namespace {

void require_unit(const Rational& x, const char* what) {
    if (x.sign() < 0 || x > Rational(1))
        throw Error(ErrorKind::BadParameter, std::string(what) + " = " + x.str() + " is outside [0,1]");
}

void require_degree(unsigned n) {
    if (n < 1) throw Error(ErrorKind::BadParameter, "Bernstein degree must be at least 1");
}

std::vector<Rational> basis_row(unsigned n, const Rational& x) {
    std::vector<Rational> row(n + 1);
    for (unsigned i = 0; i <= n; ++i) row[i] = bernstein_basis(n, i, x);
    return row;
}

// Odometer over {0..n_1} x ... x {0..n_k}.
template <class F>
void for_each_index(std::span<const unsigned> ns, F&& visit) {
    std::vector<unsigned> idx(ns.size(), 0);
    while (true) {
        visit(idx);
        std::size_t pos = 0;
        while (pos < idx.size() && idx[pos] == ns[pos]) idx[pos++] = 0;
        if (pos == idx.size()) return;
        ++idx[pos];
    }
}

} // namespace

Rational bernstein_basis(unsigned n, unsigned i, const Rational& x) {
    if (i > n) return Rational();
    return binomial(n, i) * x.pow(i) * (Rational(1) - x).pow(n - i);
}

DiscreteMeasure binomial_measure(unsigned n, const Rational& x) {
    require_degree(n);
    require_unit(x, "x");
    std::vector<Atom> atoms;
    for (unsigned i = 0; i <= n; ++i) atoms.push_back({Rational(i), bernstein_basis(n, i, x)});
    return make_measure(std::move(atoms));
}

Rational rasa_gap(unsigned n, const Rational& x, const Rational& y, const ConvexTestFn& phi) {
    require_degree(n);
    require_unit(x, "x");
    require_unit(y, "y");
    const auto bx = basis_row(n, x), by = basis_row(n, y);
    const Rational two_n(2 * static_cast<std::int64_t>(n));
    Rational total;
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= n; ++j) {
            const Rational w = bx[i] * bx[j] + by[i] * by[j] - Rational(2) * bx[i] * by[j];
            if (!w.is_zero()) total += w * phi(Rational(i + j) / two_n);
        }
    return total;
}

Rational multi_rasa_gap(unsigned n, std::span<const Rational> xs, const ConvexTestFn& phi) {
    require_degree(n);
    if (xs.empty()) throw Error(ErrorKind::BadParameter, "need at least one point");
    for (const auto& x : xs) require_unit(x, "x");
    const std::size_t m = xs.size();
    std::vector<std::vector<Rational>> rows;
    for (const auto& x : xs) rows.push_back(basis_row(n, x));
    const Rational scale(static_cast<std::int64_t>(m * n));
    const std::vector<unsigned> ns(m, n);
    Rational total;
    for_each_index(std::span<const unsigned>(ns), [&](const std::vector<unsigned>& idx) {
        Rational diagonal, mixed(1);
        unsigned sum = 0;
        for (std::size_t l = 0; l < m; ++l) {
            Rational prod(1);
            for (std::size_t k = 0; k < m; ++k) prod *= rows[l][idx[k]];
            diagonal += prod;
            mixed *= rows[l][idx[l]];
            sum += idx[l];
        }
        const Rational w = diagonal - Rational(static_cast<std::int64_t>(m)) * mixed;
        if (!w.is_zero()) total += w * phi(Rational(sum) / scale);
    });
    return total;
}

Rational tensor_bernstein(const MultiFn& g, std::span<const unsigned> ns, std::span<const Rational> xs) {
    if (ns.size() != xs.size() || ns.size() != g.arity())
        throw Error(ErrorKind::BadParameter, "g, ns and points must have the same dimension");
    for (unsigned n : ns) require_degree(n);
    for (const auto& x : xs) require_unit(x, "x");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < ns.size(); ++i) rows.push_back(basis_row(ns[i], xs[i]));
    std::vector<Rational> nodes(ns.size());
    Rational total;
    for_each_index(ns, [&](const std::vector<unsigned>& idx) {
        Rational w(1);
        for (std::size_t i = 0; i < idx.size() && !w.is_zero(); ++i) w *= rows[i][idx[i]];
        if (w.is_zero()) return;
        for (std::size_t i = 0; i < idx.size(); ++i) nodes[i] = Rational(idx[i]) / Rational(ns[i]);
        total += w * g(nodes);
    });
    return total;
}

GavMode parse_gav_mode(std::string_view text) {
    if (text == "P1") return GavMode::P1;
    if (text == "P1p" || text == "P1'") return GavMode::P1Prime;
    if (text == "P3") return GavMode::P3;
    if (text == "P3p" || text == "P3'") return GavMode::P3Prime;
    throw ParseError(0, "unknown mode '" + std::string(text) + "' (expected P1, P1p, P3 or P3p)");
}

std::string to_string(GavMode mode) {
    switch (mode) {
    case GavMode::P1: return "P1";
    case GavMode::P1Prime: return "P1p";
    case GavMode::P3: return "P3";
    case GavMode::P3Prime: return "P3p";
    }
    return "?";
}

Rational gav_gap(GavMode mode, const MultiFn& g, std::span<const unsigned> ns, std::span<const Rational> points) {
    const std::size_t k = ns.size();
    if (points.size() != k || g.arity() != k)
        throw Error(ErrorKind::ModeArity, "mode " + to_string(mode) + " needs g, ns and points of one dimension");
    for (const auto& x : points) require_unit(x, "point");

    auto B = [&](std::vector<Rational> at) { return tensor_bernstein(g, ns, at); };
    auto diagonal = [&](const Rational& x) { return B(std::vector<Rational>(k, x)); };

    switch (mode) {
    case GavMode::P1:
    case GavMode::P1Prime: {
        if (k != 2 || ns[0] != ns[1]) throw Error(ErrorKind::ModeArity, to_string(mode) + " needs two variables with n1 = n2");
        const Rational& x = points[0];
        const Rational& y = points[1];
        const Rational same = diagonal(x) + diagonal(y);
        if (mode == GavMode::P1) return same - Rational(2) * B({x, y});
        return same - B({x, y}) - B({y, x});
    }
    case GavMode::P3: {
        Rational m;
        for (unsigned n : ns) m += Rational(n);
        Rational rhs;
        for (std::size_t i = 0; i < k; ++i) rhs += Rational(ns[i]) / m * diagonal(points[i]);
        return rhs - B(std::vector<Rational>(points.begin(), points.end()));
    }
    case GavMode::P3Prime: {
        Rational rhs, lhs;
        std::vector<Rational> shifted(points.begin(), points.end());
        for (std::size_t s = 0; s < k; ++s) {
            rhs += diagonal(points[s]);
            lhs += B(shifted);
            std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
        }
        return rhs - lhs;
    }
    }
    throw Error(ErrorKind::ModeArity, "unknown mode");
}

std::vector<Rational> unit_grid(unsigned den) {
    if (den == 0) throw Error(ErrorKind::BadParameter, "grid denominator must be positive");
    std::vector<Rational> g;
    for (unsigned i = 0; i <= den; ++i) g.emplace_back(i, den);
    return g;
}

std::vector<ScanRow> gav_scan(GavMode mode, const MultiFn& g, std::span<const unsigned> ns,
                              std::span<const Rational> grid, unsigned threads) {
    const std::size_t k = ns.size();
    std::vector<std::vector<Rational>> points;
    if (grid.empty()) return {};
    const std::vector<unsigned> top(k, static_cast<unsigned>(grid.size() - 1));
    for_each_index(std::span<const unsigned>(top), [&](const std::vector<unsigned>& idx) {
        std::vector<Rational> p(k);
        for (std::size_t i = 0; i < k; ++i) p[i] = grid[idx[i]];
        points.push_back(std::move(p));
    });
    std::sort(points.begin(), points.end());

    std::vector<ScanRow> rows(points.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, points.size())));
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < points.size(); i += threads)
                        rows[i] = {points[i], gav_gap(mode, g, ns, points[i])};
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

OrderVerdict supermodularity_check(const MultiFn& g, std::span<const Rational> grid) {
    if (g.arity() != 2) throw Error(ErrorKind::ModeArity, "supermodularity is checked for functions of two variables");
    // (y1-x1)(y2-x2) > 0 is symmetric under swapping the x and y points, so
    // x1 < y1, x2 < y2 covers every case.
    std::vector<Rational> p(2), q(2), r(2), s(2);
    for (const auto& x1 : grid)
        for (const auto& y1 : grid) {
            if (!(x1 < y1)) continue;
            for (const auto& x2 : grid)
                for (const auto& y2 : grid) {
                    if (!(x2 < y2)) continue;
                    p = {x1, x2}; q = {y1, y2}; r = {x1, y2}; s = {y1, x2};
                    const Rational gap = g(p) + g(q) - g(r) - g(s);
                    if (gap.sign() < 0) {
                        return OrderVerdict::fail({WitnessKind::Point, x1, gap,
                            "x1=" + x1.str() + " x2=" + x2.str() + " y1=" + y1.str() + " y2=" + y2.str()});
                    }
                }
        }
    return OrderVerdict::pass();
}

Rational eq6prim_gap(std::span<const unsigned> ns, std::span<const Rational> xs, const ConvexTestFn& phi) {
    if (ns.size() != xs.size() || ns.empty()) throw Error(ErrorKind::BadParameter, "ns and xs must be non-empty and of equal length");
    for (unsigned n : ns) require_degree(n);
    for (const auto& x : xs) require_unit(x, "x");
    unsigned m = 0;
    for (unsigned n : ns) m += n;
    const Rational mr(m);

    Rational rhs;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        Rational bm;  // (B_m phi)(x_i)
        for (unsigned s = 0; s <= m; ++s) bm += bernstein_basis(m, s, xs[i]) * phi(Rational(s) / mr);
        rhs += Rational(ns[i]) / mr * bm;
    }

    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < ns.size(); ++i) rows.push_back(basis_row(ns[i], xs[i]));
    Rational lhs;
    for_each_index(ns, [&](const std::vector<unsigned>& idx) {
        Rational w(1);
        unsigned sum = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            w *= rows[i][idx[i]];
            sum += idx[i];
        }
        if (!w.is_zero()) lhs += w * phi(Rational(sum) / mr);
    });
    return rhs - lhs;
}

P4Result gavrea_p4_sum(unsigned n, const Rational& x, const Rational& y, const ConvexTestFn& phi, const Rational& eps) {
    require_degree(n);
    const Rational one(1);
    if (x.sign() <= 0 || x >= one || y.sign() <= 0 || y >= one)
        throw Error(ErrorKind::BadParameter, "Problem 4 needs 0 < x, y < 1");
    if (eps.sign() <= 0) throw Error(ErrorKind::BadParameter, "eps must be positive");

    P4Result result;
    result.sup_phi = phi.sup_abs_on_unit();
    if (x == y) {
        // Every weight a_i a_j + a_i a_j - 2 a_i a_j vanishes.
        result.value = IntervalValue::point(Rational());
        return result;
    }

    const LatticeSeq a = truncated_family({FamilySpec::Kind::NegBinomial, n, x}, eps);
    const LatticeSeq b = truncated_family({FamilySpec::Kind::NegBinomial, n, y}, eps);
    result.terms_x = a.coeffs.size();
    result.terms_y = b.coeffs.size();

    // Group the double sum by s = i + j: W(s) = (a*a + b*b - 2 a*b)(s).
    std::vector<Rational> weight(std::max(2 * a.coeffs.size(), 2 * b.coeffs.size()) - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < a.coeffs.size(); ++j) weight[i + j] += a.coeffs[i] * a.coeffs[j];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) weight[i + j] += b.coeffs[i] * b.coeffs[j];
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) weight[i + j] -= Rational(2) * a.coeffs[i] * b.coeffs[j];

    const Rational two_n(2 * static_cast<std::int64_t>(n));
    for (std::size_t s = 0; s < weight.size(); ++s) {
        if (weight[s].is_zero()) continue;
        const Rational u(static_cast<std::int64_t>(s));
        result.truncated_sum += weight[s] * phi(u / (two_n + u));
    }

    // Outside the K x K box the weights a_i a_j, b_i b_j and 2 a_i b_j have
    // total mass at most 2 tail_x, 2 tail_y and 2 (tail_x + tail_y), and
    // |phi| <= M on [0, 1].
    result.tail_mass = a.tail_bound + b.tail_bound;
    result.radius = Rational(4) * result.sup_phi * result.tail_mass;
    result.value = IntervalValue::around(result.truncated_sum, result.radius);
    return result;
}

} // namespace cxorder
