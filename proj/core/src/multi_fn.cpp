#include "cxorder/multi_fn.hpp"

#include <sstream>

#include "cxorder/error.hpp"

namespace cxorder {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational linear(std::span<const Rational> w, std::span<const Rational> u) {
    Rational s;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * u[i];
    return s;
}

bool pairwise_nonneg(std::span<const Rational> w) {
    bool pos = false, neg = false;
    for (const auto& a : w) {
        pos |= a.sign() > 0;
        neg |= a.sign() < 0;
    }
    return !(pos && neg);
}

std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (const auto& r : v) s += " " + r.str();
    return s;
}

} // namespace

MultiFn::MultiFn(std::size_t arity) : arity_(arity) {
    if (arity_ == 0) throw Error(ErrorKind::ArityMismatch, "function arity must be at least 1");
}

MultiFn MultiFn::mono(Rational c, std::vector<unsigned> exps) {
    MultiFn f(exps.size());
    f.atoms_.emplace_back(Mono{std::move(c), std::move(exps)});
    return f;
}

MultiFn MultiFn::abs_diff(std::size_t arity, std::size_t i, std::size_t j, Rational c) {
    if (i >= arity || j >= arity) throw Error(ErrorKind::ArityMismatch, "absdiff index out of range");
    MultiFn f(arity);
    f.atoms_.emplace_back(AbsDiff{i, j, std::move(c)});
    return f;
}

MultiFn MultiFn::hinge(Rational c, Rational knot, std::vector<Rational> weights) {
    MultiFn f(weights.size());
    f.atoms_.emplace_back(Hinge{std::move(c), std::move(knot), std::move(weights)});
    return f;
}

MultiFn MultiFn::pow_lin(Rational c, unsigned power, Rational offset, std::vector<Rational> weights) {
    MultiFn f(weights.size());
    f.atoms_.emplace_back(PowLin{std::move(c), power, std::move(offset), std::move(weights)});
    return f;
}

MultiFn MultiFn::composed(ConvexTestFn phi, std::vector<Rational> weights) {
    MultiFn f(weights.size());
    f.atoms_.emplace_back(Composed{std::move(phi), std::move(weights)});
    return f;
}

MultiFn& MultiFn::operator+=(const MultiFn& o) {
    if (o.arity_ != arity_) throw Error(ErrorKind::ArityMismatch, "cannot add functions of different arity");
    atoms_.insert(atoms_.end(), o.atoms_.begin(), o.atoms_.end());
    return *this;
}

Rational MultiFn::operator()(std::span<const Rational> u) const {
    if (u.size() != arity_) throw Error(ErrorKind::ArityMismatch, "evaluation point has the wrong length");
    Rational total;
    for (const auto& atom : atoms_) {
        total += std::visit(overloaded{
            [&](const Mono& a) {
                Rational v = a.c;
                for (std::size_t i = 0; i < a.exps.size(); ++i)
                    if (a.exps[i] > 0) v *= u[i].pow(a.exps[i]);
                return v;
            },
            [&](const AbsDiff& a) { return a.c * (u[a.i] - u[a.j]).abs(); },
            [&](const Hinge& a) { return a.c * positive_part(linear(a.weights, u) - a.knot); },
            [&](const PowLin& a) { return a.c * (linear(a.weights, u) + a.offset).pow(a.power); },
            [&](const Composed& a) { return a.phi(linear(a.weights, u)); },
        }, atom);
    }
    return total;
}

MultiFn::Certificate MultiFn::convex_certificate() const {
    for (const auto& atom : atoms_) {
        const bool ok = std::visit(overloaded{
            [](const Mono& a) {
                unsigned degree = 0, vars = 0;
                for (unsigned e : a.exps) {
                    degree += e;
                    vars += e > 0;
                }
                // Affine, or c * u_i^e with c >= 0 (convex on u_i >= 0).
                return degree <= 1 || (vars == 1 && a.c.sign() >= 0);
            },
            [](const AbsDiff& a) { return a.c.sign() >= 0; },
            [](const Hinge& a) { return a.c.sign() >= 0; },
            [](const PowLin& a) { return a.power <= 1 || (a.c.sign() >= 0 && a.power % 2 == 0); },
            [](const Composed& a) { return a.phi.certified_convex(); },
        }, atom);
        if (!ok) return {false, false};
    }
    return {true, false};
}

MultiFn::Certificate MultiFn::supermodular_certificate(std::span<const Rational> grid) const {
    // Sufficient atom-wise conditions on non-negative coordinates: every
    // mixed second difference is >= 0.
    bool proved = true;
    for (const auto& atom : atoms_) {
        const bool ok = std::visit(overloaded{
            [](const Mono& a) {
                unsigned vars = 0;
                for (unsigned e : a.exps) vars += e > 0;
                return vars <= 1 || a.c.sign() >= 0;
            },
            [](const AbsDiff& a) { return a.i == a.j || a.c.sign() <= 0; },
            [](const Hinge& a) { return a.c.sign() == 0 || pairwise_nonneg(a.weights); },
            [](const PowLin& a) {
                return a.power <= 1 || (a.c.sign() >= 0 && a.power % 2 == 0 && pairwise_nonneg(a.weights));
            },
            [](const Composed& a) { return a.phi.certified_convex() && pairwise_nonneg(a.weights); },
        }, atom);
        if (!ok) {
            proved = false;
            break;
        }
    }
    if (proved) return {true, false};
    if (arity_ != 2) return {false, true};

    std::vector<Rational> a(2), b(2), c(2), d(2);
    for (const auto& x1 : grid)
        for (const auto& y1 : grid) {
            if (!(x1 < y1)) continue;
            for (const auto& x2 : grid)
                for (const auto& y2 : grid) {
                    if (!(x2 < y2)) continue;
                    a = {x1, x2}; b = {y1, y2}; c = {x1, y2}; d = {y1, x2};
                    if ((*this)(a) + (*this)(b) < (*this)(c) + (*this)(d)) return {false, true};
                }
        }
    return {true, true};
}

std::string MultiFn::str() const {
    std::vector<std::string> parts;
    for (const auto& atom : atoms_) {
        parts.push_back(std::visit(overloaded{
            [](const Mono& a) {
                std::string s = "mono " + a.c.str();
                for (unsigned e : a.exps) s += " " + std::to_string(e);
                return s;
            },
            [](const AbsDiff& a) { return "absdiff " + std::to_string(a.i + 1) + " " + std::to_string(a.j + 1) + " " + a.c.str(); },
            [](const Hinge& a) { return "hinge " + a.c.str() + " " + a.knot.str() + join(a.weights); },
            [](const PowLin& a) { return "pow " + a.c.str() + " " + std::to_string(a.power) + " " + a.offset.str() + join(a.weights); },
            [](const Composed& a) { return "phi[" + a.phi.str() + "]" + join(a.weights); },
        }, atom));
    }
    if (parts.empty()) return "sum()";
    if (parts.size() == 1) return parts.front();
    std::ostringstream os;
    os << "sum(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? ", " : "") << parts[i];
    os << ")";
    return os.str();
}

} // namespace cxorder
