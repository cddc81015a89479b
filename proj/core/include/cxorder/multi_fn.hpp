#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cxorder/rational.hpp"
#include "cxorder/test_fn.hpp"

namespace cxorder {

/// Function of k variables on [0,1]^k built from a few exactly evaluable
/// atoms. Used as the g of the Bernstein-operator scanners.
class MultiFn {
public:
    /// c * prod u_i^{e_i}
    struct Mono { Rational c; std::vector<unsigned> exps; };
    /// c * |u_i - u_j|
    struct AbsDiff { std::size_t i; std::size_t j; Rational c; };
    /// c * (sum a_i u_i - knot)_+
    struct Hinge { Rational c; Rational knot; std::vector<Rational> weights; };
    /// c * (sum a_i u_i + offset)^power
    struct PowLin { Rational c; unsigned power; Rational offset; std::vector<Rational> weights; };
    /// phi(sum a_i u_i)
    struct Composed { ConvexTestFn phi; std::vector<Rational> weights; };

    using Atom = std::variant<Mono, AbsDiff, Hinge, PowLin, Composed>;

    struct Certificate {
        bool holds = false;
        bool heuristic = false;  // grid-checked rather than proved
    };

    explicit MultiFn(std::size_t arity);

    static MultiFn mono(Rational c, std::vector<unsigned> exps);
    static MultiFn abs_diff(std::size_t arity, std::size_t i, std::size_t j, Rational c = Rational(1));
    static MultiFn hinge(Rational c, Rational knot, std::vector<Rational> weights);
    static MultiFn pow_lin(Rational c, unsigned power, Rational offset, std::vector<Rational> weights);
    /// phi applied to a linear form, e.g. phi((u+v)/2).
    static MultiFn composed(ConvexTestFn phi, std::vector<Rational> weights);

    MultiFn& operator+=(const MultiFn& o);
    friend MultiFn operator+(MultiFn a, const MultiFn& b) { return a += b; }

    std::size_t arity() const { return arity_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    Rational operator()(std::span<const Rational> u) const;

    /// Convex on [0,1]^k, proved atom by atom.
    Certificate convex_certificate() const;
    /// Supermodular on [0,1]^k, proved atom by atom when possible, otherwise
    /// checked on `grid` and flagged heuristic.
    Certificate supermodular_certificate(std::span<const Rational> grid) const;

    std::string str() const;

private:
    std::size_t arity_;
    std::vector<Atom> atoms_;
};

} // namespace cxorder
