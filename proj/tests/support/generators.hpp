#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cxorder/majorization.hpp"
#include "cxorder/measure.hpp"
#include "cxorder/test_fn.hpp"

namespace testsupport {

using cxorder::Atom;
using cxorder::DiscreteMeasure;
using cxorder::Rational;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// p/q with |p| <= span * q, q in 1..max_den.
    Rational small_rational(int span = 4, int max_den = 4) {
        const int q = integer(1, max_den);
        return Rational(integer(-span * q, span * q), q);
    }
    Rational positive_rational(int max_num = 9, int max_den = 5) {
        return Rational(integer(1, max_num), integer(1, max_den));
    }

    /// Random measure with 1..max_atoms atoms, rescaled to `mass`.
    DiscreteMeasure measure(int max_atoms = 8, const Rational& mass = Rational(1)) {
        std::vector<Atom> atoms;
        const int k = integer(1, max_atoms);
        for (int i = 0; i < k; ++i) atoms.push_back({small_rational(), positive_rational()});
        return rescale(cxorder::make_measure(std::move(atoms)), mass);
    }

    /// Atoms on 0..top.
    DiscreteMeasure lattice_measure(int max_atoms = 6, int top = 8, const Rational& mass = Rational(1)) {
        std::vector<Atom> atoms;
        const int k = integer(1, max_atoms);
        for (int i = 0; i < k; ++i) atoms.push_back({Rational(integer(0, top)), positive_rational()});
        return rescale(cxorder::make_measure(std::move(atoms)), mass);
    }

    /// nu is mu with every atom pushed right by a random amount (possibly
    /// split in two), so mu <=st nu through the coupling (X, X + D), D >= 0.
    std::pair<DiscreteMeasure, DiscreteMeasure> st_pair(bool lattice = false) {
        const DiscreteMeasure mu = lattice ? lattice_measure(5, 6) : measure(6);
        std::vector<Atom> moved;
        for (const Atom& a : mu.atoms()) {
            auto shift = [&] { return lattice ? Rational(integer(0, 3)) : Rational(integer(0, 6), integer(1, 3)); };
            if (coin()) {
                const Rational part = a.w * Rational(integer(1, 3), 4);
                moved.push_back({a.x + shift(), part});
                moved.push_back({a.x + shift(), a.w - part});
            } else {
                moved.push_back({a.x + shift(), a.w});
            }
        }
        return {mu, cxorder::make_measure(std::move(moved))};
    }

    /// Non-negative combination of hinges, a quadratic and an affine part.
    cxorder::ConvexTestFn convex_fn(int hinges = 3) {
        auto f = cxorder::ConvexTestFn::affine(small_rational(), small_rational());
        if (coin()) f += cxorder::ConvexTestFn::quad(Rational(integer(0, 4), integer(1, 3)));
        const int k = integer(1, hinges);
        for (int i = 0; i < k; ++i)
            f += cxorder::ConvexTestFn::hinge(Rational(integer(0, 8), 8), Rational(integer(1, 5), integer(1, 3)));
        return f;
    }

    /// Exponent tuple q, then p obtained by random Robin Hood transfers, so p is majorized by q.
    std::pair<cxorder::ExponentTuple, cxorder::ExponentTuple> majorized_pair(int m, int max_entry) {
        std::vector<unsigned> q(static_cast<std::size_t>(m));
        for (auto& e : q) e = static_cast<unsigned>(integer(0, max_entry));
        std::vector<unsigned> p = q;
        const int moves = integer(0, 2 * m);
        for (int t = 0; t < moves; ++t) {
            const auto i = static_cast<std::size_t>(integer(0, m - 1));
            const auto j = static_cast<std::size_t>(integer(0, m - 1));
            if (p[i] >= p[j] + 2) {
                --p[i];
                ++p[j];
            }
        }
        std::shuffle(p.begin(), p.end(), rng_);
        return {cxorder::ExponentTuple(p), cxorder::ExponentTuple(q)};
    }

    std::mt19937_64& engine() { return rng_; }

private:
    static DiscreteMeasure rescale(const DiscreteMeasure& m, const Rational& mass) {
        std::vector<Atom> atoms;
        const Rational k = mass / m.mass();
        for (const Atom& a : m.atoms()) atoms.push_back({a.x, a.w * k});
        return cxorder::make_measure(std::move(atoms));
    }

    std::mt19937_64 rng_;
};

} // namespace testsupport
