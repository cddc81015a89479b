#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cxorder/interval.hpp"
#include "cxorder/measure.hpp"
#include "cxorder/multi_fn.hpp"
#include "cxorder/order.hpp"
#include "cxorder/test_fn.hpp"

namespace cxorder {

/// b_{n,i}(x) = C(n,i) x^i (1-x)^{n-i}.
Rational bernstein_basis(unsigned n, unsigned i, const Rational& x);

/// B(n, x) with atoms (i, b_{n,i}(x)). Throws BadParameter.
DiscreteMeasure binomial_measure(unsigned n, const Rational& x);

/// sum_{i,j} (b_i(x) b_j(x) + b_i(y) b_j(y) - 2 b_i(x) b_j(y)) phi((i+j)/(2n)).
Rational rasa_gap(unsigned n, const Rational& x, const Rational& y, const ConvexTestFn& phi);

/// sum over (i_1..i_m) of (sum_l prod_k b_{i_k}(x_l) - m prod_k b_{i_k}(x_k))
/// times phi((i_1+...+i_m)/(mn)).
Rational multi_rasa_gap(unsigned n, std::span<const Rational> xs, const ConvexTestFn& phi);

/// (B_{n_1..n_k} g)(x_1..x_k).
Rational tensor_bernstein(const MultiFn& g, std::span<const unsigned> ns, std::span<const Rational> xs);

enum class GavMode { P1, P1Prime, P3, P3Prime };

/// "P1", "P1p" (or "P1'"), "P3", "P3p" (or "P3'").
GavMode parse_gav_mode(std::string_view text);
std::string to_string(GavMode mode);

/// Left-minus-right gap of the selected inequality; >= 0 means it holds at
/// `points`. P1/P1' need k = 2 and n_1 = n_2. Throws BadParameter, ModeArity.
Rational gav_gap(GavMode mode, const MultiFn& g, std::span<const unsigned> ns, std::span<const Rational> points);

struct ScanRow {
    std::vector<Rational> point;
    Rational gap;
};

/// gav_gap at every point of grid^k, rows in lexicographic grid order.
/// Points are evaluated on worker threads; the output order is fixed.
std::vector<ScanRow> gav_scan(GavMode mode, const MultiFn& g, std::span<const unsigned> ns,
                              std::span<const Rational> grid, unsigned threads = 0);

/// k/den for k = 0..den.
std::vector<Rational> unit_grid(unsigned den);

/// g(x1,x2) + g(y1,y2) >= g(x1,y2) + g(y1,x2) for all grid quadruples with
/// (y1-x1)(y2-x2) > 0. The witness point is x1 and its context lists the
/// quadruple; gap = lhs - rhs.
OrderVerdict supermodularity_check(const MultiFn& g, std::span<const Rational> grid);

/// sum_i (n_i/m) (B_m phi)(x_i) minus the mixed sum with phi((i_1+..+i_k)/m),
/// m = sum n_i.
Rational eq6prim_gap(std::span<const unsigned> ns, std::span<const Rational> xs, const ConvexTestFn& phi);

struct P4Result {
    IntervalValue value;
    Rational truncated_sum;
    Rational radius;      // |value - truncated_sum| <= radius
    Rational tail_mass;   // tail_x + tail_y
    Rational sup_phi;     // M
    std::size_t terms_x;  // K_x + 1
    std::size_t terms_y;
};

/// Encloses sum_{i,j} (a_i(x)a_j(x) + a_i(y)a_j(y) - 2a_i(x)a_j(y))
/// phi((i+j)/(2n+i+j)) with a_k the negative binomial weights
/// C(n+k,k)(1-x)^{n+1}x^k. radius = 4 * M * (tail_x + tail_y).
/// Throws BadParameter.
P4Result gavrea_p4_sum(unsigned n, const Rational& x, const Rational& y, const ConvexTestFn& phi, const Rational& eps);

} // namespace cxorder
