#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cxorder/conv_poly.hpp"
#include "cxorder/multi_fn.hpp"
#include "cxorder/rational.hpp"
#include "cxorder/test_fn.hpp"

namespace cxorder {

/// Grammar (whitespace-separated, fractions as in Rational::parse):
///
///   fn   := 'affine' a b | 'quad' c | 'hinge' A c | 'sum(' fn {',' fn} ')'
///
/// The result is not checked for convexity; callers that need it call
/// require_convex().
ConvexTestFn parse_test_fn(std::string_view text);

/// Terms "c * x1^a x2^b" joined by '+' or '-'. The coefficient and the '*'
/// are optional ("x1 x2", "3"). `arity` 0 means the largest variable index.
MVPolynomial parse_polynomial(std::string_view text, std::size_t arity = 0);

/// Grammar for functions of `arity` variables u1..uk:
///
///   g    := 'mono' c e1..ek | 'absdiff' i j c | 'hinge' c A a1..ak
///         | 'pow' c p b a1..ak | 'phi[' fn ']' a1..ak | 'sum(' g {',' g} ')'
///
/// Variable indices in absdiff are 1-based.
MultiFn parse_multi_fn(std::string_view text, std::size_t arity);

/// "1/2,3/4,1".
std::vector<Rational> parse_rational_list(std::string_view text);

/// "1,2,3".
std::vector<unsigned> parse_unsigned_list(std::string_view text);

} // namespace cxorder
