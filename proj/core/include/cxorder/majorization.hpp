#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cxorder/rational.hpp"

namespace cxorder {

/// Tuple of non-negative integer exponents, length >= 1.
class ExponentTuple {
public:
    explicit ExponentTuple(std::vector<unsigned> entries);
    ExponentTuple(std::initializer_list<unsigned> entries) : ExponentTuple(std::vector<unsigned>(entries)) {}

    /// Comma-separated integers, e.g. "2,1,0".
    static ExponentTuple parse(std::string_view text);

    std::size_t size() const { return entries_.size(); }
    unsigned operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<unsigned>& entries() const { return entries_; }
    unsigned total() const;

    /// Non-increasing rearrangement.
    ExponentTuple sorted() const;

    std::string str() const;

    friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
    friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;

private:
    std::vector<unsigned> entries_;
};

/// p < q in the majorization quasiorder. Throws LengthMismatch.
bool majorizes(const ExponentTuple& p, const ExponentTuple& q);

/// The sorted tuples differ by a single unit moved from position l2 of p
/// to an earlier position l1. Throws LengthMismatch.
bool is_s_step(const ExponentTuple& p, const ExponentTuple& q);

/// Sorted chain p^ = p0 < p1 < ... < pI = q^, each consecutive pair an
/// S-step; empty when p^ = q^. Throws NotMajorized.
std::vector<ExponentTuple> s_step_chain(const ExponentTuple& p, const ExponentTuple& q);

/// Calls `visit(arrangement)` once for every distinct permutation of
/// `exponents`.
void for_each_arrangement(const ExponentTuple& exponents, const std::function<void(const std::vector<unsigned>&)>& visit);

/// (number of permutations producing one distinct arrangement) / m!, i.e.
/// prod(multiplicity!) / m!.
Rational arrangement_weight(const ExponentTuple& exponents);

/// W^p evaluated at positive rationals.
Rational w_value(const ExponentTuple& p, std::span<const Rational> xs);

struct MuirheadValues {
    Rational lhs;  // W^p(xs)
    Rational rhs;  // W^q(xs)
};

/// Throws NotMajorized, NonPositiveInput, LengthMismatch.
MuirheadValues muirhead_scalar(const ExponentTuple& p, const ExponentTuple& q, std::span<const Rational> xs);

} // namespace cxorder
