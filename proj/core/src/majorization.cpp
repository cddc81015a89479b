#include "cxorder/majorization.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cxorder/error.hpp"

namespace cxorder {

ExponentTuple::ExponentTuple(std::vector<unsigned> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorKind::BadParameter, "exponent tuple must be non-empty");
}

ExponentTuple ExponentTuple::parse(std::string_view text) {
    std::vector<unsigned> out;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        const std::size_t start = pos;
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
            if (v > 1000000) throw ParseError(start, "exponent too large");
            ++pos;
        }
        if (pos == start) throw ParseError(pos, "expected a non-negative integer");
        out.push_back(static_cast<unsigned>(v));
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError(pos, "expected ','");
        ++pos;
    }
    return ExponentTuple(std::move(out));
}

unsigned ExponentTuple::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0u); }

ExponentTuple ExponentTuple::sorted() const {
    auto e = entries_;
    std::sort(e.begin(), e.end(), std::greater<>());
    return ExponentTuple(std::move(e));
}

std::string ExponentTuple::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) s += (i ? "," : "") + std::to_string(entries_[i]);
    return s + ")";
}

namespace {

void require_same_length(const ExponentTuple& p, const ExponentTuple& q) {
    if (p.size() != q.size())
        throw Error(ErrorKind::LengthMismatch, p.str() + " and " + q.str() + " have different lengths");
}

} // namespace

bool majorizes(const ExponentTuple& p, const ExponentTuple& q) {
    require_same_length(p, q);
    const auto ps = p.sorted(), qs = q.sorted();
    unsigned long sp = 0, sq = 0;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        sp += ps[k];
        sq += qs[k];
        if (sp > sq) return false;
    }
    return sp == sq;
}

bool is_s_step(const ExponentTuple& p, const ExponentTuple& q) {
    require_same_length(p, q);
    const auto ps = p.sorted(), qs = q.sorted();
    std::size_t up = ps.size(), down = ps.size();
    for (std::size_t l = 0; l < ps.size(); ++l) {
        const long diff = static_cast<long>(qs[l]) - static_cast<long>(ps[l]);
        if (diff == 0) continue;
        if (diff == 1 && up == ps.size()) up = l;
        else if (diff == -1 && down == ps.size()) down = l;
        else return false;
    }
    return up < down && down < ps.size();
}

std::vector<ExponentTuple> s_step_chain(const ExponentTuple& p, const ExponentTuple& q) {
    if (!majorizes(p, q)) throw Error(ErrorKind::NotMajorized, p.str() + " is not majorized by " + q.str());
    const auto target = q.sorted();
    auto running = p.sorted().entries();
    std::vector<ExponentTuple> chain;
    if (running == target.entries()) return chain;
    chain.emplace_back(running);

    // Move one unit to the first position that differs from the target
    // (necessarily short) from the first position after it that is above.
    // Taking the last position above instead can leave the order: (3,3,1,1)
    // toward (4,2,2,0) would step to (4,3,1,0).
    while (running != target.entries()) {
        std::size_t deficit = 0;
        while (running[deficit] == target[deficit]) ++deficit;
        std::size_t excess = deficit + 1;
        while (running[excess] <= target[excess]) ++excess;
        ++running[deficit];
        --running[excess];
        std::sort(running.begin(), running.end(), std::greater<>());
        chain.emplace_back(running);
    }

    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!is_s_step(chain[i - 1], chain[i]) || !majorizes(chain[i], target))
            throw Error(ErrorKind::NotMajorized, "internal: chain step " + chain[i - 1].str() + " -> " + chain[i].str() + " is invalid");
    }
    return chain;
}

void for_each_arrangement(const ExponentTuple& exponents, const std::function<void(const std::vector<unsigned>&)>& visit) {
    auto a = exponents.entries();
    std::sort(a.begin(), a.end());
    do {
        visit(a);
    } while (std::next_permutation(a.begin(), a.end()));
}

Rational arrangement_weight(const ExponentTuple& exponents) {
    const auto s = exponents.sorted();
    mpz_class num = 1, den = 1, f;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == s[i - 1]) {
            ++run;
            continue;
        }
        mpz_fac_ui(f.get_mpz_t(), run);
        num *= f;
        run = 1;
    }
    mpz_fac_ui(den.get_mpz_t(), s.size());
    return Rational(mpq_class(num, den));
}

Rational w_value(const ExponentTuple& p, std::span<const Rational> xs) {
    if (xs.size() != p.size()) throw Error(ErrorKind::LengthMismatch, "need one value per exponent");
    Rational sum;
    for_each_arrangement(p, [&](const std::vector<unsigned>& a) {
        Rational term(1);
        for (std::size_t i = 0; i < a.size(); ++i) term *= xs[i].pow(a[i]);
        sum += term;
    });
    return sum * arrangement_weight(p);
}

MuirheadValues muirhead_scalar(const ExponentTuple& p, const ExponentTuple& q, std::span<const Rational> xs) {
    if (!majorizes(p, q)) throw Error(ErrorKind::NotMajorized, p.str() + " is not majorized by " + q.str());
    if (xs.size() != p.size()) throw Error(ErrorKind::LengthMismatch, "need one value per exponent");
    for (const auto& x : xs)
        if (x.sign() <= 0) throw Error(ErrorKind::NonPositiveInput, "input " + x.str() + " is not positive");
    return {w_value(p, xs), w_value(q, xs)};
}

} // namespace cxorder
