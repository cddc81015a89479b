#pragma once

#include <ostream>
#include <string>

#include "cli.hpp"
#include "cxorder/order.hpp"
#include "cxorder/rational.hpp"

namespace cxorder::cli {

struct Output {
    std::ostream& out;
    std::ostream& err;
    int decimal = 0;  // extra digits shown next to fractions, 0 = off
    bool csv = false;

    std::string num(const Rational& r) const {
        if (decimal <= 0) return r.str();
        return r.str() + " (~" + r.decimal(decimal) + ")";
    }
    static std::string csv_pair(const Rational& r) {
        return r.numerator().get_str() + "," + r.denominator().get_str();
    }
};

inline int exit_code(const OrderVerdict& v) {
    if (!v.conclusive) return Inconclusive;
    return v.holds ? Holds : Fails;
}

inline int sign_exit(const Rational& gap) { return gap.sign() < 0 ? Fails : Holds; }

/// Cases: example-3, gavrea-p4, absdiff, rasa-binomial.
int reproduce(const std::string& which, const Rational& eps, const Output& o);

} // namespace cxorder::cli
