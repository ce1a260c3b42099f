#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "curvex/errors.hpp"

namespace curvex {

// All scalar arithmetic in this library is exact. Rat is an arbitrary-precision
// rational kept in lowest terms with positive denominator; BigInt is its
// integer counterpart. No operation ever rounds.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(BigInt num, BigInt den = 1) {
    if (den == 0) throw InvalidParameter("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

// "p" when the value is an integer, otherwise "p/q".
inline std::string rat_str(const Rat& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Always "p/q", even for integers.
inline std::string rat_fraction_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_rat(std::string_view text) {
    auto bad = [&] { throw InvalidParameter("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part) -> BigInt {
        if (part.empty()) bad();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) bad();
        for (std::size_t j = i; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9') bad();
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) bad();
    return make_rat(std::move(num), std::move(den));
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace curvex
