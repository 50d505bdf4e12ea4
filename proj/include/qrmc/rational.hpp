#pragma once

/// Exact rational values. boost::rational keeps gcd(|num|, den) = 1 and
/// den > 0 as invariants, which is exactly the representation the rank
/// tables need.

#include <string>

#include <boost/rational.hpp>

namespace qrmc {

using Rat = boost::rational<long long>;

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace qrmc
