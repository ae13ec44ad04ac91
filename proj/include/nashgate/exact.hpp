#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>

#include "nashgate/diagnostics.hpp"

namespace nashgate {

// Arbitrary-precision integers and rationals. Every verdict in this library
// is computed in these types; no floating point enters any decision path.
using big_int = boost::multiprecision::cpp_int;
using big_rat = boost::multiprecision::cpp_rational;

inline big_int rat_num(const big_rat& q) { return boost::multiprecision::numerator(q); }
inline big_int rat_den(const big_rat& q) { return boost::multiprecision::denominator(q); }

// cpp_rational is kept in lowest terms with positive denominator, so
// integrality is exactly "denominator == 1".
inline bool is_integer(const big_rat& q) { return rat_den(q) == 1; }

inline long long to_ll(const big_int& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw error(errc::internal, "integer result exceeds 64-bit range: " + v.str());
    return v.convert_to<long long>();
}

inline long long to_ll(const big_rat& q) {
    if (!is_integer(q))
        throw error(errc::internal, "expected integral rational, got " + q.str());
    return to_ll(rat_num(q));
}

}  // namespace nashgate
