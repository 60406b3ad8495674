#ifndef KSS_RAT_HPP
#define KSS_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kss {

// Exact arbitrary-precision rational scalar. cpp_rational keeps values in
// lowest terms with positive denominator, so equality and ordering are exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Serializes as "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

// Parses "p" or "p/q" with optional leading '-'. Decimal notation is
// rejected: all I/O stays exact.
Rat rat_from_string(const std::string& s);

Int floor_div(const Int& num, const Int& den);
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

inline int sign(const Rat& r) { return r.sign(); }

}  // namespace kss

#endif
