#include "kss/rat.hpp"

#include <stdexcept>

namespace kss {

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

Rat rat_from_string(const std::string& s) {
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("not a rational string: '" + s + "'");
  };
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t num_begin = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == num_begin) return fail();
  Int num(s.substr(0, i));
  if (i == s.size()) return Rat(num);
  if (s[i] != '/') return fail();
  ++i;
  std::size_t den_begin = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == den_begin || i != s.size()) return fail();
  Int den(s.substr(den_begin));
  if (den == 0) return fail();
  return Rat(num, den);
}

Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

Int rat_ceil(const Rat& r) { return -floor_div(-numerator(r), denominator(r)); }

}  // namespace kss
