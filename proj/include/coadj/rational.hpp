#ifndef COADJ_RATIONAL_HPP_
#define COADJ_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace coadj {

// Exact rational scalar. Every geometric predicate in the library is an
// exact comparison on these; floating point only appears in the numeric
// character oracles.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

// Serialize as "p" or "p/q", q > 0.
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

// Parse "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
  auto bad = [&]() -> Rat {
    throw std::invalid_argument("not a rational: '" + s + "'");
  };
  if (s.empty()) return bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) return bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    return bad();
  }
}

}  // namespace coadj

#endif  // COADJ_RATIONAL_HPP_
