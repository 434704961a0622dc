#ifndef EXTBRANCH_RATIONAL_HPP
#define EXTBRANCH_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace extbranch {

// Exact rational scalar used throughout; no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p/q" or "p/q"; whitespace is not accepted.
Rat rat_from_string(const std::string& s);

// Emits "p" when the denominator is 1, otherwise "p/q", always reduced.
std::string rat_to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor of an exact rational as a long (values here are tiny).
long rat_floor(const Rat& r);

}  // namespace extbranch

#endif
