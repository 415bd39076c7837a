#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "nilpoisson/errors.hpp"

namespace nilpoisson {

// mpq_class uses expression templates: never bind a Rat expression to auto.
using Rat = mpq_class;

Rat parse_rat(std::string_view s);

inline Rat rat(long p, long q = 1) {
  if (q == 0) throw DomainError("zero denominator");
  Rat r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}
std::string to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat inverse(const Rat& r) {
  if (is_zero(r)) throw NotInvertible("inverse of zero rational");
  Rat out = 1 / r;
  return out;
}

Rat pow(const Rat& r, long e);

// Exact integer root of a rational, if there is one.
bool exact_root(const Rat& q, unsigned m, Rat& out);

}  // namespace nilpoisson
