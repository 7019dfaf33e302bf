#pragma once

#include <gmpxx.h>

#include <string>

#include "ysl/error.hpp"

namespace ysl {

// Exact rational scalar.  mpq_class keeps gcd(|num|, den) = 1 and den > 0
// once canonicalized; every constructor below canonicalizes.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw NotInvertibleError("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q" or "p" with optional sign, as used in configs and reports.
inline Rat rat_parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(text);
      r.canonicalize();
      return r;
    }
    Rat r(text.substr(0, slash) + "/" + text.substr(slash + 1));
    r.canonicalize();
    if (r.get_den() == 0) throw ConfigError("rat_parse: zero denominator in '" + text + "'");
    return r;
  } catch (const std::invalid_argument&) {
    throw ConfigError("rat_parse: malformed rational '" + text + "'");
  }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// Integer square root if r is the square of a non-negative rational.
inline bool rat_exact_sqrt(const Rat& r, Rat* root) {
  if (sgn(r) < 0) return false;
  mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  *root = Rat(rn, rd);
  root->canonicalize();
  return true;
}

inline long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r)) throw Error("rat_to_long: not an integer: " + rat_str(r));
  if (!r.get_num().fits_slong_p()) throw Error("rat_to_long: out of range");
  return r.get_num().get_si();
}

}  // namespace ysl
