#pragma once

#include <string>
#include <vector>

#include "ysl/mpoly.hpp"

namespace ysl {

// Rational function kept unreduced: equality is decided by cross
// multiplication, so no multivariate gcd is ever required.  The denominator
// is held as a multiset of monic factors; sums use the factor lcm and
// products cancel factors by exact trial division, which keeps the
// denominators from squaring under repeated arithmetic (they stay inside the
// multiplicative set the difference algebra is localized at).
class RatFn {
 public:
  RatFn() = default;  // zero
  RatFn(const MPoly& num);  // NOLINT(google-explicit-constructor)
  RatFn(MPoly num, const MPoly& den);
  static RatFn with_den_factors(MPoly num, std::vector<MPoly> factors);

  static RatFn constant(const VarSetPtr& vars, const KScalar& c) {
    return RatFn(MPoly::constant(vars, c));
  }

  bool is_zero() const { return num_.is_zero(); }
  const MPoly& num() const { return num_; }
  MPoly den() const;  // expanded product of the factors
  const std::vector<std::pair<MPoly, int>>& den_factors() const { return den_; }

  RatFn operator-() const;
  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  RatFn inverse() const;
  RatFn& scale(const KScalar& c);

  // Cross-multiplication equality: a.num*b.den == b.num*a.den.
  bool eq(const RatFn& o) const;
  int cmp(const RatFn& o) const;  // representation order, deterministic

  RatFn shift_var(int idx, const KScalar& c) const;

  std::string str() const;
  void compact_key(std::string* out) const;

 private:
  MPoly num_;
  std::vector<std::pair<MPoly, int>> den_;  // monic factors, sorted, exp >= 1

  void push_factor(MPoly f, int exp);
  void cancel_factors();
  friend class DiffOp;
};

}  // namespace ysl
