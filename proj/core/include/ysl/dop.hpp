#pragma once

#include <map>
#include <string>
#include <utility>

#include "ysl/kscalar.hpp"

namespace ysl {

// Differential operators on C^x: sums c_{m,n} del^m z^n with del left of z,
// n any integer, m >= 0.  Products use del z = z del + 1 exactly.
class DOp {
 public:
  DOp() = default;

  static DOp constant(const KScalar& c);
  static DOp z(int n = 1);    // z^n, n may be negative
  static DOp del(int m = 1);  // (d/dz)^m
  static DOp term(int m, int n, const KScalar& c);

  bool is_zero() const { return terms_.empty(); }

  DOp operator-() const;
  DOp& operator+=(const DOp& o);
  DOp& operator-=(const DOp& o);
  friend DOp operator+(DOp a, const DOp& b) { return a += b; }
  friend DOp operator-(DOp a, const DOp& b) { return a -= b; }
  friend DOp operator*(const DOp& a, const DOp& b);
  DOp& operator*=(const DOp& o) { return *this = *this * o; }
  DOp& scale(const KScalar& c);

  bool operator==(const DOp& o) const { return (*this - o).is_zero(); }

  const std::map<std::pair<int, int>, KScalar>& terms() const { return terms_; }

  // Class in D / D(z-1): z == 1 from the right, leaving del powers only.
  // Returned as coefficients by del-degree.
  std::map<int, KScalar> quotient_class() const;

  std::string str() const;

 private:
  std::map<std::pair<int, int>, KScalar> terms_;  // (m, n) -> coeff
  void add_term(int m, int n, const KScalar& c);
};

DOp commutator(const DOp& a, const DOp& b);

}  // namespace ysl
