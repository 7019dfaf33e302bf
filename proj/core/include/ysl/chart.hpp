#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ysl/coproduct.hpp"
#include "ysl/kscalar.hpp"

namespace ysl {

// Laurent polynomial in the chart coordinates (b, c), b invertible.
class ChartFn {
 public:
  ChartFn() = default;
  static ChartFn constant(const KScalar& v);
  static ChartFn b(int exp = 1);
  static ChartFn c(int exp = 1);

  bool is_zero() const { return terms_.empty(); }

  ChartFn operator-() const;
  ChartFn& operator+=(const ChartFn& o);
  ChartFn& operator-=(const ChartFn& o);
  friend ChartFn operator+(ChartFn a, const ChartFn& b) { return a += b; }
  friend ChartFn operator-(ChartFn a, const ChartFn& b) { return a -= b; }
  friend ChartFn operator*(const ChartFn& a, const ChartFn& b);
  ChartFn& operator*=(const ChartFn& o) { return *this = *this * o; }
  ChartFn& scale(const KScalar& k);
  bool operator==(const ChartFn& o) const { return terms_ == o.terms_; }

  ChartFn d_db() const;
  ChartFn d_dc() const;
  // division by a single Laurent term
  ChartFn divided_by_term(const std::pair<int, int>& mono, const KScalar& coeff) const;
  bool single_term() const { return terms_.size() == 1; }

  const std::map<std::pair<int, int>, KScalar>& terms() const { return terms_; }
  std::string str() const;

 private:
  std::map<std::pair<int, int>, KScalar> terms_;  // (b-exp, c-exp >= 0) -> coeff
  void add_term(int be, int ce, const KScalar& v);
};

// Poisson bracket on the chart determined by the structure function {c, b}:
// {f, g} = (df/dc dg/db - df/db dg/dc) * structure.
ChartFn chart_bracket(const ChartFn& f, const ChartFn& g, const ChartFn& structure);

// Solves the loop-group bracket identity on the defining-representation
// matrix coefficients of the rank-one slice chart for the single unknown
// {c, b}; throws on an inconsistent system.  Expected value: d * b.
ChartFn solve_chart_structure(long d);

struct ChartCheck {
  std::string label;
  bool pass;
  std::string witness;
};

// Hamiltonian-flow comparison: for f in {b, c, bc, c^2}, the eps-derivative
// along the (-eps)-action equals {Phi, f}, via exact dual-number evaluation
// at sample points and as a symbolic identity.
std::vector<ChartCheck> moment_flow_checks(long d, unsigned seed);

// The quantum cross-oracle: the symbol of [-A^(1), d^(1/2) E^(1)] in the
// rank-one difference algebra, mapped to the chart, equals {c, b}.
ChartCheck chart_quantum_cross_check(long d);

}  // namespace ysl
