#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ysl/cartan.hpp"
#include "ysl/ratfn.hpp"

namespace ysl {

// Variable block for the difference algebra: one w_{i,r} / u_{i,r} pair per
// node i and 1 <= r <= m_i, flattened in (node, index) order.
struct WVars {
  std::vector<long> m;
  std::vector<long> d;          // d_i per node
  std::vector<int> offset;      // node -> first flat index
  int total = 0;
  VarSetPtr vars;               // names of the w variables
  std::vector<int> node_of;     // flat index -> node

  int flat(int node, int r) const { return offset[node] + r; }  // r is 0-based
  bool operator==(const WVars& o) const { return m == o.m && d == o.d; }
};

using WVarsPtr = std::shared_ptr<const WVars>;

WVarsPtr make_wvars(const std::vector<long>& m, const std::vector<long>& d);

// Exponent vector of a shift monomial prod u_{i,r}^{e}.
using ShiftMono = std::vector<int>;

// Normal-ordered difference operator: sum of (rational function in the w's)
// times (shift monomial), shifts on the right.  Commuting a shift monomial
// with exponents k past a coefficient f(w) substitutes w_{i,r} + k_{i,r} d_i.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(WVarsPtr wv) : wv_(std::move(wv)) {}

  static DiffOp constant(const WVarsPtr& wv, const KScalar& c);
  static DiffOp coeff(const WVarsPtr& wv, const RatFn& f);
  static DiffOp shift(const WVarsPtr& wv, int node, int r, int exp);
  static DiffOp w_var(const WVarsPtr& wv, int node, int r);

  bool is_zero() const { return terms_.empty(); }

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  DiffOp& operator*=(const DiffOp& o) { return *this = *this * o; }
  DiffOp& scale(const KScalar& c);

  bool operator==(const DiffOp& o) const { return (*this - o).is_zero(); }

  // Root-lattice grade: each term contributes -sum exp(u_{i,r}) * alpha_i.
  // Returns the common grade, nullopt when mixed (zero has grade 0).
  std::optional<std::vector<int>> grade(int rank) const;
  std::map<std::vector<int>, DiffOp> graded_parts(int rank) const;

  const std::map<ShiftMono, RatFn>& terms() const { return terms_; }
  const WVarsPtr& wvars() const { return wv_; }

  std::string str() const;
  std::string key() const;  // deterministic merge key over the representation

 private:
  WVarsPtr wv_;
  std::map<ShiftMono, RatFn> terms_;

  void add_term(const ShiftMono& s, const RatFn& f);
  RatFn shift_coeff(const RatFn& f, const ShiftMono& by) const;
  void merge_ctx(const DiffOp& o);
};

DiffOp commutator(const DiffOp& a, const DiffOp& b);

}  // namespace ysl
