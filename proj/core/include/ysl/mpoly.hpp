#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ysl/kscalar.hpp"

namespace ysl {

struct VarSet {
  std::vector<std::string> names;
  bool operator==(const VarSet& o) const { return names == o.names; }
  int size() const { return static_cast<int>(names.size()); }
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_vars(std::vector<std::string> names);

// Multivariate polynomial over KScalar with a fixed variable set, stored as
// a flat term vector sorted by lex-ascending exponent (the leading term is
// the back).  No zero coefficients are stored.
class MPoly {
 public:
  using Expo = std::vector<int>;
  using Term = std::pair<Expo, KScalar>;

  MPoly() = default;  // zero over the empty variable set
  static MPoly constant(const VarSetPtr& vars, const KScalar& c);
  static MPoly variable(const VarSetPtr& vars, int idx, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && is_zero_expo(terms_[0].first));
  }
  KScalar constant_value() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& scale(const KScalar& c);
  MPoly pow(int e) const;

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  int cmp(const MPoly& o) const;  // deterministic total order

  // Substitutes variable idx by (variable idx + c); used by shift operators.
  MPoly shift_var(int idx, const KScalar& c) const;
  MPoly substitute(int idx, const MPoly& value) const;
  KScalar eval(const std::vector<KScalar>& point) const;

  // Exact division; nullopt when the divisor does not divide exactly.
  std::optional<MPoly> try_divide(const MPoly& divisor) const;

  const std::vector<Term>& terms() const { return terms_; }
  const VarSetPtr& vars() const { return vars_; }
  KScalar leading_coeff() const;  // lex-leading; zero polynomial yields 0
  int degree(int idx) const;
  int total_degree() const;

  std::string str() const;

 private:
  VarSetPtr vars_;
  std::vector<Term> terms_;

  static bool is_zero_expo(const Expo& e);
  void add_sorted(const Expo& e, const KScalar& c);
  void merge_sorted(std::vector<Term>&& incoming);
  static const VarSetPtr& merge_vars(const VarSetPtr& a, const VarSetPtr& b);
  void promote_to(const VarSetPtr& target);
  friend class RatFn;
};

}  // namespace ysl
