#pragma once

#include <map>
#include <string>
#include <vector>

#include "ysl/diffop.hpp"

namespace ysl {

// Element of a tensor product of two difference algebras, as a bilinear
// normal form: a list of (left, right) pairs, compressed by merging pairs
// whose partner side has an identical representation.  The zero test is
// exact: per right shift-monomial the coefficients are put over a common
// denominator, turning them into honest linear coordinates, and each
// coordinate's left combination must vanish.
class TensorElem {
 public:
  TensorElem() = default;
  TensorElem(WVarsPtr left, WVarsPtr right) : lw_(std::move(left)), rw_(std::move(right)) {}

  static TensorElem pure(const DiffOp& l, const DiffOp& r);

  bool structurally_zero() const { return pairs_.empty(); }
  bool is_zero() const;

  TensorElem operator-() const;
  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator*(const TensorElem& a, const TensorElem& b);
  TensorElem& operator*=(const TensorElem& o) { return *this = *this * o; }
  TensorElem& scale(const KScalar& c);

  bool operator==(const TensorElem& o) const { return (*this - o).is_zero(); }

  const std::vector<std::pair<DiffOp, DiffOp>>& pairs() const { return pairs_; }
  const WVarsPtr& left_wvars() const { return lw_; }
  const WVarsPtr& right_wvars() const { return rw_; }

  // Component whose left factors have root grade inside Z*alpha_node.
  TensorElem left_grade_multiple_of(int rank, int node) const;
  // True when every left grade is strictly negative (zero grade absent).
  bool left_grades_strictly_negative(int rank) const;

  std::string str() const;

 private:
  WVarsPtr lw_, rw_;
  std::vector<std::pair<DiffOp, DiffOp>> pairs_;

  void append(const DiffOp& l, const DiffOp& r);
  void compress();
};

TensorElem tensor_commutator(const TensorElem& a, const TensorElem& b);

}  // namespace ysl
