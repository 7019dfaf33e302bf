#pragma once

#include <string>
#include <vector>

#include "ysl/series.hpp"

namespace ysl {

// Square matrix over truncated Laurent series; the group element sits in the
// GL_n cover with a fixed central determinant t^det_exp (zero for SL_n).
struct LoopMat {
  int n = 0;
  int det_exp = 0;
  std::vector<std::vector<KSeries>> e;

  static LoopMat identity(int n, int det_exp = 0);
  // diag(t^{w_1}, ..., t^{w_n})
  static LoopMat torus(const std::vector<int>& w);
  // elementary unipotent: identity with `val` at (row, col)
  static LoopMat elementary(int n, int row, int col, const KSeries& val, int det_exp = 0);

  const KSeries& at(int i, int j) const { return e[i][j]; }
  KSeries& at(int i, int j) { return e[i][j]; }

  friend LoopMat operator*(const LoopMat& a, const LoopMat& b);
  bool agrees_with(const LoopMat& o) const;

  std::string str() const;
};

struct GaussFactors {
  LoopMat u;       // unipotent upper
  LoopMat h;       // diagonal
  LoopMat uminus;  // unipotent lower
};

// Factorization g = u h u_- through the LDU of the antidiagonal flip; the
// pivots must be unit series on their windows (the big-cell locus).
GaussFactors gauss_decompose(const LoopMat& g);

// The unique representative n g n_- with n in U[t], n_- in U_-[t] whose
// factors have all entries supported in t^{-1}C[[t^{-1}]] around t^w.
// Throws LocusError off the locus (Gauss failure or diagonal valuations
// different from w).
LoopMat pi_project(const LoopMat& g, const std::vector<int>& w);

// Entries match the W_w factor shape after Gauss decomposition.
bool in_slice_form(const LoopMat& g, const std::vector<int>& w);

}  // namespace ysl
