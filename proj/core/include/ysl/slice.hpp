#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ysl/loopmat.hpp"
#include "ysl/rat.hpp"

namespace ysl {

// Point of the slice through t^w: a loop matrix in normalized form together
// with its torus cocharacter (GL-style integer weight vector).
struct SlicePoint {
  LoopMat g;
  std::vector<int> w;

  bool agrees_with(const SlicePoint& o) const { return w == o.w && g.agrees_with(o.g); }
};

// rank-one root subgroup data embedded at node i (rows i, i+1)
LoopMat embed_sl2(int n, int node, const KSeries& a11, const KSeries& a12, const KSeries& a21,
                  const KSeries& a22, int det_exp = 0);

// tau_i([0, b; -b^{-1}, t - c]) as a point of the slice through t^{-alpha_i}.
SlicePoint r_point(int n, int node, const KScalar& b, const KScalar& c);

// k-th coefficient of psi_i (the (i, i+1) entry of the Gauss u-factor).
KScalar psi_coeff(const SlicePoint& p, int node, int k);
// moment value d^{-1/2} psi^(1); the slice types here have d = 1
KScalar moment(const SlicePoint& p, int node);

SlicePoint multiply_slices(const SlicePoint& a, const SlicePoint& b);
SlicePoint shift_point(const SlicePoint& p, const std::vector<int>& w1,
                       const std::vector<int>& w2);

// a . g = pi(x_{-i}(-a) g)  (d = 1)
SlicePoint ga_action(const KScalar& a, const SlicePoint& p, int node);

SlicePoint xi_point(const SlicePoint& p, int node);  // needs psi^(1) != 0
std::pair<SlicePoint, SlicePoint> factor_point(const SlicePoint& p, int node);

// coweight vector of alpha_node^vee inside GL_n
std::vector<int> gl_coroot(int n, int node);

// ---- the PGL_2 polynomial model -------------------------------------------

// Entries of [a, b; c, d] with d monic of degree m, deg b, deg c < m and
// det = t^lambda; polynomials are dense coefficient vectors, ascending.
struct Rank1Point {
  long lambda = 0;
  long m = 0;
  std::vector<Rat> a, b, c, d;

  bool operator==(const Rank1Point& o) const;
  std::string str() const;
};

bool minor_degree_check(const Rank1Point& p);
SlicePoint rank1_to_slice(const Rank1Point& p);
Rank1Point rank1_from_slice(const SlicePoint& p, long lambda, long m);

// Leading coefficients b^(1), b^(2), d^(1) and the moment value b^(1).
Rat rank1_moment(const Rank1Point& p);

// The reduction at moment value one: b' = b(t - b^(2) + d^(1)) - d, d' = b,
// with a', c' completed by the determinant and the degree bounds.
Rank1Point rank1_reduce(const Rank1Point& p);

// Seeded random point with nonzero (or unit) moment value.
Rank1Point sample_rank1(long lambda, long m, std::mt19937_64& rng, bool unit_moment);

// Polynomial helpers shared with the tests (dense, exact).
std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::optional<std::vector<Rat>> poly_divide_exact(const std::vector<Rat>& num,
                                                  const std::vector<Rat>& den);
std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(const std::vector<Rat>& num,
                                                          const std::vector<Rat>& den);

}  // namespace ysl
