#pragma once

#include <string>
#include <vector>

#include "ysl/kscalar.hpp"

namespace ysl {

// Coweight in the fundamental-coweight basis: coords[j] = <mu, alpha_j>.
using Coweight = std::vector<int>;

// Positive root as coefficients of the simple roots.
using RootVec = std::vector<int>;

// Symmetrizable Cartan datum for the supported finite types.  Convention:
// a[i][j] = <alpha_i^vee, alpha_j>, so the coroot alpha_j^vee has
// fundamental-coweight coordinates equal to row j of the Cartan matrix.
// The `transposed` switch builds the datum with the transposed matrix and
// re-derived coprime symmetrizers (the dual labeling), which realizes the
// opposite pairing convention end to end for the self-consistency run.
struct CartanDatum {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> a;
  std::vector<long> d;
  bool transposed = false;
  SqrtCtxPtr sym;  // shared scalar context for d_i^{1/2}

  int pairing(const Coweight& mu, int j) const { return mu.at(j); }
  long bilinear(int i, int j) const;              // (alpha_i, alpha_j) = d_i a_ij
  int cartan_entry(int i, int j) const { return a[i][j]; }
  Coweight coroot(int j) const;                   // alpha_j^vee in coweight coords
  // <beta, alpha_i^vee> for beta = sum c_j alpha_j.
  int root_pair_coroot(const RootVec& beta, int i) const;
};

CartanDatum make_cartan(const std::string& type_name, bool transposed = false);
CartanDatum make_cartan(std::vector<std::vector<int>> a, std::vector<long> d,
                        bool transposed = false);

// Coprime positive symmetrizers for a symmetrizable matrix.
std::vector<long> derive_symmetrizers(const std::vector<std::vector<int>>& a);

Coweight add(const Coweight& x, const Coweight& y);
Coweight sub(const Coweight& x, const Coweight& y);
Coweight negate(const Coweight& x);

bool is_dominant(const Coweight& mu);
bool is_antidominant(const Coweight& mu);

// Solves lambda - mu = sum_j m_j alpha_j^vee; DominanceError when the
// solution is non-integral or has a negative entry.
std::vector<long> coroot_decomposition(const CartanDatum& dat, const Coweight& lambda,
                                       const Coweight& mu);

// Complete positive-root list, simple roots first, then by height.
std::vector<RootVec> positive_roots(const CartanDatum& dat);

std::string coweight_str(const Coweight& mu);

}  // namespace ysl
