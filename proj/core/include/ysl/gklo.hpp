#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ysl/diffop.hpp"
#include "ysl/yangian.hpp"

namespace ysl {

// Parameters of the difference-operator representation: Cartan datum,
// dominant lambda, mu <= lambda, per-node parameter multisets R (the roots of
// p_i), a Dynkin-diagram orientation, and the derived m-vector.
struct GKLOData {
  CartanDatum dat;
  Coweight lambda;
  Coweight mu;
  std::vector<std::vector<Rat>> R;
  std::vector<long> m;
  bool flipped_orientation = false;
  bool corrupt_e_sign = false;  // mutation fixture for regression tests
  WVarsPtr wv;

  // Orientation: edge i -> j for i < j by default, reversed when flipped.
  bool has_edge(int from, int to) const;
  std::string describe() const;
};

using GKLODataPtr = std::shared_ptr<const GKLOData>;

GKLODataPtr make_gklo(const CartanDatum& dat, const Coweight& lambda, const Coweight& mu,
                      const std::vector<std::vector<Rat>>& R, bool flipped_orientation = false,
                      bool corrupt_e_sign = false);

// Generator images under the homomorphism into the difference algebra, with
// memoization.  H images with superscript >= 1 come from [E^(1), F^(r)]; the
// rational-series route is exposed separately and covers superscripts <= 0.
class GkloRep {
 public:
  explicit GkloRep(GKLODataPtr data);

  const GKLOData& data() const { return *data_; }
  const WVarsPtr& wvars() const { return data_->wv; }

  DiffOp e(int node, int sup) const;
  DiffOp f(int node, int sup) const;
  DiffOp h(int node, int sup) const;
  DiffOp gen(const GenSym& g) const;
  DiffOp elem(const NCElem& x) const;

  // Coefficients of the H_i(u) image computed from the defining rational
  // series; index r >= 1 gives the coefficient paired with H_i^{(floor+r)}.
  DiffOp h_from_series(int node, int rel_order) const;

  // PBW variable images E_beta^{(q)} / F_beta^{(q)} via nested commutators of
  // the chosen simple-root decomposition (lex-first, or lex-last when
  // alternate is set).
  DiffOp pbw_e(const RootVec& beta, int q, bool alternate = false) const;
  DiffOp pbw_f(const RootVec& beta, int q, bool alternate = false) const;

  DiffOp one() const { return DiffOp::constant(data_->wv, KScalar(1)); }

 private:
  GKLODataPtr data_;
  mutable std::map<GenSym, DiffOp> cache_;
  mutable std::map<std::pair<int, int>, DiffOp> h_series_cache_;

  DiffOp make_e(int node, int sup) const;
  DiffOp make_f(int node, int sup) const;
};

// Simple-root decompositions for PBW variables (shared with the coproduct
// module): the lex-first (or lex-last) sequence whose right-nested bracket is
// nonzero by the root-string criterion.
std::vector<int> pbw_decomposition(const CartanDatum& dat, const RootVec& beta, bool alternate);

struct RelationCheck {
  std::string label;
  bool pass;
  std::string witness;  // offending image when pass is false
};

// Sweeps every defining-relation instance with superscripts <= cap through
// the representation; all images must vanish.
std::vector<RelationCheck> verify_relations(const GkloRep& rep, int cap);

struct KernelCheck {
  std::string label;
  bool pass;
  std::string witness;
};

// A_i^{(r)} images: elementary-symmetric values for r <= m_i and zero for
// m_i < r <= m_i + extra.
std::vector<KernelCheck> truncation_kernel_checks(const GkloRep& rep, int extra = 3);

// Oracle zero-test for rank >= 2: true iff the image vanishes for every
// family member (confirmation is oracle-relative; refutation is sound).
bool oracle_is_zero(const std::vector<GkloRep>& family, const NCElem& x);

// Asserts every denominator factors into the allowed multiplicative set
// (w_{i,r} - w_{i,s} + k d_i) by trial division.
bool denominators_in_ore_set(const DiffOp& op);

}  // namespace ysl
