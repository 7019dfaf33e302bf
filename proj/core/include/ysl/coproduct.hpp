#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ysl/gklo.hpp"
#include "ysl/tensor.hpp"

namespace ysl {

// Representation of Y_m realized by composing a shift morphism
// iota_{m, e1, e2} with a difference-operator representation of the shifted
// algebra.  With e1 = e2 = 0 this is the representation itself.
class FactorRep {
 public:
  FactorRep(const CartanDatum& dat, Coweight m, Coweight e1, Coweight e2, GkloRep rep,
            int sup_cap = 16);

  const YangianCtx& src_ctx() const { return src_; }
  const GkloRep& rep() const { return rep_; }
  const Coweight& shift1() const { return e1_; }
  const Coweight& shift2() const { return e2_; }

  DiffOp elem(const NCElem& x) const;
  DiffOp e(int node, int sup) const { return elem(gen_elem(src_, GenKind::E, node, sup)); }
  DiffOp f(int node, int sup) const { return elem(gen_elem(src_, GenKind::F, node, sup)); }
  DiffOp h(int node, int sup) const { return elem(gen_elem(src_, GenKind::H, node, sup)); }
  DiffOp one() const { return DiffOp::constant(rep_.wvars(), KScalar(1)); }

 private:
  YangianCtx src_;
  Coweight e1_, e2_;
  GkloRep rep_;
};

// Coproduct on an antidominant split mu = mu1 + mu2, with both tensor
// factors realized through FactorReps.  Generator images follow the
// displayed formulas on the low-superscript window; higher superscripts are
// produced by commutating with the degree-two Levendorskii image, and H
// images come from [E^(1), F^(p)].
class Coproduct {
 public:
  Coproduct(const CartanDatum& dat, Coweight mu1, Coweight mu2, FactorRep left, FactorRep right,
            int sup_cap = 16, bool alternate_pbw = false);

  const CartanDatum& dat() const { return dat_; }
  const Coweight& mu1() const { return mu1_; }
  const Coweight& mu2() const { return mu2_; }
  const YangianCtx& src_ctx() const { return src_; }
  const FactorRep& left() const { return left_; }
  const FactorRep& right() const { return right_; }

  TensorElem gen(GenKind kind, int node, int sup);
  TensorElem elem(const NCElem& x);
  TensorElem s_total(int node, int k);  // image of S_{mu}^{(floor+k)}
  TensorElem one() const;

 private:
  CartanDatum dat_;
  Coweight mu1_, mu2_;
  YangianCtx src_;
  FactorRep left_, right_;
  bool alternate_pbw_;
  std::map<GenSym, TensorElem> cache_;

  TensorElem make_e(int node, int sup);
  TensorElem make_f(int node, int sup);
  TensorElem make_h(int node, int sup);
  TensorElem pure_left(const NCElem& x) const;
  TensorElem pure_right(const NCElem& x) const;
};

// Coproduct for an arbitrary split mu = mu1 + mu2, computed through the
// antidominant square: the image of g is Delta(iota(g)) in the shifted
// tensor factors, so identities verified here are identities after the
// injective map iota (x) iota.
class GeneralCoproduct {
 public:
  GeneralCoproduct(const CartanDatum& dat, Coweight mu1, Coweight mu2, Coweight eta1,
                   Coweight eta2, GkloRep left, GkloRep right, int sup_cap = 16,
                   bool alternate_pbw = false);

  const Coweight& mu() const { return mu_; }
  const Coweight& eta1() const { return eta1_; }
  const Coweight& eta2() const { return eta2_; }
  Coproduct& anti() { return anti_; }
  bool shifted() const;  // true when a nonzero eta was needed

  TensorElem gen(GenKind kind, int node, int sup);
  TensorElem elem(const NCElem& x);

 private:
  CartanDatum dat_;
  Coweight mu1_, mu2_, mu_, eta1_, eta2_;
  YangianCtx src_;
  Coproduct anti_;
};

// Smallest antidominant eta with mu + eta antidominant.
Coweight antidominant_shift_for(const Coweight& mu);

// Normalization carried by the correction sums over positive roots: the
// chosen nested-bracket pair (E_gamma, F_gamma) is rescaled to a dual pair
// under the invariant bilinear form, evaluated in a matrix realization of
// the supported types.
Rat pbw_pair_norm(const CartanDatum& dat, const RootVec& gamma, bool alternate);

struct CoprodCheck {
  std::string label;
  bool pass;
  bool oracle_relative;
  std::string witness;
};

// Every defining-relation defect with superscripts <= cap maps to zero.
std::vector<CoprodCheck> coproduct_relation_sweep(Coproduct& cop, int cap);

// Images of generators carry the expected root grade, left + right.
std::vector<CoprodCheck> coproduct_grading_checks(Coproduct& cop, int cap);

// Theorem 3.10 square: the antidominant-path image of each displayed
// generator formula agrees with the image computed after an extra shift.
std::vector<CoprodCheck> shift_compat_checks(const CartanDatum& dat, const Coweight& mu1,
                                             const Coweight& mu2, const Coweight& eta1,
                                             const Coweight& eta2, const GkloRep& left,
                                             const GkloRep& right, int sup_cap = 16);

}  // namespace ysl
