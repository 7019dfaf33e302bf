#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ysl/cartan.hpp"
#include "ysl/kscalar.hpp"

namespace ysl {

enum class GenKind : unsigned char { E = 0, F = 1, H = 2 };

// Indexed generator E_i^{(r)}, F_i^{(r)} (r >= 1) or H_i^{(p)}.  H symbols at
// or below the shift floor are folded to constants at construction and never
// appear inside words.
struct GenSym {
  GenKind kind;
  int node;
  int sup;

  auto operator<=>(const GenSym&) const = default;
  std::string str() const;
};

using Word = std::vector<GenSym>;

// Formal sum of words with exact scalar coefficients.
class NCElem {
 public:
  NCElem() = default;
  static NCElem scalar(const KScalar& c);
  static NCElem one() { return scalar(KScalar(1)); }
  static NCElem word(Word w, const KScalar& c = KScalar(1));

  bool is_zero() const { return terms_.empty(); }

  NCElem operator-() const;
  NCElem& operator+=(const NCElem& o);
  NCElem& operator-=(const NCElem& o);
  friend NCElem operator+(NCElem a, const NCElem& b) { return a += b; }
  friend NCElem operator-(NCElem a, const NCElem& b) { return a -= b; }
  friend NCElem operator*(const NCElem& a, const NCElem& b);
  NCElem& operator*=(const NCElem& o) { return *this = *this * o; }
  NCElem& scale(const KScalar& c);

  bool operator==(const NCElem& o) const { return terms_ == o.terms_; }

  const std::map<Word, KScalar>& terms() const { return terms_; }
  int max_word_length() const;
  int max_superscript() const;

  std::string str() const;

 private:
  std::map<Word, KScalar> terms_;
  void add_term(const Word& w, const KScalar& c);
  friend NCElem commutator(const NCElem& a, const NCElem& b);
};

NCElem commutator(const NCElem& a, const NCElem& b);

// Shifted-Yangian context: Cartan datum, shift mu, and hard caps.  Every
// operation throws OverflowError instead of truncating when a cap is hit.
struct YangianCtx {
  CartanDatum dat;
  Coweight mu;
  int sup_cap = 8;
  int len_cap = 24;

  int h_floor(int i) const { return -mu.at(i); }  // H_i at the floor is 1, below is 0
  bool rank_one() const { return dat.n == 1; }
};

YangianCtx make_yangian_ctx(const CartanDatum& dat, Coweight mu, int sup_cap = 8,
                            int len_cap = 24);

// Generator as an element, folding H at/below the floor to 1/0.
NCElem gen_elem(const YangianCtx& ctx, GenKind kind, int node, int sup);

enum class RelId { HH, EF, HE, HF, EE, FF, SerreE, SerreF };

// LHS - RHS of the defining relation; exactly zero iff the instance holds.
// For Serre relations `sups` lists (p_1..p_N) and `q`; the sym is the full
// permutation sum without 1/N! normalization.
NCElem relation_defect(const YangianCtx& ctx, RelId rel, int i, int j, int p, int q);
NCElem serre_defect(const YangianCtx& ctx, RelId rel, int i, int j,
                    const std::vector<int>& sups, int q);
// Paper-printed variant of the FF right side (superscripts attached to the
// opposite letters); kept for the regression guard that shows it fails.
NCElem relation_defect_ff_literal(const YangianCtx& ctx, int i, int j, int p, int q);

// S_i^{(floor+k)} for k in {1,2}.
NCElem levendorskii(const YangianCtx& ctx, int i, int k);

// Shift morphism iota_{mu,mu1,mu2}; returns target context and image.
std::pair<YangianCtx, NCElem> shift_generators(const YangianCtx& ctx, const Coweight& mu1,
                                               const Coweight& mu2, const NCElem& x);

// Max filtration degree over words (exact on rank-1 normal forms, an upper
// bound on general words).  Zero element yields nullopt.
std::optional<int> filtration_degree(const YangianCtx& ctx, const NCElem& x,
                                     const Coweight& nu1, const Coweight& nu2);

// Common root-lattice degree of all words, nullopt when mixed.
std::optional<std::vector<int>> root_grade(const YangianCtx& ctx, const NCElem& x);

// Rank-1 PBW normal form: blocks E then F then H, superscripts weakly
// increasing inside each block.  Engine instances memoize straightening
// expansions; reuse one across a sweep.
class RankOneEngine {
 public:
  explicit RankOneEngine(const YangianCtx& ctx);
  NCElem nf(const NCElem& x);
  const YangianCtx& ctx() const { return ctx_; }

 private:
  YangianCtx ctx_;
  KScalar half_form_;  // (alpha.alpha)/2
  std::map<std::tuple<int, int, int>, NCElem> memo_;  // (tag, a, b) -> normal form

  NCElem nf_word(const Word& w, const KScalar& c);
  const NCElem& swap_correction(GenKind ka, int a, GenKind kb, int b);
  NCElem comm_EE(int a, int b);
  NCElem comm_FF(int a, int b);
  NCElem comm_HE(int a, int b);
  NCElem comm_HF(int a, int b);
};

NCElem nf_a1(const YangianCtx& ctx, const NCElem& x);

}  // namespace ysl
