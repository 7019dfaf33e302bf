#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ysl/rat.hpp"

namespace ysl {

// Symmetrizer context for formal square roots s_i = d_i^{1/2}.  When d_i is
// a perfect square the symbol is replaced by its exact value at construction;
// the remaining symbols generate a number field, so zero-testing stays sound.
struct SqrtCtx {
  std::vector<long> d;
  std::vector<Rat> exact_root;  // nonzero entry iff d_i is a perfect square

  explicit SqrtCtx(std::vector<long> d_in);
  bool operator==(const SqrtCtx& o) const { return d == o.d; }
  int rank() const { return static_cast<int>(d.size()); }
};

using SqrtCtxPtr = std::shared_ptr<const SqrtCtx>;

SqrtCtxPtr make_sqrt_ctx(std::vector<long> d);

// Element of Q adjoined the non-square d_i^{1/2}: a map from square-free
// monomials in the s_i (bitmask) to Rat, with s_i^2 -> d_i on multiplication.
// The empty map is 0.  Pure rationals carry a null context and combine with
// any other context; two non-null contexts must agree.
class KScalar {
 public:
  KScalar() = default;
  KScalar(const Rat& r);  // NOLINT(google-explicit-constructor)
  KScalar(long n);        // NOLINT(google-explicit-constructor)

  static KScalar sqrt_sym(const SqrtCtxPtr& ctx, int i);      // d_i^{1/2}
  static KScalar inv_sqrt_sym(const SqrtCtxPtr& ctx, int i);  // d_i^{-1/2}

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rat rational_value() const;  // throws if symbols remain

  KScalar operator-() const;
  KScalar& operator+=(const KScalar& o);
  KScalar& operator-=(const KScalar& o);
  KScalar& operator*=(const KScalar& o);
  friend KScalar operator+(KScalar a, const KScalar& b) { return a += b; }
  friend KScalar operator-(KScalar a, const KScalar& b) { return a -= b; }
  friend KScalar operator*(KScalar a, const KScalar& b) { return a *= b; }

  KScalar inverse() const;
  bool operator==(const KScalar& o) const;
  bool operator!=(const KScalar& o) const { return !(*this == o); }

  // Total order used for deterministic iteration; not algebraically meaningful.
  int cmp(const KScalar& o) const;

  const std::vector<std::pair<unsigned, Rat>>& terms() const { return terms_; }
  const SqrtCtxPtr& ctx() const { return ctx_; }

  std::string str() const;

 private:
  SqrtCtxPtr ctx_;
  std::vector<std::pair<unsigned, Rat>> terms_;  // sorted by mask, no zeros

  void add_term(unsigned mask, const Rat& c);
  static const SqrtCtxPtr& merge_ctx(const SqrtCtxPtr& a, const SqrtCtxPtr& b);
  friend class KScalarTestPeer;
};

}  // namespace ysl
