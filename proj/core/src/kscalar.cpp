#include "ysl/kscalar.hpp"

#include <algorithm>

#include "ysl/error.hpp"

namespace ysl {

SqrtCtx::SqrtCtx(std::vector<long> d_in) : d(std::move(d_in)) {
  exact_root.resize(d.size(), Rat(0));
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 0) throw ContextError("SqrtCtx: symmetrizers must be positive");
    Rat root;
    if (rat_exact_sqrt(Rat(d[i]), &root)) exact_root[i] = root;
  }
}

SqrtCtxPtr make_sqrt_ctx(std::vector<long> d) {
  return std::make_shared<const SqrtCtx>(std::move(d));
}

KScalar::KScalar(const Rat& r) {
  if (sgn(r) != 0) terms_.emplace_back(0u, r);
}

KScalar::KScalar(long n) {
  if (n != 0) terms_.emplace_back(0u, Rat(n));
}

KScalar KScalar::sqrt_sym(const SqrtCtxPtr& ctx, int i) {
  if (!ctx || i < 0 || i >= ctx->rank()) throw ContextError("sqrt_sym: bad node index");
  if (sgn(ctx->exact_root[i]) != 0) return KScalar(ctx->exact_root[i]);
  KScalar k;
  k.ctx_ = ctx;
  k.terms_.emplace_back(1u << i, Rat(1));
  return k;
}

KScalar KScalar::inv_sqrt_sym(const SqrtCtxPtr& ctx, int i) {
  // s_i^{-1} = s_i / d_i
  KScalar s = sqrt_sym(ctx, i);
  return s * KScalar(rat(1, ctx->d[i]));
}

bool KScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0u);
}

Rat KScalar::rational_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_rational()) throw Error("KScalar: symbols remain in " + str());
  return terms_[0].second;
}

const SqrtCtxPtr& KScalar::merge_ctx(const SqrtCtxPtr& a, const SqrtCtxPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a.get() != b.get() && !(*a == *b))
    throw ContextError("KScalar: mismatched symmetrizer contexts");
  return a;
}

void KScalar::add_term(unsigned mask, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const auto& t, unsigned m) { return t.first < m; });
  if (it != terms_.end() && it->first == mask) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {mask, c});
  }
}

KScalar KScalar::operator-() const {
  KScalar k(*this);
  for (auto& t : k.terms_) t.second = -t.second;
  return k;
}

KScalar& KScalar::operator+=(const KScalar& o) {
  ctx_ = merge_ctx(ctx_, o.ctx_);
  for (const auto& t : o.terms_) add_term(t.first, t.second);
  if (terms_.empty()) ctx_.reset();
  return *this;
}

KScalar& KScalar::operator-=(const KScalar& o) {
  ctx_ = merge_ctx(ctx_, o.ctx_);
  for (const auto& t : o.terms_) add_term(t.first, -t.second);
  if (terms_.empty()) ctx_.reset();
  return *this;
}

KScalar& KScalar::operator*=(const KScalar& o) {
  const SqrtCtxPtr ctx = merge_ctx(ctx_, o.ctx_);
  KScalar out;
  out.ctx_ = ctx;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Rat c = ca * cb;
      unsigned overlap = ma & mb;
      for (int i = 0; overlap >> i; ++i)
        if (overlap & (1u << i)) c *= ctx->d[i];
      out.add_term(ma ^ mb, c);
    }
  }
  if (out.terms_.empty()) out.ctx_.reset();
  *this = std::move(out);
  return *this;
}

KScalar KScalar::inverse() const {
  if (terms_.empty()) throw NotInvertibleError("KScalar: inverse of zero");
  if (terms_.size() == 1) {
    const auto& [m, c] = terms_[0];
    Rat scale = Rat(1) / c;
    for (int i = 0; m >> i; ++i)
      if (m & (1u << i)) scale /= ctx_->d[i];
    KScalar k;
    k.ctx_ = ctx_;
    k.terms_.emplace_back(m, scale);
    if (m == 0) k.ctx_.reset();
    return k;
  }
  // General case: solve x*y = 1 over the 2^n-dimensional Q-basis of masks.
  int n = ctx_->rank();
  int dim = 1 << n;
  std::vector<std::vector<Rat>> mat(dim, std::vector<Rat>(dim + 1, Rat(0)));
  for (const auto& [mc, cc] : terms_) {
    for (int b = 0; b < dim; ++b) {
      Rat c = cc;
      unsigned overlap = mc & static_cast<unsigned>(b);
      for (int i = 0; i < n; ++i)
        if (overlap & (1u << i)) c *= ctx_->d[i];
      mat[mc ^ static_cast<unsigned>(b)][b] += c;
    }
  }
  mat[0][dim] = Rat(1);
  for (int col = 0, row = 0; col < dim && row < dim; ++col) {
    int piv = -1;
    for (int r = row; r < dim; ++r)
      if (sgn(mat[r][col]) != 0) { piv = r; break; }
    if (piv < 0) throw NotInvertibleError("KScalar: singular inverse system");
    std::swap(mat[piv], mat[row]);
    Rat inv = Rat(1) / mat[row][col];
    for (int c = col; c <= dim; ++c) mat[row][c] *= inv;
    for (int r = 0; r < dim; ++r) {
      if (r == row || sgn(mat[r][col]) == 0) continue;
      Rat f = mat[r][col];
      for (int c = col; c <= dim; ++c) mat[r][c] -= f * mat[row][c];
    }
    ++row;
  }
  KScalar out;
  out.ctx_ = ctx_;
  for (int b = 0; b < dim; ++b) out.add_term(static_cast<unsigned>(b), mat[b][dim]);
  KScalar check = out * *this;
  if (!(check == KScalar(1))) throw NotInvertibleError("KScalar: inverse verification failed");
  return out;
}

bool KScalar::operator==(const KScalar& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second)
      return false;
  if (!terms_.empty()) merge_ctx(ctx_, o.ctx_);
  return true;
}

int KScalar::cmp(const KScalar& o) const {
  size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (terms_[i].first != o.terms_[i].first)
      return terms_[i].first < o.terms_[i].first ? -1 : 1;
    int c = ::cmp(terms_[i].second, o.terms_[i].second);
    if (c != 0) return c;
  }
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
  return 0;
}

std::string KScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string piece = rat_str(c);
    for (int i = 0; m >> i; ++i)
      if (m & (1u << i)) piece += "*s" + std::to_string(i + 1);
    if (!first) out += " + ";
    out += piece;
    first = false;
  }
  return out;
}

}  // namespace ysl
