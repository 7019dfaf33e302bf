#include "ysl/ratfn.hpp"

#include <algorithm>

#include "ysl/error.hpp"

namespace ysl {

RatFn::RatFn(const MPoly& num) : num_(num) {}

RatFn::RatFn(MPoly num, const MPoly& den) : num_(std::move(num)) {
  if (den.is_zero()) throw NotInvertibleError("RatFn: zero denominator");
  if (den.is_constant()) {
    KScalar c = den.constant_value();
    if (!(c == KScalar(1))) num_.scale(c.inverse());
  } else {
    push_factor(den, 1);
  }
  if (num_.is_zero()) den_.clear();
  cancel_factors();
}

RatFn RatFn::with_den_factors(MPoly num, std::vector<MPoly> factors) {
  RatFn r;
  r.num_ = std::move(num);
  for (auto& f : factors) r.push_factor(std::move(f), 1);
  if (r.num_.is_zero()) r.den_.clear();
  r.cancel_factors();
  return r;
}

// Keeps factors monic (leading coefficient one), folding the scale into the
// numerator, and the factor list sorted for cheap multiset operations.
void RatFn::push_factor(MPoly f, int exp) {
  if (exp == 0) return;
  if (f.is_zero()) throw NotInvertibleError("RatFn: zero denominator factor");
  if (f.is_constant()) {
    KScalar c = f.constant_value();
    if (!(c == KScalar(1))) {
      KScalar inv = c.inverse();
      KScalar acc(1);
      for (int t = 0; t < exp; ++t) acc *= inv;
      num_.scale(acc);
    }
    return;
  }
  KScalar lead = f.leading_coeff();
  if (!(lead == KScalar(1))) {
    f.scale(lead.inverse());
    KScalar acc(1);
    KScalar inv = lead.inverse();
    for (int t = 0; t < exp; ++t) acc *= inv;
    num_.scale(acc);
  }
  auto it = std::lower_bound(den_.begin(), den_.end(), f, [](const auto& p, const MPoly& v) {
    return p.first.cmp(v) < 0;
  });
  if (it != den_.end() && it->first.cmp(f) == 0)
    it->second += exp;
  else
    den_.insert(it, {std::move(f), exp});
}

void RatFn::cancel_factors() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    bool erased = false;
    while (it->second > 0) {
      auto q = num_.try_divide(it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0) {
      it = den_.erase(it);
      erased = true;
    }
    if (!erased) ++it;
  }
}

MPoly RatFn::den() const {
  MPoly acc = MPoly::constant(num_.vars(), KScalar(1));
  for (const auto& [f, e] : den_)
    for (int t = 0; t < e; ++t) acc *= f;
  return acc;
}

RatFn RatFn::operator-() const {
  RatFn r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = o; return *this; }
  // lcm of the factor multisets; scale each numerator by its missing part.
  RatFn out;
  MPoly otherscale = MPoly::constant(o.num_.vars(), KScalar(1));
  MPoly myscale = MPoly::constant(num_.vars(), KScalar(1));
  size_t i = 0, j = 0;
  while (i < den_.size() || j < o.den_.size()) {
    int c;
    if (i == den_.size()) c = 1;
    else if (j == o.den_.size()) c = -1;
    else c = den_[i].first.cmp(o.den_[j].first);
    if (c == 0) {
      int e = std::max(den_[i].second, o.den_[j].second);
      out.den_.emplace_back(den_[i].first, e);
      for (int t = den_[i].second; t < e; ++t) myscale *= den_[i].first;
      for (int t = o.den_[j].second; t < e; ++t) otherscale *= den_[i].first;
      ++i, ++j;
    } else if (c < 0) {
      out.den_.emplace_back(den_[i].first, den_[i].second);
      for (int t = 0; t < den_[i].second; ++t) otherscale *= den_[i].first;
      ++i;
    } else {
      out.den_.emplace_back(o.den_[j].first, o.den_[j].second);
      for (int t = 0; t < o.den_[j].second; ++t) myscale *= o.den_[j].first;
      ++j;
    }
  }
  out.num_ = num_ * myscale + o.num_ * otherscale;
  if (out.num_.is_zero())
    out.den_.clear();
  else
    out.cancel_factors();
  *this = std::move(out);
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero() || o.is_zero()) {
    *this = RatFn();
    return *this;
  }
  num_ *= o.num_;
  for (const auto& [f, e] : o.den_) push_factor(f, e);
  cancel_factors();
  return *this;
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw NotInvertibleError("RatFn: inverse of zero");
  RatFn r;
  r.num_ = MPoly::constant(num_.vars(), KScalar(1));
  for (const auto& [f, e] : den_)
    for (int t = 0; t < e; ++t) r.num_ *= f;
  r.push_factor(num_, 1);
  r.cancel_factors();
  return r;
}

RatFn& RatFn::scale(const KScalar& c) {
  num_.scale(c);
  if (num_.is_zero()) den_.clear();
  return *this;
}

bool RatFn::eq(const RatFn& o) const {
  // Cross-multiply over the lcm: equivalent to num*o.den == o.num*den but
  // with the shared factors cancelled beforehand.
  MPoly mys = MPoly::constant(num_.vars(), KScalar(1));
  MPoly others = MPoly::constant(o.num_.vars(), KScalar(1));
  size_t i = 0, j = 0;
  while (i < den_.size() || j < o.den_.size()) {
    int c;
    if (i == den_.size()) c = 1;
    else if (j == o.den_.size()) c = -1;
    else c = den_[i].first.cmp(o.den_[j].first);
    if (c == 0) {
      int e = std::max(den_[i].second, o.den_[j].second);
      for (int t = den_[i].second; t < e; ++t) mys *= den_[i].first;
      for (int t = o.den_[j].second; t < e; ++t) others *= den_[i].first;
      ++i, ++j;
    } else if (c < 0) {
      for (int t = 0; t < den_[i].second; ++t) others *= den_[i].first;
      ++i;
    } else {
      for (int t = 0; t < o.den_[j].second; ++t) mys *= o.den_[j].first;
      ++j;
    }
  }
  return (num_ * mys - o.num_ * others).is_zero();
}

int RatFn::cmp(const RatFn& o) const {
  int c = num_.cmp(o.num_);
  if (c != 0) return c;
  if (den_.size() != o.den_.size()) return den_.size() < o.den_.size() ? -1 : 1;
  for (size_t k = 0; k < den_.size(); ++k) {
    c = den_[k].first.cmp(o.den_[k].first);
    if (c != 0) return c;
    if (den_[k].second != o.den_[k].second) return den_[k].second < o.den_[k].second ? -1 : 1;
  }
  return 0;
}

RatFn RatFn::shift_var(int idx, const KScalar& c) const {
  if (is_zero()) return *this;
  RatFn r;
  r.num_ = num_.shift_var(idx, c);
  for (const auto& [f, e] : den_) r.push_factor(f.shift_var(idx, c), e);
  r.cancel_factors();
  return r;
}

std::string RatFn::str() const {
  if (den_.empty()) return num_.str();
  std::string out = "[" + num_.str() + "] / [";
  bool first = true;
  for (const auto& [f, e] : den_) {
    if (!first) out += " * ";
    out += "(" + f.str() + ")";
    if (e != 1) out += "^" + std::to_string(e);
    first = false;
  }
  return out + "]";
}

void RatFn::compact_key(std::string* out) const {
  auto poly_key = [out](const MPoly& p) {
    for (const auto& [expo, c] : p.terms()) {
      for (int e : expo) {
        *out += std::to_string(e);
        *out += ',';
      }
      *out += ':';
      for (const auto& [mask, r] : c.terms()) {
        *out += std::to_string(mask);
        *out += '*';
        *out += r.get_str();
        *out += ';';
      }
      *out += '|';
    }
  };
  poly_key(num_);
  *out += '/';
  for (const auto& [f, e] : den_) {
    poly_key(f);
    *out += '^';
    *out += std::to_string(e);
    *out += '&';
  }
}

}  // namespace ysl
