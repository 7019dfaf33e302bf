#pragma once

#include <limits>
#include <map>
#include <string>

#include "ysl/error.hpp"
#include "ysl/kscalar.hpp"

namespace ysl {

// Truncated Laurent series in one variable, oriented for t^{-1}-adic work:
// `hi` is a hard support bound (no terms above hi, ever), and coefficients
// are guaranteed correct on [lo, hi].  Below lo nothing is known.  Every
// operation computes the widest window its inputs justify, so precision is
// narrowed explicitly and never lost silently.
//
// Exactly-known series (polynomials, monomials) use a very low floor.
template <class R>
class TruncSeries {
 public:
  static constexpr int kExactFloor = std::numeric_limits<int>::min() / 4;

  TruncSeries() : lo_(kExactFloor), hi_(kExactFloor) {}  // zero, exact

  static TruncSeries zero(int lo = kExactFloor) {
    TruncSeries s;
    s.lo_ = lo;
    s.hi_ = lo;
    return s;
  }

  static TruncSeries monomial(const R& c, int exp, int lo = kExactFloor) {
    TruncSeries s;
    s.lo_ = std::min(lo, exp);
    s.hi_ = exp;
    if (!is_zero_value(c)) s.coeff_.emplace(exp, c);
    return s;
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool exact() const { return lo_ <= kExactFloor; }

  bool known(int exp) const { return exp >= lo_; }

  R at(int exp) const {
    if (exp > hi_) return R();
    if (exp < lo_) throw Error("TruncSeries: coefficient below window floor");
    auto it = coeff_.find(exp);
    return it == coeff_.end() ? R() : it->second;
  }

  bool is_zero_on_window() const { return coeff_.empty(); }

  // Least exponent with a nonzero stored coefficient; hi_+1 when none.
  int bottom_support() const { return coeff_.empty() ? hi_ + 1 : coeff_.begin()->first; }
  int top_support() const { return coeff_.empty() ? lo_ - 1 : coeff_.rbegin()->first; }

  TruncSeries operator-() const {
    TruncSeries s(*this);
    for (auto& [e, c] : s.coeff_) c = negate_value(c);
    return s;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s;
    s.lo_ = std::max(a.lo_, b.lo_);
    s.hi_ = std::max(a.hi_, b.hi_);
    if (s.lo_ > s.hi_) s.hi_ = s.lo_;
    for (const auto& [e, c] : a.coeff_)
      if (e >= s.lo_) s.add_coeff(e, c);
    for (const auto& [e, c] : b.coeff_)
      if (e >= s.lo_) s.add_coeff(e, c);
    return s;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s;
    s.hi_ = clamp_add(a.hi_, b.hi_);
    s.lo_ = std::max(clamp_add(a.lo_, b.hi_), clamp_add(b.lo_, a.hi_));
    if (a.coeff_.empty() && a.exact()) return zero(s.lo_);
    if (b.coeff_.empty() && b.exact()) return zero(s.lo_);
    if (s.lo_ > s.hi_) s.hi_ = s.lo_;
    for (const auto& [ea, ca] : a.coeff_)
      for (const auto& [eb, cb] : b.coeff_) {
        int e = ea + eb;
        if (e >= s.lo_) s.add_coeff(e, mul_value(ca, cb));
      }
    return s;
  }

  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  TruncSeries scaled(const R& c) const {
    TruncSeries s;
    s.lo_ = lo_;
    s.hi_ = hi_;
    if (!is_zero_value(c))
      for (const auto& [e, v] : coeff_) s.add_coeff(e, mul_value(v, c));
    return s;
  }

  TruncSeries shifted(int k) const {  // multiply by t^k
    TruncSeries s;
    s.lo_ = exact() ? kExactFloor : lo_ + k;
    s.hi_ = hi_ + k;
    for (const auto& [e, c] : coeff_) s.coeff_.emplace(e + k, c);
    return s;
  }

  // Inverse, requiring the top-support coefficient to be a unit.  The input
  // must have its full support known: top_support() is treated as the exact
  // valuation, which holds whenever hi_ is the hard bound maintained here.
  TruncSeries inverted() const {
    if (coeff_.empty()) throw NotInvertibleError("TruncSeries: inverse of zero window");
    int h = top_support();
    const R& lead = coeff_.rbegin()->second;
    R lead_inv = invert_value(lead);  // throws NotInvertibleError for non-units
    int rel = exact() ? default_rel_precision() : h - lo_;
    // f = lead * t^h (1 + sum_{k>=1} c_k t^{-k}); invert the unit part.
    std::vector<R> c(rel + 1), b(rel + 1);
    for (const auto& [e, v] : coeff_) {
      int k = h - e;
      if (k >= 1 && k <= rel) c[k] = mul_value(v, lead_inv);
    }
    b[0] = one_value();
    for (int k = 1; k <= rel; ++k) {
      R acc;
      for (int j = 1; j <= k; ++j) acc = add_value(acc, mul_value(c[j], b[k - j]));
      b[k] = negate_value(acc);
    }
    TruncSeries s;
    s.hi_ = -h;
    s.lo_ = exact() ? kExactFloor : lo_ - 2 * h;
    for (int k = 0; k <= rel; ++k)
      if (!is_zero_value(b[k])) s.coeff_.emplace(-h - k, mul_value(b[k], lead_inv));
    return s;
  }

  TruncSeries truncated(int new_lo) const {
    if (new_lo <= lo_) return *this;
    TruncSeries s;
    s.lo_ = new_lo;
    s.hi_ = std::max(hi_, new_lo);
    for (const auto& [e, c] : coeff_)
      if (e >= new_lo) s.coeff_.emplace(e, c);
    return s;
  }

  // Equality of all coefficients on the overlap of the two windows.
  bool agrees_with(const TruncSeries& o) const {
    int floor = std::max(lo_, o.lo_);
    int top = std::max(hi_, o.hi_);
    for (int e = floor; e <= top; ++e)
      if (!is_zero_value(sub_value(at(e), o.at(e)))) return false;
    return true;
  }

  const std::map<int, R>& coefficients() const { return coeff_; }

  std::string str(const std::string& var = "t") const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + value_str(it->second) + ")";
      if (it->first != 0) out += "*" + var + "^" + std::to_string(it->first);
    }
    if (!exact()) out += " + O(" + var + "^" + std::to_string(lo_ - 1) + ")";
    return out;
  }

  static int default_rel_precision() { return 48; }

 private:
  int lo_, hi_;
  std::map<int, R> coeff_;

  void add_coeff(int e, const R& c) {
    if (is_zero_value(c)) return;
    auto it = coeff_.find(e);
    if (it == coeff_.end()) {
      coeff_.emplace(e, c);
    } else {
      it->second = add_value(it->second, c);
      if (is_zero_value(it->second)) coeff_.erase(it);
    }
  }

  static int clamp_add(int a, int b) {
    if (a <= kExactFloor || b <= kExactFloor) return kExactFloor;
    long s = static_cast<long>(a) + b;
    if (s < kExactFloor) return kExactFloor;
    return static_cast<int>(s);
  }

  // Small ring adaptor so the template works for KScalar and Rat alike.
  static bool is_zero_value(const R& v) { return v.is_zero(); }
  static R add_value(const R& a, const R& b) { return a + b; }
  static R sub_value(const R& a, const R& b) { return a - b; }
  static R mul_value(const R& a, const R& b) { return a * b; }
  static R negate_value(const R& v) { return -v; }
  static R invert_value(const R& v) { return v.inverse(); }
  static R one_value() { return R(1); }
  static std::string value_str(const R& v) { return v.str(); }
};

using KSeries = TruncSeries<KScalar>;

}  // namespace ysl
