#include "ysl/dop.hpp"

#include "ysl/error.hpp"

namespace ysl {

DOp DOp::constant(const KScalar& c) { return term(0, 0, c); }
DOp DOp::z(int n) { return term(0, n, KScalar(1)); }
DOp DOp::del(int m) { return term(m, 0, KScalar(1)); }

DOp DOp::term(int m, int n, const KScalar& c) {
  if (m < 0) throw ConfigError("DOp: negative derivative order");
  DOp op;
  if (!c.is_zero()) op.terms_.emplace(std::make_pair(m, n), c);
  return op;
}

void DOp::add_term(int m, int n, const KScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(m, n);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DOp DOp::operator-() const {
  DOp op(*this);
  for (auto& [k, c] : op.terms_) c = -c;
  return op;
}

DOp& DOp::operator+=(const DOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

DOp& DOp::operator-=(const DOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

DOp operator*(const DOp& a, const DOp& b) {
  // (del^p z^q)(del^r z^s): reorder z^q del^r with
  // z^n del^m = sum_k (-1)^k C(m,k) n(n-1)...(n-k+1) del^(m-k) z^(n-k).
  DOp out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      int p = ka.first, q = ka.second, r = kb.first, s = kb.second;
      Rat fall(1);  // falling factorial q(q-1)...(q-k+1)
      Rat binom(1);
      for (int k = 0; k <= r; ++k) {
        Rat coeff = binom * fall * (k % 2 ? Rat(-1) : Rat(1));
        out.add_term(p + r - k, q + s - k, (ca * cb) * KScalar(coeff));
        binom = binom * Rat(r - k) / Rat(k + 1);
        fall *= Rat(q - k);
      }
    }
  }
  return out;
}

DOp& DOp::scale(const KScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::map<int, KScalar> DOp::quotient_class() const {
  std::map<int, KScalar> cls;
  for (const auto& [k, c] : terms_) {
    auto it = cls.find(k.first);
    if (it == cls.end()) {
      cls.emplace(k.first, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) cls.erase(it);
    }
  }
  return cls;
}

std::string DOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (k.first) out += " del^" + std::to_string(k.first);
    if (k.second) out += " z^" + std::to_string(k.second);
  }
  return out;
}

DOp commutator(const DOp& a, const DOp& b) { return a * b - b * a; }

}  // namespace ysl
