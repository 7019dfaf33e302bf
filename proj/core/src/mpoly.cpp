#include "ysl/mpoly.hpp"

#include <algorithm>

#include "ysl/error.hpp"

namespace ysl {

VarSetPtr make_vars(std::vector<std::string> names) {
  VarSet v;
  v.names = std::move(names);
  return std::make_shared<const VarSet>(std::move(v));
}

bool MPoly::is_zero_expo(const Expo& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

const VarSetPtr& MPoly::merge_vars(const VarSetPtr& a, const VarSetPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a.get() != b.get() && !(*a == *b))
    throw ContextError("MPoly: mismatched variable sets");
  return a;
}

void MPoly::promote_to(const VarSetPtr& target) {
  size_t want = target ? target->names.size() : 0;
  vars_ = target;
  if (terms_.empty() || terms_[0].first.size() == want) return;
  for (auto& [e, c] : terms_) e.resize(want, 0);
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
}

MPoly MPoly::constant(const VarSetPtr& vars, const KScalar& c) {
  MPoly p;
  p.vars_ = vars;
  if (!c.is_zero()) p.terms_.emplace_back(Expo(vars ? vars->names.size() : 0, 0), c);
  return p;
}

MPoly MPoly::variable(const VarSetPtr& vars, int idx, int power) {
  if (!vars || idx < 0 || idx >= vars->size()) throw ContextError("MPoly::variable: bad index");
  MPoly p;
  p.vars_ = vars;
  Expo e(vars->names.size(), 0);
  e[idx] = power;
  p.terms_.emplace_back(std::move(e), KScalar(1));
  return p;
}

KScalar MPoly::constant_value() const {
  if (terms_.empty()) return KScalar();
  if (!is_constant()) throw Error("MPoly: not a constant: " + str());
  return terms_[0].second;
}

void MPoly::add_sorted(const Expo& e, const KScalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Expo& v) { return t.first < v; });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{e, c});
  }
}

// Merges a lex-sorted term vector (possibly with duplicate keys) into this.
void MPoly::merge_sorted(std::vector<Term>&& incoming) {
  if (incoming.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + incoming.size());
  size_t i = 0, j = 0;
  auto push = [&merged](const Expo& e, const KScalar& c) {
    if (c.is_zero()) return;
    if (!merged.empty() && merged.back().first == e) {
      merged.back().second += c;
      if (merged.back().second.is_zero()) merged.pop_back();
    } else {
      merged.emplace_back(e, c);
    }
  };
  while (i < terms_.size() || j < incoming.size()) {
    if (j == incoming.size() || (i < terms_.size() && terms_[i].first <= incoming[j].first)) {
      push(terms_[i].first, terms_[i].second);
      ++i;
    } else {
      push(incoming[j].first, incoming[j].second);
      ++j;
    }
  }
  terms_ = std::move(merged);
}

MPoly MPoly::operator-() const {
  MPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  const VarSetPtr target = merge_vars(vars_, o.vars_);
  promote_to(target);
  std::vector<Term> incoming = o.terms_;
  if (!incoming.empty() && incoming[0].first.size() != (target ? target->names.size() : 0)) {
    for (auto& [e, c] : incoming) e.resize(target->names.size(), 0);
    std::sort(incoming.begin(), incoming.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
  }
  merge_sorted(std::move(incoming));
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  out.vars_ = MPoly::merge_vars(a.vars_, b.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  size_t want = out.vars_ ? out.vars_->names.size() : 0;
  std::vector<MPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      KScalar c = ca * cb;
      if (c.is_zero()) continue;
      MPoly::Expo e(want, 0);
      for (size_t t = 0; t < ea.size(); ++t) e[t] += ea[t];
      for (size_t t = 0; t < eb.size(); ++t) e[t] += eb[t];
      prods.emplace_back(std::move(e), std::move(c));
    }
  }
  std::sort(prods.begin(), prods.end(),
            [](const MPoly::Term& x, const MPoly::Term& y) { return x.first < y.first; });
  out.merge_sorted(std::move(prods));
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::scale(const KScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw Error("MPoly::pow: negative exponent");
  MPoly acc = constant(vars_, KScalar(1));
  MPoly base(*this);
  while (e > 0) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  size_t mine = terms_[0].first.size(), theirs = o.terms_[0].first.size();
  if (mine == theirs) return terms_ == o.terms_;
  MPoly a(*this), b(o);
  const VarSetPtr target = merge_vars(vars_, o.vars_);
  a.promote_to(target);
  b.promote_to(target);
  return a.terms_ == b.terms_;
}

int MPoly::cmp(const MPoly& o) const {
  size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t k = 0; k < n; ++k) {
    if (terms_[k].first != o.terms_[k].first) return terms_[k].first < o.terms_[k].first ? -1 : 1;
    int c = terms_[k].second.cmp(o.terms_[k].second);
    if (c != 0) return c;
  }
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
  return 0;
}

MPoly MPoly::shift_var(int idx, const KScalar& c) const {
  if (c.is_zero() || terms_.empty()) return *this;
  MPoly out;
  out.vars_ = vars_;
  std::vector<Term> acc;
  for (const auto& [e, coeff] : terms_) {
    int n = e[idx];
    KScalar cpow(1);
    std::vector<KScalar> cpows(n + 1);
    for (int k = 0; k <= n; ++k) {
      cpows[k] = cpow;
      if (k < n) cpow *= c;
    }
    Rat binom(1);
    for (int k = n; k >= 0; --k) {
      Expo e2 = e;
      e2[idx] = k;
      acc.emplace_back(std::move(e2), coeff * KScalar(binom) * cpows[n - k]);
      if (k > 0) binom = binom * k / (n - k + 1);
    }
  }
  std::sort(acc.begin(), acc.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  out.merge_sorted(std::move(acc));
  return out;
}

MPoly MPoly::substitute(int idx, const MPoly& value) const {
  MPoly out;
  out.vars_ = merge_vars(vars_, value.vars_);
  for (const auto& [e, coeff] : terms_) {
    Expo e2 = e;
    int n = e[idx];
    e2[idx] = 0;
    MPoly term;
    term.vars_ = vars_;
    term.terms_.emplace_back(std::move(e2), coeff);
    term *= value.pow(n);
    out += term;
  }
  return out;
}

KScalar MPoly::eval(const std::vector<KScalar>& point) const {
  KScalar acc;
  for (const auto& [e, coeff] : terms_) {
    KScalar term = coeff;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw Error("MPoly::eval: negative exponent");
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

std::optional<MPoly> MPoly::try_divide(const MPoly& divisor) const {
  if (divisor.is_zero()) throw NotInvertibleError("MPoly: division by zero");
  const VarSetPtr target = merge_vars(vars_, divisor.vars_);
  MPoly rem(*this);
  rem.promote_to(target);
  MPoly div(divisor);
  div.promote_to(target);
  MPoly quot;
  quot.vars_ = target;
  const auto& dlead = div.terms_.back();
  KScalar dinv = dlead.second.inverse();
  while (!rem.is_zero()) {
    const auto& rlead = rem.terms_.back();
    Expo q = rlead.first;
    bool ok = true;
    for (size_t i = 0; i < q.size(); ++i) {
      q[i] -= dlead.first[i];
      if (q[i] < 0) { ok = false; break; }
    }
    if (!ok) return std::nullopt;
    MPoly t;
    t.vars_ = target;
    t.terms_.emplace_back(std::move(q), rlead.second * dinv);
    quot += t;
    rem -= t * div;
  }
  return quot;
}

KScalar MPoly::leading_coeff() const {
  if (terms_.empty()) return KScalar();
  return terms_.back().second;
}

int MPoly::degree(int idx) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string piece = "(" + c.str() + ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      piece += "*" + (vars_ ? vars_->names[i] : "x" + std::to_string(i));
      if (e[i] != 1) piece += "^" + std::to_string(e[i]);
    }
    if (!first) out += " + ";
    out += piece;
    first = false;
  }
  return out;
}

}  // namespace ysl
