#include "ysl/diffop.hpp"

#include <algorithm>

#include "ysl/error.hpp"

namespace ysl {

WVarsPtr make_wvars(const std::vector<long>& m, const std::vector<long>& d) {
  WVars wv;
  wv.m = m;
  wv.d = d;
  wv.offset.resize(m.size());
  std::vector<std::string> names;
  for (size_t i = 0; i < m.size(); ++i) {
    wv.offset[i] = wv.total;
    for (long r = 0; r < m[i]; ++r) {
      names.push_back("w" + std::to_string(i + 1) + "_" + std::to_string(r + 1));
      wv.node_of.push_back(static_cast<int>(i));
    }
    wv.total += static_cast<int>(m[i]);
  }
  wv.vars = make_vars(std::move(names));
  return std::make_shared<const WVars>(std::move(wv));
}

DiffOp DiffOp::constant(const WVarsPtr& wv, const KScalar& c) {
  return coeff(wv, RatFn::constant(wv->vars, c));
}

DiffOp DiffOp::coeff(const WVarsPtr& wv, const RatFn& f) {
  DiffOp op(wv);
  if (!f.is_zero()) op.terms_.emplace(ShiftMono(wv->total, 0), f);
  return op;
}

DiffOp DiffOp::shift(const WVarsPtr& wv, int node, int r, int exp) {
  DiffOp op(wv);
  ShiftMono s(wv->total, 0);
  s[wv->flat(node, r)] = exp;
  op.terms_.emplace(std::move(s), RatFn::constant(wv->vars, KScalar(1)));
  return op;
}

DiffOp DiffOp::w_var(const WVarsPtr& wv, int node, int r) {
  return coeff(wv, RatFn(MPoly::variable(wv->vars, wv->flat(node, r))));
}

void DiffOp::merge_ctx(const DiffOp& o) {
  if (!wv_) { wv_ = o.wv_; return; }
  if (!o.wv_) return;
  if (wv_.get() != o.wv_.get() && !(*wv_ == *o.wv_))
    throw ContextError("DiffOp: mismatched variable blocks");
}

void DiffOp::add_term(const ShiftMono& s, const RatFn& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, f);
  } else {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFn DiffOp::shift_coeff(const RatFn& f, const ShiftMono& by) const {
  RatFn out = f;
  for (int v = 0; v < wv_->total; ++v) {
    if (by[v] == 0) continue;
    long step = wv_->d[wv_->node_of[v]];
    out = out.shift_var(v, KScalar(Rat(by[v] * step)));
  }
  return out;
}

DiffOp DiffOp::operator-() const {
  DiffOp op(*this);
  for (auto& [s, f] : op.terms_) f = -f;
  return op;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  merge_ctx(o);
  for (const auto& [s, f] : o.terms_) add_term(s, f);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  merge_ctx(o);
  for (const auto& [s, f] : o.terms_) add_term(s, -f);
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  DiffOp out(a.wv_ ? a.wv_ : b.wv_);
  out.merge_ctx(a);
  out.merge_ctx(b);
  for (const auto& [sa, fa] : a.terms_) {
    for (const auto& [sb, fb] : b.terms_) {
      ShiftMono s = sa;
      for (size_t v = 0; v < s.size(); ++v) s[v] += sb[v];
      out.add_term(s, fa * out.shift_coeff(fb, sa));
    }
  }
  return out;
}

DiffOp& DiffOp::scale(const KScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, f] : terms_) f.scale(c);
  return *this;
}

std::optional<std::vector<int>> DiffOp::grade(int rank) const {
  std::optional<std::vector<int>> g;
  for (const auto& [s, f] : terms_) {
    std::vector<int> cur(rank, 0);
    for (size_t v = 0; v < s.size(); ++v) cur[wv_->node_of[v]] -= s[v];
    if (!g) {
      g = cur;
    } else if (*g != cur) {
      return std::nullopt;
    }
  }
  if (!g) g = std::vector<int>(rank, 0);
  return g;
}

std::map<std::vector<int>, DiffOp> DiffOp::graded_parts(int rank) const {
  std::map<std::vector<int>, DiffOp> parts;
  for (const auto& [s, f] : terms_) {
    std::vector<int> cur(rank, 0);
    for (size_t v = 0; v < s.size(); ++v) cur[wv_->node_of[v]] -= s[v];
    auto it = parts.find(cur);
    if (it == parts.end()) it = parts.emplace(cur, DiffOp(wv_)).first;
    it->second.add_term(s, f);
  }
  return parts;
}

std::string DiffOp::key() const {
  std::string out;
  out.reserve(128);
  for (const auto& [s, f] : terms_) {
    for (int e : s) {
      out += std::to_string(e);
      out += '.';
    }
    out += '!';
    f.compact_key(&out);
    out += '#';
  }
  return out;
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, f] : terms_) {
    if (!out.empty()) out += " + ";
    out += "{" + f.str() + "}";
    for (size_t v = 0; v < s.size(); ++v) {
      if (s[v] == 0) continue;
      int node = wv_->node_of[v] + 1;
      int idx = v - wv_->offset[node - 1] + 1;
      out += " u" + std::to_string(node) + "_" + std::to_string(idx);
      if (s[v] != 1) out += "^" + std::to_string(s[v]);
    }
  }
  return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

}  // namespace ysl
