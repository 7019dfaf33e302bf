#include "ysl/yangian.hpp"

#include <algorithm>

#include "ysl/error.hpp"

namespace ysl {

std::string GenSym::str() const {
  const char* k = kind == GenKind::E ? "E" : kind == GenKind::F ? "F" : "H";
  return std::string(k) + std::to_string(node + 1) + "^(" + std::to_string(sup) + ")";
}

NCElem NCElem::scalar(const KScalar& c) {
  NCElem x;
  if (!c.is_zero()) x.terms_.emplace(Word{}, c);
  return x;
}

NCElem NCElem::word(Word w, const KScalar& c) {
  NCElem x;
  if (!c.is_zero()) x.terms_.emplace(std::move(w), c);
  return x;
}

void NCElem::add_term(const Word& w, const KScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCElem NCElem::operator-() const {
  NCElem x(*this);
  for (auto& [w, c] : x.terms_) c = -c;
  return x;
}

NCElem& NCElem::operator+=(const NCElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCElem& NCElem::operator-=(const NCElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCElem operator*(const NCElem& a, const NCElem& b) {
  NCElem out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NCElem& NCElem::scale(const KScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

int NCElem::max_word_length() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max<int>(m, static_cast<int>(w.size()));
  return m;
}

int NCElem::max_superscript() const {
  int m = 0;
  for (const auto& [w, c] : terms_)
    for (const auto& g : w) m = std::max(m, g.sup);
  return m;
}

std::string NCElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (const auto& g : w) out += " " + g.str();
  }
  return out;
}

NCElem commutator(const NCElem& a, const NCElem& b) { return a * b - b * a; }

YangianCtx make_yangian_ctx(const CartanDatum& dat, Coweight mu, int sup_cap, int len_cap) {
  YangianCtx ctx{dat, std::move(mu), sup_cap, len_cap};
  if (static_cast<int>(ctx.mu.size()) != dat.n)
    throw ConfigError("YangianCtx: coweight rank mismatch");
  int need = 2;
  for (int i = 0; i < dat.n; ++i) need = std::max(need, 2 + ctx.h_floor(i));
  if (sup_cap < need)
    throw ConfigError("YangianCtx: superscript cap " + std::to_string(sup_cap) +
                      " below Levendorskii range " + std::to_string(need));
  return ctx;
}

NCElem gen_elem(const YangianCtx& ctx, GenKind kind, int node, int sup) {
  if (node < 0 || node >= ctx.dat.n) throw ConfigError("gen_elem: bad node");
  if (sup > ctx.sup_cap)
    throw OverflowError("gen_elem: superscript " + std::to_string(sup) + " exceeds cap " +
                        std::to_string(ctx.sup_cap));
  if (kind == GenKind::H) {
    int floor = ctx.h_floor(node);
    if (sup < floor) return NCElem();
    if (sup == floor) return NCElem::one();
  } else {
    if (sup < 1) throw ConfigError("gen_elem: E/F superscript must be >= 1");
  }
  return NCElem::word({GenSym{kind, node, sup}});
}

static KScalar half_bilinear(const YangianCtx& ctx, int i, int j) {
  return KScalar(Rat(ctx.dat.bilinear(i, j)) / 2);
}

NCElem relation_defect(const YangianCtx& ctx, RelId rel, int i, int j, int p, int q) {
  auto E = [&](int node, int s) { return gen_elem(ctx, GenKind::E, node, s); };
  auto F = [&](int node, int s) { return gen_elem(ctx, GenKind::F, node, s); };
  auto H = [&](int node, int s) { return gen_elem(ctx, GenKind::H, node, s); };
  KScalar half = half_bilinear(ctx, i, j);
  switch (rel) {
    case RelId::HH:
      return commutator(H(i, p), H(j, q));
    case RelId::EF: {
      NCElem d = commutator(E(i, p), F(j, q));
      if (i == j) d -= H(i, p + q - 1);
      return d;
    }
    case RelId::HE: {
      NCElem lhs = commutator(H(i, p + 1), E(j, q)) - commutator(H(i, p), E(j, q + 1));
      NCElem rhs = (H(i, p) * E(j, q) + E(j, q) * H(i, p)).scale(half);
      return lhs - rhs;
    }
    case RelId::HF: {
      NCElem lhs = commutator(H(i, p + 1), F(j, q)) - commutator(H(i, p), F(j, q + 1));
      NCElem rhs = (H(i, p) * F(j, q) + F(j, q) * H(i, p)).scale(-half);
      return lhs - rhs;
    }
    case RelId::EE: {
      NCElem lhs = commutator(E(i, p + 1), E(j, q)) - commutator(E(i, p), E(j, q + 1));
      NCElem rhs = (E(i, p) * E(j, q) + E(j, q) * E(i, p)).scale(half);
      return lhs - rhs;
    }
    case RelId::FF: {
      NCElem lhs = commutator(F(i, p + 1), F(j, q)) - commutator(F(i, p), F(j, q + 1));
      NCElem rhs = (F(i, p) * F(j, q) + F(j, q) * F(i, p)).scale(-half);
      return lhs - rhs;
    }
    default:
      throw ConfigError("relation_defect: Serre relations go through serre_defect");
  }
}

NCElem relation_defect_ff_literal(const YangianCtx& ctx, int i, int j, int p, int q) {
  auto F = [&](int node, int s) { return gen_elem(ctx, GenKind::F, node, s); };
  KScalar half = half_bilinear(ctx, i, j);
  NCElem lhs = commutator(F(i, p + 1), F(j, q)) - commutator(F(i, p), F(j, q + 1));
  NCElem rhs = (F(i, p) * F(j, q) + F(j, p) * F(i, q)).scale(-half);
  return lhs - rhs;
}

NCElem serre_defect(const YangianCtx& ctx, RelId rel, int i, int j,
                    const std::vector<int>& sups, int q) {
  if (rel != RelId::SerreE && rel != RelId::SerreF)
    throw ConfigError("serre_defect: not a Serre relation id");
  if (i == j) throw ConfigError("serre_defect: requires i != j");
  int need = 1 - ctx.dat.cartan_entry(i, j);
  if (static_cast<int>(sups.size()) != need)
    throw ConfigError("serre_defect: expected N = " + std::to_string(need) + " superscripts");
  GenKind kind = rel == RelId::SerreE ? GenKind::E : GenKind::F;
  std::vector<int> perm = sups;
  std::sort(perm.begin(), perm.end());
  NCElem total;
  do {
    NCElem nested = gen_elem(ctx, kind, j, q);
    for (auto it = perm.rbegin(); it != perm.rend(); ++it)
      nested = commutator(gen_elem(ctx, kind, i, *it), nested);
    total += nested;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

NCElem levendorskii(const YangianCtx& ctx, int i, int k) {
  int floor = ctx.h_floor(i);
  if (k == 1) return gen_elem(ctx, GenKind::H, i, floor + 1);
  if (k == 2) {
    NCElem h1 = gen_elem(ctx, GenKind::H, i, floor + 1);
    return gen_elem(ctx, GenKind::H, i, floor + 2) - (h1 * h1).scale(KScalar(rat(1, 2)));
  }
  throw ConfigError("levendorskii: k must be 1 or 2");
}

std::pair<YangianCtx, NCElem> shift_generators(const YangianCtx& ctx, const Coweight& mu1,
                                               const Coweight& mu2, const NCElem& x) {
  if (!is_antidominant(mu1) || !is_antidominant(mu2))
    throw ConfigError("shift_generators: mu1, mu2 must be antidominant");
  YangianCtx target = make_yangian_ctx(ctx.dat, add(ctx.mu, add(mu1, mu2)),
                                       ctx.sup_cap, ctx.len_cap);
  NCElem out;
  for (const auto& [w, c] : x.terms()) {
    NCElem prod = NCElem::scalar(c);
    for (const auto& g : w) {
      int shift = 0;
      switch (g.kind) {
        case GenKind::E: shift = -mu1[g.node]; break;
        case GenKind::F: shift = -mu2[g.node]; break;
        case GenKind::H: shift = -(mu1[g.node] + mu2[g.node]); break;
      }
      prod *= gen_elem(target, g.kind, g.node, g.sup + shift);
    }
    out += prod;
  }
  return {target, out};
}

std::optional<int> filtration_degree(const YangianCtx& ctx, const NCElem& x,
                                     const Coweight& nu1, const Coweight& nu2) {
  if (x.is_zero()) return std::nullopt;
  int best = std::numeric_limits<int>::min();
  for (const auto& [w, c] : x.terms()) {
    int deg = 0;
    for (const auto& g : w) {
      switch (g.kind) {
        case GenKind::E: deg += nu1[g.node] + g.sup; break;
        case GenKind::F: deg += nu2[g.node] + g.sup; break;
        case GenKind::H: deg += ctx.mu[g.node] + g.sup; break;
      }
    }
    best = std::max(best, deg);
  }
  return best;
}

std::optional<std::vector<int>> root_grade(const YangianCtx& ctx, const NCElem& x) {
  std::optional<std::vector<int>> grade;
  for (const auto& [w, c] : x.terms()) {
    std::vector<int> g(ctx.dat.n, 0);
    for (const auto& s : w) {
      if (s.kind == GenKind::E) g[s.node] += 1;
      if (s.kind == GenKind::F) g[s.node] -= 1;
    }
    if (!grade) {
      grade = g;
    } else if (*grade != g) {
      return std::nullopt;
    }
  }
  if (!grade) grade = std::vector<int>(ctx.dat.n, 0);  // zero element: grade 0
  return grade;
}

}  // namespace ysl
