#include "ysl/chart.hpp"

#include <array>
#include <random>

#include "ysl/aseries.hpp"
#include "ysl/dual.hpp"
#include "ysl/error.hpp"
#include "ysl/gklo.hpp"

namespace ysl {

ChartFn ChartFn::constant(const KScalar& v) {
  ChartFn f;
  f.add_term(0, 0, v);
  return f;
}

ChartFn ChartFn::b(int exp) {
  ChartFn f;
  f.add_term(exp, 0, KScalar(1));
  return f;
}

ChartFn ChartFn::c(int exp) {
  ChartFn f;
  f.add_term(0, exp, KScalar(1));
  return f;
}

void ChartFn::add_term(int be, int ce, const KScalar& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(be, ce);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ChartFn ChartFn::operator-() const {
  ChartFn f(*this);
  for (auto& [k, v] : f.terms_) v = -v;
  return f;
}

ChartFn& ChartFn::operator+=(const ChartFn& o) {
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
  return *this;
}

ChartFn& ChartFn::operator-=(const ChartFn& o) {
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, -v);
  return *this;
}

ChartFn operator*(const ChartFn& a, const ChartFn& b) {
  ChartFn out;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms())
      out.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  return out;
}

ChartFn& ChartFn::scale(const KScalar& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= k;
  return *this;
}

ChartFn ChartFn::d_db() const {
  ChartFn out;
  for (const auto& [k, v] : terms_)
    if (k.first != 0) out.add_term(k.first - 1, k.second, v * KScalar(Rat(k.first)));
  return out;
}

ChartFn ChartFn::d_dc() const {
  ChartFn out;
  for (const auto& [k, v] : terms_)
    if (k.second != 0) out.add_term(k.first, k.second - 1, v * KScalar(Rat(k.second)));
  return out;
}

ChartFn ChartFn::divided_by_term(const std::pair<int, int>& mono, const KScalar& coeff) const {
  ChartFn out;
  KScalar inv = coeff.inverse();
  for (const auto& [k, v] : terms_) {
    int ce = k.second - mono.second;
    if (ce < 0) throw Error("ChartFn: division would need negative c powers");
    out.add_term(k.first - mono.first, ce, v * inv);
  }
  return out;
}

std::string ChartFn::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + v.str() + ")";
    if (k.first) out += "*b^" + std::to_string(k.first);
    if (k.second) out += "*c^" + std::to_string(k.second);
  }
  return out;
}

ChartFn chart_bracket(const ChartFn& f, const ChartFn& g, const ChartFn& structure) {
  return (f.d_dc() * g.d_db() - f.d_db() * g.d_dc()) * structure;
}

namespace {

// u-polynomials with chart coefficients; index = power of u.
using UPoly = std::vector<ChartFn>;

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return out;
}

UPoly upoly_scale(UPoly a, const KScalar& k) {
  for (auto& c : a) c.scale(k);
  return a;
}

// Matrix coefficients of the chart matrix [0, b; -b^{-1}, u - c].
UPoly entry(int row, int col) {
  if (row == 0 && col == 0) return {};
  if (row == 0 && col == 1) return {ChartFn::b()};
  if (row == 1 && col == 0) return {-ChartFn::b(-1)};
  return {-ChartFn::c(), ChartFn::constant(KScalar(1))};
}

struct Vec2 {
  std::array<KScalar, 2> c;  // coordinates in (v1, v2) or (v1*, v2*)
};

Vec2 basis_vec(int k) {
  Vec2 v;
  v.c[k] = KScalar(1);
  return v;
}

// sl2 action on the defining representation and its dual.
Vec2 act(int gen, const Vec2& v, bool dual) {
  Vec2 out;
  if (!dual) {
    switch (gen) {
      case 0: out.c[0] = v.c[1]; break;                      // e: v2 -> v1
      case 1: out.c[1] = v.c[0]; break;                      // f: v1 -> v2
      case 2: out.c[0] = v.c[0]; out.c[1] = -v.c[1]; break;  // h
    }
  } else {
    switch (gen) {
      case 0: out.c[1] = -v.c[0]; break;                     // e: v1* -> -v2*
      case 1: out.c[0] = -v.c[1]; break;                     // f: v2* -> -v1*
      case 2: out.c[0] = -v.c[0]; out.c[1] = v.c[1]; break;  // h
    }
  }
  return out;
}

UPoly delta(const Vec2& beta, const Vec2& w) {
  UPoly out;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      KScalar k = beta.c[r] * w.c[s];
      if (k.is_zero()) continue;
      out = upoly_add(out, upoly_scale(entry(r, s), k));
    }
  return out;
}

}  // namespace

ChartFn solve_chart_structure(long d) {
  // Dual bases (e, f, h) and (d f, d e, (d/2) h) for the invariant form.
  struct DualPair {
    int gen;
    int dual_gen;
    Rat coeff;
  };
  std::vector<DualPair> casimir = {{0, 1, Rat(d)}, {1, 0, Rat(d)}, {2, 2, Rat(d) / 2}};

  ChartFn structure;
  bool have = false;
  for (int b1 = 0; b1 < 2; ++b1)
    for (int w1 = 0; w1 < 2; ++w1)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int w2 = 0; w2 < 2; ++w2) {
          UPoly f = delta(basis_vec(b1), basis_vec(w1));
          UPoly g = delta(basis_vec(b2), basis_vec(w2));
          // LHS: (u - v){f(u), g(v)} with {x, y} = Jac(x, y) * X.
          // RHS: sum over the Casimir pairs.
          // Coefficients at u^a v^b give ChartFn equations  jac * X = rhs.
          size_t du = f.size(), dv = g.size();
          if (du == 0 || dv == 0) continue;
          // jac[a][b], shifted by the (u - v) factor
          std::vector<std::vector<ChartFn>> xcoef(du + 1, std::vector<ChartFn>(dv + 1));
          for (size_t a = 0; a < du; ++a)
            for (size_t bb = 0; bb < dv; ++bb) {
              ChartFn jac = f[a].d_dc() * g[bb].d_db() - f[a].d_db() * g[bb].d_dc();
              xcoef[a + 1][bb] += jac;  // u * u^a v^b
              xcoef[a][bb + 1] -= jac;  // -v * u^a v^b
            }
          std::vector<std::vector<ChartFn>> rhs(du + 1, std::vector<ChartFn>(dv + 1));
          for (const auto& pair : casimir) {
            UPoly lf = delta(basis_vec(b1), act(pair.gen, basis_vec(w1), false));
            UPoly rg = delta(basis_vec(b2), act(pair.dual_gen, basis_vec(w2), false));
            for (size_t a = 0; a < lf.size(); ++a)
              for (size_t bb = 0; bb < rg.size(); ++bb) {
                ChartFn term = lf[a] * rg[bb];
                term.scale(KScalar(pair.coeff));
                rhs[a][bb] += term;
              }
            UPoly lfd = delta(act(pair.gen, basis_vec(b1), true), basis_vec(w1));
            UPoly rgd = delta(act(pair.dual_gen, basis_vec(b2), true), basis_vec(w2));
            for (size_t a = 0; a < lfd.size(); ++a)
              for (size_t bb = 0; bb < rgd.size(); ++bb) {
                ChartFn term = lfd[a] * rgd[bb];
                term.scale(KScalar(pair.coeff));
                rhs[a][bb] -= term;
              }
          }
          for (size_t a = 0; a <= du; ++a)
            for (size_t bb = 0; bb <= dv; ++bb) {
              const ChartFn& jac = xcoef[a][bb];
              const ChartFn& target = rhs[a][bb];
              if (jac.is_zero()) {
                if (!target.is_zero())
                  throw Error("solve_chart_structure: inconsistent constraint (convention bug)");
                continue;
              }
              if (jac.single_term()) {
                const auto& [mono, coeff] = *jac.terms().begin();
                ChartFn candidate = target.divided_by_term(mono, coeff);
                if (!have) {
                  structure = candidate;
                  have = true;
                } else if (!(structure == candidate)) {
                  throw Error("solve_chart_structure: overdetermined system disagrees");
                }
              }
            }
        }
  if (!have) throw Error("solve_chart_structure: no solvable coefficient equation");
  // verify the full system with the solved structure
  for (int b1 = 0; b1 < 2; ++b1)
    for (int w1 = 0; w1 < 2; ++w1)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int w2 = 0; w2 < 2; ++w2) {
          UPoly f = delta(basis_vec(b1), basis_vec(w1));
          UPoly g = delta(basis_vec(b2), basis_vec(w2));
          if (f.empty() || g.empty()) continue;
          std::vector<std::vector<ChartFn>> lhs(f.size() + 1, std::vector<ChartFn>(g.size() + 1));
          for (size_t a = 0; a < f.size(); ++a)
            for (size_t bb = 0; bb < g.size(); ++bb) {
              ChartFn br = chart_bracket(f[a], g[bb], structure);
              lhs[a + 1][bb] += br;
              lhs[a][bb + 1] -= br;
            }
          std::vector<DualPair> casimir2 = {{0, 1, Rat(d)}, {1, 0, Rat(d)}, {2, 2, Rat(d) / 2}};
          std::vector<std::vector<ChartFn>> rhs(f.size() + 1, std::vector<ChartFn>(g.size() + 1));
          for (const auto& pair : casimir2) {
            UPoly lf = delta(basis_vec(b1), act(pair.gen, basis_vec(w1), false));
            UPoly rg = delta(basis_vec(b2), act(pair.dual_gen, basis_vec(w2), false));
            for (size_t a = 0; a < lf.size(); ++a)
              for (size_t bb = 0; bb < rg.size(); ++bb) {
                ChartFn term = lf[a] * rg[bb];
                term.scale(KScalar(pair.coeff));
                rhs[a][bb] += term;
              }
            UPoly lfd = delta(act(pair.gen, basis_vec(b1), true), basis_vec(w1));
            UPoly rgd = delta(act(pair.dual_gen, basis_vec(b2), true), basis_vec(w2));
            for (size_t a = 0; a < lfd.size(); ++a)
              for (size_t bb = 0; bb < rgd.size(); ++bb) {
                ChartFn term = lfd[a] * rgd[bb];
                term.scale(KScalar(pair.coeff));
                rhs[a][bb] -= term;
              }
          }
          for (size_t a = 0; a < lhs.size(); ++a)
            for (size_t bb = 0; bb < lhs[a].size(); ++bb)
              if (!(lhs[a][bb] == rhs[a][bb]))
                throw Error("solve_chart_structure: residual inconsistency at verification");
        }
  return structure;
}

std::vector<ChartCheck> moment_flow_checks(long d, unsigned seed) {
  std::vector<ChartCheck> out;
  auto ctx = make_sqrt_ctx({d});
  KScalar dhalf = KScalar::sqrt_sym(ctx, 0);
  KScalar dinvhalf = KScalar::inv_sqrt_sym(ctx, 0);
  ChartFn structure = solve_chart_structure(d);
  ChartFn phi = ChartFn::b();
  phi.scale(dinvhalf);

  struct Sample {
    std::string name;
    ChartFn fn;
  };
  std::vector<Sample> fns = {{"b", ChartFn::b()},
                             {"c", ChartFn::c()},
                             {"b*c", ChartFn::b() * ChartFn::c()},
                             {"c^2", ChartFn::c() * ChartFn::c()}};
  // symbolic identity: eps-derivative along the (-eps)-action is
  // -d^{1/2} b df/dc
  for (const auto& s : fns) {
    ChartFn lhs = s.fn.d_dc() * ChartFn::b();
    lhs.scale(-dhalf);
    ChartFn rhs = chart_bracket(phi, s.fn, structure);
    bool pass = lhs == rhs;
    out.push_back(ChartCheck{"flow of " + s.name + " (symbolic)", pass,
                             pass ? "" : (lhs - rhs).str()});
  }
  // dual-number evaluation at rational sample points
  std::mt19937_64 rng(seed);
  auto vars = make_vars({"b", "c"});
  auto to_mpoly = [&](const ChartFn& f) {
    MPoly p;
    for (const auto& [k, v] : f.terms()) {
      if (k.first < 0) throw Error("moment_flow_checks: negative b power in sample fn");
      MPoly mono = MPoly::constant(vars, v);
      if (k.first) mono *= MPoly::variable(vars, 0, k.first);
      if (k.second) mono *= MPoly::variable(vars, 1, k.second);
      p += mono;
    }
    return p;
  };
  for (int t = 0; t < 25; ++t) {
    KScalar b0(Rat(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 3)));
    KScalar c0(Rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 2)));
    std::vector<DualScalar> point{DualScalar{b0, KScalar()},
                                  DualScalar{c0, -(dhalf * b0)}};
    for (const auto& s : fns) {
      DualScalar val = dual_apply(to_mpoly(s.fn), point);
      ChartFn br = chart_bracket(phi, s.fn, structure);
      KScalar expect;
      for (const auto& [k, v] : br.terms()) {
        KScalar term = v;
        for (int e = 0; e < k.first; ++e) term *= b0;
        if (k.first < 0)
          for (int e = 0; e < -k.first; ++e) term *= b0.inverse();
        for (int e = 0; e < k.second; ++e) term *= c0;
        expect += term;
      }
      bool pass = val.infinitesimal == expect;
      if (!pass || t == 0)
        out.push_back(ChartCheck{"flow of " + s.name + " at sample " + std::to_string(t), pass,
                                 pass ? "" : val.infinitesimal.str() + " vs " + expect.str()});
      if (!pass) return out;
    }
  }
  return out;
}

ChartCheck chart_quantum_cross_check(long d) {
  CartanDatum dat = make_cartan(std::vector<std::vector<int>>{{2}}, std::vector<long>{d});
  GkloRep rep(make_gklo(dat, {0}, {-2}, {{}}));
  struct PhiHost {
    using Value = DiffOp;
    const GkloRep* rep;
    Value zero() const { return DiffOp(rep->wvars()); }
    Value from_rat(const Rat& r) const { return DiffOp::constant(rep->wvars(), KScalar(r)); }
    Value h(int node, int sup) const { return rep->gen(GenSym{GenKind::H, node, sup}); }
  };
  PhiHost host{&rep};
  ASeries<PhiHost> solver(dat, {0}, {-2}, {{}}, 1, host);
  DiffOp a1 = solver.coefficients()[0][1];
  KScalar dhalf = KScalar::sqrt_sym(dat.sym, 0);
  DiffOp e1 = rep.e(0, 1);
  DiffOp lhs = commutator(-a1, e1.scale(dhalf));
  // symbol: f(w) u^k maps to f(c) (-b)^{-k}
  ChartFn symbol;
  for (const auto& [mono, coeff] : lhs.terms()) {
    if (!coeff.den_factors().empty())
      return ChartCheck{"quantum cross-oracle", false, "unexpected denominator"};
    int k = mono.empty() ? 0 : mono[0];
    for (const auto& [expo, v] : coeff.num().terms()) {
      int we = expo.empty() ? 0 : expo[0];
      ChartFn term = ChartFn::c(we);
      term.scale(v);
      ChartFn bpart = ChartFn::b(-k);
      if (k % 2) bpart.scale(KScalar(Rat(-1)));
      symbol += term * bpart;
    }
  }
  ChartFn structure = solve_chart_structure(d);
  bool pass = symbol == structure;
  return ChartCheck{"quantum cross-oracle symbol of [-A^(1), d^(1/2) E^(1)]", pass,
                    pass ? "" : symbol.str() + " vs " + structure.str()};
}

}  // namespace ysl
