#include "ysl/gklo.hpp"

#include <algorithm>
#include <set>

#include "ysl/aseries.hpp"
#include "ysl/error.hpp"

namespace ysl {

bool GKLOData::has_edge(int from, int to) const {
  if (from == to || dat.cartan_entry(from, to) == 0) return false;
  bool forward = from < to;
  return flipped_orientation ? !forward : forward;
}

std::string GKLOData::describe() const {
  std::string s = dat.name + " lambda=" + coweight_str(lambda) + " mu=" + coweight_str(mu) + " R=";
  for (size_t i = 0; i < R.size(); ++i) {
    s += i ? ";{" : "{";
    for (size_t k = 0; k < R[i].size(); ++k) s += (k ? "," : "") + rat_str(R[i][k]);
    s += "}";
  }
  if (flipped_orientation) s += " flipped";
  return s;
}

GKLODataPtr make_gklo(const CartanDatum& dat, const Coweight& lambda, const Coweight& mu,
                      const std::vector<std::vector<Rat>>& R, bool flipped_orientation,
                      bool corrupt_e_sign) {
  GKLOData g;
  g.dat = dat;
  g.lambda = lambda;
  g.mu = mu;
  g.R = R;
  g.m = coroot_decomposition(dat, lambda, mu);
  g.flipped_orientation = flipped_orientation;
  g.corrupt_e_sign = corrupt_e_sign;
  if (static_cast<int>(R.size()) != dat.n) throw ConfigError("make_gklo: R has wrong rank");
  for (int i = 0; i < dat.n; ++i)
    if (static_cast<long>(R[i].size()) != lambda[i])
      throw ConfigError("make_gklo: |R_" + std::to_string(i + 1) + "| must equal lambda_" +
                        std::to_string(i + 1));
  g.wv = make_wvars(g.m, dat.d);
  return std::make_shared<const GKLOData>(std::move(g));
}

GkloRep::GkloRep(GKLODataPtr data) : data_(std::move(data)) {}

namespace {

// W_j evaluated at (w_{i,r} + c): prod over s of (w_{i,r} + c - w_{j,s}).
MPoly w_poly_at(const GKLOData& g, int j, int i, int r, const Rat& c) {
  const WVarsPtr& wv = g.wv;
  MPoly acc = MPoly::constant(wv->vars, KScalar(1));
  for (long s = 0; s < g.m[j]; ++s) {
    MPoly factor = MPoly::variable(wv->vars, wv->flat(i, r));
    factor += MPoly::constant(wv->vars, KScalar(c));
    factor -= MPoly::variable(wv->vars, wv->flat(j, static_cast<int>(s)));
    acc *= factor;
  }
  return acc;
}

MPoly p_poly_at(const GKLOData& g, int i, int r) {
  const WVarsPtr& wv = g.wv;
  MPoly acc = MPoly::constant(wv->vars, KScalar(1));
  for (const Rat& c : g.R[i]) {
    MPoly factor = MPoly::variable(wv->vars, wv->flat(i, r));
    factor -= MPoly::constant(wv->vars, KScalar(c));
    acc *= factor;
  }
  return acc;
}

MPoly wir_power(const GKLOData& g, int i, int r, const Rat& offset, int e) {
  const WVarsPtr& wv = g.wv;
  MPoly base = MPoly::variable(wv->vars, wv->flat(i, r));
  base += MPoly::constant(wv->vars, KScalar(offset));
  return base.pow(e);
}

std::vector<MPoly> same_node_den_factors(const GKLOData& g, int i, int r) {
  const WVarsPtr& wv = g.wv;
  std::vector<MPoly> factors;
  for (long s = 0; s < g.m[i]; ++s) {
    if (static_cast<int>(s) == r) continue;
    MPoly factor = MPoly::variable(wv->vars, wv->flat(i, r));
    factor -= MPoly::variable(wv->vars, wv->flat(i, static_cast<int>(s)));
    factors.push_back(std::move(factor));
  }
  return factors;
}

}  // namespace

DiffOp GkloRep::make_e(int node, int sup) const {
  const GKLOData& g = *data_;
  DiffOp acc(g.wv);
  for (long r = 0; r < g.m[node]; ++r) {
    MPoly num = p_poly_at(g, node, static_cast<int>(r));
    for (int j = 0; j < g.dat.n; ++j) {
      if (!g.has_edge(j, node)) continue;
      int count = -g.dat.cartan_entry(j, node);
      for (int s = 1; s <= count; ++s) {
        Rat c = -(Rat(g.dat.bilinear(node, j)) / 2) - Rat(s * g.dat.d[j]);
        num *= w_poly_at(g, j, node, static_cast<int>(r), c);
      }
    }
    num *= wir_power(g, node, static_cast<int>(r), Rat(0), sup - 1);
    RatFn coeff = RatFn::with_den_factors(num, same_node_den_factors(g, node, static_cast<int>(r)));
    DiffOp term = DiffOp::coeff(g.wv, coeff);
    term *= DiffOp::shift(g.wv, node, static_cast<int>(r), -1);
    acc += term;
  }
  KScalar scalar = -KScalar::inv_sqrt_sym(g.dat.sym, node);
  if (g.corrupt_e_sign) scalar = -scalar;
  return acc.scale(scalar);
}

DiffOp GkloRep::make_f(int node, int sup) const {
  const GKLOData& g = *data_;
  DiffOp acc(g.wv);
  for (long r = 0; r < g.m[node]; ++r) {
    MPoly num = MPoly::constant(g.wv->vars, KScalar(1));
    for (int j = 0; j < g.dat.n; ++j) {
      if (!g.has_edge(node, j)) continue;
      int count = -g.dat.cartan_entry(j, node);
      for (int s = 1; s <= count; ++s) {
        Rat c = -(Rat(g.dat.bilinear(node, j)) / 2) + Rat(g.dat.d[node]) - Rat(s * g.dat.d[j]);
        num *= w_poly_at(g, j, node, static_cast<int>(r), c);
      }
    }
    num *= wir_power(g, node, static_cast<int>(r), Rat(g.dat.d[node]), sup - 1);
    RatFn coeff = RatFn::with_den_factors(num, same_node_den_factors(g, node, static_cast<int>(r)));
    DiffOp term = DiffOp::coeff(g.wv, coeff);
    term *= DiffOp::shift(g.wv, node, static_cast<int>(r), +1);
    acc += term;
  }
  return acc.scale(KScalar::inv_sqrt_sym(g.dat.sym, node));
}

DiffOp GkloRep::e(int node, int sup) const { return gen(GenSym{GenKind::E, node, sup}); }
DiffOp GkloRep::f(int node, int sup) const { return gen(GenSym{GenKind::F, node, sup}); }
DiffOp GkloRep::h(int node, int sup) const { return gen(GenSym{GenKind::H, node, sup}); }

DiffOp GkloRep::gen(const GenSym& gsym) const {
  auto it = cache_.find(gsym);
  if (it != cache_.end()) return it->second;
  const GKLOData& g = *data_;
  DiffOp out(g.wv);
  if (gsym.kind == GenKind::E) {
    if (gsym.sup < 1) throw ConfigError("GkloRep: E superscript must be >= 1");
    out = make_e(gsym.node, gsym.sup);
  } else if (gsym.kind == GenKind::F) {
    if (gsym.sup < 1) throw ConfigError("GkloRep: F superscript must be >= 1");
    out = make_f(gsym.node, gsym.sup);
  } else {
    int floor = -g.mu[gsym.node];
    if (gsym.sup < floor) {
      out = DiffOp(g.wv);
    } else if (gsym.sup == floor) {
      out = one();
    } else if (gsym.sup >= 1) {
      out = commutator(e(gsym.node, 1), f(gsym.node, gsym.sup));
    } else {
      out = h_from_series(gsym.node, gsym.sup - floor);
    }
  }
  return cache_.emplace(gsym, std::move(out)).first->second;
}

DiffOp GkloRep::elem(const NCElem& x) const {
  DiffOp acc(data_->wv);
  for (const auto& [w, c] : x.terms()) {
    DiffOp prod = one();
    for (const auto& gsym : w) prod *= gen(gsym);
    acc += prod.scale(c);
  }
  return acc;
}

// H_i(u) image as an explicit rational series: the scalar prefactor rho_i
// times the A-image factors, inverted where needed.  Valid at every order,
// including the superscripts <= 0 that exist when mu_i > 0.
DiffOp GkloRep::h_from_series(int node, int rel_order) const {
  if (rel_order < 1) throw ConfigError("h_from_series: order must be >= 1");
  auto key = std::make_pair(node, rel_order);
  auto hit = h_series_cache_.find(key);
  if (hit != h_series_cache_.end()) return hit->second;
  const GKLOData& g = *data_;
  int order = rel_order;
  ASeriesPlan plan = make_aseries_plan(g.dat, g.lambda, g.mu, g.R, order);

  auto poly_series_one = [&]() {
    std::vector<MPoly> s(order + 1, MPoly::constant(g.wv->vars, KScalar()));
    s[0] = MPoly::constant(g.wv->vars, KScalar(1));
    return s;
  };
  auto series_mul = [&](const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
    std::vector<MPoly> out(order + 1, MPoly::constant(g.wv->vars, KScalar()));
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  auto series_inv = [&](const std::vector<MPoly>& a) {
    std::vector<MPoly> out(order + 1, MPoly::constant(g.wv->vars, KScalar()));
    out[0] = MPoly::constant(g.wv->vars, KScalar(1));
    for (int k = 1; k <= order; ++k) {
      MPoly acc;
      for (int j = 1; j <= k; ++j) acc += a[j] * out[k - j];
      out[k] = -acc;
    }
    return out;
  };
  // A_j image at argument (u - c): prod_s (1 - w_{j,s} * geom_c(zeta)).
  auto a_image = [&](int j, const Rat& c) {
    std::vector<Rat> geom(order + 1, Rat(0));  // (u-c)^{-1} = sum c^k zeta^{k+1}
    Rat cpow(1);
    for (int k = 1; k <= order; ++k) {
      geom[k] = cpow;
      cpow *= c;
    }
    std::vector<MPoly> acc = poly_series_one();
    for (long s = 0; s < g.m[j]; ++s) {
      std::vector<MPoly> factor = poly_series_one();
      MPoly w = MPoly::variable(g.wv->vars, g.wv->flat(j, static_cast<int>(s)));
      for (int k = 1; k <= order; ++k) {
        factor[k] = -(w * MPoly::constant(g.wv->vars, KScalar(geom[k])));
      }
      acc = series_mul(acc, factor);
    }
    return acc;
  };

  std::vector<MPoly> series = poly_series_one();
  for (int k = 0; k <= order; ++k)
    series[k] = MPoly::constant(g.wv->vars, KScalar(plan.rho[node][k]));
  for (const auto& sc : plan.rhs[node]) series = series_mul(series, a_image(sc.node, sc.c));
  series = series_mul(series, series_inv(a_image(node, Rat(0))));
  series = series_mul(series, series_inv(a_image(node, Rat(g.dat.d[node]))));

  DiffOp out = DiffOp::coeff(g.wv, RatFn(series[rel_order]));
  return h_series_cache_.emplace(key, std::move(out)).first->second;
}

std::vector<int> pbw_decomposition(const CartanDatum& dat, const RootVec& beta, bool alternate) {
  std::vector<RootVec> pos = positive_roots(dat);
  std::set<RootVec> pos_set(pos.begin(), pos.end());
  std::vector<int> seq;
  for (int i = 0; i < dat.n; ++i)
    for (int c = 0; c < beta[i]; ++c) seq.push_back(i);
  std::sort(seq.begin(), seq.end());
  auto valid = [&](const std::vector<int>& s) {
    RootVec acc(dat.n, 0);
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      acc[*it] += 1;
      if (!pos_set.count(acc)) return false;
    }
    return true;
  };
  std::vector<int> last_valid;
  do {
    if (valid(seq)) {
      if (!alternate) return seq;
      last_valid = seq;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  if (last_valid.empty())
    throw ConfigError("pbw_decomposition: no nonzero bracketing for the given root");
  return last_valid;
}

DiffOp GkloRep::pbw_e(const RootVec& beta, int q, bool alternate) const {
  std::vector<int> seq = pbw_decomposition(data_->dat, beta, alternate);
  int l = static_cast<int>(seq.size());
  // superscripts (1, ..., 1, q + l - 1 - (l-1)) = (1,...,1,q) on the last slot
  DiffOp acc = e(seq.back(), q);
  for (int k = l - 2; k >= 0; --k) acc = commutator(e(seq[k], 1), acc);
  return acc;
}

DiffOp GkloRep::pbw_f(const RootVec& beta, int q, bool alternate) const {
  std::vector<int> seq = pbw_decomposition(data_->dat, beta, alternate);
  int l = static_cast<int>(seq.size());
  DiffOp acc = f(seq.back(), q);
  for (int k = l - 2; k >= 0; --k) acc = commutator(f(seq[k], 1), acc);
  return acc;
}

std::vector<RelationCheck> verify_relations(const GkloRep& rep, int cap) {
  const GKLOData& g = rep.data();
  const CartanDatum& dat = g.dat;
  YangianCtx ctx = make_yangian_ctx(dat, g.mu, std::max(cap + 1, 8));
  std::vector<RelationCheck> out;
  auto run = [&](const std::string& label, const NCElem& defect) {
    DiffOp image = rep.elem(defect);
    RelationCheck chk{label, image.is_zero(), ""};
    if (!chk.pass) chk.witness = image.str();
    out.push_back(std::move(chk));
  };
  auto tag = [&](const char* rel, int i, int j, int p, int q) {
    return std::string(rel) + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
           " p=" + std::to_string(p) + " q=" + std::to_string(q);
  };
  for (int i = 0; i < dat.n; ++i) {
    for (int j = 0; j < dat.n; ++j) {
      int fi = ctx.h_floor(i), fj = ctx.h_floor(j);
      if (i <= j) {
        for (int p = fi + 1; p <= cap; ++p)
          for (int q = fj + 1; q <= cap; ++q)
            run(tag("HH", i, j, p, q), relation_defect(ctx, RelId::HH, i, j, p, q));
      }
      for (int p = 1; p <= cap; ++p)
        for (int q = 1; q <= cap; ++q)
          run(tag("EF", i, j, p, q), relation_defect(ctx, RelId::EF, i, j, p, q));
      for (int p = fi - 1; p + 1 <= cap; ++p)
        for (int q = 1; q + 1 <= cap; ++q) {
          run(tag("HE", i, j, p, q), relation_defect(ctx, RelId::HE, i, j, p, q));
          run(tag("HF", i, j, p, q), relation_defect(ctx, RelId::HF, i, j, p, q));
        }
      for (int p = 1; p + 1 <= cap; ++p)
        for (int q = 1; q + 1 <= cap; ++q) {
          run(tag("EE", i, j, p, q), relation_defect(ctx, RelId::EE, i, j, p, q));
          run(tag("FF", i, j, p, q), relation_defect(ctx, RelId::FF, i, j, p, q));
        }
      if (i != j) {
        int N = 1 - dat.cartan_entry(i, j);
        std::vector<int> sups(N, 1);
        // multisets p_1 <= ... <= p_N from [1, cap]
        auto advance = [&]() {
          int k = N - 1;
          while (k >= 0 && sups[k] == cap) --k;
          if (k < 0) return false;
          int v = sups[k] + 1;
          for (int t = k; t < N; ++t) sups[t] = v;
          return true;
        };
        do {
          for (int q = 1; q <= cap; ++q) {
            std::string label = "SerreE i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + " p=(";
            for (int t = 0; t < N; ++t) label += (t ? "," : "") + std::to_string(sups[t]);
            label += ") q=" + std::to_string(q);
            run(label, serre_defect(ctx, RelId::SerreE, i, j, sups, q));
            label[5] = 'F';
            run(label, serre_defect(ctx, RelId::SerreF, i, j, sups, q));
          }
        } while (advance());
      }
    }
  }
  return out;
}

std::vector<KernelCheck> truncation_kernel_checks(const GkloRep& rep, int extra) {
  const GKLOData& g = rep.data();
  struct PhiHost {
    using Value = DiffOp;
    const GkloRep* rep;
    Value zero() const { return DiffOp(rep->wvars()); }
    Value from_rat(const Rat& r) const { return DiffOp::constant(rep->wvars(), KScalar(r)); }
    Value h(int node, int sup) const { return rep->gen(GenSym{GenKind::H, node, sup}); }
  };
  PhiHost host{&rep};
  long max_m = 0;
  for (long m : g.m) max_m = std::max(max_m, m);
  int order = static_cast<int>(max_m) + extra;
  ASeries<PhiHost> solver(g.dat, g.lambda, g.mu, g.R, order, host);
  const auto& A = solver.coefficients();
  std::vector<KernelCheck> out;
  for (int i = 0; i < g.dat.n; ++i) {
    for (int r = 1; r <= order; ++r) {
      std::string label = "A_" + std::to_string(i + 1) + "^(" + std::to_string(r) + ") " +
                          (r <= g.m[i] ? "= (-1)^r e_r(w)" : "= 0 (kernel)");
      DiffOp expected(g.wv);
      if (r <= g.m[i]) {
        // (-1)^r e_r of the node-i variables
        MPoly sym;
        std::vector<int> comb(r);
        for (int t = 0; t < r; ++t) comb[t] = t;
        while (true) {
          MPoly prod = MPoly::constant(g.wv->vars, KScalar(1));
          for (int t = 0; t < r; ++t)
            prod *= MPoly::variable(g.wv->vars, g.wv->flat(i, comb[t]));
          sym += prod;
          int k = r - 1;
          while (k >= 0 && comb[k] == g.m[i] - r + k) --k;
          if (k < 0) break;
          ++comb[k];
          for (int t = k + 1; t < r; ++t) comb[t] = comb[t - 1] + 1;
        }
        sym.scale(KScalar(Rat(r % 2 ? -1 : 1)));
        expected = DiffOp::coeff(g.wv, RatFn(sym));
      }
      DiffOp got = A[i][r];
      bool pass = got == expected;
      out.push_back(KernelCheck{label, pass, pass ? "" : got.str()});
    }
  }
  return out;
}

bool oracle_is_zero(const std::vector<GkloRep>& family, const NCElem& x) {
  for (const auto& rep : family)
    if (!rep.elem(x).is_zero()) return false;
  return true;
}

bool denominators_in_ore_set(const DiffOp& op) {
  const WVarsPtr& wv = op.wvars();
  if (!wv) return true;
  for (const auto& [s, f] : op.terms()) {
    for (const auto& [factor, exp] : f.den_factors()) {
      // monic w_{i,r} - w_{i,s} + k d_i: at most three monomials, two of them
      // opposite unit multiples of same-node variables
      int vpos = -1, vneg = -1;
      Rat constant(0);
      bool ok = true;
      for (const auto& [expo, c] : factor.terms()) {
        int nzi = -1, nz = 0, deg = 0;
        for (size_t t = 0; t < expo.size(); ++t) {
          if (expo[t] != 0) { ++nz; nzi = static_cast<int>(t); deg = expo[t]; }
        }
        if (nz == 0) {
          if (!c.is_rational()) { ok = false; break; }
          constant = c.rational_value();
        } else if (nz == 1 && deg == 1 && c.is_rational()) {
          Rat cv = c.rational_value();
          if (cv == Rat(1) && vpos < 0) vpos = nzi;
          else if (cv == Rat(-1) && vneg < 0) vneg = nzi;
          else { ok = false; break; }
        } else {
          ok = false;
          break;
        }
      }
      if (!ok || vpos < 0 || vneg < 0) return false;
      if (wv->node_of[vpos] != wv->node_of[vneg]) return false;
      long d = wv->d[wv->node_of[vpos]];
      if (!rat_is_integer(constant / Rat(d))) return false;
    }
  }
  return true;
}

}  // namespace ysl
