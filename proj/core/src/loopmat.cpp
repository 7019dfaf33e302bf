#include "ysl/loopmat.hpp"

#include "ysl/error.hpp"

namespace ysl {

LoopMat LoopMat::identity(int n, int det_exp) {
  LoopMat m;
  m.n = n;
  m.det_exp = det_exp;
  m.e.assign(n, std::vector<KSeries>(n));
  for (int i = 0; i < n; ++i) m.e[i][i] = KSeries::monomial(KScalar(1), 0);
  return m;
}

LoopMat LoopMat::torus(const std::vector<int>& w) {
  LoopMat m = identity(static_cast<int>(w.size()));
  for (size_t i = 0; i < w.size(); ++i) {
    m.e[i][i] = KSeries::monomial(KScalar(1), w[i]);
    m.det_exp += w[i];
  }
  return m;
}

LoopMat LoopMat::elementary(int n, int row, int col, const KSeries& val, int det_exp) {
  LoopMat m = identity(n, det_exp);
  if (row == col) throw Error("LoopMat::elementary: off-diagonal only");
  m.e[row][col] = val;
  return m;
}

LoopMat operator*(const LoopMat& a, const LoopMat& b) {
  if (a.n != b.n) throw Error("LoopMat: size mismatch");
  LoopMat m;
  m.n = a.n;
  m.det_exp = a.det_exp + b.det_exp;
  m.e.assign(a.n, std::vector<KSeries>(a.n));
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      KSeries acc = KSeries::zero();
      for (int k = 0; k < a.n; ++k) acc += a.e[i][k] * b.e[k][j];
      m.e[i][j] = std::move(acc);
    }
  return m;
}

bool LoopMat::agrees_with(const LoopMat& o) const {
  if (n != o.n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!e[i][j].agrees_with(o.e[i][j])) return false;
  return true;
}

std::string LoopMat::str() const {
  std::string out;
  for (int i = 0; i < n; ++i) {
    out += "[ ";
    for (int j = 0; j < n; ++j) out += e[i][j].str() + (j + 1 < n ? " | " : "");
    out += " ]\n";
  }
  return out;
}

GaussFactors gauss_decompose(const LoopMat& g) {
  int n = g.n;
  // LDU of the antidiagonal flip gives the u h u_- order after flipping back.
  auto flip = [n](const LoopMat& m) {
    LoopMat r = m;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.e[i][j] = m.e[n - 1 - i][n - 1 - j];
    return r;
  };
  LoopMat M = flip(g);
  LoopMat L = LoopMat::identity(n), D = LoopMat::identity(n), U = LoopMat::identity(n);
  for (int k = 0; k < n; ++k) {
    KSeries pivot = M.e[k][k];
    for (int t = 0; t < k; ++t) pivot -= L.e[k][t] * D.e[t][t] * U.e[t][k];
    if (pivot.is_zero_on_window())
      throw LocusError("gauss_decompose: vanishing principal minor (not in the big cell)");
    D.e[k][k] = pivot;
    KSeries pinv;
    try {
      pinv = pivot.inverted();
    } catch (const NotInvertibleError&) {
      throw LocusError("gauss_decompose: non-unit pivot");
    }
    for (int j = k + 1; j < n; ++j) {
      KSeries acc = M.e[k][j];
      for (int t = 0; t < k; ++t) acc -= L.e[k][t] * D.e[t][t] * U.e[t][j];
      U.e[k][j] = acc * pinv;
    }
    for (int i = k + 1; i < n; ++i) {
      KSeries acc = M.e[i][k];
      for (int t = 0; t < k; ++t) acc -= L.e[i][t] * D.e[t][t] * U.e[t][k];
      L.e[i][k] = acc * pinv;
    }
  }
  GaussFactors f;
  f.u = flip(L);
  f.h = flip(D);
  f.uminus = flip(U);
  f.u.det_exp = 0;
  f.uminus.det_exp = 0;
  f.h.det_exp = g.det_exp;
  return f;
}

namespace {

KSeries polynomial_part(const KSeries& s) {
  KSeries out = KSeries::zero();
  for (const auto& [e, c] : s.coefficients())
    if (e >= 0) out += KSeries::monomial(c, e);
  return out;
}

// Strips polynomial parts of the strictly-upper factor entries by elementary
// corrections in height order; lower works on the transposed position order.
void strip_upper(LoopMat& u) {
  int n = u.n;
  std::vector<std::pair<int, int>> order;
  for (int h = 1; h < n; ++h)
    for (int i = 0; i + h < n; ++i) order.emplace_back(i, i + h);
  for (auto [i, j] : order) {
    KSeries p = polynomial_part(u.e[i][j]);
    if (p.is_zero_on_window()) continue;
    u = LoopMat::elementary(n, i, j, -p) * u;
  }
}

void strip_lower(LoopMat& l) {
  int n = l.n;
  std::vector<std::pair<int, int>> order;
  for (int h = 1; h < n; ++h)
    for (int j = 0; j + h < n; ++j) order.emplace_back(j + h, j);
  for (auto [i, j] : order) {
    KSeries p = polynomial_part(l.e[i][j]);
    if (p.is_zero_on_window()) continue;
    l = l * LoopMat::elementary(n, i, j, -p);
  }
}

}  // namespace

LoopMat pi_project(const LoopMat& g, const std::vector<int>& w) {
  GaussFactors f = gauss_decompose(g);
  for (int i = 0; i < g.n; ++i) {
    const KSeries& hi = f.h.e[i][i];
    if (hi.top_support() != w[i] || !(hi.at(w[i]) == KScalar(1)))
      throw LocusError("pi_project: diagonal valuation does not match the target coweight");
  }
  strip_upper(f.u);
  strip_lower(f.uminus);
  LoopMat out = f.u * f.h * f.uminus;
  out.det_exp = g.det_exp;
  return out;
}

bool in_slice_form(const LoopMat& g, const std::vector<int>& w) {
  GaussFactors f;
  try {
    f = gauss_decompose(g);
  } catch (const LocusError&) {
    return false;
  }
  for (int i = 0; i < g.n; ++i) {
    const KSeries& hi = f.h.e[i][i];
    if (hi.top_support() != w[i] || !(hi.at(w[i]) == KScalar(1))) return false;
  }
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      if (i == j) continue;
      const KSeries& s = i < j ? f.u.e[i][j] : f.uminus.e[i][j];
      if (!s.is_zero_on_window() && s.top_support() >= 0) return false;
    }
  return true;
}

}  // namespace ysl
