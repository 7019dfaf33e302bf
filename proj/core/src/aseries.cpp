#include "ysl/aseries.hpp"

namespace ysl {

ASeriesPlan make_aseries_plan(const CartanDatum& dat, const Coweight& lambda,
                              const Coweight& mu, const std::vector<std::vector<Rat>>& R,
                              int order) {
  int n = dat.n;
  ASeriesPlan plan;
  plan.order = order;
  plan.m = coroot_decomposition(dat, lambda, mu);
  if (static_cast<int>(R.size()) != n) throw ConfigError("a-series: R has wrong rank");
  for (int i = 0; i < n; ++i)
    if (static_cast<long>(R[i].size()) != lambda[i])
      throw ConfigError("a-series: |R_i| must equal lambda_i at node " + std::to_string(i + 1));

  plan.rhs.resize(n);
  plan.rho.assign(n, {});
  for (int i = 0; i < n; ++i) {
    // Collect the linear-factor roots of the scalar prefactor.
    std::vector<Rat> roots(R[i]);
    long deg = lambda[i] - 2 * plan.m[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      int count = -dat.cartan_entry(j, i);
      for (int s = 1; s <= count; ++s) {
        Rat c = Rat(dat.bilinear(i, j)) / 2 + Rat(s * dat.d[j]);
        for (long t = 0; t < plan.m[j]; ++t) roots.push_back(c);
        plan.rhs[i].push_back(AShiftConst{j, c});
        deg += plan.m[j];
      }
    }
    if (deg != mu[i])
      throw ConfigError("a-series: degree mismatch at node " + std::to_string(i + 1) +
                        " (got " + std::to_string(deg) + ", expected " + std::to_string(mu[i]) + ")");
    // rho_i = prod (1 - c zeta) / (1 - d_i zeta)^{m_i} as an exact series.
    std::vector<Rat> num(order + 1, Rat(0));
    num[0] = Rat(1);
    for (const Rat& c : roots) {
      for (int k = order; k >= 1; --k) num[k] -= c * num[k - 1];
    }
    std::vector<Rat> rho(order + 1, Rat(0));
    // divide by (1 - d zeta)^{m_i}: repeated geometric division
    rho = num;
    for (long t = 0; t < plan.m[i]; ++t) {
      for (int k = 1; k <= order; ++k) rho[k] += Rat(dat.d[i]) * rho[k - 1];
    }
    plan.rho[i] = std::move(rho);
  }

  // Inverse of B[i][j] = a_{ji} over Q.
  std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mat[i][j] = Rat(dat.cartan_entry(j, i));
    mat[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(mat[r][col]) != 0) { piv = r; break; }
    if (piv < 0) throw ConfigError("a-series: singular Cartan matrix");
    std::swap(mat[piv], mat[col]);
    Rat inv = Rat(1) / mat[col][col];
    for (int c = 0; c < 2 * n; ++c) mat[col][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(mat[r][col]) == 0) continue;
      Rat f = mat[r][col];
      for (int c = 0; c < 2 * n; ++c) mat[r][c] -= f * mat[col][c];
    }
  }
  plan.cartan_t_inv.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) plan.cartan_t_inv[i][j] = mat[i][n + j];
  return plan;
}

}  // namespace ysl
