#pragma once

#include <vector>

#include "ysl/cartan.hpp"
#include "ysl/error.hpp"
#include "ysl/mpoly.hpp"

namespace ysl {

// Rational series bookkeeping for the defining identity of the Cartan
// A-generators.  The identity, multiplied out, reads
//
//   h_i(u) * A_i(u) * A_i(u - d_i) = rho_i(u) * prod_{j != i, s} A_j(u - c_ijs)
//
// with rho_i an explicit scalar series and h_i the normalized H_i series.
// Order by order in u^{-1} the unknown coefficients enter linearly through
// the transposed Cartan matrix, which is inverted once over Q.
//
// A Host supplies the commutative ring: a Value type with +,-,*, a zero(),
// a from_rat(Rat) embedding, and h(i, p) returning the image of H_i^{(p)}.

inline Rat binom_rat(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r(1);
  for (int t = 0; t < k; ++t) r = r * Rat(n - t) / Rat(t + 1);
  return r;
}

struct AShiftConst {
  int node;  // j
  Rat c;     // shift in the argument of A_j
};

struct ASeriesPlan {
  std::vector<long> m;
  std::vector<std::vector<Rat>> rho;          // rho[i][k], k = 0..order
  std::vector<std::vector<AShiftConst>> rhs;  // per i: all A_j(u - c) factors
  std::vector<std::vector<Rat>> cartan_t_inv;
  int order = 0;
};

ASeriesPlan make_aseries_plan(const CartanDatum& dat, const Coweight& lambda,
                              const Coweight& mu, const std::vector<std::vector<Rat>>& R,
                              int order);

template <class Host>
class ASeries {
 public:
  using Value = typename Host::Value;

  ASeries(const CartanDatum& dat, const Coweight& lambda, const Coweight& mu,
          const std::vector<std::vector<Rat>>& R, int order, Host& host)
      : dat_(dat), mu_(mu), plan_(make_aseries_plan(dat, lambda, mu, R, order)), host_(host) {
    solve();
  }

  // A[i][r] for 0 <= r <= order; A[i][0] is the ring unit.
  const std::vector<std::vector<Value>>& coefficients() const { return A_; }

 private:
  const CartanDatum& dat_;
  Coweight mu_;
  ASeriesPlan plan_;
  Host& host_;
  std::vector<std::vector<Value>> A_;

  Value scaled(const Value& v, const Rat& r) const {
    if (sgn(r) == 0) return host_.zero();
    return v * host_.from_rat(r);
  }

  // Coefficient k of A_node(u - c) in terms of the current A coefficients.
  Value shifted_coeff(int node, const Rat& c, int k) const {
    if (k == 0) return host_.from_rat(Rat(1));
    Value acc = host_.zero();
    Rat cpow(1);
    for (int s = k; s >= 1; --s) {
      acc = acc + scaled(A_[node][s], binom_rat(k - 1, k - s) * cpow);
      cpow *= c;
    }
    return acc;
  }

  std::vector<Value> series_mul(const std::vector<Value>& a, const std::vector<Value>& b,
                                int order) const {
    std::vector<Value> out(order + 1, host_.zero());
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
  }

  void solve() {
    int n = dat_.n;
    int order = plan_.order;
    A_.assign(n, std::vector<Value>(order + 1, host_.zero()));
    for (int i = 0; i < n; ++i) A_[i][0] = host_.from_rat(Rat(1));
    for (int r = 1; r <= order; ++r) {
      std::vector<Value> rhs_minus_lhs(n, host_.zero());
      for (int i = 0; i < n; ++i) {
        // h_i series: 1 + sum H_i^{(floor+k)} zeta^k
        std::vector<Value> h(order + 1, host_.zero());
        h[0] = host_.from_rat(Rat(1));
        int floor = -mu_[i];
        for (int k = 1; k <= r; ++k) h[k] = host_.h(i, floor + k);
        std::vector<Value> ai(order + 1, host_.zero());
        std::vector<Value> ai_shift(order + 1, host_.zero());
        for (int k = 0; k <= r; ++k) {
          ai[k] = A_[i][k];
          ai_shift[k] = shifted_coeff(i, Rat(dat_.d[i]), k);
        }
        std::vector<Value> lhs = series_mul(series_mul(h, ai, r), ai_shift, r);
        std::vector<Value> rhs(order + 1, host_.zero());
        for (int k = 0; k <= r; ++k) rhs[k] = host_.from_rat(plan_.rho[i][k]);
        for (const auto& sc : plan_.rhs[i]) {
          std::vector<Value> factor(order + 1, host_.zero());
          for (int k = 0; k <= r; ++k) factor[k] = shifted_coeff(sc.node, sc.c, k);
          rhs = series_mul(rhs, factor, r);
        }
        rhs_minus_lhs[i] = rhs[r] - lhs[r];
      }
      // Unknowns entered with matrix B[i][j] = a_{ji}; apply the inverse.
      for (int i = 0; i < n; ++i) {
        Value acc = host_.zero();
        for (int j = 0; j < n; ++j) acc = acc + scaled(rhs_minus_lhs[j], plan_.cartan_t_inv[i][j]);
        A_[i][r] = acc;
      }
    }
  }
};

}  // namespace ysl
