#include "ysl/cartan.hpp"

#include <algorithm>
#include <set>

#include "ysl/error.hpp"
#include "ysl/rat.hpp"

namespace ysl {

long CartanDatum::bilinear(int i, int j) const {
  if (i < 0 || i >= n || j < 0 || j >= n) throw Error("bilinear: index out of range");
  return d[i] * cartan_entry(i, j);
}

Coweight CartanDatum::coroot(int j) const {
  Coweight c(n);
  for (int k = 0; k < n; ++k) c[k] = cartan_entry(j, k);
  return c;
}

int CartanDatum::root_pair_coroot(const RootVec& beta, int i) const {
  int acc = 0;
  for (int j = 0; j < n; ++j) acc += beta[j] * cartan_entry(i, j);
  return acc;
}

static void validate(const CartanDatum& dat) {
  int n = dat.n;
  if (n <= 0 || static_cast<int>(dat.a.size()) != n || static_cast<int>(dat.d.size()) != n)
    throw ConfigError("CartanDatum: inconsistent sizes");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dat.a[i].size()) != n) throw ConfigError("CartanDatum: ragged matrix");
    if (dat.a[i][i] != 2) throw ConfigError("CartanDatum: diagonal must be 2");
    if (dat.d[i] <= 0) throw ConfigError("CartanDatum: symmetrizers must be positive");
    for (int j = 0; j < n; ++j) {
      if (i != j && dat.a[i][j] > 0) throw ConfigError("CartanDatum: off-diagonal must be <= 0");
      if ((dat.a[i][j] == 0) != (dat.a[j][i] == 0))
        throw ConfigError("CartanDatum: zero pattern must be symmetric");
      if (dat.d[i] * dat.a[i][j] != dat.d[j] * dat.a[j][i])
        throw ConfigError("CartanDatum: d_i a_ij not symmetric");
    }
  }
}

std::vector<long> derive_symmetrizers(const std::vector<std::vector<int>>& a) {
  int n = static_cast<int>(a.size());
  // Propagate ratios d_i a_ij = d_j a_ji over the Dynkin graph, then clear
  // denominators and divide by the gcd.
  std::vector<Rat> d(n, Rat(0));
  for (int start = 0; start < n; ++start) {
    if (sgn(d[start]) != 0) continue;
    d[start] = Rat(1);
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || sgn(d[j]) != 0) continue;
        d[j] = d[i] * Rat(a[i][j]) / Rat(a[j][i]);
        queue.push_back(j);
      }
    }
  }
  mpz_class lcm_den(1), gcd_num(0);
  for (const Rat& x : d) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<long> out(n);
  for (int i = 0; i < n; ++i) {
    Rat scaled = d[i] * Rat(lcm_den);
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_num().get_mpz_t());
  }
  for (int i = 0; i < n; ++i) out[i] = rat_to_long(d[i] * Rat(lcm_den) / Rat(gcd_num));
  return out;
}

CartanDatum make_cartan(std::vector<std::vector<int>> a, std::vector<long> d, bool transposed) {
  CartanDatum dat;
  dat.name = "custom";
  dat.n = static_cast<int>(a.size());
  if (transposed) {
    std::vector<std::vector<int>> at(dat.n, std::vector<int>(dat.n));
    for (int i = 0; i < dat.n; ++i)
      for (int j = 0; j < dat.n; ++j) at[i][j] = a[j][i];
    dat.a = std::move(at);
    dat.d = derive_symmetrizers(dat.a);
  } else {
    dat.a = std::move(a);
    dat.d = std::move(d);
  }
  dat.transposed = transposed;
  validate(dat);
  dat.sym = make_sqrt_ctx(dat.d);
  return dat;
}

CartanDatum make_cartan(const std::string& type_name, bool transposed) {
  CartanDatum dat;
  if (type_name == "A1") {
    dat = make_cartan({{2}}, {1}, transposed);
  } else if (type_name == "A2") {
    dat = make_cartan({{2, -1}, {-1, 2}}, {1, 1}, transposed);
  } else if (type_name == "B2") {
    dat = make_cartan({{2, -1}, {-2, 2}}, {2, 1}, transposed);
  } else if (type_name == "A3") {
    dat = make_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, transposed);
  } else {
    throw ConfigError("make_cartan: unsupported type '" + type_name + "'");
  }
  dat.name = type_name;
  return dat;
}

Coweight add(const Coweight& x, const Coweight& y) {
  Coweight z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

Coweight sub(const Coweight& x, const Coweight& y) {
  Coweight z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

Coweight negate(const Coweight& x) {
  Coweight z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
  return z;
}

bool is_dominant(const Coweight& mu) {
  return std::all_of(mu.begin(), mu.end(), [](int c) { return c >= 0; });
}

bool is_antidominant(const Coweight& mu) {
  return std::all_of(mu.begin(), mu.end(), [](int c) { return c <= 0; });
}

std::vector<long> coroot_decomposition(const CartanDatum& dat, const Coweight& lambda,
                                       const Coweight& mu) {
  int n = dat.n;
  if (static_cast<int>(lambda.size()) != n || static_cast<int>(mu.size()) != n)
    throw ConfigError("coroot_decomposition: wrong coweight rank");
  // (lambda - mu)_i = sum_j m_j <alpha_j^vee, alpha_i>
  std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mat[i][j] = Rat(dat.cartan_entry(j, i));
    mat[i][n] = Rat(lambda[i] - mu[i]);
  }
  for (int col = 0, row = 0; col < n; ++col, ++row) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (sgn(mat[r][col]) != 0) { piv = r; break; }
    if (piv < 0) throw ConfigError("coroot_decomposition: singular Cartan matrix");
    std::swap(mat[piv], mat[row]);
    Rat inv = Rat(1) / mat[row][col];
    for (int c = col; c <= n; ++c) mat[row][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || sgn(mat[r][col]) == 0) continue;
      Rat f = mat[r][col];
      for (int c = col; c <= n; ++c) mat[r][c] -= f * mat[row][c];
    }
  }
  std::vector<long> m(n);
  for (int i = 0; i < n; ++i) {
    if (!rat_is_integer(mat[i][n]))
      throw DominanceError("coroot_decomposition: non-integral m_" + std::to_string(i + 1) +
                           " = " + rat_str(mat[i][n]) + " (mu not <= lambda in the coroot lattice)");
    m[i] = rat_to_long(mat[i][n]);
    if (m[i] < 0)
      throw DominanceError("coroot_decomposition: negative m_" + std::to_string(i + 1) +
                           " = " + std::to_string(m[i]));
  }
  return m;
}

std::vector<RootVec> positive_roots(const CartanDatum& dat) {
  int n = dat.n;
  if (n > 3) throw ConfigError("positive_roots: rank > 3 not supported");
  // Closure of the simple roots under the simple reflections
  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, keeping positives.
  std::set<RootVec> all;
  std::vector<RootVec> queue;
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  const size_t bound = 64;  // far above any rank-3 finite type
  while (!queue.empty()) {
    RootVec beta = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      int k = dat.root_pair_coroot(beta, i);
      RootVec s = beta;
      s[i] -= k;
      if (all.insert(s).second) {
        queue.push_back(s);
        if (all.size() > bound) throw ConfigError("positive_roots: closure did not terminate");
      }
    }
  }
  std::vector<RootVec> pos;
  for (const auto& r : all) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
    bool nonzero = std::any_of(r.begin(), r.end(), [](int c) { return c != 0; });
    if (nonneg && nonzero) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const RootVec& x, const RootVec& y) {
    int hx = 0, hy = 0;
    for (int c : x) hx += c;
    for (int c : y) hy += c;
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return pos;
}

std::string coweight_str(const Coweight& mu) {
  std::string out = "(";
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(mu[i]);
  }
  return out + ")";
}

}  // namespace ysl
