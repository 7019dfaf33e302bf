#include "ysl/slice.hpp"

#include <algorithm>

#include "ysl/error.hpp"

namespace ysl {

LoopMat embed_sl2(int n, int node, const KSeries& a11, const KSeries& a12, const KSeries& a21,
                  const KSeries& a22, int det_exp) {
  if (node < 0 || node + 1 >= n) throw Error("embed_sl2: node out of range");
  LoopMat m = LoopMat::identity(n, det_exp);
  m.e[node][node] = a11;
  m.e[node][node + 1] = a12;
  m.e[node + 1][node] = a21;
  m.e[node + 1][node + 1] = a22;
  return m;
}

std::vector<int> gl_coroot(int n, int node) {
  std::vector<int> w(n, 0);
  w[node] = 1;
  w[node + 1] = -1;
  return w;
}

SlicePoint r_point(int n, int node, const KScalar& b, const KScalar& c) {
  if (b.is_zero()) throw LocusError("r_point: b must be nonzero");
  KSeries zero = KSeries::zero();
  KSeries bb = KSeries::monomial(b, 0);
  KSeries minv = KSeries::monomial(-(b.inverse()), 0);
  KSeries tc = KSeries::monomial(KScalar(1), 1) + KSeries::monomial(-c, 0);
  SlicePoint p;
  p.g = embed_sl2(n, node, zero, bb, minv, tc);
  p.w = std::vector<int>(n, 0);
  p.w[node] = -1;
  p.w[node + 1] = 1;
  return p;
}

KScalar psi_coeff(const SlicePoint& p, int node, int k) {
  GaussFactors f = gauss_decompose(p.g);
  return f.u.e[node][node + 1].at(-k);
}

KScalar moment(const SlicePoint& p, int node) { return psi_coeff(p, node, 1); }

SlicePoint multiply_slices(const SlicePoint& a, const SlicePoint& b) {
  SlicePoint out;
  out.w.resize(a.w.size());
  for (size_t k = 0; k < a.w.size(); ++k) out.w[k] = a.w[k] + b.w[k];
  out.g = pi_project(a.g * b.g, out.w);
  return out;
}

SlicePoint shift_point(const SlicePoint& p, const std::vector<int>& w1,
                       const std::vector<int>& w2) {
  std::vector<int> m1(w1.size()), m2(w2.size());
  for (size_t k = 0; k < w1.size(); ++k) m1[k] = -w1[k];
  for (size_t k = 0; k < w2.size(); ++k) m2[k] = -w2[k];
  SlicePoint out;
  out.w.resize(p.w.size());
  for (size_t k = 0; k < p.w.size(); ++k) out.w[k] = p.w[k] + m1[k] + m2[k];
  out.g = pi_project(LoopMat::torus(m1) * p.g * LoopMat::torus(m2), out.w);
  return out;
}

SlicePoint ga_action(const KScalar& a, const SlicePoint& p, int node) {
  int n = p.g.n;
  LoopMat x = LoopMat::elementary(n, node + 1, node, KSeries::monomial(-a, 0));
  SlicePoint out;
  out.w = p.w;
  out.g = pi_project(x * p.g, out.w);
  return out;
}

SlicePoint xi_point(const SlicePoint& p, int node) {
  KScalar p1 = psi_coeff(p, node, 1);
  if (p1.is_zero()) throw LocusError("xi_point: moment value vanishes");
  KScalar p2 = psi_coeff(p, node, 2);
  return r_point(p.g.n, node, p1, p2 * p1.inverse());
}

std::pair<SlicePoint, SlicePoint> factor_point(const SlicePoint& p, int node) {
  SlicePoint xi = xi_point(p, node);
  // inverse of the embedded [0, b; -1/b, t-c] block: [t-c, -b; 1/b, 0]
  int n = p.g.n;
  const KSeries& b = xi.g.e[node][node + 1];
  const KSeries& tc = xi.g.e[node + 1][node + 1];
  KSeries binv = KSeries::monomial(b.at(0).inverse(), 0);
  LoopMat inv = embed_sl2(n, node, tc, -b, binv, KSeries::zero());
  SlicePoint rest;
  rest.w.resize(p.w.size());
  std::vector<int> cr = gl_coroot(n, node);
  for (size_t k = 0; k < p.w.size(); ++k) rest.w[k] = p.w[k] + cr[k];
  rest.g = pi_project(inv * p.g, rest.w);
  return {xi, rest};
}

// ---- dense univariate helpers ----------------------------------------------

static void poly_trim(std::vector<Rat>& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out = a;
  if (b.size() > out.size()) out.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  poly_trim(out);
  return out;
}

std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(const std::vector<Rat>& num,
                                                          const std::vector<Rat>& den) {
  if (den.empty()) throw NotInvertibleError("poly_divmod: zero divisor");
  std::vector<Rat> rem = num, quot;
  poly_trim(rem);
  if (rem.size() >= den.size()) quot.assign(rem.size() - den.size() + 1, Rat(0));
  while (rem.size() >= den.size()) {
    Rat c = rem.back() / den.back();
    size_t shift = rem.size() - den.size();
    quot[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    poly_trim(rem);
  }
  poly_trim(quot);
  return {quot, rem};
}

std::optional<std::vector<Rat>> poly_divide_exact(const std::vector<Rat>& num,
                                                  const std::vector<Rat>& den) {
  auto [q, r] = poly_divmod(num, den);
  if (!r.empty()) return std::nullopt;
  return q;
}

// ---- the PGL_2 polynomial model ---------------------------------------------

bool Rank1Point::operator==(const Rank1Point& o) const {
  return lambda == o.lambda && m == o.m && a == o.a && b == o.b && c == o.c && d == o.d;
}

std::string Rank1Point::str() const {
  auto ps = [](const std::vector<Rat>& p) {
    if (p.empty()) return std::string("0");
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
      if (sgn(p[i]) == 0) continue;
      if (!out.empty()) out += " + ";
      out += rat_str(p[i]) + "*t^" + std::to_string(i);
    }
    return out.empty() ? std::string("0") : out;
  };
  return "[a=" + ps(a) + ", b=" + ps(b) + ", c=" + ps(c) + ", d=" + ps(d) +
         ", lambda=" + std::to_string(lambda) + ", m=" + std::to_string(m) + "]";
}

bool minor_degree_check(const Rank1Point& p) {
  // d monic of degree m; b, c of degree < m; det = t^lambda
  if (static_cast<long>(p.d.size()) != p.m + 1 || !(p.d.back() == Rat(1))) return false;
  if (static_cast<long>(p.b.size()) > p.m || static_cast<long>(p.c.size()) > p.m) return false;
  std::vector<Rat> det = poly_sub(poly_mul(p.a, p.d), poly_mul(p.b, p.c));
  std::vector<Rat> tl(p.lambda + 1, Rat(0));
  tl.back() = Rat(1);
  return det == tl;
}

namespace {
KSeries poly_to_series(const std::vector<Rat>& p) {
  KSeries s = KSeries::zero();
  for (size_t i = 0; i < p.size(); ++i)
    if (sgn(p[i]) != 0) s += KSeries::monomial(KScalar(p[i]), static_cast<int>(i));
  return s;
}

std::vector<Rat> series_to_poly(const KSeries& s, const char* what) {
  std::vector<Rat> p;
  for (const auto& [e, c] : s.coefficients()) {
    if (e < 0) throw LocusError(std::string("series_to_poly: negative exponent in ") + what);
    if (static_cast<size_t>(e) >= p.size()) p.resize(e + 1, Rat(0));
    if (!c.is_rational()) throw LocusError("series_to_poly: irrational coefficient");
    p[e] = c.rational_value();
  }
  return p;
}
}  // namespace

SlicePoint rank1_to_slice(const Rank1Point& p) {
  SlicePoint s;
  s.g.n = 2;
  s.g.det_exp = static_cast<int>(p.lambda);
  s.g.e = {{poly_to_series(p.a), poly_to_series(p.b)},
           {poly_to_series(p.c), poly_to_series(p.d)}};
  s.w = {static_cast<int>(p.lambda - p.m), static_cast<int>(p.m)};
  return s;
}

Rank1Point rank1_from_slice(const SlicePoint& s, long lambda, long m) {
  Rank1Point p;
  p.lambda = lambda;
  p.m = m;
  p.a = series_to_poly(s.g.e[0][0], "a");
  p.b = series_to_poly(s.g.e[0][1], "b");
  p.c = series_to_poly(s.g.e[1][0], "c");
  p.d = series_to_poly(s.g.e[1][1], "d");
  return p;
}

Rat rank1_moment(const Rank1Point& p) {
  if (p.m == 0) return Rat(0);
  return static_cast<long>(p.b.size()) == p.m ? p.b[p.m - 1] : Rat(0);
}

Rank1Point rank1_reduce(const Rank1Point& p) {
  if (!(rank1_moment(p) == Rat(1)))
    throw LocusError("rank1_reduce: moment value must be 1");
  long m = p.m;
  Rat b2 = (m >= 2 && static_cast<long>(p.b.size()) >= m - 1) ? p.b[m - 2] : Rat(0);
  Rat d1 = static_cast<long>(p.d.size()) >= m ? p.d[m - 1] : Rat(0);
  // b' = b (t - b^(2) + d^(1)) - d, d' = b
  std::vector<Rat> shift = {d1 - b2, Rat(1)};
  Rank1Point out;
  out.lambda = p.lambda;
  out.m = m - 1;
  out.b = poly_sub(poly_mul(p.b, shift), p.d);
  out.d = p.b;
  // c' = a mod d' keeps the degree bound; a' follows from the determinant
  auto [q, r] = poly_divmod(p.a, out.d);
  out.c = r;
  std::vector<Rat> tl(p.lambda + 1, Rat(0));
  tl.back() = Rat(1);
  auto aq = poly_divide_exact(poly_sub(tl, poly_mul(out.b, out.c)), out.d);
  if (!aq) throw Error("rank1_reduce: determinant completion failed");
  out.a = *aq;
  if (!minor_degree_check(out))
    throw Error("rank1_reduce: output violates the slice model constraints");
  return out;
}

Rank1Point sample_rank1(long lambda, long m, std::mt19937_64& rng, bool unit_moment) {
  auto rnd = [&rng]() {
    long num = static_cast<long>(rng() % 9) - 4;
    long den = 1 + static_cast<long>(rng() % 3);
    return Rat(num, den);
  };
  for (int attempt = 0; attempt < 200; ++attempt) {
    Rank1Point p;
    p.lambda = lambda;
    p.m = m;
    p.d.assign(m + 1, Rat(0));
    p.d[m] = Rat(1);
    for (long k = 0; k < m; ++k) p.d[k] = rnd();
    p.b.assign(m, Rat(0));
    for (long k = 0; k + 1 < m; ++k) p.b[k] = rnd();
    if (unit_moment) {
      p.b[m - 1] = Rat(1);
    } else {
      Rat lead = rnd();
      p.b[m - 1] = sgn(lead) >= 0 ? Rat(lead + Rat(5)) : Rat(lead - Rat(5));
    }
    poly_trim(p.b);
    if (rank1_moment(p) == Rat(0)) continue;
    // c = -t^lambda * b^{-1} mod d, if b is invertible mod d
    // extended euclid over Q[t]
    std::vector<Rat> r0 = p.d, r1 = p.b, s0 = {}, s1 = {Rat(1)};
    bool ok = true;
    while (!r1.empty()) {
      auto [q, r2] = poly_divmod(r0, r1);
      std::vector<Rat> s2 = poly_sub(s0, poly_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (!ok || r0.size() != 1) continue;  // gcd not constant: resample
    // binv = s0 / r0[0] satisfies b * binv = 1 mod d
    for (Rat& coeff : s0) coeff /= r0[0];
    std::vector<Rat> neg_tl(lambda + 1, Rat(0));
    neg_tl.back() = Rat(-1);
    p.c = poly_divmod(poly_mul(neg_tl, s0), p.d).second;
    // det = a d - b c = t^lambda, so a = (t^lambda + b c)/d exactly
    std::vector<Rat> target(lambda + 1, Rat(0));
    target.back() = Rat(1);
    std::vector<Rat> bc = poly_mul(p.b, p.c);
    if (bc.size() > target.size()) target.resize(bc.size(), Rat(0));
    for (size_t k = 0; k < bc.size(); ++k) target[k] += bc[k];
    auto adiv = poly_divide_exact(target, p.d);
    if (!adiv) continue;
    p.a = *adiv;
    if (!minor_degree_check(p)) continue;
    return p;
  }
  throw Error("sample_rank1: sampling failed");
}

}  // namespace ysl
