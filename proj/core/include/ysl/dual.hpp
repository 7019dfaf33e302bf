#pragma once

#include <string>
#include <vector>

#include "ysl/kscalar.hpp"
#include "ysl/mpoly.hpp"

namespace ysl {

// value + eps * infinitesimal with eps^2 = 0; multiplication drops the
// eps^2 term exactly, so the infinitesimal slot carries exact directional
// derivatives through polynomial evaluation.
struct DualScalar {
  KScalar value;
  KScalar infinitesimal;

  DualScalar() = default;
  DualScalar(KScalar v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  DualScalar(KScalar v, KScalar d) : value(std::move(v)), infinitesimal(std::move(d)) {}

  bool is_zero() const { return value.is_zero() && infinitesimal.is_zero(); }

  DualScalar operator-() const { return {-value, -infinitesimal}; }
  friend DualScalar operator+(const DualScalar& a, const DualScalar& b) {
    return {a.value + b.value, a.infinitesimal + b.infinitesimal};
  }
  friend DualScalar operator-(const DualScalar& a, const DualScalar& b) {
    return {a.value - b.value, a.infinitesimal - b.infinitesimal};
  }
  friend DualScalar operator*(const DualScalar& a, const DualScalar& b) {
    return {a.value * b.value, a.value * b.infinitesimal + a.infinitesimal * b.value};
  }
  DualScalar& operator+=(const DualScalar& o) { return *this = *this + o; }
  DualScalar& operator-=(const DualScalar& o) { return *this = *this - o; }
  DualScalar& operator*=(const DualScalar& o) { return *this = *this * o; }

  bool operator==(const DualScalar& o) const {
    return value == o.value && infinitesimal == o.infinitesimal;
  }

  std::string str() const { return value.str() + " + eps*(" + infinitesimal.str() + ")"; }
};

// Evaluates a polynomial map at a point with infinitesimal components; the
// infinitesimal slot of the result is the exact directional derivative.
inline DualScalar dual_apply(const MPoly& f, const std::vector<DualScalar>& point) {
  DualScalar acc;
  for (const auto& [expo, coeff] : f.terms()) {
    DualScalar term{coeff, KScalar()};
    for (size_t i = 0; i < expo.size(); ++i)
      for (int k = 0; k < expo[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

}  // namespace ysl

