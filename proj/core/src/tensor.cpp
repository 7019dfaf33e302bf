#include "ysl/tensor.hpp"

#include <algorithm>

#include "ysl/error.hpp"

namespace ysl {

TensorElem TensorElem::pure(const DiffOp& l, const DiffOp& r) {
  TensorElem t(l.wvars(), r.wvars());
  t.append(l, r);
  return t;
}

void TensorElem::append(const DiffOp& l, const DiffOp& r) {
  if (l.is_zero() || r.is_zero()) return;
  if (!lw_) lw_ = l.wvars();
  if (!rw_) rw_ = r.wvars();
  pairs_.emplace_back(l, r);
  if (pairs_.size() > 48) compress();
}

void TensorElem::compress() {
  // Merge right factors for identical left representations, then the mirror.
  std::map<std::string, size_t> index;
  std::vector<std::pair<DiffOp, DiffOp>> merged;
  for (auto& [l, r] : pairs_) {
    std::string key = l.key();
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(std::move(key), merged.size());
      merged.emplace_back(l, r);
    } else {
      merged[it->second].second += r;
    }
  }
  std::map<std::string, size_t> rindex;
  std::vector<std::pair<DiffOp, DiffOp>> out;
  for (auto& [l, r] : merged) {
    if (r.is_zero()) continue;
    std::string key = r.key();
    auto it = rindex.find(key);
    if (it == rindex.end()) {
      rindex.emplace(std::move(key), out.size());
      out.emplace_back(l, r);
    } else {
      out[it->second].first += l;
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& p) { return p.first.is_zero() || p.second.is_zero(); }),
            out.end());
  pairs_ = std::move(out);
}

TensorElem TensorElem::operator-() const {
  TensorElem t(*this);
  for (auto& [l, r] : t.pairs_) l = -l;
  return t;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  for (const auto& [l, r] : o.pairs_) append(l, r);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  for (const auto& [l, r] : o.pairs_) append(-l, r);
  return *this;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) {
  TensorElem out(a.lw_ ? a.lw_ : b.lw_, a.rw_ ? a.rw_ : b.rw_);
  for (const auto& [la, ra] : a.pairs_)
    for (const auto& [lb, rb] : b.pairs_) out.append(la * lb, ra * rb);
  out.compress();
  return out;
}

TensorElem& TensorElem::scale(const KScalar& c) {
  if (c.is_zero()) {
    pairs_.clear();
    return *this;
  }
  for (auto& [l, r] : pairs_) l.scale(c);
  return *this;
}

bool TensorElem::is_zero() const {
  if (pairs_.empty()) return true;
  // Group by right shift monomial; inside each group use one common
  // denominator so numerator monomials are linear coordinates.
  struct Entry {
    std::vector<const RatFn*> coeffs;
    std::vector<const DiffOp*> lefts;
  };
  std::map<ShiftMono, Entry> groups;
  for (const auto& [l, r] : pairs_) {
    for (const auto& [mono, f] : r.terms()) {
      Entry& e = groups[mono];
      e.coeffs.push_back(&f);
      e.lefts.push_back(&l);
    }
  }
  for (auto& [mono, entry] : groups) {
    // Factor-lcm of the denominators in this group; each coefficient is
    // scaled by its missing factors only.
    std::vector<std::pair<const MPoly*, int>> lcm;
    for (const RatFn* f : entry.coeffs) {
      for (const auto& [factor, exp] : f->den_factors()) {
        bool found = false;
        for (auto& [lf, le] : lcm) {
          if (lf->cmp(factor) == 0) {
            le = std::max(le, exp);
            found = true;
            break;
          }
        }
        if (!found) lcm.emplace_back(&factor, exp);
      }
    }
    // Coordinates: scalar coefficients of the scaled numerators.  Coefficient
    // extraction at a fixed monomial is linear over the scalar field, so each
    // coordinate's left combination must vanish.
    std::map<MPoly::Expo, DiffOp> combos;
    for (size_t k = 0; k < entry.coeffs.size(); ++k) {
      MPoly scaled = entry.coeffs[k]->num();
      for (const auto& [lf, le] : lcm) {
        int have = 0;
        for (const auto& [factor, exp] : entry.coeffs[k]->den_factors())
          if (factor.cmp(*lf) == 0) { have = exp; break; }
        for (int t = have; t < le; ++t) scaled *= *lf;
      }
      for (const auto& [expo, c] : scaled.terms()) {
        DiffOp contrib = *entry.lefts[k];
        contrib.scale(c);
        auto it = combos.find(expo);
        if (it == combos.end())
          combos.emplace(expo, std::move(contrib));
        else
          it->second += contrib;
      }
    }
    for (const auto& [key, combo] : combos)
      if (!combo.is_zero()) return false;
  }
  return true;
}

TensorElem TensorElem::left_grade_multiple_of(int rank, int node) const {
  TensorElem out(lw_, rw_);
  for (const auto& [l, r] : pairs_) {
    for (const auto& [grade, part] : l.graded_parts(rank)) {
      bool ok = true;
      for (int k = 0; k < rank; ++k) {
        if (k == node) continue;
        if (grade[k] != 0) { ok = false; break; }
      }
      if (ok) out.append(part, r);
    }
  }
  out.compress();
  return out;
}

bool TensorElem::left_grades_strictly_negative(int rank) const {
  for (const auto& [l, r] : pairs_) {
    if (r.is_zero()) continue;
    for (const auto& [grade, part] : l.graded_parts(rank)) {
      if (part.is_zero()) continue;
      int total = 0;
      bool nonpos = true;
      for (int k = 0; k < rank; ++k) {
        total += grade[k];
        if (grade[k] > 0) nonpos = false;
      }
      if (!nonpos || total >= 0) {
        // the graded pair may still cancel against other pairs; collect and test
        TensorElem offending(lw_, rw_);
        for (const auto& [l2, r2] : pairs_) {
          auto parts = l2.graded_parts(rank);
          auto it = parts.find(grade);
          if (it != parts.end()) offending.append(it->second, r2);
        }
        if (!offending.is_zero()) return false;
      }
    }
  }
  return true;
}

std::string TensorElem::str() const {
  if (pairs_.empty()) return "0";
  std::string out;
  for (const auto& [l, r] : pairs_) {
    if (!out.empty()) out += "  +  ";
    out += "[" + l.str() + "] (x) [" + r.str() + "]";
  }
  return out;
}

TensorElem tensor_commutator(const TensorElem& a, const TensorElem& b) { return a * b - b * a; }

}  // namespace ysl
