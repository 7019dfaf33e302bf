#include <deque>

#include "ysl/error.hpp"
#include "ysl/yangian.hpp"

namespace ysl {

namespace {
constexpr int kTagEE = 0, kTagFF = 1, kTagHE = 2, kTagHF = 3;
constexpr long kStepBound = 50'000'000;

// Block order E < F < H; inside a block superscripts must weakly increase.
bool ordered(const GenSym& a, const GenSym& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.sup <= b.sup;
}
}  // namespace

RankOneEngine::RankOneEngine(const YangianCtx& ctx) : ctx_(ctx) {
  if (!ctx.rank_one()) throw ConfigError("RankOneEngine: rank-1 contexts only");
  half_form_ = KScalar(Rat(ctx.dat.bilinear(0, 0)) / 2);
}

// [E^(a), E^(b)] for a > b, straightened; recursion decreases a-b by 2.
NCElem RankOneEngine::comm_EE(int a, int b) {
  if (a == b) return NCElem();
  auto E = [&](int s) { return gen_elem(ctx_, GenKind::E, 0, s); };
  if (a == b + 1) return nf((E(b) * E(b)).scale(half_form_));
  NCElem rest = (E(a - 1) * E(b) + E(b) * E(a - 1)).scale(half_form_);
  return nf(comm_EE(a - 1, b + 1) + rest);
}

NCElem RankOneEngine::comm_FF(int a, int b) {
  if (a == b) return NCElem();
  auto F = [&](int s) { return gen_elem(ctx_, GenKind::F, 0, s); };
  if (a == b + 1) return nf((F(b) * F(b)).scale(-half_form_));
  NCElem rest = (F(a - 1) * F(b) + F(b) * F(a - 1)).scale(-half_form_);
  return nf(comm_FF(a - 1, b + 1) + rest);
}

// [H^(a), E^(b)], solved upward from the floor where H is central (constant).
NCElem RankOneEngine::comm_HE(int a, int b) {
  int floor = ctx_.h_floor(0);
  if (a <= floor) return NCElem();
  auto E = [&](int s) { return gen_elem(ctx_, GenKind::E, 0, s); };
  auto H = [&](int s) { return gen_elem(ctx_, GenKind::H, 0, s); };
  NCElem rest = (H(a - 1) * E(b) + E(b) * H(a - 1)).scale(half_form_);
  return nf(comm_HE(a - 1, b + 1) + rest);
}

NCElem RankOneEngine::comm_HF(int a, int b) {
  int floor = ctx_.h_floor(0);
  if (a <= floor) return NCElem();
  auto F = [&](int s) { return gen_elem(ctx_, GenKind::F, 0, s); };
  auto H = [&](int s) { return gen_elem(ctx_, GenKind::H, 0, s); };
  NCElem rest = (H(a - 1) * F(b) + F(b) * H(a - 1)).scale(-half_form_);
  return nf(comm_HF(a - 1, b + 1) + rest);
}

const NCElem& RankOneEngine::swap_correction(GenKind ka, int a, GenKind kb, int b) {
  int tag;
  if (ka == GenKind::E && kb == GenKind::E) tag = kTagEE;
  else if (ka == GenKind::F && kb == GenKind::F) tag = kTagFF;
  else if (ka == GenKind::H && kb == GenKind::E) tag = kTagHE;
  else tag = kTagHF;
  auto key = std::make_tuple(tag, a, b);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  NCElem value;
  switch (tag) {
    case kTagEE: value = comm_EE(a, b); break;
    case kTagFF: value = comm_FF(a, b); break;
    case kTagHE: value = comm_HE(a, b); break;
    case kTagHF: value = comm_HF(a, b); break;
  }
  return memo_.emplace(key, std::move(value)).first->second;
}

NCElem RankOneEngine::nf_word(const Word& w0, const KScalar& c0) {
  NCElem result;
  std::deque<std::pair<Word, KScalar>> work;
  work.emplace_back(w0, c0);
  long steps = 0;
  while (!work.empty()) {
    if (++steps > kStepBound) throw Error("nf_a1: rewriting step bound exceeded");
    auto [w, c] = std::move(work.front());
    work.pop_front();
    if (c.is_zero()) continue;
    if (static_cast<int>(w.size()) > ctx_.len_cap)
      throw OverflowError("nf_a1: word length exceeds cap");
    size_t bad = w.size();
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      if (!ordered(w[k], w[k + 1])) { bad = k; break; }
    }
    if (bad == w.size()) {
      result += NCElem::word(std::move(w), c);
      continue;
    }
    const GenSym x = w[bad], y = w[bad + 1];
    Word prefix(w.begin(), w.begin() + bad);
    Word suffix(w.begin() + bad + 2, w.end());
    auto requeue = [&](const NCElem& middle, const KScalar& coeff) {
      for (const auto& [mw, mc] : middle.terms()) {
        Word nw = prefix;
        nw.insert(nw.end(), mw.begin(), mw.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        work.emplace_back(std::move(nw), coeff * mc);
      }
    };
    if (x.kind == y.kind) {
      // descending superscripts: x y = y x + [x, y]; H's commute outright
      Word swapped = {y, x};
      requeue(NCElem::word(swapped), c);
      if (x.kind != GenKind::H) requeue(swap_correction(x.kind, x.sup, y.kind, y.sup), c);
    } else if (x.kind == GenKind::F && y.kind == GenKind::E) {
      // F^(a) E^(b) = E^(b) F^(a) - H^(a+b-1)
      requeue(NCElem::word({y, x}), c);
      requeue(gen_elem(ctx_, GenKind::H, 0, x.sup + y.sup - 1), -c);
    } else {
      // H past E or F
      requeue(NCElem::word({y, x}), c);
      requeue(swap_correction(x.kind, x.sup, y.kind, y.sup), c);
    }
  }
  return result;
}

NCElem RankOneEngine::nf(const NCElem& x) {
  NCElem out;
  for (const auto& [w, c] : x.terms()) out += nf_word(w, c);
  return out;
}

NCElem nf_a1(const YangianCtx& ctx, const NCElem& x) {
  RankOneEngine engine(ctx);
  return engine.nf(x);
}

}  // namespace ysl
