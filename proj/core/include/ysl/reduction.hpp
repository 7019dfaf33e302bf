#pragma once

#include <vector>

#include "ysl/coproduct.hpp"
#include "ysl/dop.hpp"

namespace ysl {

// Configuration for the reduction coproduct Y_mu -> Y_{-alpha_i} (x)
// Y_{mu+alpha_i}: source data (lambda, mu, R), the chosen node, and
// representation data for the two (possibly shifted) tensor factors.
struct ReductionSetup {
  CartanDatum dat;
  Coweight lambda;
  Coweight mu;
  std::vector<std::vector<Rat>> R;
  int node = 0;

  Coweight mu1, mu2, eta1, eta2;
  GKLODataPtr left_shifted;    // rep of Y_{mu1+eta1}
  GKLODataPtr right_shifted;   // rep of Y_{mu2+eta2}
  GKLODataPtr left_direct;     // rep of Y_{mu1} with lambda = 0 (the truncation)
  GKLODataPtr right_direct;    // rep of Y_{mu2} with (lambda, R)
};

// Builds the setup, choosing minimal shifted-factor data when none is given.
ReductionSetup make_reduction_setup(const CartanDatum& dat, const Coweight& lambda,
                                    const Coweight& mu, const std::vector<std::vector<Rat>>& R,
                                    int node);

// The explicit comultiplication of the Cartan generating series, checked to
// order m_i + extra:
//   (1) after iota (x) iota, the component of Delta(A_j(u)) with left root
//       grade in Z*alpha_i equals A_j (x) A_j + d_j [A_j, F_j^(1)] (x)
//       [E_j^(1), A_j] projected the same way, for every node j;
//   (2) the factor truncations kill A^(r) beyond the factor m's;
//   (3) in the truncated factors the series identity collapses to
//       Delta-bar(A_i(u)) = A_i (x) A_i + d_i[A_i, F_i^(1)] (x) [E_i^(1), A_i]
//       with vanishing coefficients beyond m_i, and Delta-bar(A_j(u)) =
//       1 (x) A_j(u) for j != i.
std::vector<CoprodCheck> explicit_comult_checks(const ReductionSetup& setup, int extra = 3);

// Delta-bar(E_i^(1)) = E_i^(1) (x) 1 in the reduction configuration, plus the
// weight-shape consequence: Delta(F_j^(1)) - 1 (x) F_j^(1) has strictly
// negative left root grade.
std::vector<CoprodCheck> reduction_generator_checks(const ReductionSetup& setup);

// The localization prerequisites: iterated ad E_i^(1) kills the degree-one
// and degree-two Levendorskii elements, [E^(1), F^(1)] vanishes under the
// shift hypothesis, [E^(1), E^(2)] = -(alpha.alpha)/2 (E^(1))^2, and the
// Serre nilpotency.  Rank one is decided by the normal form, higher rank by
// the representation family.
std::vector<CoprodCheck> ad_nilpotency_checks(const CartanDatum& dat, const Coweight& mu,
                                              const std::vector<GkloRep>& family, int node);

// Quantum Hamiltonian reduction of the differential-operator model:
// [z, del^m] = -m del^(m-1) for m <= cap, the invariant subspace of the
// quotient is the scalars, and the generator assignment respects the
// three defining relations (exact displayed map at d = 1; the corrected
// F |-> -d^{-1} z^{-1} for other symmetrizers).
std::vector<CoprodCheck> qhr_checks(int cap, const std::vector<long>& d_values);

}  // namespace ysl
