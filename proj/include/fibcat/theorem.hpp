#pragma once

#include <string>
#include <vector>

#include "fibcat/constructions.hpp"
#include "fibcat/fibration.hpp"
#include "fibcat/functor.hpp"
#include "fibcat/verdict.hpp"

namespace fibcat {

enum class TheoremMode { kMoens, kGeneralized };
enum class RoundTripDirection { kPsiPhi, kPhiPsi };

struct WitnessFunctor {
  std::string name;
  Functor functor;
  bool equivalence = false;  // must pass is_equivalence
};

struct NamedNatTrans {
  std::string name;
  NatTrans trans;
};

struct RoundTripReport {
  RoundTripDirection direction = RoundTripDirection::kPsiPhi;
  TheoremMode mode = TheoremMode::kMoens;
  std::vector<WitnessFunctor> witness_functors;
  std::vector<NamedNatTrans> natural_isos;
  // fiberedness, lexness of Φ, Moens-ness of Ψ and similar side checks
  std::vector<PredicateVerdict> checks;
  std::string failure;  // first failing piece, empty on success
  bool verdict = false;
};

// Recomputes the verdict from the stored functors and transformations.
bool reverify(const RoundTripReport& r);

// Φ(P) = ω' : B → P z. Throws NotLex on a non-lex base, NotMoens or
// NotGenMoens per mode.
Functor phi(const Fibration& p, TheoremMode mode = TheoremMode::kMoens);
// Ψ(F) = gl(F). Throws NotLex, or NotTerminalPreserving in generalized mode.
Gluing psi(const Functor& F, TheoremMode mode = TheoremMode::kMoens);

// φ : E → gl(Φ P), e ↦ μ_e, and ψ back by pulling ν_b back along f.
// Throws NotMoens / NotGenMoens, MissingPullback.
RoundTripReport roundtrip_psi_phi(const Fibration& p, TheoremMode mode = TheoremMode::kMoens);
// Φ(Ψ F) read through P z ≅ C, compared with F.
RoundTripReport roundtrip_phi_psi(const Functor& F, TheoremMode mode = TheoremMode::kMoens);

}  // namespace fibcat
