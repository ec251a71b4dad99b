#pragma once

#include <string>
#include <vector>

#include "fibcat/constructions.hpp"
#include "fibcat/fibration.hpp"
#include "fibcat/verdict.hpp"

namespace fibcat {

// Squares are checked over pullbacks in the base. All verdicts carry a
// witness when they fail.
PredicateVerdict satisfies_bcc(const Fibration& p);       // NotBicartesian
PredicateVerdict satisfies_dual_bcc(const Fibration& p);  // NotBicartesian
// τ ⊣ ι on L(π) = π↓B with vertical units, and τ cartesian. Requires a
// cartesian fibration over a base with pullbacks.
PredicateVerdict bcc_via_transport(const Fibration& p);

// Throw MissingPullback when E lacks a needed pullback.
PredicateVerdict has_stable_sums(const Fibration& p);
PredicateVerdict has_disjoint_sums(const Fibration& p);
// Stability of cocartesian arrows along vertical arrows only.
PredicateVerdict has_vertically_stable_sums(const Fibration& p);

// Preconditions of the characterization suites: full pre-Moens / lex BC,
// or lex bicartesian with stability along verticals only.
enum class HypothesisMode { kFull, kVerticalStability };

struct CharacterizationReport {
  std::vector<PredicateVerdict> items;
  bool agree() const;
  bool all_hold() const;
  bool none_hold() const;
};

// (i) stable and disjoint, (ii) left cancellation, (iii) conservative
// transport, (iv) vertical/cocartesian squares are pullbacks.
// Throws NotPreMoens when the hypotheses of the mode fail.
CharacterizationReport disjointness_characterizations(const Fibration& p,
                                                      HypothesisMode mode = HypothesisMode::kFull);
PredicateVerdict left_cancellation(const Fibration& p);
PredicateVerdict conservative_transport(const Fibration& p);
PredicateVerdict vertical_cocartesian_squares(const Fibration& p);

// (1) Moens, (2) internal extensivity, (3) Lawvere extensivity,
// (4) transport condition. Throws NotBC (or NotPreMoens in the weakened mode).
CharacterizationReport extensivity_characterizations(const Fibration& p,
                                                     HypothesisMode mode = HypothesisMode::kFull);
PredicateVerdict internal_extensivity(const Fibration& p);
PredicateVerdict lawvere_extensivity(const Fibration& p);
PredicateVerdict transport_extensivity(const Fibration& p);

// Lex base, lex cartesian fibration.
PredicateVerdict is_lex_bicartesian(const Fibration& p);
PredicateVerdict is_pre_moens(const Fibration& p);
PredicateVerdict is_moens(const Fibration& p);
PredicateVerdict is_generalized_moens(const Fibration& p);

struct TerminalSection {
  ObjId z;                          // terminal of the base
  std::vector<MorId> bang;          // !_b
  std::vector<ObjId> zeta;          // terminal of the fiber over b, in E
  std::vector<MorId> zeta_lift;     // P_!(!_b, ζ_b)
  std::vector<ObjId> omega_prime;   // target of zeta_lift, over z
};

// Throws NoTerminal or MissingLift.
TerminalSection terminal_section(const Fibration& p);
// ω : E → P z, e ↦ (!_b)_! e.
Functor omega_functor(const Fibration& p, const TerminalSection& t);
// ω' : B → P z.
Functor omega_prime_functor(const Fibration& p, const TerminalSection& t);

// Gap maps, slice transport, u_! pullback preservation, ω lex. Throws NotMoens.
CharacterizationReport moens_consequences(const Fibration& p);
PredicateVerdict gap_maps_cocartesian(const Fibration& p);
PredicateVerdict vertical_gap_maps_cocartesian(const Fibration& p);
PredicateVerdict slice_transport_equivalences(const Fibration& p);
PredicateVerdict transport_preserves_pullbacks(const Fibration& p);
PredicateVerdict omega_is_lex(const Fibration& p);

// u_! preserves fiber pullbacks, η and ε are cartesian. Throws NotBicartesian
// or NotLex.
PredicateVerdict zawadowski_conditions(const Fibration& p);
bool zawadowski_equiv_gen_moens(const Fibration& p);

// preserves_pullbacks(F) == satisfies_bcc(gl F). Throws NotLex.
bool gluing_bcc_iff_pb_preserving(const Functor& F);

// Re-derives the violation named by a failed verdict from its witness arrows.
bool witness_reverifies(const Fibration& p, const PredicateVerdict& v);

}  // namespace fibcat
