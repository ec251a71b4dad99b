#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fibcat/category.hpp"
#include "fibcat/functor.hpp"
#include "fibcat/limits.hpp"
#include "fibcat/verdict.hpp"

namespace fibcat {

// Strict fiber over one base object, with its inclusion into the total category.
struct Fiber {
  CatPtr cat;
  std::vector<ObjId> obj_incl;
  std::vector<MorId> mor_incl;
};

// Unique g : tgt f → e'' with π g = v and g ∘ f = h, by exhaustive search.
bool check_cocartesian(const Functor& proj, MorId f);
bool check_cartesian(const Functor& proj, MorId f);

class Fibration {
 public:
  // Validates the projection and precomputes fibers, flags and chosen lifts.
  explicit Fibration(Functor proj);

  const FinCategory& total() const { return *proj_.source; }
  const FinCategory& base() const { return *proj_.target; }
  const CatPtr& total_ptr() const { return proj_.source; }
  const CatPtr& base_ptr() const { return proj_.target; }
  const Functor& proj() const { return proj_; }

  ObjId over(ObjId e) const { return proj_(e); }
  MorId over(MorId f) const { return proj_(f); }

  const Fiber& fiber(ObjId b) const { return fibers_[b.v]; }
  ObjId local(ObjId e) const { return local_obj_[e.v]; }
  // Requires π f to be an identity.
  MorId local(MorId f) const;
  ObjId global(ObjId b, ObjId x) const { return fibers_[b.v].obj_incl[x.v]; }
  MorId global(ObjId b, MorId m) const { return fibers_[b.v].mor_incl[m.v]; }

  bool is_cocartesian(MorId f) const { return cocart_[f.v]; }
  bool is_cartesian(MorId f) const { return cart_[f.v]; }
  bool is_vertical(MorId f) const { return base().is_iso(over(f)); }
  bool in_fiber(MorId f) const { return base().is_identity(over(f)); }

  // All cocartesian arrows out of e over u, ascending ids.
  std::vector<MorId> cocartesian_lifts(MorId u, ObjId e) const;
  std::vector<MorId> cartesian_lifts(MorId u, ObjId e) const;
  // Canonical (lowest id) lift.
  std::optional<MorId> cocartesian_lift(MorId u, ObjId e) const;
  std::optional<MorId> cartesian_lift(MorId u, ObjId e) const;
  // Throw MissingLift.
  MorId push(MorId u, ObjId e) const;  // P_!(u, e)
  MorId pull(MorId u, ObjId e) const;  // P^*(u, e)

  bool is_cocartesian_fibration() const { return cocart_fib_; }
  bool is_cartesian_fibration() const { return cart_fib_; }
  bool is_bicartesian() const { return cocart_fib_ && cart_fib_; }

 private:
  Functor proj_;
  std::vector<Fiber> fibers_;
  std::vector<ObjId> local_obj_;
  std::vector<MorId> local_mor_;
  std::vector<char> cocart_, cart_;
  // per base morphism, indexed by the fiber-local id of the source/target
  std::vector<std::vector<std::optional<MorId>>> push_, pull_;
  bool cocart_fib_ = true, cart_fib_ = true;
};

// Witness if two cocartesian (resp. cartesian) lifts are not related by a
// unique vertical iso.
std::optional<Witness> lift_uniqueness_failure(const Fibration& p);

// Unique g with g ∘ f = h and π g = v.
MorId fill_cocart(const Fibration& p, MorId f, MorId h, MorId v);
// Infers v when exactly one base arrow factors π h through π f.
MorId fill_cocart(const Fibration& p, MorId f, MorId h);
// Unique g with f ∘ g = h and π g = v.
MorId fill_cart(const Fibration& p, MorId f, MorId h, MorId v);
MorId fill_cart(const Fibration& p, MorId f, MorId h);

// f = m ∘ c with c cocartesian and m vertical.
std::pair<MorId, MorId> factor_cocart_vert(const Fibration& p, MorId f);
// f = c ∘ m with m vertical and c cartesian; returns (m, c).
std::pair<MorId, MorId> factor_vert_cart(const Fibration& p, MorId f);

// u_! : P a → P b and u^* : P b → P a between strict fibers.
Functor transport_pushforward(const Fibration& p, MorId u);
Functor transport_pullback(const Fibration& p, MorId u);

// η : id ⇒ u^* u_! on P a and ε : u_! u^* ⇒ id on P b.
NatTrans adjunction_unit(const Fibration& p, MorId u);
NatTrans adjunction_counit(const Fibration& p, MorId u);
// Triangle identities and the hom bijection, for one base arrow.
PredicateVerdict check_transport_adjunction(const Fibration& p, MorId u);

// Φ : E_p → E_q over a shared base; throws NotFibered when π_q Φ ≠ π_p.
PredicateVerdict is_cocartesian_functor(const Fibration& p, const Fibration& q, const Functor& phi);
PredicateVerdict is_cartesian_functor(const Fibration& p, const Fibration& q, const Functor& phi);

struct LexnessReport {
  bool total_has_terminal = false, proj_preserves_terminal = false;
  bool fibers_have_terminal = false, reindex_preserves_terminal = false;
  bool total_has_pullbacks = false, proj_preserves_pullbacks = false;
  bool fibers_have_pullbacks = false, reindex_preserves_pullbacks = false;
  bool zeta_lex = false;          // only meaningful when the fiber side holds
  bool terminal_totalty = false;  // ⟨z, ζ_z⟩ terminal in E
  bool terminal_side_total() const { return total_has_terminal && proj_preserves_terminal; }
  bool terminal_side_fibers() const { return fibers_have_terminal && reindex_preserves_terminal; }
  bool pullback_side_total() const { return total_has_pullbacks && proj_preserves_pullbacks; }
  bool pullback_side_fibers() const { return fibers_have_pullbacks && reindex_preserves_pullbacks; }
  bool agree() const {
    return terminal_side_total() == terminal_side_fibers() &&
           pullback_side_total() == pullback_side_fibers();
  }
  bool lex() const { return terminal_side_fibers() && pullback_side_fibers(); }
};

// b ↦ lowest terminal of the fiber over b, when these form a functor.
std::optional<Functor> terminal_section_functor(const Fibration& p);

// Requires a lex base and a cartesian fibration (NotLex / NotCartesian).
LexnessReport lexness_transfer(const Fibration& p);

// Lex fibration in the fibred sense: base lex, cartesian, lex fibers,
// lex reindexing.
bool is_lex_fibration(const Fibration& p);

PredicateVerdict vertical_pullback_stability(const Fibration& p);
PredicateVerdict cartesian_pullback_stability(const Fibration& p);
PredicateVerdict vertical_rlp(const Fibration& p);
PredicateVerdict vertical_retracts(const Fibration& p);

// Square checks over cartesian arrows.
PredicateVerdict cartesian_squares_are_pullbacks(const Fibration& p);
PredicateVerdict cartesian_vertical_squares_are_pullbacks(const Fibration& p);
PredicateVerdict fiber_pullbacks_are_pullbacks(const Fibration& p);

// Closure of cocartesian arrows under composition and right cancellation.
PredicateVerdict cocartesian_closure(const Fibration& p);

}  // namespace fibcat
