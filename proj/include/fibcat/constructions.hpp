#pragma once

#include <optional>
#include <vector>

#include "fibcat/category.hpp"
#include "fibcat/fibration.hpp"
#include "fibcat/functor.hpp"
#include "fibcat/limits.hpp"

namespace fibcat {

// Objects are the morphisms of B (same names), morphisms the commuting
// squares [α,β]:f->g with β ∘ f = g ∘ α.
struct ArrowCategory {
  CatPtr cat;
  Functor dom, cod;  // ∂₀, ∂₁
  std::vector<MorId> arrow;  // object ↦ morphism of B
  std::vector<MorId> top, bottom;  // square ↦ α, β
  ObjId object(MorId f) const { return ObjId{f.v}; }
  // The square with sides f, g and components α, β.
  MorId square(MorId f, MorId g, MorId alpha, MorId beta) const;
};

ArrowCategory arrow_category(const CatPtr& b, const SizeGuard& guard = {});

// ∂₁ : B^Δ¹ → B.
Fibration codomain_fibration(const CatPtr& b, const SizeGuard& guard = {});
// ∂₀ : B^Δ¹ → B; throws MissingPushouts.
Fibration domain_opfibration(const CatPtr& b, const SizeGuard& guard = {});
// Cocartesian lift of u : src f → a along ∂₀ at f, read off the canonical
// pushout of (f, u).
MorId domain_pushout_lift(const ArrowCategory& ar, MorId u, MorId f);

// Strict functor b ↦ fiber_at[b] from the base.
struct GrothendieckData {
  CatPtr base;
  std::vector<CatPtr> fiber_at;     // per base object
  std::vector<Functor> transition;  // per base morphism
};

// Throws FunctorialityViolation.
void validate_grothendieck(const GrothendieckData& g);

struct Grothendieck {
  GrothendieckData data;
  Fibration fib;
  std::vector<ObjId> obj_base, obj_fiber;  // (b, x)
  std::vector<MorId> mor_base, mor_fiber;  // (u, φ : T(u) x → y)
  ObjId object(ObjId b, ObjId x) const;
  MorId morphism(ObjId src, ObjId tgt, MorId u, MorId phi) const;
  // (u, id) at (b, x).
  MorId cocartesian_lift(MorId u, ObjId e) const;
};

// Objects "(b,x)", morphisms "[u,φ]:src->tgt".
Grothendieck grothendieck(const GrothendieckData& g, const SizeGuard& guard = {});

// Object (a, b, f) of a comma category, or the arrow with components (α, β).
ObjId comma_object(const CommaCategory& c, ObjId a, ObjId b, MorId f);
MorId comma_morphism(const CommaCategory& c, ObjId src, ObjId tgt, MorId alpha, MorId beta);

// L(π) = π↓B over B with objects (e, b, u : π e → b).
struct FreeCocartesian {
  Functor pi;
  CommaCategory comma;
  Fibration fib;
};

FreeCocartesian free_cocartesian(const Functor& pi, const SizeGuard& guard = {});
// Cartesian lift of v : b' → b at (e, b, u): pull u back along v to get
// p : b'' → π e, lift p cartesianly at e through π. Throws MissingPullback
// or MissingLift.
MorId free_cocartesian_cartesian_lift(const FreeCocartesian& l, const Fibration& pi, MorId v,
                                      ObjId x);

// gl(F) = C↓F over B with objects (c, b, f : c → F b).
struct Gluing {
  Functor F;
  CommaCategory comma;
  Fibration fib;
};

Gluing artin_gluing(const Functor& F, const SizeGuard& guard = {});
// [id_c, u] : (c, b, v) → (c, b', F u ∘ v).
MorId gluing_cocartesian_lift(const Gluing& g, MorId u, ObjId x);
// [l, u] : (p, b, r) → (c, b', w) from the canonical pullback of (w, F u).
// Throws MissingPullback.
MorId gluing_cartesian_lift(const Gluing& g, MorId u, ObjId x);
// Both formulas agree with the exhaustive test and are essentially unique.
// Requires C lex (NotLex).
PredicateVerdict verify_gluing_lift_formulas(const Gluing& g);

}  // namespace fibcat
