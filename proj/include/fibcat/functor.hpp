#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibcat/category.hpp"

namespace fibcat {

struct Functor {
  CatPtr source, target;
  std::vector<ObjId> obj;
  std::vector<MorId> mor;

  ObjId operator()(ObjId x) const { return obj[x.v]; }
  MorId operator()(MorId f) const { return mor[f.v]; }
};

// Throws FunctorialityViolation naming the offending data.
void validate_functor(const Functor& f);
std::optional<std::string> functor_violation(const Functor& f);

Functor identity_functor(const CatPtr& c);
Functor compose(const Functor& g, const Functor& f);  // g ∘ f

// Bijective on objects and on morphisms.
bool is_isomorphism(const Functor& f);
bool is_fully_faithful(const Functor& f);
bool is_essentially_surjective(const Functor& f);
bool is_equivalence(const Functor& f);

// Strict equality of two parallel functors.
bool functors_equal(const Functor& a, const Functor& b);

struct NatTrans {
  Functor from, to;
  std::vector<MorId> component;  // indexed by source object
};

std::optional<std::string> naturality_violation(const NatTrans& t);
bool is_natural(const NatTrans& t);
bool natural_iso(const NatTrans& t);

}  // namespace fibcat
