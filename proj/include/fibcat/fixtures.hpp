#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fibcat/category.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/functor.hpp"

namespace fibcat {

// Thin category on the reflexive-transitive closure of `leq`. Identities are
// named id_<x>, other arrows <x>-><y>.
CatPtr preorder(const std::vector<std::string>& objects,
                const std::vector<std::pair<std::string, std::string>>& leq);

CatPtr one();
CatPtr two();       // 0 → 1
CatPtr iso2();      // p ≅ q
CatPtr diamond();   // bot < a, b < top
CatPtr chain(int n);  // 0 < 1 < ... < n-1
CatPtr walking_cospan();  // a → c ← b

// Skeleton of finite sets {0,...,n} with all functions.
CatPtr finset(int n);

// Functor between thin categories from its object map; throws
// FunctorialityViolation when the map is not monotone.
Functor monotone_functor(const CatPtr& src, const CatPtr& tgt, const std::vector<ObjId>& obj);
Functor monotone_functor(const CatPtr& src, const CatPtr& tgt,
                         const std::vector<std::string>& obj_names);

// Full subcategory of a thin category on the objects below `a`.
CatPtr down_set(const FinCategory& thin, ObjId a);

// x ↦ x ∧ a from a lattice into its down-set at a.
Functor meet_with(const CatPtr& lattice, ObjId a);

// Constant functor at an object.
Functor constant_functor(const CatPtr& src, const CatPtr& tgt, ObjId value);

// Diamond → Chain(4), (bot, a, b, top) ↦ (0, 1, 2, 3).
Functor f_bad();

// Base Two with the given fibers and transition along 0 → 1.
GrothendieckData family_over_two(const CatPtr& p0, const CatPtr& p1, const Functor& t);

// Fibers Two over 0 and One over 1, collapsing transition. The total
// category is the chain x0 < x1 < *.
GrothendieckData collapsing_family();

}  // namespace fibcat
