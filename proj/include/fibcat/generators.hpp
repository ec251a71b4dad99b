#pragma once

#include <cstdint>

#include "fibcat/category.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/functor.hpp"

namespace fibcat {

// Random poset on p0..p{n-1}: each pair i < j is related with the given
// percentage, then closed transitively.
CatPtr random_poset(int n, std::uint64_t seed, int edge_percent = 30);

// Random closure system of exactly n subsets (n ≥ 1), ordered by inclusion.
// Bounded and closed under meets, hence lex. l0 is the bottom, l{n-1} the top.
CatPtr random_lattice(int n, std::uint64_t seed);

// Random monotone map between thin categories.
Functor random_monotone(const CatPtr& src, const CatPtr& tgt, std::uint64_t seed);

// Strict family over a random poset (or lattice) on n objects with chain
// fibers; the transitions truncate, so fiber lengths only shrink along the
// order. Truncation has both adjoints, so the result is bicartesian.
GrothendieckData random_family(int n, int max_fiber, std::uint64_t seed, bool lattice_base = false);

// Gluing of a random monotone map between two random lattices of size n.
Gluing random_gluing(int n, std::uint64_t seed, const SizeGuard& guard = {});

}  // namespace fibcat
