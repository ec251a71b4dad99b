#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fibcat/category.hpp"
#include "fibcat/functor.hpp"

namespace fibcat {

// left: a → c, right: b → c
struct Cospan {
  MorId left, right;
  friend bool operator==(const Cospan&, const Cospan&) = default;
};

// left: apex → a, right: apex → b
struct Cone {
  ObjId apex;
  MorId left, right;
  friend bool operator==(const Cone&, const Cone&) = default;
};

// A commuting square
//   a --top--> b
//   |left      |right
//   c --bottom-> d
// read as the cone (left, top) over the cospan (bottom, right).
struct Square {
  MorId top, left, right, bottom;
};

bool commutes(const FinCategory& c, const Square& s);
Cospan cospan_of(const Square& s);
Cone cone_of(const FinCategory& c, const Square& s);

struct ConeResult {
  Cone cone;
  bool universal = false;
  std::vector<std::pair<Cone, MorId>> mediator_table;
};

// All cones over one cospan, with universality tests.
class ConeSpace {
 public:
  ConeSpace(const FinCategory& c, Cospan k);

  bool is_cone(MorId p, MorId q) const;
  bool is_universal(const Cone& x) const;
  std::optional<MorId> mediator(const Cone& from, const Cone& into) const;
  std::vector<Cone> cones() const;
  // First universal cone in (apex, left, right) order satisfying pred.
  std::optional<Cone> first_universal(const std::function<bool(const Cone&)>& pred = {}) const;

 private:
  const FinCategory& c_;
  Cospan k_;
  std::vector<std::uint32_t> count_;  // cones with a given apex
};

std::vector<Cospan> all_cospans(const FinCategory& c);

// Canonical pullback: lowest apex id, then lowest leg ids. Memoized.
std::optional<Cone> pullback_cone(const FinCategory& c, Cospan k);
Cone require_pullback(const FinCategory& c, Cospan k);  // throws MissingPullback
std::optional<ConeResult> pullback(const FinCategory& c, Cospan k);
bool is_pullback(const FinCategory& c, const Square& s);

// Pushout of a span (left: c → a, right: c → b), cocone legs into the apex.
std::optional<ConeResult> pushout(const FinCategory& c, Cospan span);
bool has_all_pushouts(const FinCategory& c);
bool has_all_pullbacks(const FinCategory& c);
bool is_lex_category(const FinCategory& c);

// Throws MissingLimit when the source lacks the limit in question.
bool preserves_terminal(const Functor& f);
bool preserves_pullbacks(const Functor& f);
bool is_lex_functor(const Functor& f);
// First cospan whose canonical pullback is not preserved.
std::optional<Cospan> pullback_preservation_failure(const Functor& f);

struct SliceCategory {
  CatPtr cat;
  Functor dom;                  // forgetful projection to the base
  std::vector<MorId> structure;  // arrow into the slicing object per object
};

SliceCategory slice(const CatPtr& c, ObjId a, const SizeGuard& guard = {});

struct CommaCategory {
  CatPtr cat;
  Functor proj_left, proj_right;
  std::vector<MorId> structure;  // F a → G b per object
};

// Objects (a, b, f : F a → G b).
CommaCategory comma(const Functor& f, const Functor& g, const SizeGuard& guard = {});

// Pullbacks in the slice over a agree with pullbacks of the underlying
// cospan in the base, cone by cone.
bool slice_pullback_agrees(const CatPtr& c, ObjId a, Cospan k_in_slice);

std::string encode_tuple(std::initializer_list<std::string_view> parts);

}  // namespace fibcat
