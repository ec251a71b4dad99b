#pragma once

// Naive reference implementations. They scan whole morphism sets instead of
// using hom indexes or cached lifts.

#include <optional>
#include <vector>

#include "fibcat/category.hpp"
#include "fibcat/functor.hpp"
#include "fibcat/limits.hpp"

namespace oracle {

using namespace fibcat;

inline std::vector<MorId> all_morphisms(const FinCategory& c) {
  std::vector<MorId> v;
  for (std::uint32_t i = 0; i < c.num_morphisms(); ++i) v.push_back(MorId{i});
  return v;
}

inline std::vector<Cone> cones(const FinCategory& c, Cospan k) {
  std::vector<Cone> out;
  for (MorId p : all_morphisms(c)) {
    if (c.tgt(p) != c.src(k.left)) continue;
    for (MorId q : all_morphisms(c)) {
      if (c.tgt(q) != c.src(k.right) || c.src(q) != c.src(p)) continue;
      if (c.compose_checked(k.left, p) == c.compose_checked(k.right, q)) {
        out.push_back({c.src(p), p, q});
      }
    }
  }
  return out;
}

inline bool is_pullback(const FinCategory& c, Cospan k, const Cone& x) {
  if (c.compose_checked(k.left, x.left) != c.compose_checked(k.right, x.right)) return false;
  for (const Cone& y : cones(c, k)) {
    int mediators = 0;
    for (MorId m : all_morphisms(c)) {
      if (c.src(m) != y.apex || c.tgt(m) != x.apex) continue;
      if (c.compose(x.left, m) == y.left && c.compose(x.right, m) == y.right) ++mediators;
    }
    if (mediators != 1) return false;
  }
  return true;
}

inline std::optional<Cone> some_pullback(const FinCategory& c, Cospan k) {
  for (const Cone& x : cones(c, k)) {
    if (is_pullback(c, k, x)) return x;
  }
  return std::nullopt;
}

inline bool is_terminal(const FinCategory& c, ObjId z) {
  for (std::uint32_t x = 0; x < c.num_objects(); ++x) {
    int n = 0;
    for (MorId m : all_morphisms(c)) n += c.src(m) == ObjId{x} && c.tgt(m) == z;
    if (n != 1) return false;
  }
  return true;
}

inline bool is_iso(const FinCategory& c, MorId f) {
  for (MorId g : all_morphisms(c)) {
    if (c.src(g) == c.tgt(f) && c.tgt(g) == c.src(f) &&
        c.compose(g, f) == c.id(c.src(f)) && c.compose(f, g) == c.id(c.tgt(f))) {
      return true;
    }
  }
  return false;
}

// Cocartesian by the full quantifier: every h out of src f and every v with
// v ∘ π f = π h admit exactly one g over v with g ∘ f = h.
inline bool is_cocartesian(const Functor& pi, MorId f) {
  const FinCategory& E = *pi.source;
  const FinCategory& B = *pi.target;
  for (MorId h : all_morphisms(E)) {
    if (E.src(h) != E.src(f)) continue;
    for (MorId v : all_morphisms(B)) {
      if (B.src(v) != B.tgt(pi(f)) || B.tgt(v) != pi(E.tgt(h))) continue;
      if (B.compose(v, pi(f)) != pi(h)) continue;
      int n = 0;
      for (MorId g : all_morphisms(E)) {
        n += E.src(g) == E.tgt(f) && E.tgt(g) == E.tgt(h) && pi(g) == v &&
             E.compose(g, f) == h;
      }
      if (n != 1) return false;
    }
  }
  return true;
}

inline bool is_cartesian(const Functor& pi, MorId f) {
  const FinCategory& E = *pi.source;
  const FinCategory& B = *pi.target;
  for (MorId h : all_morphisms(E)) {
    if (E.tgt(h) != E.tgt(f)) continue;
    for (MorId v : all_morphisms(B)) {
      if (B.tgt(v) != B.src(pi(f)) || B.src(v) != pi(E.src(h))) continue;
      if (B.compose(pi(f), v) != pi(h)) continue;
      int n = 0;
      for (MorId g : all_morphisms(E)) {
        n += E.tgt(g) == E.src(f) && E.src(g) == E.src(h) && pi(g) == v &&
             E.compose(f, g) == h;
      }
      if (n != 1) return false;
    }
  }
  return true;
}

// Every (u, e) has some lift, by scanning all arrows.
inline bool has_all_cocartesian_lifts(const Functor& pi) {
  const FinCategory& E = *pi.source;
  const FinCategory& B = *pi.target;
  for (MorId u : all_morphisms(B)) {
    for (std::uint32_t e = 0; e < E.num_objects(); ++e) {
      if (pi(ObjId{e}) != B.src(u)) continue;
      bool found = false;
      for (MorId f : all_morphisms(E)) {
        if (E.src(f) == ObjId{e} && pi(f) == u && is_cocartesian(pi, f)) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

inline bool has_all_cartesian_lifts(const Functor& pi) {
  const FinCategory& E = *pi.source;
  const FinCategory& B = *pi.target;
  for (MorId u : all_morphisms(B)) {
    for (std::uint32_t e = 0; e < E.num_objects(); ++e) {
      if (pi(ObjId{e}) != B.tgt(u)) continue;
      bool found = false;
      for (MorId f : all_morphisms(E)) {
        if (E.tgt(f) == ObjId{e} && pi(f) == u && is_cartesian(pi, f)) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

// Components invertible and every naturality square commutes.
inline bool is_natural_iso(const NatTrans& t) {
  const FinCategory& S = *t.from.source;
  const FinCategory& T = *t.from.target;
  for (std::uint32_t x = 0; x < S.num_objects(); ++x) {
    MorId a = t.component[x];
    if (T.src(a) != t.from(ObjId{x}) || T.tgt(a) != t.to(ObjId{x}) || !is_iso(T, a)) return false;
  }
  for (MorId f : all_morphisms(S)) {
    MorId l = T.compose(t.to(f), t.component[S.src(f).v]);
    MorId r = T.compose(t.component[S.tgt(f).v], t.from(f));
    if (l != r) return false;
  }
  return true;
}

}  // namespace oracle
