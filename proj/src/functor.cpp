#include "fibcat/functor.hpp"

#include <algorithm>

namespace fibcat {

std::optional<std::string> functor_violation(const Functor& F) {
  const FinCategory& s = *F.source;
  const FinCategory& t = *F.target;
  if (F.obj.size() != s.num_objects() || F.mor.size() != s.num_morphisms()) {
    return "object or morphism map is not total";
  }
  for (ObjId y : F.obj) {
    if (y.v >= t.num_objects()) return "object map leaves the target";
  }
  for (std::uint32_t i = 0; i < s.num_morphisms(); ++i) {
    MorId f{i};
    MorId g = F.mor[i];
    if (g.v >= t.num_morphisms()) return "morphism map leaves the target";
    if (t.src(g) != F(s.src(f)) || t.tgt(g) != F(s.tgt(f))) {
      return "morphism " + s.name(f) + " is sent to an arrow with wrong endpoints";
    }
  }
  for (std::uint32_t x = 0; x < s.num_objects(); ++x) {
    if (F(s.id(ObjId{x})) != t.id(F(ObjId{x}))) {
      return "identity of " + s.name(ObjId{x}) + " is not preserved";
    }
  }
  for (std::uint32_t i = 0; i < s.num_morphisms(); ++i) {
    MorId f{i};
    for (MorId g : s.out(s.tgt(f))) {
      if (F(s.compose(g, f)) != t.compose(F(g), F(f))) {
        return "composite (" + s.name(g) + ", " + s.name(f) + ") is not preserved";
      }
    }
  }
  return std::nullopt;
}

void validate_functor(const Functor& f) {
  if (auto v = functor_violation(f)) fail(ErrorKind::kFunctorialityViolation, *v);
}

Functor identity_functor(const CatPtr& c) {
  Functor f{c, c, {}, {}};
  for (std::uint32_t x = 0; x < c->num_objects(); ++x) f.obj.push_back(ObjId{x});
  for (std::uint32_t m = 0; m < c->num_morphisms(); ++m) f.mor.push_back(MorId{m});
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (f.target.get() != g.source.get()) {
    fail(ErrorKind::kTargetMismatch, "functors are not composable");
  }
  Functor h{f.source, g.target, {}, {}};
  h.obj.reserve(f.obj.size());
  for (ObjId x : f.obj) h.obj.push_back(g(x));
  h.mor.reserve(f.mor.size());
  for (MorId m : f.mor) h.mor.push_back(g(m));
  return h;
}

bool is_isomorphism(const Functor& f) {
  if (functor_violation(f)) return false;
  if (f.source->num_objects() != f.target->num_objects() ||
      f.source->num_morphisms() != f.target->num_morphisms()) {
    return false;
  }
  std::vector<char> hit_o(f.target->num_objects(), 0), hit_m(f.target->num_morphisms(), 0);
  for (ObjId y : f.obj) {
    if (hit_o[y.v]++) return false;
  }
  for (MorId g : f.mor) {
    if (hit_m[g.v]++) return false;
  }
  return true;
}

bool is_fully_faithful(const Functor& F) {
  const FinCategory& s = *F.source;
  const FinCategory& t = *F.target;
  std::vector<MorId> img;
  for (std::uint32_t a = 0; a < s.num_objects(); ++a) {
    for (std::uint32_t b = 0; b < s.num_objects(); ++b) {
      auto h = s.hom(ObjId{a}, ObjId{b});
      auto th = t.hom(F(ObjId{a}), F(ObjId{b}));
      if (h.size() != th.size()) return false;
      img.clear();
      for (MorId m : h) img.push_back(F(m));
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
    }
  }
  return true;
}

bool is_essentially_surjective(const Functor& F) {
  const FinCategory& t = *F.target;
  std::vector<char> reached(t.num_objects(), 0);
  for (ObjId y : F.obj) reached[y.v] = 1;
  for (std::uint32_t y = 0; y < t.num_objects(); ++y) {
    if (reached[y]) continue;
    bool found = false;
    for (std::uint32_t x = 0; x < t.num_objects() && !found; ++x) {
      if (!reached[x]) continue;
      for (MorId m : t.hom(ObjId{x}, ObjId{y})) {
        if (t.is_iso(m)) {
          found = true;
          break;
        }
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_equivalence(const Functor& f) {
  return !functor_violation(f) && is_fully_faithful(f) && is_essentially_surjective(f);
}

bool functors_equal(const Functor& a, const Functor& b) {
  return a.source.get() == b.source.get() && a.target.get() == b.target.get() &&
         a.obj == b.obj && a.mor == b.mor;
}

std::optional<std::string> naturality_violation(const NatTrans& t) {
  const FinCategory& s = *t.from.source;
  const FinCategory& d = *t.from.target;
  if (t.component.size() != s.num_objects()) return "component family is not total";
  for (std::uint32_t x = 0; x < s.num_objects(); ++x) {
    MorId c = t.component[x];
    if (d.src(c) != t.from(ObjId{x}) || d.tgt(c) != t.to(ObjId{x})) {
      return "component at " + s.name(ObjId{x}) + " has wrong endpoints";
    }
  }
  for (std::uint32_t i = 0; i < s.num_morphisms(); ++i) {
    MorId f{i};
    MorId lhs = d.compose(t.to(f), t.component[s.src(f).v]);
    MorId rhs = d.compose(t.component[s.tgt(f).v], t.from(f));
    if (lhs != rhs) return "naturality square at " + s.name(f) + " does not commute";
  }
  return std::nullopt;
}

bool is_natural(const NatTrans& t) { return !naturality_violation(t); }

bool natural_iso(const NatTrans& t) {
  if (!is_natural(t)) return false;
  for (MorId c : t.component) {
    if (!t.from.target->is_iso(c)) return false;
  }
  return true;
}

}  // namespace fibcat
