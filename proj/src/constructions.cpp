#include "fibcat/constructions.hpp"

#include <unordered_map>

#include "keys.hpp"

namespace fibcat {

MorId ArrowCategory::square(MorId f, MorId g, MorId alpha, MorId beta) const {
  for (MorId s : cat->hom(object(f), object(g))) {
    if (top[s.v] == alpha && bottom[s.v] == beta) return s;
  }
  fail(ErrorKind::kUnknownMorphism, "no such square");
}

ArrowCategory arrow_category(const CatPtr& bp, const SizeGuard& guard) {
  const FinCategory& B = *bp;
  CategoryBuilder b;
  std::vector<MorId> arrow;
  for (std::uint32_t f = 0; f < B.num_morphisms(); ++f) {
    b.add_object(B.name(MorId{f}));
    arrow.push_back(MorId{f});
  }
  std::vector<MorId> top, bottom;
  std::unordered_map<detail::Key4, MorId, detail::Key4Hash> index;
  for (MorId f : arrow) {
    for (MorId g : arrow) {
      for (MorId al : B.hom(B.src(f), B.src(g))) {
        MorId ga = B.compose(g, al);
        for (MorId be : B.hom(B.tgt(f), B.tgt(g))) {
          if (B.compose(be, f) != ga) continue;
          MorId m = b.add_morphism("[" + B.name(al) + "," + B.name(be) + "]:" + B.name(f) + "->" +
                                       B.name(g),
                                   ObjId{f.v}, ObjId{g.v});
          guard.check(b.num_morphisms(), "arrow category");
          top.push_back(al);
          bottom.push_back(be);
          index.emplace(detail::Key4{f.v, g.v, al.v, be.v}, m);
          if (f == g && B.is_identity(al) && B.is_identity(be)) b.set_identity(ObjId{f.v}, m);
        }
      }
    }
  }
  auto cat = b.build(
      [&](MorId g, MorId f) {
        return index.at(detail::Key4{b.src(f).v, b.tgt(g).v, B.compose(top[g.v], top[f.v]).v,
                                     B.compose(bottom[g.v], bottom[f.v]).v});
      },
      Laws::kTrust);
  Functor dom{cat, bp, {}, top}, cod{cat, bp, {}, bottom};
  for (MorId f : arrow) {
    dom.obj.push_back(B.src(f));
    cod.obj.push_back(B.tgt(f));
  }
  return {cat, std::move(dom), std::move(cod), std::move(arrow), std::move(top), std::move(bottom)};
}

Fibration codomain_fibration(const CatPtr& b, const SizeGuard& guard) {
  return Fibration(arrow_category(b, guard).cod);
}

Fibration domain_opfibration(const CatPtr& b, const SizeGuard& guard) {
  if (!has_all_pushouts(*b)) fail(ErrorKind::kMissingPushouts, "base lacks pushouts");
  return Fibration(arrow_category(b, guard).dom);
}

MorId domain_pushout_lift(const ArrowCategory& ar, MorId u, MorId f) {
  const FinCategory& B = *ar.dom.target;
  auto po = pushout(B, {f, u});
  if (!po) fail(ErrorKind::kMissingPushouts, "no pushout of " + B.name(f) + " and " + B.name(u));
  // legs: left : tgt f → apex, right : tgt u → apex
  return ar.square(f, po->cone.right, u, po->cone.left);
}

void validate_grothendieck(const GrothendieckData& g) {
  const FinCategory& B = *g.base;
  if (g.fiber_at.size() != B.num_objects() || g.transition.size() != B.num_morphisms()) {
    fail(ErrorKind::kSchema, "grothendieck data has the wrong number of fibers or transitions");
  }
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    MorId um{u};
    const Functor& t = g.transition[u];
    if (t.source.get() != g.fiber_at[B.src(um).v].get() ||
        t.target.get() != g.fiber_at[B.tgt(um).v].get()) {
      fail(ErrorKind::kFunctorialityViolation,
           "transition " + B.name(um) + " has the wrong source or target");
    }
    if (auto v = functor_violation(t)) {
      fail(ErrorKind::kFunctorialityViolation, "transition " + B.name(um) + ": " + *v);
    }
    if (B.is_identity(um) && !functors_equal(t, identity_functor(t.source))) {
      fail(ErrorKind::kFunctorialityViolation, "transition " + B.name(um) + " is not the identity");
    }
  }
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    for (MorId v : B.out(B.tgt(MorId{u}))) {
      MorId vu = B.compose(v, MorId{u});
      if (!functors_equal(g.transition[vu.v], compose(g.transition[v.v], g.transition[u]))) {
        fail(ErrorKind::kFunctorialityViolation,
             "transition of " + B.name(vu) + " differs from the composite of " + B.name(v) +
                 " and " + B.name(MorId{u}));
      }
    }
  }
}

namespace {

struct GrothendieckParts {
  CatPtr cat;
  std::vector<ObjId> ob, ox;
  std::vector<MorId> mb, mx;
};

GrothendieckParts build_grothendieck(const GrothendieckData& g, const SizeGuard& guard) {
  const FinCategory& B = *g.base;
  CategoryBuilder b;
  GrothendieckParts r;
  std::vector<std::vector<ObjId>> obj_at(B.num_objects());
  for (std::uint32_t i = 0; i < B.num_objects(); ++i) {
    const FinCategory& F = *g.fiber_at[i];
    for (std::uint32_t x = 0; x < F.num_objects(); ++x) {
      obj_at[i].push_back(b.add_object(encode_tuple({B.name(ObjId{i}), F.name(ObjId{x})})));
      r.ob.push_back(ObjId{i});
      r.ox.push_back(ObjId{x});
    }
  }
  std::unordered_map<detail::Key3, MorId, detail::Key3Hash> index;
  for (std::uint32_t s = 0; s < r.ob.size(); ++s) {
    for (MorId u : B.out(r.ob[s])) {
      const Functor& t = g.transition[u.v];
      const FinCategory& Fb = *t.target;
      ObjId tx = t(r.ox[s]);
      for (MorId phi : Fb.out(tx)) {
        ObjId d = obj_at[B.tgt(u).v][Fb.tgt(phi).v];
        MorId m = b.add_morphism(
            "[" + B.name(u) + "," + Fb.name(phi) + "]:" + b.name(ObjId{s}) + "->" + b.name(d),
            ObjId{s}, d);
        guard.check(b.num_morphisms(), "grothendieck construction");
        r.mb.push_back(u);
        r.mx.push_back(phi);
        index.emplace(detail::Key3{s, u.v, phi.v}, m);
        if (B.is_identity(u) && Fb.is_identity(phi)) b.set_identity(ObjId{s}, m);
      }
    }
  }
  // (v, ψ) ∘ (u, φ) = (v u, ψ ∘ T(v) φ)
  r.cat = b.build(
      [&](MorId g2, MorId f) {
        MorId v = r.mb[g2.v];
        const Functor& tv = g.transition[v.v];
        MorId psi = tv.target->compose(r.mx[g2.v], tv(r.mx[f.v]));
        return index.at(detail::Key3{b.src(f).v, B.compose(v, r.mb[f.v]).v, psi.v});
      },
      Laws::kTrust);
  return r;
}

Fibration grothendieck_fibration(const GrothendieckParts& r, const CatPtr& base) {
  return Fibration(Functor{r.cat, base, r.ob, r.mb});
}

}  // namespace

Grothendieck grothendieck(const GrothendieckData& g, const SizeGuard& guard) {
  validate_grothendieck(g);
  GrothendieckParts r = build_grothendieck(g, guard);
  Fibration fib = grothendieck_fibration(r, g.base);
  return {g, std::move(fib), std::move(r.ob), std::move(r.ox), std::move(r.mb), std::move(r.mx)};
}

ObjId Grothendieck::object(ObjId b, ObjId x) const {
  for (std::uint32_t i = 0; i < obj_base.size(); ++i) {
    if (obj_base[i] == b && obj_fiber[i] == x) return ObjId{i};
  }
  fail(ErrorKind::kUnknownObject, "no object over the given pair");
}

MorId Grothendieck::morphism(ObjId src, ObjId tgt, MorId u, MorId phi) const {
  for (MorId m : fib.total().hom(src, tgt)) {
    if (mor_base[m.v] == u && mor_fiber[m.v] == phi) return m;
  }
  fail(ErrorKind::kUnknownMorphism, "no morphism with the given components");
}

MorId Grothendieck::cocartesian_lift(MorId u, ObjId e) const {
  const FinCategory& B = *data.base;
  if (obj_base[e.v] != B.src(u)) fail(ErrorKind::kMissingLift, "object not over the source");
  const Functor& t = data.transition[u.v];
  ObjId tx = t(obj_fiber[e.v]);
  return morphism(e, object(B.tgt(u), tx), u, t.target->id(tx));
}

ObjId comma_object(const CommaCategory& c, ObjId a, ObjId b, MorId f) {
  for (std::uint32_t i = 0; i < c.structure.size(); ++i) {
    if (c.proj_left.obj[i] == a && c.proj_right.obj[i] == b && c.structure[i] == f) {
      return ObjId{i};
    }
  }
  fail(ErrorKind::kUnknownObject, "no comma object with the given components");
}

MorId comma_morphism(const CommaCategory& c, ObjId src, ObjId tgt, MorId alpha, MorId beta) {
  for (MorId m : c.cat->hom(src, tgt)) {
    if (c.proj_left(m) == alpha && c.proj_right(m) == beta) return m;
  }
  fail(ErrorKind::kUnknownMorphism, "no comma morphism with the given components");
}

FreeCocartesian free_cocartesian(const Functor& pi, const SizeGuard& guard) {
  validate_functor(pi);
  CommaCategory c = comma(pi, identity_functor(pi.target), guard);
  Fibration fib(c.proj_right);
  return {pi, std::move(c), std::move(fib)};
}

MorId free_cocartesian_cartesian_lift(const FreeCocartesian& l, const Fibration& pi, MorId v,
                                      ObjId x) {
  const FinCategory& B = *l.pi.target;
  const CommaCategory& c = l.comma;
  ObjId e = c.proj_left(x);
  MorId u = c.structure[x.v];
  if (c.proj_right(x) != B.tgt(v)) fail(ErrorKind::kMissingLift, "object not over the target");
  Cone pb = require_pullback(B, {u, v});
  MorId lift = pi.pull(pb.left, e);
  ObjId e1 = pi.total().src(lift);
  ObjId src = comma_object(c, e1, B.src(v), pb.right);
  return comma_morphism(c, src, x, lift, v);
}

Gluing artin_gluing(const Functor& F, const SizeGuard& guard) {
  validate_functor(F);
  CommaCategory c = comma(identity_functor(F.target), F, guard);
  Fibration fib(c.proj_right);
  return {F, std::move(c), std::move(fib)};
}

MorId gluing_cocartesian_lift(const Gluing& g, MorId u, ObjId x) {
  const FinCategory& B = *g.F.source;
  const FinCategory& C = *g.F.target;
  const CommaCategory& c = g.comma;
  if (c.proj_right(x) != B.src(u)) fail(ErrorKind::kMissingLift, "object not over the source");
  ObjId a = c.proj_left(x);
  ObjId y = comma_object(c, a, B.tgt(u), C.compose(g.F(u), c.structure[x.v]));
  return comma_morphism(c, x, y, C.id(a), u);
}

MorId gluing_cartesian_lift(const Gluing& g, MorId u, ObjId x) {
  const FinCategory& B = *g.F.source;
  const FinCategory& C = *g.F.target;
  const CommaCategory& c = g.comma;
  if (c.proj_right(x) != B.tgt(u)) fail(ErrorKind::kMissingLift, "object not over the target");
  Cone pb = require_pullback(C, {c.structure[x.v], g.F(u)});
  ObjId y = comma_object(c, pb.apex, B.src(u), pb.right);
  return comma_morphism(c, y, x, pb.left, u);
}

namespace {

bool connected_by_unique_iso(const Fibration& p, MorId a, MorId b, bool cocart) {
  const FinCategory& E = p.total();
  int n = 0;
  if (cocart) {
    for (MorId i : E.hom(E.tgt(a), E.tgt(b))) {
      n += p.in_fiber(i) && E.compose(i, a) == b && E.is_iso(i);
    }
  } else {
    for (MorId i : E.hom(E.src(b), E.src(a))) {
      n += p.in_fiber(i) && E.compose(a, i) == b && E.is_iso(i);
    }
  }
  return n == 1;
}

}  // namespace

PredicateVerdict verify_gluing_lift_formulas(const Gluing& g) {
  const std::string name = "gluing-lift-formulas";
  if (!is_lex_category(*g.F.target)) fail(ErrorKind::kNotLex, "codomain of F is not lex");
  const Fibration& p = g.fib;
  const FinCategory& B = p.base();
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    MorId um{u};
    for (ObjId x : p.fiber(B.src(um)).obj_incl) {
      MorId f = gluing_cocartesian_lift(g, um, x);
      if (!check_cocartesian(p.proj(), f)) {
        return refute(name, {"closed-form cocartesian lift is not cocartesian", {{"lift", f}}, {{"u", um}}});
      }
      for (MorId other : p.cocartesian_lifts(um, x)) {
        if (!connected_by_unique_iso(p, f, other, true)) {
          return refute(name, {"cocartesian lifts not related by a unique vertical iso",
                               {{"lift", f}, {"other", other}}, {{"u", um}}});
        }
      }
    }
    for (ObjId x : p.fiber(B.tgt(um)).obj_incl) {
      MorId f = gluing_cartesian_lift(g, um, x);
      if (!check_cartesian(p.proj(), f)) {
        return refute(name, {"closed-form cartesian lift is not cartesian", {{"lift", f}}, {{"u", um}}});
      }
      for (MorId other : p.cartesian_lifts(um, x)) {
        if (!connected_by_unique_iso(p, f, other, false)) {
          return refute(name, {"cartesian lifts not related by a unique vertical iso",
                               {{"lift", f}, {"other", other}}, {{"u", um}}});
        }
      }
    }
  }
  return pass(name);
}

}  // namespace fibcat
