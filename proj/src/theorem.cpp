#include "fibcat/theorem.hpp"

#include <utility>

#include "fibcat/errors.hpp"
#include "fibcat/limits.hpp"
#include "fibcat/moens.hpp"

namespace fibcat {
namespace {

struct Mismatch {
  std::string what;
};

PredicateVerdict flag(std::string name, bool holds, const std::string& why) {
  if (holds) return pass(std::move(name));
  return refute(std::move(name), {why, {}, {}});
}

PredicateVerdict named(std::string name, PredicateVerdict v) {
  v.name = std::move(name);
  return v;
}

// Unique arrow of E out of `from` with the given composites along two legs.
MorId mediator(const FinCategory& E, ObjId from, const Cone& into, MorId left, MorId right) {
  std::optional<MorId> found;
  for (MorId m : E.hom(from, into.apex)) {
    if (E.compose(into.left, m) != left || E.compose(into.right, m) != right) continue;
    if (found) throw Mismatch{"two mediators into " + E.name(into.apex)};
    found = m;
  }
  if (!found) throw Mismatch{"no mediator into " + E.name(into.apex)};
  return *found;
}

void finish(RoundTripReport& r) {
  r.verdict = reverify(r);
  if (!r.verdict && r.failure.empty()) r.failure = "evidence does not re-verify";
  for (const PredicateVerdict& v : r.checks) {
    if (v.holds) continue;
    r.verdict = false;
    if (r.failure.empty()) r.failure = v.name + ": " + v.witness->description;
  }
}

template <class Body>
void guarded(RoundTripReport& r, Body body) {
  try {
    body();
  } catch (const Mismatch& m) {
    r.failure = m.what;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kMissingPullback || e.kind() == ErrorKind::kSizeGuard) throw;
    r.failure = e.what();
  }
  if (!r.failure.empty()) {
    r.verdict = false;
    return;
  }
  finish(r);
}

void require_theorem_mode(const Fibration& p, TheoremMode mode) {
  if (!is_lex_category(p.base())) fail(ErrorKind::kNotLex, "base is not lex");
  if (mode == TheoremMode::kMoens) {
    if (!is_moens(p).holds) fail(ErrorKind::kNotMoens, "fibration is not Moens");
  } else if (!is_generalized_moens(p).holds) {
    fail(ErrorKind::kNotGenMoens, "fibration is not generalized Moens");
  }
}

}  // namespace

bool reverify(const RoundTripReport& r) {
  for (const WitnessFunctor& w : r.witness_functors) {
    if (functor_violation(w.functor)) return false;
    if (w.equivalence && !is_equivalence(w.functor)) return false;
  }
  for (const NamedNatTrans& t : r.natural_isos) {
    if (!natural_iso(t.trans)) return false;
  }
  return true;
}

Functor phi(const Fibration& p, TheoremMode mode) {
  require_theorem_mode(p, mode);
  return omega_prime_functor(p, terminal_section(p));
}

Gluing psi(const Functor& F, TheoremMode mode) {
  validate_functor(F);
  if (!is_lex_category(*F.source) || !is_lex_category(*F.target)) {
    fail(ErrorKind::kNotLex, "source or target is not lex");
  }
  if (mode == TheoremMode::kMoens) {
    if (!is_lex_functor(F)) fail(ErrorKind::kNotLex, "functor is not lex");
  } else if (!preserves_terminal(F)) {
    fail(ErrorKind::kNotTerminalPreserving, "functor does not preserve the terminal object");
  }
  return artin_gluing(F);
}

RoundTripReport roundtrip_psi_phi(const Fibration& p, TheoremMode mode) {
  RoundTripReport r;
  r.direction = RoundTripDirection::kPsiPhi;
  r.mode = mode;
  Functor wp = phi(p, mode);
  r.witness_functors.push_back({"phi", wp, false});
  if (mode == TheoremMode::kMoens) {
    r.checks.push_back(flag("phi-lex", is_lex_functor(wp), "ω' is not lex"));
  } else {
    r.checks.push_back(flag("phi-terminal", preserves_terminal(wp), "ω' misses the terminal"));
  }
  guarded(r, [&] {
    const TerminalSection t = terminal_section(p);
    const Gluing g = artin_gluing(wp);
    const CommaCategory& c = g.comma;
    const FinCategory& E = p.total();
    const FinCategory& B = p.base();
    const MorId idz = B.id(t.z);
    const std::uint32_t ne = E.num_objects();

    // κ_e = (!_b)_! e and !^b_e : e → ζ_b
    std::vector<MorId> kappa, to_zeta;
    for (std::uint32_t e = 0; e < ne; ++e) {
      ObjId eo{e};
      ObjId b = p.over(eo);
      kappa.push_back(p.push(t.bang[b.v], eo));
      auto h = p.fiber(b).cat->hom(p.local(eo), p.local(t.zeta[b.v]));
      if (h.size() != 1) throw Mismatch{"fiber terminal map is not unique"};
      to_zeta.push_back(p.global(b, h[0]));
    }

    Functor fwd{p.total_ptr(), c.cat, {}, {}};
    for (std::uint32_t e = 0; e < ne; ++e) {
      ObjId b = p.over(ObjId{e});
      MorId mu = fill_cocart(p, kappa[e], E.compose(t.zeta_lift[b.v], to_zeta[e]), idz);
      fwd.obj.push_back(comma_object(c, p.local(E.tgt(kappa[e])), b, p.local(mu)));
    }
    for (std::uint32_t f = 0; f < E.num_morphisms(); ++f) {
      MorId fm{f};
      ObjId s = E.src(fm), d = E.tgt(fm);
      MorId a = p.local(fill_cocart(p, kappa[s.v], E.compose(kappa[d.v], fm), idz));
      fwd.mor.push_back(comma_morphism(c, fwd(s), fwd(d), a, p.over(fm)));
    }

    // ψ(c, b, f) = ζ_b ×_{ω'(b)} c, taken with apex over b and vertical ζ-leg
    const CatPtr& G = c.cat;
    std::vector<Cone> pb;
    Functor back{G, p.total_ptr(), {}, {}};
    for (std::uint32_t x = 0; x < G->num_objects(); ++x) {
      ObjId b = c.proj_right.obj[x];
      Cospan k{t.zeta_lift[b.v], p.global(t.z, c.structure[x])};
      ConeSpace space(E, k);
      auto cone = space.first_universal(
          [&](const Cone& y) { return p.over(y.apex) == b && p.in_fiber(y.left); });
      if (!cone) fail(ErrorKind::kMissingPullback, "no pullback of ν_" + B.name(b) + " over " + B.name(b));
      pb.push_back(*cone);
      back.obj.push_back(cone->apex);
    }
    for (std::uint32_t m = 0; m < G->num_morphisms(); ++m) {
      MorId mm{m};
      std::uint32_t s = G->src(mm).v, d = G->tgt(mm).v;
      MorId beta = c.proj_right.mor[m];
      MorId h = E.compose(p.global(t.z, c.proj_left.mor[m]), pb[s].right);
      std::optional<MorId> found;
      for (MorId k : E.hom(pb[s].apex, pb[d].apex)) {
        if (p.over(k) != beta || E.compose(pb[d].right, k) != h) continue;
        if (found) throw Mismatch{"ψ is ambiguous on " + G->name(mm)};
        found = k;
      }
      if (!found) throw Mismatch{"ψ is undefined on " + G->name(mm)};
      back.mor.push_back(*found);
    }

    r.witness_functors.push_back({"phi-total", fwd, true});
    r.witness_functors.push_back({"psi-total", back, true});

    NatTrans unit{identity_functor(p.total_ptr()), compose(back, fwd), {}};
    for (std::uint32_t e = 0; e < ne; ++e) {
      unit.component.push_back(mediator(E, ObjId{e}, pb[fwd.obj[e].v], to_zeta[e], kappa[e]));
    }
    NatTrans counit{compose(fwd, back), identity_functor(G), {}};
    for (std::uint32_t x = 0; x < G->num_objects(); ++x) {
      ObjId a = pb[x].apex;
      MorId al = p.local(fill_cocart(p, kappa[a.v], pb[x].right, idz));
      counit.component.push_back(comma_morphism(c, fwd(a), ObjId{x}, al, B.id(c.proj_right.obj[x])));
    }

    bool vertical = true;
    for (MorId m : unit.component) vertical = vertical && p.in_fiber(m);
    for (MorId m : counit.component) vertical = vertical && g.fib.in_fiber(m);

    r.checks.push_back(flag("phi-fibered", functors_equal(compose(g.fib.proj(), fwd), p.proj()),
                            "π_gl φ differs from π"));
    r.checks.push_back(flag("psi-fibered", functors_equal(compose(p.proj(), back), g.fib.proj()),
                            "π ψ differs from π_gl"));
    r.checks.push_back(flag("vertical-components", vertical, "a comparison component is not vertical"));
    r.checks.push_back(named("phi-cartesian", is_cartesian_functor(p, g.fib, fwd)));
    r.checks.push_back(named("phi-cocartesian", is_cocartesian_functor(p, g.fib, fwd)));
    r.checks.push_back(named("psi-cartesian", is_cartesian_functor(g.fib, p, back)));
    r.checks.push_back(named("psi-cocartesian", is_cocartesian_functor(g.fib, p, back)));

    r.natural_isos.push_back({"id-to-psi-phi", std::move(unit)});
    r.natural_isos.push_back({"phi-psi-to-id", std::move(counit)});
  });
  return r;
}

RoundTripReport roundtrip_phi_psi(const Functor& F, TheoremMode mode) {
  RoundTripReport r;
  r.direction = RoundTripDirection::kPhiPsi;
  r.mode = mode;
  Gluing g = psi(F, mode);
  if (mode == TheoremMode::kMoens) {
    r.checks.push_back(named("psi-moens", is_moens(g.fib)));
  } else {
    r.checks.push_back(named("psi-generalized-moens", is_generalized_moens(g.fib)));
  }
  if (!r.checks.back().holds) {
    r.failure = r.checks.back().name + ": " + r.checks.back().witness->description;
    return r;
  }
  guarded(r, [&] {
    Functor wp = phi(g.fib, mode);
    const TerminalSection t = terminal_section(g.fib);
    const Fiber& fz = g.fib.fiber(t.z);
    const CommaCategory& c = g.comma;
    const FinCategory& B = *F.source;
    const FinCategory& C = *F.target;
    const MorId idz = B.id(t.z);
    const ObjId y = F(t.z);

    // P z ≅ C by the domain projection and c ↦ (c, !_c)
    Functor dom{fz.cat, F.target, {}, {}};
    for (ObjId x : fz.obj_incl) dom.obj.push_back(c.proj_left(x));
    for (MorId m : fz.mor_incl) dom.mor.push_back(c.proj_left(m));
    Functor sec{F.target, fz.cat, {}, {}};
    for (std::uint32_t k = 0; k < C.num_objects(); ++k) {
      ObjId ko{k};
      sec.obj.push_back(g.fib.local(comma_object(c, ko, t.z, bang(C, ko, y))));
    }
    for (std::uint32_t k = 0; k < C.num_morphisms(); ++k) {
      MorId km{k};
      ObjId s = g.fib.global(t.z, sec(C.src(km))), d = g.fib.global(t.z, sec(C.tgt(km)));
      sec.mor.push_back(g.fib.local(comma_morphism(c, s, d, km, idz)));
    }
    NatTrans unit{identity_functor(fz.cat), compose(sec, dom), {}};
    for (std::uint32_t x = 0; x < fz.cat->num_objects(); ++x) {
      ObjId xo{x};
      MorId m = comma_morphism(c, fz.obj_incl[x], g.fib.global(t.z, sec(dom(xo))), C.id(dom(xo)), idz);
      unit.component.push_back(g.fib.local(m));
    }

    // θ_b : D ω'(b) → F b through ζ_b = (c, b, s) and ν_b = [n, !_b]
    Functor read = compose(dom, wp);
    NatTrans theta{read, F, {}};
    bool projection = true;
    for (std::uint32_t b = 0; b < B.num_objects(); ++b) {
      auto inv = C.inverse(c.proj_left(t.zeta_lift[b]));
      if (!inv) throw Mismatch{"ν_" + B.name(ObjId{b}) + " has a non-invertible first component"};
      MorId th = C.compose(c.structure[t.zeta[b].v], *inv);
      theta.component.push_back(th);
      // ω'(b) ≅ (F b, z, F(!_b))
      ObjId target = comma_object(c, F(ObjId{b}), t.z, F(t.bang[b]));
      std::optional<MorId> m;
      for (MorId k : c.cat->hom(t.omega_prime[b], target)) {
        if (c.proj_left(k) == th && c.proj_right(k) == idz) m = k;
      }
      projection = projection && m && c.cat->is_iso(*m);
    }

    r.witness_functors.push_back({"phi", wp, false});
    r.witness_functors.push_back({"fiber-to-base", dom, true});
    r.witness_functors.push_back({"base-to-fiber", sec, true});
    r.witness_functors.push_back({"phi-in-base", read, false});
    r.checks.push_back(flag("section-retraction", functors_equal(compose(dom, sec), identity_functor(F.target)),
                            "D S differs from the identity"));
    r.checks.push_back(flag("omega-prime-terminal-projection", projection,
                            "ω'(b) is not isomorphic to (F b, z, F(!_b))"));
    r.natural_isos.push_back({"fiber-section", std::move(unit)});
    r.natural_isos.push_back({"phi-psi-to-F", std::move(theta)});
  });
  return r;
}

}  // namespace fibcat
