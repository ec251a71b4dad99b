#include "fibcat/moens.hpp"

#include <algorithm>

#include "fibcat/errors.hpp"

namespace fibcat {

namespace {

Witness square_witness(std::string what, const Square& s) {
  return {std::move(what),
          {{"top", s.top}, {"left", s.left}, {"right", s.right}, {"bottom", s.bottom}},
          {}};
}

Square base_square(const Fibration& p, const Square& s) {
  return {p.over(s.top), p.over(s.left), p.over(s.right), p.over(s.bottom)};
}

bool over_pullback(const Fibration& p, const Square& s) {
  return is_pullback(p.base(), base_square(p, s));
}

void require_bicartesian(const Fibration& p) {
  if (!p.is_bicartesian()) fail(ErrorKind::kNotBicartesian, "fibration is not bicartesian");
}

// Calls fn(square, universal) for every commuting square over a cospan
// (bottom, right) accepted by the filters.
template <class Bottom, class Right, class Fn>
void for_each_square(const FinCategory& E, Bottom bottom_ok, Right right_ok, Fn fn) {
  for (std::uint32_t c = 0; c < E.num_objects(); ++c) {
    auto in = E.in(ObjId{c});
    for (MorId bottom : in) {
      if (!bottom_ok(bottom)) continue;
      for (MorId right : in) {
        if (!right_ok(right)) continue;
        ConeSpace space(E, {bottom, right});
        for (const Cone& x : space.cones()) {
          if (!fn(Square{x.right, x.left, right, bottom}, space, x)) return;
        }
      }
    }
  }
}

// Composite verdicts keep the failing component's name in the description.
PredicateVerdict relabel(std::string name, PredicateVerdict v) {
  if (!v.holds) v.witness->description = v.name + ": " + v.witness->description;
  v.name = std::move(name);
  return v;
}

MorId pullback_mediator(const FinCategory& E, Cospan k, const Cone& into, const Cone& from) {
  ConeSpace space(E, k);
  auto m = space.mediator(from, into);
  if (!m) fail(ErrorKind::kMissingPullback, "no mediator into the chosen pullback");
  return *m;
}

}  // namespace

PredicateVerdict satisfies_bcc(const Fibration& p) {
  require_bicartesian(p);
  const FinCategory& E = p.total();
  std::optional<Witness> w;
  for_each_square(
      E, [&](MorId f) { return p.is_cocartesian(f); }, [&](MorId g) { return p.is_cartesian(g); },
      [&](const Square& s, const ConeSpace&, const Cone&) {
        if (!p.is_cartesian(s.left) || p.is_cocartesian(s.top) || !over_pullback(p, s)) return true;
        w = square_witness("top of a square over a pullback is not cocartesian", s);
        return false;
      });
  if (w) return refute("bcc", *w);
  return pass("bcc");
}

PredicateVerdict satisfies_dual_bcc(const Fibration& p) {
  require_bicartesian(p);
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId f{i};
    if (!p.is_cocartesian(f)) continue;
    for (MorId g1 : E.in(E.src(f))) {
      if (!p.is_cartesian(g1)) continue;
      MorId fg1 = E.compose(f, g1);
      for (MorId f1 : E.out(E.src(g1))) {
        if (!p.is_cocartesian(f1)) continue;
        for (MorId g : E.hom(E.tgt(f1), E.tgt(f))) {
          if (E.compose(g, f1) != fg1 || p.is_cartesian(g)) continue;
          Square s{f1, g1, g, f};
          if (!over_pullback(p, s)) continue;
          return refute("dual-bcc", square_witness("right side of a square over a pullback is not cartesian", s));
        }
      }
    }
  }
  return pass("dual-bcc");
}

PredicateVerdict bcc_via_transport(const Fibration& p) {
  const std::string name = "bcc-transport";
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  if (!p.is_cartesian_fibration()) fail(ErrorKind::kNotCartesian, "fibration is not cartesian");
  if (!has_all_pullbacks(B)) fail(ErrorKind::kMissingPullback, "base lacks pullbacks");
  FreeCocartesian l = free_cocartesian(p.proj());
  const CommaCategory& c = l.comma;
  const FinCategory& L = *c.cat;

  Functor tau{c.cat, p.total_ptr(), {}, {}};
  for (std::uint32_t x = 0; x < L.num_objects(); ++x) {
    tau.obj.push_back(E.tgt(p.push(c.structure[x], c.proj_left.obj[x])));
  }
  for (std::uint32_t m = 0; m < L.num_morphisms(); ++m) {
    MorId mm{m};
    ObjId s = L.src(mm), t = L.tgt(mm);
    MorId cs = p.push(c.structure[s.v], c.proj_left(s));
    MorId ct = p.push(c.structure[t.v], c.proj_left(t));
    tau.mor.push_back(fill_cocart(p, cs, E.compose(ct, c.proj_left(mm)), c.proj_right(mm)));
  }
  if (auto v = functor_violation(tau)) return refute(name, {"τ is not a functor: " + *v, {}, {}});

  std::vector<ObjId> iota(E.num_objects());
  for (std::uint32_t e = 0; e < E.num_objects(); ++e) {
    ObjId eo{e};
    iota[e] = comma_object(c, eo, p.over(eo), B.id(p.over(eo)));
  }
  auto iota_mor = [&](MorId f) {
    return comma_morphism(c, iota[E.src(f).v], iota[E.tgt(f).v], f, p.over(f));
  };
  // universal arrows (e, b, u) → ι τ (e, b, u)
  for (std::uint32_t x = 0; x < L.num_objects(); ++x) {
    ObjId xo{x};
    ObjId b = c.proj_right(xo);
    MorId cx = p.push(c.structure[x], c.proj_left(xo));
    MorId eta = comma_morphism(c, xo, iota[tau(xo).v], cx, B.id(b));
    for (std::uint32_t y = 0; y < E.num_objects(); ++y) {
      for (MorId m : L.hom(xo, iota[y])) {
        int n = 0;
        for (MorId k : E.hom(tau(xo), ObjId{y})) n += L.compose(iota_mor(k), eta) == m;
        if (n != 1) {
          return refute(name, {"unit of τ ⊣ ι is not universal", {{"lift", cx}}, {{"over", c.proj_right(m)}}});
        }
      }
    }
  }
  for (std::uint32_t m = 0; m < L.num_morphisms(); ++m) {
    MorId mm{m};
    if (l.fib.is_cartesian(mm) && !p.is_cartesian(tau(mm))) {
      return refute(name, {"τ sends a cartesian arrow to a non-cartesian arrow",
                           {{"image", tau(mm)}},
                           {{"over", c.proj_right(mm)}}});
    }
  }
  return pass(name);
}

namespace {

PredicateVerdict stable_sums_impl(const Fibration& p, bool vertical_only, const std::string& name) {
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId f{i};
    if (!p.is_cocartesian(f)) continue;
    for (MorId g : E.in(E.tgt(f))) {
      if (vertical_only && !p.is_vertical(g)) continue;
      Cone x = require_pullback(E, {f, g});
      if (!p.is_cocartesian(x.right)) {
        return refute(name, square_witness("pullback of a cocartesian arrow is not cocartesian",
                                           {x.right, x.left, g, f}));
      }
    }
  }
  return pass(name);
}

}  // namespace

PredicateVerdict has_stable_sums(const Fibration& p) {
  return stable_sums_impl(p, false, "stable-sums");
}

PredicateVerdict has_vertically_stable_sums(const Fibration& p) {
  return stable_sums_impl(p, true, "vertically-stable-sums");
}

PredicateVerdict has_disjoint_sums(const Fibration& p) {
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId f{i};
    if (!p.is_cocartesian(f)) continue;
    Cone x = require_pullback(E, {f, f});
    ObjId d = E.src(f);
    MorId delta = pullback_mediator(E, {f, f}, x, {d, E.id(d), E.id(d)});
    if (!p.is_cocartesian(delta)) {
      return refute("disjoint-sums", {"diagonal of a cocartesian arrow is not cocartesian",
                                      {{"f", f}, {"delta", delta}, {"left", x.left}, {"right", x.right}},
                                      {}});
    }
  }
  return pass("disjoint-sums");
}

bool CharacterizationReport::agree() const { return all_hold() || none_hold(); }

bool CharacterizationReport::all_hold() const {
  return std::all_of(items.begin(), items.end(), [](const PredicateVerdict& v) { return v.holds; });
}

bool CharacterizationReport::none_hold() const {
  return std::none_of(items.begin(), items.end(), [](const PredicateVerdict& v) { return v.holds; });
}

PredicateVerdict left_cancellation(const Fibration& p) {
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId g{i};
    if (!p.is_cocartesian(g)) continue;
    for (MorId f : E.in(E.src(g))) {
      if (p.is_cocartesian(E.compose(g, f)) && !p.is_cocartesian(f)) {
        return refute("left-cancellation",
                      {"g and g∘f are cocartesian but f is not", {{"f", f}, {"g", g}}, {}});
      }
    }
  }
  return pass("left-cancellation");
}

PredicateVerdict conservative_transport(const Fibration& p) {
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId k{i};
    if (!p.is_vertical(k) || E.is_iso(k)) continue;
    for (MorId f : E.out(E.tgt(k))) {
      if (p.is_cocartesian(f) && p.is_cocartesian(E.compose(f, k))) {
        return refute("conservative-transport",
                      {"vertical non-iso k with f and f∘k cocartesian", {{"k", k}, {"f", f}}, {}});
      }
    }
  }
  return pass("conservative-transport");
}

namespace {

PredicateVerdict vertical_cocart_squares_impl(const Fibration& p, const std::string& name) {
  std::optional<Witness> w;
  for_each_square(
      p.total(), [&](MorId g) { return p.is_cocartesian(g); },
      [&](MorId k) { return p.is_vertical(k); },
      [&](const Square& s, const ConeSpace& space, const Cone& x) {
        if (!p.is_vertical(s.left) || !p.is_cocartesian(s.top) || space.is_universal(x)) return true;
        w = square_witness("square with vertical sides and cocartesian top and bottom is not a pullback", s);
        return false;
      });
  if (w) return refute(name, *w);
  return pass(name);
}

void require_mode(const Fibration& p, HypothesisMode mode, ErrorKind kind, bool full_ok) {
  if (mode == HypothesisMode::kFull) {
    if (!full_ok) fail(kind, "hypotheses of the characterization fail");
    return;
  }
  if (!is_lex_bicartesian(p).holds) fail(kind, "fibration is not lex bicartesian");
  if (!has_vertically_stable_sums(p).holds) {
    fail(kind, "cocartesian arrows are not stable along vertical arrows");
  }
}

}  // namespace

PredicateVerdict vertical_cocartesian_squares(const Fibration& p) {
  return vertical_cocart_squares_impl(p, "vertical-cocartesian-squares");
}

CharacterizationReport disjointness_characterizations(const Fibration& p, HypothesisMode mode) {
  if (mode == HypothesisMode::kFull) {
    require_mode(p, mode, ErrorKind::kNotPreMoens, is_pre_moens(p).holds);
  } else {
    require_mode(p, mode, ErrorKind::kNotPreMoens, false);
  }
  CharacterizationReport r;
  PredicateVerdict i = has_stable_sums(p);
  if (i.holds) i = has_disjoint_sums(p);
  r.items.push_back(relabel("stable-disjoint-sums", i));
  r.items.push_back(left_cancellation(p));
  r.items.push_back(conservative_transport(p));
  r.items.push_back(vertical_cocartesian_squares(p));
  return r;
}

PredicateVerdict internal_extensivity(const Fibration& p) {
  std::optional<Witness> w;
  for_each_square(
      p.total(), [&](MorId g) { return p.is_cocartesian(g); },
      [&](MorId k) { return p.is_vertical(k); },
      [&](const Square& s, const ConeSpace& space, const Cone& x) {
        if (!p.is_vertical(s.left)) return true;
        bool pb = space.is_universal(x);
        if (pb == p.is_cocartesian(s.top)) return true;
        w = square_witness(pb ? "pullback square with non-cocartesian top"
                              : "cocartesian top but the square is not a pullback",
                           s);
        return false;
      });
  if (w) return refute("internal-extensivity", *w);
  return pass("internal-extensivity");
}

TerminalSection terminal_section(const Fibration& p) {
  const FinCategory& B = p.base();
  auto z = terminal_object(B);
  if (!z) fail(ErrorKind::kNoTerminal, "base has no terminal object");
  TerminalSection t;
  t.z = *z;
  for (std::uint32_t b = 0; b < B.num_objects(); ++b) {
    ObjId bo{b};
    auto zb = terminal_object(*p.fiber(bo).cat);
    if (!zb) fail(ErrorKind::kNoTerminal, "fiber over " + B.name(bo) + " has no terminal object");
    t.bang.push_back(bang(B, bo, *z));
    t.zeta.push_back(p.global(bo, *zb));
    t.zeta_lift.push_back(p.push(t.bang.back(), t.zeta.back()));
    t.omega_prime.push_back(p.total().tgt(t.zeta_lift.back()));
  }
  return t;
}

Functor omega_functor(const Fibration& p, const TerminalSection& t) {
  const FinCategory& E = p.total();
  const Fiber& fz = p.fiber(t.z);
  Functor w{p.total_ptr(), fz.cat, {}, {}};
  for (std::uint32_t e = 0; e < E.num_objects(); ++e) {
    ObjId eo{e};
    w.obj.push_back(p.local(E.tgt(p.push(t.bang[p.over(eo).v], eo))));
  }
  for (std::uint32_t f = 0; f < E.num_morphisms(); ++f) {
    MorId fm{f};
    ObjId s = E.src(fm), d = E.tgt(fm);
    MorId cs = p.push(t.bang[p.over(s).v], s);
    MorId cd = p.push(t.bang[p.over(d).v], d);
    w.mor.push_back(p.local(fill_cocart(p, cs, E.compose(cd, fm), p.base().id(t.z))));
  }
  return w;
}

Functor omega_prime_functor(const Fibration& p, const TerminalSection& t) {
  const FinCategory& B = p.base();
  const FinCategory& E = p.total();
  const Fiber& fz = p.fiber(t.z);
  Functor w{p.base_ptr(), fz.cat, {}, {}};
  for (std::uint32_t b = 0; b < B.num_objects(); ++b) w.obj.push_back(p.local(t.omega_prime[b]));
  // ω'(u) = ω(ζ(u)) where ζ(u) : ζ_a → ζ_b is the unique arrow over u
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    MorId um{u};
    ObjId a = B.src(um), b = B.tgt(um);
    std::optional<MorId> zu;
    for (MorId f : E.hom(t.zeta[a.v], t.zeta[b.v])) {
      if (p.over(f) == um) zu = f;
    }
    if (!zu) fail(ErrorKind::kMissingLift, "no arrow between fiber terminals over " + B.name(um));
    MorId h = E.compose(t.zeta_lift[b.v], *zu);
    w.mor.push_back(p.local(fill_cocart(p, t.zeta_lift[a.v], h, B.id(t.z))));
  }
  return w;
}

PredicateVerdict lawvere_extensivity(const Fibration& p) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  TerminalSection t = terminal_section(p);
  for (std::uint32_t a = 0; a < B.num_objects(); ++a) {
    MorId ca = t.zeta_lift[a];
    for (MorId k : E.in(t.omega_prime[a])) {
      if (!p.is_vertical(k)) continue;
      ConeSpace space(E, {ca, k});
      for (const Cone& x : space.cones()) {
        if (!p.is_vertical(x.left)) continue;
        bool pb = space.is_universal(x);
        if (pb == p.is_cocartesian(x.right)) continue;
        return refute("lawvere-extensivity",
                      square_witness(pb ? "pullback square with non-cocartesian top"
                                        : "cocartesian top but the square is not a pullback",
                                     {x.right, x.left, k, ca}));
      }
    }
  }
  return pass("lawvere-extensivity");
}

PredicateVerdict transport_extensivity(const Fibration& p) {
  const std::string name = "transport-extensivity";
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  TerminalSection t = terminal_section(p);
  for (std::uint32_t a = 0; a < B.num_objects(); ++a) {
    ObjId ao{a};
    Functor push = transport_pushforward(p, t.bang[a]);
    const Fiber& fa = p.fiber(ao);
    for (std::uint32_t m = 0; m < fa.cat->num_morphisms(); ++m) {
      MorId mm{m};
      if (!fa.cat->is_iso(mm) && push.target->is_iso(push(mm))) {
        return refute(name, {"transport reflects no isomorphism here", {{"m", fa.mor_incl[m]}},
                             {{"u", t.bang[a]}}});
      }
    }
    MorId ca = t.zeta_lift[a];
    for (MorId k : E.in(t.omega_prime[a])) {
      if (!p.is_vertical(k)) continue;
      Cone x = require_pullback(E, {ca, k});
      if (!p.is_cocartesian(x.right)) {
        return refute(name, square_witness("pullback of P_!(!_a, ζ_a) along a vertical arrow is not cocartesian",
                                           {x.right, x.left, k, ca}));
      }
    }
  }
  return pass(name);
}

PredicateVerdict is_lex_bicartesian(const Fibration& p) {
  const std::string name = "lex-bicartesian";
  if (!is_lex_category(p.base())) return refute(name, {"base is not lex", {}, {}});
  if (!p.is_bicartesian()) return refute(name, {"fibration is not bicartesian", {}, {}});
  LexnessReport r = lexness_transfer(p);
  if (!r.lex() || !r.terminal_side_total() || !r.pullback_side_total()) {
    return refute(name, {"fibration is not lex", {}, {}});
  }
  return pass(name);
}

PredicateVerdict is_pre_moens(const Fibration& p) {
  for (auto check : {is_lex_bicartesian, satisfies_bcc, has_stable_sums}) {
    PredicateVerdict v = check(p);
    if (!v.holds) return relabel("pre-moens", v);
  }
  return pass("pre-moens");
}

PredicateVerdict is_moens(const Fibration& p) {
  PredicateVerdict v = is_pre_moens(p);
  if (!v.holds) {
    v.name = "moens";
    return v;
  }
  v = has_disjoint_sums(p);
  if (!v.holds) return relabel("moens", v);
  return pass("moens");
}

PredicateVerdict is_generalized_moens(const Fibration& p) {
  PredicateVerdict v = is_lex_bicartesian(p);
  if (!v.holds) return relabel("generalized-moens", v);
  v = has_vertically_stable_sums(p);
  if (!v.holds) return relabel("generalized-moens", v);
  v = vertical_cocart_squares_impl(p, "vertical-cocartesian-squares");
  if (!v.holds) return relabel("generalized-moens", v);
  return pass("generalized-moens");
}

CharacterizationReport extensivity_characterizations(const Fibration& p, HypothesisMode mode) {
  if (mode == HypothesisMode::kFull) {
    bool bc = is_lex_bicartesian(p).holds && satisfies_bcc(p).holds;
    require_mode(p, mode, ErrorKind::kNotBC, bc);
  } else {
    require_mode(p, mode, ErrorKind::kNotPreMoens, false);
  }
  CharacterizationReport r;
  r.items.push_back(is_moens(p));
  r.items.push_back(internal_extensivity(p));
  r.items.push_back(lawvere_extensivity(p));
  r.items.push_back(transport_extensivity(p));
  return r;
}

PredicateVerdict gap_maps_cocartesian(const Fibration& p) {
  const std::string name = "gap-maps";
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId g{i};
    if (!p.is_cocartesian(g)) continue;
    for (MorId h : E.in(E.tgt(g))) {
      ObjId d = E.src(h);
      Cone x = require_pullback(E, {h, g});
      for (MorId f : E.hom(d, E.src(g))) {
        if (E.compose(g, f) != h) continue;
        MorId k = pullback_mediator(E, {h, g}, x, {d, E.id(d), f});
        if (!p.is_cocartesian(k)) {
          return refute(name, {"gap map into a pullback of a cocartesian arrow is not cocartesian",
                               {{"g", g}, {"h", h}, {"f", f}, {"gap", k}}, {}});
        }
      }
    }
  }
  return pass(name);
}

PredicateVerdict vertical_gap_maps_cocartesian(const Fibration& p) {
  const std::string name = "vertical-gap-maps";
  const FinCategory& E = p.total();
  for (std::uint32_t d = 0; d < E.num_objects(); ++d) {
    auto out = E.out(ObjId{d});
    for (MorId a : out) {
      if (!p.is_cocartesian(a)) continue;
      for (MorId b : out) {
        if (!p.is_cocartesian(b)) continue;
        for (MorId h : E.out(E.tgt(a))) {
          if (!p.is_vertical(h)) continue;
          MorId ha = E.compose(h, a);
          for (MorId h1 : E.hom(E.tgt(b), E.tgt(h))) {
            if (!p.is_vertical(h1) || E.compose(h1, b) != ha) continue;
            Cone x = require_pullback(E, {h1, h});
            MorId gap = pullback_mediator(E, {h1, h}, x, {ObjId{d}, b, a});
            if (!p.is_cocartesian(gap)) {
              return refute(name, {"gap map into a pullback of vertical arrows is not cocartesian",
                                   {{"a", a}, {"b", b}, {"h", h}, {"h'", h1}, {"gap", gap}}, {}});
            }
          }
        }
      }
    }
  }
  return pass(name);
}

PredicateVerdict slice_transport_equivalences(const Fibration& p) {
  const std::string name = "slice-transport";
  const FinCategory& B = p.base();
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    MorId um{u};
    Functor push = transport_pushforward(p, um);
    const Fiber& fa = p.fiber(B.src(um));
    for (std::uint32_t d = 0; d < fa.cat->num_objects(); ++d) {
      ObjId dl{d};
      SliceCategory s = slice(fa.cat, dl);
      SliceCategory t = slice(push.target, push(dl));
      Functor F{s.cat, t.cat, {}, {}};
      for (std::uint32_t i = 0; i < s.cat->num_objects(); ++i) {
        ObjId x = push(s.dom.obj[i]);
        MorId f = push(s.structure[i]);
        for (std::uint32_t j = 0; j < t.cat->num_objects(); ++j) {
          if (t.dom.obj[j] == x && t.structure[j] == f) F.obj.push_back(ObjId{j});
        }
      }
      for (std::uint32_t m = 0; m < s.cat->num_morphisms(); ++m) {
        MorId mm{m};
        MorId img = push(s.dom(mm));
        for (MorId k : t.cat->hom(F(s.cat->src(mm)), F(s.cat->tgt(mm)))) {
          if (t.dom(k) == img) F.mor.push_back(k);
        }
      }
      if (F.obj.size() != s.cat->num_objects() || F.mor.size() != s.cat->num_morphisms() ||
          !is_equivalence(F)) {
        return refute(name, {"u_!↓d is not an equivalence", {{"d", p.total().id(fa.obj_incl[d])}},
                             {{"u", um}}});
      }
    }
  }
  return pass(name);
}

PredicateVerdict transport_preserves_pullbacks(const Fibration& p) {
  const FinCategory& B = p.base();
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    MorId um{u};
    Functor push = transport_pushforward(p, um);
    if (auto k = pullback_preservation_failure(push)) {
      const Fiber& fa = p.fiber(B.src(um));
      return refute("transport-pullbacks",
                    {"u_! does not preserve a fiber pullback",
                     {{"left", fa.mor_incl[k->left.v]}, {"right", fa.mor_incl[k->right.v]}},
                     {{"u", um}}});
    }
  }
  return pass("transport-pullbacks");
}

PredicateVerdict omega_is_lex(const Fibration& p) {
  Functor w = omega_functor(p, terminal_section(p));
  if (!is_lex_functor(w)) return refute("omega-lex", {"ω is not lex", {}, {}});
  return pass("omega-lex");
}

CharacterizationReport moens_consequences(const Fibration& p) {
  if (!is_moens(p).holds) fail(ErrorKind::kNotMoens, "fibration is not Moens");
  CharacterizationReport r;
  r.items.push_back(gap_maps_cocartesian(p));
  r.items.push_back(vertical_gap_maps_cocartesian(p));
  r.items.push_back(slice_transport_equivalences(p));
  r.items.push_back(transport_preserves_pullbacks(p));
  r.items.push_back(omega_is_lex(p));
  return r;
}

PredicateVerdict zawadowski_conditions(const Fibration& p) {
  const std::string name = "zawadowski";
  require_bicartesian(p);
  if (!is_lex_bicartesian(p).holds) fail(ErrorKind::kNotLex, "fibration is not lex");
  PredicateVerdict lex = transport_preserves_pullbacks(p);
  if (!lex.holds) return relabel(name, lex);
  const FinCategory& B = p.base();
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    MorId um{u};
    NatTrans eta = adjunction_unit(p, um);
    NatTrans eps = adjunction_counit(p, um);
    const Fiber& fa = p.fiber(B.src(um));
    const Fiber& fb = p.fiber(B.tgt(um));
    for (std::uint32_t f = 0; f < fa.cat->num_morphisms(); ++f) {
      MorId fm{f};
      Square s{eta.component[fa.cat->src(fm).v], fm, eta.to(fm), eta.component[fa.cat->tgt(fm).v]};
      if (!is_pullback(*fa.cat, s)) {
        return refute(name, square_witness("unit naturality square is not a pullback in the fiber",
                                           {fa.mor_incl[s.top.v], fa.mor_incl[s.left.v],
                                            fa.mor_incl[s.right.v], fa.mor_incl[s.bottom.v]}));
      }
    }
    for (std::uint32_t g = 0; g < fb.cat->num_morphisms(); ++g) {
      MorId gm{g};
      Square s{eps.component[fb.cat->src(gm).v], eps.from(gm), gm, eps.component[fb.cat->tgt(gm).v]};
      if (!is_pullback(*fb.cat, s)) {
        return refute(name, square_witness("counit naturality square is not a pullback in the fiber",
                                           {fb.mor_incl[s.top.v], fb.mor_incl[s.left.v],
                                            fb.mor_incl[s.right.v], fb.mor_incl[s.bottom.v]}));
      }
    }
  }
  return pass(name);
}

bool zawadowski_equiv_gen_moens(const Fibration& p) {
  return zawadowski_conditions(p).holds == is_generalized_moens(p).holds;
}

bool gluing_bcc_iff_pb_preserving(const Functor& F) {
  if (!is_lex_category(*F.source) || !is_lex_category(*F.target)) {
    fail(ErrorKind::kNotLex, "source or target of F is not lex");
  }
  Gluing g = artin_gluing(F);
  return preserves_pullbacks(F) == satisfies_bcc(g.fib).holds;
}

namespace {

MorId arrow(const Witness& w, const std::string& label) {
  for (const auto& [n, m] : w.arrows) {
    if (n == label) return m;
  }
  fail(ErrorKind::kSchema, "witness lacks arrow " + label);
}

bool has_arrow(const Witness& w, const std::string& label) {
  return std::any_of(w.arrows.begin(), w.arrows.end(), [&](const auto& a) { return a.first == label; });
}

Square witness_square(const Witness& w) {
  return {arrow(w, "top"), arrow(w, "left"), arrow(w, "right"), arrow(w, "bottom")};
}

// Composite verdicts prefix the component name to the description.
std::string component_of(const PredicateVerdict& v) {
  const std::string& d = v.witness->description;
  auto colon = d.find(':');
  if (colon == std::string::npos) return v.name;
  return d.substr(0, colon);
}

}  // namespace

bool witness_reverifies(const Fibration& p, const PredicateVerdict& v) {
  if (v.holds || !v.witness) return false;
  const Witness& w = *v.witness;
  const FinCategory& E = p.total();
  auto cocart = [&](MorId f) { return check_cocartesian(p.proj(), f); };
  auto cart = [&](MorId f) { return check_cartesian(p.proj(), f); };
  const std::string c = component_of(v);
  if (c == "lex-bicartesian") return !is_lex_bicartesian(p).holds;
  if (c == "bcc") {
    Square s = witness_square(w);
    return commutes(E, s) && over_pullback(p, s) && cocart(s.bottom) && cart(s.left) &&
           cart(s.right) && !cocart(s.top);
  }
  if (c == "dual-bcc") {
    Square s = witness_square(w);
    return commutes(E, s) && over_pullback(p, s) && cocart(s.bottom) && cocart(s.top) &&
           cart(s.left) && !cart(s.right);
  }
  if (c == "stable-sums" || c == "vertically-stable-sums" ||
      (c == "transport-extensivity" && has_arrow(w, "top"))) {
    Square s = witness_square(w);
    bool along = c != "vertically-stable-sums" || p.is_vertical(s.right);
    return is_pullback(E, s) && cocart(s.bottom) && along && !cocart(s.top);
  }
  if (c == "transport-extensivity") {
    MorId m = arrow(w, "m");
    MorId u = w.base_arrows.at(0).second;
    MorId c1 = p.push(u, E.src(m)), c2 = p.push(u, E.tgt(m));
    MorId image = fill_cocart(p, c1, E.compose(c2, m), p.base().id(p.base().tgt(u)));
    return p.in_fiber(m) && !E.is_iso(m) && E.is_iso(image);
  }
  if (c == "disjoint-sums") {
    MorId f = arrow(w, "f"), delta = arrow(w, "delta");
    MorId l = arrow(w, "left"), r = arrow(w, "right");
    ObjId d = E.src(f);
    return cocart(f) && is_pullback(E, {r, l, f, f}) && E.compose(l, delta) == E.id(d) &&
           E.compose(r, delta) == E.id(d) && !cocart(delta);
  }
  if (c == "left-cancellation") {
    MorId f = arrow(w, "f"), g = arrow(w, "g");
    return E.tgt(f) == E.src(g) && cocart(g) && cocart(E.compose(g, f)) && !cocart(f);
  }
  if (c == "conservative-transport") {
    MorId k = arrow(w, "k"), f = arrow(w, "f");
    return p.is_vertical(k) && !E.is_iso(k) && cocart(f) && cocart(E.compose(f, k));
  }
  if (c == "vertical-cocartesian-squares") {
    Square s = witness_square(w);
    return commutes(E, s) && p.is_vertical(s.left) && p.is_vertical(s.right) && cocart(s.top) &&
           cocart(s.bottom) && !is_pullback(E, s);
  }
  if (c == "internal-extensivity" || c == "lawvere-extensivity") {
    Square s = witness_square(w);
    return commutes(E, s) && p.is_vertical(s.left) && p.is_vertical(s.right) && cocart(s.bottom) &&
           is_pullback(E, s) != cocart(s.top);
  }
  if (c == "zawadowski" || c == "transport-pullbacks") {
    if (has_arrow(w, "top")) {
      Square s = witness_square(w);
      const Fiber& f = p.fiber(p.over(E.src(s.top)));
      Square local{p.local(s.top), p.local(s.left), p.local(s.right), p.local(s.bottom)};
      return commutes(*f.cat, local) && !is_pullback(*f.cat, local);
    }
    MorId u = w.base_arrows.at(0).second;
    Functor push = transport_pushforward(p, u);
    Cospan k{p.local(arrow(w, "left")), p.local(arrow(w, "right"))};
    Cone x = require_pullback(*push.source, k);
    return !is_pullback(*push.target, {push(x.right), push(x.left), push(k.right), push(k.left)});
  }
  if (c == "bcc-transport") {
    if (!has_arrow(w, "image")) return false;
    return !cart(arrow(w, "image"));
  }
  return false;
}

}  // namespace fibcat
