#include "fibcat/fibration.hpp"

#include <algorithm>
#include <unordered_map>

#include "limit_cache.hpp"

namespace fibcat {

bool check_cocartesian(const Functor& proj, MorId f) {
  const FinCategory& E = *proj.source;
  const FinCategory& B = *proj.target;
  ObjId e = E.src(f), e1 = E.tgt(f);
  MorId u = proj(f);
  std::unordered_map<std::uint64_t, int> count;
  for (MorId g : E.out(e1)) ++count[detail::pair_key(proj(g).v, E.compose(g, f).v)];
  for (MorId h : E.out(e)) {
    MorId ph = proj(h);
    ObjId b2 = proj(E.tgt(h));
    for (MorId v : B.hom(B.tgt(u), b2)) {
      if (B.compose(v, u) != ph) continue;
      auto it = count.find(detail::pair_key(v.v, h.v));
      if (it == count.end() || it->second != 1) return false;
    }
  }
  return true;
}

bool check_cartesian(const Functor& proj, MorId f) {
  const FinCategory& E = *proj.source;
  const FinCategory& B = *proj.target;
  ObjId e1 = E.src(f), e = E.tgt(f);
  MorId u = proj(f);
  std::unordered_map<std::uint64_t, int> count;
  for (MorId g : E.in(e1)) ++count[detail::pair_key(proj(g).v, E.compose(f, g).v)];
  for (MorId h : E.in(e)) {
    MorId ph = proj(h);
    ObjId b2 = proj(E.src(h));
    for (MorId v : B.hom(b2, B.src(u))) {
      if (B.compose(u, v) != ph) continue;
      auto it = count.find(detail::pair_key(v.v, h.v));
      if (it == count.end() || it->second != 1) return false;
    }
  }
  return true;
}

Fibration::Fibration(Functor proj) : proj_(std::move(proj)) {
  validate_functor(proj_);
  const FinCategory& E = total();
  const FinCategory& B = base();
  const std::size_t nb = B.num_objects();

  fibers_.resize(nb);
  local_obj_.assign(E.num_objects(), ObjId{0});
  std::vector<MorId> local_mor(E.num_morphisms(), MorId{0});
  std::vector<CategoryBuilder> builders(nb);
  for (std::uint32_t e = 0; e < E.num_objects(); ++e) {
    ObjId b = over(ObjId{e});
    local_obj_[e] = builders[b.v].add_object(E.name(ObjId{e}));
    fibers_[b.v].obj_incl.push_back(ObjId{e});
  }
  for (std::uint32_t f = 0; f < E.num_morphisms(); ++f) {
    MorId m{f};
    ObjId b = over(E.src(m));
    if (!B.is_identity(over(m)) || over(E.tgt(m)) != b) continue;
    local_mor[f] = builders[b.v].add_morphism(E.name(m), local_obj_[E.src(m).v],
                                              local_obj_[E.tgt(m).v]);
    fibers_[b.v].mor_incl.push_back(m);
  }
  for (std::uint32_t b = 0; b < nb; ++b) {
    Fiber& fb = fibers_[b];
    for (ObjId e : fb.obj_incl) builders[b].set_identity(local_obj_[e.v], local_mor[E.id(e).v]);
    fb.cat = builders[b].build(
        [&](MorId g, MorId f) {
          return local_mor[E.compose(fb.mor_incl[g.v], fb.mor_incl[f.v]).v];
        },
        Laws::kTrust);
  }
  local_mor_ = std::move(local_mor);

  cocart_.assign(E.num_morphisms(), 0);
  cart_.assign(E.num_morphisms(), 0);
  for (std::uint32_t f = 0; f < E.num_morphisms(); ++f) {
    cocart_[f] = check_cocartesian(proj_, MorId{f});
    cart_[f] = check_cartesian(proj_, MorId{f});
  }

  push_.assign(B.num_morphisms(), {});
  pull_.assign(B.num_morphisms(), {});
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    MorId um{u};
    const Fiber& fa = fibers_[B.src(um).v];
    const Fiber& fb = fibers_[B.tgt(um).v];
    push_[u].resize(fa.obj_incl.size());
    pull_[u].resize(fb.obj_incl.size());
    for (std::size_t i = 0; i < fa.obj_incl.size(); ++i) {
      for (MorId f : E.out(fa.obj_incl[i])) {
        if (over(f) == um && cocart_[f.v] && (!push_[u][i] || f < *push_[u][i])) push_[u][i] = f;
      }
      cocart_fib_ = cocart_fib_ && push_[u][i].has_value();
    }
    for (std::size_t i = 0; i < fb.obj_incl.size(); ++i) {
      for (MorId f : E.in(fb.obj_incl[i])) {
        if (over(f) == um && cart_[f.v] && (!pull_[u][i] || f < *pull_[u][i])) pull_[u][i] = f;
      }
      cart_fib_ = cart_fib_ && pull_[u][i].has_value();
    }
  }
}

MorId Fibration::local(MorId f) const {
  if (!in_fiber(f)) fail(ErrorKind::kNotFibered, total().name(f) + " is not in a fiber");
  return local_mor_[f.v];
}

std::vector<MorId> Fibration::cocartesian_lifts(MorId u, ObjId e) const {
  std::vector<MorId> out;
  for (MorId f : total().out(e)) {
    if (over(f) == u && cocart_[f.v]) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MorId> Fibration::cartesian_lifts(MorId u, ObjId e) const {
  std::vector<MorId> out;
  for (MorId f : total().in(e)) {
    if (over(f) == u && cart_[f.v]) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MorId> Fibration::cocartesian_lift(MorId u, ObjId e) const {
  if (over(e) != base().src(u)) return std::nullopt;
  return push_[u.v][local(e).v];
}

std::optional<MorId> Fibration::cartesian_lift(MorId u, ObjId e) const {
  if (over(e) != base().tgt(u)) return std::nullopt;
  return pull_[u.v][local(e).v];
}

MorId Fibration::push(MorId u, ObjId e) const {
  if (auto f = cocartesian_lift(u, e)) return *f;
  fail(ErrorKind::kMissingLift,
       "no cocartesian lift of " + base().name(u) + " at " + total().name(e));
}

MorId Fibration::pull(MorId u, ObjId e) const {
  if (auto f = cartesian_lift(u, e)) return *f;
  fail(ErrorKind::kMissingLift,
       "no cartesian lift of " + base().name(u) + " at " + total().name(e));
}

namespace {

// Number of vertical isos i with i ∘ a = b (cocartesian) or a ∘ i = b (cartesian).
int connecting_isos(const Fibration& p, MorId a, MorId b, bool cocart) {
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
  return n;
}

}  // namespace

std::optional<Witness> lift_uniqueness_failure(const Fibration& p) {
  const FinCategory& B = p.base();
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    MorId um{u};
    for (ObjId e : p.fiber(B.src(um)).obj_incl) {
      auto lifts = p.cocartesian_lifts(um, e);
      for (std::size_t i = 1; i < lifts.size(); ++i) {
        if (connecting_isos(p, lifts[0], lifts[i], true) != 1) {
          return Witness{"cocartesian lifts not related by a unique vertical iso",
                         {{"lift", lifts[0]}, {"other", lifts[i]}},
                         {{"u", um}}};
        }
      }
    }
    for (ObjId e : p.fiber(B.tgt(um)).obj_incl) {
      auto lifts = p.cartesian_lifts(um, e);
      for (std::size_t i = 1; i < lifts.size(); ++i) {
        if (connecting_isos(p, lifts[0], lifts[i], false) != 1) {
          return Witness{"cartesian lifts not related by a unique vertical iso",
                         {{"lift", lifts[0]}, {"other", lifts[i]}},
                         {{"u", um}}};
        }
      }
    }
  }
  return std::nullopt;
}

MorId fill_cocart(const Fibration& p, MorId f, MorId h, MorId v) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  if (!p.is_cocartesian(f)) fail(ErrorKind::kNotCocartesian, E.name(f));
  if (E.src(h) != E.src(f) || B.src(v) != B.tgt(p.over(f)) ||
      B.tgt(v) != p.over(E.tgt(h)) || B.compose(v, p.over(f)) != p.over(h)) {
    fail(ErrorKind::kNoFactorization,
         E.name(h) + " does not lie over " + B.name(v) + " after " + E.name(f));
  }
  for (MorId g : E.hom(E.tgt(f), E.tgt(h))) {
    if (p.over(g) == v && E.compose(g, f) == h) return g;
  }
  fail(ErrorKind::kNoFactorization, "no filler for " + E.name(h) + " through " + E.name(f));
}

MorId fill_cocart(const Fibration& p, MorId f, MorId h) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  std::optional<MorId> v;
  for (MorId w : B.hom(B.tgt(p.over(f)), p.over(E.tgt(h)))) {
    if (B.compose(w, p.over(f)) != p.over(h)) continue;
    if (v) fail(ErrorKind::kNoFactorization, "base factorization is not unique");
    v = w;
  }
  if (!v) fail(ErrorKind::kNoFactorization, "no base factorization for " + E.name(h));
  return fill_cocart(p, f, h, *v);
}

MorId fill_cart(const Fibration& p, MorId f, MorId h, MorId v) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  if (!p.is_cartesian(f)) fail(ErrorKind::kNotCartesian, E.name(f));
  if (E.tgt(h) != E.tgt(f) || B.tgt(v) != B.src(p.over(f)) ||
      B.src(v) != p.over(E.src(h)) || B.compose(p.over(f), v) != p.over(h)) {
    fail(ErrorKind::kNoFactorization,
         E.name(h) + " does not lie over " + E.name(f) + " after " + B.name(v));
  }
  for (MorId g : E.hom(E.src(h), E.src(f))) {
    if (p.over(g) == v && E.compose(f, g) == h) return g;
  }
  fail(ErrorKind::kNoFactorization, "no filler for " + E.name(h) + " through " + E.name(f));
}

MorId fill_cart(const Fibration& p, MorId f, MorId h) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  std::optional<MorId> v;
  for (MorId w : B.hom(p.over(E.src(h)), B.src(p.over(f)))) {
    if (B.compose(p.over(f), w) != p.over(h)) continue;
    if (v) fail(ErrorKind::kNoFactorization, "base factorization is not unique");
    v = w;
  }
  if (!v) fail(ErrorKind::kNoFactorization, "no base factorization for " + E.name(h));
  return fill_cart(p, f, h, *v);
}

std::pair<MorId, MorId> factor_cocart_vert(const Fibration& p, MorId f) {
  MorId u = p.over(f);
  MorId c = p.push(u, p.total().src(f));
  MorId m = fill_cocart(p, c, f, p.base().id(p.base().tgt(u)));
  return {c, m};
}

std::pair<MorId, MorId> factor_vert_cart(const Fibration& p, MorId f) {
  MorId u = p.over(f);
  MorId c = p.pull(u, p.total().tgt(f));
  MorId m = fill_cart(p, c, f, p.base().id(p.base().src(u)));
  return {m, c};
}

Functor transport_pushforward(const Fibration& p, MorId u) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  ObjId a = B.src(u), b = B.tgt(u);
  const Fiber& fa = p.fiber(a);
  const Fiber& fb = p.fiber(b);
  Functor F{fa.cat, fb.cat, {}, {}};
  for (ObjId e : fa.obj_incl) F.obj.push_back(p.local(E.tgt(p.push(u, e))));
  for (MorId m : fa.mor_incl) {
    MorId c = p.push(u, E.src(m)), c1 = p.push(u, E.tgt(m));
    F.mor.push_back(p.local(fill_cocart(p, c, E.compose(c1, m), B.id(b))));
  }
  return F;
}

Functor transport_pullback(const Fibration& p, MorId u) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  ObjId a = B.src(u), b = B.tgt(u);
  const Fiber& fa = p.fiber(a);
  const Fiber& fb = p.fiber(b);
  Functor F{fb.cat, fa.cat, {}, {}};
  for (ObjId e : fb.obj_incl) F.obj.push_back(p.local(E.src(p.pull(u, e))));
  for (MorId m : fb.mor_incl) {
    MorId c = p.pull(u, E.src(m)), c1 = p.pull(u, E.tgt(m));
    F.mor.push_back(p.local(fill_cart(p, c1, E.compose(m, c), B.id(a))));
  }
  return F;
}

NatTrans adjunction_unit(const Fibration& p, MorId u) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  ObjId a = B.src(u);
  Functor push = transport_pushforward(p, u);
  Functor pull = transport_pullback(p, u);
  NatTrans t{identity_functor(p.fiber(a).cat), compose(pull, push), {}};
  for (ObjId x : p.fiber(a).obj_incl) {
    MorId c = p.push(u, x);
    MorId k = p.pull(u, E.tgt(c));
    t.component.push_back(p.local(fill_cart(p, k, c, B.id(a))));
  }
  return t;
}

NatTrans adjunction_counit(const Fibration& p, MorId u) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  ObjId b = B.tgt(u);
  Functor push = transport_pushforward(p, u);
  Functor pull = transport_pullback(p, u);
  NatTrans t{compose(push, pull), identity_functor(p.fiber(b).cat), {}};
  for (ObjId y : p.fiber(b).obj_incl) {
    MorId k = p.pull(u, y);
    MorId c = p.push(u, E.src(k));
    t.component.push_back(p.local(fill_cocart(p, c, k, B.id(b))));
  }
  return t;
}

PredicateVerdict check_transport_adjunction(const Fibration& p, MorId u) {
  const std::string name = "transport-adjunction";
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  ObjId a = B.src(u), b = B.tgt(u);
  const Fiber& fa = p.fiber(a);
  const Fiber& fb = p.fiber(b);
  NatTrans eta = adjunction_unit(p, u);
  NatTrans eps = adjunction_counit(p, u);
  if (auto v = naturality_violation(eta)) return refute(name, {"unit: " + *v, {}, {{"u", u}}});
  if (auto v = naturality_violation(eps)) return refute(name, {"counit: " + *v, {}, {{"u", u}}});
  Functor pf = transport_pushforward(p, u);
  Functor pb = transport_pullback(p, u);
  for (std::uint32_t x = 0; x < fa.cat->num_objects(); ++x) {
    ObjId lx{x};
    MorId lhs = fb.cat->compose(eps.component[pf(lx).v], pf(eta.component[x]));
    if (lhs != fb.cat->id(pf(lx))) {
      return refute(name, {"triangle identity fails at u_! x",
                           {{"x", E.id(fa.obj_incl[x])}}, {{"u", u}}});
    }
  }
  for (std::uint32_t y = 0; y < fb.cat->num_objects(); ++y) {
    ObjId ly{y};
    MorId lhs = fa.cat->compose(pb(eps.component[y]), eta.component[pb(ly).v]);
    if (lhs != fa.cat->id(pb(ly))) {
      return refute(name, {"triangle identity fails at u^* y",
                           {{"y", E.id(fb.obj_incl[y])}}, {{"u", u}}});
    }
  }
  // hom bijection Φ / Ψ
  for (std::uint32_t x = 0; x < fa.cat->num_objects(); ++x) {
    ObjId d = fa.obj_incl[x];
    MorId cd = p.push(u, d);
    for (std::uint32_t y = 0; y < fb.cat->num_objects(); ++y) {
      ObjId e = fb.obj_incl[y];
      MorId ke = p.pull(u, e);
      auto phi = [&](MorId g) { return fill_cart(p, ke, E.compose(g, cd), B.id(a)); };
      auto psi = [&](MorId k) { return fill_cocart(p, cd, E.compose(ke, k), B.id(b)); };
      for (MorId g : E.hom(E.tgt(cd), e)) {
        if (!p.in_fiber(g)) continue;
        if (psi(phi(g)) != g) {
          return refute(name, {"Ψ∘Φ is not the identity", {{"g", g}}, {{"u", u}}});
        }
      }
      for (MorId k : E.hom(d, E.src(ke))) {
        if (!p.in_fiber(k)) continue;
        if (phi(psi(k)) != k) {
          return refute(name, {"Φ∘Ψ is not the identity", {{"k", k}}, {{"u", u}}});
        }
      }
    }
  }
  return pass(name);
}

namespace {

void require_fibered(const Fibration& p, const Fibration& q, const Functor& phi) {
  if (phi.source.get() != p.total_ptr().get() || phi.target.get() != q.total_ptr().get() ||
      p.base_ptr().get() != q.base_ptr().get()) {
    fail(ErrorKind::kNotFibered, "functor does not connect the two total categories over one base");
  }
  validate_functor(phi);
  for (std::uint32_t x = 0; x < p.total().num_objects(); ++x) {
    if (q.over(phi(ObjId{x})) != p.over(ObjId{x})) {
      fail(ErrorKind::kNotFibered, "object " + p.total().name(ObjId{x}) + " changes fiber");
    }
  }
  for (std::uint32_t f = 0; f < p.total().num_morphisms(); ++f) {
    if (q.over(phi(MorId{f})) != p.over(MorId{f})) {
      fail(ErrorKind::kNotFibered, "arrow " + p.total().name(MorId{f}) + " changes base arrow");
    }
  }
}

}  // namespace

PredicateVerdict is_cocartesian_functor(const Fibration& p, const Fibration& q,
                                        const Functor& phi) {
  require_fibered(p, q, phi);
  for (std::uint32_t f = 0; f < p.total().num_morphisms(); ++f) {
    if (p.is_cocartesian(MorId{f}) && !q.is_cocartesian(phi(MorId{f}))) {
      return refute("cocartesian-functor",
                    {"cocartesian arrow sent to a non-cocartesian arrow", {{"f", MorId{f}}}, {}});
    }
  }
  return pass("cocartesian-functor");
}

PredicateVerdict is_cartesian_functor(const Fibration& p, const Fibration& q, const Functor& phi) {
  require_fibered(p, q, phi);
  for (std::uint32_t f = 0; f < p.total().num_morphisms(); ++f) {
    if (p.is_cartesian(MorId{f}) && !q.is_cartesian(phi(MorId{f}))) {
      return refute("cartesian-functor",
                    {"cartesian arrow sent to a non-cartesian arrow", {{"f", MorId{f}}}, {}});
    }
  }
  return pass("cartesian-functor");
}

namespace {

std::optional<ObjId> fiber_terminal(const Fibration& p, ObjId b) {
  auto z = terminal_object(*p.fiber(b).cat);
  if (!z) return std::nullopt;
  return p.fiber(b).obj_incl[z->v];
}

}  // namespace

std::optional<Functor> terminal_section_functor(const Fibration& p) {
  const FinCategory& B = p.base();
  const FinCategory& E = p.total();
  Functor zeta{p.base_ptr(), p.total_ptr(), {}, {}};
  for (std::uint32_t b = 0; b < B.num_objects(); ++b) {
    auto z = fiber_terminal(p, ObjId{b});
    if (!z) return std::nullopt;
    zeta.obj.push_back(*z);
  }
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    MorId um{u};
    std::optional<MorId> found;
    for (MorId f : E.hom(zeta(B.src(um)), zeta(B.tgt(um)))) {
      if (p.over(f) != um) continue;
      if (found) return std::nullopt;
      found = f;
    }
    if (!found) return std::nullopt;
    zeta.mor.push_back(*found);
  }
  if (functor_violation(zeta)) return std::nullopt;
  return zeta;
}

LexnessReport lexness_transfer(const Fibration& p) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  if (!is_lex_category(B)) fail(ErrorKind::kNotLex, "base is not lex");
  if (!p.is_cartesian_fibration()) fail(ErrorKind::kNotCartesian, "fibration is not cartesian");
  LexnessReport r;
  auto zE = terminal_object(E);
  r.total_has_terminal = zE.has_value();
  if (zE) {
    auto tb = terminal_objects(B);
    r.proj_preserves_terminal = std::find(tb.begin(), tb.end(), p.over(*zE)) != tb.end();
  }
  r.fibers_have_terminal = true;
  for (std::uint32_t b = 0; b < B.num_objects(); ++b) {
    r.fibers_have_terminal = r.fibers_have_terminal && fiber_terminal(p, ObjId{b}).has_value();
  }
  r.total_has_pullbacks = has_all_pullbacks(E);
  if (r.total_has_pullbacks) r.proj_preserves_pullbacks = preserves_pullbacks(p.proj());
  r.fibers_have_pullbacks = true;
  for (std::uint32_t b = 0; b < B.num_objects(); ++b) {
    r.fibers_have_pullbacks = r.fibers_have_pullbacks && has_all_pullbacks(*p.fiber(ObjId{b}).cat);
  }
  r.reindex_preserves_terminal = r.fibers_have_terminal;
  r.reindex_preserves_pullbacks = r.fibers_have_pullbacks;
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    Functor pb = transport_pullback(p, MorId{u});
    if (r.reindex_preserves_terminal && !preserves_terminal(pb)) {
      r.reindex_preserves_terminal = false;
    }
    if (r.reindex_preserves_pullbacks && !preserves_pullbacks(pb)) {
      r.reindex_preserves_pullbacks = false;
    }
  }
  if (r.terminal_side_fibers()) {
    auto zeta = terminal_section_functor(p);
    r.zeta_lex = zeta && preserves_terminal(*zeta) &&
                 (!r.pullback_side_fibers() || preserves_pullbacks(*zeta));
  }
  r.terminal_totalty = true;
  if (r.terminal_side_total()) {
    auto zB = terminal_object(B);
    auto zz = fiber_terminal(p, *zB);
    auto tE = terminal_objects(E);
    r.terminal_totalty = zz && std::find(tE.begin(), tE.end(), *zz) != tE.end();
  }
  return r;
}

bool is_lex_fibration(const Fibration& p) {
  if (!is_lex_category(p.base()) || !p.is_cartesian_fibration()) return false;
  return lexness_transfer(p).lex();
}

PredicateVerdict vertical_pullback_stability(const Fibration& p) {
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId f{i};
    if (!p.is_vertical(f)) continue;
    for (MorId g : E.in(E.tgt(f))) {
      auto x = pullback_cone(E, {f, g});
      if (x && !p.is_vertical(x->right)) {
        return refute("vertical-pullback-stability",
                      {"pullback of a vertical arrow is not vertical",
                       {{"f", f}, {"g", g}, {"pulled back", x->right}}, {}});
      }
    }
  }
  return pass("vertical-pullback-stability");
}

PredicateVerdict cartesian_pullback_stability(const Fibration& p) {
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId f{i};
    if (!p.is_cartesian(f)) continue;
    for (MorId g : E.in(E.tgt(f))) {
      auto x = pullback_cone(E, {f, g});
      if (x && !p.is_cartesian(x->right)) {
        return refute("cartesian-pullback-stability",
                      {"pullback of a cartesian arrow is not cartesian",
                       {{"f", f}, {"g", g}, {"pulled back", x->right}}, {}});
      }
    }
  }
  return pass("cartesian-pullback-stability");
}

PredicateVerdict vertical_rlp(const Fibration& p) {
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId f{i};
    ObjId x = E.src(f), y = E.tgt(f);
    bool lifts = true;
    std::optional<Witness> problem;
    for (std::uint32_t j = 0; j < E.num_morphisms() && lifts; ++j) {
      MorId c{j};
      if (!p.is_cocartesian(c)) continue;
      ObjId x1 = E.src(c), y1 = E.tgt(c);
      for (MorId g1 : E.hom(x1, x)) {
        MorId fg1 = E.compose(f, g1);
        for (MorId g : E.hom(y1, y)) {
          if (E.compose(g, c) != fg1) continue;
          bool found = false;
          for (MorId h : E.hom(y1, x)) {
            if (E.compose(h, c) == g1 && E.compose(f, h) == g) {
              found = true;
              break;
            }
          }
          if (!found) {
            lifts = false;
            problem = Witness{"", {{"f", f}, {"cocartesian", c}, {"top", g1}, {"bottom", g}}, {}};
            break;
          }
        }
        if (!lifts) break;
      }
    }
    if (lifts != p.is_vertical(f)) {
      Witness w = problem.value_or(Witness{"", {{"f", f}}, {}});
      w.description = lifts ? "non-vertical arrow lifts against every cocartesian arrow"
                            : "vertical arrow fails to lift against a cocartesian arrow";
      return refute("vertical-rlp", w);
    }
  }
  return pass("vertical-rlp");
}

PredicateVerdict vertical_retracts(const Fibration& p) {
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId f1{i};  // candidate retract
    if (p.is_vertical(f1)) continue;
    ObjId x1 = E.src(f1), y1 = E.tgt(f1);
    for (std::uint32_t j = 0; j < E.num_morphisms(); ++j) {
      MorId f{j};
      if (!p.is_vertical(f)) continue;
      ObjId x = E.src(f), y = E.tgt(f);
      for (MorId g : E.hom(x1, x)) {
        for (MorId k : E.hom(x, x1)) {
          if (E.compose(k, g) != E.id(x1)) continue;
          for (MorId g1 : E.hom(y1, y)) {
            if (E.compose(f, g) != E.compose(g1, f1)) continue;
            for (MorId k1 : E.hom(y, y1)) {
              if (E.compose(k1, g1) != E.id(y1)) continue;
              if (E.compose(f1, k) != E.compose(k1, f)) continue;
              return refute("vertical-retracts",
                            {"non-vertical retract of a vertical arrow",
                             {{"retract", f1}, {"vertical", f}, {"g", g}, {"k", k},
                              {"g'", g1}, {"k'", k1}},
                             {}});
            }
          }
        }
      }
    }
  }
  return pass("vertical-retracts");
}

namespace {

// Squares over the cospan (bottom, right) whose sides satisfy the predicates;
// each must be a pullback in E.
template <class SideOk>
std::optional<Witness> squares_not_pullbacks(const Fibration& p, SideOk ok, bool need_base_pb) {
  const FinCategory& E = p.total();
  const FinCategory& B = p.base();
  for (std::uint32_t c = 0; c < E.num_objects(); ++c) {
    for (MorId bottom : E.in(ObjId{c})) {
      if (!ok.bottom(bottom)) continue;
      for (MorId right : E.in(ObjId{c})) {
        if (!ok.right(right)) continue;
        ConeSpace space(E, {bottom, right});
        for (const Cone& x : space.cones()) {
          if (!ok.left(x.left) || !ok.top(x.right)) continue;
          if (need_base_pb) {
            Square base{p.over(x.right), p.over(x.left), p.over(right), p.over(bottom)};
            if (!is_pullback(B, base)) continue;
          }
          if (!space.is_universal(x)) {
            return Witness{"square is not a pullback",
                           {{"top", x.right}, {"left", x.left}, {"right", right}, {"bottom", bottom}},
                           {}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PredicateVerdict cartesian_squares_are_pullbacks(const Fibration& p) {
  auto cart = [&p](MorId f) { return p.is_cartesian(f); };
  struct {
    decltype(cart) top, left, right, bottom;
  } ok{cart, cart, cart, cart};
  if (auto w = squares_not_pullbacks(p, ok, true)) return refute("cartesian-squares", *w);
  return pass("cartesian-squares");
}

PredicateVerdict cartesian_vertical_squares_are_pullbacks(const Fibration& p) {
  auto cart = [&p](MorId f) { return p.is_cartesian(f); };
  auto vert = [&p](MorId f) { return p.in_fiber(f); };
  struct {
    decltype(cart) top;
    decltype(vert) left, right;
    decltype(cart) bottom;
  } ok{cart, vert, vert, cart};
  if (auto w = squares_not_pullbacks(p, ok, false)) return refute("cartesian-vertical-squares", *w);
  return pass("cartesian-vertical-squares");
}

PredicateVerdict fiber_pullbacks_are_pullbacks(const Fibration& p) {
  const FinCategory& E = p.total();
  for (std::uint32_t b = 0; b < p.base().num_objects(); ++b) {
    const Fiber& fb = p.fiber(ObjId{b});
    for (const Cospan& k : all_cospans(*fb.cat)) {
      auto x = pullback_cone(*fb.cat, k);
      if (!x) continue;
      Square s{fb.mor_incl[x->right.v], fb.mor_incl[x->left.v], fb.mor_incl[k.right.v],
               fb.mor_incl[k.left.v]};
      if (!is_pullback(E, s)) {
        return refute("fiber-pullbacks",
                      {"fiber pullback is not a pullback in the total category",
                       {{"top", s.top}, {"left", s.left}, {"right", s.right}, {"bottom", s.bottom}},
                       {}});
      }
    }
  }
  return pass("fiber-pullbacks");
}

PredicateVerdict cocartesian_closure(const Fibration& p) {
  const FinCategory& E = p.total();
  for (std::uint32_t i = 0; i < E.num_morphisms(); ++i) {
    MorId f{i};
    if (!p.is_cocartesian(f)) continue;
    for (MorId g : E.out(E.tgt(f))) {
      bool gf = p.is_cocartesian(E.compose(g, f));
      if (p.is_cocartesian(g) && !gf) {
        return refute("cocartesian-closure",
                      {"composite of cocartesian arrows is not cocartesian", {{"f", f}, {"g", g}}, {}});
      }
      if (gf && !p.is_cocartesian(g)) {
        return refute("cocartesian-closure",
                      {"right cancellation fails", {{"f", f}, {"g", g}}, {}});
      }
    }
  }
  return pass("cocartesian-closure");
}

}  // namespace fibcat
