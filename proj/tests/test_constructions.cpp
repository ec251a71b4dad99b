#include <gtest/gtest.h>

#include "fibcat/constructions.hpp"
#include "fibcat/errors.hpp"
#include "fibcat/fixtures.hpp"
#include "oracles.hpp"

using namespace fibcat;

namespace {

CatPtr walking_span() { return preorder({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}}); }

// Σ over i, j of |hom(i, j)|, which for FinSet is Σ j^i.
std::size_t finset_arrows(int n) {
  std::size_t total = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      std::size_t k = 1;
      for (int t = 0; t < i; ++t) k *= static_cast<std::size_t>(j);
      total += k;
    }
  }
  return total;
}

// Arrow category into comma(id, id), object f ↦ (src f, tgt f, f).
Functor arrow_to_comma(const ArrowCategory& ar, const CommaCategory& c) {
  const FinCategory& B = *ar.dom.target;
  Functor F{ar.cat, c.cat, {}, {}};
  for (MorId f : ar.arrow) F.obj.push_back(comma_object(c, B.src(f), B.tgt(f), f));
  for (std::uint32_t s = 0; s < ar.cat->num_morphisms(); ++s) {
    MorId m{s};
    F.mor.push_back(comma_morphism(c, F(ar.cat->src(m)), F(ar.cat->tgt(m)), ar.top[s], ar.bottom[s]));
  }
  return F;
}

}  // namespace

TEST(ArrowCategory, Counts) {
  auto a1 = arrow_category(one());
  EXPECT_EQ(a1.cat->num_objects(), 1u);
  EXPECT_EQ(a1.cat->num_morphisms(), 1u);
  auto a2 = arrow_category(two());
  EXPECT_EQ(a2.cat->num_objects(), 3u);
  auto f3 = finset(3);
  EXPECT_EQ(f3->num_morphisms(), finset_arrows(3));
  // the square count exceeds the default cap
  EXPECT_THROW(arrow_category(f3), Error);
  auto a3 = arrow_category(f3, SizeGuard{1000000});
  EXPECT_EQ(a3.cat->num_objects(), finset_arrows(3));
}

TEST(ArrowCategory, IsomorphicToComma) {
  for (const CatPtr& b : {diamond(), finset(2), iso2()}) {
    auto ar = arrow_category(b);
    auto id = identity_functor(b);
    auto c = comma(id, id);
    Functor F = arrow_to_comma(ar, c);
    EXPECT_FALSE(functor_violation(F));
    EXPECT_TRUE(is_isomorphism(F));
  }
}

TEST(ArrowCategory, CodomainCocartesianCartesianIffPullbacks) {
  for (const CatPtr& b : {diamond(), finset(2), walking_cospan(), chain(3)}) {
    auto ar = arrow_category(b);
    EXPECT_TRUE(oracle::has_all_cocartesian_lifts(ar.cod));
    EXPECT_EQ(oracle::has_all_cartesian_lifts(ar.cod), has_all_pullbacks(*b));
    Fibration p(ar.cod);
    EXPECT_TRUE(p.is_cocartesian_fibration());
    EXPECT_EQ(p.is_cartesian_fibration(), has_all_pullbacks(*b));
  }
}

TEST(ArrowCategory, DomainOpfibration) {
  auto d = diamond();
  auto ar = arrow_category(d);
  Fibration p = domain_opfibration(d);
  EXPECT_TRUE(p.is_cocartesian_fibration());
  for (MorId u : oracle::all_morphisms(*d)) {
    for (MorId f : oracle::all_morphisms(*d)) {
      if (d->src(f) != d->src(u)) continue;
      MorId lift = domain_pushout_lift(ar, u, f);
      EXPECT_TRUE(oracle::is_cocartesian(ar.dom, lift));
    }
  }
  EXPECT_TRUE(domain_opfibration(one()).is_cocartesian_fibration());
  try {
    domain_opfibration(walking_span());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMissingPushouts);
  }
}

TEST(Grothendieck, ConstantDataIsProduct) {
  auto d = diamond();
  auto f = two();
  GrothendieckData g{d, std::vector<CatPtr>(4, f), {}};
  for (std::uint32_t u = 0; u < d->num_morphisms(); ++u) g.transition.push_back(identity_functor(f));
  auto gr = grothendieck(g);
  EXPECT_EQ(gr.fib.total().num_objects(), 8u);
  EXPECT_EQ(gr.fib.total().num_morphisms(), 9u * 3u);
  EXPECT_FALSE(find_law_violation(gr.fib.total()));
}

TEST(Grothendieck, CollapsingFamily) {
  auto gr = grothendieck(collapsing_family());
  const FinCategory& E = gr.fib.total();
  EXPECT_EQ(E.num_objects(), 3u);
  EXPECT_FALSE(find_law_violation(E));
  EXPECT_TRUE(gr.fib.is_bicartesian());
  for (MorId u : oracle::all_morphisms(gr.fib.base())) {
    for (std::uint32_t e = 0; e < E.num_objects(); ++e) {
      if (gr.obj_base[e] != gr.fib.base().src(u)) continue;
      MorId lift = gr.cocartesian_lift(u, ObjId{e});
      EXPECT_TRUE(oracle::is_cocartesian(gr.fib.proj(), lift));
    }
  }
}

TEST(Grothendieck, IdentityTransitionsOverDiamond) {
  auto d = diamond();
  auto f = finset(1);
  GrothendieckData g{d, std::vector<CatPtr>(4, f), {}};
  for (std::uint32_t u = 0; u < d->num_morphisms(); ++u) g.transition.push_back(identity_functor(f));
  auto gr = grothendieck(g);
  for (MorId u : oracle::all_morphisms(*d)) {
    for (std::uint32_t e = 0; e < gr.fib.total().num_objects(); ++e) {
      if (gr.obj_base[e] != d->src(u)) continue;
      MorId lift = gr.cocartesian_lift(u, ObjId{e});
      EXPECT_TRUE(oracle::is_cocartesian(gr.fib.proj(), lift));
      EXPECT_EQ(gr.fib.push(u, ObjId{e}), lift);
    }
  }
}

TEST(Grothendieck, FunctorialityViolation) {
  auto t = two();
  auto g = family_over_two(t, t, identity_functor(t));
  MorId id0 = g.base->morphism("id_0");
  g.transition[id0.v] = constant_functor(t, t, ObjId{1});
  try {
    grothendieck(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kFunctorialityViolation);
  }
}

TEST(FreeCocartesian, IdentityGivesArrowCategory) {
  auto d = diamond();
  auto l = free_cocartesian(identity_functor(d));
  auto ar = arrow_category(d);
  EXPECT_EQ(l.comma.cat->num_objects(), ar.cat->num_objects());
  EXPECT_EQ(l.comma.cat->num_morphisms(), ar.cat->num_morphisms());
  EXPECT_TRUE(is_isomorphism(arrow_to_comma(ar, l.comma)));
}

TEST(FreeCocartesian, CosliceAtBottom) {
  auto d = diamond();
  auto l = free_cocartesian(constant_functor(one(), d, d->object("bot")));
  EXPECT_EQ(l.comma.cat->num_objects(), 4u);
  EXPECT_TRUE(l.fib.is_cocartesian_fibration());
  EXPECT_TRUE(oracle::has_all_cocartesian_lifts(l.fib.proj()));
}

TEST(FreeCocartesian, AlwaysCocartesian) {
  auto w = walking_cospan();
  for (const Functor& pi : {monotone_functor(w, two(), std::vector<std::string>{"0", "0", "1"}),
                            f_bad(), identity_functor(finset(2))}) {
    auto l = free_cocartesian(pi);
    EXPECT_TRUE(l.fib.is_cocartesian_fibration());
    EXPECT_FALSE(find_law_violation(*l.comma.cat));
  }
}

TEST(FreeCocartesian, CartesianLiftFormula) {
  auto d = diamond();
  Fibration pi = codomain_fibration(d);
  auto l = free_cocartesian(pi.proj());
  ASSERT_TRUE(l.fib.is_cartesian_fibration());
  const FinCategory& L = *l.comma.cat;
  for (MorId v : oracle::all_morphisms(*d)) {
    for (std::uint32_t x = 0; x < L.num_objects(); ++x) {
      if (l.comma.proj_right.obj[x] != d->tgt(v)) continue;
      MorId lift = free_cocartesian_cartesian_lift(l, pi, v, ObjId{x});
      EXPECT_TRUE(oracle::is_cartesian(l.fib.proj(), lift));
      EXPECT_EQ(l.fib.proj()(lift), v);
    }
  }
}

TEST(Gluing, IdentityIsCodomain) {
  auto d = diamond();
  auto gl = artin_gluing(identity_functor(d));
  auto ar = arrow_category(d);
  EXPECT_TRUE(is_isomorphism(arrow_to_comma(ar, gl.comma)));
}

TEST(Gluing, FBadAndConstTop) {
  auto gl = artin_gluing(f_bad());
  EXPECT_EQ(gl.comma.cat->num_objects(), 10u);
  EXPECT_TRUE(gl.fib.is_bicartesian());
  EXPECT_FALSE(find_law_violation(*gl.comma.cat));
  auto d = diamond();
  auto top = artin_gluing(constant_functor(d, d, d->object("top")));
  for (std::uint32_t b = 0; b < 4; ++b) {
    EXPECT_EQ(top.fib.fiber(ObjId{b}).cat->num_objects(), 4u);
  }
}

TEST(Gluing, LiftFormulas) {
  auto d = diamond();
  std::vector<Functor> fs{identity_functor(d), f_bad(), constant_functor(d, d, d->object("top")),
                          meet_with(d, d->object("a"))};
  for (const Functor& F : fs) {
    auto gl = artin_gluing(F);
    EXPECT_TRUE(verify_gluing_lift_formulas(gl).holds);
    for (MorId u : oracle::all_morphisms(*F.source)) {
      for (ObjId x : gl.fib.fiber(F.source->src(u)).obj_incl) {
        EXPECT_TRUE(oracle::is_cocartesian(gl.fib.proj(), gluing_cocartesian_lift(gl, u, x)));
      }
      for (ObjId x : gl.fib.fiber(F.source->tgt(u)).obj_incl) {
        EXPECT_TRUE(oracle::is_cartesian(gl.fib.proj(), gluing_cartesian_lift(gl, u, x)));
      }
    }
  }
}

TEST(Gluing, IsLexFibration) {
  auto d = diamond();
  for (const Functor& F : {identity_functor(d), f_bad(), meet_with(d, d->object("b"))}) {
    auto r = lexness_transfer(artin_gluing(F).fib);
    EXPECT_TRUE(r.agree());
    EXPECT_TRUE(r.lex());
  }
}

TEST(Gluing, CartesianLiftNeedsPullback) {
  // codomain without pullbacks
  auto w = walking_cospan();
  auto gl = artin_gluing(identity_functor(w));
  MorId u = w->morphism("a->c");
  ObjId x = comma_object(gl.comma, w->object("b"), w->object("c"), w->morphism("b->c"));
  try {
    gluing_cartesian_lift(gl, u, x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMissingPullback);
  }
}
