#include <gtest/gtest.h>

#include "fibcat/fixtures.hpp"
#include "fibcat/limits.hpp"
#include "oracles.hpp"

using namespace fibcat;

namespace {

CatPtr discrete2() { return preorder({"x", "y"}, {}); }

MorId arrow(const CatPtr& c, const std::string& name) { return c->morphism(name); }

}  // namespace

TEST(FinCategory, OneAndDiamondAreValid) {
  auto o = one();
  EXPECT_EQ(o->num_objects(), 1u);
  EXPECT_EQ(o->num_morphisms(), 1u);
  EXPECT_FALSE(find_law_violation(*o));
  auto d = diamond();
  EXPECT_EQ(d->num_morphisms(), 9u);
  EXPECT_FALSE(find_law_violation(*d));
}

TEST(FinCategory, FinSet3HasSixtyMorphisms) {
  auto f = finset(3);
  EXPECT_EQ(f->num_objects(), 4u);
  EXPECT_EQ(f->num_morphisms(), 60u);
  EXPECT_FALSE(find_law_violation(*f));
}

TEST(FinCategory, IllTypedCompositeIsLawViolation) {
  CategoryBuilder b;
  ObjId x = b.add_object("x"), y = b.add_object("y");
  MorId ix = b.add_morphism("id_x", x, x), iy = b.add_morphism("id_y", y, y);
  MorId f = b.add_morphism("f", x, y);
  MorId e = b.add_morphism("e", x, x);
  b.set_identity(x, ix);
  b.set_identity(y, iy);
  b.set_composite(e, e, e);
  b.set_composite(f, e, f);
  try {
    b.set_composite(e, e, f);
    FAIL() << "expected LawViolation";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kLawViolation);
    EXPECT_NE(std::string(err.what()).find("(e, e)"), std::string::npos);
  }
}

TEST(FinCategory, MissingCompositeNamesThePair) {
  CategoryBuilder b;
  ObjId x = b.add_object("x");
  MorId ix = b.add_morphism("id_x", x, x);
  b.add_morphism("e", x, x);
  b.set_identity(x, ix);
  try {
    b.build();
    FAIL() << "expected LawViolation";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kLawViolation);
    EXPECT_NE(std::string(err.what()).find("(e, e)"), std::string::npos);
  }
}

TEST(FinCategory, AssociativityFailureIsDetected) {
  // (e∘k)∘k = k but e∘(k∘k) = e
  CategoryBuilder b;
  ObjId x = b.add_object("x");
  MorId ix = b.add_morphism("id_x", x, x);
  MorId e = b.add_morphism("e", x, x);
  MorId k = b.add_morphism("k", x, x);
  b.set_identity(x, ix);
  b.set_composite(e, e, e);
  b.set_composite(k, k, ix);
  b.set_composite(e, k, ix);
  b.set_composite(k, e, e);
  EXPECT_THROW(b.build(), Error);
}

TEST(FinCategory, IsoDetection) {
  auto t = two();
  EXPECT_TRUE(t->is_iso(t->id(t->object("0"))));
  EXPECT_FALSE(t->is_iso(arrow(t, "0->1")));
  auto i = iso2();
  EXPECT_TRUE(i->is_iso(arrow(i, "p->q")));
  for (auto c : {one(), two(), iso2(), diamond(), finset(2)}) {
    for (MorId f : oracle::all_morphisms(*c)) EXPECT_EQ(c->is_iso(f), oracle::is_iso(*c, f));
  }
  EXPECT_THROW(t->morphism("nope"), Error);
}

TEST(FinCategory, TerminalObjects) {
  auto d = diamond();
  EXPECT_EQ(terminal_objects(*d), std::vector<ObjId>{d->object("top")});
  auto i = iso2();
  EXPECT_EQ(terminal_objects(*i).size(), 2u);
  EXPECT_TRUE(terminal_objects(*discrete2()).empty());
  for (auto c : {one(), two(), iso2(), diamond(), finset(3), walking_cospan()}) {
    auto t = terminal_objects(*c);
    for (std::uint32_t z = 0; z < c->num_objects(); ++z) {
      bool listed = std::find(t.begin(), t.end(), ObjId{z}) != t.end();
      EXPECT_EQ(listed, oracle::is_terminal(*c, ObjId{z}));
    }
  }
}

TEST(Pullback, MeetInDiamond) {
  auto d = diamond();
  auto r = pullback(*d, {arrow(d, "a->top"), arrow(d, "b->top")});
  ASSERT_TRUE(r);
  EXPECT_EQ(d->name(r->cone.apex), "bot");
  EXPECT_TRUE(r->universal);
  // every cone has exactly one mediator
  EXPECT_EQ(r->mediator_table.size(),
            oracle::cones(*d, {arrow(d, "a->top"), arrow(d, "b->top")}).size());
}

TEST(Pullback, FinSet3IdentityAgainstSwap) {
  auto f = finset(3);
  Cospan k{arrow(f, "2->2:[0,1]"), arrow(f, "2->2:[1,0]")};
  auto r = pullback(*f, k);
  ASSERT_TRUE(r);
  EXPECT_EQ(f->name(r->cone.apex), "2");
  EXPECT_EQ(f->name(r->cone.left), "2->2:[1,0]");
  EXPECT_EQ(f->name(r->cone.right), "2->2:[0,1]");
  EXPECT_TRUE(oracle::is_pullback(*f, k, r->cone));
}

TEST(Pullback, AbsentInWalkingCospan) {
  auto w = walking_cospan();
  EXPECT_FALSE(pullback(*w, {arrow(w, "a->c"), arrow(w, "b->c")}));
  EXPECT_FALSE(is_lex_category(*w));
}

TEST(Pullback, AgreesWithNaiveOracleEverywhere) {
  for (auto c : {one(), two(), iso2(), diamond(), chain(4), walking_cospan(), finset(2)}) {
    for (const Cospan& k : all_cospans(*c)) {
      auto got = pullback_cone(*c, k);
      auto want = oracle::some_pullback(*c, k);
      ASSERT_EQ(got.has_value(), want.has_value());
      if (got) {
        EXPECT_TRUE(oracle::is_pullback(*c, k, *got));
        for (const Cone& x : oracle::cones(*c, k)) {
          EXPECT_EQ(ConeSpace(*c, k).is_universal(x), oracle::is_pullback(*c, k, x));
        }
      }
    }
  }
}

TEST(Pullback, SwappingLegsGivesIsomorphicApex) {
  for (auto c : {diamond(), chain(4), finset(2)}) {
    for (const Cospan& k : all_cospans(*c)) {
      auto a = pullback_cone(*c, k);
      auto b = pullback_cone(*c, {k.right, k.left});
      ASSERT_EQ(a.has_value(), b.has_value());
      if (!a) continue;
      bool iso = false;
      for (MorId m : c->hom(a->apex, b->apex)) iso = iso || c->is_iso(m);
      EXPECT_TRUE(iso);
    }
  }
}

TEST(Pullback, PosetPullbackIsMeet) {
  auto c = chain(4);
  for (const Cospan& k : all_cospans(*c)) {
    auto x = pullback_cone(*c, k);
    ASSERT_TRUE(x);
    EXPECT_EQ(x->apex.v, std::min(c->src(k.left).v, c->src(k.right).v));
  }
}

TEST(Pushout, JoinsAndAbsence) {
  auto d = diamond();
  auto r = pushout(*d, {arrow(d, "bot->a"), arrow(d, "bot->b")});
  ASSERT_TRUE(r);
  EXPECT_EQ(d->name(r->cone.apex), "top");
  auto t = two();
  auto r2 = pushout(*t, {arrow(t, "0->1"), arrow(t, "0->1")});
  ASSERT_TRUE(r2);
  EXPECT_EQ(t->name(r2->cone.apex), "1");
  auto span = preorder({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}});
  EXPECT_FALSE(pushout(*span, {arrow(span, "c->a"), arrow(span, "c->b")}));
  EXPECT_FALSE(has_all_pushouts(*span));
  EXPECT_TRUE(has_all_pushouts(*walking_cospan()));
}

TEST(Slice, Counts) {
  auto d = diamond();
  auto s = slice(d, d->object("top"));
  EXPECT_EQ(s.cat->num_objects(), 4u);
  EXPECT_TRUE(is_isomorphism(s.dom));
  auto t = two();
  auto s2 = slice(t, t->object("1"));
  EXPECT_EQ(s2.cat->num_objects(), 2u);
  EXPECT_EQ(s2.cat->num_morphisms(), 3u);
  auto f = finset(3);
  std::size_t want = 0;
  for (std::uint32_t i = 0; i < 4; ++i) want += f->hom(ObjId{i}, f->object("2")).size();
  EXPECT_EQ(want, 15u);
  EXPECT_EQ(slice(f, f->object("2")).cat->num_objects(), want);
  EXPECT_FALSE(find_law_violation(*slice(f, f->object("2")).cat));
  EXPECT_NO_THROW(validate_functor(slice(f, f->object("2")).dom));
}

TEST(Slice, PullbacksAgreeWithBase) {
  auto d = diamond();
  auto sd = slice(d, d->object("top"));
  for (const Cospan& k : all_cospans(*sd.cat)) {
    EXPECT_TRUE(slice_pullback_agrees(d, d->object("top"), k));
  }
  auto f = finset(3);
  auto sf = slice(f, f->object("2"));
  auto ks = all_cospans(*sf.cat);
  for (std::size_t i = 0; i < ks.size(); i += 37) {
    EXPECT_TRUE(slice_pullback_agrees(f, f->object("2"), ks[i]));
  }
  auto c = chain(4);
  auto sc = slice(c, c->object("3"));
  // objects (1, 1->3) and (2, 2->3); cospan (1 → 2 ← 2)
  MorId l = sc.cat->morphism("[1->2]:(1,1->3)->(2,2->3)");
  MorId r = sc.cat->id(sc.cat->object("(2,2->3)"));
  EXPECT_TRUE(slice_pullback_agrees(c, c->object("3"), {l, r}));
  EXPECT_EQ(sc.cat->name(pullback_cone(*sc.cat, {l, r})->apex), "(1,1->3)");
}

TEST(Comma, CountsAndCollapse) {
  auto fb = f_bad();
  auto cm = comma(fb, identity_functor(fb.target));
  EXPECT_EQ(cm.cat->num_objects(), 10u);
  EXPECT_FALSE(find_law_violation(*cm.cat));

  auto d = diamond();
  auto top = constant_functor(d, d, d->object("top"));
  auto c2 = comma(top, identity_functor(d));
  EXPECT_TRUE(is_isomorphism(c2.proj_left));

  auto other = one();
  EXPECT_THROW(comma(identity_functor(d), identity_functor(other)), Error);
}

TEST(LexFunctors, Examples) {
  auto d = diamond();
  EXPECT_TRUE(is_lex_category(*d));
  EXPECT_TRUE(is_lex_functor(identity_functor(d)));
  auto fb = f_bad();
  EXPECT_TRUE(preserves_terminal(fb));
  EXPECT_FALSE(preserves_pullbacks(fb));
  auto k = pullback_preservation_failure(fb);
  ASSERT_TRUE(k);
  auto top = constant_functor(d, d, d->object("top"));
  EXPECT_TRUE(preserves_terminal(top));
  EXPECT_TRUE(preserves_pullbacks(top));
  auto w = walking_cospan();
  EXPECT_THROW(preserves_pullbacks(identity_functor(w)), Error);
  EXPECT_THROW(preserves_terminal(identity_functor(preorder({"x", "y"}, {}))), Error);
}

TEST(Equivalence, Examples) {
  auto d = diamond();
  EXPECT_TRUE(is_equivalence(identity_functor(d)));
  auto i = iso2();
  EXPECT_TRUE(is_equivalence(monotone_functor(one(), i, std::vector<std::string>{"p"})));
  auto t = two();
  EXPECT_FALSE(is_equivalence(monotone_functor(one(), t, std::vector<std::string>{"0"})));
}

TEST(NaturalIso, IdentityAndFailure) {
  auto d = diamond();
  auto idf = identity_functor(d);
  NatTrans t{idf, idf, {}};
  for (std::uint32_t x = 0; x < d->num_objects(); ++x) t.component.push_back(d->id(ObjId{x}));
  EXPECT_TRUE(natural_iso(t));
  auto top = constant_functor(d, d, d->object("top"));
  NatTrans to_top{idf, top, {}};
  for (std::uint32_t x = 0; x < d->num_objects(); ++x) {
    to_top.component.push_back(d->hom(ObjId{x}, d->object("top")).front());
  }
  EXPECT_TRUE(is_natural(to_top));
  EXPECT_FALSE(natural_iso(to_top));
}

TEST(Opposite, DoubleOppositeMatches) {
  auto f = finset(2);
  auto op = opposite(*f);
  EXPECT_FALSE(find_law_violation(*op));
  auto opop = opposite(*op);
  for (MorId g : oracle::all_morphisms(*f)) {
    for (MorId h : f->out(f->tgt(g))) EXPECT_EQ(opop->compose(h, g), f->compose(h, g));
  }
}
