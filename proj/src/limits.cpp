#include "fibcat/limits.hpp"

#include <algorithm>
#include <array>

#include "keys.hpp"
#include "limit_cache.hpp"

namespace fibcat {

std::string encode_tuple(std::initializer_list<std::string_view> parts) {
  std::string s = "(";
  bool first = true;
  for (auto p : parts) {
    if (!first) s += ',';
    s += p;
    first = false;
  }
  s += ')';
  return s;
}

bool commutes(const FinCategory& c, const Square& s) {
  if (c.src(s.top) != c.src(s.left) || c.tgt(s.top) != c.src(s.right) ||
      c.tgt(s.left) != c.src(s.bottom) || c.tgt(s.right) != c.tgt(s.bottom)) {
    return false;
  }
  return c.compose(s.right, s.top) == c.compose(s.bottom, s.left);
}

Cospan cospan_of(const Square& s) { return {s.bottom, s.right}; }

Cone cone_of(const FinCategory& c, const Square& s) {
  return {c.src(s.top), s.left, s.top};
}

ConeSpace::ConeSpace(const FinCategory& c, Cospan k) : c_(c), k_(k) {
  if (c.tgt(k.left) != c.tgt(k.right)) {
    fail(ErrorKind::kTargetMismatch, "not a cospan: " + c.name(k.left) + ", " +
                                         c.name(k.right));
  }
  ObjId a = c.src(k.left), b = c.src(k.right);
  count_.assign(c.num_objects(), 0);
  for (std::uint32_t y = 0; y < c.num_objects(); ++y) {
    auto ha = c.hom(ObjId{y}, a);
    auto hb = c.hom(ObjId{y}, b);
    std::uint32_t n = 0;
    for (MorId p : ha) {
      MorId fp = c.compose(k.left, p);
      for (MorId q : hb) n += (fp == c.compose(k.right, q));
    }
    count_[y] = n;
  }
}

bool ConeSpace::is_cone(MorId p, MorId q) const {
  return c_.src(p) == c_.src(q) && c_.tgt(p) == c_.src(k_.left) &&
         c_.tgt(q) == c_.src(k_.right) &&
         c_.compose(k_.left, p) == c_.compose(k_.right, q);
}

bool ConeSpace::is_universal(const Cone& x) const {
  if (!is_cone(x.left, x.right) || c_.src(x.left) != x.apex) return false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::uint32_t y = 0; y < c_.num_objects(); ++y) {
    auto h = c_.hom(ObjId{y}, x.apex);
    if (h.size() != count_[y]) return false;
    if (h.size() < 2) continue;
    seen.clear();
    for (MorId m : h) {
      seen.emplace_back(c_.compose(x.left, m).v, c_.compose(x.right, m).v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

std::optional<MorId> ConeSpace::mediator(const Cone& from, const Cone& into) const {
  std::optional<MorId> found;
  for (MorId m : c_.hom(from.apex, into.apex)) {
    if (c_.compose(into.left, m) == from.left && c_.compose(into.right, m) == from.right) {
      if (found) return std::nullopt;
      found = m;
    }
  }
  return found;
}

std::vector<Cone> ConeSpace::cones() const {
  std::vector<Cone> out;
  ObjId a = c_.src(k_.left), b = c_.src(k_.right);
  for (std::uint32_t y = 0; y < c_.num_objects(); ++y) {
    if (count_[y] == 0) continue;
    for (MorId p : c_.hom(ObjId{y}, a)) {
      MorId fp = c_.compose(k_.left, p);
      for (MorId q : c_.hom(ObjId{y}, b)) {
        if (fp == c_.compose(k_.right, q)) out.push_back({ObjId{y}, p, q});
      }
    }
  }
  return out;
}

std::optional<Cone> ConeSpace::first_universal(
    const std::function<bool(const Cone&)>& pred) const {
  ObjId a = c_.src(k_.left), b = c_.src(k_.right);
  for (std::uint32_t y = 0; y < c_.num_objects(); ++y) {
    if (count_[y] == 0) continue;
    for (MorId p : c_.hom(ObjId{y}, a)) {
      MorId fp = c_.compose(k_.left, p);
      for (MorId q : c_.hom(ObjId{y}, b)) {
        if (fp != c_.compose(k_.right, q)) continue;
        Cone x{ObjId{y}, p, q};
        if (pred && !pred(x)) continue;
        if (is_universal(x)) return x;
      }
    }
  }
  return std::nullopt;
}

std::vector<Cospan> all_cospans(const FinCategory& c) {
  std::vector<Cospan> out;
  for (std::uint32_t x = 0; x < c.num_objects(); ++x) {
    auto in = c.in(ObjId{x});
    for (MorId f : in) {
      for (MorId g : in) out.push_back({f, g});
    }
  }
  return out;
}

std::optional<Cone> pullback_cone(const FinCategory& c, Cospan k) {
  auto& cache = c.limit_cache();
  auto key = detail::pair_key(k.left.v, k.right.v);
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.pullbacks.find(key);
    if (it != cache.pullbacks.end()) {
      if (!it->second) return std::nullopt;
      return Cone{it->second->apex, it->second->leg_left, it->second->leg_right};
    }
  }
  auto found = ConeSpace(c, k).first_universal();
  std::lock_guard lock(cache.mu);
  if (found) {
    cache.pullbacks[key] = detail::CachedCone{found->apex, found->left, found->right};
  } else {
    cache.pullbacks[key] = std::nullopt;
  }
  return found;
}

Cone require_pullback(const FinCategory& c, Cospan k) {
  if (auto x = pullback_cone(c, k)) return *x;
  fail(ErrorKind::kMissingPullback,
       "no pullback of (" + c.name(k.left) + ", " + c.name(k.right) + ")");
}

std::optional<ConeResult> pullback(const FinCategory& c, Cospan k) {
  ConeSpace space(c, k);
  auto x = space.first_universal();
  if (!x) return std::nullopt;
  ConeResult r{*x, true, {}};
  for (const Cone& y : space.cones()) {
    if (auto m = space.mediator(y, *x)) r.mediator_table.emplace_back(y, *m);
  }
  return r;
}

bool is_pullback(const FinCategory& c, const Square& s) {
  if (!commutes(c, s)) return false;
  return ConeSpace(c, cospan_of(s)).is_universal(cone_of(c, s));
}

std::optional<ConeResult> pushout(const FinCategory& c, Cospan span) {
  auto op = opposite(c);
  return pullback(*op, span);
}

bool has_all_pullbacks(const FinCategory& c) {
  for (std::uint32_t x = 0; x < c.num_objects(); ++x) {
    auto in = c.in(ObjId{x});
    for (std::size_t i = 0; i < in.size(); ++i) {
      for (std::size_t j = i; j < in.size(); ++j) {
        if (!pullback_cone(c, {in[i], in[j]})) return false;
      }
    }
  }
  return true;
}

bool has_all_pushouts(const FinCategory& c) { return has_all_pullbacks(*opposite(c)); }

bool is_lex_category(const FinCategory& c) {
  return terminal_object(c).has_value() && has_all_pullbacks(c);
}

bool preserves_terminal(const Functor& f) {
  auto z = terminal_object(*f.source);
  if (!z) fail(ErrorKind::kMissingLimit, "source has no terminal object");
  auto all = terminal_objects(*f.target);
  return std::find(all.begin(), all.end(), f(*z)) != all.end();
}

std::optional<Cospan> pullback_preservation_failure(const Functor& f) {
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  for (const Cospan& k : all_cospans(s)) {
    auto x = pullback_cone(s, k);
    if (!x) {
      fail(ErrorKind::kMissingLimit,
           "source lacks a pullback of (" + s.name(k.left) + ", " + s.name(k.right) + ")");
    }
    ConeSpace image(t, {f(k.left), f(k.right)});
    if (!image.is_universal({f(x->apex), f(x->left), f(x->right)})) return k;
  }
  return std::nullopt;
}

bool preserves_pullbacks(const Functor& f) { return !pullback_preservation_failure(f); }

bool is_lex_functor(const Functor& f) {
  return preserves_terminal(f) && preserves_pullbacks(f);
}

SliceCategory slice(const CatPtr& cp, ObjId a, const SizeGuard& guard) {
  const FinCategory& c = *cp;
  CategoryBuilder b;
  std::vector<MorId> structure(c.in(a).begin(), c.in(a).end());
  for (MorId f : structure) b.add_object(encode_tuple({c.name(c.src(f)), c.name(f)}));
  std::vector<MorId> under;
  std::unordered_map<detail::Key3, MorId, detail::Key3Hash> index;
  for (std::uint32_t i = 0; i < structure.size(); ++i) {
    for (std::uint32_t j = 0; j < structure.size(); ++j) {
      MorId f = structure[i], g = structure[j];
      for (MorId k : c.hom(c.src(f), c.src(g))) {
        if (c.compose(g, k) != f) continue;
        MorId m = b.add_morphism("[" + c.name(k) + "]:" + b.name(ObjId{i}) + "->" + b.name(ObjId{j}),
                                 ObjId{i}, ObjId{j});
        guard.check(b.num_morphisms(), "slice");
        under.push_back(k);
        index.emplace(detail::Key3{i, j, k.v}, m);
        if (k == c.id(c.src(f)) && i == j) b.set_identity(ObjId{i}, m);
      }
    }
  }
  auto composer = [&](MorId g, MorId f) {
    return index.at(detail::Key3{b.src(f).v, b.tgt(g).v, c.compose(under[g.v], under[f.v]).v});
  };
  auto cat = b.build(composer, Laws::kTrust);
  Functor dom{cat, cp, {}, {}};
  for (MorId f : structure) dom.obj.push_back(c.src(f));
  dom.mor = under;
  return {cat, std::move(dom), std::move(structure)};
}

CommaCategory comma(const Functor& F, const Functor& G, const SizeGuard& guard) {
  if (F.target.get() != G.target.get()) {
    fail(ErrorKind::kTargetMismatch, "comma legs have different codomains");
  }
  const FinCategory& A = *F.source;
  const FinCategory& B = *G.source;
  const FinCategory& C = *F.target;
  CategoryBuilder b;
  std::vector<ObjId> oa, ob;
  std::vector<MorId> structure;
  for (std::uint32_t x = 0; x < A.num_objects(); ++x) {
    for (std::uint32_t y = 0; y < B.num_objects(); ++y) {
      for (MorId f : C.hom(F(ObjId{x}), G(ObjId{y}))) {
        b.add_object(encode_tuple({A.name(ObjId{x}), B.name(ObjId{y}), C.name(f)}));
        oa.push_back(ObjId{x});
        ob.push_back(ObjId{y});
        structure.push_back(f);
      }
    }
  }
  std::vector<MorId> ma, mb;
  std::unordered_map<detail::Key4, MorId, detail::Key4Hash> index;
  const auto n = static_cast<std::uint32_t>(structure.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      for (MorId al : A.hom(oa[i], oa[j])) {
        MorId lhs_base = C.compose(structure[j], F(al));
        for (MorId be : B.hom(ob[i], ob[j])) {
          if (C.compose(G(be), structure[i]) != lhs_base) continue;
          MorId m = b.add_morphism(
              "[" + A.name(al) + "," + B.name(be) + "]:" + b.name(ObjId{i}) + "->" + b.name(ObjId{j}),
              ObjId{i}, ObjId{j});
          guard.check(b.num_morphisms(), "comma category");
          ma.push_back(al);
          mb.push_back(be);
          index.emplace(detail::Key4{i, j, al.v, be.v}, m);
          if (i == j && al == A.id(oa[i]) && be == B.id(ob[i])) b.set_identity(ObjId{i}, m);
        }
      }
    }
  }
  auto composer = [&](MorId g, MorId f) {
    return index.at(detail::Key4{b.src(f).v, b.tgt(g).v, A.compose(ma[g.v], ma[f.v]).v,
                                 B.compose(mb[g.v], mb[f.v]).v});
  };
  auto cat = b.build(composer, Laws::kTrust);
  Functor pl{cat, F.source, oa, ma};
  Functor pr{cat, G.source, ob, mb};
  return {cat, std::move(pl), std::move(pr), std::move(structure)};
}

bool slice_pullback_agrees(const CatPtr& cp, ObjId a, Cospan k) {
  SliceCategory s = slice(cp, a);
  const FinCategory& S = *s.cat;
  ConeSpace in_slice(S, k);
  ConeSpace in_base(*cp, {s.dom(k.left), s.dom(k.right)});
  bool any_slice = false, any_base = false;
  for (const Cone& x : in_slice.cones()) {
    bool us = in_slice.is_universal(x);
    bool ub = in_base.is_universal({s.dom(x.apex), s.dom(x.left), s.dom(x.right)});
    if (us != ub) return false;
    any_slice = any_slice || us;
  }
  any_base = in_base.first_universal().has_value();
  return any_slice == any_base;
}

}  // namespace fibcat
