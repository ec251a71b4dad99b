#include "fibcat/fixtures.hpp"

#include <algorithm>
#include <map>

#include "fibcat/limits.hpp"

namespace fibcat {

CatPtr preorder(const std::vector<std::string>& objects,
                const std::vector<std::pair<std::string, std::string>>& leq) {
  const std::size_t n = objects.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[objects[i]] = i;
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (auto& [a, b] : leq) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end()) fail(ErrorKind::kUnknownObject, a + " or " + b);
    r[ia->second][ib->second] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = 1;

  CategoryBuilder b;
  for (auto& o : objects) b.add_object(o);
  std::vector<std::vector<MorId>> arrow(n, std::vector<MorId>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!r[i][j]) continue;
      std::string nm = i == j ? "id_" + objects[i] : objects[i] + "->" + objects[j];
      arrow[i][j] = b.add_morphism(nm, ObjId{static_cast<std::uint32_t>(i)},
                                   ObjId{static_cast<std::uint32_t>(j)});
      if (i == j) b.set_identity(ObjId{static_cast<std::uint32_t>(i)}, arrow[i][j]);
    }
  }
  return b.build(
      [&](MorId g, MorId f) { return arrow[b.src(f).v][b.tgt(g).v]; }, Laws::kTrust);
}

CatPtr one() { return preorder({"*"}, {}); }
CatPtr two() { return preorder({"0", "1"}, {{"0", "1"}}); }
CatPtr iso2() { return preorder({"p", "q"}, {{"p", "q"}, {"q", "p"}}); }

CatPtr diamond() {
  return preorder({"bot", "a", "b", "top"},
                  {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

CatPtr chain(int n) {
  std::vector<std::string> objs;
  std::vector<std::pair<std::string, std::string>> leq;
  for (int i = 0; i < n; ++i) {
    objs.push_back(std::to_string(i));
    if (i > 0) leq.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return preorder(objs, leq);
}

CatPtr walking_cospan() { return preorder({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}); }

namespace {

std::string function_name(int i, int j, const std::vector<int>& values) {
  std::string s = std::to_string(i) + "->" + std::to_string(j) + ":[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(values[k]);
  }
  return s + "]";
}

}  // namespace

CatPtr finset(int n) {
  CategoryBuilder b;
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<int>> values;
  std::map<std::pair<int, std::vector<int>>, MorId> index;  // (target, values)
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      std::vector<int> v(i, 0);
      while (true) {
        if (i == 0 || j > 0) {
          MorId f = b.add_morphism(function_name(i, j, v), ObjId{static_cast<std::uint32_t>(i)},
                                   ObjId{static_cast<std::uint32_t>(j)});
          values.push_back(v);
          index[{j, v}] = f;
          bool ident = i == j;
          for (int k = 0; k < i && ident; ++k) ident = v[k] == k;
          if (ident) b.set_identity(ObjId{static_cast<std::uint32_t>(i)}, f);
        }
        if (j == 0) break;
        int k = 0;
        while (k < i && ++v[k] == j) v[k++] = 0;
        if (k == i) break;
      }
    }
  }
  return b.build(
      [&](MorId g, MorId f) {
        std::vector<int> gf;
        for (int x : values[f.v]) gf.push_back(values[g.v][x]);
        return index.at({static_cast<int>(b.tgt(g).v), gf});
      },
      Laws::kTrust);
}

Functor monotone_functor(const CatPtr& src, const CatPtr& tgt, const std::vector<ObjId>& obj) {
  Functor f{src, tgt, obj, {}};
  if (obj.size() != src->num_objects()) {
    fail(ErrorKind::kFunctorialityViolation, "object map is not total");
  }
  for (std::uint32_t m = 0; m < src->num_morphisms(); ++m) {
    auto h = tgt->hom(obj[src->src(MorId{m}).v], obj[src->tgt(MorId{m}).v]);
    if (h.size() != 1) {
      fail(ErrorKind::kFunctorialityViolation,
           "no unique image for " + src->name(MorId{m}));
    }
    f.mor.push_back(h.front());
  }
  validate_functor(f);
  return f;
}

Functor monotone_functor(const CatPtr& src, const CatPtr& tgt,
                         const std::vector<std::string>& obj_names) {
  std::vector<ObjId> obj;
  for (auto& n : obj_names) obj.push_back(tgt->object(n));
  return monotone_functor(src, tgt, obj);
}

CatPtr down_set(const FinCategory& thin, ObjId a) {
  std::vector<std::string> objs;
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::uint32_t x = 0; x < thin.num_objects(); ++x) {
    if (!thin.hom(ObjId{x}, a).empty()) objs.push_back(thin.name(ObjId{x}));
  }
  for (auto& x : objs)
    for (auto& y : objs)
      if (x != y && !thin.hom(thin.object(x), thin.object(y)).empty()) leq.emplace_back(x, y);
  return preorder(objs, leq);
}

Functor meet_with(const CatPtr& lattice, ObjId a) {
  CatPtr down = down_set(*lattice, a);
  std::vector<ObjId> obj;
  for (std::uint32_t x = 0; x < lattice->num_objects(); ++x) {
    auto m = pullback_cone(*lattice, {lattice->hom(ObjId{x}, terminal_object(*lattice).value()).front(),
                                      lattice->hom(a, terminal_object(*lattice).value()).front()});
    if (!m) fail(ErrorKind::kMissingLimit, "no meet with " + lattice->name(a));
    obj.push_back(down->object(lattice->name(m->apex)));
  }
  return monotone_functor(lattice, down, obj);
}

Functor constant_functor(const CatPtr& src, const CatPtr& tgt, ObjId value) {
  Functor f{src, tgt, std::vector<ObjId>(src->num_objects(), value),
            std::vector<MorId>(src->num_morphisms(), tgt->id(value))};
  return f;
}

Functor f_bad() {
  return monotone_functor(diamond(), chain(4), std::vector<std::string>{"0", "1", "2", "3"});
}

GrothendieckData family_over_two(const CatPtr& p0, const CatPtr& p1, const Functor& t) {
  GrothendieckData g{two(), {p0, p1}, {}};
  for (std::uint32_t u = 0; u < g.base->num_morphisms(); ++u) {
    MorId um{u};
    if (!g.base->is_identity(um)) {
      g.transition.push_back(t);
    } else {
      g.transition.push_back(identity_functor(g.fiber_at[g.base->src(um).v]));
    }
  }
  return g;
}

GrothendieckData collapsing_family() {
  auto p0 = two();
  auto p1 = one();
  return family_over_two(p0, p1, constant_functor(p0, p1, ObjId{0}));
}

}  // namespace fibcat
