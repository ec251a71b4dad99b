#include "fibcat/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fibcat/errors.hpp"
#include "fibcat/fixtures.hpp"

namespace fibcat {

CatPtr random_poset(int n, std::uint64_t seed, int edge_percent) {
  if (n < 1) fail(ErrorKind::kSchema, "poset size must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::string> objs;
  std::vector<std::pair<std::string, std::string>> leq;
  for (int i = 0; i < n; ++i) objs.push_back("p" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (static_cast<int>(rng() % 100) < edge_percent) leq.emplace_back(objs[i], objs[j]);
    }
  }
  return preorder(objs, leq);
}

CatPtr random_lattice(int n, std::uint64_t seed) {
  if (n < 1 || n > 60) fail(ErrorKind::kSchema, "lattice size must be in 1..60");
  std::mt19937_64 rng(seed);
  const std::uint64_t full = (1ull << n) - 1;
  std::set<std::uint64_t> fam;
  // late attempts skip the random phase and only shrink the bottom, which
  // always reaches n sets
  for (int attempt = 0; static_cast<int>(fam.size()) < n; ++attempt) {
    fam = {full};
    int random_tries = attempt < 20 ? 8 * n : 0;
    while (static_cast<int>(fam.size()) < n) {
      std::uint64_t s;
      if (random_tries-- > 0) {
        s = rng() & full;
      } else {
        // drop one element of the bottom; adds exactly one set
        std::uint64_t bot = full;
        for (std::uint64_t t : fam) bot &= t;
        std::vector<int> bits;
        for (int i = 0; i < n; ++i) {
          if (bot >> i & 1) bits.push_back(i);
        }
        if (bits.empty()) break;
        s = bot & ~(1ull << bits[rng() % bits.size()]);
      }
      std::set<std::uint64_t> next = fam;
      next.insert(s);
      for (std::uint64_t t : fam) next.insert(s & t);
      if (static_cast<int>(next.size()) <= n) fam = std::move(next);
    }
  }
  std::vector<std::uint64_t> sets(fam.begin(), fam.end());
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::string> objs;
  std::vector<std::pair<std::string, std::string>> leq;
  for (int i = 0; i < n; ++i) objs.push_back("l" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && (sets[i] & sets[j]) == sets[i]) leq.emplace_back(objs[i], objs[j]);
    }
  }
  return preorder(objs, leq);
}

Functor random_monotone(const CatPtr& src, const CatPtr& tgt, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const FinCategory& S = *src;
  const FinCategory& T = *tgt;
  std::vector<std::uint32_t> order(S.num_objects());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return S.in(ObjId{a}).size() < S.in(ObjId{b}).size();
  });
  std::vector<ObjId> obj(S.num_objects());
  for (std::uint32_t x : order) {
    std::vector<ObjId> cand;
    for (std::uint32_t t = 0; t < T.num_objects(); ++t) {
      bool ok = true;
      for (MorId f : S.in(ObjId{x})) {
        ObjId y = S.src(f);
        if (y == ObjId{x}) continue;
        ok = ok && !T.hom(obj[y.v], ObjId{t}).empty();
      }
      if (ok) cand.push_back(ObjId{t});
    }
    if (cand.empty()) fail(ErrorKind::kFunctorialityViolation, "no monotone extension");
    obj[x] = cand[rng() % cand.size()];
  }
  return monotone_functor(src, tgt, obj);
}

GrothendieckData random_family(int n, int max_fiber, std::uint64_t seed, bool lattice_base) {
  if (max_fiber < 1) fail(ErrorKind::kSchema, "fiber size must be positive");
  std::mt19937_64 rng(seed);
  CatPtr base = lattice_base ? random_lattice(n, rng()) : random_poset(n, rng());
  const FinCategory& B = *base;
  // object order is a linear extension, so predecessors come first
  std::vector<int> len(B.num_objects());
  for (std::uint32_t b = 0; b < B.num_objects(); ++b) {
    int cap = max_fiber;
    for (MorId f : B.in(ObjId{b})) {
      if (B.src(f) != ObjId{b}) cap = std::min(cap, len[B.src(f).v]);
    }
    len[b] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
  }
  GrothendieckData g{base, {}, {}};
  for (int m : len) g.fiber_at.push_back(chain(m));
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    MorId um{u};
    ObjId a = B.src(um), b = B.tgt(um);
    std::vector<ObjId> obj;
    for (int x = 0; x < len[a.v]; ++x) {
      obj.push_back(ObjId{static_cast<std::uint32_t>(std::min(x, len[b.v] - 1))});
    }
    g.transition.push_back(monotone_functor(g.fiber_at[a.v], g.fiber_at[b.v], obj));
  }
  return g;
}

Gluing random_gluing(int n, std::uint64_t seed, const SizeGuard& guard) {
  std::mt19937_64 rng(seed);
  CatPtr b = random_lattice(n, rng());
  CatPtr c = random_lattice(n, rng());
  return artin_gluing(random_monotone(b, c, rng()), guard);
}

}  // namespace fibcat
