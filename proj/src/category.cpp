#include "fibcat/category.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "limit_cache.hpp"

namespace fibcat {

SizeGuard SizeGuard::from_env() {
  SizeGuard g;
  if (const char* env = std::getenv("FIBCAT_MAX_MORPHISMS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) g.max_morphisms = v;
  }
  return g;
}

void SizeGuard::check(std::size_t morphisms, std::string_view what) const {
  if (morphisms > max_morphisms) {
    fail(ErrorKind::kSizeGuard, std::string(what) + " exceeds " +
                                    std::to_string(max_morphisms) +
                                    " morphisms");
  }
}

MorId FinCategory::compose_checked(MorId g, MorId f) const {
  if (f.v >= num_morphisms()) fail(ErrorKind::kUnknownMorphism, std::to_string(f.v));
  if (g.v >= num_morphisms()) fail(ErrorKind::kUnknownMorphism, std::to_string(g.v));
  if (tgt(f) != src(g)) {
    fail(ErrorKind::kTargetMismatch,
         "cannot compose " + name(g) + " after " + name(f));
  }
  return compose(g, f);
}

std::span<const MorId> FinCategory::hom(ObjId a, ObjId b) const {
  auto o = out(a);
  auto lo = std::lower_bound(o.begin(), o.end(), b, [&](MorId f, ObjId t) {
    return tgt(f) < t;
  });
  auto hi = std::upper_bound(lo, o.end(), b, [&](ObjId t, MorId f) {
    return t < tgt(f);
  });
  return {lo, hi};
}

std::optional<ObjId> FinCategory::find_object(std::string_view n) const {
  auto it = obj_index_.find(std::string(n));
  if (it == obj_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCategory::find_morphism(std::string_view n) const {
  auto it = mor_index_.find(std::string(n));
  if (it == mor_index_.end()) return std::nullopt;
  return it->second;
}

ObjId FinCategory::object(std::string_view n) const {
  if (auto x = find_object(n)) return *x;
  fail(ErrorKind::kUnknownObject, std::string(n));
}

MorId FinCategory::morphism(std::string_view n) const {
  if (auto f = find_morphism(n)) return *f;
  fail(ErrorKind::kUnknownMorphism, std::string(n));
}

std::optional<MorId> FinCategory::inverse(MorId f) const {
  for (MorId g : hom(tgt(f), src(f))) {
    if (compose(g, f) == id(src(f)) && compose(f, g) == id(tgt(f))) return g;
  }
  return std::nullopt;
}

ObjId CategoryBuilder::add_object(std::string name) {
  ObjId x{static_cast<std::uint32_t>(obj_names_.size())};
  if (!obj_index_.emplace(name, x).second) {
    fail(ErrorKind::kSchema, "duplicate object id " + name);
  }
  obj_names_.push_back(std::move(name));
  identity_.emplace_back();
  return x;
}

MorId CategoryBuilder::add_morphism(std::string name, ObjId s, ObjId t) {
  MorId f{static_cast<std::uint32_t>(mor_names_.size())};
  if (s.v >= obj_names_.size() || t.v >= obj_names_.size()) {
    fail(ErrorKind::kSchema, "morphism " + name + " has an unknown endpoint");
  }
  if (!mor_index_.emplace(name, f).second) {
    fail(ErrorKind::kSchema, "duplicate morphism id " + name);
  }
  mor_names_.push_back(std::move(name));
  src_.push_back(s);
  tgt_.push_back(t);
  return f;
}

void CategoryBuilder::set_identity(ObjId x, MorId f) {
  if (src_[f.v] != x || tgt_[f.v] != x) {
    fail(ErrorKind::kLawViolation, "identity " + mor_names_[f.v] +
                                       " is not an endomorphism of " +
                                       obj_names_[x.v]);
  }
  identity_[x.v] = f;
}

void CategoryBuilder::set_composite(MorId g, MorId f, MorId gf) {
  if (tgt_[f.v] != src_[g.v]) {
    fail(ErrorKind::kLawViolation, "composition entry (" + mor_names_[g.v] +
                                       ", " + mor_names_[f.v] +
                                       ") is not composable");
  }
  if (src_[gf.v] != src_[f.v] || tgt_[gf.v] != tgt_[g.v]) {
    fail(ErrorKind::kLawViolation, "composite of (" + mor_names_[g.v] + ", " +
                                       mor_names_[f.v] + ") is ill-typed");
  }
  auto [it, fresh] = composites_.emplace(detail::pair_key(g.v, f.v), gf);
  if (!fresh && it->second != gf) {
    fail(ErrorKind::kSchema, "conflicting composition entries for (" +
                                 mor_names_[g.v] + ", " + mor_names_[f.v] + ")");
  }
}

std::optional<ObjId> CategoryBuilder::find_object(std::string_view n) const {
  auto it = obj_index_.find(std::string(n));
  if (it == obj_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> CategoryBuilder::find_morphism(std::string_view n) const {
  auto it = mor_index_.find(std::string(n));
  if (it == mor_index_.end()) return std::nullopt;
  return it->second;
}

CatPtr CategoryBuilder::build(Laws laws) {
  for (std::size_t x = 0; x < obj_names_.size(); ++x) {
    if (!identity_[x]) {
      fail(ErrorKind::kLawViolation, "object " + obj_names_[x] + " has no identity");
    }
  }
  auto composer = [this](MorId g, MorId f) -> MorId {
    auto it = composites_.find(detail::pair_key(g.v, f.v));
    if (it != composites_.end()) return it->second;
    if (*identity_[src_[g.v].v] == g) return f;
    if (*identity_[tgt_[f.v].v] == f) return g;
    fail(ErrorKind::kLawViolation, "missing composition entry (" +
                                       mor_names_[g.v] + ", " +
                                       mor_names_[f.v] + ")");
  };
  return build(composer, laws);
}

CatPtr CategoryBuilder::build(const Composer& composer, Laws laws) {
  for (std::size_t x = 0; x < obj_names_.size(); ++x) {
    if (!identity_[x]) {
      fail(ErrorKind::kLawViolation, "object " + obj_names_[x] + " has no identity");
    }
  }
  std::shared_ptr<FinCategory> c(new FinCategory());
  const std::size_t n = obj_names_.size(), m = mor_names_.size();
  c->obj_names_ = obj_names_;
  c->mor_names_ = mor_names_;
  c->src_ = src_;
  c->tgt_ = tgt_;
  c->identity_.reserve(n);
  for (auto& i : identity_) c->identity_.push_back(*i);
  c->obj_index_ = obj_index_;
  c->mor_index_ = mor_index_;

  std::vector<MorId> ids(m);
  for (std::uint32_t i = 0; i < m; ++i) ids[i] = MorId{i};

  c->out_ = ids;
  std::stable_sort(c->out_.begin(), c->out_.end(), [&](MorId a, MorId b) {
    return std::tie(src_[a.v], tgt_[a.v]) < std::tie(src_[b.v], tgt_[b.v]);
  });
  c->in_ = ids;
  std::stable_sort(c->in_.begin(), c->in_.end(), [&](MorId a, MorId b) {
    return std::tie(tgt_[a.v], src_[a.v]) < std::tie(tgt_[b.v], src_[b.v]);
  });
  c->out_begin_.assign(n + 1, 0);
  c->in_begin_.assign(n + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    ++c->out_begin_[src_[i].v + 1];
    ++c->in_begin_[tgt_[i].v + 1];
  }
  for (std::size_t x = 0; x < n; ++x) {
    c->out_begin_[x + 1] += c->out_begin_[x];
    c->in_begin_[x + 1] += c->in_begin_[x];
  }
  c->in_pos_.assign(m, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::uint32_t k = c->in_begin_[x]; k < c->in_begin_[x + 1]; ++k) {
      c->in_pos_[c->in_[k].v] = k - c->in_begin_[x];
    }
  }
  c->comp_begin_.assign(m, 0);
  std::size_t total = 0;
  for (std::size_t g = 0; g < m; ++g) {
    c->comp_begin_[g] = total;
    ObjId s = src_[g];
    total += c->in_begin_[s.v + 1] - c->in_begin_[s.v];
  }
  c->comp_.resize(total);
  for (std::size_t g = 0; g < m; ++g) {
    ObjId s = src_[g];
    for (std::uint32_t k = c->in_begin_[s.v]; k < c->in_begin_[s.v + 1]; ++k) {
      MorId f = c->in_[k];
      MorId gf = composer(MorId{static_cast<std::uint32_t>(g)}, f);
      if (gf.v >= m || src_[gf.v] != src_[f.v] || tgt_[gf.v] != tgt_[g]) {
        fail(ErrorKind::kLawViolation,
             "composite of (" + mor_names_[g] + ", " + mor_names_[f.v] +
                 ") is ill-typed");
      }
      c->comp_[c->comp_begin_[g] + (k - c->in_begin_[s.v])] = gf;
    }
  }
  c->cache_ = std::make_shared<detail::LimitCache>();
  if (laws == Laws::kCheck) {
    if (auto v = find_law_violation(*c)) fail(ErrorKind::kLawViolation, v->message);
  }
  return c;
}

std::optional<LawViolationDetail> find_law_violation(const FinCategory& c) {
  for (std::uint32_t i = 0; i < c.num_morphisms(); ++i) {
    MorId f{i};
    if (c.compose(f, c.id(c.src(f))) != f) {
      return LawViolationDetail{"right-unit", {f, c.id(c.src(f))},
                                "right unit law fails for (" + c.name(f) +
                                    ", " + c.name(c.id(c.src(f))) + ")"};
    }
    if (c.compose(c.id(c.tgt(f)), f) != f) {
      return LawViolationDetail{"left-unit", {c.id(c.tgt(f)), f},
                                "left unit law fails for (" +
                                    c.name(c.id(c.tgt(f))) + ", " + c.name(f) + ")"};
    }
  }
  for (std::uint32_t i = 0; i < c.num_morphisms(); ++i) {
    MorId f{i};
    for (MorId g : c.out(c.tgt(f))) {
      MorId gf = c.compose(g, f);
      for (MorId h : c.out(c.tgt(g))) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          return LawViolationDetail{
              "associativity", {h, g, f},
              "associativity fails for (" + c.name(h) + ", " + c.name(g) +
                  ", " + c.name(f) + ")"};
        }
      }
    }
  }
  return std::nullopt;
}

CatPtr opposite(const FinCategory& c) {
  CategoryBuilder b;
  for (std::uint32_t x = 0; x < c.num_objects(); ++x) b.add_object(c.name(ObjId{x}));
  for (std::uint32_t f = 0; f < c.num_morphisms(); ++f) {
    b.add_morphism(c.name(MorId{f}), c.tgt(MorId{f}), c.src(MorId{f}));
  }
  for (std::uint32_t x = 0; x < c.num_objects(); ++x) {
    b.set_identity(ObjId{x}, c.id(ObjId{x}));
  }
  return b.build([&c](MorId g, MorId f) { return c.compose(f, g); }, Laws::kTrust);
}

std::vector<ObjId> terminal_objects(const FinCategory& c) {
  std::vector<ObjId> result;
  for (std::uint32_t z = 0; z < c.num_objects(); ++z) {
    bool ok = true;
    for (std::uint32_t x = 0; x < c.num_objects() && ok; ++x) {
      ok = c.hom(ObjId{x}, ObjId{z}).size() == 1;
    }
    if (ok) result.push_back(ObjId{z});
  }
  return result;
}

std::optional<ObjId> terminal_object(const FinCategory& c) {
  auto& cache = c.limit_cache();
  {
    std::lock_guard lock(cache.mu);
    if (cache.terminal) return *cache.terminal;
  }
  auto all = terminal_objects(c);
  std::optional<ObjId> z;
  if (!all.empty()) z = all.front();
  std::lock_guard lock(cache.mu);
  cache.terminal = z;
  return z;
}

MorId bang(const FinCategory& c, ObjId x, ObjId z) {
  auto h = c.hom(x, z);
  if (h.size() != 1) {
    fail(ErrorKind::kNoTerminal, c.name(z) + " is not terminal for " + c.name(x));
  }
  return h.front();
}

}  // namespace fibcat
