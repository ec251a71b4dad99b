#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fibcat/errors.hpp"

namespace fibcat {

struct ObjId {
  std::uint32_t v = 0;
  friend auto operator<=>(ObjId, ObjId) = default;
};

struct MorId {
  std::uint32_t v = 0;
  friend auto operator<=>(MorId, MorId) = default;
};

// Upper bound on the number of morphisms a construction may produce.
struct SizeGuard {
  std::size_t max_morphisms = 20000;

  // Reads FIBCAT_MAX_MORPHISMS, falling back to the default.
  static SizeGuard from_env();
  void check(std::size_t morphisms, std::string_view what) const;
};

namespace detail {
struct LimitCache;
}

class FinCategory {
 public:
  std::size_t num_objects() const { return obj_names_.size(); }
  std::size_t num_morphisms() const { return mor_names_.size(); }

  const std::string& name(ObjId x) const { return obj_names_[x.v]; }
  const std::string& name(MorId f) const { return mor_names_[f.v]; }

  ObjId src(MorId f) const { return src_[f.v]; }
  ObjId tgt(MorId f) const { return tgt_[f.v]; }
  MorId id(ObjId x) const { return identity_[x.v]; }
  bool is_identity(MorId f) const { return identity_[src_[f.v].v] == f; }

  // g ∘ f; requires tgt(f) == src(g).
  MorId compose(MorId g, MorId f) const {
    return comp_[comp_begin_[g.v] + in_pos_[f.v]];
  }
  // Checked variant, throws TargetMismatch.
  MorId compose_checked(MorId g, MorId f) const;

  // Arrows out of x ordered by (target, id); arrows into x ordered by (source, id).
  std::span<const MorId> out(ObjId x) const {
    return {out_.data() + out_begin_[x.v], out_.data() + out_begin_[x.v + 1]};
  }
  std::span<const MorId> in(ObjId x) const {
    return {in_.data() + in_begin_[x.v], in_.data() + in_begin_[x.v + 1]};
  }
  std::span<const MorId> hom(ObjId a, ObjId b) const;

  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;
  ObjId object(std::string_view name) const;   // throws UnknownObject
  MorId morphism(std::string_view name) const;  // throws UnknownMorphism

  bool is_iso(MorId f) const { return inverse(f).has_value(); }
  std::optional<MorId> inverse(MorId f) const;

  detail::LimitCache& limit_cache() const { return *cache_; }

 private:
  friend class CategoryBuilder;
  FinCategory() = default;

  std::vector<std::string> obj_names_, mor_names_;
  std::vector<ObjId> src_, tgt_;
  std::vector<MorId> identity_;
  std::vector<MorId> out_, in_;
  std::vector<std::uint32_t> out_begin_, in_begin_;
  std::vector<std::uint32_t> in_pos_;
  std::vector<std::size_t> comp_begin_;
  std::vector<MorId> comp_;
  std::unordered_map<std::string, ObjId> obj_index_;
  std::unordered_map<std::string, MorId> mor_index_;
  std::shared_ptr<detail::LimitCache> cache_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

enum class Laws { kCheck, kTrust };

// Incremental description of a category. Composites are either given
// explicitly or computed by a callback at build time.
class CategoryBuilder {
 public:
  using Composer = std::function<MorId(MorId g, MorId f)>;

  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId src, ObjId tgt);
  void set_identity(ObjId x, MorId f);
  void set_composite(MorId g, MorId f, MorId gf);

  std::size_t num_objects() const { return obj_names_.size(); }
  std::size_t num_morphisms() const { return mor_names_.size(); }
  ObjId src(MorId f) const { return src_[f.v]; }
  ObjId tgt(MorId f) const { return tgt_[f.v]; }
  const std::string& name(ObjId x) const { return obj_names_[x.v]; }
  const std::string& name(MorId f) const { return mor_names_[f.v]; }
  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  // Throws SchemaError on dangling or duplicate data and LawViolation on
  // missing identities/composites or failed unit and associativity laws.
  CatPtr build(Laws laws = Laws::kCheck);
  CatPtr build(const Composer& composer, Laws laws = Laws::kTrust);

 private:
  std::vector<std::string> obj_names_, mor_names_;
  std::vector<ObjId> src_, tgt_;
  std::vector<std::optional<MorId>> identity_;
  std::unordered_map<std::string, ObjId> obj_index_;
  std::unordered_map<std::string, MorId> mor_index_;
  std::unordered_map<std::uint64_t, MorId> composites_;
};

struct LawViolationDetail {
  std::string law;
  std::vector<MorId> arrows;
  std::string message;
};

// Unit and associativity laws, checked exhaustively.
std::optional<LawViolationDetail> find_law_violation(const FinCategory& c);

CatPtr opposite(const FinCategory& c);

std::vector<ObjId> terminal_objects(const FinCategory& c);
std::optional<ObjId> terminal_object(const FinCategory& c);  // lowest id

// Unique arrow x → z when z is terminal.
MorId bang(const FinCategory& c, ObjId x, ObjId z);

}  // namespace fibcat

template <>
struct std::hash<fibcat::ObjId> {
  std::size_t operator()(fibcat::ObjId x) const noexcept { return x.v; }
};
template <>
struct std::hash<fibcat::MorId> {
  std::size_t operator()(fibcat::MorId f) const noexcept { return f.v; }
};
