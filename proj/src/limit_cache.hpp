#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "fibcat/category.hpp"

namespace fibcat::detail {

struct CachedCone {
  ObjId apex;
  MorId leg_left, leg_right;
};

// Memo of canonical pullbacks keyed by the cospan, shared by all copies of a
// category. Guarded for concurrent predicate evaluation.
struct LimitCache {
  std::mutex mu;
  std::unordered_map<std::uint64_t, std::optional<CachedCone>> pullbacks;
  std::optional<std::optional<ObjId>> terminal;
};

inline std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace fibcat::detail
