#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace fibcat::detail {

using Key3 = std::array<std::uint32_t, 3>;
using Key4 = std::array<std::uint32_t, 4>;

template <std::size_t N>
struct ArrayHash {
  std::size_t operator()(const std::array<std::uint32_t, N>& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : k) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using Key3Hash = ArrayHash<3>;
using Key4Hash = ArrayHash<4>;

}  // namespace fibcat::detail
