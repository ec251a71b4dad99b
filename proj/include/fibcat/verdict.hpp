#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibcat/category.hpp"

namespace fibcat {

// Concrete counterexample: named arrows of the total category and of the
// base, plus a short description.
struct Witness {
  std::string description;
  std::vector<std::pair<std::string, MorId>> arrows;
  std::vector<std::pair<std::string, MorId>> base_arrows;
};

struct PredicateVerdict {
  std::string name;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
};

inline PredicateVerdict pass(std::string name) { return {std::move(name), true, std::nullopt}; }
inline PredicateVerdict refute(std::string name, Witness w) {
  return {std::move(name), false, std::move(w)};
}

}  // namespace fibcat
