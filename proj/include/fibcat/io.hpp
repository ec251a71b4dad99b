#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fibcat/category.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/fibration.hpp"
#include "fibcat/functor.hpp"
#include "fibcat/theorem.hpp"
#include "fibcat/verdict.hpp"

namespace fibcat {

using Json = nlohmann::json;

inline constexpr std::string_view kFormatVersion = "1";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Category files: objects, morphisms {id, src, tgt}, identities, and the
// non-identity composition triples [g, f, g∘f] in id order. Composites with
// an identity may be omitted on input.
Json category_to_json(const FinCategory& c);
// Throws SchemaError on malformed data and LawViolation on failed laws.
CatPtr category_from_json(const Json& j, const SizeGuard& guard = {});

// Functor and fibration files embed their categories; kind is "functor" or
// "fibration".
Json functor_to_json(const Functor& f, std::string_view kind = "functor");
Functor functor_from_json(const Json& j, const SizeGuard& guard = {});
Json fibration_to_json(const Fibration& p);
Fibration fibration_from_json(const Json& j, const SizeGuard& guard = {});

// Base category, a fiber per base object and a transition per base morphism.
Json grothendieck_to_json(const GrothendieckData& g);
GrothendieckData grothendieck_from_json(const Json& j, const SizeGuard& guard = {});

// Witnesses carry names, sources and targets of their arrows.
Json verdict_to_json(const Fibration& p, const PredicateVerdict& v);
PredicateVerdict verdict_from_json(const Fibration& p, const Json& j);

Json roundtrip_to_json(const RoundTripReport& r);

// Throws SchemaError when the file is unreadable or not JSON.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
std::string canonical_dump(const Json& j);

std::string sha256_hex(std::string_view data);

}  // namespace fibcat
