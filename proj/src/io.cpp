#include "fibcat/io.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "fibcat/errors.hpp"

namespace fibcat {
namespace {

template <class F>
auto schema_guard(std::string_view what, F f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorKind::kSchema, std::string(what) + ": " + e.what());
  }
}

void check_header(const Json& j, std::string_view kind) {
  if (!j.is_object()) fail(ErrorKind::kSchema, "expected an object for " + std::string(kind));
  if (!j.contains("format_version") || j["format_version"] != kFormatVersion) {
    fail(ErrorKind::kSchema, "unsupported or missing format_version");
  }
  if (!j.contains("kind") || j["kind"] != kind) {
    fail(ErrorKind::kSchema, "expected kind " + std::string(kind));
  }
}

Json header(std::string_view kind) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind;
  return j;
}

Json map_to_json(const Functor& f) {
  Json j;
  const FinCategory& S = *f.source;
  const FinCategory& T = *f.target;
  j["obj_map"] = Json::object();
  j["mor_map"] = Json::object();
  for (std::uint32_t x = 0; x < S.num_objects(); ++x) j["obj_map"][S.name(ObjId{x})] = T.name(f.obj[x]);
  for (std::uint32_t m = 0; m < S.num_morphisms(); ++m) j["mor_map"][S.name(MorId{m})] = T.name(f.mor[m]);
  return j;
}

Functor map_from_json(const Json& j, const CatPtr& src, const CatPtr& tgt) {
  Functor f{src, tgt, {}, {}};
  const Json& om = j.at("obj_map");
  const Json& mm = j.at("mor_map");
  if (!om.is_object() || !mm.is_object()) fail(ErrorKind::kSchema, "obj_map and mor_map must be objects");
  if (om.size() != src->num_objects() || mm.size() != src->num_morphisms()) {
    fail(ErrorKind::kSchema, "functor maps must cover every object and morphism exactly once");
  }
  for (std::uint32_t x = 0; x < src->num_objects(); ++x) {
    f.obj.push_back(tgt->object(om.at(src->name(ObjId{x})).get<std::string>()));
  }
  for (std::uint32_t m = 0; m < src->num_morphisms(); ++m) {
    f.mor.push_back(tgt->morphism(mm.at(src->name(MorId{m})).get<std::string>()));
  }
  validate_functor(f);
  return f;
}

Json arrow_json(const FinCategory& c, const std::string& role, MorId m) {
  return Json{{"role", role}, {"name", c.name(m)}, {"src", c.name(c.src(m))}, {"tgt", c.name(c.tgt(m))}};
}

std::vector<std::pair<std::string, MorId>> arrows_from_json(const FinCategory& c, const Json& j) {
  std::vector<std::pair<std::string, MorId>> out;
  for (const Json& a : j) {
    MorId m = c.morphism(a.at("name").get<std::string>());
    if (c.name(c.src(m)) != a.at("src") || c.name(c.tgt(m)) != a.at("tgt")) {
      fail(ErrorKind::kSchema, "witness arrow " + c.name(m) + " has the wrong endpoints");
    }
    out.emplace_back(a.at("role").get<std::string>(), m);
  }
  return out;
}

}  // namespace

Json category_to_json(const FinCategory& c) {
  Json j = header("category");
  j["objects"] = Json::array();
  j["morphisms"] = Json::array();
  j["identities"] = Json::object();
  j["composition"] = Json::array();
  for (std::uint32_t x = 0; x < c.num_objects(); ++x) {
    j["objects"].push_back(c.name(ObjId{x}));
    j["identities"][c.name(ObjId{x})] = c.name(c.id(ObjId{x}));
  }
  for (std::uint32_t m = 0; m < c.num_morphisms(); ++m) {
    MorId f{m};
    j["morphisms"].push_back(Json{{"id", c.name(f)}, {"src", c.name(c.src(f))}, {"tgt", c.name(c.tgt(f))}});
  }
  for (std::uint32_t g = 0; g < c.num_morphisms(); ++g) {
    MorId gm{g};
    if (c.is_identity(gm)) continue;
    for (MorId f : c.in(c.src(gm))) {
      if (c.is_identity(f)) continue;
      j["composition"].push_back(Json::array({c.name(gm), c.name(f), c.name(c.compose(gm, f))}));
    }
  }
  return j;
}

CatPtr category_from_json(const Json& j, const SizeGuard& guard) {
  check_header(j, "category");
  return schema_guard("category", [&] {
    const Json& objs = j.at("objects");
    const Json& mors = j.at("morphisms");
    if (!objs.is_array() || !mors.is_array()) fail(ErrorKind::kSchema, "objects and morphisms must be lists");
    guard.check(mors.size(), "category file");
    CategoryBuilder b;
    for (const Json& o : objs) b.add_object(o.get<std::string>());
    auto obj = [&](const Json& n) {
      auto x = b.find_object(n.get<std::string>());
      if (!x) fail(ErrorKind::kSchema, "unknown object " + n.get<std::string>());
      return *x;
    };
    auto mor = [&](const Json& n) {
      auto f = b.find_morphism(n.get<std::string>());
      if (!f) fail(ErrorKind::kSchema, "unknown morphism " + n.get<std::string>());
      return *f;
    };
    for (const Json& m : mors) b.add_morphism(m.at("id").get<std::string>(), obj(m.at("src")), obj(m.at("tgt")));
    const Json& ids = j.at("identities");
    if (!ids.is_object()) fail(ErrorKind::kSchema, "identities must be a map");
    for (auto it = ids.begin(); it != ids.end(); ++it) b.set_identity(obj(Json(it.key())), mor(it.value()));
    for (const Json& t : j.at("composition")) {
      if (!t.is_array() || t.size() != 3) fail(ErrorKind::kSchema, "composition entries are [g, f, g∘f]");
      b.set_composite(mor(t[0]), mor(t[1]), mor(t[2]));
    }
    return b.build(Laws::kCheck);
  });
}

Json functor_to_json(const Functor& f, std::string_view kind) {
  Json j = header(kind);
  j["source"] = category_to_json(*f.source);
  j["target"] = category_to_json(*f.target);
  Json m = map_to_json(f);
  j["obj_map"] = m["obj_map"];
  j["mor_map"] = m["mor_map"];
  return j;
}

Functor functor_from_json(const Json& j, const SizeGuard& guard) {
  if (!j.is_object() || !j.contains("kind") || (j["kind"] != "functor" && j["kind"] != "fibration")) {
    fail(ErrorKind::kSchema, "expected a functor or fibration file");
  }
  check_header(j, j["kind"].get<std::string>());
  return schema_guard("functor", [&] {
    CatPtr src = category_from_json(j.at("source"), guard);
    CatPtr tgt = category_from_json(j.at("target"), guard);
    return map_from_json(j, src, tgt);
  });
}

Json fibration_to_json(const Fibration& p) { return functor_to_json(p.proj(), "fibration"); }

Fibration fibration_from_json(const Json& j, const SizeGuard& guard) {
  return Fibration(functor_from_json(j, guard));
}

Json grothendieck_to_json(const GrothendieckData& g) {
  const FinCategory& B = *g.base;
  Json j = header("grothendieck");
  j["base"] = category_to_json(B);
  j["fibers"] = Json::object();
  j["transitions"] = Json::object();
  for (std::uint32_t b = 0; b < B.num_objects(); ++b) {
    j["fibers"][B.name(ObjId{b})] = category_to_json(*g.fiber_at[b]);
  }
  for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
    j["transitions"][B.name(MorId{u})] = map_to_json(g.transition[u]);
  }
  return j;
}

GrothendieckData grothendieck_from_json(const Json& j, const SizeGuard& guard) {
  check_header(j, "grothendieck");
  return schema_guard("grothendieck", [&] {
    GrothendieckData g;
    g.base = category_from_json(j.at("base"), guard);
    const FinCategory& B = *g.base;
    for (std::uint32_t b = 0; b < B.num_objects(); ++b) {
      g.fiber_at.push_back(category_from_json(j.at("fibers").at(B.name(ObjId{b})), guard));
    }
    for (std::uint32_t u = 0; u < B.num_morphisms(); ++u) {
      MorId um{u};
      g.transition.push_back(map_from_json(j.at("transitions").at(B.name(um)), g.fiber_at[B.src(um).v],
                                           g.fiber_at[B.tgt(um).v]));
    }
    return g;
  });
}

Json verdict_to_json(const Fibration& p, const PredicateVerdict& v) {
  Json j{{"name", v.name}, {"holds", v.holds}};
  if (!v.witness) {
    j["witness"] = nullptr;
    return j;
  }
  Json w{{"description", v.witness->description}, {"arrows", Json::array()}, {"base_arrows", Json::array()}};
  for (const auto& [role, m] : v.witness->arrows) w["arrows"].push_back(arrow_json(p.total(), role, m));
  for (const auto& [role, m] : v.witness->base_arrows) w["base_arrows"].push_back(arrow_json(p.base(), role, m));
  j["witness"] = w;
  return j;
}

PredicateVerdict verdict_from_json(const Fibration& p, const Json& j) {
  return schema_guard("verdict", [&] {
    PredicateVerdict v{j.at("name").get<std::string>(), j.at("holds").get<bool>(), std::nullopt};
    const Json& w = j.at("witness");
    if (!w.is_null()) {
      v.witness = Witness{w.at("description").get<std::string>(), arrows_from_json(p.total(), w.at("arrows")),
                          arrows_from_json(p.base(), w.at("base_arrows"))};
    }
    return v;
  });
}

Json roundtrip_to_json(const RoundTripReport& r) {
  Json j = header("roundtrip-report");
  j["tool_version"] = kToolVersion;
  j["direction"] = r.direction == RoundTripDirection::kPsiPhi ? "psi-phi" : "phi-psi";
  j["mode"] = r.mode == TheoremMode::kMoens ? "moens" : "generalized";
  j["verdict"] = r.verdict;
  j["failure"] = r.failure;
  j["checks"] = Json::array();
  for (const PredicateVerdict& c : r.checks) {
    Json cj{{"name", c.name}, {"holds", c.holds}};
    cj["description"] = c.witness ? c.witness->description : "";
    j["checks"].push_back(cj);
  }
  j["witness_functors"] = Json::array();
  for (const WitnessFunctor& w : r.witness_functors) {
    j["witness_functors"].push_back(
        Json{{"name", w.name}, {"equivalence", w.equivalence}, {"functor", functor_to_json(w.functor)}});
  }
  j["natural_isos"] = Json::array();
  for (const NamedNatTrans& t : r.natural_isos) {
    const FinCategory& S = *t.trans.from.source;
    const FinCategory& T = *t.trans.from.target;
    Json comps = Json::object();
    for (std::uint32_t x = 0; x < S.num_objects(); ++x) comps[S.name(ObjId{x})] = T.name(t.trans.component[x]);
    j["natural_isos"].push_back(Json{{"name", t.name}, {"components", comps}});
  }
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kSchema, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    fail(ErrorKind::kSchema, path.string() + ": " + e.what());
  }
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kSchema, "cannot write " + path.string());
  out << canonical_dump(j);
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace fibcat
