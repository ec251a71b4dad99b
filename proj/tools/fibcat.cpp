#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibcat/analysis.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/errors.hpp"
#include "fibcat/fixtures.hpp"
#include "fibcat/generators.hpp"
#include "fibcat/io.hpp"
#include "fibcat/limits.hpp"
#include "fibcat/theorem.hpp"

using namespace fibcat;

namespace {

struct Options {
  std::string input;
  std::string out;
  std::string predicates;
  std::string mode = "moens";
  std::string kind;
  std::uint64_t seed = 1;
  int size = 6;
  int fiber = 3;
  int edge_percent = 30;
  std::optional<std::size_t> max_morphisms;
  unsigned jobs = 1;
  bool no_timing = false;
  bool lattice_base = false;
};

SizeGuard guard_of(const Options& o) {
  SizeGuard g = SizeGuard::from_env();
  if (o.max_morphisms) g.max_morphisms = *o.max_morphisms;
  return g;
}

void emit(const Options& o, const Json& j) {
  if (o.out.empty()) {
    std::cout << canonical_dump(j);
  } else {
    write_json_file(o.out, j);
  }
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

TheoremMode mode_of(const Options& o) {
  if (o.mode == "moens") return TheoremMode::kMoens;
  if (o.mode == "generalized") return TheoremMode::kGeneralized;
  fail(ErrorKind::kSchema, "unknown mode " + o.mode);
}

int cmd_check(const Options& o) {
  SizeGuard g = guard_of(o);
  Json j = read_json_file(o.input);
  std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "category") {
    CatPtr c = category_from_json(j, g);
    std::cout << "ok: category with " << c->num_objects() << " objects, " << c->num_morphisms()
              << " morphisms\n";
  } else if (kind == "functor") {
    Functor f = functor_from_json(j, g);
    std::cout << "ok: functor on " << f.source->num_objects() << " objects\n";
  } else if (kind == "fibration") {
    Fibration p = fibration_from_json(j, g);
    std::cout << "ok: fibration with " << p.total().num_objects() << " total objects over "
              << p.base().num_objects() << " base objects\n";
  } else if (kind == "grothendieck") {
    Grothendieck gr = grothendieck(grothendieck_from_json(j, g), g);
    std::cout << "ok: grothendieck data with " << gr.fib.total().num_objects() << " total objects\n";
  } else {
    fail(ErrorKind::kSchema, "unknown file kind '" + kind + "'");
  }
  return 0;
}

int cmd_analyze(const Options& o) {
  Fibration p = fibration_from_json(read_json_file(o.input), guard_of(o));
  AnalysisReport r = analyze(p, split(o.predicates), o.jobs);
  emit(o, report_to_json(p, r, !o.no_timing));
  return r.all_hold() ? 0 : 3;
}

int cmd_gluing(const Options& o) {
  SizeGuard g = guard_of(o);
  Functor f = functor_from_json(read_json_file(o.input), g);
  emit(o, fibration_to_json(artin_gluing(f, g).fib));
  return 0;
}

int cmd_groth(const Options& o) {
  SizeGuard g = guard_of(o);
  emit(o, fibration_to_json(grothendieck(grothendieck_from_json(read_json_file(o.input), g), g).fib));
  return 0;
}

int cmd_free_cocart(const Options& o) {
  SizeGuard g = guard_of(o);
  Functor f = functor_from_json(read_json_file(o.input), g);
  emit(o, fibration_to_json(free_cocartesian(f, g).fib));
  return 0;
}

int cmd_arrow_cat(const Options& o) {
  SizeGuard g = guard_of(o);
  CatPtr c = category_from_json(read_json_file(o.input), g);
  emit(o, functor_to_json(arrow_category(c, g).cod, "fibration"));
  return 0;
}

int cmd_roundtrip(const Options& o) {
  SizeGuard g = guard_of(o);
  TheoremMode mode = mode_of(o);
  Json j = read_json_file(o.input);
  std::vector<RoundTripReport> reports;
  if (j.is_object() && j.contains("kind") && j["kind"] == "fibration") {
    reports.push_back(roundtrip_psi_phi(fibration_from_json(j, g), mode));
  } else {
    Functor f = functor_from_json(j, g);
    reports.push_back(roundtrip_phi_psi(f, mode));
    if (reports.back().verdict) reports.push_back(roundtrip_psi_phi(psi(f, mode).fib, mode));
  }
  Json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "roundtrip-reports";
  out["reports"] = Json::array();
  bool ok = true;
  for (const RoundTripReport& r : reports) {
    out["reports"].push_back(roundtrip_to_json(r));
    ok = ok && r.verdict;
  }
  emit(o, out);
  return ok ? 0 : 3;
}

int cmd_gen(const Options& o) {
  SizeGuard g = guard_of(o);
  if (o.kind == "poset") {
    emit(o, category_to_json(*random_poset(o.size, o.seed, o.edge_percent)));
  } else if (o.kind == "lattice") {
    CatPtr c = random_lattice(o.size, o.seed);
    if (!is_lex_category(*c)) fail(ErrorKind::kNotLex, "generated lattice is not lex");
    emit(o, category_to_json(*c));
  } else if (o.kind == "finset") {
    CatPtr c = finset(o.size);
    g.check(c->num_morphisms(), "finset");
    emit(o, category_to_json(*c));
  } else if (o.kind == "groth") {
    GrothendieckData d = random_family(o.size, o.fiber, o.seed, o.lattice_base);
    grothendieck(d, g);
    emit(o, grothendieck_to_json(d));
  } else if (o.kind == "gluing") {
    emit(o, fibration_to_json(random_gluing(o.size, o.seed, g).fib));
  } else {
    fail(ErrorKind::kSchema, "unknown generator kind " + o.kind);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite fibered category toolkit"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--max-morphisms", o.max_morphisms, "Size guard (default 20000 or FIBCAT_MAX_MORPHISMS)");
    c->add_option("--jobs", o.jobs, "Worker threads");
  };
  auto with_input = [&](CLI::App* c, const char* what) {
    c->add_option("path", o.input, what)->required();
    common(c);
  };
  auto with_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Output file (default stdout)"); };

  CLI::App* check = app.add_subcommand("check", "Validate a category, functor, fibration or Grothendieck file");
  with_input(check, "Input file");
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Run predicates on a fibration file");
  with_input(analyze_cmd, "Fibration file");
  with_out(analyze_cmd);
  analyze_cmd->add_option("--predicates", o.predicates, "Comma separated predicate names");
  analyze_cmd->add_flag("--no-timing", o.no_timing, "Leave per-predicate timings out of the report");
  CLI::App* gluing_cmd = app.add_subcommand("gluing", "Artin gluing of a functor");
  with_input(gluing_cmd, "Functor file");
  with_out(gluing_cmd);
  CLI::App* groth = app.add_subcommand("groth", "Grothendieck construction of strict data");
  with_input(groth, "Grothendieck data file");
  with_out(groth);
  CLI::App* free = app.add_subcommand("free-cocart", "Free cocartesian fibration on a functor");
  with_input(free, "Functor file");
  with_out(free);
  CLI::App* arrow = app.add_subcommand("arrow-cat", "Arrow category with its codomain fibration");
  with_input(arrow, "Category file");
  with_out(arrow);
  CLI::App* roundtrip = app.add_subcommand("roundtrip", "Round trips through fibrations and functors");
  with_input(roundtrip, "Fibration or functor file");
  with_out(roundtrip);
  roundtrip->add_option("--mode", o.mode, "moens or generalized");
  CLI::App* gen = app.add_subcommand("gen", "Seeded fixture generators");
  gen->add_option("kind", o.kind, "poset, lattice, finset, groth or gluing")->required();
  gen->add_option("--size", o.size, "Number of elements (finset: n)");
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--fiber", o.fiber, "Longest fiber chain (groth)");
  gen->add_option("--edge-percent", o.edge_percent, "Edge probability (poset)");
  gen->add_flag("--lattice-base", o.lattice_base, "Use a random lattice as the base (groth)");
  common(gen);
  with_out(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*check) return cmd_check(o);
    if (*analyze_cmd) return cmd_analyze(o);
    if (*gluing_cmd) return cmd_gluing(o);
    if (*groth) return cmd_groth(o);
    if (*free) return cmd_free_cocart(o);
    if (*arrow) return cmd_arrow_cat(o);
    if (*roundtrip) return cmd_roundtrip(o);
    if (*gen) return cmd_gen(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return 1;
}
