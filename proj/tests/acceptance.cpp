// Acceptance run over the seeded corpus: one PASS/FAIL line per criterion.
// usage: acceptance [--cli path/to/fibcat]
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fibcat/analysis.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/fixtures.hpp"
#include "fibcat/generators.hpp"
#include "fibcat/io.hpp"
#include "fibcat/moens.hpp"
#include "fibcat/theorem.hpp"
#include "oracles.hpp"

using namespace fibcat;

namespace {

constexpr int kSeeds = 20;

struct Instance {
  std::string name;
  Fibration p;
};

struct NamedGluing {
  std::string name;
  Gluing g;
};

struct Corpus {
  std::vector<std::pair<std::string, CatPtr>> generated, constructed;
  std::vector<NamedGluing> gluings;
  std::vector<std::pair<std::string, Grothendieck>> groths;
  std::vector<std::pair<std::string, Fibration>> codomains;
  std::vector<Instance> fibrations;
};

std::string seed_name(const std::string& kind, std::uint64_t s) { return kind + "#" + std::to_string(s); }

Corpus build_corpus() {
  Corpus c;
  auto d = diamond();
  for (std::uint64_t s = 1; s <= kSeeds; ++s) {
    c.generated.emplace_back(seed_name("poset", s), random_poset(6, s));
    c.generated.emplace_back(seed_name("lattice", s), random_lattice(6, s));
  }
  for (int n = 0; n <= 3; ++n) c.generated.emplace_back("finset" + std::to_string(n), finset(n));

  for (std::uint64_t s = 1; s <= kSeeds; ++s) {
    c.gluings.push_back({seed_name("gluing", s), random_gluing(6, s)});
    c.groths.emplace_back(seed_name("groth", s), grothendieck(random_family(5, 4, s, true)));
    c.codomains.emplace_back(seed_name("cod-lattice", s), codomain_fibration(random_lattice(6, s)));
  }
  c.gluings.push_back({"gl(id_Diamond)", artin_gluing(identity_functor(d))});
  c.gluings.push_back({"gl(F_bad)", artin_gluing(f_bad())});
  c.gluings.push_back({"gl(const_top)", artin_gluing(constant_functor(d, d, d->object("top")))});
  c.gluings.push_back({"gl(meet_a)", artin_gluing(meet_with(d, d->object("a")))});
  c.groths.emplace_back("collapsing", grothendieck(collapsing_family()));
  c.codomains.emplace_back("cod(Diamond)", codomain_fibration(d));
  c.codomains.emplace_back("cod(Chain3)", codomain_fibration(chain(3)));
  c.codomains.emplace_back("cod(FinSet1)", codomain_fibration(finset(1)));

  for (const auto& g : c.gluings) c.fibrations.push_back({g.name, g.g.fib});
  for (const auto& [n, g] : c.groths) c.fibrations.push_back({n, g.fib});
  for (const auto& [n, p] : c.codomains) c.fibrations.push_back({n, p});
  c.fibrations.push_back({"Diamond->One", Fibration(constant_functor(d, one(), ObjId{0}))});

  for (std::uint64_t s = 1; s <= kSeeds; ++s) {
    c.constructed.emplace_back(seed_name("arrow-lattice", s), arrow_category(random_lattice(6, s)).cat);
  }
  c.constructed.emplace_back("comma(id_Diamond,id_Diamond)", comma(identity_functor(d), identity_functor(d)).cat);
  for (const auto& g : c.gluings) {
    c.constructed.emplace_back(g.name, g.g.comma.cat);
    c.constructed.emplace_back("L(" + g.name + ")", free_cocartesian(g.g.fib.proj()).comma.cat);
  }
  for (const auto& [n, g] : c.groths) c.constructed.emplace_back(n, g.fib.total_ptr());
  for (const auto& [n, p] : c.codomains) c.constructed.emplace_back(n, p.total_ptr());
  return c;
}

bool lex_bicartesian(const Fibration& p) { return p.is_bicartesian() && is_lex_bicartesian(p).holds; }

struct Result {
  bool pass = true;
  std::string detail;
};

using Criterion = std::function<Result(const Corpus&)>;

Result law_suite(const Corpus& c) {
  int n = 0, bad = 0;
  std::string first;
  for (const auto* list : {&c.generated, &c.constructed}) {
    for (const auto& [name, cat] : *list) {
      ++n;
      if (auto v = find_law_violation(*cat)) {
        if (bad++ == 0) first = name + ": " + v->message;
      }
    }
  }
  return {bad == 0 && n > 0, std::to_string(n) + " categories, " + std::to_string(bad) + " violations" +
                                  (first.empty() ? "" : " (first: " + first + ")")};
}

Result lift_soundness(const Corpus& c) {
  int checked = 0, bad = 0;
  std::string first;
  auto note = [&](bool ok, const std::string& what) {
    ++checked;
    if (!ok && bad++ == 0) first = what;
  };
  for (const auto& [name, g] : c.gluings) {
    const FinCategory& B = *g.F.source;
    for (MorId u : oracle::all_morphisms(B)) {
      for (ObjId x : g.fib.fiber(B.src(u)).obj_incl) {
        MorId l = gluing_cocartesian_lift(g, u, x);
        note(g.fib.over(l) == u && oracle::is_cocartesian(g.fib.proj(), l), name + " cocartesian lift");
      }
      for (ObjId x : g.fib.fiber(B.tgt(u)).obj_incl) {
        MorId l = gluing_cartesian_lift(g, u, x);
        note(g.fib.over(l) == u && oracle::is_cartesian(g.fib.proj(), l), name + " cartesian lift");
      }
    }
  }
  for (const auto& [name, g] : c.groths) {
    const FinCategory& B = g.fib.base();
    for (MorId u : oracle::all_morphisms(B)) {
      for (ObjId e : g.fib.fiber(B.src(u)).obj_incl) {
        MorId l = g.cocartesian_lift(u, e);
        note(oracle::is_cocartesian(g.fib.proj(), l), name + " cocartesian lift");
      }
      for (ObjId e : g.fib.fiber(B.tgt(u)).obj_incl) {
        MorId l = g.fib.pull(u, e);
        note(oracle::is_cartesian(g.fib.proj(), l), name + " cartesian lift");
      }
    }
  }
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& [name, pi] = c.codomains[i];
    FreeCocartesian l = free_cocartesian(pi.proj());
    const FinCategory& B = pi.base();
    for (MorId v : oracle::all_morphisms(B)) {
      for (ObjId x : l.fib.fiber(B.tgt(v)).obj_incl) {
        MorId lift = free_cocartesian_cartesian_lift(l, pi, v, x);
        note(l.fib.over(lift) == v && oracle::is_cartesian(l.fib.proj(), lift), "L(" + name + ") cartesian lift");
      }
    }
  }
  int fibs = 0;
  for (const Instance& in : c.fibrations) {
    if (!in.p.is_bicartesian()) continue;
    ++fibs;
    if (auto w = lift_uniqueness_failure(in.p)) note(false, in.name + ": " + w->description);
    // flags of the precomputed tables against the full quantifier scan
    for (MorId f : oracle::all_morphisms(in.p.total())) {
      note(in.p.is_cocartesian(f) == oracle::is_cocartesian(in.p.proj(), f), in.name + " cocartesian flag");
      note(in.p.is_cartesian(f) == oracle::is_cartesian(in.p.proj(), f), in.name + " cartesian flag");
    }
  }
  return {bad == 0, std::to_string(checked) + " lift checks over " + std::to_string(fibs) +
                        " bicartesian fibrations, " + std::to_string(bad) + " mismatches" +
                        (first.empty() ? "" : " (first: " + first + ")")};
}

Result bcc_coherence(const Corpus& c) {
  int n = 0, failing = 0, bad = 0;
  std::string first;
  for (const Instance& in : c.fibrations) {
    if (!in.p.is_bicartesian()) continue;
    ++n;
    PredicateVerdict a = satisfies_bcc(in.p), b = satisfies_dual_bcc(in.p), t = bcc_via_transport(in.p);
    bool ok = a.holds == b.holds && b.holds == t.holds;
    if (ok && !a.holds) {
      ++failing;
      ok = witness_reverifies(in.p, a) && witness_reverifies(in.p, b) && witness_reverifies(in.p, t);
    }
    if (!ok && bad++ == 0) first = in.name;
  }
  bool fbad = false;
  for (const Instance& in : c.fibrations) {
    if (in.name == "gl(F_bad)") fbad = !satisfies_bcc(in.p).holds;
  }
  return {bad == 0 && fbad && n > 0, std::to_string(n) + " instances, " + std::to_string(failing) +
                                         " failing BCC with reverified witnesses, " + std::to_string(bad) +
                                         " disagreements" + (first.empty() ? "" : " (first: " + first + ")")};
}

Result gluing_theorem(const Corpus& c) {
  (void)c;
  auto d = diamond();
  std::vector<std::pair<std::string, Functor>> fs{{"id_Diamond", identity_functor(d)},
                                                  {"const_top", constant_functor(d, d, d->object("top"))},
                                                  {"meet_a", meet_with(d, d->object("a"))},
                                                  {"F_bad", f_bad()}};
  for (std::uint64_t s = 1; s <= 12; ++s) {
    fs.emplace_back(seed_name("monotone", s), random_monotone(random_lattice(5, s), random_lattice(5, s + 100), s));
    CatPtr l = random_lattice(6, s);
    fs.emplace_back(seed_name("meet", s), meet_with(l, ObjId{static_cast<std::uint32_t>(1 + s % 5)}));
  }
  int pos = 0, neg = 0, bad = 0;
  std::string first;
  for (const auto& [name, F] : fs) {
    bool pb = preserves_pullbacks(F);
    bool bcc = satisfies_bcc(artin_gluing(F).fib).holds;
    (pb ? pos : neg)++;
    if (pb != bcc && bad++ == 0) first = name;
  }
  return {bad == 0 && pos > 0 && neg > 0 && fs.size() >= 10,
          std::to_string(fs.size()) + " functors (" + std::to_string(pos) + " pullback preserving, " +
              std::to_string(neg) + " not), " + std::to_string(bad) + " mismatches" +
              (first.empty() ? "" : " (first: " + first + ")")};
}

Result lexness(const Corpus& c) {
  int n = 0, lex = 0, bad = 0;
  std::string first;
  for (const Instance& in : c.fibrations) {
    if (!in.p.is_cartesian_fibration() || !is_lex_category(in.p.base())) continue;
    ++n;
    LexnessReport r = lexness_transfer(in.p);
    bool ok = r.agree();
    if (ok && r.lex()) {
      ++lex;
      auto z = terminal_section_functor(in.p);
      ok = z && !functor_violation(*z) && is_lex_functor(*z);
    }
    if (!ok && bad++ == 0) first = in.name;
  }
  return {bad == 0 && n > 0, std::to_string(n) + " cartesian fibrations over lex bases (" + std::to_string(lex) +
                                 " lex, ζ lex in each), " + std::to_string(bad) + " disagreements" +
                                 (first.empty() ? "" : " (first: " + first + ")")};
}

Result characterizations(const Corpus& c) {
  int pre = 0, bc = 0, bad = 0;
  std::string first;
  for (const Instance& in : c.fibrations) {
    if (!lex_bicartesian(in.p)) continue;
    if (is_pre_moens(in.p).holds) {
      ++pre;
      if (!disjointness_characterizations(in.p).agree() && bad++ == 0) first = in.name + " disjointness";
    }
    if (satisfies_bcc(in.p).holds) {
      ++bc;
      if (!extensivity_characterizations(in.p).agree() && bad++ == 0) first = in.name + " extensivity";
    }
  }
  Fibration coll = grothendieck(collapsing_family()).fib;
  auto d = disjointness_characterizations(coll, HypothesisMode::kVerticalStability);
  bool rejected = d.items.size() == 4 && d.none_hold();
  for (const auto& v : d.items) rejected = rejected && witness_reverifies(coll, v);
  return {bad == 0 && rejected && pre > 0 && bc > 0,
          std::to_string(pre) + " pre-Moens and " + std::to_string(bc) + " lex BC instances agree" +
              (bad ? " except " + first : "") + "; collapsing fixture rejected by all four: " +
              (rejected ? "yes" : "no")};
}

Result consequences(const Corpus& c) {
  int n = 0, bad = 0;
  std::string first;
  for (const Instance& in : c.fibrations) {
    if (!lex_bicartesian(in.p) || !is_moens(in.p).holds) continue;
    ++n;
    for (const auto& v : moens_consequences(in.p).items) {
      if (!v.holds && bad++ == 0) first = in.name + " " + v.name;
    }
  }
  return {bad == 0 && n > 0, std::to_string(n) + " Moens instances, " + std::to_string(bad) + " failures" +
                                 (first.empty() ? "" : " (first: " + first + ")")};
}

bool passes(const RoundTripReport& r) { return r.verdict && reverify(r); }

Result round_trips(const Corpus& c) {
  (void)c;
  auto d = diamond();
  std::vector<std::pair<std::string, Functor>> fs{{"id_Diamond", identity_functor(d)},
                                                  {"const_top", constant_functor(d, d, d->object("top"))},
                                                  {"meet_a", meet_with(d, d->object("a"))}};
  for (std::uint64_t s = 1; s <= 10; ++s) {
    CatPtr l = random_lattice(6, s);
    fs.emplace_back(seed_name("meet", s), meet_with(l, ObjId{static_cast<std::uint32_t>(1 + s % 5)}));
  }
  int lex = 0, bad = 0;
  std::string first;
  for (const auto& [name, F] : fs) {
    if (!is_lex_functor(F)) continue;
    ++lex;
    bool ok = passes(roundtrip_phi_psi(F)) && passes(roundtrip_psi_phi(psi(F).fib));
    if (!ok && bad++ == 0) first = name;
  }
  std::vector<std::pair<std::string, Fibration>> ps{{"cod(Diamond)", codomain_fibration(d)},
                                                    {"cod(Chain3)", codomain_fibration(chain(3))},
                                                    {"cod(FinSet1)", codomain_fibration(finset(1))}};
  for (std::uint64_t s = 1; s <= 3; ++s) {
    ps.emplace_back(seed_name("cod-lattice", s), codomain_fibration(random_lattice(5, s)));
    CatPtr l = random_lattice(6, s + 40);
    ps.emplace_back(seed_name("gl-meet", s), artin_gluing(meet_with(l, ObjId{4})).fib);
  }
  int moens = 0;
  for (const auto& [name, p] : ps) {
    ++moens;
    bool ok = is_lex_functor(phi(p)) && passes(roundtrip_psi_phi(p));
    if (!ok && bad++ == 0) first = name;
  }
  return {bad == 0 && lex >= 10 && moens >= 5,
          std::to_string(lex) + " lex functors and " + std::to_string(moens) + " Moens fibrations, " +
              std::to_string(bad) + " failures" + (first.empty() ? "" : " (first: " + first + ")")};
}

Result generalized(const Corpus& c) {
  (void)c;
  Functor F = f_bad();
  Fibration p = artin_gluing(F).fib;
  bool gm = is_generalized_moens(p).holds;
  PredicateVerdict m = is_moens(p);
  bool not_moens = !m.holds && witness_reverifies(p, m);
  bool phi_psi = passes(roundtrip_phi_psi(F, TheoremMode::kGeneralized));
  bool psi_phi = passes(roundtrip_psi_phi(psi(F, TheoremMode::kGeneralized).fib, TheoremMode::kGeneralized));
  std::ostringstream s;
  s << std::boolalpha << "gl(F_bad) generalized Moens " << gm << ", Moens " << !not_moens << ", round trips "
    << phi_psi << "/" << psi_phi;
  return {gm && not_moens && phi_psi && psi_phi, s.str()};
}

Result zawadowski(const Corpus& c) {
  int n = 0, bad = 0, negative = 0;
  std::string first;
  for (const Instance& in : c.fibrations) {
    if (!lex_bicartesian(in.p)) continue;
    ++n;
    bool z = zawadowski_conditions(in.p).holds;
    bool g = is_generalized_moens(in.p).holds;
    negative += !z && !g;
    if (z != g && bad++ == 0) first = in.name;
  }
  Fibration coll = grothendieck(collapsing_family()).fib;
  bool coll_fails = !zawadowski_conditions(coll).holds && !is_generalized_moens(coll).holds;
  return {bad == 0 && coll_fails && n > 0, std::to_string(n) + " lex bicartesian instances (" +
                                               std::to_string(negative) + " failing both), " + std::to_string(bad) +
                                               " disagreements; collapsing fails both: " +
                                               (coll_fails ? "yes" : "no")};
}

std::string cli_path;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result determinism(const Corpus& c) {
  int n = 0, bad = 0;
  std::vector<const Instance*> inputs;
  for (const Instance& in : c.fibrations) {
    if (in.name == "gl(F_bad)" || in.name == "collapsing" || in.name == "gluing#1") inputs.push_back(&in);
  }
  for (const Instance* in : inputs) {
    ++n;
    std::string a = canonical_dump(report_to_json(in->p, analyze(in->p, {}, 1), false));
    std::string b = canonical_dump(report_to_json(in->p, analyze(in->p, {}, 4), false));
    bad += a != b;
  }
  std::string cli = "library only";
  if (!cli_path.empty()) {
    auto dir = std::filesystem::temp_directory_path() / ("fibcat_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    int runs = 0;
    for (const Instance* in : inputs) {
      auto input = dir / "input.json";
      write_json_file(input, fibration_to_json(in->p));
      std::string out[2];
      for (int k = 0; k < 2; ++k) {
        auto path = dir / ("report" + std::to_string(k) + ".json");
        std::string cmd = "\"" + cli_path + "\" analyze \"" + input.string() + "\" --no-timing --jobs " +
                          std::to_string(1 + 3 * k) + " --out \"" + path.string() + "\" > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        if (rc == -1) ++bad;
        out[k] = slurp(path);
      }
      ++runs;
      bad += out[0].empty() || out[0] != out[1];
    }
    std::filesystem::remove_all(dir);
    cli = std::to_string(runs) + " CLI report pairs";
  }
  return {bad == 0, std::to_string(n) + " inputs, " + cli + ", " + std::to_string(bad) + " differences"};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
  }
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  Corpus corpus = build_corpus();
  double build_s = std::chrono::duration<double>(clock::now() - t0).count();
  std::cout << "corpus: " << corpus.generated.size() << " generated categories, " << corpus.fibrations.size()
            << " fibrations (" << build_s << " s)\n";

  std::vector<std::pair<std::string, Criterion>> criteria{
      {"law suite", law_suite},
      {"lift soundness", lift_soundness},
      {"BCC coherence", bcc_coherence},
      {"gluing theorem", gluing_theorem},
      {"lexness transfer", lexness},
      {"characterization suites", characterizations},
      {"Moens consequences", consequences},
      {"Moens round trips", round_trips},
      {"generalized mode", generalized},
      {"Zawadowski equivalence", zawadowski},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t = clock::now();
    Result r;
    try {
      r = criteria[i].second(corpus);
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(clock::now() - t).count();
    if (secs > 60) {
      r.pass = false;
      r.detail += " [over the 60 s budget]";
    }
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << r.detail
              << " (" << secs << " s)\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
