#include "fibcat/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include "fibcat/moens.hpp"

namespace fibcat {
namespace {

enum class Needs { kNothing, kCartesian, kBicartesian };

struct Entry {
  std::string name;
  Needs needs;
  std::function<std::vector<PredicateVerdict>(const Fibration&)> run;
};

template <class F>
Entry single(std::string name, Needs needs, F f) {
  return {std::move(name), needs, [f](const Fibration& p) { return std::vector<PredicateVerdict>{f(p)}; }};
}

template <class F>
Entry suite(std::string name, F f) {
  return {name, Needs::kBicartesian, [name, f](const Fibration& p) {
            CharacterizationReport r = f(p);
            std::vector<PredicateVerdict> out = r.items;
            if (r.agree()) {
              out.push_back(pass(name + "-agree"));
            } else {
              out.push_back(refute(name + "-agree", {"the equivalent conditions disagree", {}, {}}));
            }
            return out;
          }};
}

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = [] {
    std::vector<Entry> e;
    e.push_back(single("lift-uniqueness", Needs::kNothing, [](const Fibration& p) {
      if (auto w = lift_uniqueness_failure(p)) return refute("lift-uniqueness", *w);
      return pass("lift-uniqueness");
    }));
    e.push_back(single("cocartesian-closure", Needs::kNothing, cocartesian_closure));
    e.push_back(single("lexness-transfer", Needs::kCartesian, [](const Fibration& p) {
      LexnessReport r = lexness_transfer(p);
      if (!r.agree()) return refute("lexness-transfer", {"total and fiberwise lexness disagree", {}, {}});
      return pass("lexness-transfer");
    }));
    e.push_back(single("bcc", Needs::kBicartesian, satisfies_bcc));
    e.push_back(single("dual-bcc", Needs::kBicartesian, satisfies_dual_bcc));
    e.push_back(single("bcc-transport", Needs::kCartesian, bcc_via_transport));
    e.push_back(single("lex-bicartesian", Needs::kBicartesian, is_lex_bicartesian));
    e.push_back(single("stable-sums", Needs::kBicartesian, has_stable_sums));
    e.push_back(single("disjoint-sums", Needs::kBicartesian, has_disjoint_sums));
    e.push_back(single("vertically-stable-sums", Needs::kBicartesian, has_vertically_stable_sums));
    e.push_back(single("pre-moens", Needs::kBicartesian, is_pre_moens));
    e.push_back(single("moens", Needs::kBicartesian, is_moens));
    e.push_back(single("generalized-moens", Needs::kBicartesian, is_generalized_moens));
    e.push_back(single("zawadowski", Needs::kBicartesian, zawadowski_conditions));
    e.push_back(suite("disjointness", [](const Fibration& p) { return disjointness_characterizations(p); }));
    e.push_back(suite("extensivity", [](const Fibration& p) { return extensivity_characterizations(p); }));
    e.push_back(suite("moens-consequences", moens_consequences));
    return e;
  }();
  return t;
}

void require(const Fibration& p, Needs n) {
  if (n == Needs::kCartesian && !p.is_cartesian_fibration()) {
    fail(ErrorKind::kNotCartesian, "input is not a cartesian fibration");
  }
  if (n == Needs::kBicartesian && !p.is_bicartesian()) {
    fail(ErrorKind::kNotBicartesian, "input is not a bicartesian fibration");
  }
}

}  // namespace

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const Entry& e : table()) n.push_back(e.name);
    return n;
  }();
  return names;
}

bool AnalysisReport::all_hold() const {
  for (const PredicateOutcome& o : outcomes) {
    for (const PredicateVerdict& v : o.verdicts) {
      if (!v.holds) return false;
    }
  }
  return true;
}

AnalysisReport analyze(const Fibration& p, const std::vector<std::string>& predicates, unsigned jobs) {
  const bool explicit_list = !predicates.empty();
  std::vector<const Entry*> chosen;
  if (explicit_list) {
    for (const std::string& n : predicates) {
      auto it = std::find_if(table().begin(), table().end(), [&](const Entry& e) { return e.name == n; });
      if (it == table().end()) fail(ErrorKind::kSchema, "unknown predicate " + n);
      chosen.push_back(&*it);
    }
  } else {
    for (const Entry& e : table()) chosen.push_back(&e);
  }

  AnalysisReport r;
  r.input_digest = "sha256:" + sha256_hex(canonical_dump(fibration_to_json(p)));
  r.outcomes.resize(chosen.size());
  std::vector<std::exception_ptr> errors(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) {
      PredicateOutcome& o = r.outcomes[i];
      o.predicate = chosen[i]->name;
      auto t0 = std::chrono::steady_clock::now();
      try {
        require(p, chosen[i]->needs);
        o.verdicts = chosen[i]->run(p);
      } catch (const Error& e) {
        if (explicit_list || e.kind() == ErrorKind::kSizeGuard) {
          errors[i] = std::current_exception();
        } else {
          o.applicable = false;
          o.reason = e.what();
        }
      }
      o.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(chosen.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return r;
}

Json report_to_json(const Fibration& p, const AnalysisReport& r, bool with_timing) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "analysis-report";
  j["tool_version"] = kToolVersion;
  j["input_digest"] = r.input_digest;
  j["predicates"] = Json::array();
  j["results"] = Json::array();
  j["all_hold"] = r.all_hold();
  Json timing = Json::object();
  for (const PredicateOutcome& o : r.outcomes) {
    j["predicates"].push_back(o.predicate);
    Json res{{"predicate", o.predicate}, {"applicable", o.applicable}, {"reason", o.reason}};
    res["verdicts"] = Json::array();
    for (const PredicateVerdict& v : o.verdicts) res["verdicts"].push_back(verdict_to_json(p, v));
    j["results"].push_back(res);
    timing[o.predicate] = o.millis;
  }
  if (with_timing) j["timing_ms"] = timing;
  return j;
}

}  // namespace fibcat
