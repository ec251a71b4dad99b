#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fibcat/analysis.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/errors.hpp"
#include "fibcat/fixtures.hpp"
#include "fibcat/generators.hpp"
#include "fibcat/io.hpp"
#include "fibcat/limits.hpp"
#include "fibcat/theorem.hpp"

namespace py = pybind11;
using namespace fibcat;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorKind::kSchema, e.what());
  }
}

TheoremMode mode_of(const std::string& m) {
  if (m == "moens") return TheoremMode::kMoens;
  if (m == "generalized") return TheoremMode::kGeneralized;
  fail(ErrorKind::kSchema, "unknown mode " + m);
}

std::string dump(const Json& j) { return canonical_dump(j); }

std::string fixture(const std::string& name) {
  auto d = diamond();
  if (name == "diamond") return dump(category_to_json(*d));
  if (name == "id_diamond") return dump(functor_to_json(identity_functor(d)));
  if (name == "f_bad") return dump(functor_to_json(f_bad()));
  if (name == "const_top") return dump(functor_to_json(constant_functor(d, d, d->object("top"))));
  if (name == "cod_diamond") return dump(fibration_to_json(codomain_fibration(d)));
  if (name == "gl_f_bad") return dump(fibration_to_json(artin_gluing(f_bad()).fib));
  if (name == "collapsing") return dump(grothendieck_to_json(collapsing_family()));
  fail(ErrorKind::kSchema, "unknown fixture " + name);
}

py::dict check(const std::string& text, std::size_t max_morphisms) {
  SizeGuard g{max_morphisms};
  Json j = parse(text);
  std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  py::dict out;
  out["kind"] = kind;
  if (kind == "category") {
    CatPtr c = category_from_json(j, g);
    out["objects"] = c->num_objects();
    out["morphisms"] = c->num_morphisms();
  } else if (kind == "functor" || kind == "fibration") {
    Functor f = functor_from_json(j, g);
    out["objects"] = f.source->num_objects();
    out["morphisms"] = f.source->num_morphisms();
    if (kind == "fibration") Fibration p(f);
  } else if (kind == "grothendieck") {
    Grothendieck gr = grothendieck(grothendieck_from_json(j, g), g);
    out["objects"] = gr.fib.total().num_objects();
    out["morphisms"] = gr.fib.total().num_morphisms();
  } else {
    fail(ErrorKind::kSchema, "unknown file kind '" + kind + "'");
  }
  return out;
}

std::string gen(const std::string& kind, int size, std::uint64_t seed, int fiber, bool lattice_base) {
  if (kind == "poset") return dump(category_to_json(*random_poset(size, seed)));
  if (kind == "lattice") return dump(category_to_json(*random_lattice(size, seed)));
  if (kind == "finset") return dump(category_to_json(*finset(size)));
  if (kind == "groth") return dump(grothendieck_to_json(random_family(size, fiber, seed, lattice_base)));
  if (kind == "gluing") return dump(fibration_to_json(random_gluing(size, seed).fib));
  fail(ErrorKind::kSchema, "unknown generator kind " + kind);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite fibered category checks";

  static py::exception<Error> error(m, "FibcatError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("predicate_names", &predicate_names);
  m.def("fixture", &fixture, py::arg("name"));
  m.def("check", &check, py::arg("text"), py::arg("max_morphisms") = 20000);
  m.def(
      "analyze",
      [](const std::string& text, const std::vector<std::string>& predicates, unsigned jobs, bool timing) {
        Fibration p = fibration_from_json(parse(text));
        AnalysisReport r;
        {
          py::gil_scoped_release release;
          r = analyze(p, predicates, jobs);
        }
        return dump(report_to_json(p, r, timing));
      },
      py::arg("text"), py::arg("predicates") = std::vector<std::string>{}, py::arg("jobs") = 1,
      py::arg("timing") = false);
  m.def(
      "roundtrip",
      [](const std::string& text, const std::string& mode) {
        Json j = parse(text);
        TheoremMode md = mode_of(mode);
        Json out = Json::array();
        if (j.is_object() && j.contains("kind") && j["kind"] == "fibration") {
          out.push_back(roundtrip_to_json(roundtrip_psi_phi(fibration_from_json(j), md)));
        } else {
          Functor f = functor_from_json(j);
          out.push_back(roundtrip_to_json(roundtrip_phi_psi(f, md)));
          out.push_back(roundtrip_to_json(roundtrip_psi_phi(psi(f, md).fib, md)));
        }
        return dump(out);
      },
      py::arg("text"), py::arg("mode") = "moens");
  m.def(
      "gluing", [](const std::string& text) { return dump(fibration_to_json(artin_gluing(functor_from_json(parse(text))).fib)); },
      py::arg("text"));
  m.def(
      "free_cocart",
      [](const std::string& text) { return dump(fibration_to_json(free_cocartesian(functor_from_json(parse(text))).fib)); },
      py::arg("text"));
  m.def(
      "groth", [](const std::string& text) { return dump(fibration_to_json(grothendieck(grothendieck_from_json(parse(text))).fib)); },
      py::arg("text"));
  m.def(
      "arrow_cat",
      [](const std::string& text) { return dump(functor_to_json(arrow_category(category_from_json(parse(text))).cod, "fibration")); },
      py::arg("text"));
  m.def("gen", &gen, py::arg("kind"), py::arg("size") = 6, py::arg("seed") = 1, py::arg("fiber") = 3,
        py::arg("lattice_base") = false);
  m.attr("__version__") = std::string(kToolVersion);
}
