// Python bindings for the braidmono core: permutation arithmetic, the
// Bellingeri relations, the enumerator, the classifier and the verifier.
// Representations travel as dicts of one-line permutation strings, matching
// the CLI's record fields.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "braidmono/classify.hpp"
#include "braidmono/enumerate.hpp"
#include "braidmono/records.hpp"

namespace py = pybind11;
using namespace braidmono;

namespace {

MonodromyRep rep_from_dict(const py::dict& d) {
  MonodromyRep rep;
  rep.degree = d["degree"].cast<int>();
  rep.sigma = Perm::from_one_line(d["sigma"].cast<std::string>());
  rep.a1 = Perm::from_one_line(d["a1"].cast<std::string>());
  rep.a2 = Perm::from_one_line(d["a2"].cast<std::string>());
  rep.b1 = Perm::from_one_line(d["b1"].cast<std::string>());
  rep.b2 = Perm::from_one_line(d["b2"].cast<std::string>());
  return rep;
}

py::dict rep_to_dict(const MonodromyRep& rep) {
  py::dict d;
  d["degree"] = rep.degree;
  d["sigma"] = rep.sigma.to_one_line();
  d["a1"] = rep.a1.to_one_line();
  d["a2"] = rep.a2.to_one_line();
  d["b1"] = rep.b1.to_one_line();
  d["b2"] = rep.b2.to_one_line();
  return d;
}

py::dict result_to_dict(const EnumerationResult& result) {
  py::dict d;
  d["degree"] = result.degree;
  d["fix_sigma"] = result.fix_sigma;
  d["total_count"] = result.total_count;
  d["fixed_sigma_count"] = result.fixed_sigma_count;
  d["complete"] = result.complete;
  d["elapsed_seconds"] = result.elapsed.count();
  py::list solutions;
  for (const MonodromyRep& rep : result.solutions) solutions.append(rep_to_dict(rep));
  d["solutions"] = solutions;
  return d;
}

py::list classes_to_list(const std::vector<ConjugacyClassRecord>& classes) {
  py::list out;
  for (const ConjugacyClassRecord& cls : classes) {
    SurfaceReport surface = surface_report(cls);
    py::dict d = rep_to_dict(cls.representative);
    d["orbit_size"] = cls.orbit_size;
    d["stabilizer_order"] = cls.stabilizer_order;
    d["galois"] = surface.galois;
    d["transitive"] = surface.image_transitive;
    d["image_order"] = surface.image_order;
    d["chi"] = surface.chi;
    d["k_squared"] = surface.k_squared;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(braidmono, m) {
  m.doc() = "generic monodromy representations of the surface braid group B2(Sigma2)";

  py::class_<Perm>(m, "Perm")
      .def(py::init([](const std::string& one_line) { return Perm::from_one_line(one_line); }),
           py::arg("one_line"))
      .def_static("identity", &Perm::identity, py::arg("degree"))
      .def_static("transposition",
                  [](int degree, int i, int j) { return Perm::transposition(degree, i - 1, j - 1); },
                  py::arg("degree"), py::arg("i"), py::arg("j"),
                  "transposition of the 1-based points i and j")
      .def_property_readonly("degree", &Perm::degree)
      .def("one_line", &Perm::to_one_line)
      .def("cycles", &Perm::cycle_notation)
      .def("inverse", [](const Perm& p) { return inverse(p); })
      .def("cycle_type", [](const Perm& p) { return cycle_type(p); })
      .def("is_transposition", [](const Perm& p) { return is_transposition(p); })
      .def("__mul__", [](const Perm& p, const Perm& q) { return compose(p, q); },
           "apply self, then other")
      .def("conjugate", [](const Perm& p, const Perm& g) { return conjugate(p, g); },
           py::arg("g"), "g^-1 * self * g")
      .def("__eq__", [](const Perm& p, const Perm& q) { return p == q; })
      .def("__lt__", [](const Perm& p, const Perm& q) { return p < q; })
      .def("__hash__", [](const Perm& p) { return py::hash(py::str(p.to_one_line())); })
      .def("__repr__", [](const Perm& p) { return "Perm('" + p.to_one_line() + "')"; });

  m.def("summarize_group", [](const std::vector<Perm>& gens) {
    GroupSummary s = summarize_generated_group(gens);
    py::dict d;
    d["order"] = s.order;
    d["transitive"] = s.transitive;
    d["point_stabilizer_order"] = s.point_stabilizer_order;
    return d;
  }, py::arg("generators"));

  m.def("relations", [] {
    py::list out;
    for (const Relation& rel : bellingeri_relations()) {
      py::dict d;
      d["tag"] = tag_name(rel.tag);
      d["lhs"] = word_text(rel.lhs);
      d["rhs"] = word_text(rel.rhs);
      out.append(d);
    }
    return out;
  });

  m.def("satisfies_all_relations",
        [](const py::dict& rep) { return satisfies_all_relations(rep_from_dict(rep).to_assignment()); },
        py::arg("rep"));

  m.def("r2_candidates", [](const Perm& sigma) {
    py::list out;
    for (const Perm& x : r2_candidates(sigma)) out.append(x.to_one_line());
    return out;
  }, py::arg("sigma"));

  m.def("enumerate_degree",
        [](int degree, bool fix_sigma, int threads, std::optional<std::uint64_t> limit) {
          SearchConfig config;
          config.degree = degree;
          config.fix_sigma = fix_sigma;
          config.worker_count = threads;
          config.limit = limit;
          return result_to_dict(enumerate(config));
        },
        py::arg("degree"), py::arg("fix_sigma") = true, py::arg("threads") = 1,
        py::arg("limit") = py::none());

  m.def("brute_force_oracle",
        [](int degree) { return result_to_dict(brute_force_oracle(degree)); },
        py::arg("degree"));

  m.def("verify", [](const py::dict& rep) {
    VerifyReport report = verify(rep_from_dict(rep));
    py::dict d;
    d["pass"] = report.pass();
    d["failures"] = report.failure_names();
    return d;
  }, py::arg("rep"));

  m.def("classify_solutions", [](const py::list& reps) {
    std::vector<MonodromyRep> solutions;
    for (const auto& item : reps) solutions.push_back(rep_from_dict(item.cast<py::dict>()));
    return classes_to_list(classify(solutions));
  }, py::arg("solutions"));

  m.def("classify_degree", [](int degree, int threads) {
    SearchConfig config;
    config.degree = degree;
    config.worker_count = threads;
    return classes_to_list(classify(enumerate(config).solutions));
  }, py::arg("degree"), py::arg("threads") = 1);

  m.def("table", [](int max_degree, int threads) {
    py::list out;
    for (const TableRow& row : table_report(max_degree, threads)) {
      py::dict d;
      d["degree"] = row.degree;
      d["total"] = row.total;
      d["fixed_sigma"] = row.fixed_sigma;
      d["classes"] = row.class_count;
      d["k_squared"] = row.k_squared;
      out.append(d);
    }
    return out;
  }, py::arg("max_degree"), py::arg("threads") = 1);
}
