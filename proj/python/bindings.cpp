// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/cli.hpp"
#include "hyperturan/copies.hpp"
#include "hyperturan/error.hpp"
#include "hyperturan/expansion.hpp"
#include "hyperturan/patterns.hpp"
#include "hyperturan/rates.hpp"
#include "hyperturan/regularize.hpp"
#include "hyperturan/rturan.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hyperturan;

namespace {

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

Rational rational(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

py::dict relation_dict(const DensityRelation& rel) {
  py::dict d;
  d["r0"] = rel.r0;
  d["r"] = rel.r;
  d["core_density"] = fraction(rel.core_density);
  d["expanded"] = fraction(rel.expanded);
  d["lhs"] = fraction(rel.lhs);
  d["rhs"] = fraction(rel.rhs);
  d["holds"] = rel.holds;
  return d;
}

}  // namespace

PYBIND11_MODULE(hyperturan, m) {
  m.doc() = "Random Turan numbers of hypergraph expansions";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());
  py::register_exception<NotApplicableError>(m, "NotApplicableError", base.ptr());
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", base.ptr());
  py::register_exception<UndefinedDensityError>(m, "UndefinedDensityError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<int, std::size_t, std::vector<VertexSet>, std::optional<std::vector<int>>>(), py::arg("r"),
           py::arg("n"), py::arg("edges"), py::arg("partition") = std::nullopt)
      .def_static("complete", &Hypergraph::complete, py::arg("r"), py::arg("n"))
      .def_property_readonly("r", &Hypergraph::uniformity)
      .def_property_readonly("n", &Hypergraph::num_vertices)
      .def_property_readonly("edges", &Hypergraph::edges)
      .def("__len__", &Hypergraph::num_edges)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) {
        return "<Hypergraph r=" + std::to_string(h.uniformity()) + " n=" + std::to_string(h.num_vertices()) +
               " edges=" + std::to_string(h.num_edges()) + ">";
      });

  m.def("pattern", [](const std::string& name) { return parse_pattern(name).graph; }, py::arg("name"),
        "Registry pattern such as C4, K23, theta3,3, P4, M2.");
  m.def("expand", &expand, py::arg("f"), py::arg("r"));
  m.def("r_density", [](const Hypergraph& h) { return fraction(r_density(h).density); }, py::arg("h"));
  m.def("density_relation", [](const Hypergraph& f, int r) { return relation_dict(check_density_relation(f, r)); },
        py::arg("f"), py::arg("r"));

  m.def(
      "copies",
      [](const Hypergraph& host, const Hypergraph& f) {
        const auto found = enumerate_copies(host, f);
        std::vector<std::vector<EdgeId>> out;
        for (const auto& c : found.copies()) out.push_back(c.edges);
        return out;
      },
      py::arg("host"), py::arg("f"), "Copies of f in host as sorted host edge-id lists.");
  m.def("delta_table", [](const Hypergraph& host, const Hypergraph& f) { return delta_table(enumerate_copies(host, f)); },
        py::arg("host"), py::arg("f"));

  m.def(
      "superregularize",
      [](const Hypergraph& h) {
        const auto s = superregularize(h);
        py::dict d;
        d["subgraph"] = s.subgraph;
        d["original"] = s.original;
        d["delta"] = s.delta;
        d["slack"] = fraction(s.slack);
        d["pruned"] = s.pruned;
        return d;
      },
      py::arg("h"));

  m.def(
      "sample_gnp",
      [](std::size_t n, int r, const py::object& p, std::uint64_t seed) { return sample_gnp({n, r, rational(p), seed}); },
      py::arg("n"), py::arg("r"), py::arg("p"), py::arg("seed") = 0);
  m.def(
      "max_f_free",
      [](const Hypergraph& h, const Hypergraph& f, std::uint64_t budget) {
        const auto res = max_f_free(h, f, budget);
        py::dict d;
        d["value"] = res.value;
        d["witness"] = res.witness;
        d["optimal"] = res.optimal;
        d["nodes"] = res.nodes;
        d["valid"] = validate_extremal(h, f, res);
        return d;
      },
      py::arg("h"), py::arg("f"), py::arg("budget") = 10'000'000);
  m.def(
      "deletion_lower_bound",
      [](const Hypergraph& h, const Hypergraph& f) { return deletion_lower_bound(h, f).kept; }, py::arg("h"),
      py::arg("f"), "Host edge ids kept after the deletions.");
  m.def(
      "star_lower_bound",
      [](std::size_t n, const Hypergraph& core, int r) {
        const auto s = star_lower_bound(n, core, r);
        return py::make_tuple(s.star, s.checked && s.free);
      },
      py::arg("n"), py::arg("core"), py::arg("r"));

  m.def(
      "kst_threshold_analysis",
      [](int s, int t, int r) {
        const auto k = kst_threshold_analysis(s, t, r);
        py::dict d;
        d["alpha"] = fraction(k.alpha);
        d["beta"] = fraction(k.beta);
        d["criterion"] = fraction(k.criterion);
        d["criterion_holds"] = k.criterion_holds;
        d["beta_at_least_alpha"] = k.beta_at_least_alpha;
        d["identities"] = k.closing_identity && k.xy_identity && k.cancellation_identity && k.greedy_term_identity;
        return d;
      },
      py::arg("s"), py::arg("t"), py::arg("r"));
  m.def(
      "cycle_threshold",
      [](int half_length, int r) {
        const auto rep =
            turan_threshold(cycle_chain(half_length, r).back(), parse_pattern("C" + std::to_string(2 * half_length)));
        return py::make_tuple(fraction(rep.threshold_exponent), fraction(rep.plateau_exponent));
      },
      py::arg("half_length"), py::arg("r"), "(threshold exponent, plateau exponent) for the even cycle C_{2l}.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
