#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bnet/bounds.hpp"
#include "bnet/dynamics.hpp"
#include "bnet/harness.hpp"
#include "bnet/interaction.hpp"
#include "bnet/network.hpp"
#include "bnet/sgraph.hpp"

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

bnet::BooleanNetwork net(const std::string& text) { return bnet::parse_network(text); }

std::vector<std::string> state_strings(const std::vector<bnet::State>& states) {
  std::vector<std::string> out;
  out.reserve(states.size());
  for (const bnet::State& s : states) out.push_back(s.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boolean network analysis: dynamics, signed cycles, fixed-point bounds.";

  m.def("render_table", [](const std::string& text) {
    return bnet::render_network(net(text), bnet::NetworkFormat::table);
  },
        "Normalize a network file (formula or table) to its table form.");

  m.def("fixed_points",
        [](const std::string& text) { return state_strings(bnet::fixed_points(net(text))); });

  m.def("attractors", [](const std::string& text) {
    std::vector<std::vector<std::string>> out;
    for (const bnet::Attractor& a : bnet::attractors(net(text)))
      out.push_back(state_strings(a.states));
    return out;
  });

  m.def("interaction_graph", [](const std::string& text) {
    return bnet::render_signed_graph(bnet::global_graph(net(text)));
  });

  m.def("signed_cycles", [](const std::string& graph_text) {
    std::vector<std::string> out;
    for (const bnet::SignedCycle& c :
         bnet::enumerate_cycles(bnet::parse_signed_graph(graph_text)))
      out.push_back(bnet::cycle_to_string(c));
    return out;
  });

  m.def("graph_stats", [](const std::string& graph_text) {
    bnet::TransversalAnalysis tr =
        bnet::transversal_numbers(bnet::parse_signed_graph(graph_text));
    py::dict d;
    d["tau"] = tr.stats.tau;
    d["tau_plus"] = tr.stats.tau_plus;
    d["nu"] = tr.stats.nu;
    d["nu_plus"] = tr.stats.nu_plus;
    d["positive_girth"] = tr.stats.positive_girth
                              ? py::cast(*tr.stats.positive_girth)
                              : py::none();
    d["has_positive_cycle"] = tr.stats.has_positive_cycle;
    d["has_negative_cycle"] = tr.stats.has_negative_cycle;
    return d;
  });

  m.def("feedback_bound", [](const std::string& graph_text) {
    return bnet::feedback_bound(bnet::parse_signed_graph(graph_text));
  });

  m.def("coding_bound", [](const std::string& graph_text) {
    return bnet::coding_bound(bnet::parse_signed_graph(graph_text));
  });

  m.def("code_params", [](int n, int d) {
    bnet::CodeParams p = bnet::code_params(n, d);
    py::dict out;
    out["gilbert"] = py::make_tuple(p.gilbert.numerator(), p.gilbert.denominator());
    out["hamming"] = py::make_tuple(p.hamming.numerator(), p.hamming.denominator());
    out["exact"] = p.exact ? py::cast(*p.exact) : py::none();
    return out;
  });

  m.def("cycle_network", [](const std::string& signs) {
    std::vector<bnet::Sign> s;
    for (char c : signs) {
      if (c != '+' && c != '-') throw std::invalid_argument("signs must be + or -");
      s.push_back(c == '+' ? bnet::Sign::positive : bnet::Sign::negative);
    }
    return bnet::render_network(bnet::make_cycle_network(s), bnet::NetworkFormat::table);
  });

  m.def("verify_exhaustive", [](int n, int workers) {
    return bnet::run_theorem_suite(bnet::ExhaustiveScope{n}, workers).to_json();
  },
        py::arg("n"), py::arg("workers") = 1,
        "JSON report of the theorem suite over every network with n components.");

  m.def("verify_sampled", [](int n, std::uint64_t count, std::uint64_t seed, int workers) {
    bnet::SampledScope scope;
    scope.n = n;
    scope.count = count;
    scope.seed = seed;
    return bnet::run_theorem_suite(scope, workers).to_json();
  },
        py::arg("n"), py::arg("count"), py::arg("seed") = 1, py::arg("workers") = 1);

  m.def("estimate_phi", [](int n, std::uint64_t samples, std::uint64_t seed) {
    bnet::PhiEstimate est = bnet::estimate_phi(n, samples, seed);
    py::dict out;
    out["value"] = est.value;
    out["radius"] = est.radius;
    out["exact"] = est.exact;
    out["hits"] = est.hits;
    out["total"] = est.total;
    return out;
  },
        py::arg("n"), py::arg("samples") = 10000, py::arg("seed") = 1);

  m.def("max_fixed_points", [](const std::string& graph_text) {
    bnet::MaxFixedPoints r =
        bnet::max_fixed_points_over_graph(bnet::parse_signed_graph(graph_text));
    py::dict out;
    out["realizable"] = r.realizable;
    out["max_fixed_points"] = r.max_fixed_points;
    out["witness"] = r.witness ? py::cast(bnet::render_network(
                                     *r.witness, bnet::NetworkFormat::table))
                               : py::none();
    return out;
  });
}
