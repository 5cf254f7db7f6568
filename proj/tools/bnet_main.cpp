// Command-line front end: analysis, dynamics, signed-graph inspection, the
// theorem-verification suite, estimators and generators.
//
// Exit codes: 0 success, 1 theorem violations found, 2 usage/input errors.

#include "bnet/bounds.hpp"
#include "bnet/dynamics.hpp"
#include "bnet/harness.hpp"
#include "bnet/interaction.hpp"
#include "bnet/network.hpp"
#include "bnet/sgraph.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string join_states(const std::vector<bnet::State>& states) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ' ';
    out += states[i].to_string();
  }
  return out;
}

std::string vertex_list(const std::vector<int>& vs) {
  if (vs.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i] + 1);
  }
  return out;
}

void print_arcs(std::ostream& out, const bnet::SignedDigraph& g) {
  for (const bnet::SignedArc& arc : g.arcs()) {
    out << "  " << arc.source + 1 << " -> " << arc.target + 1 << ' '
        << bnet::sign_char(arc.sign) << "\n";
  }
}

void print_stats(std::ostream& out, const bnet::TransversalAnalysis& tr) {
  const bnet::GraphStats& s = tr.stats;
  out << "positive cycle: " << (s.has_positive_cycle ? "yes" : "no") << "\n";
  out << "negative cycle: " << (s.has_negative_cycle ? "yes" : "no") << "\n";
  out << "g+ = ";
  if (s.positive_girth)
    out << *s.positive_girth << "\n";
  else
    out << "inf\n";
  out << "tau = " << s.tau << "\n";
  out << "tau+ = " << s.tau_plus << "\n";
  out << "nu = " << s.nu << "\n";
  out << "nu+ = " << s.nu_plus << "\n";
  out << "feedback vertex set: " << vertex_list(tr.feedback_vertex_set) << "\n";
  out << "positive feedback vertex set: " << vertex_list(tr.positive_feedback_vertex_set)
      << "\n";
}

int cmd_analyze(const std::string& path, bool local_graphs) {
  bnet::BooleanNetwork f = bnet::parse_network(read_file(path));
  bnet::NetworkAnalysis a = bnet::analyze_network(std::move(f));
  std::ostream& out = std::cout;

  out << "components: " << a.f.n() << "\n";
  out << bnet::render_network(a.f, bnet::NetworkFormat::table);
  out << "fixed points: "
      << (a.fixed_points.empty() ? "none" : join_states(a.fixed_points)) << "\n";
  out << "attractors: " << a.attractors.size() << "\n";
  for (std::size_t i = 0; i < a.attractors.size(); ++i) {
    out << "attractor " << i + 1 << ": " << join_states(a.attractors[i].states)
        << (a.attractors[i].fixed_point() ? " (fixed point)" : " (cyclic)") << "\n";
  }

  out << "interaction graph:\n";
  print_arcs(out, a.global);
  print_stats(out, a.transversal);
  out << "signed cycles: " << a.transversal.cycles.size() << "\n";
  for (const bnet::SignedCycle& c : a.transversal.cycles) {
    out << "  " << bnet::cycle_to_string(c) << "\n";
  }
  out << "common positive transversal of local graphs: "
      << vertex_list(a.common_positive_fvs) << "\n";
  out << "feedback bound: " << bnet::feedback_bound(a.global) << "\n";
  out << "coding bound: " << a.coding_bound_value << "\n";
  out << "monotone: " << (bnet::is_monotone(a.f) ? "yes" : "no") << "\n";

  if (a.fixed_points.size() <= 64) {
    out << "fixed-point poset: lattice = "
        << (a.fixed_points.empty() ? "no (empty)"
                                   : (bnet::is_lattice(a.fixed_points) ? "yes" : "no"))
        << ", max chain = " << bnet::max_chain_length(a.fixed_points)
        << ", max antichain = " << bnet::max_antichain_size(a.fixed_points) << "\n";
  } else {
    out << "fixed-point poset: skipped (more than 64 fixed points)\n";
  }

  if (local_graphs) {
    for (std::uint32_t x = 0; x < a.f.state_count(); ++x) {
      out << "local graph at " << bnet::State(a.f.n(), x).to_string() << ":\n";
      print_arcs(out, a.locals[x]);
    }
  }
  return 0;
}

int cmd_dynamics(const std::string& path, const std::string& kind,
                 const std::string& dot_path, bool mark_attractors) {
  bnet::BooleanNetwork f = bnet::parse_network(read_file(path));
  const bool async = kind == "async";
  if (!async && mark_attractors) {
    throw std::invalid_argument("--mark-attractors requires --kind async");
  }
  bnet::TransitionGraph g(f, async ? bnet::UpdateMode::asynchronous
                                   : bnet::UpdateMode::synchronous);
  if (!dot_path.empty()) {
    write_file(dot_path, bnet::transition_graph_dot(f, g, mark_attractors));
    std::cout << "wrote " << dot_path << "\n";
    return 0;
  }
  std::cout << "update: " << (async ? "asynchronous" : "synchronous") << "\n";
  std::cout << "states: " << g.state_count() << "\n";
  for (std::uint32_t x = 0; x < g.state_count(); ++x) {
    std::cout << bnet::State(f.n(), x).to_string() << " ->";
    for (std::uint32_t y : g.successors(x)) {
      std::cout << ' ' << bnet::State(f.n(), y).to_string();
    }
    std::cout << "\n";
  }
  if (async) {
    std::vector<bnet::Attractor> atts = bnet::attractors(f);
    std::cout << "attractors: " << atts.size() << "\n";
    for (std::size_t i = 0; i < atts.size(); ++i) {
      std::cout << "attractor " << i + 1 << ": " << join_states(atts[i].states)
                << (atts[i].fixed_point() ? " (fixed point)" : " (cyclic)") << "\n";
    }
  }
  return 0;
}

int cmd_graph(const std::string& path) {
  bnet::SignedDigraph g = bnet::parse_signed_graph(read_file(path));
  bnet::TransversalAnalysis tr = bnet::transversal_numbers(g);
  std::ostream& out = std::cout;

  out << "vertices: " << g.vertex_count() << "\n";
  out << "arcs: " << g.arcs().size() << "\n";
  print_arcs(out, g);
  out << "signed cycles: " << tr.cycles.size() << "\n";
  for (const bnet::SignedCycle& c : tr.cycles) {
    out << "  " << bnet::cycle_to_string(c) << "\n";
  }
  print_stats(out, tr);
  out << "disjoint cycle packing: " << tr.disjoint_cycles.size() << "\n";
  out << "disjoint positive packing: " << tr.disjoint_positive_cycles.size() << "\n";
  out << "feedback bound: " << bnet::feedback_bound(g) << "\n";
  out << "coding bound: " << bnet::coding_bound(g) << "\n";

  bnet::Digraph reduction = bnet::even_cycle_reduction(g);
  out << "even-cycle reduction: " << reduction.vertex_count << " vertices, "
      << reduction.arcs.size() << " arcs\n";

  const bool sc = bnet::is_strongly_connected(g);
  out << "strongly connected: " << (sc ? "yes" : "no") << "\n";
  if (sc) {
    bnet::SwitchingResult sw = bnet::positive_switching(g);
    if (sw.sigma) {
      std::vector<int> flips;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if ((*sw.sigma)[v] == -1) flips.push_back(v);
      }
      out << "switching to all-positive: flip " << vertex_list(flips) << "\n";
    } else {
      out << "switching to all-positive: none (" << bnet::cycle_to_string(*sw.negative_cycle)
          << ")\n";
    }
  }
  out << "r18 hypothesis (positive): "
      << (bnet::r18_hypothesis(g, bnet::Sign::positive) ? "yes" : "no") << "\n";
  out << "r18 hypothesis (negative): "
      << (bnet::r18_hypothesis(g, bnet::Sign::negative) ? "yes" : "no") << "\n";
  return 0;
}

bnet::Scope parse_scope(const std::string& text) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ':')) parts.push_back(piece);
  auto to_u64 = [&](const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number in scope: " + s);
    return static_cast<std::uint64_t>(v);
  };
  if (parts.size() == 2 && parts[0] == "exhaustive") {
    return bnet::ExhaustiveScope{static_cast<int>(to_u64(parts[1]))};
  }
  if (parts.size() == 3 && parts[0] == "sampled") {
    bnet::SampledScope s;
    s.n = static_cast<int>(to_u64(parts[1]));
    s.count = to_u64(parts[2]);
    return s;
  }
  throw std::invalid_argument("scope must be exhaustive:N or sampled:N:COUNT");
}

int cmd_verify(const std::string& scope_text, std::uint64_t seed,
               const std::string& json_path, int workers) {
  bnet::Scope scope = parse_scope(scope_text);
  if (auto* s = std::get_if<bnet::SampledScope>(&scope)) s->seed = seed;
  bnet::SuiteReport report = bnet::run_theorem_suite(scope, workers);
  std::cout << report.to_text();
  if (!json_path.empty()) write_file(json_path, report.to_json());
  return report.ok() ? 0 : 1;
}

int cmd_phi(int n, std::uint64_t samples, std::uint64_t seed) {
  bnet::PhiEstimate est = bnet::estimate_phi(n, samples, seed);
  std::cout << "n = " << n << "\n";
  std::cout << "networks = " << est.total << (est.exact ? " (exhaustive)" : " (sampled)")
            << "\n";
  std::cout << "all attractors fixed = " << est.hits << "\n";
  std::cout.precision(6);
  std::cout << std::fixed;
  std::cout << "phi = " << est.value << "\n";
  if (!est.exact) std::cout << "radius95 = " << est.radius << "\n";
  return 0;
}

int cmd_maxfp(const std::string& path) {
  bnet::SignedDigraph g = bnet::parse_signed_graph(read_file(path));
  bnet::MaxFixedPoints result = bnet::max_fixed_points_over_graph(g);
  std::cout << "vertices: " << g.vertex_count() << "\n";
  std::cout << "realizable: " << (result.realizable ? "yes" : "no") << "\n";
  if (!result.realizable) return 0;
  std::cout << "max fixed points: " << result.max_fixed_points << "\n";
  std::cout << "witness:\n";
  std::cout << bnet::render_network(*result.witness, bnet::NetworkFormat::table);
  return 0;
}

int cmd_generate_cycle(const std::string& sign_text, const std::string& out_path) {
  std::vector<bnet::Sign> signs;
  for (char c : sign_text) {
    if (c == '+')
      signs.push_back(bnet::Sign::positive);
    else if (c == '-')
      signs.push_back(bnet::Sign::negative);
    else
      throw std::invalid_argument("signs must be a string of + and -");
  }
  bnet::BooleanNetwork f = bnet::make_cycle_network(signs);
  std::string text = bnet::render_network(f, bnet::NetworkFormat::table);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean network analysis toolkit"};
  app.require_subcommand(1);

  std::string net_path, sg_path, kind = "async", dot_path, scope_text, json_path;
  std::string signs, out_path;
  bool local_graphs = false, mark_attractors = false;
  std::uint64_t seed = 1, samples = 10000;
  int workers = 1, phi_n = 3;

  CLI::App* analyze = app.add_subcommand("analyze", "Full analysis of a network file");
  analyze->add_option("file", net_path, "network file")->required();
  analyze->add_flag("--local-graphs", local_graphs, "print every local interaction graph");

  CLI::App* dynamics = app.add_subcommand("dynamics", "Transition graph of a network file");
  dynamics->add_option("file", net_path, "network file")->required();
  dynamics->add_option("--kind", kind, "sync | async (default async)")
      ->check(CLI::IsMember({"sync", "async"}));
  dynamics->add_option("--dot", dot_path, "write DOT to this file instead of text");
  dynamics->add_flag("--mark-attractors", mark_attractors,
                     "mark attractor states in the DOT output (async only)");

  CLI::App* graph = app.add_subcommand("graph", "Analyse a signed digraph file");
  graph->add_option("file", sg_path, "signed graph file")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the theorem-verification suite");
  verify->add_option("--scope", scope_text, "exhaustive:N or sampled:N:COUNT")->required();
  verify->add_option("--seed", seed, "sampling seed (default 1)");
  verify->add_option("--json", json_path, "also write a JSON report to this file");
  verify->add_option("--workers", workers, "worker threads (default 1)");

  CLI::App* phi = app.add_subcommand(
      "phi", "Fraction of networks whose attractors are all fixed points");
  phi->add_option("--n", phi_n, "component count")->required();
  phi->add_option("--samples", samples, "sample count (ignored when exact, default 10000)");
  phi->add_option("--seed", seed, "sampling seed (default 1)");

  CLI::App* maxfp = app.add_subcommand(
      "maxfp", "Maximum fixed-point count over networks with a given interaction graph");
  maxfp->add_option("file", sg_path, "signed graph file")->required();

  CLI::App* generate = app.add_subcommand("generate", "Generate networks");
  CLI::App* gen_cycle = generate->add_subcommand("cycle", "Signed cycle network");
  gen_cycle->add_option("--signs", signs, "arc signs, e.g. +- or ++-")->required();
  gen_cycle->add_option("--out", out_path, "write the network here instead of stdout");
  generate->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(net_path, local_graphs);
    if (app.got_subcommand(dynamics))
      return cmd_dynamics(net_path, kind, dot_path, mark_attractors);
    if (app.got_subcommand(graph)) return cmd_graph(sg_path);
    if (app.got_subcommand(verify)) return cmd_verify(scope_text, seed, json_path, workers);
    if (app.got_subcommand(phi)) return cmd_phi(phi_n, samples, seed);
    if (app.got_subcommand(maxfp)) return cmd_maxfp(sg_path);
    if (app.got_subcommand(generate)) return cmd_generate_cycle(signs, out_path);
  } catch (const bnet::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
