#include "bnet/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <deque>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bnet {
namespace {

using Json = nlohmann::ordered_json;

// ------------------------------------------------------------ small helpers

std::string join_states(const std::vector<State>& states) {
  std::string out = "[";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += " ";
    out += states[i].to_string();
  }
  return out + "]";
}

std::string summarize_witness(const NetworkAnalysis& a) {
  std::string out = "fixed points: " + join_states(a.fixed_points) + "; attractors:";
  for (const Attractor& att : a.attractors) {
    out += " " + join_states(att.states);
  }
  return out;
}

// One longest chain of the sub-poset (deterministic: first optimum in weight
// order).
std::vector<State> maximum_chain(std::vector<State> states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  std::sort(states.begin(), states.end(), [](const State& a, const State& b) {
    int wa = std::popcount(a.index()), wb = std::popcount(b.index());
    return std::tie(wa, a) < std::tie(wb, b);
  });
  const int m = static_cast<int>(states.size());
  std::vector<int> len(m, 1), parent(m, -1);
  int best = -1;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) {
      if (states[j] != states[i] && states[j].leq(states[i]) && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        parent[i] = j;
      }
    }
    if (best < 0 || len[i] > len[best]) best = i;
  }
  std::vector<State> chain;
  for (int i = best; i >= 0; i = parent[i]) chain.push_back(states[i]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// ------------------------------------------------------ registry predicates

bool global_acyclic(const NetworkAnalysis& a) { return a.transversal.cycles.empty(); }

bool global_no_positive(const NetworkAnalysis& a) {
  return !a.transversal.stats.has_positive_cycle;
}

bool global_no_negative(const NetworkAnalysis& a) {
  return !a.transversal.stats.has_negative_cycle;
}

bool locals_all_acyclic(const NetworkAnalysis& a) {
  for (const auto& cycles : a.local_cycles) {
    if (!cycles.empty()) return false;
  }
  return true;
}

bool locals_no_positive(const NetworkAnalysis& a) {
  for (const auto& cycles : a.local_cycles) {
    for (const SignedCycle& c : cycles) {
      if (c.sign() == Sign::positive) return false;
    }
  }
  return true;
}

bool strongly_connected_with_arc(const NetworkAnalysis& a) {
  return !a.global.arcs().empty() && is_strongly_connected(a.global);
}

bool unique_fixed_point(const NetworkAnalysis& a) { return a.fixed_points.size() == 1; }

bool at_most_one_fixed_point(const NetworkAnalysis& a) { return a.fixed_points.size() <= 1; }

bool synchronous_short_convergence(const NetworkAnalysis& a) {
  if (a.fixed_points.size() != 1) return false;
  const State& fix = a.fixed_points.front();
  for (std::uint32_t y = 0; y < a.f.state_count(); ++y) {
    auto steps = synchronous_convergence_steps(a.f, State(a.f.n(), y), fix);
    if (!steps || *steps > static_cast<std::uint64_t>(a.f.n())) return false;
  }
  return true;
}

bool asynchronous_acyclic_geodesic(const NetworkAnalysis& a) {
  if (a.fixed_points.size() != 1) return false;
  if (!is_asynchronous_graph_acyclic(a.f)) return false;
  const State& fix = a.fixed_points.front();
  for (std::uint32_t y = 0; y < a.f.state_count(); ++y) {
    if (!has_geodesic(a.f, State(a.f.n(), y), fix)) return false;
  }
  return true;
}

// For every l in 1..n, fewer than 2^l states whose local graph has a cycle of
// length at most l.
bool few_short_local_cycles(const NetworkAnalysis& a) {
  for (int l = 1; l <= a.f.n(); ++l) {
    std::uint64_t count = 0;
    for (const auto& cycles : a.local_cycles) {
      if (!cycles.empty() && cycles.front().length() <= l) ++count;
    }
    if (count >= (std::uint64_t{1} << l)) return false;
  }
  return true;
}

bool unique_attractor_with_geodesics(const NetworkAnalysis& a) {
  if (a.attractors.size() != 1) return false;
  const std::vector<State>& inside = a.attractors.front().states;
  for (std::uint32_t x = 0; x < a.f.state_count(); ++x) {
    State from(a.f.n(), x);
    bool reaches = false;
    for (const State& y : inside) {
      if (has_geodesic(a.f, from, y)) {
        reaches = true;
        break;
      }
    }
    if (!reaches) return false;
  }
  return true;
}

bool antipodal_fixed_pair(const NetworkAnalysis& a) {
  for (std::size_t i = 0; i < a.fixed_points.size(); ++i) {
    for (std::size_t j = i + 1; j < a.fixed_points.size(); ++j) {
      if (hamming(a.fixed_points[i], a.fixed_points[j]) == a.f.n()) return true;
    }
  }
  return false;
}

bool switching_preserves_everything(const NetworkAnalysis& a) {
  SwitchingResult sw = positive_switching(a.global);
  if (!sw.sigma) return false;
  BooleanNetwork h = switch_network(a.f, *sw.sigma);
  SignedDigraph gh = global_graph(h);

  std::uint32_t mask = 0;
  for (int i = 0; i < a.f.n(); ++i) {
    if ((*sw.sigma)[i] == -1) mask |= std::uint32_t{1} << i;
  }

  // Only positive arcs, same underlying arcs.
  std::vector<std::pair<int, int>> uf, uh;
  for (const SignedArc& arc : gh.arcs()) {
    if (arc.sign == Sign::negative) return false;
    uh.emplace_back(arc.source, arc.target);
  }
  for (const SignedArc& arc : a.global.arcs()) uf.emplace_back(arc.source, arc.target);
  auto dedup = [](std::vector<std::pair<int, int>>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(uf);
  dedup(uh);
  if (uf != uh) return false;

  // The flip map carries the asynchronous graph of f onto that of h.
  TransitionGraph tf(a.f, UpdateMode::asynchronous);
  TransitionGraph th(h, UpdateMode::asynchronous);
  for (std::uint32_t x = 0; x < a.f.state_count(); ++x) {
    std::vector<std::uint32_t> image;
    for (std::uint32_t s : tf.successors(x)) image.push_back(s ^ mask);
    std::sort(image.begin(), image.end());
    std::vector<std::uint32_t> target = th.successors(x ^ mask);
    std::sort(target.begin(), target.end());
    if (image != target) return false;
  }

  // ... and therefore maps attractors onto attractors.
  std::vector<std::vector<std::uint32_t>> mapped;
  for (const Attractor& att : a.attractors) {
    std::vector<std::uint32_t> states;
    for (const State& s : att.states) states.push_back(s.index() ^ mask);
    std::sort(states.begin(), states.end());
    mapped.push_back(std::move(states));
  }
  std::sort(mapped.begin(), mapped.end());
  std::vector<std::vector<std::uint32_t>> actual;
  for (const Attractor& att : attractors(h)) {
    std::vector<std::uint32_t> states;
    for (const State& s : att.states) states.push_back(s.index());
    actual.push_back(std::move(states));
  }
  std::sort(actual.begin(), actual.end());
  return mapped == actual;
}

std::uint64_t monotone_bound_from_stats(const GraphStats& s) {
  if (s.nu == 0) return 2;
  return 2 + erdos_bound(s.tau, s.nu - 1);
}

bool chain_cycle_extraction(const NetworkAnalysis& a) {
  std::vector<State> chain = maximum_chain(a.fixed_points);
  try {
    // Internal validation covers positivity, membership and disjointness.
    return extract_disjoint_positive_cycles(a.f, chain).size() == chain.size() - 1;
  } catch (const std::logic_error&) {
    return false;
  }
}

// The global graph is exactly one cycle through all components.
bool isolated_cycle(const NetworkAnalysis& a) {
  return static_cast<int>(a.global.arcs().size()) == a.f.n() &&
         a.transversal.cycles.size() == 1 &&
         a.transversal.cycles.front().length() == a.f.n();
}

bool isolated_positive_cycle(const NetworkAnalysis& a) {
  return isolated_cycle(a) && a.transversal.cycles.front().sign() == Sign::positive;
}

bool isolated_negative_cycle(const NetworkAnalysis& a) {
  return isolated_cycle(a) && a.transversal.cycles.front().sign() == Sign::negative;
}

bool two_fixed_attractors(const NetworkAnalysis& a) {
  return a.attractors.size() == 2 && a.attractors[0].fixed_point() &&
         a.attractors[1].fixed_point();
}

bool single_oscillation_of_size_2n(const NetworkAnalysis& a) {
  if (a.attractors.size() != 1) return false;
  const Attractor& att = a.attractors.front();
  if (att.states.size() != 2 * static_cast<std::size_t>(a.f.n())) return false;
  for (const State& s : att.states) {
    std::uint32_t diff = s.index() ^ a.f.step(s.index());
    if (std::popcount(diff) != 1) return false;  // deterministic oscillation
  }
  return true;
}

}  // namespace

// --------------------------------------------------------------- analysis

bool NetworkAnalysis::all_attractors_fixed() const {
  for (const Attractor& att : attractors) {
    if (!att.fixed_point()) return false;
  }
  return true;
}

CodingTable make_coding_table(int n) {
  CodingTable t;
  t.n = n;
  for (int d = 1; d <= n; ++d) {
    // Suite runs price the whole table up front, so stay exact only where the
    // search is instantaneous; the sphere-packing bound is a sound stand-in.
    CodeParams p = code_params(n, d, std::min(kMaxExactCodeLength, 6));
    t.by_distance.push_back(
        p.exact ? *p.exact
                : static_cast<std::uint64_t>(boost::rational_cast<long long>(p.hamming)));
  }
  return t;
}

NetworkAnalysis analyze_network(BooleanNetwork net, const CodingTable* table) {
  const int n = net.n();
  SignedDigraph global = global_graph(net);
  std::vector<SignedDigraph> locals;
  std::vector<std::vector<SignedCycle>> local_cycles;
  locals.reserve(net.state_count());
  for (std::uint32_t x = 0; x < net.state_count(); ++x) {
    locals.push_back(local_graph(net, State(n, x)));
    local_cycles.push_back(enumerate_cycles(locals.back()));
  }
  TransversalAnalysis transversal = transversal_numbers(global);
  std::vector<State> fps = fixed_points(net);
  std::vector<Attractor> atts = attractors(net);

  std::vector<SignedCycle> pooled_positive;
  for (const auto& cycles : local_cycles) {
    for (const SignedCycle& c : cycles) {
      if (c.sign() == Sign::positive) pooled_positive.push_back(c);
    }
  }
  std::vector<int> common_fvs = minimum_cycle_transversal(pooled_positive);

  std::uint64_t coding_value;
  if (table) {
    coding_value = table->lookup(transversal.stats.positive_girth);
  } else if (!transversal.stats.positive_girth) {
    coding_value = 1;
  } else {
    CodeParams p = code_params(n, *transversal.stats.positive_girth);
    coding_value =
        p.exact ? *p.exact
                : static_cast<std::uint64_t>(boost::rational_cast<long long>(p.hamming));
  }

  bool geodesic_everywhere = true;
  for (std::uint32_t x = 0; x < net.state_count() && geodesic_everywhere; ++x) {
    State from(n, x);
    bool reaches = false;
    for (const State& y : fps) {
      if (has_geodesic(net, from, y)) {
        reaches = true;
        break;
      }
    }
    geodesic_everywhere = reaches;
  }

  return NetworkAnalysis{std::move(net),
                         std::move(global),
                         std::move(locals),
                         std::move(local_cycles),
                         std::move(transversal),
                         std::move(fps),
                         std::move(atts),
                         std::move(common_fvs),
                         coding_value,
                         geodesic_everywhere};
}

// ---------------------------------------------------------------- registry

const std::vector<TheoremCase>& theorem_registry() {
  static const std::vector<TheoremCase> registry = [] {
    std::vector<TheoremCase> r;
    auto add = [&r](std::string id, std::string note,
                    std::function<bool(const NetworkAnalysis&)> hyp,
                    std::function<bool(const NetworkAnalysis&)> concl) {
      r.push_back(TheoremCase{std::move(id), std::move(note), std::move(hyp),
                              std::move(concl)});
    };

    add("robert.unique", "acyclic global graph: unique fixed point",
        global_acyclic, unique_fixed_point);
    add("robert.sync_path", "acyclic global graph: synchronous convergence within n steps",
        global_acyclic, synchronous_short_convergence);
    add("robert.async", "acyclic global graph: acyclic asynchronous graph, geodesics to the fixed point",
        global_acyclic, asynchronous_acyclic_geodesic);
    add("shih_dong", "all local graphs acyclic: unique fixed point",
        locals_all_acyclic, unique_fixed_point);
    add("shih_dong_general", "few states with short local cycles: unique fixed point",
        few_short_local_cycles, unique_fixed_point);
    add("thomas1.global", "no global positive cycle: at most one fixed point",
        global_no_positive, at_most_one_fixed_point);
    add("aracena.no_positive",
        "strongly connected, arcs, no positive cycle: no fixed point",
        [](const NetworkAnalysis& a) {
          return strongly_connected_with_arc(a) && global_no_positive(a);
        },
        [](const NetworkAnalysis& a) { return a.fixed_points.empty(); });
    add("thomas1.local", "no local positive cycles: at most one fixed point",
        locals_no_positive, at_most_one_fixed_point);
    add("unique_attractor.local",
        "no local positive cycles: unique attractor, geodesics into it",
        locals_no_positive, unique_attractor_with_geodesics);
    add("feedback.global", "at most 2^tau+ fixed points",
        [](const NetworkAnalysis&) { return true; },
        [](const NetworkAnalysis& a) {
          return a.fixed_points.size() <=
                 (std::uint64_t{1} << a.transversal.stats.tau_plus);
        });
    add("feedback.local",
        "at most 2^|I| attractors for a common positive transversal I of all local graphs",
        [](const NetworkAnalysis&) { return true; },
        [](const NetworkAnalysis& a) {
          return a.attractors.size() <=
                 (std::uint64_t{1} << a.common_positive_fvs.size());
        });
    add("coding", "at most A(n, positive girth) fixed points",
        [](const NetworkAnalysis&) { return true; },
        [](const NetworkAnalysis& a) {
          return a.fixed_points.size() <= a.coding_bound_value;
        });
    add("thomas2.global", "no global negative cycle: all attractors are fixed points",
        global_no_negative,
        [](const NetworkAnalysis& a) { return a.all_attractors_fixed(); });
    add("thomas2.exists", "no global negative cycle: at least one fixed point",
        global_no_negative,
        [](const NetworkAnalysis& a) { return !a.fixed_points.empty(); });
    add("aracena.no_negative",
        "strongly connected, arcs, no negative cycle: antipodal fixed points",
        [](const NetworkAnalysis& a) {
          return strongly_connected_with_arc(a) && global_no_negative(a);
        },
        antipodal_fixed_pair);
    add("mrrs13.geodesic",
        "no global negative cycle: geodesic to some fixed point from every state",
        global_no_negative,
        [](const NetworkAnalysis& a) { return a.geodesic_to_fixed_point_from_everywhere; });
    add("mrrs13.implies_thomas2",
        "geodesic-to-fixed-point conclusion forces fixed-point attractors",
        [](const NetworkAnalysis& a) { return a.geodesic_to_fixed_point_from_everywhere; },
        [](const NetworkAnalysis& a) { return a.all_attractors_fixed(); });
    add("switching",
        "strongly connected, no negative cycle: component flips make all arcs positive",
        [](const NetworkAnalysis& a) {
          return is_strongly_connected(a.global) && global_no_negative(a);
        },
        switching_preserves_everything);
    add("knaster_tarski", "monotone: fixed points form a non-empty lattice",
        [](const NetworkAnalysis& a) { return is_monotone(a.f); },
        [](const NetworkAnalysis& a) {
          return !a.fixed_points.empty() && is_lattice(a.fixed_points);
        });
    add("monotone.chain_bound", "monotone: no fixed-point chain of size nu + 2",
        [](const NetworkAnalysis& a) { return is_monotone(a.f); },
        [](const NetworkAnalysis& a) {
          return max_chain_length(a.fixed_points) <= a.transversal.stats.nu + 1;
        });
    add("monotone.count", "monotone: fixed points within the binomial-sum bound",
        [](const NetworkAnalysis& a) { return is_monotone(a.f); },
        [](const NetworkAnalysis& a) {
          return a.fixed_points.size() <= monotone_bound_from_stats(a.transversal.stats);
        });
    add("chain_cycles",
        "a chain of l fixed points yields l-1 disjoint positive cycles",
        [](const NetworkAnalysis& a) { return max_chain_length(a.fixed_points) >= 2; },
        chain_cycle_extraction);
    add("r18.at_most",
        "positive cycles all breakable to negative-only sources: at most one fixed point",
        [](const NetworkAnalysis& a) { return r18_hypothesis(a.global, Sign::positive); },
        at_most_one_fixed_point);
    add("r18.at_least",
        "negative cycles all breakable to positive-only sources: at least one fixed point",
        [](const NetworkAnalysis& a) { return r18_hypothesis(a.global, Sign::negative); },
        [](const NetworkAnalysis& a) { return !a.fixed_points.empty(); });
    add("cycle_net.positive", "isolated positive cycle: two attractors, both fixed",
        isolated_positive_cycle, two_fixed_attractors);
    add("cycle_net.negative", "isolated negative cycle: one oscillation of size 2n",
        isolated_negative_cycle, single_oscillation_of_size_2n);
    return r;
  }();
  return registry;
}

// ------------------------------------------------------------------- suite

BooleanNetwork network_from_index(int n, std::uint64_t index) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("indexed enumeration supports 1 <= n <= 4");
  }
  const std::uint32_t rows = std::uint32_t{1} << n;
  const int bits = n * static_cast<int>(rows);
  if (bits < 64 && index >= (std::uint64_t{1} << bits)) {
    throw std::invalid_argument("network index out of range");
  }
  std::vector<TruthTable> tables;
  tables.reserve(n);
  for (int i = 0; i < n; ++i) {
    TruthTable t(n);
    for (std::uint32_t x = 0; x < rows; ++x) {
      t.set(x, index >> (static_cast<std::uint64_t>(i) * rows + x) & 1u);
    }
    tables.push_back(std::move(t));
  }
  return BooleanNetwork(n, std::move(tables));
}

namespace {

struct ShardResult {
  std::vector<CaseCounters> counters;
  std::vector<Violation> violations;
  std::uint64_t q1_holds = 0;
  std::uint64_t q1_fails = 0;
  std::exception_ptr error;
};

void evaluate_network(std::uint64_t index, BooleanNetwork f, const CodingTable& table,
                      ShardResult& out) {
  const auto& registry = theorem_registry();
  NetworkAnalysis a = analyze_network(std::move(f), &table);
  for (std::size_t c = 0; c < registry.size(); ++c) {
    const TheoremCase& tc = registry[c];
    CaseCounters& counters = out.counters[c];
    ++counters.checked;
    if (!tc.hypothesis(a)) {
      ++counters.vacuous;
      continue;
    }
    ++counters.hypothesis_held;
    if (!tc.conclusion(a)) {
      ++counters.violations;
      out.violations.push_back(Violation{index, tc.id,
                                         render_network(a.f, NetworkFormat::table),
                                         summarize_witness(a)});
    }
  }
  std::uint64_t lhs = std::uint64_t{1} << a.transversal.stats.tau_plus;
  if (lhs <= a.coding_bound_value) {
    ++out.q1_holds;
  } else {
    ++out.q1_fails;
  }
}

}  // namespace

SuiteReport run_theorem_suite(const Scope& scope, int workers) {
  if (workers < 1 || workers > 256) {
    throw std::invalid_argument("workers must be in [1, 256]");
  }
  int n;
  std::uint64_t total;
  std::uint64_t seed = 0;
  bool exhaustive;
  std::string scope_text;
  if (const auto* ex = std::get_if<ExhaustiveScope>(&scope)) {
    if (ex->n < 1 || ex->n > kMaxExhaustiveN) {
      throw std::invalid_argument("exhaustive scope supports 1 <= n <= " +
                                  std::to_string(kMaxExhaustiveN));
    }
    n = ex->n;
    total = std::uint64_t{1} << (n * (1 << n));
    exhaustive = true;
    scope_text = "exhaustive n=" + std::to_string(n);
  } else {
    const auto& s = std::get<SampledScope>(scope);
    if (s.n < 1 || s.n > kMaxSampledN) {
      throw std::invalid_argument("sampled scope supports 1 <= n <= " +
                                  std::to_string(kMaxSampledN));
    }
    n = s.n;
    total = s.count;
    seed = s.seed;
    exhaustive = false;
    scope_text = "sampled n=" + std::to_string(n) + " count=" + std::to_string(s.count) +
                 " seed=" + std::to_string(s.seed);
  }

  const CodingTable table = make_coding_table(n);
  const std::size_t case_count = theorem_registry().size();
  const auto start = std::chrono::steady_clock::now();

  std::vector<ShardResult> shards(workers);
  for (auto& s : shards) s.counters.assign(case_count, CaseCounters{});

  auto run_shard = [&](int shard_index, std::uint64_t begin, std::uint64_t end) {
    ShardResult& out = shards[shard_index];
    try {
      for (std::uint64_t k = begin; k < end; ++k) {
        BooleanNetwork f = exhaustive ? network_from_index(n, k)
                                      : random_network(n, derive_seed(seed, k));
        evaluate_network(k, std::move(f), table, out);
      }
    } catch (...) {
      out.error = std::current_exception();
    }
  };

  if (workers == 1) {
    run_shard(0, 0, total);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      std::uint64_t size = total / workers + (static_cast<std::uint64_t>(w) < total % workers);
      threads.emplace_back(run_shard, w, begin, begin + size);
    }
    for (auto& t : threads) t.join();
  }
  for (const auto& s : shards) {
    if (s.error) std::rethrow_exception(s.error);
  }

  SuiteReport report;
  report.scope_text = std::move(scope_text);
  report.n = n;
  report.seed = seed;
  report.network_count = total;
  report.cases.reserve(case_count);
  for (std::size_t c = 0; c < case_count; ++c) {
    CaseCounters merged;
    for (const auto& s : shards) {
      merged.checked += s.counters[c].checked;
      merged.hypothesis_held += s.counters[c].hypothesis_held;
      merged.vacuous += s.counters[c].vacuous;
      merged.violations += s.counters[c].violations;
    }
    report.cases.emplace_back(theorem_registry()[c].id, merged);
  }
  for (auto& s : shards) {  // shards hold ascending index ranges
    report.question1_holds += s.q1_holds;
    report.question1_fails += s.q1_fails;
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(s.violations.begin()),
                             std::make_move_iterator(s.violations.end()));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "theorem suite\n";
  out << "scope: " << scope_text << "\n";
  out << "networks: " << network_count << "\n\n";
  out << std::left << std::setw(28) << "case" << std::right << std::setw(12) << "checked"
      << std::setw(12) << "hyp-held" << std::setw(12) << "vacuous" << std::setw(12)
      << "violations"
      << "\n";
  for (const auto& [id, c] : cases) {
    out << std::left << std::setw(28) << id << std::right << std::setw(12) << c.checked
        << std::setw(12) << c.hypothesis_held << std::setw(12) << c.vacuous
        << std::setw(12) << c.violations << "\n";
  }
  out << "\nquestion-1 probe (2^tau+ <= A(n,g+)): holds " << question1_holds << ", fails "
      << question1_fails << "\n";
  out << "violations: " << violations.size() << "\n";
  for (const Violation& v : violations) {
    out << "\n[" << v.case_id << "] network " << v.network_index << "\n";
    out << v.detail << "\n";
    out << v.network_text;
  }
  out << std::fixed << std::setprecision(3) << "wall time: " << wall_seconds << " s\n";
  return out.str();
}

std::string SuiteReport::to_json(bool include_wall_time) const {
  Json j;
  j["scope"] = scope_text;
  j["n"] = n;
  j["seed"] = seed;
  j["networks"] = network_count;
  j["cases"] = Json::array();
  for (const auto& [id, c] : cases) {
    Json entry;
    entry["id"] = id;
    entry["checked"] = c.checked;
    entry["hypothesis_held"] = c.hypothesis_held;
    entry["vacuous"] = c.vacuous;
    entry["violations"] = c.violations;
    j["cases"].push_back(std::move(entry));
  }
  j["question1"] = Json{{"holds", question1_holds}, {"fails", question1_fails}};
  j["violations"] = Json::array();
  for (const Violation& v : violations) {
    Json entry;
    entry["index"] = v.network_index;
    entry["case"] = v.case_id;
    entry["detail"] = v.detail;
    entry["network"] = v.network_text;
    j["violations"].push_back(std::move(entry));
  }
  if (include_wall_time) j["wall_seconds"] = wall_seconds;
  return j.dump(2) + "\n";
}

// --------------------------------------------------------------- estimators

namespace {

// Every state reaches a fixed point, i.e. all attractors are fixed points:
// reverse search over the asynchronous graph from the fixed points.
bool converges_everywhere(const BooleanNetwork& f) {
  const std::uint32_t total = f.state_count();
  std::vector<char> reached(total, 0);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t x = 0; x < total; ++x) {
    if (f.step(x) == x) {
      reached[x] = 1;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (int i = 0; i < f.n(); ++i) {
      std::uint32_t y = x ^ (std::uint32_t{1} << i);
      if (!reached[y] && f.component(i, y) != (y >> i & 1u)) {
        reached[y] = 1;  // arc y -> x in the asynchronous graph
        queue.push_back(y);
      }
    }
  }
  for (std::uint32_t x = 0; x < total; ++x) {
    if (!reached[x]) return false;
  }
  return true;
}

}  // namespace

PhiEstimate estimate_phi(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || n > kMaxComponents) {
    throw std::invalid_argument("component count out of range");
  }
  PhiEstimate est;
  if (n <= 2) {
    est.exact = true;
    est.total = std::uint64_t{1} << (n * (1 << n));
    for (std::uint64_t k = 0; k < est.total; ++k) {
      est.hits += converges_everywhere(network_from_index(n, k));
    }
    est.value = static_cast<double>(est.hits) / static_cast<double>(est.total);
    return est;
  }
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  est.total = samples;
  for (std::uint64_t k = 0; k < samples; ++k) {
    est.hits += converges_everywhere(random_network(n, derive_seed(seed, k)));
  }
  est.value = static_cast<double>(est.hits) / static_cast<double>(est.total);
  est.radius = 1.96 * std::sqrt(est.value * (1.0 - est.value) /
                                static_cast<double>(est.total));
  return est;
}

// -------------------------------------------------- extremal network search

MaxFixedPoints max_fixed_points_over_graph(const SignedDigraph& g) {
  const int n = g.vertex_count();
  if (n < 1 || n > kMaxGraphSearchN) {
    throw std::invalid_argument("graph search supports 1 <= n <= " +
                                std::to_string(kMaxGraphSearchN));
  }
  const std::uint32_t rows = std::uint32_t{1} << n;
  const std::uint32_t table_count = std::uint32_t{1} << rows;

  // Per component: the distinct fixed-point masks achievable by local
  // functions whose in-arc signature matches row i of g exactly, with one
  // representative table per mask.
  struct MaskChoice {
    std::uint32_t fp_mask;
    std::uint32_t table;
  };
  std::vector<std::vector<MaskChoice>> choices(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::int8_t> seen_mask(1u << rows, 0);
    for (std::uint32_t t = 0; t < table_count; ++t) {
      bool match = true;
      for (int j = 0; j < n && match; ++j) {
        bool pos = false, neg = false;
        const std::uint32_t bit = std::uint32_t{1} << j;
        for (std::uint32_t x = 0; x < rows; ++x) {
          if (x & bit) continue;
          bool lo = t >> x & 1u, hi = t >> (x | bit) & 1u;
          if (hi && !lo) pos = true;
          if (lo && !hi) neg = true;
        }
        match = pos == g.has_arc(j, i, Sign::positive) &&
                neg == g.has_arc(j, i, Sign::negative);
      }
      if (!match) continue;
      std::uint32_t mask = 0;
      for (std::uint32_t x = 0; x < rows; ++x) {
        if ((t >> x & 1u) == (x >> i & 1u)) mask |= std::uint32_t{1} << x;
      }
      if (!seen_mask[mask]) {
        seen_mask[mask] = 1;
        choices[i].push_back(MaskChoice{mask, t});
      }
    }
    if (choices[i].empty()) return MaxFixedPoints{};  // graph not realizable
    std::sort(choices[i].begin(), choices[i].end(),
              [](const MaskChoice& a, const MaskChoice& b) { return a.fp_mask < b.fp_mask; });
  }

  int best = -1;
  std::vector<int> pick(n, 0), best_pick;
  std::function<void(int, std::uint32_t)> search = [&](int i, std::uint32_t mask) {
    if (std::popcount(mask) <= best) return;  // intersection only shrinks
    if (i == n) {
      best = std::popcount(mask);
      best_pick = pick;
      return;
    }
    for (int c = 0; c < static_cast<int>(choices[i].size()); ++c) {
      pick[i] = c;
      search(i + 1, mask & choices[i][c].fp_mask);
    }
  };
  search(0, (std::uint32_t{1} << rows) - 1);

  std::vector<TruthTable> tables;
  for (int i = 0; i < n; ++i) {
    TruthTable t(n);
    std::uint32_t bits = choices[i][best_pick[i]].table;
    for (std::uint32_t x = 0; x < rows; ++x) t.set(x, bits >> x & 1u);
    tables.push_back(std::move(t));
  }
  BooleanNetwork witness(n, std::move(tables));
  if (!(global_graph(witness) == g)) {
    throw std::logic_error("witness network does not realize the requested graph");
  }
  return MaxFixedPoints{true, static_cast<std::uint64_t>(best), std::move(witness)};
}

}  // namespace bnet
