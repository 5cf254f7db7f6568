// Acceptance checks: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion prints its wall time and fails when it exceeds the
// stated budget.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "bnet/bounds.hpp"
#include "bnet/dynamics.hpp"
#include "bnet/harness.hpp"
#include "bnet/interaction.hpp"
#include "bnet/network.hpp"
#include "bnet/sgraph.hpp"

#define REQUIRE(cond)                                                          \
  do {                                                                         \
    if (!(cond)) {                                                             \
      std::cout << "  requirement failed: " << #cond << " (line " << __LINE__ \
                << ")\n";                                                      \
      return false;                                                            \
    }                                                                          \
  } while (0)

namespace {

using bnet::Sign;

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

const char* kDemoFormulas =
    "n = 3\n"
    "f1 = x1 & x2 & x3\n"
    "f2 = x1 | !x3\n"
    "f3 = (x2 & !x3) | (x1 & !x2 & !x3) | (x1 & x2 & x3)\n";

const char* kDemoTable =
    "n = 3\n"
    "table\n"
    "000 010\n"
    "001 000\n"
    "010 011\n"
    "011 000\n"
    "100 011\n"
    "101 010\n"
    "110 011\n"
    "111 111\n";

struct ArcSpec {
  int source, target;
  Sign sign;
};

bnet::SignedDigraph graph_of(int n, const std::vector<ArcSpec>& arcs) {
  bnet::SignedDigraph g(n);
  for (const ArcSpec& a : arcs) g.add_arc(a.source, a.target, a.sign);
  return g;
}

// ---------------------------------------------------------------- criterion 1

bool formulas_table_and_interaction_graphs() {
  bnet::BooleanNetwork f = bnet::parse_network(kDemoFormulas);
  bnet::BooleanNetwork table = bnet::parse_network(kDemoTable);
  REQUIRE(f == table);
  REQUIRE(bnet::render_network(f, bnet::NetworkFormat::table) == kDemoTable);

  const std::vector<ArcSpec> global_arcs = {{0, 0, P}, {0, 1, P}, {0, 2, P}, {1, 0, P},
                                            {1, 2, P}, {2, 0, P}, {2, 1, N}, {2, 2, N}};
  REQUIRE(bnet::global_graph(f) == graph_of(3, global_arcs));

  const std::vector<std::vector<ArcSpec>> locals = {
      /* 000 */ {{0, 2, P}, {1, 2, P}, {2, 1, N}},
      /* 100 */ {{0, 2, P}, {2, 2, N}},
      /* 010 */ {{1, 2, P}, {2, 1, N}, {2, 2, N}},
      /* 110 */ {{2, 0, P}},
      /* 001 */ {{0, 1, P}, {2, 1, N}},
      /* 101 */ {{0, 1, P}, {1, 0, P}, {1, 2, P}, {2, 2, N}},
      /* 011 */ {{0, 0, P}, {0, 1, P}, {0, 2, P}, {2, 1, N}, {2, 2, N}},
      /* 111 */ {{0, 0, P}, {0, 1, P}, {0, 2, P}, {1, 0, P}, {1, 2, P}, {2, 0, P}},
  };
  for (std::uint32_t x = 0; x < 8; ++x) {
    REQUIRE(bnet::local_graph(f, bnet::State(3, x)) == graph_of(3, locals[x]));
  }
  return true;
}

// ---------------------------------------------------------------- criterion 2

bool demo_attractors() {
  bnet::BooleanNetwork f = bnet::parse_network(kDemoFormulas);
  std::vector<bnet::Attractor> atts = bnet::attractors(f);
  REQUIRE(atts.size() == 2);

  std::set<std::string> cyclic, fixed;
  for (const bnet::Attractor& a : atts) {
    std::set<std::string> members;
    for (const bnet::State& s : a.states) members.insert(s.to_string());
    if (a.fixed_point()) {
      fixed = members;
    } else {
      cyclic = members;
    }
  }
  REQUIRE(fixed == std::set<std::string>{"111"});
  REQUIRE((cyclic == std::set<std::string>{"000", "001", "010", "011"}));
  return true;
}

// ---------------------------------------------------------------- criterion 3

bool isolated_cycle_dynamics() {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
      std::vector<Sign> signs;
      int negatives = 0;
      for (int i = 0; i < n; ++i) {
        bool neg = pattern >> i & 1u;
        negatives += neg;
        signs.push_back(neg ? N : P);
      }
      bnet::BooleanNetwork f = bnet::make_cycle_network(signs);
      std::vector<bnet::Attractor> atts = bnet::attractors(f);
      if (negatives % 2 == 0) {
        REQUIRE(atts.size() == 2);
        REQUIRE(atts[0].fixed_point());
        REQUIRE(atts[1].fixed_point());
      } else {
        REQUIRE(atts.size() == 1);
        REQUIRE(atts[0].states.size() == 2u * n);
        for (const bnet::State& s : atts[0].states) {
          std::uint32_t x = s.index();
          REQUIRE(std::popcount(x ^ f.step(x)) == 1);  // asynchronous out-degree 1
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- criterion 4

bool exhaustive_two_component_suite() {
  bnet::SuiteReport r = bnet::run_theorem_suite(bnet::ExhaustiveScope{2});
  REQUIRE(r.network_count == 256);
  for (const auto& [id, counters] : r.cases) REQUIRE(counters.checked == 256);
  if (!r.ok()) std::cout << r.to_text();
  REQUIRE(r.ok());
  return true;
}

// ---------------------------------------------------------------- criterion 5

bool sampled_three_component_suite() {
  bnet::SuiteReport r =
      bnet::run_theorem_suite(bnet::Scope{bnet::SampledScope{3, 100000, 1}});
  REQUIRE(r.network_count == 100000);
  if (!r.ok()) std::cout << r.to_text();
  REQUIRE(r.ok());
  return true;
}

// ---------------------------------------------------------------- criterion 6

bool cycle_extraction_everywhere() {
  auto exercise = [](const bnet::BooleanNetwork& f) -> int {
    std::vector<bnet::State> fps = bnet::fixed_points(f);
    if (fps.size() < 2) return 0;
    const bnet::SignedDigraph g = bnet::global_graph(f);
    int pairs = 0;
    for (std::size_t a = 0; a < fps.size(); ++a) {
      for (std::size_t b = a + 1; b < fps.size(); ++b) {
        bnet::SignedCycle c = bnet::extract_positive_cycle(f, fps[a], fps[b]);
        if (c.sign() != Sign::positive) return -1;
        for (int k = 0; k < c.length(); ++k) {
          if (fps[a].bit(c.vertices[k]) == fps[b].bit(c.vertices[k])) return -1;
          bnet::SignedArc arc{c.vertices[k], c.vertices[(k + 1) % c.length()],
                              c.arc_signs[k]};
          if (!g.has_arc(arc)) return -1;
        }
        ++pairs;
      }
    }
    return pairs;
  };

  long long pairs = 0;
  for (std::uint64_t k = 0; k < 256; ++k) {
    int got = exercise(bnet::network_from_index(2, k));
    REQUIRE(got >= 0);
    pairs += got;
  }
  for (std::uint64_t k = 0; k < 10000; ++k) {
    int got = exercise(bnet::random_network(3, bnet::derive_seed(1, k)));
    REQUIRE(got >= 0);
    pairs += got;
  }
  REQUIRE(pairs > 100);  // the scan genuinely hit multi-fixed-point networks
  return true;
}

// ---------------------------------------------------------------- criterion 7

bool exact_code_sizes() {
  const std::uint64_t expected[] = {8, 4, 2};
  for (int d = 1; d <= 3; ++d) {
    bnet::CodeParams p = bnet::code_params(3, d);
    REQUIRE(p.exact.has_value());
    REQUIRE(*p.exact == expected[d - 1]);
    bnet::Rational e(static_cast<long long>(*p.exact));
    REQUIRE(p.gilbert <= e);
    REQUIRE(e <= p.hamming);
  }
  return true;
}

// ---------------------------------------------------------------- criterion 8

bool bound_comparison_example() {
  // Positive loop on vertex 1 plus a positive 4-cycle on vertices 2..5.
  bnet::SignedDigraph g(5);
  g.add_arc(0, 0, P);
  g.add_arc(1, 2, P);
  g.add_arc(2, 3, P);
  g.add_arc(3, 4, P);
  g.add_arc(4, 1, P);

  bnet::TransversalAnalysis t = bnet::transversal_numbers(g);
  REQUIRE(t.stats.tau_plus == 2);
  REQUIRE(bnet::feedback_bound(g) == 4);
  REQUIRE(t.stats.positive_girth.has_value());
  REQUIRE(*t.stats.positive_girth == 1);
  REQUIRE(bnet::coding_bound(g) == 32);  // A(5, 1) = 2^5
  return true;
}

// ---------------------------------------------------------------- criterion 9

// k triangles in a row: triangle j has top-left (j == 1 ? 1 : 2(j-1)),
// top-right 2j, bottom 2j+1 (1-based labels), positively cyclically wired,
// plus a loop of the given sign on every bottom vertex.
bnet::SignedDigraph chain_graph(int k, Sign loop_sign) {
  bnet::SignedDigraph g(2 * k + 1);
  for (int j = 1; j <= k; ++j) {
    int tl = (j == 1 ? 1 : 2 * (j - 1)) - 1;
    int tr = 2 * j - 1;
    int b = 2 * j;  // 1-based 2j+1
    g.add_arc(tl, tr, P);
    g.add_arc(tr, b, P);
    g.add_arc(b, tl, P);
    g.add_arc(b, b, loop_sign);
  }
  return g;
}

bool chain_graph_transversals() {
  bool ok = true;
  for (int k = 2; k <= 4; ++k) {
    bnet::GraphStats first = bnet::transversal_numbers(chain_graph(k, P)).stats;
    std::cout << "  k=" << k << " positive loops: tau=" << first.tau
              << " tau+=" << first.tau_plus << " nu=" << first.nu
              << " nu+=" << first.nu_plus << " (expected all " << k << ")\n";
    ok = ok && first.tau == k && first.tau_plus == k && first.nu == k &&
         first.nu_plus == k;

    bnet::GraphStats second = bnet::transversal_numbers(chain_graph(k, N)).stats;
    std::cout << "  k=" << k << " negative loops: tau+=" << second.tau_plus
              << " nu+=" << second.nu_plus << " (expected tau+=" << k - 1
              << ", nu+=" << k / 2 << ")\n";
    ok = ok && second.tau_plus == k - 1 && second.nu_plus == k / 2;
  }
  REQUIRE(ok);
  return true;
}

// --------------------------------------------------------------- criterion 10

bool extremal_fixed_point_search() {
  bnet::SignedDigraph k3_neg(3), k3_pos(3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      k3_neg.add_arc(a, b, N);
      k3_pos.add_arc(a, b, P);
    }
  }
  bnet::MaxFixedPoints neg = bnet::max_fixed_points_over_graph(k3_neg);
  REQUIRE(neg.realizable);
  REQUIRE(neg.max_fixed_points == 3);  // C(3, 1)
  REQUIRE(neg.witness.has_value());
  REQUIRE(bnet::global_graph(*neg.witness) == k3_neg);
  REQUIRE(bnet::fixed_points(*neg.witness).size() == 3);

  bnet::MaxFixedPoints pos = bnet::max_fixed_points_over_graph(k3_pos);
  REQUIRE(pos.realizable);
  REQUIRE(pos.max_fixed_points >= 1);
  REQUIRE(pos.max_fixed_points <= 3);
  return true;
}

// --------------------------------------------------------------- criterion 11

bool convergence_fraction_estimates() {
  bnet::PhiEstimate one = bnet::estimate_phi(1, 0, 0);
  REQUIRE(one.exact);
  REQUIRE(one.hits == 3);
  REQUIRE(one.total == 4);

  bnet::PhiEstimate two_a = bnet::estimate_phi(2, 0, 0);
  bnet::PhiEstimate two_b = bnet::estimate_phi(2, 0, 0);
  REQUIRE(two_a.exact);
  REQUIRE(two_a.hits == two_b.hits);
  REQUIRE(two_a.total == 256);

  bnet::PhiEstimate ten = bnet::estimate_phi(10, 20000, 1);
  const double limit = 1.0 - std::exp(-1.0);
  std::cout << "  phi(10) = " << ten.value << " +/- " << ten.radius
            << " (20000 samples, seed 1); limit " << limit << "\n";
  REQUIRE(std::abs(ten.value - limit) < 0.1);
  return true;
}

// --------------------------------------------------------------- criterion 12

bool switching_preserves_dynamics() {
  int exercised = 0;
  for (std::uint64_t k = 0; k < 256; ++k) {
    bnet::BooleanNetwork f = bnet::network_from_index(2, k);
    bnet::SignedDigraph g = bnet::global_graph(f);
    if (!bnet::is_strongly_connected(g)) continue;
    if (bnet::has_negative_cycle(g).found) continue;

    bnet::SwitchingResult sw = bnet::positive_switching(g);
    REQUIRE(sw.sigma.has_value());
    bnet::BooleanNetwork h = bnet::switch_network(f, *sw.sigma);
    REQUIRE(bnet::global_graph(h).positive_only());

    std::uint32_t mask = 0;
    for (int i = 0; i < 2; ++i) {
      if ((*sw.sigma)[i] == -1) mask |= std::uint32_t{1} << i;
    }
    std::set<std::set<std::uint32_t>> mapped, actual;
    for (const bnet::Attractor& a : bnet::attractors(f)) {
      std::set<std::uint32_t> members;
      for (const bnet::State& s : a.states) members.insert(s.index() ^ mask);
      mapped.insert(std::move(members));
    }
    for (const bnet::Attractor& a : bnet::attractors(h)) {
      std::set<std::uint32_t> members;
      for (const bnet::State& s : a.states) members.insert(s.index());
      actual.insert(std::move(members));
    }
    REQUIRE(mapped == actual);
    ++exercised;
  }
  std::cout << "  networks exercised: " << exercised << "\n";
  REQUIRE(exercised > 0);
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)();
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"formula/table pipeline and interaction graphs", formulas_table_and_interaction_graphs, 1.0},
      {"demo network attractors", demo_attractors, 1.0},
      {"isolated cycle dynamics, n = 1..8", isolated_cycle_dynamics, 10.0},
      {"exhaustive n=2 theorem suite", exhaustive_two_component_suite, 10.0},
      {"sampled n=3 theorem suite, 100000 networks", sampled_three_component_suite, 300.0},
      {"positive cycle extraction from fixed-point pairs", cycle_extraction_everywhere, 60.0},
      {"exact code sizes inside their brackets", exact_code_sizes, 1.0},
      {"feedback vs coding bound example", bound_comparison_example, 1.0},
      {"chain graph transversal numbers", chain_graph_transversals, 10.0},
      {"max fixed points over prescribed interaction graphs", extremal_fixed_point_search, 120.0},
      {"convergent-network fraction estimates", convergence_fraction_estimates, 120.0},
      {"switching to an all-positive network", switching_preserves_dynamics, 10.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    bool passed = false;
    try {
      passed = criteria[i].run();
    } catch (const std::exception& e) {
      std::cout << "  unexpected exception: " << e.what() << "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (passed && elapsed > criteria[i].budget_seconds) {
      std::cout << "  over budget: " << elapsed << " s > " << criteria[i].budget_seconds
                << " s\n";
      passed = false;
    }
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name
              << " (" << elapsed << " s)\n";
    failures += !passed;
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures ? 1 : 0;
}
