#pragma once

// Theorem-verification harness: a registry of hypothesis/conclusion pairs
// evaluated over exhaustively enumerated or seed-sampled networks, plus the
// fraction-of-convergent-networks estimator and the exact search for the
// maximum fixed-point count over all networks with a prescribed interaction
// graph.

#include "bnet/bounds.hpp"
#include "bnet/dynamics.hpp"
#include "bnet/interaction.hpp"
#include "bnet/network.hpp"
#include "bnet/sgraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bnet {

inline constexpr int kMaxExhaustiveN = 3;   // 2^(n*2^n) networks: 16.7M at n=3
inline constexpr int kMaxSampledN = 12;     // per-network analysis is exponential in n
inline constexpr int kMaxGraphSearchN = 3;  // max-fixed-points search cap

// A(n,d) for d = 1..n, precomputed once per suite run (exact when the length
// fits the exact-code cap, rounded-down sphere packing otherwise).
struct CodingTable {
  int n = 0;
  std::vector<std::uint64_t> by_distance;

  std::uint64_t lookup(std::optional<int> positive_girth) const {
    if (!positive_girth) return 1;
    return by_distance.at(static_cast<std::size_t>(*positive_girth) - 1);
  }
};

CodingTable make_coding_table(int n);

// Everything the registry predicates need, computed once per network.
struct NetworkAnalysis {
  BooleanNetwork f;
  SignedDigraph global;
  std::vector<SignedDigraph> locals;              // one per state index
  std::vector<std::vector<SignedCycle>> local_cycles;
  TransversalAnalysis transversal;                // of the global graph
  std::vector<State> fixed_points;
  std::vector<Attractor> attractors;
  std::vector<int> common_positive_fvs;  // hits every positive cycle of every local graph
  std::uint64_t coding_bound_value = 1;  // A(n, positive girth of the global graph)
  bool geodesic_to_fixed_point_from_everywhere = false;

  bool all_attractors_fixed() const;
};

NetworkAnalysis analyze_network(BooleanNetwork f, const CodingTable* table = nullptr);

struct TheoremCase {
  std::string id;
  std::string note;
  std::function<bool(const NetworkAnalysis&)> hypothesis;
  std::function<bool(const NetworkAnalysis&)> conclusion;
};

// All verified implications, in fixed report order.
const std::vector<TheoremCase>& theorem_registry();

// ------------------------------------------------------------------- suite

struct ExhaustiveScope {
  int n = 2;
};

struct SampledScope {
  int n = 3;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

using Scope = std::variant<ExhaustiveScope, SampledScope>;

struct CaseCounters {
  std::uint64_t checked = 0;
  std::uint64_t hypothesis_held = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t violations = 0;
};

struct Violation {
  std::uint64_t network_index = 0;  // enumeration index / sample index
  std::string case_id;
  std::string network_text;  // table format, replayable
  std::string detail;        // witness states
};

struct SuiteReport {
  std::string scope_text;
  int n = 0;
  std::uint64_t seed = 0;  // 0 for exhaustive scopes
  std::uint64_t network_count = 0;
  std::vector<std::pair<std::string, CaseCounters>> cases;  // registry order
  std::uint64_t question1_holds = 0;  // networks with 2^tau+ <= A(n, g+)
  std::uint64_t question1_fails = 0;  // recorded, never asserted
  std::vector<Violation> violations;  // ascending network index
  double wall_seconds = 0.0;

  bool ok() const { return violations.empty(); }
  std::string to_text() const;
  // Deterministic given scope + seed; wall time is only attached on request.
  std::string to_json(bool include_wall_time = false) const;
};

// Evaluates every registry case on every network in scope.  Workers split the
// index range into contiguous shards; merged results do not depend on the
// worker count.
SuiteReport run_theorem_suite(const Scope& scope, int workers = 1);

// Network number `index` of the exhaustive enumeration: bit (i*2^n + x) of
// `index` is row x of component i's table.
BooleanNetwork network_from_index(int n, std::uint64_t index);

// --------------------------------------------------------------- estimators

struct PhiEstimate {
  std::uint64_t hits = 0;   // networks whose attractors are all fixed points
  std::uint64_t total = 0;
  bool exact = false;       // full enumeration (n <= 2) instead of sampling
  double value = 0.0;
  double radius = 0.0;      // 95% binomial confidence radius; 0 when exact
};

PhiEstimate estimate_phi(int n, std::uint64_t samples, std::uint64_t seed);

// ------------------------------------------------- extremal network search

struct MaxFixedPoints {
  bool realizable = false;  // some network has exactly this interaction graph
  std::uint64_t max_fixed_points = 0;
  std::optional<BooleanNetwork> witness;
};

// Maximum of |fixed points| over all f with global interaction graph equal
// to g, by per-component candidate enumeration; vertex count capped at 3.
MaxFixedPoints max_fixed_points_over_graph(const SignedDigraph& g);

}  // namespace bnet
