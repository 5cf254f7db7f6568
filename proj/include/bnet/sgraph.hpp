#pragma once

// Cycle structure of signed digraphs: enumeration, positive/negative cycle
// detection by two independent routes, transversal and packing numbers with
// certificates, strongly connected components, and switching.
//
// A signed cycle is a simple directed cycle together with one sign choice per
// arc; when a pair of vertices carries parallel arcs of both signs, each
// choice counts as a distinct signed cycle.  The sign of a cycle is the
// product of its arc signs.

#include "bnet/interaction.hpp"
#include "bnet/network.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bnet {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

// Exact searches (cycle enumeration, transversals) refuse larger graphs.
inline constexpr int kMaxExactGraphVertices = 25;

struct CycleCapExceeded : std::runtime_error {
  explicit CycleCapExceeded(std::size_t cap)
      : std::runtime_error("cycle enumeration exceeded the cap of " +
                           std::to_string(cap) + " cycles"),
        cap(cap) {}
  std::size_t cap;
};

struct SignedCycle {
  std::vector<int> vertices;    // distinct; rotated so vertices[0] is smallest
  std::vector<Sign> arc_signs;  // arc k goes vertices[k] -> vertices[(k+1) % length]

  int length() const { return static_cast<int>(vertices.size()); }
  Sign sign() const;
  std::uint32_t vertex_mask() const;

  // Rotates an arbitrary vertex/sign sequence into canonical form.
  static SignedCycle from_sequence(std::vector<int> vertices, std::vector<Sign> signs);

  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
  // Order: by length, then vertex sequence, then signs (+ before -).
  friend bool operator<(const SignedCycle& a, const SignedCycle& b);
};

std::string cycle_to_string(const SignedCycle& c);  // "1 -[+]-> 2 -[-]-> 1"

// All simple signed cycles in canonical order; throws CycleCapExceeded when
// the graph has more than `cap` of them.
std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& g,
                                          std::size_t cap = kDefaultCycleCap);

// ------------------------------------------------------- detection, 2 routes

struct CycleCheck {
  bool found = false;
  std::optional<SignedCycle> witness;  // first in canonical order
};

// Unsigned digraph used by the parity reduction.
struct Digraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arcs;
};

// Replaces every positive arc by a length-2 path of negative arcs through a
// fresh vertex (appended in canonical arc order) and drops the signs.  Simple
// cycles of the result correspond one-to-one to signed cycles of g, and a
// cycle of g is negative iff its image has odd length.
Digraph even_cycle_reduction(const SignedDigraph& g);

// Both run two independent detection routes and insist that they agree:
// enumeration over signed cycles, and a parity argument on the reduction
// (per-component bipartiteness for negative cycles, an unsigned cycle scan
// for positive ones).
CycleCheck has_negative_cycle(const SignedDigraph& g,
                              std::size_t cap = kDefaultCycleCap);
CycleCheck has_positive_cycle(const SignedDigraph& g,
                              std::size_t cap = kDefaultCycleCap);

// Length of a shortest positive cycle; nullopt when there is none.
std::optional<int> positive_girth(const SignedDigraph& g,
                                  std::size_t cap = kDefaultCycleCap);

// --------------------------------------------------- transversals & packings

struct GraphStats {
  int tau = 0;       // minimum feedback vertex set size
  int tau_plus = 0;  // minimum positive feedback vertex set size
  int nu = 0;        // maximum number of vertex-disjoint cycles
  int nu_plus = 0;   // maximum number of vertex-disjoint positive cycles
  std::optional<int> positive_girth;
  bool has_positive_cycle = false;
  bool has_negative_cycle = false;
};

struct TransversalAnalysis {
  GraphStats stats;
  std::vector<SignedCycle> cycles;  // full enumeration, canonical order
  std::vector<int> feedback_vertex_set;           // optimal, |.| = tau
  std::vector<int> positive_feedback_vertex_set;  // optimal, |.| = tau_plus
  std::vector<SignedCycle> disjoint_cycles;           // packing, |.| = nu
  std::vector<SignedCycle> disjoint_positive_cycles;  // packing, |.| = nu_plus
};

// Exact tau/tau+ by increasing-size subset search, exact nu/nu+ by
// backtracking over the enumerated cycles.  The stats invariants
// (nu+ <= tau+ <= tau, nu+ <= nu <= tau, tau+ = tau and nu+ = nu when no
// negative cycle exists, tau+ = 0 iff no positive cycle, tau = 0 iff acyclic)
// are checked on every construction.
TransversalAnalysis transversal_numbers(const SignedDigraph& g,
                                        std::size_t cap = kDefaultCycleCap);

// Smallest vertex set meeting every cycle in the list (exact subset search);
// useful for transversals of cycle families pooled from several graphs.
std::vector<int> minimum_cycle_transversal(const std::vector<SignedCycle>& cycles);

// ------------------------------------------------------------ components

struct SccComponent {
  std::vector<int> vertices;  // increasing
  bool trivial = false;       // no internal arc
  bool initial = false;       // no arc enters from outside
};

// Components ordered by smallest vertex.
std::vector<SccComponent> scc_decomposition(const SignedDigraph& g);
bool is_strongly_connected(const SignedDigraph& g);

// ---------------------------------------------------------------- switching

struct SwitchingResult {
  std::optional<std::vector<int>> sigma;       // per-vertex +1/-1, sigma[0] = +1
  std::optional<SignedCycle> negative_cycle;   // witness when sigma is absent
};

// For a strongly connected g: finds sigma with sigma_j * sigma_i = sign(j->i)
// for every arc, which exists iff g has no negative cycle.  Throws when g is
// not strongly connected.
SwitchingResult positive_switching(const SignedDigraph& g);

// Conjugate h = phi . f . phi where phi flips every component with sigma = -1.
BooleanNetwork switch_network(const BooleanNetwork& f, const std::vector<int>& sigma);

// --------------------------------------------------------------- arc deletion

// True iff every cycle of the given polarity contains an arc whose deletion
// makes the strongly connected component of the arc's head non-trivial,
// initial, and free of same-polarity cycles (all its cycles have the opposite
// polarity).  With polarity = positive this forces at most one fixed point of
// any network with this interaction graph; with negative, at least one.
bool r18_hypothesis(const SignedDigraph& g, Sign polarity,
                    std::size_t cap = kDefaultCycleCap);

}  // namespace bnet
