#pragma once

// Fixed-point counting bounds: coding-theory quantities (exact rational
// Gilbert / sphere-packing brackets and exact small-length code sizes),
// feedback and coding bounds read off a signed digraph, the largest-binomial
// antichain bound, order machinery on state sets (chains, antichains,
// lattices), and the constructive positive-cycle extractions used by the
// counting arguments.

#include "bnet/interaction.hpp"
#include "bnet/network.hpp"
#include "bnet/sgraph.hpp"
#include "bnet/state.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace bnet {

using Rational = boost::rational<long long>;

// Exact code-size search builds a conflict graph on all 2^n states.
inline constexpr int kMaxExactCodeLength = 10;
// Rational bound formulas need 2^n and binomials in long long.
inline constexpr int kMaxCodeLength = 62;

// 2^n / sum_{k=0}^{d-1} C(n,k): every code with pairwise distance >= d can be
// extended until the distance-(d-1) balls cover the cube.
Rational gilbert_lower(int n, int d);

// 2^n / sum_{k=0}^{floor((d-1)/2)} C(n,k): packing radius balls are disjoint.
Rational hamming_upper(int n, int d);

struct ExactCode {
  std::uint64_t size = 0;
  std::vector<std::uint32_t> code;  // a maximum code, states ascending
};

// Maximum size of a subset of {0,1}^n with pairwise Hamming distance >= d,
// by exact maximum-independent-set search on the conflict graph (pairs at
// distance in [1, d-1]); n above the cap is an error.
ExactCode exact_code_size(int n, int d, int cap = kMaxExactCodeLength);

struct CodeParams {
  int n = 0;
  int d = 0;
  std::optional<std::uint64_t> exact;  // present when n fits the exact cap
  Rational gilbert;
  Rational hamming;
};

// Computes both rational bounds and, when n <= cap, the exact value; checks
// gilbert <= exact <= hamming on construction.
CodeParams code_params(int n, int d, int cap = kMaxExactCodeLength);

// 2^(tau+ of g): positive feedback vertex sets bound the fixed-point count.
std::uint64_t feedback_bound(const SignedDigraph& g);

// A(n, positive girth of g): exact when the vertex count fits the cap, the
// rounded-down sphere-packing bound otherwise; infinite girth gives 1.
std::uint64_t coding_bound(const SignedDigraph& g, int cap = kMaxExactCodeLength);

// Sum of the l largest binomial coefficients of order n: the maximum size of
// a subset of {0,1}^n without a chain of l+1 elements; l = 0 gives 0.
std::uint64_t erdos_bound(int n, int l);

// 2 + erdos_bound(tau, nu - 1) for the graph's transversal and packing
// numbers; an acyclic graph (nu = 0) gets the bare lattice bound 2.
std::uint64_t monotone_count_bound(const SignedDigraph& g);

// ------------------------------------------------------------------ posets
//
// All three work on the sub-poset induced by the componentwise order on the
// given states (exact searches, quadratic-and-worse in the set size).

// Every pair has a unique minimal common upper bound and a unique maximal
// common lower bound inside the set.
bool is_lattice(const std::vector<State>& states);

// Size of a largest totally ordered subset.
int max_chain_length(const std::vector<State>& states);

// Size of a largest pairwise incomparable subset (minimum chain cover via
// bipartite matching on the comparability relation).
int max_antichain_size(const std::vector<State>& states);

// ----------------------------------------------------------- constructions

// For distinct fixed points x, y: a positive cycle of the global interaction
// graph all of whose vertices i satisfy x_i != y_i.  Walks the "smallest
// in-arc source with matching sign" successor map over the difference set
// until a vertex repeats; a missing successor would refute the construction
// and raises logic_error.
SignedCycle extract_positive_cycle(const BooleanNetwork& f, const State& x, const State& y);

// For an ascending chain of l >= 2 distinct fixed points: l-1 pairwise
// vertex-disjoint positive cycles, the k-th inside the difference set of
// chain members k and k+1.
std::vector<SignedCycle> extract_disjoint_positive_cycles(const BooleanNetwork& f,
                                                          const std::vector<State>& chain);

}  // namespace bnet
