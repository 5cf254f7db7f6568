#pragma once

// Dynamics of a Boolean network under the two classic update schemes.
//
// The synchronous graph has one arc x -> f(x) per state.  The asynchronous
// graph has an arc x -> (x with component i flipped) for every i with
// f_i(x) != x_i.  Attractors are the trap strongly connected components of
// the asynchronous graph; the singletons among them are the fixed points.

#include "bnet/network.hpp"
#include "bnet/state.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnet {

enum class UpdateMode { synchronous, asynchronous };

class TransitionGraph {
 public:
  TransitionGraph(const BooleanNetwork& f, UpdateMode mode);

  int n() const { return n_; }
  UpdateMode mode() const { return mode_; }
  std::uint32_t state_count() const { return std::uint32_t{1} << n_; }
  const std::vector<std::uint32_t>& successors(std::uint32_t x) const {
    return succ_[x];
  }
  std::uint64_t arc_count() const;

 private:
  int n_;
  UpdateMode mode_;
  std::vector<std::vector<std::uint32_t>> succ_;
};

// Fixed points in increasing index order.
std::vector<State> fixed_points(const BooleanNetwork& f);

struct Attractor {
  std::vector<State> states;  // increasing index order
  bool fixed_point() const { return states.size() == 1; }
};

// Attractors ordered by smallest member state.
std::vector<Attractor> attractors(const BooleanNetwork& f);

// True iff the asynchronous graph has a path from x to y of length exactly
// hamming(x, y), i.e. one flipping each differing component exactly once.
bool has_geodesic(const BooleanNetwork& f, const State& x, const State& y);

// BFS distance in the given transition graph; nullopt when unreachable.
std::optional<std::uint64_t> shortest_path_length(const TransitionGraph& g,
                                                  const State& x, const State& y);

bool is_asynchronous_graph_acyclic(const BooleanNetwork& f);

// Number of synchronous steps from start to the fixed point x_fix, following
// the unique forward orbit; nullopt when the orbit never reaches it.
std::optional<std::uint64_t> synchronous_convergence_steps(const BooleanNetwork& f,
                                                           const State& start,
                                                           const State& x_fix);

// DOT export; when mark_attractors is set (asynchronous graphs only),
// attractor members get peripheries=2.
std::string transition_graph_dot(const BooleanNetwork& f, const TransitionGraph& g,
                                 bool mark_attractors,
                                 std::string_view name = "dynamics");

}  // namespace bnet
