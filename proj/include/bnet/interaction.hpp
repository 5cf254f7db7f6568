#pragma once

// Signed interaction structure of a Boolean network.
//
// The discrete derivative of component i with respect to j at state x is
// f_i(x with x_j=1) - f_i(x with x_j=0), a value in {-1, 0, +1}.  The local
// interaction graph at x has an arc j -> i with the derivative's sign when it
// is nonzero; the global interaction graph is the union over all states, and
// may carry both signs on one ordered pair (local graphs never do).

#include "bnet/network.hpp"
#include "bnet/state.hpp"

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace bnet {

struct SignedArc {
  int source = 0;
  int target = 0;
  Sign sign = Sign::positive;

  // Canonical order: by target, then source, then sign (+ before -).
  friend bool operator==(const SignedArc&, const SignedArc&) = default;
  friend bool operator<(const SignedArc& a, const SignedArc& b) {
    return std::tuple(a.target, a.source, a.sign == Sign::negative) <
           std::tuple(b.target, b.source, b.sign == Sign::negative);
  }
};

class SignedDigraph {
 public:
  SignedDigraph() = default;
  explicit SignedDigraph(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  const std::vector<SignedArc>& arcs() const { return arcs_; }

  void add_arc(int source, int target, Sign sign);  // idempotent
  void add_arc(const SignedArc& a) { add_arc(a.source, a.target, a.sign); }
  bool has_arc(int source, int target, Sign sign) const;
  bool has_arc(const SignedArc& a) const { return has_arc(a.source, a.target, a.sign); }
  SignedDigraph without_arc(const SignedArc& arc) const;

  bool positive_only() const;

  // Out-arcs of each vertex, in canonical (target, sign) order.
  std::vector<std::vector<SignedArc>> out_adjacency() const;

  friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<SignedArc> arcs_;  // sorted, no duplicates
};

int discrete_derivative(const BooleanNetwork& f, int i, int j, const State& x);
SignedDigraph local_graph(const BooleanNetwork& f, const State& x);
SignedDigraph global_graph(const BooleanNetwork& f);

// ------------------------------------------------------------------- text IO
//
// Signed graph file format (vertices are labelled 1..n):
//
//   # optional comment lines
//   vertices = 3
//   1 -> 2 +
//   3 -> 2 -
//
SignedDigraph parse_signed_graph(std::string_view text);
std::string render_signed_graph(const SignedDigraph& g);

// DOT export: positive arcs green, negative arcs red with a tee arrowhead.
std::string signed_graph_dot(const SignedDigraph& g, std::string_view name = "interaction");

}  // namespace bnet
