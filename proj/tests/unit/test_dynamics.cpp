#include <doctest.h>

#include "bnet/dynamics.hpp"
#include "bnet/network.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace bnet;

namespace {

BooleanNetwork demo() {
  return parse_network(
      "n = 3\n"
      "f1 = x1 & x2 & x3\n"
      "f2 = x1 | !x3\n"
      "f3 = (x2 & !x3) | (x1 & !x2 & !x3) | (x1 & x2 & x3)\n");
}

std::set<std::string> successor_strings(const TransitionGraph& g, const std::string& x) {
  std::set<std::string> out;
  State s = State::from_string(x);
  for (std::uint32_t y : g.successors(s.index())) out.insert(State(g.n(), y).to_string());
  return out;
}

std::vector<std::vector<std::string>> attractor_strings(const BooleanNetwork& f) {
  std::vector<std::vector<std::string>> out;
  for (const Attractor& a : attractors(f)) {
    std::vector<std::string> states;
    for (const State& s : a.states) states.push_back(s.to_string());
    out.push_back(std::move(states));
  }
  return out;
}

}  // namespace

TEST_CASE("asynchronous successors flip one differing component") {
  TransitionGraph g(demo(), UpdateMode::asynchronous);
  CHECK(successor_strings(g, "100") == std::set<std::string>{"000", "110", "101"});
  CHECK(successor_strings(g, "111").empty());  // fixed point
  CHECK(successor_strings(g, "000") == std::set<std::string>{"010"});
}

TEST_CASE("synchronous graph has exactly one successor per state") {
  BooleanNetwork f = demo();
  TransitionGraph g(f, UpdateMode::synchronous);
  CHECK(g.arc_count() == 8);
  for (std::uint32_t x = 0; x < 8; ++x) {
    REQUIRE(g.successors(x).size() == 1);
    CHECK(g.successors(x)[0] == f.step(x));
  }
}

TEST_CASE("fixed points of the demo network") {
  std::vector<State> fps = fixed_points(demo());
  REQUIRE(fps.size() == 1);
  CHECK(fps[0].to_string() == "111");
}

TEST_CASE("attractors of the demo network") {
  auto atts = attractor_strings(demo());
  REQUIRE(atts.size() == 2);
  // Members in increasing state-index order: 000, 010, 001, 011.
  CHECK(atts[0] == std::vector<std::string>{"000", "010", "001", "011"});
  CHECK(atts[1] == std::vector<std::string>{"111"});
}

TEST_CASE("attractors of the two-component cycle networks") {
  // One negation: dynamics cycle through all four states.
  auto neg = attractor_strings(make_cycle_network({Sign::positive, Sign::negative}));
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].size() == 4);

  // Two negations make the cycle positive: two fixed points.
  auto pos = attractor_strings(make_cycle_network({Sign::negative, Sign::negative}));
  REQUIRE(pos.size() == 2);
  // "10" is state index 1, "01" is state index 2.
  CHECK(pos[0] == std::vector<std::string>{"10"});
  CHECK(pos[1] == std::vector<std::string>{"01"});
}

TEST_CASE("attractor states never leave the attractor") {
  for (std::uint64_t k = 0; k < 100; ++k) {
    BooleanNetwork f = random_network(3, derive_seed(23, k));
    TransitionGraph g(f, UpdateMode::asynchronous);
    for (const Attractor& a : attractors(f)) {
      std::set<std::uint32_t> inside;
      for (const State& s : a.states) inside.insert(s.index());
      for (std::uint32_t x : inside)
        for (std::uint32_t y : g.successors(x)) CHECK(inside.count(y) == 1);
    }
  }
}

TEST_CASE("geodesics in the demo network") {
  BooleanNetwork f = demo();
  CHECK(has_geodesic(f, State::from_string("100"), State::from_string("111")));
  CHECK(has_geodesic(f, State::from_string("110"), State::from_string("111")));
  // 000 sits in the cyclic attractor: no path to 111 at all.
  CHECK_FALSE(has_geodesic(f, State::from_string("000"), State::from_string("111")));
  CHECK(has_geodesic(f, State::from_string("111"), State::from_string("111")));
}

TEST_CASE("geodesic implies a shortest path of hamming length") {
  TransitionGraph g(demo(), UpdateMode::asynchronous);
  auto d = shortest_path_length(g, State::from_string("100"), State::from_string("111"));
  REQUIRE(d.has_value());
  CHECK(*d == 2);
  CHECK_FALSE(
      shortest_path_length(g, State::from_string("000"), State::from_string("111")));
  CHECK(*shortest_path_length(g, State::from_string("000"), State::from_string("000")) == 0);
}

TEST_CASE("geodesic checks agree with explicit path enumeration") {
  // Oracle: DFS over all orders of flipping the differing components.
  auto oracle = [](const BooleanNetwork& f, std::uint32_t x, std::uint32_t y) {
    std::vector<std::uint32_t> stack{x};
    std::set<std::uint32_t> seen{x};
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      if (v == y) return true;
      std::uint32_t moves = (v ^ y) & (v ^ f.step(v));
      while (moves) {
        std::uint32_t bit = moves & (~moves + 1);
        moves ^= bit;
        if (seen.insert(v ^ bit).second) stack.push_back(v ^ bit);
      }
    }
    return false;
  };
  for (std::uint64_t k = 0; k < 60; ++k) {
    BooleanNetwork f = random_network(3, derive_seed(31, k));
    for (std::uint32_t x = 0; x < 8; ++x)
      for (std::uint32_t y = 0; y < 8; ++y)
        CHECK(has_geodesic(f, State(3, x), State(3, y)) == oracle(f, x, y));
  }
}

TEST_CASE("asynchronous acyclicity") {
  CHECK_FALSE(is_asynchronous_graph_acyclic(demo()));  // has a cyclic attractor
  BooleanNetwork shift = parse_network("n = 3\nf1 = 0\nf2 = x1\nf3 = x2\n");
  CHECK(is_asynchronous_graph_acyclic(shift));
}

TEST_CASE("synchronous convergence steps") {
  BooleanNetwork shift = parse_network("n = 3\nf1 = 0\nf2 = x1\nf3 = x2\n");
  State zero = State::from_string("000");
  CHECK(*synchronous_convergence_steps(shift, State::from_string("111"), zero) == 3);
  CHECK(*synchronous_convergence_steps(shift, zero, zero) == 0);

  BooleanNetwork f = demo();
  State fix = State::from_string("111");
  CHECK(*synchronous_convergence_steps(f, fix, fix) == 0);
  // 000 orbits 010 -> 011 -> 000 forever.
  CHECK_FALSE(synchronous_convergence_steps(f, State::from_string("000"), fix));
  CHECK_THROWS_AS(synchronous_convergence_steps(f, zero, State::from_string("000")),
                  std::invalid_argument);
}

TEST_CASE("dot export marks attractor states") {
  BooleanNetwork f = demo();
  TransitionGraph g(f, UpdateMode::asynchronous);
  std::string dot = transition_graph_dot(f, g, true);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"111\" [peripheries=2]") != std::string::npos);
  CHECK(dot.find("\"100\" [peripheries=2]") == std::string::npos);
  TransitionGraph sync(f, UpdateMode::synchronous);
  CHECK_THROWS_AS(transition_graph_dot(f, sync, true), std::invalid_argument);
}
