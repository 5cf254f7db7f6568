#include <doctest.h>

#include "bnet/harness.hpp"
#include "bnet/interaction.hpp"
#include "bnet/network.hpp"

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

SignedDigraph graph_of(int n, const std::vector<SignedArc>& arcs) {
  SignedDigraph g(n);
  for (const SignedArc& a : arcs) g.add_arc(a.source, a.target, a.sign);
  return g;
}

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

}  // namespace

TEST_CASE("discrete derivative values on the demo network") {
  BooleanNetwork f = demo();
  // f2 = x1 | !x3 decreases in x3 exactly when x1 = 0.
  CHECK(discrete_derivative(f, 1, 2, State::from_string("000")) == -1);
  CHECK(discrete_derivative(f, 1, 2, State::from_string("010")) == -1);
  CHECK(discrete_derivative(f, 1, 2, State::from_string("100")) == 0);
  CHECK(discrete_derivative(f, 1, 2, State::from_string("110")) == 0);
  // The derivative ignores the value of x_j itself.
  CHECK(discrete_derivative(f, 1, 2, State::from_string("001")) == -1);
  CHECK(discrete_derivative(f, 0, 0, State::from_string("011")) == 1);
}

TEST_CASE("local graphs of the demo network at all eight states") {
  BooleanNetwork f = demo();
  // Arcs as (source, target, sign), 0-based, derived from the definition.
  std::vector<std::vector<SignedArc>> expected = {
      /*000*/ {{0, 2, P}, {1, 2, P}, {2, 1, N}},
      /*100*/ {{0, 2, P}, {2, 2, N}},
      /*010*/ {{1, 2, P}, {2, 1, N}, {2, 2, N}},
      /*110*/ {{2, 0, P}},
      /*001*/ {{0, 1, P}, {2, 1, N}},
      /*101*/ {{0, 1, P}, {1, 0, P}, {1, 2, P}, {2, 2, N}},
      /*011*/ {{0, 0, P}, {0, 1, P}, {0, 2, P}, {2, 1, N}, {2, 2, N}},
      /*111*/ {{0, 0, P}, {0, 1, P}, {0, 2, P}, {1, 0, P}, {1, 2, P}, {2, 0, P}},
  };
  for (std::uint32_t x = 0; x < 8; ++x) {
    CAPTURE(x);
    CHECK(local_graph(f, State(3, x)) == graph_of(3, expected[x]));
  }
}

TEST_CASE("global graph of the demo network has exactly eight arcs") {
  SignedDigraph g = global_graph(demo());
  SignedDigraph expected = graph_of(3, {{0, 0, P},
                                        {0, 1, P},
                                        {0, 2, P},
                                        {1, 0, P},
                                        {1, 2, P},
                                        {2, 0, P},
                                        {2, 1, N},
                                        {2, 2, N}});
  CHECK(g == expected);
}

TEST_CASE("local graphs are subgraphs of the global graph") {
  for (std::uint64_t k = 0; k < 200; ++k) {
    BooleanNetwork f = random_network(3, derive_seed(11, k));
    SignedDigraph g = global_graph(f);
    for (std::uint32_t x = 0; x < f.state_count(); ++x) {
      SignedDigraph l = local_graph(f, State(3, x));
      for (const SignedArc& a : l.arcs()) {
        CHECK(g.has_arc(a.source, a.target, a.sign));
      }
    }
  }
}

TEST_CASE("one ordered pair can carry both signs globally") {
  BooleanNetwork f = parse_network("n = 2\nf1 = (x1 & !x2) | (!x1 & x2)\nf2 = 0\n");
  SignedDigraph g = global_graph(f);
  CHECK(g.has_arc(1, 0, P));
  CHECK(g.has_arc(1, 0, N));
  CHECK(g.has_arc(0, 0, P));
  CHECK(g.has_arc(0, 0, N));
  CHECK(g.arcs().size() == 4);
  // ... but never locally.
  for (std::uint32_t x = 0; x < 4; ++x) {
    SignedDigraph l = local_graph(f, State(2, x));
    for (const SignedArc& a : l.arcs()) {
      Sign other = a.sign == P ? N : P;
      CHECK_FALSE(l.has_arc(a.source, a.target, other));
    }
  }
}

TEST_CASE("monotone iff the global graph has only positive arcs (n = 2, exhaustive)") {
  for (std::uint64_t k = 0; k < 256; ++k) {
    BooleanNetwork f = network_from_index(2, k);
    CHECK(is_monotone(f) == global_graph(f).positive_only());
  }
}

TEST_CASE("signed graph text round trip") {
  SignedDigraph g = graph_of(3, {{0, 1, P}, {2, 1, N}, {2, 2, N}});
  std::string text = render_signed_graph(g);
  CHECK(text == "vertices = 3\n1 -> 2 +\n3 -> 2 -\n3 -> 3 -\n");
  CHECK(parse_signed_graph(text) == g);
  CHECK(parse_signed_graph("# comment\nvertices = 2\n") == SignedDigraph(2));
}

TEST_CASE("signed graph parse errors") {
  CHECK_THROWS_AS(parse_signed_graph(""), ParseError);
  CHECK_THROWS_AS(parse_signed_graph("vertices = x\n"), ParseError);
  CHECK_THROWS_AS(parse_signed_graph("vertices = 2\n0 -> 1 +\n"), ParseError);
  CHECK_THROWS_AS(parse_signed_graph("vertices = 2\n1 -> 3 +\n"), ParseError);
  CHECK_THROWS_AS(parse_signed_graph("vertices = 2\n1 -> 2 *\n"), ParseError);
  CHECK_THROWS_AS(parse_signed_graph("1 -> 2 +\n"), ParseError);
}

TEST_CASE("arc storage is sorted, unique, and queryable") {
  SignedDigraph g(3);
  g.add_arc(2, 0, N);
  g.add_arc(0, 1, P);
  g.add_arc(2, 0, N);  // duplicate, ignored
  CHECK(g.arcs().size() == 2);
  // Canonical order: by target, then source, then + before -.
  CHECK(g.arcs()[0] == SignedArc{2, 0, N});
  CHECK(g.arcs()[1] == SignedArc{0, 1, P});
  CHECK(g.has_arc(2, 0, N));
  CHECK_FALSE(g.has_arc(2, 0, P));
  CHECK_THROWS_AS(g.add_arc(3, 0, P), std::out_of_range);

  SignedDigraph without = g.without_arc(SignedArc{2, 0, N});
  CHECK(without.arcs().size() == 1);
  CHECK(without.vertex_count() == 3);
}

TEST_CASE("dot export carries signs as colors") {
  std::string dot = signed_graph_dot(graph_of(2, {{0, 1, P}, {1, 0, N}}));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("1 -> 2 [color=green]") != std::string::npos);
  CHECK(dot.find("2 -> 1 [color=red, arrowhead=tee]") != std::string::npos);
}
