#include "bnet/dynamics.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace bnet {

TransitionGraph::TransitionGraph(const BooleanNetwork& f, UpdateMode mode)
    : n_(f.n()), mode_(mode) {
  std::uint32_t rows = f.state_count();
  succ_.resize(rows);
  for (std::uint32_t x = 0; x < rows; ++x) {
    if (mode == UpdateMode::synchronous) {
      succ_[x].push_back(f.step(x));
    } else {
      std::uint32_t diff = x ^ f.step(x);
      while (diff) {
        std::uint32_t bit = diff & (~diff + 1);
        succ_[x].push_back(x ^ bit);
        diff ^= bit;
      }
    }
  }
}

std::uint64_t TransitionGraph::arc_count() const {
  std::uint64_t total = 0;
  for (const auto& s : succ_) total += s.size();
  return total;
}

std::vector<State> fixed_points(const BooleanNetwork& f) {
  std::vector<State> out;
  for (std::uint32_t x = 0; x < f.state_count(); ++x)
    if (f.step(x) == x) out.emplace_back(f.n(), x);
  return out;
}

namespace {

// Iterative Tarjan over the asynchronous graph, with successors generated on
// the fly from x ^ f(x).  Returns the component id of each state; components
// are numbered in reverse topological order (sinks first).
struct SccResult {
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
};

SccResult async_sccs(const BooleanNetwork& f) {
  std::uint32_t rows = f.state_count();
  constexpr std::uint32_t kUnvisited = 0xffffffffu;
  std::vector<std::uint32_t> index(rows, kUnvisited), low(rows, 0);
  std::vector<bool> on_stack(rows, false);
  std::vector<std::uint32_t> stack;
  SccResult res;
  res.component.assign(rows, 0);
  std::uint32_t next_index = 0;

  struct Frame {
    std::uint32_t v;
    std::uint32_t diff;  // unexplored flip bits
  };
  std::vector<Frame> frames;

  for (std::uint32_t root = 0; root < rows; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, root ^ f.step(root)});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& fr = frames.back();
      if (fr.diff) {
        std::uint32_t bit = fr.diff & (~fr.diff + 1);
        fr.diff ^= bit;
        std::uint32_t w = fr.v ^ bit;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, w ^ f.step(w)});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
      } else {
        std::uint32_t v = fr.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.component[w] = res.count;
            if (w == v) break;
          }
          ++res.count;
        }
      }
    }
  }
  return res;
}

}  // namespace

std::vector<Attractor> attractors(const BooleanNetwork& f) {
  SccResult scc = async_sccs(f);
  std::uint32_t rows = f.state_count();
  // A component is an attractor iff no arc leaves it.
  std::vector<bool> trap(scc.count, true);
  for (std::uint32_t x = 0; x < rows; ++x) {
    std::uint32_t diff = x ^ f.step(x);
    while (diff) {
      std::uint32_t bit = diff & (~diff + 1);
      diff ^= bit;
      if (scc.component[x ^ bit] != scc.component[x]) trap[scc.component[x]] = false;
    }
  }
  std::vector<std::vector<State>> members(scc.count);
  for (std::uint32_t x = 0; x < rows; ++x)
    if (trap[scc.component[x]]) members[scc.component[x]].emplace_back(f.n(), x);
  std::vector<Attractor> out;
  for (auto& m : members)
    if (!m.empty()) out.push_back(Attractor{std::move(m)});  // already sorted by index
  std::sort(out.begin(), out.end(), [](const Attractor& a, const Attractor& b) {
    return a.states.front().index() < b.states.front().index();
  });
  return out;
}

namespace {

bool geodesic_search(const BooleanNetwork& f, std::uint32_t x, std::uint32_t y,
                     std::unordered_map<std::uint32_t, bool>& memo) {
  if (x == y) return true;
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  memo[x] = false;  // placeholder; search is over a DAG of strictly closer states
  std::uint32_t fx = f.step(x);
  std::uint32_t moves = (x ^ y) & (x ^ fx);  // differing components with an arc toward y
  bool ok = false;
  while (moves && !ok) {
    std::uint32_t bit = moves & (~moves + 1);
    moves ^= bit;
    ok = geodesic_search(f, x ^ bit, y, memo);
  }
  memo[x] = ok;
  return ok;
}

}  // namespace

bool has_geodesic(const BooleanNetwork& f, const State& x, const State& y) {
  if (x.width() != f.n() || y.width() != f.n())
    throw std::invalid_argument("state width does not match network size");
  std::unordered_map<std::uint32_t, bool> memo;
  return geodesic_search(f, x.index(), y.index(), memo);
}

std::optional<std::uint64_t> shortest_path_length(const TransitionGraph& g,
                                                  const State& x, const State& y) {
  if (x.width() != g.n() || y.width() != g.n())
    throw std::invalid_argument("state width does not match graph size");
  if (x == y) return 0;
  std::vector<std::uint64_t> dist(g.state_count(), 0);
  std::vector<bool> seen(g.state_count(), false);
  std::vector<std::uint32_t> queue{x.index()};
  seen[x.index()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t v = queue[head];
    for (std::uint32_t w : g.successors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      dist[w] = dist[v] + 1;
      if (w == y.index()) return dist[w];
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

bool is_asynchronous_graph_acyclic(const BooleanNetwork& f) {
  // The asynchronous graph has no self-loops, so it is acyclic iff every
  // strongly connected component is a singleton.
  SccResult scc = async_sccs(f);
  return scc.count == f.state_count();
}

std::optional<std::uint64_t> synchronous_convergence_steps(const BooleanNetwork& f,
                                                           const State& start,
                                                           const State& x_fix) {
  if (start.width() != f.n() || x_fix.width() != f.n())
    throw std::invalid_argument("state width does not match network size");
  if (f.step(x_fix.index()) != x_fix.index())
    throw std::invalid_argument("target state is not a fixed point");
  std::uint32_t x = start.index();
  // The forward orbit enters a cycle within 2^n steps.
  for (std::uint64_t t = 0; t <= f.state_count(); ++t) {
    if (x == x_fix.index()) return t;
    x = f.step(x);
  }
  return std::nullopt;
}

std::string transition_graph_dot(const BooleanNetwork& f, const TransitionGraph& g,
                                 bool mark_attractors, std::string_view name) {
  if (mark_attractors && g.mode() != UpdateMode::asynchronous)
    throw std::invalid_argument("attractor marking applies to asynchronous graphs");
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  std::vector<bool> in_attractor(g.state_count(), false);
  if (mark_attractors)
    for (const Attractor& a : attractors(f))
      for (const State& s : a.states) in_attractor[s.index()] = true;
  for (std::uint32_t x = 0; x < g.state_count(); ++x) {
    out << "  \"" << State(g.n(), x).to_string() << '"';
    if (mark_attractors && in_attractor[x]) out << " [peripheries=2]";
    out << ";\n";
  }
  for (std::uint32_t x = 0; x < g.state_count(); ++x)
    for (std::uint32_t y : g.successors(x))
      out << "  \"" << State(g.n(), x).to_string() << "\" -> \""
          << State(g.n(), y).to_string() << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bnet
