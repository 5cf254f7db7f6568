#include "bnet/bounds.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

namespace bnet {
namespace {

// Pascal row n; n <= 62 keeps every entry and every partial sum in ull.
std::vector<unsigned long long> binomial_row(int n) {
  if (n < 0 || n > kMaxCodeLength) {
    throw std::invalid_argument("binomial order must be in [0, " +
                                std::to_string(kMaxCodeLength) + "]");
  }
  std::vector<unsigned long long> row(n + 1, 1);
  for (int i = 1; i <= n; ++i) {
    for (int k = i - 1; k > 0; --k) row[k] += row[k - 1];
  }
  return row;
}

long long ball_size(int n, int radius) {
  const auto row = binomial_row(n);
  long long sum = 0;
  for (int k = 0; k <= radius && k <= n; ++k) sum += static_cast<long long>(row[k]);
  return sum;
}

void check_code_arguments(int n, int d) {
  if (n < 1 || n > kMaxCodeLength) {
    throw std::invalid_argument("code length must be in [1, " +
                                std::to_string(kMaxCodeLength) + "]");
  }
  if (d < 1) throw std::invalid_argument("minimum distance must be at least 1");
}

}  // namespace

Rational gilbert_lower(int n, int d) {
  check_code_arguments(n, d);
  return Rational(1LL << n, ball_size(n, d - 1));
}

Rational hamming_upper(int n, int d) {
  check_code_arguments(n, d);
  return Rational(1LL << n, ball_size(n, (d - 1) / 2));
}

// ------------------------------------------------------------- exact A(n,d)

namespace {

// Dense bitset over state indices, sized for 2^n <= 4096.
struct IndexSet {
  std::vector<std::uint64_t> words;

  explicit IndexSet(std::size_t bits) : words((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return words[i >> 6] >> (i & 63) & 1u; }
  int count() const {
    int c = 0;
    for (std::uint64_t w : words) c += std::popcount(w);
    return c;
  }
  int first() const {  // -1 when empty
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (words[k]) return static_cast<int>(k * 64 + std::countr_zero(words[k]));
    }
    return -1;
  }
  IndexSet& subtract(const IndexSet& o) {
    for (std::size_t k = 0; k < words.size(); ++k) words[k] &= ~o.words[k];
    return *this;
  }
};

}  // namespace

ExactCode exact_code_size(int n, int d, int cap) {
  if (d < 0) throw std::invalid_argument("minimum distance must be non-negative");
  if (n < 1) throw std::invalid_argument("code length must be at least 1");
  // Hard ceiling 12 on top of the configurable cap: the conflict bitsets are
  // quadratic in 2^n.
  if (n > cap || n > 12) {
    throw std::invalid_argument("exact code search capped at length " +
                                std::to_string(std::min(cap, 12)) + ", got " +
                                std::to_string(n));
  }
  const std::uint32_t total = std::uint32_t{1} << n;

  ExactCode result;
  if (d <= 1) {  // no conflicts: the whole cube
    result.size = total;
    for (std::uint32_t x = 0; x < total; ++x) result.code.push_back(x);
    return result;
  }
  if (d == 2) {  // even-weight states: optimal, and distance-1 pairs differ in parity
    for (std::uint32_t x = 0; x < total; ++x) {
      if (std::popcount(x) % 2 == 0) result.code.push_back(x);
    }
    result.size = result.code.size();
    return result;
  }

  // Branch and bound over states sorted by weight then value.
  std::vector<std::uint32_t> order(total);
  for (std::uint32_t x = 0; x < total; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::make_pair(std::popcount(a), a) < std::make_pair(std::popcount(b), b);
  });
  std::vector<IndexSet> conflict(total, IndexSet(total));
  for (std::uint32_t i = 0; i < total; ++i) {
    for (std::uint32_t j = 0; j < total; ++j) {
      int dist = std::popcount(order[i] ^ order[j]);
      if (dist >= 1 && dist < d) conflict[i].set(j);
    }
  }

  std::vector<int> best, current;
  IndexSet all(total);
  for (std::uint32_t i = 0; i < total; ++i) all.set(i);
  {  // greedy initial code
    IndexSet avail = all;
    for (std::uint32_t i = 0; i < total; ++i) {
      if (!avail.test(i)) continue;
      best.push_back(static_cast<int>(i));
      avail.reset(i);
      avail.subtract(conflict[i]);
    }
  }
  std::function<void(IndexSet)> go = [&](IndexSet candidates) {
    if (current.size() > best.size()) best = current;
    int v = candidates.first();
    if (v < 0) return;
    if (current.size() + candidates.count() <= best.size()) return;
    candidates.reset(v);
    current.push_back(v);
    IndexSet with = candidates;
    with.subtract(conflict[v]);
    go(std::move(with));
    current.pop_back();
    go(std::move(candidates));
  };
  go(all);

  for (int i : best) result.code.push_back(order[i]);
  std::sort(result.code.begin(), result.code.end());
  result.size = result.code.size();
  return result;
}

CodeParams code_params(int n, int d, int cap) {
  CodeParams p;
  p.n = n;
  p.d = d;
  p.gilbert = gilbert_lower(n, d);
  p.hamming = hamming_upper(n, d);
  if (n <= cap && n <= 12) {
    p.exact = exact_code_size(n, d, cap).size;
    Rational e(static_cast<long long>(*p.exact));
    if (e < p.gilbert || p.hamming < e) {
      throw std::logic_error("exact code size escapes its Gilbert/Hamming bracket");
    }
  }
  return p;
}

// --------------------------------------------------------------- graph bounds

std::uint64_t feedback_bound(const SignedDigraph& g) {
  return std::uint64_t{1} << transversal_numbers(g).stats.tau_plus;
}

std::uint64_t coding_bound(const SignedDigraph& g, int cap) {
  std::optional<int> girth = positive_girth(g);
  if (!girth) return 1;  // infinite positive girth
  CodeParams p = code_params(g.vertex_count(), *girth, cap);
  if (p.exact) return *p.exact;
  return static_cast<std::uint64_t>(boost::rational_cast<long long>(p.hamming));
}

std::uint64_t erdos_bound(int n, int l) {
  if (n < 0 || l < 0 || l > n + 1) {
    throw std::invalid_argument("erdos_bound needs 0 <= l <= n + 1");
  }
  if (l == 0) return 0;
  const auto row = binomial_row(n);
  std::uint64_t sum = 0;
  for (int k = (n - l + 1) / 2; k <= (n + l - 1) / 2; ++k) sum += row[k];
  return sum;
}

std::uint64_t monotone_count_bound(const SignedDigraph& g) {
  GraphStats stats = transversal_numbers(g).stats;
  if (stats.nu == 0) return 2;
  return 2 + erdos_bound(stats.tau, stats.nu - 1);
}

// -------------------------------------------------------------------- posets

namespace {

std::vector<State> dedup(std::vector<State> states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  return states;
}

bool strictly_below(const State& a, const State& b) { return a != b && a.leq(b); }

}  // namespace

bool is_lattice(const std::vector<State>& input) {
  const std::vector<State> s = dedup(input);
  const int m = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (bool upper : {true, false}) {
        std::vector<int> common;
        for (int k = 0; k < m; ++k) {
          bool fits = upper ? s[i].leq(s[k]) && s[j].leq(s[k])
                            : s[k].leq(s[i]) && s[k].leq(s[j]);
          if (fits) common.push_back(k);
        }
        int extremal = 0;
        for (int a : common) {
          bool is_extremal = true;
          for (int b : common) {
            bool beats = upper ? strictly_below(s[b], s[a]) : strictly_below(s[a], s[b]);
            if (beats) {
              is_extremal = false;
              break;
            }
          }
          extremal += is_extremal;
        }
        if (extremal != 1) return false;
      }
    }
  }
  return true;
}

int max_chain_length(const std::vector<State>& input) {
  std::vector<State> s = dedup(input);
  // x strictly below y forces a strictly smaller weight, so weight order is
  // topological.
  std::sort(s.begin(), s.end(), [](const State& a, const State& b) {
    int wa = std::popcount(a.index()), wb = std::popcount(b.index());
    return std::tie(wa, a) < std::tie(wb, b);
  });
  const int m = static_cast<int>(s.size());
  std::vector<int> dp(m, 0);
  int best = 0;
  for (int i = 0; i < m; ++i) {
    dp[i] = 1;
    for (int j = 0; j < i; ++j) {
      if (strictly_below(s[j], s[i])) dp[i] = std::max(dp[i], dp[j] + 1);
    }
    best = std::max(best, dp[i]);
  }
  return best;
}

int max_antichain_size(const std::vector<State>& input) {
  const std::vector<State> s = dedup(input);
  const int m = static_cast<int>(s.size());
  // Minimum chain cover equals m minus a maximum matching on the (already
  // transitive) strict comparability relation; its size is the answer.
  std::vector<std::vector<int>> below(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (strictly_below(s[i], s[j])) below[i].push_back(j);
    }
  }
  std::vector<int> match_to(m, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int u) {
    for (int v : below[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_to[v] == -1 || augment(match_to[v])) {
        match_to[v] = u;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int u = 0; u < m; ++u) {
    visited.assign(m, 0);
    if (augment(u)) ++matched;
  }
  return m - matched;
}

// ------------------------------------------------------------- constructions

SignedCycle extract_positive_cycle(const BooleanNetwork& f, const State& x, const State& y) {
  if (x.width() != f.n() || y.width() != f.n()) {
    throw std::invalid_argument("states must match the network arity");
  }
  if (x == y) throw std::invalid_argument("fixed points must be distinct");
  if (f.evaluate(x) != x || f.evaluate(y) != y) {
    throw std::invalid_argument("both states must be fixed points");
  }
  const SignedDigraph g = global_graph(f);

  std::vector<int> delta(f.n(), 0);  // y_i - x_i on the difference set
  std::vector<int> diff;
  for (int i = 0; i < f.n(); ++i) {
    if (x.bit(i) != y.bit(i)) {
      delta[i] = y.bit(i) ? +1 : -1;
      diff.push_back(i);
    }
  }

  // Smallest j in the difference set with an arc j -> i of sign
  // delta_j * delta_i; the underlying lemma guarantees one exists.
  auto successor = [&](int i) {
    for (int j : diff) {
      Sign needed = delta[j] * delta[i] > 0 ? Sign::positive : Sign::negative;
      if (g.has_arc(SignedArc{j, i, needed})) return j;
    }
    throw std::logic_error("difference-set vertex has no matching in-arc");
  };

  std::vector<int> walk{diff.front()};
  std::vector<int> position(f.n(), -1);
  position[walk.front()] = 0;
  int repeat = 0;
  while (true) {
    int next = successor(walk.back());
    if (position[next] != -1) {
      repeat = position[next];
      break;
    }
    position[next] = static_cast<int>(walk.size());
    walk.push_back(next);
  }

  // Arcs run walk[k+1] -> walk[k], so the repeated tail reversed is the cycle.
  std::vector<int> vertices(walk.begin() + repeat, walk.end());
  std::reverse(vertices.begin(), vertices.end());
  const int len = static_cast<int>(vertices.size());
  std::vector<Sign> signs(len);
  for (int k = 0; k < len; ++k) {
    int from = vertices[k], to = vertices[(k + 1) % len];
    signs[k] = delta[from] * delta[to] > 0 ? Sign::positive : Sign::negative;
  }
  SignedCycle cycle = SignedCycle::from_sequence(std::move(vertices), std::move(signs));

  if (cycle.sign() != Sign::positive) throw std::logic_error("extracted cycle is not positive");
  for (int k = 0; k < cycle.length(); ++k) {
    if (delta[cycle.vertices[k]] == 0) {
      throw std::logic_error("extracted cycle leaves the difference set");
    }
    SignedArc arc{cycle.vertices[k], cycle.vertices[(k + 1) % cycle.length()],
                  cycle.arc_signs[k]};
    if (!g.has_arc(arc)) throw std::logic_error("extracted cycle uses a missing arc");
  }
  return cycle;
}

std::vector<SignedCycle> extract_disjoint_positive_cycles(const BooleanNetwork& f,
                                                          const std::vector<State>& chain) {
  if (chain.size() < 2) throw std::invalid_argument("chain needs at least two fixed points");
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (!(chain[k] != chain[k + 1] && chain[k].leq(chain[k + 1]))) {
      throw std::invalid_argument("chain must be strictly ascending");
    }
  }
  std::vector<SignedCycle> cycles;
  std::uint32_t used = 0;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    cycles.push_back(extract_positive_cycle(f, chain[k], chain[k + 1]));
    std::uint32_t mask = cycles.back().vertex_mask();
    if (mask & used) throw std::logic_error("extracted cycles are not disjoint");
    used |= mask;
  }
  return cycles;
}

}  // namespace bnet
