#pragma once

// Boolean networks f : {0,1}^n -> {0,1}^n, stored as one truth table per
// component.  Component indices are 0-based in code; the text formats and all
// printed output use the 1-based labels x1..xn.

#include "bnet/state.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bnet {

enum class Sign : int { positive = +1, negative = -1 };

inline char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }
inline Sign sign_product(Sign a, Sign b) {
  return a == b ? Sign::positive : Sign::negative;
}

// Truth table of a single component over {0,1}^n, packed 64 states per word;
// bit x of the word array holds the value at state index x.
class TruthTable {
 public:
  explicit TruthTable(int n);

  int arity() const { return n_; }
  std::uint32_t rows() const { return std::uint32_t{1} << n_; }

  bool get(std::uint32_t x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void set(std::uint32_t x, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (x & 63);
    if (v)
      words_[x >> 6] |= mask;
    else
      words_[x >> 6] &= ~mask;
  }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

class BooleanNetwork {
 public:
  BooleanNetwork(int n, std::vector<TruthTable> tables);

  int n() const { return n_; }
  std::uint32_t state_count() const { return std::uint32_t{1} << n_; }

  // f_i at state index x.  No bounds checks: callers stay within n()/rows().
  bool component(int i, std::uint32_t x) const {
    return tables_[static_cast<std::size_t>(i)].get(x);
  }

  // Integer form of f(x).
  std::uint32_t step(std::uint32_t x) const {
    std::uint32_t out = 0;
    for (int i = 0; i < n_; ++i)
      out |= std::uint32_t{component(i, x)} << i;
    return out;
  }

  State evaluate(const State& x) const;

  const TruthTable& table(int i) const;

  friend bool operator==(const BooleanNetwork&, const BooleanNetwork&) = default;

 private:
  int n_ = 0;
  std::vector<TruthTable> tables_;
};

// ------------------------------------------------------------------- text IO
//
// Network file format (one network per file):
//
//   # optional comment lines
//   n = 3
//   f1 = x1 & x2 & x3
//   f2 = x1 | !x3
//   f3 = (x2 & !x3) | (x1 & !x2 & !x3)
//
// or, equivalently, an explicit table block:
//
//   n = 3
//   table
//   000 010
//   001 000
//   ...          (all 2^n input rows exactly once, any order)
//
// Formula operators, loosest to tightest: |, &, !; parentheses group;
// constants 0 and 1; variables x1..xn.

enum class NetworkFormat { formula, table };

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column);
  int line;    // 1-based
  int column;  // 1-based, 0 when the error spans the whole line
};

BooleanNetwork parse_network(std::string_view text);
std::string render_network(const BooleanNetwork& f, NetworkFormat format);

// ---------------------------------------------------------------- generators

// Uniformly random network: every one of the 2^(n*2^n) networks is equally
// likely; deterministic for a fixed seed.
BooleanNetwork random_network(int n, std::uint64_t seed);

// Derived seed for shard/sample k of a run seeded with `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

// Network whose interaction graph is the single cycle 1 -> 2 -> ... -> n -> 1
// with signs[i] (0-based) on the arc leaving vertex i: the component fed by
// vertex i copies x_i when the sign is positive and negates it otherwise.
BooleanNetwork make_cycle_network(const std::vector<Sign>& signs);

// ------------------------------------------------------------------ monotone

// f is monotone iff x <= y componentwise implies f(x) <= f(y); equivalently,
// every discrete derivative is nonnegative.
bool is_monotone(const BooleanNetwork& f);

}  // namespace bnet
