#pragma once

// States of a Boolean network: points of {0,1}^n.
//
// Text form writes components left to right, so "010" means x1=0, x2=1, x3=0.
// The integer form packs component i (0-based) into bit i of the index, which
// makes the index of a state double as its row number in a truth table.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bnet {

// Ceiling on explicit truth tables (2^20 rows per component).
inline constexpr int kMaxComponents = 20;

class State {
 public:
  State() = default;

  State(int width, std::uint32_t index) : width_(width), bits_(index) {
    if (width < 0 || width > kMaxComponents)
      throw std::invalid_argument("state width out of range");
    if (width < 32 && (index >> width) != 0)
      throw std::invalid_argument("state index out of range for width");
  }

  static State from_string(std::string_view text) {
    if (text.empty() || text.size() > kMaxComponents)
      throw std::invalid_argument("state string length out of range");
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1')
        bits |= std::uint32_t{1} << i;
      else if (text[i] != '0')
        throw std::invalid_argument("state string must consist of 0s and 1s");
    }
    return State(static_cast<int>(text.size()), bits);
  }

  int width() const { return width_; }
  std::uint32_t index() const { return bits_; }

  bool bit(int i) const {
    check_component(i);
    return (bits_ >> i) & 1u;
  }

  State flipped(int i) const {
    check_component(i);
    return State(width_, bits_ ^ (std::uint32_t{1} << i));
  }

  State with_bit(int i, bool v) const {
    check_component(i);
    std::uint32_t mask = std::uint32_t{1} << i;
    return State(width_, v ? (bits_ | mask) : (bits_ & ~mask));
  }

  std::string to_string() const {
    std::string out(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i)
      if ((bits_ >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
    return out;
  }

  // Componentwise partial order on {0,1}^n.
  bool leq(const State& y) const {
    check_same_width(y);
    return (bits_ & ~y.bits_) == 0;
  }

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

 private:
  void check_component(int i) const {
    if (i < 0 || i >= width_) throw std::out_of_range("component index out of range");
  }
  void check_same_width(const State& y) const {
    if (width_ != y.width_) throw std::invalid_argument("state widths differ");
  }

  int width_ = 0;
  std::uint32_t bits_ = 0;

  friend int hamming(const State& x, const State& y);
};

inline int hamming(const State& x, const State& y) {
  x.check_same_width(y);
  return std::popcount(x.bits_ ^ y.bits_);
}

}  // namespace bnet
