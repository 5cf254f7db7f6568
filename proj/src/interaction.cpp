#include "bnet/interaction.hpp"

#include <algorithm>
#include <sstream>

namespace bnet {

SignedDigraph::SignedDigraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0)
    throw std::invalid_argument("vertex count must be nonnegative");
}

void SignedDigraph::add_arc(int source, int target, Sign sign) {
  if (source < 0 || source >= vertex_count_ || target < 0 || target >= vertex_count_)
    throw std::out_of_range("arc endpoint out of range");
  SignedArc arc{source, target, sign};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), arc);
  if (it == arcs_.end() || !(*it == arc)) arcs_.insert(it, arc);
}

bool SignedDigraph::has_arc(int source, int target, Sign sign) const {
  SignedArc arc{source, target, sign};
  return std::binary_search(arcs_.begin(), arcs_.end(), arc);
}

SignedDigraph SignedDigraph::without_arc(const SignedArc& arc) const {
  SignedDigraph g(vertex_count_);
  g.arcs_.reserve(arcs_.size());
  for (const SignedArc& a : arcs_)
    if (!(a == arc)) g.arcs_.push_back(a);
  return g;
}

bool SignedDigraph::positive_only() const {
  return std::all_of(arcs_.begin(), arcs_.end(),
                     [](const SignedArc& a) { return a.sign == Sign::positive; });
}

std::vector<std::vector<SignedArc>> SignedDigraph::out_adjacency() const {
  std::vector<std::vector<SignedArc>> adj(static_cast<std::size_t>(vertex_count_));
  for (const SignedArc& a : arcs_)
    adj[static_cast<std::size_t>(a.source)].push_back(a);
  for (auto& list : adj)
    std::sort(list.begin(), list.end(), [](const SignedArc& a, const SignedArc& b) {
      return std::tuple(a.target, a.sign == Sign::negative) <
             std::tuple(b.target, b.sign == Sign::negative);
    });
  return adj;
}

// ------------------------------------------------------------- derivatives

int discrete_derivative(const BooleanNetwork& f, int i, int j, const State& x) {
  if (x.width() != f.n())
    throw std::invalid_argument("state width does not match network size");
  if (i < 0 || i >= f.n() || j < 0 || j >= f.n())
    throw std::out_of_range("component index out of range");
  std::uint32_t bit = std::uint32_t{1} << j;
  bool hi = f.component(i, x.index() | bit);
  bool lo = f.component(i, x.index() & ~bit);
  return int(hi) - int(lo);
}

SignedDigraph local_graph(const BooleanNetwork& f, const State& x) {
  if (x.width() != f.n())
    throw std::invalid_argument("state width does not match network size");
  SignedDigraph g(f.n());
  for (int j = 0; j < f.n(); ++j) {
    std::uint32_t bit = std::uint32_t{1} << j;
    std::uint32_t lo = x.index() & ~bit;
    for (int i = 0; i < f.n(); ++i) {
      int d = int(f.component(i, lo | bit)) - int(f.component(i, lo));
      if (d != 0) g.add_arc(j, i, d > 0 ? Sign::positive : Sign::negative);
    }
  }
  return g;
}

SignedDigraph global_graph(const BooleanNetwork& f) {
  SignedDigraph g(f.n());
  std::uint32_t rows = f.state_count();
  for (int j = 0; j < f.n(); ++j) {
    std::uint32_t bit = std::uint32_t{1} << j;
    for (int i = 0; i < f.n(); ++i) {
      bool pos = false, neg = false;
      for (std::uint32_t x = 0; x < rows && !(pos && neg); ++x) {
        if (x & bit) continue;
        bool lo = f.component(i, x);
        bool hi = f.component(i, x | bit);
        if (hi && !lo) pos = true;
        if (lo && !hi) neg = true;
      }
      if (pos) g.add_arc(j, i, Sign::positive);
      if (neg) g.add_arc(j, i, Sign::negative);
    }
  }
  return g;
}

// ------------------------------------------------------------------ text IO

SignedDigraph parse_signed_graph(std::string_view text) {
  int line_number = 0;
  bool have_header = false;
  SignedDigraph g;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    std::string line(text.substr(start, end - start));
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string::npos && line[a] != '#') {
      std::istringstream in(line);
      if (!have_header) {
        std::string key, eq;
        long long n = -1;
        std::string extra;
        if (!(in >> key >> eq >> n) || key != "vertices" || eq != "=" || (in >> extra))
          throw ParseError("expected header 'vertices = <int>'", line_number, 0);
        if (n < 0 || n > 1000000)
          throw ParseError("vertex count out of range", line_number, 0);
        g = SignedDigraph(static_cast<int>(n));
        have_header = true;
      } else {
        long long source = 0, target = 0;
        std::string arrow, sign, extra;
        if (!(in >> source >> arrow >> target >> sign) || arrow != "->" ||
            (sign != "+" && sign != "-") || (in >> extra))
          throw ParseError("expected arc line '<j> -> <i> +|-'", line_number, 0);
        if (source < 1 || source > g.vertex_count() || target < 1 ||
            target > g.vertex_count())
          throw ParseError("arc endpoint out of range", line_number, 0);
        g.add_arc(static_cast<int>(source - 1), static_cast<int>(target - 1),
                  sign == "+" ? Sign::positive : Sign::negative);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!have_header) throw ParseError("empty signed graph description", 1, 0);
  return g;
}

std::string render_signed_graph(const SignedDigraph& g) {
  std::ostringstream out;
  out << "vertices = " << g.vertex_count() << "\n";
  for (const SignedArc& a : g.arcs())
    out << (a.source + 1) << " -> " << (a.target + 1) << ' ' << sign_char(a.sign) << "\n";
  return out.str();
}

std::string signed_graph_dot(const SignedDigraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  " << (v + 1) << ";\n";
  for (const SignedArc& a : g.arcs()) {
    out << "  " << (a.source + 1) << " -> " << (a.target + 1);
    if (a.sign == Sign::positive)
      out << " [color=green]";
    else
      out << " [color=red, arrowhead=tee]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bnet
