#include "bnet/network.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

namespace bnet {

TruthTable::TruthTable(int n) : n_(n) {
  if (n < 0 || n > kMaxComponents)
    throw std::invalid_argument("truth table arity out of range");
  words_.assign((rows() + 63) / 64, 0);
}

BooleanNetwork::BooleanNetwork(int n, std::vector<TruthTable> tables)
    : n_(n), tables_(std::move(tables)) {
  if (n < 1 || n > kMaxComponents)
    throw std::invalid_argument("network size out of range");
  if (tables_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("expected one truth table per component");
  for (const TruthTable& t : tables_)
    if (t.arity() != n)
      throw std::invalid_argument("truth table arity does not match network size");
}

State BooleanNetwork::evaluate(const State& x) const {
  if (x.width() != n_)
    throw std::invalid_argument("state width does not match network size");
  return State(n_, step(x.index()));
}

const TruthTable& BooleanNetwork::table(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("component index out of range");
  return tables_[static_cast<std::size_t>(i)];
}

// ----------------------------------------------------------------- formulas

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : "") +
                         ": " + what),
      line(line),
      column(column) {}

namespace {

// Recursive-descent formula parser that evaluates directly into a truth
// table: every subexpression is a full table over {0,1}^n, combined wordwise.
class FormulaParser {
 public:
  FormulaParser(std::string_view text, int n, int line)
      : text_(text), n_(n), line_(line) {}

  TruthTable parse() {
    TruthTable t = parse_or();
    skip_spaces();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input in formula", line_, col());
    return t;
  }

 private:
  int col() const { return static_cast<int>(pos_) + 1; }

  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  TruthTable parse_or() {
    TruthTable t = parse_and();
    while (eat('|')) {
      TruthTable rhs = parse_and();
      for (std::uint32_t x = 0; x < t.rows(); ++x)
        t.set(x, t.get(x) || rhs.get(x));
    }
    return t;
  }

  TruthTable parse_and() {
    TruthTable t = parse_factor();
    while (eat('&')) {
      TruthTable rhs = parse_factor();
      for (std::uint32_t x = 0; x < t.rows(); ++x)
        t.set(x, t.get(x) && rhs.get(x));
    }
    return t;
  }

  TruthTable parse_factor() {
    skip_spaces();
    if (pos_ >= text_.size())
      throw ParseError("formula ends unexpectedly", line_, col());
    char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      TruthTable t = parse_factor();
      for (std::uint32_t x = 0; x < t.rows(); ++x) t.set(x, !t.get(x));
      return t;
    }
    if (c == '(') {
      int open_col = col();
      ++pos_;
      TruthTable t = parse_or();
      if (!eat(')'))
        throw ParseError("unmatched '('", line_, open_col);
      return t;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      TruthTable t(n_);
      if (c == '1')
        for (std::uint32_t x = 0; x < t.rows(); ++x) t.set(x, true);
      return t;
    }
    if (c == 'x') {
      int var_col = col();
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == start)
        throw ParseError("expected variable index after 'x'", line_, var_col);
      int j = 0;
      for (std::size_t k = start; k < pos_; ++k) {
        j = j * 10 + (text_[k] - '0');
        if (j > kMaxComponents) break;
      }
      if (j < 1 || j > n_)
        throw ParseError("variable x" + std::string(text_.substr(start, pos_ - start)) +
                             " out of range for n = " + std::to_string(n_),
                         line_, var_col);
      TruthTable t(n_);
      for (std::uint32_t x = 0; x < t.rows(); ++x)
        t.set(x, (x >> (j - 1)) & 1u);
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "' in formula",
                     line_, col());
  }

  std::string_view text_;
  int n_;
  int line_;
  std::size_t pos_ = 0;
};

struct Line {
  std::string text;
  int number;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    std::size_t a = raw.find_first_not_of(" \t\r");
    if (a != std::string_view::npos && raw[a] != '#') {
      std::size_t b = raw.find_last_not_of(" \t\r");
      lines.push_back({std::string(raw.substr(a, b - a + 1)), number});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

// "n = <int>" -> n
int parse_header(const Line& line) {
  std::istringstream in(line.text);
  std::string key, eq;
  long long n = -1;
  if (!(in >> key >> eq >> n) || key != "n" || eq != "=")
    throw ParseError("expected header 'n = <int>'", line.number, 0);
  std::string extra;
  if (in >> extra)
    throw ParseError("unexpected trailing input after header", line.number, 0);
  if (n < 1 || n > kMaxComponents)
    throw ParseError("n must be between 1 and " + std::to_string(kMaxComponents),
                     line.number, 0);
  return static_cast<int>(n);
}

std::uint32_t parse_bits(const std::string& word, int n, const Line& line) {
  if (static_cast<int>(word.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " bits, got '" + word + "'",
                     line.number, 0);
  std::uint32_t bits = 0;
  for (int i = 0; i < n; ++i) {
    if (word[static_cast<std::size_t>(i)] == '1')
      bits |= std::uint32_t{1} << i;
    else if (word[static_cast<std::size_t>(i)] != '0')
      throw ParseError("bit strings may contain only 0 and 1", line.number, 0);
  }
  return bits;
}

BooleanNetwork parse_table_block(const std::vector<Line>& lines, std::size_t pos, int n) {
  std::uint32_t rows = std::uint32_t{1} << n;
  std::vector<TruthTable> tables(static_cast<std::size_t>(n), TruthTable(n));
  std::vector<bool> seen(rows, false);
  std::uint32_t filled = 0;
  for (; pos < lines.size(); ++pos) {
    std::istringstream in(lines[pos].text);
    std::string input, output, extra;
    if (!(in >> input >> output) || (in >> extra))
      throw ParseError("expected table row '<input-bits> <output-bits>'",
                       lines[pos].number, 0);
    std::uint32_t x = parse_bits(input, n, lines[pos]);
    std::uint32_t y = parse_bits(output, n, lines[pos]);
    if (seen[x])
      throw ParseError("duplicate table row for input " + input, lines[pos].number, 0);
    seen[x] = true;
    ++filled;
    for (int i = 0; i < n; ++i)
      tables[static_cast<std::size_t>(i)].set(x, (y >> i) & 1u);
  }
  if (filled != rows)
    throw ParseError("table block lists " + std::to_string(filled) + " of " +
                         std::to_string(rows) + " input rows",
                     lines.empty() ? 1 : lines.back().number, 0);
  return BooleanNetwork(n, std::move(tables));
}

BooleanNetwork parse_formula_block(const std::vector<Line>& lines, std::size_t pos, int n) {
  std::vector<TruthTable> tables(static_cast<std::size_t>(n), TruthTable(n));
  std::vector<bool> defined(static_cast<std::size_t>(n), false);
  for (; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    std::size_t eq = line.text.find('=');
    if (eq == std::string::npos || line.text[0] != 'f')
      throw ParseError("expected component line 'f<i> = <expr>'", line.number, 0);
    std::string name = line.text.substr(1, eq - 1);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
    int i = 0;
    if (name.empty() || name.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected component line 'f<i> = <expr>'", line.number, 0);
    for (char c : name) {
      i = i * 10 + (c - '0');
      if (i > kMaxComponents) break;
    }
    if (i < 1 || i > n)
      throw ParseError("component f" + name + " out of range for n = " + std::to_string(n),
                       line.number, 0);
    if (defined[static_cast<std::size_t>(i - 1)])
      throw ParseError("component f" + name + " defined twice", line.number, 0);
    defined[static_cast<std::size_t>(i - 1)] = true;
    FormulaParser parser(std::string_view(line.text).substr(eq + 1), n, line.number);
    tables[static_cast<std::size_t>(i - 1)] = parser.parse();
  }
  for (int i = 0; i < n; ++i)
    if (!defined[static_cast<std::size_t>(i)])
      throw ParseError("component f" + std::to_string(i + 1) + " is not defined",
                       lines.empty() ? 1 : lines.back().number, 0);
  return BooleanNetwork(n, std::move(tables));
}

}  // namespace

BooleanNetwork parse_network(std::string_view text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty network description", 1, 0);
  int n = parse_header(lines[0]);
  if (lines.size() < 2)
    throw ParseError("network body is missing", lines[0].number, 0);
  if (lines[1].text == "table")
    return parse_table_block(lines, 2, n);
  return parse_formula_block(lines, 1, n);
}

std::string render_network(const BooleanNetwork& f, NetworkFormat format) {
  std::ostringstream out;
  int n = f.n();
  out << "n = " << n << "\n";
  if (format == NetworkFormat::table) {
    out << "table\n";
    // Rows in lexicographic order of the input string (x1 varies slowest).
    for (std::uint32_t k = 0; k < f.state_count(); ++k) {
      std::uint32_t x = 0;
      for (int i = 0; i < n; ++i)
        if ((k >> (n - 1 - i)) & 1u) x |= std::uint32_t{1} << i;
      out << State(n, x).to_string() << ' ' << State(n, f.step(x)).to_string() << "\n";
    }
    return out.str();
  }
  // Disjunction of minterms; constants render as bare 0 / 1.
  for (int i = 0; i < n; ++i) {
    out << 'f' << (i + 1) << " = ";
    std::vector<std::uint32_t> minterms;
    for (std::uint32_t x = 0; x < f.state_count(); ++x)
      if (f.component(i, x)) minterms.push_back(x);
    if (minterms.empty()) {
      out << "0\n";
      continue;
    }
    if (minterms.size() == f.state_count()) {
      out << "1\n";
      continue;
    }
    for (std::size_t t = 0; t < minterms.size(); ++t) {
      if (t > 0) out << " | ";
      out << '(';
      for (int j = 0; j < n; ++j) {
        if (j > 0) out << " & ";
        if (!((minterms[t] >> j) & 1u)) out << '!';
        out << 'x' << (j + 1);
      }
      out << ')';
    }
    out << "\n";
  }
  return out.str();
}

// --------------------------------------------------------------- generators

BooleanNetwork random_network(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxComponents)
    throw std::invalid_argument("network size out of range");
  std::mt19937_64 rng(seed);
  std::uint32_t rows = std::uint32_t{1} << n;
  std::vector<TruthTable> tables;
  tables.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    TruthTable t(n);
    for (std::uint32_t x = 0; x < rows; x += 64) {
      std::uint64_t word = rng();
      for (std::uint32_t b = 0; b < 64 && x + b < rows; ++b)
        t.set(x + b, (word >> b) & 1u);
    }
    tables.push_back(std::move(t));
  }
  return BooleanNetwork(n, std::move(tables));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BooleanNetwork make_cycle_network(const std::vector<Sign>& signs) {
  int n = static_cast<int>(signs.size());
  if (n < 1 || n > kMaxComponents)
    throw std::invalid_argument("cycle length out of range");
  std::vector<TruthTable> tables(static_cast<std::size_t>(n), TruthTable(n));
  std::uint32_t rows = std::uint32_t{1} << n;
  for (int i = 0; i < n; ++i) {
    int target = (i + 1) % n;
    bool negate = signs[static_cast<std::size_t>(i)] == Sign::negative;
    for (std::uint32_t x = 0; x < rows; ++x) {
      bool v = (x >> i) & 1u;
      tables[static_cast<std::size_t>(target)].set(x, v != negate);
    }
  }
  return BooleanNetwork(n, std::move(tables));
}

// ----------------------------------------------------------------- monotone

bool is_monotone(const BooleanNetwork& f) {
  // Check every covering pair x < x|2^j componentwise.
  std::uint32_t rows = f.state_count();
  for (int j = 0; j < f.n(); ++j) {
    std::uint32_t bit = std::uint32_t{1} << j;
    for (std::uint32_t x = 0; x < rows; ++x) {
      if (x & bit) continue;
      for (int i = 0; i < f.n(); ++i)
        if (f.component(i, x) && !f.component(i, x | bit)) return false;
    }
  }
  return true;
}

}  // namespace bnet
