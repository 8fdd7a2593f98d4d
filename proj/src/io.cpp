#include "pivotkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "pivotkit/error.hpp"

namespace pivotkit {

namespace {

std::string trimmed(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.pop_back();
  }
  std::size_t start = 0;
  while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
  return line.substr(start);
}

long long parse_integer(const TextReader& in, std::string_view word) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    in.fail("expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

std::size_t parse_count(const TextReader& in, std::string_view word) {
  const long long value = parse_integer(in, word);
  if (value < 0) in.fail("expected a non-negative integer");
  return static_cast<std::size_t>(value);
}

bool is_integer(std::string_view word) {
  if (word.empty()) return false;
  std::size_t i = word[0] == '-' ? 1 : 0;
  if (i == word.size()) return false;
  return std::all_of(word.begin() + static_cast<std::ptrdiff_t>(i), word.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string> expect_header(TextReader& in, std::string_view keyword, std::size_t args) {
  auto words = split_words(in.next());
  if (words.empty() || words[0] != keyword || words.size() != args + 1) {
    in.fail("expected '" + std::string(keyword) + "' header with " + std::to_string(args) +
            " argument(s)");
  }
  return words;
}

}  // namespace

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::string current;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

TextReader::TextReader(std::istream& in) { load(in); }

TextReader::TextReader(std::string_view text) {
  std::istringstream in{std::string(text)};
  load(in);
}

void TextReader::load(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trimmed(line);
    if (line.empty()) continue;
    lines_.push_back(line);
    numbers_.push_back(number);
  }
}

void TextReader::skip_comments() const {
  while (pos_ < lines_.size() && lines_[pos_][0] == '#') {
    const std::string& c = lines_[pos_];
    if (c.rfind("# gen ", 0) == 0) provenance_ = c.substr(6);
    ++pos_;
  }
}

bool TextReader::at_end() const {
  skip_comments();
  return pos_ >= lines_.size();
}

const std::string& TextReader::peek() const {
  skip_comments();
  if (pos_ >= lines_.size()) fail("unexpected end of input");
  return lines_[pos_];
}

const std::string& TextReader::next() {
  const std::string& line = peek();
  ++pos_;
  return line;
}

std::size_t TextReader::line_number() const {
  if (pos_ == 0 || numbers_.empty()) return numbers_.empty() ? 0 : numbers_.front();
  return numbers_[std::min(pos_, numbers_.size()) - 1];
}

void TextReader::fail(const std::string& message) const {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_number()) + ": " + message);
}

BitMatrix read_matrix(TextReader& in) {
  const auto header = expect_header(in, "matrix", 2);
  const std::size_t rows = parse_count(in, header[1]);
  const std::size_t cols = parse_count(in, header[2]);
  BitMatrix m(rows, cols);
  if (cols == 0) return m;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string& line = in.next();
    if (line.size() != cols) in.fail("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (line[c] == '1') {
        m.set(r, c);
      } else if (line[c] != '0') {
        in.fail("matrix entries must be 0 or 1");
      }
    }
  }
  return m;
}

Graph read_graph(TextReader& in) {
  const auto header = expect_header(in, "graph", 1);
  Graph g(parse_count(in, header[1]));
  while (!in.at_end()) {
    const auto words = split_words(in.peek());
    if (words.size() != 2 || !is_integer(words[0]) || !is_integer(words[1])) break;
    in.next();
    const std::size_t u = parse_count(in, words[0]);
    const std::size_t v = parse_count(in, words[1]);
    if (u >= g.vertex_count() || v >= g.vertex_count() || u == v) in.fail("invalid edge");
    g.add_edge(u, v);
  }
  return g;
}

BiGraph read_bigraph(TextReader& in) {
  const auto header = expect_header(in, "bigraph", 2);
  BiGraph g(parse_count(in, header[1]), parse_count(in, header[2]));
  while (!in.at_end()) {
    const auto words = split_words(in.peek());
    if (words.size() != 2 || !is_integer(words[0]) || !is_integer(words[1])) break;
    in.next();
    const std::size_t i = parse_count(in, words[0]);
    const std::size_t j = parse_count(in, words[1]);
    if (i >= g.size_a() || j >= g.size_b()) in.fail("edge index out of range");
    g.add_edge(i, j);
  }
  return g;
}

TreeMarkedMultiGraph read_multigraph(TextReader& in) {
  const auto header = expect_header(in, "multigraph", 1);
  TreeMarkedMultiGraph out;
  out.provenance = in.provenance();
  out.graph.n = parse_count(in, header[1]);
  while (!in.at_end()) {
    const auto words = split_words(in.peek());
    if (words.size() != 4 || !is_integer(words[0])) break;
    in.next();
    MultiEdge e{static_cast<Element>(parse_count(in, words[3])), parse_count(in, words[0]),
                parse_count(in, words[1])};
    if (e.u >= out.graph.n || e.v >= out.graph.n) in.fail("endpoint out of range");
    if (out.graph.find(e.label) != nullptr) in.fail("duplicate edge label");
    if (words[2] == "tree") {
      out.tree.edges.push_back(e.label);
    } else if (words[2] != "cotree") {
      in.fail("edge kind must be 'tree' or 'cotree'");
    }
    out.graph.edges.push_back(e);
  }
  std::sort(out.tree.edges.begin(), out.tree.edges.end());
  return out;
}

BinaryMatroid read_matroid(TextReader& in) {
  auto labels = [&](std::string_view keyword) {
    auto words = split_words(in.next());
    if (words.empty() || words[0] != keyword) in.fail("expected '" + std::string(keyword) + "' line");
    std::vector<Element> out;
    for (std::size_t i = 1; i < words.size(); ++i) {
      out.push_back(static_cast<Element>(parse_count(in, words[i])));
    }
    return out;
  };
  auto basis = labels("basis");
  auto cobasis = labels("nonbasis");
  BitMatrix rep = read_matrix(in);
  try {
    return BinaryMatroid(std::move(basis), std::move(cobasis), std::move(rep));
  } catch (const Error& e) {
    in.fail(e.what());
  }
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
  out << "matrix " << m.nrows() << ' ' << m.ncols() << '\n';
  if (m.ncols() == 0) return;
  for (const std::string& row : m.to_strings()) out << row << '\n';
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_bigraph(std::ostream& out, const BiGraph& g) {
  out << "bigraph " << g.size_a() << ' ' << g.size_b() << '\n';
  for (std::size_t i = 0; i < g.size_a(); ++i) {
    for (std::size_t j : g.biadjacency().row(i).ones()) out << i << ' ' << j << '\n';
  }
}

void write_multigraph(std::ostream& out, const MultiGraph& g, const SpanningTree& tree) {
  out << "multigraph " << g.n << '\n';
  for (const MultiEdge& e : g.edges) {
    out << e.u << ' ' << e.v << ' ' << (tree.contains(e.label) ? "tree" : "cotree") << ' '
        << e.label << '\n';
  }
}

void write_instance(std::ostream& out, const Instance& instance) {
  out << "# gen " << instance.provenance << '\n';
  write_multigraph(out, instance.multigraph, instance.tree);
}

void write_matroid(std::ostream& out, const BinaryMatroid& m) {
  out << "basis";
  for (Element e : m.basis()) out << ' ' << e;
  out << "\nnonbasis";
  for (Element e : m.cobasis()) out << ' ' << e;
  out << '\n';
  write_matrix(out, m.rep());
}

namespace {

void write_edges(std::ostream& out, std::string_view name, const EdgeList& edges) {
  out << name << ' ' << edges.size();
  for (const auto& [a, b] : edges) out << ' ' << a << '-' << b;
  out << '\n';
}

void write_classes(std::ostream& out, std::string_view name,
                   const std::vector<std::vector<std::size_t>>& classes) {
  out << name << ' ' << classes.size() << '\n';
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << "  " << i << ':';
    for (std::size_t x : classes[i]) out << ' ' << x;
    out << '\n';
  }
}

}  // namespace

void write_tree_split(std::ostream& out, const TreeSplit& split) {
  if (const auto* cut = std::get_if<SplitEdge>(&split)) {
    out << "split edge " << cut->edge.first << ' ' << cut->edge.second << '\n';
    write_edges(out, "side_a", cut->side_a);
    write_edges(out, "side_b", cut->side_b);
    return;
  }
  const auto& star = std::get<SplitVertex>(split);
  out << "split vertex " << star.center << '\n';
  write_edges(out, "t1", star.t1);
  write_edges(out, "t2", star.t2);
  write_edges(out, "t3", star.t3);
}

void write_block_partition(std::ostream& out, const BlockPartition& partition) {
  write_classes(out, "row_classes", partition.row_classes);
  write_classes(out, "col_classes", partition.col_classes);
  out << "tags\n";
  for (const auto& row : partition.tags) {
    out << " ";
    for (BlockTag tag : row) out << ' ' << to_string(tag);
    out << '\n';
  }
}

namespace {

EdgeList read_edges(TextReader& in, std::string_view name) {
  const auto words = split_words(in.next());
  if (words.size() < 2 || words[0] != name) in.fail("expected '" + std::string(name) + "' line");
  const std::size_t count = parse_count(in, words[1]);
  if (words.size() != count + 2) in.fail("edge count does not match");
  EdgeList edges;
  for (std::size_t i = 2; i < words.size(); ++i) {
    const auto dash = words[i].find('-');
    if (dash == std::string::npos) in.fail("expected u-v, got '" + words[i] + "'");
    edges.emplace_back(parse_count(in, std::string_view(words[i]).substr(0, dash)),
                       parse_count(in, std::string_view(words[i]).substr(dash + 1)));
  }
  return edges;
}

std::vector<std::vector<std::size_t>> read_classes(TextReader& in, std::string_view name) {
  const auto header = expect_header(in, name, 1);
  const std::size_t count = parse_count(in, header[1]);
  std::vector<std::vector<std::size_t>> classes(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto words = split_words(in.next());
    if (words.empty() || words[0] != std::to_string(i) + ":") in.fail("expected class " + std::to_string(i));
    for (std::size_t w = 1; w < words.size(); ++w) classes[i].push_back(parse_count(in, words[w]));
  }
  return classes;
}

BlockTag parse_tag(const TextReader& in, std::string_view word) {
  for (BlockTag tag : {BlockTag::Zero, BlockTag::One, BlockTag::Equal, BlockTag::Complement}) {
    if (to_string(tag) == word) return tag;
  }
  in.fail("unknown block tag '" + std::string(word) + "'");
}

}  // namespace

TreeSplit read_tree_split(TextReader& in) {
  const auto words = split_words(in.next());
  if (words.size() == 4 && words[0] == "split" && words[1] == "edge") {
    SplitEdge cut;
    cut.edge = {parse_count(in, words[2]), parse_count(in, words[3])};
    cut.side_a = read_edges(in, "side_a");
    cut.side_b = read_edges(in, "side_b");
    return cut;
  }
  if (words.size() == 3 && words[0] == "split" && words[1] == "vertex") {
    SplitVertex star;
    star.center = parse_count(in, words[2]);
    star.t1 = read_edges(in, "t1");
    star.t2 = read_edges(in, "t2");
    star.t3 = read_edges(in, "t3");
    return star;
  }
  in.fail("expected 'split edge u v' or 'split vertex c'");
}

BlockPartition read_block_partition(TextReader& in) {
  BlockPartition p;
  p.row_classes = read_classes(in, "row_classes");
  p.col_classes = read_classes(in, "col_classes");
  expect_header(in, "tags", 0);
  for (std::size_t i = 0; i < p.row_classes.size(); ++i) {
    if (p.col_classes.empty()) {
      p.tags.emplace_back();
      continue;
    }
    const auto words = split_words(in.next());
    if (words.size() != p.col_classes.size()) in.fail("expected one tag per column class");
    std::vector<BlockTag> row;
    for (const auto& w : words) row.push_back(parse_tag(in, w));
    p.tags.push_back(std::move(row));
  }
  return p;
}

std::vector<long long> parse_csv_integers(std::string_view csv) {
  std::vector<long long> out;
  if (trimmed(std::string(csv)).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    const std::string word = trimmed(std::string(csv.substr(start, comma - start)));
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (word.empty() || ec != std::errc() || ptr != word.data() + word.size()) {
      throw Error(ErrorCode::ParseError, "bad list entry '" + word + "'");
    }
    out.push_back(value);
    if (comma == csv.size()) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace pivotkit
