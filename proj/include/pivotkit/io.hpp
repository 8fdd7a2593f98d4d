#pragma once

// Line-oriented ASCII formats. Indices are 0-based and lines starting with '#'
// are comments.
//
//   matrix <r> <c>        then r lines of c characters from {0,1}
//   graph <n>             then one "u v" line per edge
//   bigraph <a> <b>       then one "i j" line per edge (A-index i, B-index j)
//   multigraph <n>        then one "u v tree|cotree <label>" line per edge
//   basis <labels...>     matroid: basis labels, non-basis labels, then the
//   nonbasis <labels...>  representation in matrix format
//   split edge <u> <v>    then "side_a <m> u-v ..." and "side_b ..." lines
//   split vertex <c>      then "t1", "t2", "t3" lines
//   row_classes <m>       then "i: members" lines, the same for col_classes,
//                         then "tags" and one row of tags per row class

#include <iosfwd>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pivotkit/extremal.hpp"
#include "pivotkit/gf2.hpp"
#include "pivotkit/graph.hpp"
#include "pivotkit/matroid.hpp"
#include "pivotkit/structure.hpp"

namespace pivotkit {

/// Sequential reader over the non-comment lines of a text.
class TextReader {
 public:
  explicit TextReader(std::istream& in);
  explicit TextReader(std::string_view text);

  /// True when only comments remain.
  bool at_end() const;
  /// Next non-comment line without consuming it; throws ParseError at end.
  const std::string& peek() const;
  const std::string& next();
  std::size_t line_number() const;
  /// Text of the most recent "# gen ..." comment seen, without the prefix.
  const std::optional<std::string>& provenance() const { return provenance_; }

  [[noreturn]] void fail(const std::string& message) const;

 private:
  void load(std::istream& in);
  void skip_comments() const;

  std::vector<std::string> lines_;
  std::vector<std::size_t> numbers_;
  mutable std::size_t pos_ = 0;
  mutable std::optional<std::string> provenance_;
};

/// Splits on whitespace.
std::vector<std::string> split_words(std::string_view line);

BitMatrix read_matrix(TextReader& in);
Graph read_graph(TextReader& in);
BiGraph read_bigraph(TextReader& in);
struct TreeMarkedMultiGraph {
  MultiGraph graph;
  SpanningTree tree;
  std::optional<std::string> provenance;
};
TreeMarkedMultiGraph read_multigraph(TextReader& in);
BinaryMatroid read_matroid(TextReader& in);
TreeSplit read_tree_split(TextReader& in);
BlockPartition read_block_partition(TextReader& in);

void write_matrix(std::ostream& out, const BitMatrix& m);
void write_graph(std::ostream& out, const Graph& g);
void write_bigraph(std::ostream& out, const BiGraph& g);
void write_multigraph(std::ostream& out, const MultiGraph& g, const SpanningTree& tree);
/// Multigraph format preceded by "# gen <provenance>".
void write_instance(std::ostream& out, const Instance& instance);
void write_matroid(std::ostream& out, const BinaryMatroid& m);
void write_tree_split(std::ostream& out, const TreeSplit& split);
void write_block_partition(std::ostream& out, const BlockPartition& partition);

template <typename T, typename Writer>
std::string to_text(const T& value, Writer writer) {
  std::ostringstream out;
  writer(out, value);
  return out.str();
}

/// Parses "1,2,3" (empty string gives an empty list).
std::vector<long long> parse_csv_integers(std::string_view csv);

}  // namespace pivotkit
