#include "pivotkit/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "pivotkit/cutrank.hpp"
#include "pivotkit/error.hpp"
#include "pivotkit/extremal.hpp"
#include "pivotkit/io.hpp"
#include "pivotkit/matroid.hpp"
#include "pivotkit/pivot.hpp"
#include "pivotkit/structure.hpp"

namespace pivotkit {
namespace {

enum class Verdict { Pass, Vacuous, Violated };

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string note;  // key=value pairs describing a violation
};

Outcome pass() { return {}; }
Outcome vacuous() { return {Verdict::Vacuous, {}}; }
Outcome violated(std::string note) { return {Verdict::Violated, std::move(note)}; }

using Detail = std::map<std::string, std::string, std::less<>>;

std::string no_spaces(std::string text) {
  for (char& c : text) {
    if (c == ' ' || c == '\t' || c == '\n') c = '_';
  }
  return text;
}

template <typename Range>
std::string csv(const Range& items) {
  std::ostringstream out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out << ',';
    out << item;
    first = false;
  }
  return out.str();
}

Detail parse_detail(std::string_view text) {
  Detail detail;
  for (const auto& word : split_words(text)) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + word + "'");
    detail[word.substr(0, eq)] = word.substr(eq + 1);
  }
  return detail;
}

const std::string& require(const Detail& detail, std::string_view key) {
  const auto it = detail.find(key);
  if (it == detail.end()) throw Error(ErrorCode::ParseError, "violation detail lacks '" + std::string(key) + "'");
  return it->second;
}

std::int64_t require_int(const Detail& detail, std::string_view key) {
  const auto values = parse_csv_integers(require(detail, key));
  if (values.size() != 1) throw Error(ErrorCode::ParseError, "expected one integer for '" + std::string(key) + "'");
  return values.front();
}

std::size_t require_size(const Detail& detail, std::string_view key) {
  const auto value = require_int(detail, key);
  if (value < 0) throw Error(ErrorCode::ParseError, "negative value for '" + std::string(key) + "'");
  return static_cast<std::size_t>(value);
}

void cap(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::CapExceeded, what);
}

/// Tallies outcomes and serializes witnesses of violations.
class Recorder {
 public:
  explicit Recorder(CampaignReport& report) : report_(report) {}

  template <typename Payload>
  void record(const Outcome& outcome, const std::string& detail, Payload payload) {
    ++report_.checks;
    if (outcome.verdict == Verdict::Vacuous) ++report_.vacuous;
    if (outcome.verdict != Verdict::Violated) return;
    std::string line = detail;
    if (!outcome.note.empty()) line += " " + outcome.note;
    report_.violations.push_back({line, payload()});
  }

 private:
  CampaignReport& report_;
};

// ---------------------------------------------------------------- checks

std::size_t min_degree(const BiGraph& h) { return degree_stats(h).min_degree; }

Outcome check_fun(const BiGraph& h, std::size_t s, std::size_t t, std::int64_t offset) {
  if (h.size_a() + h.size_b() == 0) return vacuous();
  if (find_complete_bipartite(h, s, t)) return vacuous();
  const auto ss = static_cast<std::int64_t>(s);
  const auto tt = static_cast<std::int64_t>(t);
  const std::int64_t bound = std::max(2 * ss - 2, tt - 1) + offset;
  const auto degree = static_cast<std::int64_t>(min_degree(h));
  if (degree <= bound) return pass();
  return violated("min_degree=" + std::to_string(degree) + " bound=" + std::to_string(bound));
}

Outcome check_cofun(const BiGraph& fundamental, std::size_t s, std::int64_t offset) {
  const BiGraph h = bipartite_complement(fundamental);
  if (h.size_a() + h.size_b() == 0) return vacuous();
  if (find_complete_bipartite(h, s, s)) return vacuous();
  const auto bound = static_cast<std::int64_t>(5 * s) - 1 + offset;
  const auto degree = static_cast<std::int64_t>(min_degree(h));
  if (degree <= bound) return pass();
  return violated("min_degree=" + std::to_string(degree) + " bound=" + std::to_string(bound));
}

Outcome check_tree(const Graph& tree, std::size_t s) {
  if (tree.edge_count() < 5 * s) return vacuous();
  try {
    const TreeSplit split = split_tree(tree, s);
    const std::string problem = check_tree_split(tree, s, split);
    if (!problem.empty()) return violated("reason=" + no_spaces(problem));
  } catch (const Error& e) {
    return violated("error=" + std::string(to_string(e.code())));
  }
  return pass();
}

struct Blocks {
  BiGraph graph;
  std::vector<std::vector<std::size_t>> row_classes;
  std::vector<std::vector<std::size_t>> col_classes;
};

Outcome check_density(const Blocks& b, std::size_t s) {
  if (find_complete_bipartite(b.graph, s, s)) return vacuous();
  bool ok = false;
  try {
    ok = check_struct_density(b.graph, b.row_classes, b.col_classes, s);
  } catch (const Error& e) {
    return violated("error=" + std::string(to_string(e.code())));
  }
  // Direct count: 2|E| <= 10 n^2 s |V|.
  const std::size_t n = std::max(b.row_classes.size(), b.col_classes.size());
  const std::size_t vertices = b.graph.size_a() + b.graph.size_b();
  const bool direct = 2 * b.graph.edge_count() <= 10 * n * n * s * vertices;
  if (ok && direct) return pass();
  return violated("edges=" + std::to_string(b.graph.edge_count()) + " vertices=" + std::to_string(vertices) +
                  " classes=" + std::to_string(n) + " library=" + std::to_string(ok) +
                  " direct=" + std::to_string(direct));
}

Outcome check_rankconn(const Graph& g) {
  if (!is_c4_free(g)) return vacuous();
  const std::size_t k = vertex_connectivity(g);
  if (k == 0) return vacuous();
  const auto sep = find_low_rank_separation(g, k + 1);
  if (!sep) return pass();
  return violated("connectivity=" + std::to_string(k) + " order=" + std::to_string(sep->order) +
                  " cutrank=" + std::to_string(sep->cutrank_value) + " side=" + csv(sep->side_x));
}

bool is_partition(const std::vector<std::vector<std::size_t>>& classes, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (const auto& cls : classes) {
    if (cls.empty()) return false;
    for (const auto i : cls) {
      if (i >= n || seen[i]++) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

Outcome check_pert(const BitMatrix& d1, const BitMatrix& d2) {
  BitMatrix c = d1;
  c ^= d2;
  const std::size_t p = rank(c);
  const BlockPartition part = constant_block_partition(c);
  const std::size_t limit = p >= 63 ? ~std::size_t{0} : std::size_t{1} << p;
  if (part.row_classes.size() > limit || part.col_classes.size() > limit) {
    return violated("reason=too_many_classes rank=" + std::to_string(p) +
                    " row_classes=" + std::to_string(part.row_classes.size()) +
                    " col_classes=" + std::to_string(part.col_classes.size()));
  }
  if (!is_partition(part.row_classes, c.nrows()) || !is_partition(part.col_classes, c.ncols())) {
    return violated("reason=not_a_partition");
  }
  for (std::size_t i = 0; i < part.row_classes.size(); ++i) {
    for (std::size_t j = 0; j < part.col_classes.size(); ++j) {
      const bool one = part.tags[i][j] == BlockTag::One;
      for (const auto r : part.row_classes[i]) {
        for (const auto col : part.col_classes[j]) {
          if (c.get(r, col) != one) {
            return violated("reason=block_not_constant block=" + std::to_string(i) + "," + std::to_string(j));
          }
        }
      }
    }
  }
  const BiGraph g1(d1);
  const BiGraph g2(d2);
  const BlockPartition pert = perturbation_partition(g1, g2);
  if (apply_perturbation(g2, pert) != g1) return violated("reason=reconstruction_mismatch");
  return pass();
}

std::size_t position_in(const ElementSet& ground, Element e) {
  return static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), e) - ground.begin());
}

Outcome check_pivot_matroid(const BinaryMatroid& m) {
  const auto base_circuits = circuits(m);
  const Graph fg = m.fundamental_graph();
  const ElementSet ground = m.ground();
  bool any = false;
  for (const Element x : m.basis()) {
    for (const Element y : m.cobasis()) {
      if (!m.rep().get(m.row_of(x), m.col_of(y))) continue;
      any = true;
      const std::string where = "x=" + std::to_string(x) + " y=" + std::to_string(y);
      const BinaryMatroid exchanged = change_basis(m, x, y);
      if (circuits(exchanged) != base_circuits) return violated(where + " reason=circuits_differ");
      if (exchanged.fundamental_graph() != pivot(fg, position_in(ground, x), position_in(ground, y))) {
        return violated(where + " reason=fundamental_graph_not_pivot");
      }
      if (change_basis(exchanged, y, x) != m) return violated(where + " reason=exchange_not_involution");
    }
  }
  return any ? pass() : vacuous();
}

Outcome check_conn(const BinaryMatroid& m, std::size_t max_k) {
  const Graph g = m.fundamental_graph();
  const ElementSet ground = m.ground();
  for (std::size_t k = 1; k <= max_k; ++k) {
    const ConnectivityResult mat = is_k_connected(m, k);
    const auto sep = find_low_rank_separation(g, k);
    const std::string where = "at_k=" + std::to_string(k);
    if (mat.connected == sep.has_value()) return violated(where + " reason=disagree");
    if (!sep) continue;
    VertexSet positions;
    for (const Element e : mat.witness->x) positions.push_back(position_in(ground, e));
    if (positions != sep->side_x || mat.witness->order != sep->order ||
        mat.witness->lambda_value != sep->cutrank_value) {
      return violated(where + " reason=witness_differs");
    }
  }
  const std::size_t n = ground.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet x;
    VertexSet positions;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        x.push_back(ground[i]);
        positions.push_back(i);
      }
    }
    const std::size_t l = lambda(m, x);
    const std::size_t r = cut_rank(g, positions);
    if (l != r) {
      return violated("reason=lambda_differs set=" + csv(x) + " lambda=" + std::to_string(l) +
                      " cutrank=" + std::to_string(r));
    }
  }
  return pass();
}

Outcome check_avg(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (!is_c4_free(g) || 2 * g.edge_count() < 4 * k * n) return vacuous();
  // Largest subsets first; the whole graph usually qualifies.
  for (std::size_t size = n; size >= k + 2 && size > 0; --size) {
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !found; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      VertexSet keep;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) keep.push_back(i);
      }
      const Graph sub = g.induced(keep);
      if (2 * sub.edge_count() < (k + 1) * size) continue;
      if (is_k_rank_connected(sub, k + 2)) found = true;
    }
    if (found) return pass();
  }
  return violated("reason=no_induced_subgraph k=" + std::to_string(k));
}

// ---------------------------------------------------------------- generators

struct Source {
  enum class Kind { Random, Ktt, C6Blowup } kind = Kind::Random;
  std::size_t value = 0;
};

Source parse_source(const std::string& text) {
  if (text == "random") return {};
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string name = text.substr(0, colon);
    const auto values = parse_csv_integers(text.substr(colon + 1));
    if (values.size() == 1 && values.front() > 0) {
      const auto v = static_cast<std::size_t>(values.front());
      if (name == "ktt") return {Source::Kind::Ktt, v};
      if (name == "c6blowup") return {Source::Kind::C6Blowup, v};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown instance source '" + text + "'");
}

Instance instance_for_trial(const Source& source, const CampaignParams& p, std::uint64_t trial_seed) {
  switch (source.kind) {
    case Source::Kind::Ktt:
      return gen_ktt_example(source.value);
    case Source::Kind::C6Blowup:
      return gen_c6_blowup_example(source.value);
    case Source::Kind::Random:
      break;
  }
  Rng rng(trial_seed);
  const std::size_t n = rng.between(2, std::max<std::size_t>(2, p.max_vertices));
  const std::size_t extra = rng.between(0, p.max_extra);
  return gen_random_instance(n, extra, rng.next());
}

std::vector<std::size_t> range_or(std::size_t fixed, std::size_t lo, std::size_t hi) {
  if (fixed != 0) return {fixed};
  std::vector<std::size_t> out;
  for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

Graph graph_from_masks(const std::vector<std::uint64_t>& adj) {
  Graph g(adj.size());
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::size_t v = u + 1; v < adj.size(); ++v) {
      if ((adj[u] >> v) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

/// True if adding edge uv to the C4-free graph `adj` creates a 4-cycle.
bool closes_c4(const std::vector<std::uint64_t>& adj, std::size_t u, std::size_t v) {
  std::uint64_t nu = adj[u];
  while (nu != 0) {
    const auto a = static_cast<std::size_t>(std::countr_zero(nu));
    nu &= nu - 1;
    if (adj[a] & adj[v]) return true;
  }
  return false;
}

/// Random maximal C4-free graph: edges offered in uniformly random order.
Graph greedy_c4_free(std::size_t n, Rng& rng) {
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : pairs) {
    if (closes_c4(adj, u, v)) continue;
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return graph_from_masks(adj);
}

/// C4-free sample from G(n, p): redraws until the sample is C4-free.
Graph sparse_c4_free(std::size_t n, Rng& rng) {
  const std::uint64_t percent = rng.between(10, 50);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng.coin(percent, 100)) {
          adj[u] |= std::uint64_t{1} << v;
          adj[v] |= std::uint64_t{1} << u;
        }
      }
    }
    const Graph g = graph_from_masks(adj);
    if (is_c4_free(g)) return g;
  }
  return greedy_c4_free(n, rng);
}

/// Random labels from [0, 2m) and a random representation. With `exchangeable`
/// both the basis and its complement are non-empty.
BinaryMatroid random_matroid(std::size_t max_elements, Rng& rng, bool exchangeable) {
  const std::size_t m = rng.between(exchangeable ? std::min<std::size_t>(2, max_elements) : 1, max_elements);
  const std::size_t r = exchangeable && m >= 2 ? rng.between(1, m - 1) : rng.between(0, m);
  std::vector<Element> labels(2 * m);
  std::iota(labels.begin(), labels.end(), 0);
  for (std::size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[rng.below(i)]);
  std::vector<Element> basis(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(r));
  std::vector<Element> cobasis(labels.begin() + static_cast<std::ptrdiff_t>(r),
                               labels.begin() + static_cast<std::ptrdiff_t>(m));
  const std::uint64_t density = rng.between(1, 3);
  BitMatrix rep(r, m - r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m - r; ++j) {
      if (rng.coin(density, 4)) rep.set(i, j);
    }
  }
  return BinaryMatroid(std::move(basis), std::move(cobasis), std::move(rep));
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rng.coin(1, 2)) m.set(i, j);
    }
  }
  return m;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.nrows(), b.ncols());
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    for (std::size_t k = 0; k < a.ncols(); ++k) {
      if (!a.get(i, k)) continue;
      for (std::size_t j = 0; j < b.ncols(); ++j) {
        if (b.get(k, j)) out.flip(i, j);
      }
    }
  }
  return out;
}

Blocks random_blocks(std::size_t max_classes, std::size_t max_class_size, Rng& rng) {
  const std::size_t n = rng.between(1, max_classes);
  std::vector<std::size_t> rows(n);
  std::vector<std::size_t> cols(n);
  for (auto& r : rows) r = rng.between(1, max_class_size);
  for (auto& c : cols) c = rng.between(1, max_class_size);
  Blocks out;
  std::size_t total_rows = 0;
  std::size_t total_cols = 0;
  for (const auto r : rows) {
    std::vector<std::size_t> cls(r);
    std::iota(cls.begin(), cls.end(), total_rows);
    out.row_classes.push_back(std::move(cls));
    total_rows += r;
  }
  for (const auto c : cols) {
    std::vector<std::size_t> cls(c);
    std::iota(cls.begin(), cls.end(), total_cols);
    out.col_classes.push_back(std::move(cls));
    total_cols += c;
  }
  BitMatrix d(total_rows, total_cols);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // rows[i] tree edges and cols[j] non-tree edges.
      const Instance inst = gen_random_instance(rows[i] + 1, cols[j], rng.next());
      BiGraph block = inst.fundamental;
      if (rng.coin(1, 4)) block = bipartite_complement(block);
      for (std::size_t r = 0; r < rows[i]; ++r) {
        for (std::size_t c = 0; c < cols[j]; ++c) {
          if (block.has_edge(r, c)) d.set(out.row_classes[i][r], out.col_classes[j][c]);
        }
      }
    }
  }
  out.graph = BiGraph(std::move(d));
  return out;
}

// ---------------------------------------------------------------- payloads

std::string blocks_text(const Blocks& b) {
  std::ostringstream out;
  write_bigraph(out, b.graph);
  const auto labels = [](const std::vector<std::vector<std::size_t>>& classes, std::size_t n) {
    std::vector<std::size_t> of(n, 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (const auto i : classes[c]) of[i] = c;
    }
    return of;
  };
  out << "row_classes";
  for (const auto c : labels(b.row_classes, b.graph.size_a())) out << ' ' << c;
  out << "\ncol_classes";
  for (const auto c : labels(b.col_classes, b.graph.size_b())) out << ' ' << c;
  out << '\n';
  return out.str();
}

std::vector<std::vector<std::size_t>> read_classes(TextReader& in, const std::string& key, std::size_t n) {
  const auto words = split_words(in.next());
  if (words.empty() || words[0] != key || words.size() != n + 1) in.fail("expected '" + key + "' with " + std::to_string(n) + " entries");
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    const auto values = parse_csv_integers(words[i + 1]);
    if (values.size() != 1 || values[0] < 0 || values[0] > static_cast<long long>(n)) in.fail("bad class index");
    const auto c = static_cast<std::size_t>(values[0]);
    if (classes.size() <= c) classes.resize(c + 1);
    classes[c].push_back(i);
  }
  return classes;
}

Blocks read_blocks(TextReader& in) {
  Blocks b;
  b.graph = read_bigraph(in);
  b.row_classes = read_classes(in, "row_classes", b.graph.size_a());
  b.col_classes = read_classes(in, "col_classes", b.graph.size_b());
  return b;
}

Instance read_instance(TextReader& in) {
  auto parsed = read_multigraph(in);
  return make_instance(std::move(parsed.graph), std::move(parsed.tree), parsed.provenance.value_or(""));
}

// ---------------------------------------------------------------- campaigns

struct Campaign {
  std::string name;
  CampaignParams defaults;
  void (*run)(const CampaignParams&, std::uint64_t, CampaignReport&);
  Outcome (*replay)(const Detail&, TextReader&);
};

void run_fun(const CampaignParams& p, std::uint64_t seed, CampaignReport& report) {
  cap(p.max_vertices <= 64 && p.max_extra <= 64, "fun-lemma: max_vertices and max_extra are capped at 64");
  const Source source = parse_source(p.source);
  Recorder rec(report);
  for (std::size_t trial = 0; trial < p.trials; ++trial) {
    const Instance inst = instance_for_trial(source, p, derive_seed(seed, trial));
    ++report.trials_run;
    for (const auto s : range_or(p.s, 1, 4)) {
      for (const auto t : range_or(p.t, 1, 4)) {
        if (!(p.s != 0 && p.t != 0) && s > t) continue;
        const std::string detail = "trial=" + std::to_string(trial) + " s=" + std::to_string(s) +
                                   " t=" + std::to_string(t) + " offset=" + std::to_string(p.bound_offset);
        rec.record(check_fun(inst.fundamental, s, t, p.bound_offset), detail,
                   [&] { return to_text(inst, write_instance); });
      }
    }
  }
}

Outcome replay_fun(const Detail& d, TextReader& in) {
  const Instance inst = read_instance(in);
  return check_fun(inst.fundamental, require_size(d, "s"), require_size(d, "t"), require_int(d, "offset"));
}

void run_cofun(const CampaignParams& p, std::uint64_t seed, CampaignReport& report) {
  cap(p.max_vertices <= 64 && p.max_extra <= 64, "cofun-lemma: max_vertices and max_extra are capped at 64");
  const Source source = parse_source(p.source);
  Recorder rec(report);
  for (std::size_t trial = 0; trial < p.trials; ++trial) {
    const Instance inst = instance_for_trial(source, p, derive_seed(seed, trial));
    ++report.trials_run;
    for (const auto s : range_or(p.s, 1, 3)) {
      const std::string detail = "trial=" + std::to_string(trial) + " s=" + std::to_string(s) +
                                 " offset=" + std::to_string(p.bound_offset);
      rec.record(check_cofun(inst.fundamental, s, p.bound_offset), detail,
                 [&] { return to_text(inst, write_instance); });
    }
  }
}

Outcome replay_cofun(const Detail& d, TextReader& in) {
  const Instance inst = read_instance(in);
  return check_cofun(inst.fundamental, require_size(d, "s"), require_int(d, "offset"));
}

void run_tree(const CampaignParams& p, std::uint64_t seed, CampaignReport& report) {
  Recorder rec(report);
  std::size_t trial = 0;
  const auto visit = [&](const Graph& tree) {
    ++report.trials_run;
    const std::size_t hi = tree.edge_count() / 5;
    for (const auto s : range_or(p.s, 1, hi)) {
      const std::string detail = "trial=" + std::to_string(trial) + " s=" + std::to_string(s);
      rec.record(check_tree(tree, s), detail, [&] { return to_text(tree, write_graph); });
    }
    ++trial;
  };
  if (p.exhaustive) {
    cap(p.max_vertices <= 16, "tree-lemma: exhaustive enumeration is capped at 16 vertices");
    for_each_rooted_tree(p.max_vertices, visit);
    return;
  }
  cap(p.max_vertices <= 4096, "tree-lemma: random trees are capped at 4096 vertices");
  for (std::size_t i = 0; i < p.trials; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t n = rng.between(2, std::max<std::size_t>(2, p.max_vertices));
    std::vector<std::size_t> seq(n - 2);
    for (auto& x : seq) x = rng.below(n);
    visit(Graph(n, pruefer_tree(n, seq)));
  }
}

Outcome replay_tree(const Detail& d, TextReader& in) { return check_tree(read_graph(in), require_size(d, "s")); }

void run_density(const CampaignParams& p, std::uint64_t seed, CampaignReport& report) {
  cap(p.dim >= 1 && p.dim * p.max_vertices <= 64, "struct-density: classes * class size is capped at 64");
  cap(p.max_vertices >= 1, "struct-density: class size must be positive");
  Recorder rec(report);
  for (std::size_t trial = 0; trial < p.trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    const Blocks blocks = random_blocks(p.dim, p.max_vertices, rng);
    ++report.trials_run;
    for (const auto s : range_or(p.s, 2, 3)) {
      const std::string detail = "trial=" + std::to_string(trial) + " s=" + std::to_string(s);
      rec.record(check_density(blocks, s), detail, [&] { return blocks_text(blocks); });
    }
  }
}

Outcome replay_density(const Detail& d, TextReader& in) { return check_density(read_blocks(in), require_size(d, "s")); }

void run_rankconn(const CampaignParams& p, std::uint64_t seed, CampaignReport& report) {
  cap(p.max_vertices <= std::min<std::size_t>(subset_cap(), 64),
      "rankconn-lemma: max_vertices exceeds the subset-search cap");
  cap(!p.exhaustive || p.exhaustive_max <= 8, "rankconn-lemma: exhaustive enumeration is capped at 8 vertices");
  Recorder rec(report);
  std::size_t trial = 0;
  const auto visit = [&](const Graph& g) {
    ++report.trials_run;
    rec.record(check_rankconn(g), "trial=" + std::to_string(trial), [&] { return to_text(g, write_graph); });
    ++trial;
  };
  if (p.exhaustive) {
    for (std::size_t n = 1; n <= p.exhaustive_max; ++n) for_each_c4_free_graph(n, visit);
  }
  const std::size_t lo = p.exhaustive ? std::min(p.exhaustive_max + 1, p.max_vertices) : 1;
  for (std::size_t i = 0; i < p.trials; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t n = rng.between(std::max<std::size_t>(lo, 1), std::max<std::size_t>(p.max_vertices, 1));
    // Alternate sparse rejection samples with denser maximal C4-free graphs.
    visit(i % 2 == 0 ? sparse_c4_free(n, rng) : greedy_c4_free(n, rng));
  }
}

Outcome replay_rankconn(const Detail&, TextReader& in) { return check_rankconn(read_graph(in)); }

void run_pert(const CampaignParams& p, std::uint64_t seed, CampaignReport& report) {
  cap(p.dim <= 64 && p.max_rank <= p.dim, "pert-partition: dim is capped at 64 and max_rank at dim");
  Recorder rec(report);
  for (std::size_t trial = 0; trial < p.trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    const std::size_t r = rng.between(0, p.max_rank);
    const BitMatrix d2 = random_matrix(p.dim, p.dim, rng);
    BitMatrix d1 = multiply(random_matrix(p.dim, r, rng), random_matrix(r, p.dim, rng));
    d1 ^= d2;
    ++report.trials_run;
    rec.record(check_pert(d1, d2), "trial=" + std::to_string(trial), [&] {
      return to_text(d1, write_matrix) + to_text(d2, write_matrix);
    });
  }
}

Outcome replay_pert(const Detail&, TextReader& in) {
  const BitMatrix d1 = read_matrix(in);
  const BitMatrix d2 = read_matrix(in);
  return check_pert(d1, d2);
}

void run_pivot_matroid(const CampaignParams& p, std::uint64_t seed, CampaignReport& report) {
  cap(p.max_vertices >= 1 && p.max_vertices <= 16, "pivot-matroid: ground sets are capped at 16 elements");
  Recorder rec(report);
  for (std::size_t trial = 0; trial < p.trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    const BinaryMatroid m = random_matroid(p.max_vertices, rng, true);
    ++report.trials_run;
    rec.record(check_pivot_matroid(m), "trial=" + std::to_string(trial), [&] { return to_text(m, write_matroid); });
  }
}

Outcome replay_pivot_matroid(const Detail&, TextReader& in) { return check_pivot_matroid(read_matroid(in)); }

void run_conn(const CampaignParams& p, std::uint64_t seed, CampaignReport& report) {
  cap(p.max_vertices >= 1 && p.max_vertices <= std::min<std::size_t>(subset_cap(), 16),
      "conn-equiv: ground sets are capped at min(16, subset cap) elements");
  Recorder rec(report);
  const std::size_t max_k = p.k == 0 ? 4 : p.k;
  for (std::size_t trial = 0; trial < p.trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    const BinaryMatroid m = random_matroid(p.max_vertices, rng, false);
    ++report.trials_run;
    rec.record(check_conn(m, max_k), "trial=" + std::to_string(trial) + " max_k=" + std::to_string(max_k),
               [&] { return to_text(m, write_matroid); });
  }
}

Outcome replay_conn(const Detail& d, TextReader& in) { return check_conn(read_matroid(in), require_size(d, "max_k")); }

void run_avg(const CampaignParams& p, std::uint64_t seed, CampaignReport& report) {
  cap(p.max_vertices >= 1 && p.max_vertices <= 12, "avg-exists: graphs are capped at 12 vertices");
  cap(p.k <= 1, "avg-exists: only k = 1 is supported");
  Recorder rec(report);
  const std::size_t k = 1;
  for (std::size_t trial = 0; trial < p.trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    const std::size_t n = rng.between(std::min<std::size_t>(4 * k + 1, p.max_vertices), p.max_vertices);
    const Graph g = greedy_c4_free(n, rng);
    ++report.trials_run;
    rec.record(check_avg(g, k), "trial=" + std::to_string(trial) + " k=" + std::to_string(k),
               [&] { return to_text(g, write_graph); });
  }
}

Outcome replay_avg(const Detail& d, TextReader& in) { return check_avg(read_graph(in), require_size(d, "k")); }

CampaignParams with(CampaignParams p, auto&& edit) {
  edit(p);
  return p;
}

const std::vector<Campaign>& campaigns() {
  static const std::vector<Campaign> all = {
      {"fun-lemma", with(CampaignParams{}, [](auto& p) { p.trials = 500; }), run_fun, replay_fun},
      {"cofun-lemma", with(CampaignParams{}, [](auto& p) { p.trials = 500; }), run_cofun, replay_cofun},
      {"tree-lemma", with(CampaignParams{}, [](auto& p) {
         p.trials = 200;
         p.max_vertices = 12;
         p.exhaustive = true;
       }), run_tree, replay_tree},
      {"struct-density", with(CampaignParams{}, [](auto& p) {
         p.trials = 200;
         p.dim = 3;
         p.max_vertices = 4;
       }), run_density, replay_density},
      {"rankconn-lemma", with(CampaignParams{}, [](auto& p) {
         p.trials = 10000;
         p.max_vertices = 8;
         p.exhaustive = true;
         p.exhaustive_max = 7;
       }), run_rankconn, replay_rankconn},
      {"pert-partition", with(CampaignParams{}, [](auto& p) { p.trials = 200; }), run_pert, replay_pert},
      {"pivot-matroid", with(CampaignParams{}, [](auto& p) { p.trials = 200; }), run_pivot_matroid,
       replay_pivot_matroid},
      {"conn-equiv", with(CampaignParams{}, [](auto& p) {
         p.trials = 100;
         p.k = 4;
       }), run_conn, replay_conn},
      {"avg-exists", with(CampaignParams{}, [](auto& p) {
         p.trials = 20;
         p.max_vertices = 12;
         p.k = 1;
       }), run_avg, replay_avg},
  };
  return all;
}

const Campaign& find_campaign(std::string_view name) {
  for (const auto& c : campaigns()) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::UnknownCampaign, "unknown campaign '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- report text

std::size_t parse_size(const std::string& key, const std::string& value) {
  const auto v = parse_csv_integers(value);
  if (v.size() != 1 || v[0] < 0) throw Error(ErrorCode::ParseError, "bad value for " + key + ": '" + value + "'");
  return static_cast<std::size_t>(v[0]);
}

}  // namespace

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : campaigns()) out.push_back(c.name);
    return out;
  }();
  return names;
}

CampaignParams default_params(std::string_view name) { return find_campaign(name).defaults; }

CampaignReport run_campaign(std::string_view name, const CampaignParams& params, std::uint64_t seed) {
  const Campaign& campaign = find_campaign(name);
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.campaign = campaign.name;
  report.params = params;
  report.seed = seed;
  campaign.run(params, seed, report);
  if (report.checks > 0 && report.vacuous * 10 > report.checks * 9) {
    report.warnings.push_back("vacuous fraction above 90% (" + std::to_string(report.vacuous) + " of " +
                              std::to_string(report.checks) + " checks)");
  }
  if (report.checks == 0) report.warnings.push_back("no checks were run");
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

void write_report(std::ostream& out, const CampaignReport& r) {
  const CampaignParams& p = r.params;
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  out << "campaign=" << r.campaign << '\n';
  out << "seed=" << r.seed << '\n';
  out << "s=" << p.s << '\n';
  out << "t=" << p.t << '\n';
  out << "k=" << p.k << '\n';
  out << "trials=" << p.trials << '\n';
  out << "max_vertices=" << p.max_vertices << '\n';
  out << "max_extra=" << p.max_extra << '\n';
  out << "dim=" << p.dim << '\n';
  out << "max_rank=" << p.max_rank << '\n';
  out << "bound_offset=" << p.bound_offset << '\n';
  out << "source=" << p.source << '\n';
  out << "exhaustive=" << (p.exhaustive ? 1 : 0) << '\n';
  out << "exhaustive_max=" << p.exhaustive_max << '\n';
  out << "trials_run=" << r.trials_run << '\n';
  out << "checks=" << r.checks << '\n';
  out << "passed=" << r.checks - r.vacuous - r.violations.size() << '\n';
  out << "vacuous=" << r.vacuous << '\n';
  out << "violations=" << r.violations.size() << '\n';
  for (const auto& w : r.warnings) out << "warning=" << w << '\n';
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    out << "violation " << i << ' ' << r.violations[i].detail << '\n';
    out << r.violations[i].payload;
    if (!r.violations[i].payload.empty() && r.violations[i].payload.back() != '\n') out << '\n';
    out << "end\n";
  }
}

CampaignReport read_report(std::istream& in) {
  CampaignReport r;
  std::string line;
  std::size_t number = 0;
  const auto fail = [&](const std::string& message) {
    throw Error(ErrorCode::ParseError, "report line " + std::to_string(number) + ": " + message);
  };
  bool have_status = false;
  bool failed = false;
  std::size_t expected_violations = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_status) {
      if (line != "PASS" && line != "FAIL") fail("expected PASS or FAIL");
      failed = line == "FAIL";
      have_status = true;
      continue;
    }
    if (line.rfind("violation ", 0) == 0) {
      const auto words = split_words(line);
      if (words.size() < 2 || words[1] != std::to_string(r.violations.size())) fail("bad violation index");
      Violation v;
      const auto detail_start = line.find(words[1], 10) + words[1].size();
      v.detail = detail_start < line.size() ? line.substr(detail_start + 1) : "";
      bool closed = false;
      while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line == "end") {
          closed = true;
          break;
        }
        v.payload += line + '\n';
      }
      if (!closed) fail("unterminated violation block");
      r.violations.push_back(std::move(v));
      continue;
    }
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key=value");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    CampaignParams& p = r.params;
    if (key == "campaign") r.campaign = value;
    else if (key == "seed") {
      try {
        std::size_t used = 0;
        r.seed = std::stoull(value, &used);
        if (used != value.size()) fail("bad seed");
      } catch (const std::logic_error&) {
        fail("bad seed");
      }
    } else if (key == "s") p.s = parse_size(key, value);
    else if (key == "t") p.t = parse_size(key, value);
    else if (key == "k") p.k = parse_size(key, value);
    else if (key == "trials") p.trials = parse_size(key, value);
    else if (key == "max_vertices") p.max_vertices = parse_size(key, value);
    else if (key == "max_extra") p.max_extra = parse_size(key, value);
    else if (key == "dim") p.dim = parse_size(key, value);
    else if (key == "max_rank") p.max_rank = parse_size(key, value);
    else if (key == "bound_offset") {
      const auto v = parse_csv_integers(value);
      if (v.size() != 1) fail("bad bound_offset");
      p.bound_offset = v[0];
    } else if (key == "source") p.source = value;
    else if (key == "exhaustive") p.exhaustive = parse_size(key, value) != 0;
    else if (key == "exhaustive_max") p.exhaustive_max = parse_size(key, value);
    else if (key == "trials_run") r.trials_run = parse_size(key, value);
    else if (key == "checks") r.checks = parse_size(key, value);
    else if (key == "vacuous") r.vacuous = parse_size(key, value);
    else if (key == "violations") expected_violations = parse_size(key, value);
    else if (key == "warning") r.warnings.push_back(value);
    else if (key == "passed") continue;
    else fail("unknown key '" + key + "'");
  }
  if (!have_status) throw Error(ErrorCode::ParseError, "empty report");
  if (r.campaign.empty()) throw Error(ErrorCode::ParseError, "report lacks campaign");
  if (r.violations.size() != expected_violations || failed != !r.violations.empty()) {
    throw Error(ErrorCode::ParseError, "violation count does not match the report header");
  }
  return r;
}

ReplayOutcome replay_report(const CampaignReport& report) {
  const Campaign& campaign = find_campaign(report.campaign);
  ReplayOutcome out;
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const Violation& v = report.violations[i];
    ++out.total;
    Outcome o;
    try {
      TextReader in(v.payload);
      o = campaign.replay(parse_detail(v.detail), in);
    } catch (const Error& e) {
      o = Outcome{Verdict::Pass, std::string("error=") + e.what()};
    }
    const bool again = o.verdict == Verdict::Violated;
    if (again) ++out.reproduced;
    out.messages.push_back("violation " + std::to_string(i) + (again ? " reproduced" : " not reproduced") +
                           (o.note.empty() ? "" : " " + o.note));
  }
  return out;
}

void for_each_rooted_tree(std::size_t max_vertices, const std::function<void(const Graph&)>& visit) {
  // Level sequences in the order of Beyer and Hedetniemi; root at level 1.
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::size_t> level(n);
    for (std::size_t i = 0; i < n; ++i) level[i] = i + 1;
    while (true) {
      Graph tree(n);
      std::vector<std::size_t> last_at(n + 2, 0);
      for (std::size_t i = 1; i < n; ++i) {
        last_at[level[i - 1]] = i - 1;
        tree.add_edge(last_at[level[i] - 1], i);
      }
      visit(tree);
      std::size_t p = n;
      for (std::size_t i = n; i-- > 0;) {
        if (level[i] > 2) {
          p = i;
          break;
        }
      }
      if (p == n) break;
      std::size_t q = p;
      while (level[--q] != level[p] - 1) {
      }
      for (std::size_t i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
  }
}

void for_each_c4_free_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  cap(n <= 16, "C4-free enumeration is capped at 16 vertices");
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<std::uint64_t> adj(n, 0);
  const auto recurse = [&](auto&& self, std::size_t index) -> void {
    if (index == pairs.size()) {
      visit(graph_from_masks(adj));
      return;
    }
    self(self, index + 1);
    const auto [u, v] = pairs[index];
    if (closes_c4(adj, u, v)) return;
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
    self(self, index + 1);
    adj[u] &= ~(std::uint64_t{1} << v);
    adj[v] &= ~(std::uint64_t{1} << u);
  };
  recurse(recurse, 0);
}

}  // namespace pivotkit
