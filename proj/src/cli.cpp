#include "pivotkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "pivotkit/cutrank.hpp"
#include "pivotkit/error.hpp"
#include "pivotkit/extremal.hpp"
#include "pivotkit/io.hpp"
#include "pivotkit/matroid.hpp"
#include "pivotkit/pivot.hpp"
#include "pivotkit/structure.hpp"
#include "pivotkit/verify.hpp"

namespace pivotkit {
namespace {

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw Error(ErrorCode::InvalidArgument, "stdin ('-') can be read only once");
      stdin_used_ = true;
      std::ostringstream buf;
      buf << in_.rdbuf();
      return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

template <typename T, typename Reader>
T parse_whole(const std::string& text, Reader reader) {
  TextReader in(text);
  T value = reader(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return value;
}

/// Reads a graph file; a bigraph is accepted and converted.
Graph parse_any_graph(const std::string& text) {
  TextReader in(text);
  const auto words = split_words(in.peek());
  Graph g = words.at(0) == "bigraph" ? read_bigraph(in).to_graph() : read_graph(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return g;
}

BiGraph parse_any_bigraph(const std::string& text) {
  TextReader in(text);
  const auto words = split_words(in.peek());
  BiGraph g = words.at(0) == "matrix" ? BiGraph(read_matrix(in)) : read_bigraph(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return g;
}

VertexSet parse_vertex_set(const std::string& csv) {
  VertexSet out;
  for (const long long v : parse_csv_integers(csv)) {
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex in set");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

ElementSet parse_element_set(const std::string& csv) {
  ElementSet out;
  for (const long long v : parse_csv_integers(csv)) out.push_back(static_cast<Element>(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <typename Range>
void write_list(std::ostream& out, std::string_view name, const Range& items) {
  out << name;
  for (const auto& x : items) out << ' ' << x;
  out << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"pivotkit: fundamental graphs, pivots, cut-rank and binary matroids", "pivotkit-cli"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Inputs inputs(in);
  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance (multigraph with spanning tree)");
  gen->require_subcommand(1);
  std::size_t gen_t = 0;
  std::size_t gen_s = 0;
  std::size_t gen_n = 0;
  std::size_t gen_extra = 0;
  std::uint64_t gen_seed = 0;
  bool gen_loops = false;
  auto* gen_ktt = gen->add_subcommand("ktt", "Tight example for K_{t-1,t-1}");
  gen_ktt->add_option("t", gen_t, "t >= 2")->required();
  gen_ktt->callback([&] { action = [&] { write_instance(out, gen_ktt_example(gen_t)); return 0; }; });
  auto* gen_c6 = gen->add_subcommand("c6blowup", "Planar graph whose fundamental graph blows up C6");
  gen_c6->add_option("s", gen_s, "s >= 2")->required();
  gen_c6->callback([&] { action = [&] { write_instance(out, gen_c6_blowup_example(gen_s)); return 0; }; });
  auto* gen_rand = gen->add_subcommand("random", "Random tree plus extra edges");
  gen_rand->add_option("n", gen_n, "vertices")->required();
  gen_rand->add_option("extra", gen_extra, "non-tree edges")->required();
  gen_rand->add_option("--seed", gen_seed, "seed");
  gen_rand->add_flag("--loops", gen_loops, "allow loops");
  gen_rand->callback([&] {
    action = [&] {
      write_instance(out, gen_random_instance(gen_n, gen_extra, gen_seed, gen_loops));
      return 0;
    };
  });

  std::string file;
  std::string file2;

  auto* fund = app.add_subcommand("fundgraph", "Fundamental graph of a multigraph file");
  fund->add_option("file", file, "multigraph file or -")->required();
  fund->callback([&] {
    action = [&] {
      auto g = parse_whole<TreeMarkedMultiGraph>(inputs.read(file), read_multigraph);
      write_bigraph(out, BiGraph(fundamental_matrix(g.graph, g.tree)));
      return 0;
    };
  });

  Vertex vx = 0;
  Vertex vy = 0;
  auto* piv = app.add_subcommand("pivot", "Pivot a graph on edge xy");
  piv->add_option("file", file, "graph file or -")->required();
  piv->add_option("x", vx)->required();
  piv->add_option("y", vy)->required();
  piv->callback([&] {
    action = [&] {
      write_graph(out, pivot(parse_any_graph(inputs.read(file)), vx, vy));
      return 0;
    };
  });

  std::string set_csv;
  auto* cr = app.add_subcommand("cutrank", "Cut-rank of a vertex set");
  cr->add_option("file", file, "graph file or -")->required();
  cr->add_option("--set", set_csv, "comma-separated vertices")->required();
  cr->callback([&] {
    action = [&] {
      out << cut_rank(parse_any_graph(inputs.read(file)), parse_vertex_set(set_csv)) << '\n';
      return 0;
    };
  });

  std::size_t k = 0;
  auto* rc = app.add_subcommand("rankconn", "Separation of rank < k, or confirm k-rank-connectivity");
  rc->add_option("file", file, "graph file or -")->required();
  rc->add_option("k", k)->required();
  rc->callback([&] {
    action = [&] {
      const auto sep = find_low_rank_separation(parse_any_graph(inputs.read(file)), k);
      if (!sep) {
        out << k << "-rank-connected\n";
        return 0;
      }
      out << "separation order " << sep->order << " cutrank " << sep->cutrank_value << '\n';
      write_list(out, "side", sep->side_x);
      return 0;
    };
  });

  // matroid
  auto* mat = app.add_subcommand("matroid", "Binary matroid operations");
  mat->require_subcommand(1);
  auto* m_circ = mat->add_subcommand("circuits", "List all circuits");
  m_circ->add_option("file", file, "matroid file or -")->required();
  m_circ->callback([&] {
    action = [&] {
      const auto all = circuits(parse_whole<BinaryMatroid>(inputs.read(file), read_matroid));
      out << "circuits " << all.size() << '\n';
      for (const auto& c : all) write_list(out, "circuit", c);
      return 0;
    };
  });
  std::string del_csv;
  std::string con_csv;
  auto* m_minor = mat->add_subcommand("minor", "Delete and contract elements");
  m_minor->add_option("file", file, "matroid file or -")->required();
  m_minor->add_option("--delete", del_csv, "comma-separated labels");
  m_minor->add_option("--contract", con_csv, "comma-separated labels");
  m_minor->callback([&] {
    action = [&] {
      const auto m = parse_whole<BinaryMatroid>(inputs.read(file), read_matroid);
      write_matroid(out, minor(m, parse_element_set(del_csv), parse_element_set(con_csv)));
      return 0;
    };
  });
  auto* m_lambda = mat->add_subcommand("lambda", "Connectivity function of a set");
  m_lambda->add_option("file", file, "matroid file or -")->required();
  m_lambda->add_option("--set", set_csv, "comma-separated labels")->required();
  m_lambda->callback([&] {
    action = [&] {
      const auto m = parse_whole<BinaryMatroid>(inputs.read(file), read_matroid);
      out << lambda(m, parse_element_set(set_csv)) << '\n';
      return 0;
    };
  });
  auto* m_conn = mat->add_subcommand("connectivity", "Check k-connectivity");
  m_conn->add_option("file", file, "matroid file or -")->required();
  m_conn->add_option("k", k)->required();
  m_conn->callback([&] {
    action = [&] {
      const auto r = is_k_connected(parse_whole<BinaryMatroid>(inputs.read(file), read_matroid), k);
      if (r.connected) {
        out << k << "-connected\n";
        return 0;
      }
      out << "separation order " << r.witness->order << " lambda " << r.witness->lambda_value << '\n';
      write_list(out, "side", r.witness->x);
      return 0;
    };
  });
  auto* m_graphic = mat->add_subcommand("graphic", "Graphic matroid of a multigraph file");
  m_graphic->add_option("file", file, "multigraph file or -")->required();
  m_graphic->callback([&] {
    action = [&] {
      auto g = parse_whole<TreeMarkedMultiGraph>(inputs.read(file), read_multigraph);
      write_matroid(out, graphic_matroid(g.graph, g.tree));
      return 0;
    };
  });
  auto* m_cographic = mat->add_subcommand("cographic", "Cographic matroid of a multigraph file");
  m_cographic->add_option("file", file, "multigraph file or -")->required();
  m_cographic->callback([&] {
    action = [&] {
      auto g = parse_whole<TreeMarkedMultiGraph>(inputs.read(file), read_multigraph);
      write_matroid(out, cographic_matroid(g.graph, g.tree));
      return 0;
    };
  });
  Element ex = 0;
  Element ey = 0;
  auto* m_exchange = mat->add_subcommand("exchange", "Exchange basis element x for y");
  m_exchange->add_option("file", file, "matroid file or -")->required();
  m_exchange->add_option("x", ex)->required();
  m_exchange->add_option("y", ey)->required();
  m_exchange->callback([&] {
    action = [&] {
      write_matroid(out, change_basis(parse_whole<BinaryMatroid>(inputs.read(file), read_matroid), ex, ey));
      return 0;
    };
  });
  auto* m_fund = mat->add_subcommand("fundgraph", "Fundamental graph on the ground set");
  m_fund->add_option("file", file, "matroid file or -")->required();
  m_fund->callback([&] {
    action = [&] {
      write_graph(out, parse_whole<BinaryMatroid>(inputs.read(file), read_matroid).fundamental_graph());
      return 0;
    };
  });

  std::size_t s = 0;
  auto* split = app.add_subcommand("splittree", "Split a tree with at least 5s edges");
  split->add_option("file", file, "graph file or -")->required();
  split->add_option("s", s)->required();
  split->callback([&] {
    action = [&] {
      write_tree_split(out, split_tree(parse_any_graph(inputs.read(file)), s));
      return 0;
    };
  });

  std::vector<std::string> pair;
  auto* part = app.add_subcommand("partition", "Constant-block partition of a matrix or of a pair difference");
  auto* part_file = part->add_option("file", file, "matrix or bigraph file or -");
  auto* part_pair = part->add_option("--pair", pair, "two bigraph files G1 G2")->expected(2);
  part_file->excludes(part_pair);
  part->callback([&] {
    action = [&] {
      if (!pair.empty()) {
        const BiGraph g1 = parse_any_bigraph(inputs.read(pair[0]));
        const BiGraph g2 = parse_any_bigraph(inputs.read(pair[1]));
        write_block_partition(out, perturbation_partition(g1, g2));
        return 0;
      }
      if (file.empty()) throw Error(ErrorCode::InvalidArgument, "partition needs a file or --pair");
      write_block_partition(out, constant_block_partition(parse_any_bigraph(inputs.read(file)).biadjacency()));
      return 0;
    };
  });

  std::size_t budget = 100000;
  bool refute = false;
  auto* pm = app.add_subcommand("pivotminor", "Is H a pivot-minor of G?");
  pm->add_option("H", file, "graph file H or -")->required();
  pm->add_option("G", file2, "graph file G or -")->required();
  pm->add_option("--budget", budget, "maximum number of search states");
  pm->add_flag("--refute", refute, "exit 1 when H is found");
  pm->callback([&] {
    action = [&] {
      const Graph h = parse_any_graph(inputs.read(file));
      const Graph g = parse_any_graph(inputs.read(file2));
      PivotMinorResult r;
      try {
        r = is_pivot_minor(h, g, budget);
      } catch (const Error& e) {
        if (!is_budget_error(e.code())) throw;
        out << "unknown\n";
        err << "error: " << e.what() << '\n';
        return static_cast<int>(kExitBudget);
      }
      if (!r.found) {
        out << "no\n";
        return 0;
      }
      out << "yes\n";
      for (const auto& step : r.witness) out << to_string(step) << '\n';
      return refute ? static_cast<int>(kExitViolation) : 0;
    };
  });

  auto* stats = app.add_subcommand("stats", "Degree statistics and basic properties");
  stats->add_option("file", file, "graph or bigraph file or -")->required();
  stats->callback([&] {
    action = [&] {
      const std::string text = inputs.read(file);
      TextReader probe(text);
      if (split_words(probe.peek()).at(0) == "bigraph") {
        const BiGraph b = parse_any_bigraph(text);
        const DegreeStats d = degree_stats(b);
        out << "size_a=" << b.size_a() << "\nsize_b=" << b.size_b() << "\nedges=" << b.edge_count()
            << "\nmin_degree=" << d.min_degree << "\nmax_degree=" << d.max_degree
            << "\naverage_degree=" << d.average_degree.to_string() << '\n';
        return 0;
      }
      const Graph g = parse_any_graph(text);
      const DegreeStats d = degree_stats(g);
      out << "vertices=" << g.vertex_count() << "\nedges=" << g.edge_count() << "\nmin_degree=" << d.min_degree
          << "\nmax_degree=" << d.max_degree << "\naverage_degree=" << d.average_degree.to_string()
          << "\nconnected=" << g.is_connected() << "\nbipartite=" << g.is_bipartite()
          << "\nc4_free=" << is_c4_free(g) << "\nvertex_connectivity=" << vertex_connectivity(g) << '\n';
      return 0;
    };
  });

  auto* iso = app.add_subcommand("iso", "Are two graphs isomorphic?");
  iso->add_option("a", file, "graph file or -")->required();
  iso->add_option("b", file2, "graph file or -")->required();
  iso->callback([&] {
    action = [&] {
      const Graph a = parse_any_graph(inputs.read(file));
      const Graph b = parse_any_graph(inputs.read(file2));
      out << (are_isomorphic(a, b) ? "yes" : "no") << '\n';
      return 0;
    };
  });

  // check
  std::string campaign;
  std::uint64_t seed = 0;
  CampaignParams cp;
  int exhaustive = -1;
  auto* check = app.add_subcommand("check", "Run a verification campaign");
  check->add_option("campaign", campaign, "campaign name")->required();
  check->add_option("--seed", seed, "base seed");
  auto* o_s = check->add_option("--s", cp.s);
  auto* o_t = check->add_option("--t", cp.t);
  auto* o_k = check->add_option("--k", cp.k);
  auto* o_trials = check->add_option("--trials", cp.trials);
  auto* o_maxv = check->add_option("--max-vertices", cp.max_vertices);
  auto* o_maxe = check->add_option("--max-extra", cp.max_extra);
  auto* o_dim = check->add_option("--dim", cp.dim);
  auto* o_rank = check->add_option("--max-rank", cp.max_rank);
  auto* o_off = check->add_option("--bound-offset", cp.bound_offset, "added to the checked bound");
  auto* o_src = check->add_option("--source", cp.source, "random, ktt:<t> or c6blowup:<s>");
  check->add_option("--exhaustive", exhaustive, "1 to enumerate, 0 to sample");
  auto* o_exmax = check->add_option("--exhaustive-max", cp.exhaustive_max);
  check->callback([&] {
    action = [&] {
      const CampaignParams given = cp;
      CampaignParams p = default_params(campaign);
      if (o_s->count()) p.s = given.s;
      if (o_t->count()) p.t = given.t;
      if (o_k->count()) p.k = given.k;
      if (o_trials->count()) p.trials = given.trials;
      if (o_maxv->count()) p.max_vertices = given.max_vertices;
      if (o_maxe->count()) p.max_extra = given.max_extra;
      if (o_dim->count()) p.dim = given.dim;
      if (o_rank->count()) p.max_rank = given.max_rank;
      if (o_off->count()) p.bound_offset = given.bound_offset;
      if (o_src->count()) p.source = given.source;
      if (o_exmax->count()) p.exhaustive_max = given.exhaustive_max;
      if (exhaustive >= 0) p.exhaustive = exhaustive != 0;
      const CampaignReport report = run_campaign(campaign, p, seed);
      write_report(out, report);
      err << "elapsed_ms=" << report.elapsed.count() << '\n';
      return report.passed() ? 0 : static_cast<int>(kExitViolation);
    };
  });

  auto* replay = app.add_subcommand("replay", "Re-check the witnesses recorded in a report");
  replay->add_option("file", file, "report file or -")->required();
  replay->callback([&] {
    action = [&] {
      std::istringstream text(inputs.read(file));
      const CampaignReport report = read_report(text);
      const ReplayOutcome r = replay_report(report);
      for (const auto& line : r.messages) out << line << '\n';
      out << "replayed=" << r.total << " reproduced=" << r.reproduced << '\n';
      if (r.total == 0) return 0;
      return r.reproduced == r.total ? static_cast<int>(kExitViolation) : static_cast<int>(kExitUsage);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(kExitUsage);
  }
  try {
    return action ? action() : static_cast<int>(kExitUsage);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_budget_error(e.code()) ? kExitBudget : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pivotkit
