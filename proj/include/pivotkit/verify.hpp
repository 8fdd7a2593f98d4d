#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pivotkit/graph.hpp"

namespace pivotkit {

/// Campaign knobs. Which fields matter depends on the campaign; s = 0 and
/// t = 0 mean "sweep the campaign's default range".
struct CampaignParams {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t trials = 100;
  std::size_t max_vertices = 10;
  std::size_t max_extra = 6;
  std::size_t dim = 8;
  std::size_t max_rank = 4;
  std::int64_t bound_offset = 0;
  /// "random", "ktt:<t>" or "c6blowup:<s>" (fun-lemma and cofun-lemma).
  std::string source = "random";
  bool exhaustive = false;
  std::size_t exhaustive_max = 0;

  bool operator==(const CampaignParams&) const = default;
};

/// A recorded counterexample: one line of key=value pairs plus a serialized witness.
struct Violation {
  std::string detail;
  std::string payload;

  bool operator==(const Violation&) const = default;
};

struct CampaignReport {
  std::string campaign;
  CampaignParams params;
  std::uint64_t seed = 0;
  std::size_t trials_run = 0;
  std::size_t checks = 0;
  std::size_t vacuous = 0;
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  /// Wall time; not serialized so that reports stay byte-identical across runs.
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return violations.empty(); }
};

/// Names accepted by run_campaign.
const std::vector<std::string>& campaign_names();

/// Defaults for a campaign (trial counts and size caps).
CampaignParams default_params(std::string_view name);

/// Runs a campaign deterministically for (name, params, seed). Throws
/// UnknownCampaign for unknown names and CapExceeded for oversize parameters.
CampaignReport run_campaign(std::string_view name, const CampaignParams& params,
                            std::uint64_t seed);

/// "PASS"/"FAIL" line, key=value lines, then one block per violation:
///   violation <index> <detail>
///   <payload lines>
///   end
void write_report(std::ostream& out, const CampaignReport& report);
CampaignReport read_report(std::istream& in);

struct ReplayOutcome {
  std::size_t total = 0;
  std::size_t reproduced = 0;
  std::vector<std::string> messages;
};

/// Re-checks every recorded violation against the current implementation.
ReplayOutcome replay_report(const CampaignReport& report);

/// Calls visit(tree) for every rooted tree (up to isomorphism) with 1..max_vertices
/// vertices, labelled in preorder so the root is vertex 0.
void for_each_rooted_tree(std::size_t max_vertices, const std::function<void(const Graph&)>& visit);

/// Calls visit(g) for every labelled C4-free graph on exactly n vertices (n <= 16).
void for_each_c4_free_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

}  // namespace pivotkit
