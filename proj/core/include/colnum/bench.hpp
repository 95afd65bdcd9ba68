#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "colnum/graph.hpp"
#include "colnum/uqw.hpp"
#include "colnum/util.hpp"

namespace colnum {

struct GraphEntry {
  std::string name;
  Graph graph;
};

/// Loads a single edge-list file or every regular file of a directory
/// (sorted by filename). Unreadable or malformed files are skipped with a
/// warning on stderr.
std::vector<GraphEntry> load_graph_set(const std::string& path);

/// small <= 1000 < medium <= 10000 < big <= 48000 < huge, by edge count.
std::string group_label(int edge_count);

/// Ordering-algorithm registry. Names: deg, degeneracy, random, pow_deg,
/// pow_degeneracy, treedepth, treewidth, dtf, wreach, sreach and the 18
/// flat:<root>:<inner>:<rev> variants. "all" expands to the default set,
/// "flat_all" to the 18 flat variants.
std::vector<std::string> expand_wcol_algorithms(const std::vector<std::string>& names);
Order run_wcol_algorithm(const std::string& name, const Graph& g, int r, std::uint64_t seed,
                         const Deadline& deadline = {});

/// UQW registry: ld, tree1, tree2, ld_it, mfcs, new1, new2, new_ld ("all"
/// expands). The wcol-based algorithms compute their order internally
/// (right-to-left greedy improved by a short local search pass).
std::vector<std::string> expand_uqw_algorithms(const std::vector<std::string>& names);
UqwResult run_uqw_algorithm(const std::string& name, const Graph& g, const std::vector<int>& a,
                            int r, std::uint64_t seed, const Deadline& deadline = {});

struct WcolBenchOptions {
  std::vector<std::string> algorithms{"all"};
  std::vector<int> radii{1, 2, 3, 4, 5};
  double timeout_seconds = 300;     // order construction + evaluation
  double ls_timeout_seconds = 60;   // local search pass
  bool local_search = false;
  std::uint64_t seed = 0;
  int threads = 1;
  bool zero_elapsed = false;        // write 0 in the elapsed column
  std::string baseline_path;        // optional "graph,radius,wcol" CSV of prior bests
};

struct WcolBenchOutput {
  std::string records_csv;  // graph,n,m,group,algorithm,radius,wcol,elapsed_ms,seed,timeout
  std::string ratio_csv;    // graph,radius,<algorithm...> ratios to the row minimum
};

WcolBenchOutput run_wcol_bench(const std::vector<GraphEntry>& graphs,
                               const WcolBenchOptions& options);

struct UqwBenchOptions {
  std::vector<std::string> algorithms{"all"};
  std::vector<int> radii{2, 3, 4, 5};
  std::string start_mode = "full";  // "full" or "sample20"
  double timeout_seconds = 600;
  std::uint64_t seed = 0;
  int threads = 1;
  bool zero_elapsed = false;
};

/// graph,n,m,group,algorithm,radius,start_mode,deleted,independent,score,
/// elapsed_ms,seed,timeout; plus one _total row per (algorithm, radius)
/// summing the finished runs.
std::string run_uqw_bench(const std::vector<GraphEntry>& graphs, const UqwBenchOptions& options);

/// 18-row flat configuration comparison on one radius: variant, mean ratio
/// to the per-graph best flat variant, and the number of finished runs.
std::string flat_variant_table(const std::vector<GraphEntry>& graphs, int radius,
                               double timeout_seconds, std::uint64_t seed, int threads = 1,
                               bool zero_elapsed = false);

/// Pearson correlations of log-transformed measures (n, m, average degree,
/// maximum degree, best wcol_r per radius from the records CSV). Needs at
/// least three graphs; zero-variance or short columns give NA.
std::string compute_stats(const std::vector<GraphEntry>& graphs, const std::string& records_csv);

}  // namespace colnum
