#include "colnum/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "colnum/distance_tree.hpp"
#include "colnum/dtf.hpp"
#include "colnum/flat.hpp"
#include "colnum/greedy_orders.hpp"
#include "colnum/local_search.hpp"
#include "colnum/reach.hpp"
#include "colnum/simple_orders.hpp"
#include "colnum/uqw_wcol.hpp"

namespace colnum {

namespace {

std::string format_ratio(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

// Runs tasks over a fixed-size worker pool; results land at the task's index
// so output order never depends on scheduling. A watchdog warns about tasks
// running far beyond the budget (cooperative deadlines are the enforcement).
void run_tasks(const std::vector<std::function<void()>>& tasks, int threads,
               double budget_seconds) {
  if (threads <= 1) {
    for (const auto& t : tasks) t();
    return;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> done{false};
  std::vector<std::atomic<long long>> started(tasks.size());
  for (auto& s : started) s.store(-1);
  auto now_ms = [] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
  };
  std::thread watchdog([&] {
    std::vector<char> warned(tasks.size(), 0);
    while (!done.load()) {
      std::this_thread::sleep_for(std::chrono::milliseconds(500));
      long long limit = static_cast<long long>(budget_seconds * 3000) + 2000;
      for (size_t i = 0; i < tasks.size(); ++i) {
        long long s = started[i].load();
        if (s >= 0 && !warned[i] && now_ms() - s > limit) {
          warned[i] = 1;
          std::cerr << "warning: task " << i << " is far over its time budget\n";
        }
      }
    }
  });
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        started[i].store(now_ms());
        tasks[i]();
        started[i].store(-1);
      }
    });
  for (auto& th : pool) th.join();
  done.store(true);
  watchdog.join();
}

const std::vector<std::string> kDefaultWcolAlgorithms = {
    "deg",       "degeneracy", "random", "pow_deg", "pow_degeneracy", "treedepth",
    "treewidth", "flat:2:sort:0", "dtf", "wreach", "sreach"};

const std::vector<std::string> kUqwAlgorithms = {"ld",   "tree1", "tree2",  "ld_it",
                                                 "mfcs", "new1",  "new2",   "new_ld"};

std::vector<std::string> all_flat_variants() {
  std::vector<std::string> out;
  for (int root = 1; root <= 3; ++root)
    for (const char* inner : {"bfs", "dfs", "sort"})
      for (int rev = 0; rev <= 1; ++rev)
        out.push_back("flat:" + std::to_string(root) + ":" + inner + ":" + std::to_string(rev));
  return out;
}

Order wcol_order_for_uqw(const Graph& g, int r, std::uint64_t seed, const Deadline& deadline) {
  Order base = order_greedy_sreach(g, r, deadline);
  LsBudget budget;
  budget.seed = seed;
  budget.max_no_improve = 5LL * std::max(1, g.vertex_count());
  budget.max_iterations = 20LL * std::max(1, g.vertex_count());  // don't starve the caller
  budget.deadline = deadline;
  return local_search(g, base, r, budget);
}

}  // namespace

std::vector<GraphEntry> load_graph_set(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<GraphEntry> out;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  for (const auto& file : files) {
    try {
      out.push_back({file.stem().string(), load_edge_list(file.string())});
    } catch (const std::exception& e) {
      std::cerr << "warning: skipping " << file.string() << ": " << e.what() << '\n';
    }
  }
  return out;
}

std::string group_label(int edge_count) {
  if (edge_count <= 1000) return "small";
  if (edge_count <= 10000) return "medium";
  if (edge_count <= 48000) return "big";
  return "huge";
}

std::vector<std::string> expand_wcol_algorithms(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& name : names) {
    if (name == "all") {
      out.insert(out.end(), kDefaultWcolAlgorithms.begin(), kDefaultWcolAlgorithms.end());
    } else if (name == "flat_all") {
      auto flats = all_flat_variants();
      out.insert(out.end(), flats.begin(), flats.end());
    } else {
      out.push_back(name);
    }
  }
  return out;
}

Order run_wcol_algorithm(const std::string& name, const Graph& g, int r, std::uint64_t seed,
                         const Deadline& deadline) {
  if (name == "deg") return order_simple(g, {SimpleVariant::DegreeDesc, r, seed}, deadline);
  if (name == "degeneracy") return order_simple(g, {SimpleVariant::Degeneracy, r, seed}, deadline);
  if (name == "random") return order_simple(g, {SimpleVariant::Random, r, seed}, deadline);
  if (name == "pow_deg") return order_simple(g, {SimpleVariant::PowerDegreeDesc, r, seed}, deadline);
  if (name == "pow_degeneracy")
    return order_simple(g, {SimpleVariant::PowerDegeneracy, r, seed}, deadline);
  if (name == "treedepth") return order_treedepth_heuristic(g, nullptr, deadline);
  if (name == "treewidth") return order_min_degree_elimination(g, nullptr, deadline);
  if (name == "dtf") return order_from_dtf(g, r, deadline);
  if (name == "wreach") return order_greedy_wreach(g, r, nullptr, deadline);
  if (name == "sreach") return order_greedy_sreach(g, r, deadline);
  if (name.rfind("flat:", 0) == 0) return order_flat(g, parse_flat_config(name), seed, deadline);
  throw std::invalid_argument("unknown ordering algorithm '" + name + "'");
}

std::vector<std::string> expand_uqw_algorithms(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& name : names) {
    if (name == "all")
      out.insert(out.end(), kUqwAlgorithms.begin(), kUqwAlgorithms.end());
    else
      out.push_back(name);
  }
  return out;
}

UqwResult run_uqw_algorithm(const std::string& name, const Graph& g, const std::vector<int>& a,
                            int r, std::uint64_t seed, const Deadline& deadline) {
  if (name == "ld") return uqw_ld(g, a, r, 20, deadline);
  if (name == "tree1") return uqw_tree(g, a, r, TreeVariant::Tree1, deadline);
  if (name == "tree2") return uqw_tree(g, a, r, TreeVariant::Tree2, deadline);
  if (name == "ld_it") return uqw_tree(g, a, r, TreeVariant::LdIt, deadline);
  if (name == "mfcs" || name == "new1" || name == "new2" || name == "new_ld") {
    Order order = wcol_order_for_uqw(g, r, seed, deadline);
    if (name == "mfcs") return uqw_mfcs(g, a, r, order, deadline);
    TgvVariant variant = name == "new1"   ? TgvVariant::New1
                         : name == "new2" ? TgvVariant::New2
                                          : TgvVariant::NewLd;
    return uqw_tgv(g, a, r, order, variant, 9, nullptr, deadline);
  }
  throw std::invalid_argument("unknown uqw algorithm '" + name + "'");
}

namespace {

struct WcolRow {
  std::string graph;
  int n, m;
  std::string group;
  std::string algorithm;
  int radius;
  bool timeout = false;
  int wcol = 0;
  long long elapsed_ms = 0;
  std::uint64_t seed = 0;
};

std::map<std::pair<std::string, int>, int> load_baseline(const std::string& path) {
  std::map<std::pair<std::string, int>, int> best;
  if (path.empty()) return best;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open baseline file " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string graph, radius_s, wcol_s;
    if (!std::getline(ls, graph, ',') || !std::getline(ls, radius_s, ',') ||
        !std::getline(ls, wcol_s, ','))
      continue;
    try {
      int radius = std::stoi(radius_s);
      int wcol = std::stoi(wcol_s);
      auto key = std::make_pair(graph, radius);
      auto it = best.find(key);
      if (it == best.end() || wcol < it->second) best[key] = wcol;
    } catch (...) {
      continue;  // header or malformed line
    }
  }
  return best;
}

}  // namespace

WcolBenchOutput run_wcol_bench(const std::vector<GraphEntry>& graphs,
                               const WcolBenchOptions& options) {
  std::vector<std::string> algorithms = expand_wcol_algorithms(options.algorithms);
  auto baseline = load_baseline(options.baseline_path);

  std::vector<WcolRow> rows;
  for (const auto& entry : graphs)
    for (int r : options.radii)
      for (const auto& algorithm : algorithms) {
        WcolRow row;
        row.graph = entry.name;
        row.n = entry.graph.vertex_count();
        row.m = entry.graph.edge_count();
        row.group = group_label(row.m);
        row.algorithm = algorithm;
        row.radius = r;
        row.seed = mix_seed(options.seed,
                            fnv1a(entry.name + "|" + algorithm + "|" + std::to_string(r)));
        rows.push_back(std::move(row));
      }

  std::vector<std::function<void()>> tasks;
  tasks.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    tasks.push_back([&, i] {
      WcolRow& row = rows[i];
      const Graph& g = graphs[i / (options.radii.size() * algorithms.size())].graph;
      auto t0 = std::chrono::steady_clock::now();
      try {
        Deadline deadline =
            Deadline::after(std::chrono::milliseconds(
                static_cast<long long>(options.timeout_seconds * 1000)));
        Order order = run_wcol_algorithm(row.algorithm, g, row.radius, row.seed, deadline);
        if (options.local_search) {
          LsBudget budget;
          budget.seed = row.seed;
          budget.deadline = Deadline::after(std::chrono::milliseconds(
              static_cast<long long>(options.ls_timeout_seconds * 1000)));
          order = local_search(g, order, row.radius, budget);
        }
        row.wcol = wcol_of_order(g, order, row.radius, deadline);
      } catch (const Timeout&) {
        row.timeout = true;
      }
      row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      if (options.zero_elapsed) row.elapsed_ms = 0;
    });
  }
  run_tasks(tasks, options.threads, options.timeout_seconds);

  std::ostringstream records;
  records << "graph,n,m,group,algorithm,radius,wcol,elapsed_ms,seed,timeout\n";
  for (const auto& row : rows) {
    records << row.graph << ',' << row.n << ',' << row.m << ',' << row.group << ','
            << row.algorithm << ',' << row.radius << ',';
    if (!row.timeout) records << row.wcol;
    records << ',' << row.elapsed_ms << ',' << row.seed << ',' << (row.timeout ? 1 : 0) << '\n';
  }

  // ratio table: per (graph, radius), each value divided by the row minimum
  std::ostringstream ratio;
  ratio << "graph,radius";
  for (const auto& algorithm : algorithms) ratio << ',' << algorithm;
  ratio << '\n';
  size_t per_graph = options.radii.size() * algorithms.size();
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    for (size_t ri = 0; ri < options.radii.size(); ++ri) {
      const WcolRow* first = &rows[gi * per_graph + ri * algorithms.size()];
      int best = 0;
      for (size_t ai = 0; ai < algorithms.size(); ++ai)
        if (!first[ai].timeout && (best == 0 || first[ai].wcol < best)) best = first[ai].wcol;
      auto it = baseline.find({graphs[gi].name, options.radii[ri]});
      if (it != baseline.end() && (best == 0 || it->second < best)) best = it->second;
      ratio << graphs[gi].name << ',' << options.radii[ri];
      for (size_t ai = 0; ai < algorithms.size(); ++ai) {
        ratio << ',';
        if (!first[ai].timeout && best > 0)
          ratio << format_ratio(static_cast<double>(first[ai].wcol) / best);
      }
      ratio << '\n';
    }
  }
  return {records.str(), ratio.str()};
}

std::string run_uqw_bench(const std::vector<GraphEntry>& graphs, const UqwBenchOptions& options) {
  if (options.start_mode != "full" && options.start_mode != "sample20")
    throw std::invalid_argument("start_mode must be full or sample20");
  std::vector<std::string> algorithms = expand_uqw_algorithms(options.algorithms);

  struct UqwRow {
    std::string graph;
    int n, m;
    std::string group, algorithm;
    int radius;
    bool timeout = false;
    int deleted = 0, independent = 0, score_value = 0;
    long long elapsed_ms = 0;
    std::uint64_t seed = 0;
  };
  std::vector<UqwRow> rows;
  std::vector<std::vector<int>> starts;  // the start set is shared per graph
  for (const auto& entry : graphs) {
    int n = entry.graph.vertex_count();
    std::vector<int> a(n);
    for (int v = 0; v < n; ++v) a[v] = v;
    if (options.start_mode == "sample20") {
      Rng rng(mix_seed(options.seed, fnv1a(entry.name + "|sample20")));
      rng.shuffle(a);
      a.resize(std::max<size_t>(1, n / 5));
      std::sort(a.begin(), a.end());
    }
    starts.push_back(std::move(a));
  }
  for (size_t gi = 0; gi < graphs.size(); ++gi)
    for (int r : options.radii)
      for (const auto& algorithm : algorithms) {
        UqwRow row;
        row.graph = graphs[gi].name;
        row.n = graphs[gi].graph.vertex_count();
        row.m = graphs[gi].graph.edge_count();
        row.group = group_label(row.m);
        row.algorithm = algorithm;
        row.radius = r;
        row.seed = mix_seed(options.seed, fnv1a(graphs[gi].name + "|" + algorithm + "|" +
                                                std::to_string(r) + "|" + options.start_mode));
        rows.push_back(std::move(row));
      }

  size_t per_graph = options.radii.size() * algorithms.size();
  std::vector<std::function<void()>> tasks;
  for (size_t i = 0; i < rows.size(); ++i) {
    tasks.push_back([&, i] {
      UqwRow& row = rows[i];
      size_t gi = i / per_graph;
      const Graph& g = graphs[gi].graph;
      auto t0 = std::chrono::steady_clock::now();
      try {
        Deadline deadline = Deadline::after(std::chrono::milliseconds(
            static_cast<long long>(options.timeout_seconds * 1000)));
        UqwResult res = run_uqw_algorithm(row.algorithm, g, starts[gi], row.radius, row.seed,
                                          deadline);
        if (!verify_uqw(g, res))
          throw std::logic_error(row.algorithm + " produced an invalid result on " + row.graph);
        row.deleted = static_cast<int>(res.deleted.size());
        row.independent = static_cast<int>(res.independent.size());
        row.score_value = profile_score(g, res.deleted, res.independent, res.radius);
      } catch (const Timeout&) {
        row.timeout = true;
      }
      row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      if (options.zero_elapsed) row.elapsed_ms = 0;
    });
  }
  run_tasks(tasks, options.threads, options.timeout_seconds);

  std::ostringstream out;
  out << "graph,n,m,group,algorithm,radius,start_mode,deleted,independent,score,elapsed_ms,seed,"
         "timeout\n";
  for (const auto& row : rows) {
    out << row.graph << ',' << row.n << ',' << row.m << ',' << row.group << ',' << row.algorithm
        << ',' << row.radius << ',' << options.start_mode << ',';
    if (!row.timeout)
      out << row.deleted << ',' << row.independent << ',' << row.score_value;
    else
      out << ",,";
    out << ',' << row.elapsed_ms << ',' << row.seed << ',' << (row.timeout ? 1 : 0) << '\n';
  }
  // aggregate per (algorithm, radius) over finished runs
  for (int r : options.radii)
    for (const auto& algorithm : algorithms) {
      long long deleted = 0, independent = 0, score_sum = 0, elapsed = 0;
      for (const auto& row : rows) {
        if (row.algorithm != algorithm || row.radius != r || row.timeout) continue;
        deleted += row.deleted;
        independent += row.independent;
        score_sum += row.score_value;
        elapsed += row.elapsed_ms;
      }
      out << "_total,,,," << algorithm << ',' << r << ',' << options.start_mode << ',' << deleted
          << ',' << independent << ',' << score_sum << ',' << elapsed << ",,0\n";
    }
  return out.str();
}

std::string flat_variant_table(const std::vector<GraphEntry>& graphs, int radius,
                               double timeout_seconds, std::uint64_t seed, int threads,
                               bool zero_elapsed) {
  WcolBenchOptions options;
  options.algorithms = {"flat_all"};
  options.radii = {radius};
  options.timeout_seconds = timeout_seconds;
  options.seed = seed;
  options.threads = threads;
  options.zero_elapsed = zero_elapsed;
  WcolBenchOutput run = run_wcol_bench(graphs, options);

  // mean ratio per variant over the rows where the variant finished
  std::istringstream in(run.ratio_csv);
  std::string header;
  std::getline(in, header);
  std::vector<std::string> columns;
  {
    std::istringstream hs(header);
    std::string col;
    while (std::getline(hs, col, ',')) columns.push_back(col);
  }
  std::vector<double> sum(columns.size(), 0.0);
  std::vector<int> count(columns.size(), 0);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    for (size_t ci = 0; std::getline(ls, cell, ','); ++ci) {
      if (ci < 2 || cell.empty()) continue;
      sum[ci] += std::stod(cell);
      ++count[ci];
    }
  }
  std::ostringstream out;
  out << "variant,mean_ratio,runs\n";
  for (size_t ci = 2; ci < columns.size(); ++ci) {
    out << columns[ci] << ',';
    if (count[ci] > 0) out << format_ratio(sum[ci] / count[ci]);
    out << ',' << count[ci] << '\n';
  }
  return out.str();
}

std::string compute_stats(const std::vector<GraphEntry>& graphs, const std::string& records_csv) {
  if (graphs.size() < 3) throw std::invalid_argument("compute_stats needs at least 3 graphs");

  // best finished wcol per (graph, radius) from the records
  std::map<std::pair<std::string, int>, int> best;
  std::vector<int> radii;
  {
    std::istringstream in(records_csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::vector<std::string> cells;
      std::string cell;
      while (std::getline(ls, cell, ',')) cells.push_back(cell);
      if (cells.size() < 10 || cells[6].empty()) continue;
      int radius = std::stoi(cells[5]);
      int wcol = std::stoi(cells[6]);
      auto key = std::make_pair(cells[0], radius);
      auto it = best.find(key);
      if (it == best.end() || wcol < it->second) best[key] = wcol;
      if (std::find(radii.begin(), radii.end(), radius) == radii.end()) radii.push_back(radius);
    }
  }
  std::sort(radii.begin(), radii.end());

  std::vector<std::string> measure_names = {"n", "m", "avg_degree", "max_degree"};
  for (int r : radii) measure_names.push_back("wcol_" + std::to_string(r));
  std::vector<std::vector<double>> columns(measure_names.size());
  for (const auto& entry : graphs) {
    const Graph& g = entry.graph;
    int n = g.vertex_count();
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    std::vector<double> values = {static_cast<double>(n), static_cast<double>(g.edge_count()),
                                  n > 0 ? 2.0 * g.edge_count() / n : 0.0,
                                  static_cast<double>(maxdeg)};
    for (int r : radii) {
      auto it = best.find({entry.name, r});
      values.push_back(it == best.end() ? 0.0 : static_cast<double>(it->second));
    }
    for (size_t i = 0; i < values.size(); ++i) columns[i].push_back(values[i]);
  }

  // Pearson on log-transformed values over graphs where both entries are
  // positive; NA when degenerate.
  auto correlation = [&](const std::vector<double>& a, const std::vector<double>& b) -> std::string {
    std::vector<double> x, y;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0 && b[i] > 0) {
        x.push_back(std::log(a[i]));
        y.push_back(std::log(b[i]));
      }
    if (x.size() < 3) return "NA";
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      mx += x[i];
      my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double sxx = 0, syy = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      sxx += (x[i] - mx) * (x[i] - mx);
      syy += (y[i] - my) * (y[i] - my);
      sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0 || syy <= 0) return "NA";
    return format_ratio(sxy / std::sqrt(sxx * syy));
  };

  std::ostringstream out;
  out << "measure";
  for (const auto& name : measure_names) out << ',' << name;
  out << '\n';
  for (size_t i = 0; i < measure_names.size(); ++i) {
    out << measure_names[i];
    for (size_t j = 0; j < measure_names.size(); ++j) out << ',' << correlation(columns[i], columns[j]);
    out << '\n';
  }
  return out.str();
}

}  // namespace colnum
