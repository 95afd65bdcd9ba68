// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values come from brute-force oracles or pinned constants.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include "colnum/bench.hpp"
#include "colnum/dtf.hpp"
#include "colnum/greedy_orders.hpp"
#include "colnum/local_search.hpp"
#include "colnum/lower_bound.hpp"
#include "colnum/reach.hpp"
#include "colnum/simple_orders.hpp"
#include "colnum/uqw.hpp"
#include "colnum/uqw_wcol.hpp"
#include "oracles.hpp"

using namespace colnum;
namespace ct = colnum::testing;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& text, const std::string& detail) {
  std::printf("criterion %2d: %s  %s (%s)\n", id, pass ? "PASS" : "FAIL", text.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<int> all_vertices(const Graph& g) {
  std::vector<int> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = v;
  return out;
}

std::vector<std::string> every_ordering_algorithm() {
  auto algs = expand_wcol_algorithms({"all", "flat_all"});
  std::sort(algs.begin(), algs.end());
  algs.erase(std::unique(algs.begin(), algs.end()), algs.end());
  return algs;
}

// The seeded instance pool shared by criteria 1 and 2.
struct SmallInstance {
  Graph graph;
  std::uint64_t seed;
};

std::vector<SmallInstance> small_pool(int count) {
  std::vector<SmallInstance> out;
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = 1000 + i;
    int n = 3 + static_cast<int>(seed % 5);  // 3..7
    int extra = static_cast<int>((seed / 5) % (n));
    out.push_back({ct::random_connected_graph(n, extra, seed), seed});
  }
  return out;
}

void criterion_1_and_2() {
  auto t0 = std::chrono::steady_clock::now();
  auto algorithms = every_ordering_algorithm();
  auto pool = small_pool(200);

  bool never_below_exact = true;
  bool degeneracy_identity = true;
  int attained = 0, instances = 0;
  for (const auto& inst : pool) {
    const Graph& g = inst.graph;
    auto [dorder, d] = degeneracy_order(g);
    if (wcol_of_order(g, dorder, 1) != d + 1) degeneracy_identity = false;
    for (int r = 1; r <= 3; ++r) {
      ++instances;
      int exact = exact_wcol(g, r).first;
      bool hit = false;
      for (const auto& name : algorithms) {
        Order order = run_wcol_algorithm(name, g, r, inst.seed);
        int value = wcol_of_order(g, order, r);
        if (value < exact) never_below_exact = false;
        if (!hit) {
          LsBudget budget;
          budget.seed = inst.seed;
          budget.max_no_improve = 40;
          budget.max_iterations = 800;
          Order improved = local_search(g, order, r, budget);
          if (wcol_of_order(g, improved, r) == exact) hit = true;
        }
      }
      if (hit) ++attained;
    }
  }
  double elapsed = seconds_since(t0);
  double rate = 100.0 * attained / instances;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%d instances, exact attained with local search on %.1f%%, %.1fs", instances,
                rate, elapsed);
  report(1, never_below_exact && rate >= 60.0 && elapsed < 300.0,
         "no heuristic beats the exact optimum; >=60% attainment after local search", detail);

  // degeneracy identity also across the bundled corpus
  for (const auto& entry : ct::corpus()) {
    auto [order, d] = degeneracy_order(entry.graph);
    if (wcol_of_order(entry.graph, order, 1) != d + 1) degeneracy_identity = false;
  }
  report(2, degeneracy_identity, "degeneracy order evaluates to degeneracy+1 at radius 1",
         std::to_string(pool.size()) + " random + " + std::to_string(ct::corpus().size()) +
             " bundled graphs");
}

void criterion_3_dtf() {
  auto t0 = std::chrono::steady_clock::now();
  int runs = 0;
  bool ok = true;
  for (const auto& entry : ct::corpus()) {
    for (int r = 1; r <= 5; ++r) {
      DtfGraph dtf = dtf_augment(entry.graph, r);
      auto [order, c] = degeneracy_order(dtf.underlying());
      int bound = (dtf.max_out_degree() + 1) * c + 1;
      if (wcol_of_order(entry.graph, order, r) > bound) ok = false;
      ++runs;
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "%d runs, %.1fs", runs, seconds_since(t0));
  report(3, ok, "augmentation orders respect (max out-degree + 1) * c + 1", detail);
}

void criterion_4_monotonicity() {
  auto t0 = std::chrono::steady_clock::now();
  auto algorithms = expand_wcol_algorithms({"all"});
  bool ok = true;
  int orders = 0;
  for (const auto& entry : ct::corpus()) {
    for (const auto& name : algorithms) {
      for (int r = 1; r <= 5; ++r) {
        Order order = run_wcol_algorithm(name, entry.graph, r, 99);
        ++orders;
        int prev = 0;
        for (int rr = 1; rr <= 5; ++rr) {
          int w = wcol_of_order(entry.graph, order, rr);
          if (w < prev) ok = false;
          prev = w;
          if (col_of_order(entry.graph, order, rr) > w) ok = false;
        }
      }
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "%d orders, %.1fs", orders, seconds_since(t0));
  report(4, ok, "wcol non-decreasing in r per order; col never exceeds wcol", detail);
}

void criterion_5_local_search() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int trials = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    int n = 6 + static_cast<int>(seed % 9);
    Graph g = ct::random_graph(n, n + static_cast<int>(seed % (2 * n)), seed * 7 + 1);
    Rng rng(seed);
    std::vector<int> seq(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) seq[i] = i;
    rng.shuffle(seq);
    Order start(seq);
    int r = 1 + static_cast<int>(seed % 3);
    LsBudget budget;
    budget.seed = seed;
    budget.max_no_improve = 25;
    budget.max_iterations = 300;
    Order out = local_search(g, start, r, budget);
    ++trials;
    if (!out.valid() || wcol_of_order(g, out, r) > wcol_of_order(g, start, r)) ok = false;
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "%d trials, %.1fs", trials, seconds_since(t0));
  report(5, ok, "local search never worsens the objective", detail);
}

void criterion_6_uqw_validity() {
  auto t0 = std::chrono::steady_clock::now();
  bool valid = true, mfcs_bound = true, tgv_bound = true;
  int runs = 0;

  auto check_graph = [&](const Graph& g, const std::vector<int>& a, int r, bool include_new_ld) {
    // the plain heuristics
    for (const char* name : {"ld", "tree1", "tree2", "ld_it"}) {
      UqwResult res = run_uqw_algorithm(name, g, a, r, 5);
      ++runs;
      if (!verify_uqw(g, res)) valid = false;
    }
    // wcol-based ones share one order
    Order order = local_search(g, order_greedy_sreach(g, r), r,
                               LsBudget{200, 5LL * g.vertex_count(), 5, {}});
    int c = wreach_sets(g, order, r).max_size;
    UqwResult mf = uqw_mfcs(g, a, r, order);
    ++runs;
    if (!verify_uqw(g, mf)) valid = false;
    if (static_cast<int>(mf.deleted.size()) > c * (c - 1)) mfcs_bound = false;
    std::vector<TgvVariant> variants{TgvVariant::New1, TgvVariant::New2};
    if (include_new_ld) variants.push_back(TgvVariant::NewLd);
    for (auto variant : variants) {
      TgvDiagnostics diag;
      UqwResult res = uqw_tgv(g, a, r, order, variant, 9, &diag);
      ++runs;
      if (!verify_uqw(g, res)) valid = false;
      if (diag.max_deletions_pre_rollback > c) tgv_bound = false;
    }
  };

  for (const auto& entry : ct::corpus())
    for (int r : {2, 3})
      check_graph(entry.graph, all_vertices(entry.graph), r, entry.graph.vertex_count() <= 50);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = ct::random_graph(24, 30 + static_cast<int>(seed), seed);
    for (int r = 1; r <= 5; ++r) check_graph(g, all_vertices(g), r, true);
  }

  char detail[128];
  std::snprintf(detail, sizeof(detail), "%d runs, %.1fs", runs, seconds_since(t0));
  report(6, valid && mfcs_bound && tgv_bound,
         "uqw outputs verify; |S| <= c(c-1) for mfcs and |S| <= c pre-rollback", detail);
}

void criterion_7_uqw_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  bool never_above_oracle = true, families_exact = true;
  int compared = 0;

  auto heuristics_of = [&](const Graph& g, const std::vector<int>& a, int r) {
    std::vector<UqwResult> out;
    for (const char* name : {"ld", "tree1", "tree2", "ld_it", "mfcs", "new1", "new2", "new_ld"})
      out.push_back(run_uqw_algorithm(name, g, a, r, 3));
    return out;
  };

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 5 + static_cast<int>(seed % 6);
    Graph g = ct::random_graph(n, n + static_cast<int>(seed % n), seed + 70);
    for (int r = 1; r <= 3; ++r) {
      for (const auto& res : heuristics_of(g, all_vertices(g), r)) {
        if (!verify_uqw(g, res)) never_above_oracle = false;
        if (res.deleted.size() <= 2) {
          int oracle = ct::uqw_oracle_best_score(g, all_vertices(g), r,
                                                 static_cast<int>(res.deleted.size()));
          int sc = profile_score(g, res.deleted, res.independent, r);
          ++compared;
          if (sc > oracle) never_above_oracle = false;
        }
      }
    }
  }

  // ld is exactly optimal on stars and double stars at matching |S|
  std::vector<Graph> families;
  for (int m : {3, 5, 7, 9}) families.push_back(ct::star_graph(m));
  families.push_back(ct::double_star(2, 2));
  families.push_back(ct::double_star(3, 3));
  families.push_back(ct::double_star(2, 4));
  families.push_back(ct::double_star(4, 4));
  for (const auto& g : families) {
    for (int r = 1; r <= 3; ++r) {
      UqwResult res = uqw_ld(g, all_vertices(g), r, 20);
      if (!verify_uqw(g, res)) families_exact = false;
      if (res.deleted.size() > 2) continue;
      int oracle =
          ct::uqw_oracle_best_score(g, all_vertices(g), r, static_cast<int>(res.deleted.size()));
      if (profile_score(g, res.deleted, res.independent, r) != oracle) families_exact = false;
      ++compared;
    }
  }

  double elapsed = seconds_since(t0);
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%d oracle comparisons, %.1fs", compared, elapsed);
  report(7, never_above_oracle && families_exact && elapsed < 600.0,
         "exhaustive |S|<=2 oracle dominates every heuristic; ld exact on star families",
         detail);
}

void criterion_8_lower_bound() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream note;

  // invalid parameter combination must be refused
  try {
    generate_lb(1, 2, 3);
    ok = false;
    note << "mprime<=c accepted; ";
  } catch (const std::invalid_argument&) {
  }

  struct Combo {
    int r, mprime;
  };
  for (Combo combo : std::initializer_list<Combo>{{1, 3}, {1, 4}, {2, 4}}) {
    LbInstance full = generate_lb(1, combo.r, combo.mprime);
    LbReport frep = check_lb_properties(full, 0);
    if (!(frep.closure_ok && frep.shape_ok && frep.size_checked && frep.size_ok)) {
      ok = false;
      note << "full r=" << combo.r << " m'=" << combo.mprime << " invariants; ";
    }
    // the reach claim and the (Z, B) bound live on the depth-r truncation
    LbInstance trunc = generate_lb(1, combo.r, combo.mprime, combo.r);
    LbReport trep = check_lb_properties(trunc, 60);
    if (!(trep.closure_ok && trep.shape_ok && trep.path_reach_ok && trep.subtree_diameter_ok)) {
      ok = false;
      note << "truncated r=" << combo.r << " m'=" << combo.mprime << " claims; ";
    }
    if (!(trep.zb_checked && trep.zb_bound_ok)) {
      ok = false;
      note << "zb bound r=" << combo.r << " m'=" << combo.mprime << "; ";
    }
    if (trep.wcol_checked && !trep.wcol_ok) {
      ok = false;
      note << "wcol r=" << combo.r << " m'=" << combo.mprime << "; ";
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail), "%s%.1fs", note.str().c_str(), seconds_since(t0));
  report(8, ok, "lower-bound instances satisfy closure, shape, size, reach and |B|<=|Z|m'+1",
         detail);
}

void criterion_9_determinism() {
  auto t0 = std::chrono::steady_clock::now();
  WcolBenchOptions options;
  options.algorithms = {"deg", "degeneracy", "random", "wreach", "sreach", "flat:2:sort:0", "dtf"};
  options.radii = {1, 2};
  options.seed = 12;
  options.zero_elapsed = true;
  WcolBenchOutput run1 = run_wcol_bench(ct::corpus(), options);
  WcolBenchOutput run2 = run_wcol_bench(ct::corpus(), options);
  bool identical = run1.records_csv == run2.records_csv && run1.ratio_csv == run2.ratio_csv;

  bool ratio_rows_ok = true;
  std::istringstream in(run1.ratio_csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    int col = 0;
    bool has_one = false;
    while (std::getline(ls, cell, ',')) {
      if (col++ < 2 || cell.empty()) continue;
      double v = std::stod(cell);
      if (v < 1.0) ratio_rows_ok = false;
      if (v == 1.0) has_one = true;
    }
    if (!has_one) ratio_rows_ok = false;
  }

  UqwBenchOptions uopt;
  uopt.algorithms = {"ld", "tree1", "tree2", "ld_it", "mfcs"};
  uopt.radii = {2};
  uopt.seed = 12;
  uopt.zero_elapsed = true;
  bool uqw_identical = run_uqw_bench(ct::corpus(), uopt) == run_uqw_bench(ct::corpus(), uopt);

  char detail[96];
  std::snprintf(detail, sizeof(detail), "%zu graphs, %.1fs", ct::corpus().size(),
                seconds_since(t0));
  report(9, identical && uqw_identical && ratio_rows_ok,
         "reruns are byte-identical; every ratio row holds a 1.0", detail);
}

void criterion_10_flat_table() {
  auto t0 = std::chrono::steady_clock::now();
  std::string table = flat_variant_table(ct::corpus(), 2, 120, 12, 1, true);
  int rows = 0;
  double fwd_sum = 0, rev_sum = 0;
  int fwd_n = 0, rev_n = 0;
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream ls(line);
    std::string variant, ratio, runs;
    std::getline(ls, variant, ',');
    std::getline(ls, ratio, ',');
    std::getline(ls, runs, ',');
    if (ratio.empty()) continue;
    if (variant.size() >= 2 && variant[variant.size() - 1] == '1') {
      rev_sum += std::stod(ratio);
      ++rev_n;
    } else {
      fwd_sum += std::stod(ratio);
      ++fwd_n;
    }
  }
  bool ok = rows == 18 && fwd_n == 9 && rev_n == 9;
  char detail[192];
  std::snprintf(detail, sizeof(detail),
                "18 variants emitted; mean ratio %.3f unreversed vs %.3f reversed (reported, "
                "not asserted), %.1fs",
                fwd_n ? fwd_sum / fwd_n : 0.0, rev_n ? rev_sum / rev_n : 0.0, seconds_since(t0));
  report(10, ok, "flat decomposition comparison table covers all 18 variants", detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite: %zu bundled graphs from %s\n", ct::corpus().size(),
              ct::corpus_dir().c_str());
  criterion_1_and_2();
  criterion_3_dtf();
  criterion_4_monotonicity();
  criterion_5_local_search();
  criterion_6_uqw_validity();
  criterion_7_uqw_oracle();
  criterion_8_lower_bound();
  criterion_9_determinism();
  criterion_10_flat_table();
  if (failures) std::printf("%d criteria FAILED\n", failures);
  else std::printf("all criteria passed\n");
  return failures;
}
