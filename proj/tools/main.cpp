// Command-line front end: wcol / uqw benchmarks, lower-bound instance
// generation, order and result verification, correlation statistics.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "colnum/bench.hpp"
#include "colnum/dtf.hpp"
#include "colnum/local_search.hpp"
#include "colnum/lower_bound.hpp"
#include "colnum/reach.hpp"
#include "colnum/uqw.hpp"

namespace {

std::vector<int> parse_radii(const std::string& spec) {
  std::vector<int> out;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(std::stoi(token));
  if (out.empty()) throw CLI::ValidationError("--radius", "empty radius list");
  return out;
}

std::vector<std::string> parse_list(const std::string& spec) {
  std::vector<std::string> out;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(token);
  return out;
}

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak coloring number and uniform quasi-wideness toolbox"};
  app.require_subcommand(1);

  // ---- wcol ----
  auto* wcol = app.add_subcommand("wcol", "benchmark ordering algorithms");
  std::string input, output, baseline, radius_spec = "1,2,3,4,5", algorithms_spec = "all";
  std::string flat_table_path;
  double timeout = 300, ls_timeout = 60;
  bool use_ls = false, no_timings = false;
  std::uint64_t seed = 0;
  int threads = 1;
  wcol->add_option("--input", input, "edge-list file or directory")->required();
  wcol->add_option("--radius", radius_spec, "comma-separated radii");
  wcol->add_option("--algorithms", algorithms_spec, "comma-separated algorithm names");
  wcol->add_option("--timeout", timeout, "seconds per (graph, algorithm, radius)");
  wcol->add_option("--ls-timeout", ls_timeout, "seconds for the local search pass");
  wcol->add_flag("--local-search", use_ls, "post-process every order by local search");
  wcol->add_option("--seed", seed, "global seed");
  wcol->add_option("--threads", threads, "parallel tasks");
  wcol->add_option("--output", output, "records CSV path (ratio table goes to <output>.ratio.csv)");
  wcol->add_option("--baseline", baseline, "prior bests CSV graph,radius,wcol");
  wcol->add_flag("--no-timings", no_timings, "write 0 in the elapsed column (reproducible output)");
  wcol->add_option("--flat-table", flat_table_path,
                   "also emit the 18-variant flat comparison to this path (first radius)");

  // ---- uqw ----
  auto* uqw = app.add_subcommand("uqw", "benchmark uniform quasi-wideness algorithms");
  std::string u_input, u_output, u_radius = "2,3,4,5", u_algorithms = "all", start_mode = "full";
  double u_timeout = 600;
  bool u_no_timings = false;
  std::uint64_t u_seed = 0;
  int u_threads = 1;
  uqw->add_option("--input", u_input, "edge-list file or directory")->required();
  uqw->add_option("--radius", u_radius, "comma-separated radii");
  uqw->add_option("--algorithms", u_algorithms, "comma-separated algorithm names");
  uqw->add_option("--start-mode", start_mode, "full or sample20");
  uqw->add_option("--timeout", u_timeout, "seconds per task");
  uqw->add_option("--seed", u_seed, "global seed");
  uqw->add_option("--threads", u_threads, "parallel tasks");
  uqw->add_option("--output", u_output, "CSV path");
  uqw->add_flag("--no-timings", u_no_timings, "write 0 in the elapsed column");

  // ---- gen-lb ----
  auto* genlb = app.add_subcommand("gen-lb", "generate an adversarial lower-bound instance");
  int k = 1, r = 1, mprime = 3, truncate_depth = -1;
  std::string lb_output;
  genlb->add_option("--k", k, "treewidth parameter")->required();
  genlb->add_option("--r", r, "radius parameter")->required();
  genlb->add_option("--mprime", mprime, "branching parameter, must exceed binomial(k+r, r)")
      ->required();
  genlb->add_option("--truncate-depth", truncate_depth, "cap the tree depth (testing scale)");
  genlb->add_option("--output", lb_output,
                    "path prefix; writes <prefix>.edges and <prefix>.tree (stdout otherwise)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "evaluate an order or check a uqw result");
  std::string v_input, order_path, uqw_path, dump_dtf_path, v_radius = "1,2,3,4,5";
  int dtf_radius = 0;
  verify->add_option("--input", v_input, "edge-list file")->required();
  verify->add_option("--order", order_path, "order file, one label per line");
  verify->add_option("--uqw-result", uqw_path, "uqw result file (S:/B: lines)");
  verify->add_option("--radius", v_radius, "comma-separated radii");
  verify->add_option("--dtf-radius", dtf_radius, "augment up to this radius and dump arcs");
  verify->add_option("--dump-dtf", dump_dtf_path, "arc dump path, 'u v w' per line");

  // ---- stats ----
  auto* stats = app.add_subcommand("stats", "correlation table from a records CSV");
  std::string s_input, s_records, s_output;
  stats->add_option("--input", s_input, "graph directory matching the records")->required();
  stats->add_option("--records", s_records, "records CSV from the wcol subcommand")->required();
  stats->add_option("--output", s_output, "correlation CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*wcol) {
      auto graphs = colnum::load_graph_set(input);
      colnum::WcolBenchOptions options;
      options.algorithms = parse_list(algorithms_spec);
      options.radii = parse_radii(radius_spec);
      options.timeout_seconds = timeout;
      options.ls_timeout_seconds = ls_timeout;
      options.local_search = use_ls;
      options.seed = seed;
      options.threads = threads;
      options.zero_elapsed = no_timings;
      options.baseline_path = baseline;
      auto result = colnum::run_wcol_bench(graphs, options);
      write_or_print(output, result.records_csv);
      write_or_print(output.empty() ? "" : output + ".ratio.csv", result.ratio_csv);
      if (!flat_table_path.empty()) {
        auto table = colnum::flat_variant_table(graphs, options.radii.front(), timeout, seed,
                                                threads, no_timings);
        write_or_print(flat_table_path, table);
      }
    } else if (*uqw) {
      auto graphs = colnum::load_graph_set(u_input);
      colnum::UqwBenchOptions options;
      options.algorithms = parse_list(u_algorithms);
      options.radii = parse_radii(u_radius);
      options.start_mode = start_mode;
      options.timeout_seconds = u_timeout;
      options.seed = u_seed;
      options.threads = u_threads;
      options.zero_elapsed = u_no_timings;
      write_or_print(u_output, colnum::run_uqw_bench(graphs, options));
    } else if (*genlb) {
      colnum::LbInstance inst = colnum::generate_lb(k, r, mprime, truncate_depth);
      std::cerr << "generated n=" << inst.graph.vertex_count() << " m=" << inst.graph.edge_count()
                << " c=" << inst.c << " depth=" << inst.depth
                << (inst.truncated ? " (truncated)" : "") << '\n';
      if (lb_output.empty()) {
        colnum::write_lb_instance(inst, std::cout, std::cout);
      } else {
        std::ofstream edges(lb_output + ".edges"), tree(lb_output + ".tree");
        if (!edges || !tree) throw std::runtime_error("cannot write " + lb_output + ".*");
        colnum::write_lb_instance(inst, edges, tree);
      }
    } else if (*verify) {
      colnum::Graph g = colnum::load_edge_list(v_input);
      if (!order_path.empty()) {
        std::ifstream in(order_path);
        if (!in) throw std::runtime_error("cannot open " + order_path);
        colnum::Order order = colnum::read_order(g, in);
        std::cout << "order valid: n=" << g.vertex_count() << '\n';
        for (int rad : parse_radii(v_radius))
          std::cout << "wcol_" << rad << " = " << colnum::wcol_of_order(g, order, rad)
                    << "  col_" << rad << " = " << colnum::col_of_order(g, order, rad) << '\n';
      }
      if (!uqw_path.empty()) {
        std::ifstream in(uqw_path);
        if (!in) throw std::runtime_error("cannot open " + uqw_path);
        int rad = parse_radii(v_radius).front();
        colnum::UqwResult res = colnum::read_uqw_result(g, in, rad);
        bool ok = colnum::verify_uqw(g, res);
        std::cout << "uqw valid: " << (ok ? "yes" : "no") << '\n';
        if (ok) std::cout << "score = " << colnum::score(g, res) << '\n';
      }
      if (dtf_radius > 0) {
        colnum::DtfGraph dtf = colnum::dtf_augment(g, dtf_radius);
        std::cout << "dtf arcs = " << dtf.arc_count()
                  << "  max out-degree = " << dtf.max_out_degree() << '\n';
        if (!dump_dtf_path.empty()) {
          std::ofstream out(dump_dtf_path);
          if (!out) throw std::runtime_error("cannot write " + dump_dtf_path);
          dtf.write_arcs(out);
        }
      }
    } else if (*stats) {
      auto graphs = colnum::load_graph_set(s_input);
      std::ifstream in(s_records);
      if (!in) throw std::runtime_error("cannot open " + s_records);
      std::stringstream buffer;
      buffer << in.rdbuf();
      write_or_print(s_output, colnum::compute_stats(graphs, buffer.str()));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
