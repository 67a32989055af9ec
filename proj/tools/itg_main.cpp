// itg: queries, generators and benchmarks for interval temporal graphs.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "itg/cli.hpp"

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw itg::UsageError("cannot open '" + path + "'");
  return in;
}

std::string read_file(const std::string& path) {
  auto in = open_input(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs `body` with the --out file or stdout.
template <typename Body>
void with_output(const std::string& out_path, Body body) {
  if (out_path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw itg::UsageError("cannot write '" + out_path + "'");
  body(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval temporal graph toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  itg::Vertex source = 1;
  itg::Vertex target = 2;
  itg::Time depart = 0;

  auto* profile = app.add_subcommand("profile", "s-t profile and fastest duration (zero-delay undirected)");
  profile->add_option("file", file, "instance file")->required();
  profile->add_option("--source", source, "source vertex")->required();
  profile->add_option("--target", target, "target vertex")->required();

  auto* foremost = app.add_subcommand("foremost", "earliest arrival at every vertex");
  foremost->add_option("file", file, "instance file")->required();
  foremost->add_option("--source", source, "source vertex")->required();
  foremost->add_option("--depart", depart, "earliest departure time")->required();

  auto* sweep = app.add_subcommand("sweep", "fastest duration over the candidate departures of a generated instance");
  sweep->add_option("file", file, "instance file")->required();

  auto* shortest = app.add_subcommand("shortest", "fewest-step temporal path length (exact, small instances)");
  shortest->add_option("file", file, "instance file")->required();
  shortest->add_option("--source", source, "source vertex")->required();
  shortest->add_option("--target", target, "target vertex")->required();

  itg::cli::GenOptions gen_opts;
  std::string graph_path;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", gen_opts.kind, "thm1 | thm2 | thm3 | sec5 | random")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "sec5", "random"}));
  gen->add_option("--graph", graph_path, "static graph file (thm1/thm2/thm3/sec5)");
  gen->add_option("--n", gen_opts.n, "vertex count of the random base graph or instance");
  gen->add_option("--p", gen_opts.p, "edge probability of the random base graph");
  gen->add_option("--max-weight", gen_opts.max_weight, "weight bound for random thm1 graphs");
  gen->add_option("--records", gen_opts.records, "presences (random)");
  gen->add_option("--time-max", gen_opts.time_max, "latest time (random)");
  gen->add_flag("--delays", gen_opts.delays, "random delays in [0, 3] (random)");
  gen->add_flag("--directed", gen_opts.directed, "directed instance (random)");
  gen->add_option("--seed", gen_opts.seed, "random seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  std::vector<std::size_t> sizes;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "time the profile sweep on random instances, CSV output");
  bench->add_option("--sizes", sizes, "record counts")->delimiter(',');
  bench->add_option("--seed", bench_seed, "random seed");
  bench->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : itg::cli::kUsage;
  }

  try {
    if (*profile) {
      auto in = open_input(file);
      itg::cli::cmd_profile(in, source, target, std::cout);
    } else if (*foremost) {
      auto in = open_input(file);
      itg::cli::cmd_foremost(in, source, depart, std::cout);
    } else if (*sweep) {
      auto in = open_input(file);
      itg::cli::cmd_sweep(in, std::cout);
    } else if (*shortest) {
      auto in = open_input(file);
      itg::cli::cmd_shortest(in, source, target, std::cout);
    } else if (*gen) {
      if (!graph_path.empty()) gen_opts.graph_text = read_file(graph_path);
      with_output(out_path, [&](std::ostream& out) { itg::cli::cmd_gen(gen_opts, out); });
    } else if (*bench) {
      with_output(out_path, [&](std::ostream& out) { itg::cli::cmd_bench(sizes, bench_seed, out); });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return itg::cli::exit_code_for(e);
  }
  return 0;
}
