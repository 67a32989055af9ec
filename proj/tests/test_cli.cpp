#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "itg/cli.hpp"
#include "itg/reductions.hpp"
#include "itg/text_format.hpp"

namespace itg {
namespace {

std::string run_profile(const std::string& text, Vertex s, Vertex t) {
  std::istringstream in(text);
  std::ostringstream out;
  cli::cmd_profile(in, s, t, out);
  return out.str();
}

std::string run_foremost(const std::string& text, Vertex s, Time depart) {
  std::istringstream in(text);
  std::ostringstream out;
  cli::cmd_foremost(in, s, depart, out);
  return out.str();
}

std::string run_gen(const cli::GenOptions& opts) {
  std::ostringstream out;
  cli::cmd_gen(opts, out);
  return out.str();
}

TEST(TextFormat, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TemporalGraph g =
        gen_random_temporal(9, 40, 100, seed % 2 == 0, seed, seed % 3 == 0);
    std::ostringstream out;
    write_instance(out, g);
    EXPECT_EQ(parse_instance(out.str()).graph, g);
  }
}

TEST(TextFormat, CommentsAndMetadata) {
  const std::string text =
      "# hello\n"
      "# s=1 t=2 candidates=0,10,20 param=10\n"
      "tg 3 2 undirected\n"
      "\n"
      "1 2 0 5 0\n"
      "# between\n"
      "2 3 1 4 2\n";
  const InstanceFile f = parse_instance(text);
  EXPECT_EQ(f.graph.record_count(), 2u);
  EXPECT_EQ(f.metadata.source, 1);
  EXPECT_EQ(f.metadata.target, 2);
  EXPECT_EQ(f.metadata.candidates, (std::vector<Time>{0, 10, 20}));
  EXPECT_EQ(f.metadata.parameter, 10);
  EXPECT_EQ(f.comments.size(), 3u);
  EXPECT_EQ(format_metadata(f.metadata), "s=1 t=2 candidates=0,10,20 param=10");
}

TEST(TextFormat, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("tg 2 1 sideways\n1 2 0 1 0\n"), 1u);
  EXPECT_EQ(line_of("# c\ntg 2 1 undirected\n1 2 0 x 0\n"), 3u);
  EXPECT_EQ(line_of("tg 2 1 undirected\n1 1 0 1 0\n"), 2u);
  EXPECT_EQ(line_of("tg 2 2 undirected\n1 2 0 1 0\n"), 2u);
  EXPECT_EQ(line_of("tg 2 1 undirected\n1 2 0 1 0\n1 2 0 1 0\n"), 3u);
  EXPECT_THROW(parse_instance(""), ParseError);
  EXPECT_THROW(parse_instance("tg 2 1 undirected\n1 2 5 1 0\n"), ParseError);
}

TEST(TextFormat, StaticGraphRoundTrip) {
  const WeightedGraph g = gen_random_graph(8, 0.4, 2, 5);
  std::ostringstream out;
  write_static_graph(out, g);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_static_graph(in), g);
  std::istringstream dup("graph 3 2\n1 2\n2 1\n");
  EXPECT_THROW(parse_static_graph(dup), ParseError);
}

TEST(CmdProfile, Examples) {
  EXPECT_EQ(run_profile("tg 2 1 undirected\n1 2 0 5 0\n", 1, 2),
            "0 0 0\n5 5 1\nfastest 0 depart 0\n");
  EXPECT_EQ(run_profile("tg 3 1 undirected\n1 3 0 5 0\n", 1, 2), "unreachable\n");
  try {
    run_profile("tg 2 1 undirected\n1 2 0 5 1\n", 1, 2);
    FAIL() << "expected an unsupported-input error";
  } catch (const UnsupportedInputError& e) {
    EXPECT_NE(std::string(e.what()).find("nonzero delay"), std::string::npos);
    EXPECT_EQ(cli::exit_code_for(e), cli::kUnsupported);
  }
}

TEST(CmdForemost, Examples) {
  const std::string text = "tg 2 1 directed\n1 2 3 7 2\n";
  EXPECT_EQ(run_foremost(text, 1, 0), "1 0\n2 5\n");
  EXPECT_EQ(run_foremost(text, 1, 3), "1 3\n2 5\n");
  EXPECT_EQ(run_foremost(text, 1, 8), "1 8\n2 unreachable\n");
}

TEST(CmdGen, RandomIsDeterministic) {
  cli::GenOptions opts;
  opts.kind = "random";
  opts.seed = 7;
  EXPECT_EQ(run_gen(opts), run_gen(opts));
  opts.seed = 8;
  const std::string other = run_gen(opts);
  opts.seed = 7;
  EXPECT_NE(run_gen(opts), other);
}

TEST(CmdGen, TriangleGadgetFromGraphText) {
  cli::GenOptions opts;
  opts.kind = "thm2";
  opts.graph_text = "graph 3 3\n1 2\n2 3\n1 3\n";
  std::istringstream in(run_gen(opts));
  std::ostringstream out;
  cli::cmd_sweep(in, out);
  EXPECT_EQ(out.str().rfind("fastest 4 ", 0), 0u) << out.str();
}

TEST(CmdGen, NegativeTriangleRecordCount) {
  cli::GenOptions opts;
  opts.kind = "thm1";
  opts.graph_text = "graph 4 4\n1 2 -3\n2 3 1\n3 4 2\n1 4 5\n";
  const InstanceFile f = parse_instance(run_gen(opts));
  EXPECT_EQ(f.graph.record_count(), 16u);
  EXPECT_EQ(f.graph.presence_count(), 32u);
  EXPECT_EQ(f.metadata.candidates.size(), 4u);
}

TEST(CmdGen, Errors) {
  cli::GenOptions opts;
  opts.kind = "thm9";
  EXPECT_THROW(run_gen(opts), UsageError);
  opts.kind = "random";
  opts.n = 1;
  EXPECT_THROW(run_gen(opts), UsageError);
  opts.kind = "thm2";
  opts.n = 5;
  opts.p = 1.5;
  EXPECT_THROW(run_gen(opts), UsageError);
}

TEST(CmdShortest, TriangleGadget) {
  cli::GenOptions opts;
  opts.kind = "sec5";
  opts.graph_text = "graph 3 3\n1 2\n2 3\n1 3\n";
  const std::string text = run_gen(opts);
  std::istringstream in(text);
  std::ostringstream out;
  cli::cmd_shortest(in, 1, 2, out);
  EXPECT_EQ(out.str(), "shortest 7\n");
}

TEST(CmdBench, HeaderAndRows) {
  std::ostringstream empty;
  cli::cmd_bench({}, 1, empty);
  EXPECT_EQ(empty.str(), "label,n,records,M,t_profile_ns,t_oracle_ns,duration\n");

  const std::vector<std::size_t> sizes{100, 1000};
  std::ostringstream a;
  std::ostringstream b;
  cli::cmd_bench(sizes, 3, a);
  cli::cmd_bench(sizes, 3, b);
  auto durations = [](const std::string& csv) {
    std::vector<std::string> col;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) col.push_back(line.substr(line.rfind(',') + 1));
    return col;
  };
  EXPECT_EQ(durations(a.str()).size(), 2u);
  EXPECT_EQ(durations(a.str()), durations(b.str()));
  const auto row = cli::run_bench_size(100, 3);
  EXPECT_EQ(row.presences, 2 * row.records);
  EXPECT_EQ(row.n, 10);
  EXPECT_TRUE(row.oracle_ns.has_value());
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(cli::exit_code_for(ParseError(1, "x")), cli::kParse);
  EXPECT_EQ(cli::exit_code_for(UsageError("x")), cli::kUsage);
  EXPECT_EQ(cli::exit_code_for(InputError("x")), cli::kUsage);
  EXPECT_EQ(cli::exit_code_for(UnsupportedInputError("x")), cli::kUnsupported);
  EXPECT_EQ(cli::exit_code_for(CapacityError("x")), cli::kCapacity);
  EXPECT_EQ(cli::exit_code_for(std::runtime_error("x")), cli::kFailure);
}

}  // namespace
}  // namespace itg
