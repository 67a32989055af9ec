#ifndef ITG_CLI_HPP
#define ITG_CLI_HPP

// Command implementations behind the `itg` executable. They read and write
// streams so tests can drive them without a process boundary.

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "itg/core.hpp"

namespace itg::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kUnsupported = 4,
  kCapacity = 5,
};

int exit_code_for(const std::exception& e);

// Compact triples, one "alpha beta slope" per line, then
// "fastest <duration> depart <time>" or "unreachable".
void cmd_profile(std::istream& in, Vertex s, Vertex t, std::ostream& out);

// "<v> <arrival>" or "<v> unreachable" for every vertex.
void cmd_foremost(std::istream& in, Vertex s, Time depart, std::ostream& out);

// Fastest duration over the candidate departures stored in the instance
// metadata: "fastest <duration> depart <time>" or "unreachable".
void cmd_sweep(std::istream& in, std::ostream& out);

// Fewest steps of a temporal s-t path (time-expanded oracle):
// "shortest <steps>" or "unreachable".
void cmd_shortest(std::istream& in, Vertex s, Vertex t, std::ostream& out);

struct GenOptions {
  std::string kind;  // thm1 | thm2 | thm3 | sec5 | random
  std::optional<std::string> graph_text;  // static graph for thm*/sec5
  std::int32_t n = 10;
  double p = 0.3;
  std::int64_t max_weight = 10;
  std::size_t records = 20;
  Time time_max = 30;
  bool delays = false;
  bool directed = false;
  std::uint64_t seed = 1;
};

// Writes an instance in the text format, preceded by a metadata comment.
void cmd_gen(const GenOptions& options, std::ostream& out);

struct BenchRecord {
  std::string label;
  Vertex n = 0;
  std::size_t records = 0;
  std::size_t presences = 0;  // M
  std::int64_t profile_ns = 0;
  std::optional<std::int64_t> oracle_ns;
  std::optional<Time> duration;
};

// Zero-delay undirected random instance used by the benchmark:
// n = max(2, records / 10), times in [0, records - 1].
TemporalGraph bench_instance(std::size_t records, std::uint64_t seed);

BenchRecord run_bench_size(std::size_t records, std::uint64_t seed);

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> rows);

void cmd_bench(std::span<const std::size_t> sizes, std::uint64_t seed,
               std::ostream& out);

}  // namespace itg::cli

#endif  // ITG_CLI_HPP
