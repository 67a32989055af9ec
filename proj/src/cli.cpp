#include "itg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

#include "itg/oracle.hpp"
#include "itg/profile.hpp"
#include "itg/reductions.hpp"
#include "itg/routing.hpp"
#include "itg/text_format.hpp"

namespace itg::cli {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParse;
  if (dynamic_cast<const UnsupportedInputError*>(&e)) return kUnsupported;
  if (dynamic_cast<const CapacityError*>(&e)) return kCapacity;
  if (dynamic_cast<const UsageError*>(&e)) return kUsage;
  if (dynamic_cast<const InputError*>(&e)) return kUsage;
  return kFailure;
}

namespace {

void print_fastest(std::ostream& out, const std::optional<Fastest>& best) {
  if (best) {
    out << "fastest " << best->duration << " depart " << best->depart << '\n';
  } else {
    out << "unreachable\n";
  }
}

}  // namespace

void cmd_profile(std::istream& in, Vertex s, Vertex t, std::ostream& out) {
  const auto file = parse_instance(in);
  const Profile pr = profile_st(file.graph, s, t);
  if (pr.kind == ProfileKind::kIdentity) {
    throw UsageError("source equals target: the profile is the identity");
  }
  for (const auto& x : pr.triples) {
    out << x.alpha << ' ' << x.beta << ' ' << x.slope << '\n';
  }
  print_fastest(out, fastest_from_profile(pr));
}

void cmd_foremost(std::istream& in, Vertex s, Time depart, std::ostream& out) {
  const auto file = parse_instance(in);
  const ArrivalTree tree = earliest_arrival(file.graph, s, depart);
  for (Vertex v = 1; v <= file.graph.vertex_count(); ++v) {
    out << v << ' ';
    if (const auto a = tree.arrival_at(v)) {
      out << *a << '\n';
    } else {
      out << "unreachable\n";
    }
  }
}

void cmd_sweep(std::istream& in, std::ostream& out) {
  const auto file = parse_instance(in);
  const auto& meta = file.metadata;
  if (!meta.source || !meta.target) {
    throw UsageError("instance has no '# s=.. t=..' metadata");
  }
  if (meta.candidates.empty()) {
    out << "unreachable\n";
    return;
  }
  print_fastest(out, fastest_by_departure_sweep(file.graph, *meta.source,
                                                *meta.target, meta.candidates));
}

void cmd_shortest(std::istream& in, Vertex s, Vertex t, std::ostream& out) {
  const auto file = parse_instance(in);
  const auto result = oracle_time_expanded(file.graph, s, t);
  if (result.shortest) {
    out << "shortest " << *result.shortest << '\n';
  } else {
    out << "unreachable\n";
  }
}

void cmd_gen(const GenOptions& options, std::ostream& out) {
  std::vector<std::string> comments;
  if (options.kind == "random") {
    if (options.n < 2) throw UsageError("random instances need --n >= 2");
    const TemporalGraph g =
        gen_random_temporal(options.n, options.records, options.time_max,
                            !options.delays, options.seed, options.directed);
    comments.push_back("kind=random seed=" + std::to_string(options.seed));
    write_instance(out, g, comments);
    return;
  }

  WeightedGraph base;
  if (options.graph_text) {
    std::istringstream in(*options.graph_text);
    base = parse_static_graph(in);
  } else {
    if (options.n < 0) throw UsageError("--n must be non-negative");
    if (options.p < 0.0 || options.p > 1.0) throw UsageError("--p must lie in [0, 1]");
    base = gen_random_graph(options.n, options.p, options.seed,
                            options.kind == "thm1" ? options.max_weight : 0);
  }

  ReductionInstance inst;
  if (options.kind == "thm1") {
    inst = gen_negative_triangle_instance(base);
  } else if (options.kind == "thm2") {
    inst = gen_triangle_delay_one(base);
  } else if (options.kind == "thm3") {
    inst = gen_triangle_directed_zero(base);
  } else if (options.kind == "sec5") {
    inst = gen_shortest_instance(base);
  } else {
    throw UsageError("unknown generator kind '" + options.kind +
                     "' (thm1|thm2|thm3|sec5|random)");
  }
  InstanceMetadata meta;
  meta.source = inst.source;
  meta.target = inst.target;
  meta.candidates = inst.candidates;
  meta.parameter = inst.parameter;
  comments.push_back("kind=" + options.kind + " base_n=" + std::to_string(base.n) +
                     " base_m=" + std::to_string(base.edges.size()));
  comments.push_back(format_metadata(meta));
  write_instance(out, inst.graph, comments);
}

TemporalGraph bench_instance(std::size_t records, std::uint64_t seed) {
  const auto n = static_cast<Vertex>(std::max<std::size_t>(2, records / 10));
  const Time time_max = static_cast<Time>(std::max<std::size_t>(records, 1) - 1);
  return gen_random_temporal(n, records, time_max, true, seed);
}

BenchRecord run_bench_size(std::size_t records, std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  const TemporalGraph g = bench_instance(records, seed);
  BenchRecord row;
  row.label = "random-" + std::to_string(records);
  row.n = g.vertex_count();
  row.records = g.record_count();
  row.presences = g.presence_count();

  const auto t0 = Clock::now();
  const Profile pr = profile_st(g, 1, 2);
  const auto t1 = Clock::now();
  row.profile_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  if (const auto best = fastest_from_profile(pr)) row.duration = best->duration;

  try {
    const auto t2 = Clock::now();
    (void)oracle_time_expanded(g, 1, 2);
    const auto t3 = Clock::now();
    row.oracle_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t3 - t2).count();
  } catch (const CapacityError&) {
    // horizon too large for the oracle; leave the column empty
  }
  return row;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> rows) {
  out << "label,n,records,M,t_profile_ns,t_oracle_ns,duration\n";
  for (const auto& r : rows) {
    out << r.label << ',' << r.n << ',' << r.records << ',' << r.presences << ','
        << r.profile_ns << ',';
    if (r.oracle_ns) out << *r.oracle_ns;
    out << ',';
    if (r.duration) {
      out << *r.duration;
    } else {
      out << "unreachable";
    }
    out << '\n';
  }
}

void cmd_bench(std::span<const std::size_t> sizes, std::uint64_t seed,
               std::ostream& out) {
  std::vector<BenchRecord> rows;
  rows.reserve(sizes.size());
  for (const std::size_t size : sizes) rows.push_back(run_bench_size(size, seed));
  write_bench_csv(out, rows);
}

}  // namespace itg::cli
