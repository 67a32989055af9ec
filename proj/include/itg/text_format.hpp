#ifndef ITG_TEXT_FORMAT_HPP
#define ITG_TEXT_FORMAT_HPP

// Plain-text instance files.
//
//   # comment
//   tg <n> <records> <directed|undirected>
//   <u> <v> <t1> <t2> <d>        one line per presence, vertices 1-based
//
// Generators add a metadata comment "# s=<s> t=<t> candidates=<c1,c2,...>
// param=<p>". Static graphs for the generators use
//
//   graph <n> <m>
//   <u> <v> [<w>]                 one line per edge, vertices 1-based

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "itg/core.hpp"
#include "itg/reductions.hpp"

namespace itg {

struct InstanceMetadata {
  std::optional<Vertex> source;
  std::optional<Vertex> target;
  std::vector<Time> candidates;
  std::optional<std::int64_t> parameter;
};

struct InstanceFile {
  TemporalGraph graph{1, false};
  std::vector<std::string> comments;  // text after '#', trimmed
  InstanceMetadata metadata;          // from "s=.. t=.." comments
};

// Throws ParseError with the offending line number.
InstanceFile parse_instance(std::istream& in);
InstanceFile parse_instance(const std::string& text);

void write_instance(std::ostream& out, const TemporalGraph& g,
                    std::span<const std::string> comments = {});
std::string format_metadata(const InstanceMetadata& meta);

WeightedGraph parse_static_graph(std::istream& in);
void write_static_graph(std::ostream& out, const WeightedGraph& g);

}  // namespace itg

#endif  // ITG_TEXT_FORMAT_HPP
