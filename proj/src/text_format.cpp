#include "itg/text_format.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace itg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  Int value{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

template <typename Int>
Int expect_int(std::string_view s, std::size_t line, const char* what) {
  const auto v = to_int<Int>(s);
  if (!v) throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(s) + "'");
  return *v;
}

// Reads the next non-blank line that is not a comment; comments are
// collected. Returns false at end of input.
bool next_content_line(std::istream& in, std::size_t& line_no, std::string& line,
                       std::vector<std::string>* comments) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      if (comments) comments->emplace_back(trim(body.substr(1)));
      continue;
    }
    line = std::string(body);
    return true;
  }
  return false;
}

void read_metadata(const std::string& comment, InstanceMetadata& meta) {
  for (const auto tok : tokens(comment)) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) continue;
    const auto key = tok.substr(0, eq);
    const auto value = tok.substr(eq + 1);
    if (key == "s") {
      meta.source = to_int<Vertex>(value);
    } else if (key == "t") {
      meta.target = to_int<Vertex>(value);
    } else if (key == "param") {
      meta.parameter = to_int<std::int64_t>(value);
    } else if (key == "candidates") {
      meta.candidates.clear();
      std::size_t i = 0;
      while (i < value.size()) {
        auto j = value.find(',', i);
        if (j == std::string_view::npos) j = value.size();
        if (const auto c = to_int<Time>(value.substr(i, j - i))) meta.candidates.push_back(*c);
        i = j + 1;
      }
    }
  }
}

}  // namespace

InstanceFile parse_instance(std::istream& in) {
  InstanceFile file;
  std::size_t line_no = 0;
  std::string line;
  if (!next_content_line(in, line_no, line, &file.comments)) {
    throw ParseError(line_no, "missing 'tg' header");
  }
  const auto head = tokens(line);
  if (head.size() != 4 || head[0] != "tg") {
    throw ParseError(line_no, "header must be 'tg <n> <records> <directed|undirected>'");
  }
  const auto n = expect_int<Vertex>(head[1], line_no, "vertex count");
  const auto records = expect_int<std::int64_t>(head[2], line_no, "record count");
  if (records < 0) throw ParseError(line_no, "negative record count");
  bool directed = false;
  if (head[3] == "directed") {
    directed = true;
  } else if (head[3] != "undirected") {
    throw ParseError(line_no, "expected 'directed' or 'undirected'");
  }
  try {
    file.graph = TemporalGraph(n, directed);
  } catch (const InputError& e) {
    throw ParseError(line_no, e.what());
  }

  for (std::int64_t r = 0; r < records; ++r) {
    if (!next_content_line(in, line_no, line, &file.comments)) {
      throw ParseError(line_no, "expected " + std::to_string(records) +
                                    " presences, found " + std::to_string(r));
    }
    const auto f = tokens(line);
    if (f.size() != 5) throw ParseError(line_no, "presence line needs 'u v t1 t2 d'");
    const auto u = expect_int<Vertex>(f[0], line_no, "u");
    const auto v = expect_int<Vertex>(f[1], line_no, "v");
    const auto t1 = expect_int<Time>(f[2], line_no, "t1");
    const auto t2 = expect_int<Time>(f[3], line_no, "t2");
    const auto d = expect_int<Time>(f[4], line_no, "d");
    try {
      file.graph.add_edge(u, v, t1, t2, d);
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (next_content_line(in, line_no, line, &file.comments)) {
    throw ParseError(line_no, "unexpected content after the last presence");
  }
  for (const auto& c : file.comments) read_metadata(c, file.metadata);
  return file;
}

InstanceFile parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const TemporalGraph& g,
                    std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "tg " << g.vertex_count() << ' ' << g.record_count() << ' '
      << (g.directed() ? "directed" : "undirected") << '\n';
  for (const auto& e : g.edges()) {
    out << e.tail << ' ' << e.head << ' ' << e.start << ' ' << e.end << ' '
        << e.delay << '\n';
  }
}

std::string format_metadata(const InstanceMetadata& meta) {
  std::ostringstream out;
  const char* sep = "";
  if (meta.source) { out << "s=" << *meta.source; sep = " "; }
  if (meta.target) { out << sep << "t=" << *meta.target; sep = " "; }
  if (!meta.candidates.empty()) {
    out << sep << "candidates=";
    for (std::size_t i = 0; i < meta.candidates.size(); ++i) {
      out << (i ? "," : "") << meta.candidates[i];
    }
    sep = " ";
  }
  if (meta.parameter) out << sep << "param=" << *meta.parameter;
  return out.str();
}

WeightedGraph parse_static_graph(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  if (!next_content_line(in, line_no, line, nullptr)) {
    throw ParseError(line_no, "missing 'graph' header");
  }
  const auto head = tokens(line);
  if (head.size() != 3 || head[0] != "graph") {
    throw ParseError(line_no, "header must be 'graph <n> <m>'");
  }
  WeightedGraph g;
  g.n = expect_int<std::int32_t>(head[1], line_no, "vertex count");
  const auto m = expect_int<std::int64_t>(head[2], line_no, "edge count");
  if (g.n < 0 || m < 0) throw ParseError(line_no, "negative size");
  for (std::int64_t i = 0; i < m; ++i) {
    if (!next_content_line(in, line_no, line, nullptr)) {
      throw ParseError(line_no, "expected " + std::to_string(m) + " edges");
    }
    const auto f = tokens(line);
    if (f.size() != 2 && f.size() != 3) throw ParseError(line_no, "edge line needs 'u v [w]'");
    const auto u = expect_int<std::int32_t>(f[0], line_no, "u");
    const auto v = expect_int<std::int32_t>(f[1], line_no, "v");
    const auto w = f.size() == 3 ? expect_int<std::int64_t>(f[2], line_no, "w") : 0;
    g.add_edge(u - 1, v - 1, w);
  }
  try {
    validate(g);
  } catch (const InputError& e) {
    throw ParseError(line_no, e.what());
  }
  return g;
}

void write_static_graph(std::ostream& out, const WeightedGraph& g) {
  out << "graph " << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& e : g.edges) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight << '\n';
  }
}

}  // namespace itg
