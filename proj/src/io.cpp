#include "heawood/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace heawood {

namespace {

std::string location(const std::string& source, int line) {
  return source + ":" + std::to_string(line) + ": ";
}

// Line reader that keeps a 1-based counter and splits lines into ints.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  // Next line, or nullopt at end of input.
  std::optional<std::string> next() {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  std::vector<long long> ints(const std::string& line) {
    std::istringstream ss(line);
    std::vector<long long> out;
    std::string token;
    while (ss >> token) {
      size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size())
        fail("expected an integer, got \"" + token + "\"");
      out.push_back(value);
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(source_, line_, message);
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  std::string source_;
  int line_ = 0;
};

void require_blank_tail(LineReader& reader) {
  while (auto line = reader.next()) {
    if (!reader.ints(*line).empty())
      reader.fail("unexpected content after the end of the data");
  }
}

int checked_vertex(LineReader& reader, long long v, int n) {
  if (v < 0 || v >= n)
    reader.fail("vertex " + std::to_string(v) + " out of range [0, " +
                std::to_string(n) + ")");
  return static_cast<int>(v);
}

}  // namespace

ParseError::ParseError(const std::string& source, int line,
                       const std::string& message)
    : std::runtime_error(location(source, line) + message),
      source_(source),
      line_(line) {}

Graph parse_graph(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  auto header = reader.next();
  if (!header) reader.fail("missing \"n e\" header");
  auto counts = reader.ints(*header);
  if (counts.size() != 2)
    reader.fail("header must be \"n e\", got " +
                std::to_string(counts.size()) + " numbers");
  long long n = counts[0], e = counts[1];
  if (n < 0 || n > Graph::kMaxVertices)
    reader.fail("vertex count " + std::to_string(n) + " outside [0, " +
                std::to_string(Graph::kMaxVertices) + "]");
  if (e < 0) reader.fail("negative edge count");
  Graph g(static_cast<int>(n));
  for (long long k = 0; k < e; ++k) {
    auto line = reader.next();
    if (!line)
      reader.fail("expected " + std::to_string(e) + " edges, got " +
                  std::to_string(k));
    auto pair = reader.ints(*line);
    if (pair.size() != 2) reader.fail("edge line must be \"u v\"");
    int u = checked_vertex(reader, pair[0], g.vertex_count());
    int v = checked_vertex(reader, pair[1], g.vertex_count());
    if (u == v) reader.fail("self-loop at vertex " + std::to_string(u));
    if (g.has_edge(u, v))
      reader.fail("duplicate edge " + std::to_string(u) + " " +
                  std::to_string(v));
    g.add_edge(u, v);
  }
  require_blank_tail(reader);
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

RotationEmbedding parse_embedding(std::istream& in, const Graph& g,
                                  const std::string& source) {
  LineReader reader(in, source);
  std::vector<std::vector<int>> rotations(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto line = reader.next();
    if (!line)
      reader.fail("expected " + std::to_string(g.vertex_count()) +
                  " rotation lines, got " + std::to_string(v));
    for (long long u : reader.ints(*line))
      rotations[v].push_back(checked_vertex(reader, u, g.vertex_count()));
  }
  std::vector<std::pair<int, int>> negatives;
  if (auto line = reader.next()) {
    if (*line != "signs")
      reader.fail("expected \"signs\" section header, got \"" + *line + "\"");
    while (auto edge_line = reader.next()) {
      auto pair = reader.ints(*edge_line);
      if (pair.empty()) continue;
      if (pair.size() != 2) reader.fail("sign line must be \"u v\"");
      negatives.emplace_back(checked_vertex(reader, pair[0], g.vertex_count()),
                             checked_vertex(reader, pair[1], g.vertex_count()));
    }
  }
  try {
    return RotationEmbedding(g, std::move(rotations), negatives);
  } catch (const std::invalid_argument& err) {
    throw ParseError(source, reader.line(), err.what());
  }
}

std::string format_embedding(const RotationEmbedding& emb) {
  std::ostringstream out;
  for (int v = 0; v < emb.graph().vertex_count(); ++v) {
    const auto& rot = emb.rotation(v);
    for (size_t i = 0; i < rot.size(); ++i) out << (i ? " " : "") << rot[i];
    out << '\n';
  }
  out << "signs\n";
  for (auto [u, v] : emb.negative_edges()) out << u << ' ' << v << '\n';
  return out.str();
}

ListAssignment parse_lists(std::istream& in, int n,
                           const std::string& source) {
  LineReader reader(in, source);
  ListAssignment L;
  L.lists.resize(n);
  for (int v = 0; v < n; ++v) {
    auto line = reader.next();
    if (!line)
      reader.fail("expected " + std::to_string(n) + " list lines, got " +
                  std::to_string(v));
    for (long long c : reader.ints(*line)) {
      if (c < 0 || c >= 64)
        reader.fail("color " + std::to_string(c) + " outside [0, 64)");
      L.lists[v].push_back(static_cast<int>(c));
    }
  }
  require_blank_tail(reader);
  L.normalize(n);
  return L;
}

std::string format_lists(const ListAssignment& L) {
  std::ostringstream out;
  for (const auto& list : L.lists) {
    for (size_t i = 0; i < list.size(); ++i) out << (i ? " " : "") << list[i];
    out << '\n';
  }
  return out.str();
}

namespace {

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

}  // namespace

Graph load_graph(const std::string& path) {
  auto in = open_for_read(path);
  return parse_graph(in, path);
}

RotationEmbedding load_embedding(const std::string& path, const Graph& g) {
  auto in = open_for_read(path);
  return parse_embedding(in, g, path);
}

ListAssignment load_lists(const std::string& path, int n) {
  auto in = open_for_read(path);
  return parse_lists(in, n, path);
}

void save_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, 0, "cannot open file for writing");
  out << content;
  if (!out) throw ParseError(path, 0, "write failed");
}

}  // namespace heawood
