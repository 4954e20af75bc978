#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "heawood/coloring.hpp"
#include "heawood/embedding.hpp"
#include "heawood/graph.hpp"

// Text formats for graphs, rotation-system embeddings, and color lists.
// All three are line-oriented and canonical: writing a parsed structure
// reproduces the input byte for byte once it is in canonical form, so
// fixtures diff cleanly.
//
//   graph:      header "n e", then e lines "u v" with u < v, sorted.
//   embedding:  n lines, line v = cyclic neighbor order of v; then a line
//               "signs" followed by one "u v" line per negative edge.
//   lists:      n lines, line v = space-separated colors, sorted ascending.

namespace heawood {

// Parse failure with the 1-based line it happened on. `source` is the file
// path, or a caller-chosen tag for in-memory streams.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

Graph parse_graph(std::istream& in, const std::string& source = "<graph>");
std::string format_graph(const Graph& g);

// The rotation lines must list exactly the neighbors of each vertex of g;
// the "signs" section may be absent, meaning every edge is positive.
RotationEmbedding parse_embedding(std::istream& in, const Graph& g,
                                  const std::string& source = "<embedding>");
std::string format_embedding(const RotationEmbedding& emb);

// Reads exactly n lines; an empty line is an empty list. Colors must lie in
// [0, 64). Lists come back normalized (sorted, deduplicated).
ListAssignment parse_lists(std::istream& in, int n,
                           const std::string& source = "<lists>");
std::string format_lists(const ListAssignment& L);

// File wrappers. Missing or unreadable files throw ParseError on line 0.
Graph load_graph(const std::string& path);
RotationEmbedding load_embedding(const std::string& path, const Graph& g);
ListAssignment load_lists(const std::string& path, int n);
void save_text(const std::string& path, const std::string& content);

}  // namespace heawood
