#include "codec.hpp"

#include <sstream>

#include "errors.hpp"

namespace gfree {

namespace {

constexpr int kOffset = 63;  // graph6 bytes live in [63, 126]

void append_group(std::string& out, unsigned value) {
  out.push_back(static_cast<char>(kOffset + (value & 0x3f)));
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    append_group(out, static_cast<unsigned>(n));
  } else if (n <= 258047) {
    out.push_back('~');
    append_group(out, static_cast<unsigned>(n >> 12));
    append_group(out, static_cast<unsigned>(n >> 6));
    append_group(out, static_cast<unsigned>(n));
  } else {
    throw Unsupported("graph too large for the short graph6 header");
  }
  unsigned acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++nbits == 6) {
        append_group(out, acc);
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) append_group(out, acc << (6 - nbits));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  auto need = [&](const char* what) {
    if (pos >= text.size())
      throw ParseError(std::string("graph6 truncated, expected ") + what, pos);
  };
  auto group = [&](const char* what) -> unsigned {
    need(what);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > 126)
      throw ParseError("invalid graph6 byte " + std::to_string(int(c)), pos);
    ++pos;
    return c - kOffset;
  };

  need("header");
  long n;
  if (text[pos] == '~') {
    ++pos;
    need("extended header");
    if (text[pos] == '~')
      throw ParseError("graph6 long-long headers are not supported", pos);
    long a = group("extended header");
    long b = group("extended header");
    long c = group("extended header");
    n = (a << 12) | (b << 6) | c;
    if (n <= 62)
      throw ParseError("extended graph6 header used for a small graph", 1);
  } else {
    n = group("header");
  }

  long bits = n * (n - 1) / 2;
  std::vector<Edge> edges;
  long bit = 0;
  int i = 0, j = 1;
  while (bit < bits) {
    std::size_t at = pos;
    unsigned g6 = group("adjacency data");
    for (int k = 5; k >= 0; --k) {
      if (bit < bits) {
        if ((g6 >> k) & 1u) edges.emplace_back(i, j);
        ++bit;
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if ((g6 >> k) & 1u) {
        throw ParseError("nonzero padding bits in final graph6 byte", at);
      }
    }
  }
  if (pos != text.size())
    throw ParseError("trailing bytes after graph6 data", pos);
  return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> parse_graph6_lines(std::string_view text,
                                      std::vector<std::string>* warnings) {
  std::vector<Graph> out;
  std::size_t start = 0;
  int lineno = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        Graph g = parse_graph6(line);
        out.push_back(g.with_name(std::string(line)));
      } catch (const ParseError& e) {
        if (warnings)
          warnings->push_back("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  long m = -1, seen = 0;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    auto fail = [&](const std::string& msg) {
      throw ParseError("dimacs line " + std::to_string(lineno) + ": " + msg, 0);
    };
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) fail("duplicate problem line");
      std::string kind;
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col"))
        fail("expected 'p edge <n> <m>'");
      if (n < 0 || m < 0) fail("negative size");
      continue;
    }
    if (tag == "e") {
      if (n < 0) fail("edge before problem line");
      int u, v;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || u > n || v > n) fail("endpoint out of range");
      if (u == v) fail("self-loop");
      edges.emplace_back(u - 1, v - 1);
      ++seen;
      continue;
    }
    fail("unknown line type '" + tag + "'");
  }
  if (n < 0) throw ParseError("dimacs input has no problem line", 0);
  if (seen != m)
    throw ParseError("dimacs edge count mismatch: header says " +
                         std::to_string(m) + ", found " + std::to_string(seen),
                     0);
  return Graph(n, edges);
}

}  // namespace gfree
