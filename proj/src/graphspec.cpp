#include "graphspec.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "codec.hpp"
#include "errors.hpp"

namespace gfree {
namespace {

constexpr int kMaxAtomSize = 1024;

struct SpecParser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("graph spec: " + what, pos);
  }

  void skip_spaces() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  bool try_keyword(std::string_view word) {
    if (text.substr(pos, word.size()) != word) return false;
    pos += word.size();
    return true;
  }

  int number(const char* role) {
    int value = 0;
    auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range || value > kMaxAtomSize)
      fail(std::string(role) + " exceeds " + std::to_string(kMaxAtomSize));
    if (ec != std::errc()) fail(std::string("expected ") + role);
    pos = static_cast<size_t>(next - text.data());
    return value;
  }

  Graph graph6_atom() {
    size_t start = pos;
    while (pos < text.size() && static_cast<unsigned char>(text[pos]) >= 63 &&
           static_cast<unsigned char>(text[pos]) <= 126)
      ++pos;
    if (pos == start) fail("empty graph6 payload after g6:");
    try {
      return parse_graph6(text.substr(start, pos - start));
    } catch (const ParseError& e) {
      throw ParseError(e.message, start + e.offset);
    }
  }

  Graph named_atom() {
    size_t start = pos;
    char head = peek();
    ++pos;
    if (head == 'K') {
      int a = number("order after K");
      if (pos < text.size() && peek() == ',') {
        ++pos;
        int b = number("second side of K<a>,<b>");
        return complete_bipartite(a, b);
      }
      if (pos < text.size() && peek() == '-') {
        ++pos;
        if (done() || peek() != 'C') fail("expected C<n> after K<n>-");
        ++pos;
        int b = number("cycle order after K<n>-C");
        if (a != b) fail("K<n>-C<n> needs matching orders");
        if (a < 3) fail("K<n>-C<n> needs n >= 3");
        std::string name = "K" + std::to_string(a) + "-C" + std::to_string(a);
        return cycle_graph(a).complement().with_name(name);
      }
      return complete_graph(a);
    }
    if (head == 'C') return cycle_graph(number("order after C"));
    if (head == 'P') return path_graph(number("order after P"));
    pos = start;
    if (try_keyword("petersen")) return petersen_graph();
    fail("expected an atom (K<n>, C<n>, P<n>, K<a>,<b>, K<n>-C<n>, petersen, g6:...)");
  }

  Graph term() {
    skip_spaces();
    if (done()) fail("expected a graph term");
    if (try_keyword("g6:")) return graph6_atom();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      int copies = number("copy count");
      if (done() || !std::isalpha(static_cast<unsigned char>(peek())))
        fail("copy count needs a graph atom after it");
      return disjoint_copies(copies, named_atom());
    }
    return named_atom();
  }

  Graph parse() {
    Graph result = term();
    for (;;) {
      skip_spaces();
      if (done()) return result;
      char op = peek();
      if (op != '+' && op != '.') fail("expected +, ., or end of spec");
      ++pos;
      Graph rhs = term();
      result = op == '+' ? Graph::join(result, rhs) : Graph::disjoint_union(result, rhs);
    }
  }
};

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph_spec(std::string_view text) {
  SpecParser parser{text};
  Graph g = parser.parse();
  return g;
}

PatternSpec parse_pattern_spec(std::string_view text, const Graph* self_graph) {
  std::string_view body = trimmed(text);
  if (body == "cycles") return PatternSpec::all_two_regular();
  if (body == "self") {
    if (self_graph == nullptr)
      throw InvalidArgument("pattern 'self' needs a host graph to refer to");
    return PatternSpec::single(self_graph->with_name("self"));
  }
  return PatternSpec::single(parse_graph_spec(text));
}

}  // namespace gfree
