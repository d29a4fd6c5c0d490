#include "indgap/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace indgap {

namespace {

constexpr char kG6Lo = 63;   // '?'
constexpr char kG6Hi = 126;  // '~'
constexpr std::string_view kG6Header = ">>graph6<<";

int g6_value(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6 data truncated", pos);
  char c = s[pos];
  if (c < kG6Lo || c > kG6Hi) throw ParseError("graph6 character out of range", pos);
  return c - kG6Lo;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.substr(0, kG6Header.size()) == kG6Header) pos = kG6Header.size();
  if (pos >= line.size()) throw ParseError("empty graph6 line", pos);

  long long n = 0;
  if (line[pos] != kG6Hi) {
    n = g6_value(line, pos);
    ++pos;
  } else if (pos + 1 < line.size() && line[pos + 1] == kG6Hi) {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | g6_value(line, pos + i);
    pos += 6;
  } else {
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | g6_value(line, pos + i);
    pos += 3;
  }
  if (n > kMaxVertices) throw CapacityError("graph6 order exceeds vertex cap");

  const long long nbits = n * (n - 1) / 2;
  const long long nchars = (nbits + 5) / 6;
  if (static_cast<long long>(line.size() - pos) != nchars) {
    throw ParseError(line.size() - pos < static_cast<std::size_t>(nchars)
                         ? "graph6 data truncated"
                         : "trailing characters after graph6 data",
                     line.size() > pos + nchars ? pos + nchars : line.size());
  }

  std::vector<VertexSet> adj(n, VertexSet(static_cast<int>(n)));
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int word = g6_value(line, pos + bit / 6);
      if ((word >> (5 - bit % 6)) & 1) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  // padding bits must be zero
  for (long long b = nbits; b < nchars * 6; ++b) {
    int word = g6_value(line, pos + b / 6);
    if ((word >> (5 - b % 6)) & 1) throw ParseError("nonzero graph6 padding bit", pos + b / 6);
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kG6Lo + n));
  } else if (n <= 258047) {
    out.push_back(kG6Hi);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(kG6Lo + ((n >> shift) & 63)));
  } else {
    out.push_back(kG6Hi);
    out.push_back(kG6Hi);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(kG6Lo + ((n >> shift) & 63)));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kG6Lo + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(kG6Lo + (acc << (6 - filled))));
  return out;
}

namespace {

bool blank(std::string_view s) {
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

long long parse_int(std::string_view token, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line_no);
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  long long n = -1;
  std::vector<std::pair<int, int>> edges;

  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_no;
    if (!blank(line)) {
      auto tokens = split_ws(line);
      if (n < 0) {
        if (tokens.size() != 1) throw ParseError("header line must contain the vertex count only", line_no);
        n = parse_int(tokens[0], line_no);
        if (n < 0) throw ParseError("vertex count must be nonnegative", line_no);
        if (n > kMaxVertices) throw CapacityError("edge list order exceeds vertex cap");
      } else {
        if (tokens.size() != 2) throw ParseError("edge line must contain exactly two vertices", line_no);
        long long u = parse_int(tokens[0], line_no);
        long long v = parse_int(tokens[1], line_no);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex out of range", line_no);
        if (u == v) throw ParseError("self-loop not allowed", line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (n < 0) throw ParseError("missing vertex-count header line", 1);
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (int v = 0; v < g.order(); ++v) {
    g.neighbors(v).for_each([&](int u) {
      if (u > v) out << v << ' ' << u << '\n';
    });
  }
  return out.str();
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  std::vector<Graph> out;
  if (format == GraphFormat::edgelist) {
    std::ostringstream all;
    all << in.rdbuf();
    std::string text = all.str();
    bool only_blanks = true;
    for (char c : text) {
      if (c != ' ' && c != '\t' && c != '\r' && c != '\n') only_blanks = false;
    }
    if (!only_blanks) out.push_back(parse_edge_list(text));
    return out;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace indgap
