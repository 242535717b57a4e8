#include "irrwalk/cli/graph_io.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "irrwalk/errors.hpp"

namespace irrwalk {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "graph6") return GraphFormat::graph6;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "' (expected edgelist or graph6)");
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

Graph parse_edgelist(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t n = 0, lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    std::istringstream ls{std::string(body)};
    std::string su, sv, extra;
    ls >> su >> sv;
    if (su.empty() || sv.empty() || (ls >> extra))
      throw InvalidArgument("edge list line " + std::to_string(lineno) + ": expected two vertex indices, got '" +
                            std::string(body) + "'");
    auto parse_index = [&](const std::string& s) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidArgument("edge list line " + std::to_string(lineno) + ": '" + s +
                              "' is not a nonnegative integer");
      return v;
    };
    std::size_t u = parse_index(su), v = parse_index(sv);
    if (u == v) throw InvalidArgument("edge list line " + std::to_string(lineno) + ": self-loop at vertex " + su);
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      throw InvalidArgument("edge list line " + std::to_string(lineno) + ": duplicate edge " + su + " " + sv);
    edges.emplace_back(u, v);
    n = std::max(n, std::max(u, v) + 1);
  }
  if (edges.empty()) throw InvalidArgument("edge list contains no edges");
  return Graph::from_edges(n, edges);
}

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.substr(0, 10) == ">>graph6<<") s = s.substr(10);
  if (s.find('\n') != std::string_view::npos) throw InvalidArgument("graph6: expected a single graph");
  for (char ch : s)
    if (ch < 63 || ch > 126) throw InvalidArgument("graph6: invalid character in input");
  if (s.empty()) throw InvalidArgument("graph6: empty input");
  std::size_t pos = 0, n = 0;
  auto byte = [&](std::size_t i) -> std::size_t {
    if (i >= s.size()) throw InvalidArgument("graph6: input truncated");
    return static_cast<std::size_t>(s[i] - 63);
  };
  if (s[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (s.size() > 1 && s[1] != '~') {
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  const std::size_t bits = n * (n - (n > 0)) / 2, bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes)
    throw InvalidArgument("graph6: expected " + std::to_string(bytes) + " data bytes for " + std::to_string(n) +
                          " vertices, got " + std::to_string(s.size() - pos));
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if ((byte(pos + k / 6) >> (5 - k % 6)) & 1) g.add_edge(i, j);
  for (; k < bytes * 6; ++k)
    if ((byte(pos + k / 6) >> (5 - k % 6)) & 1) throw InvalidArgument("graph6: nonzero padding bits");
  return g;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edgelist ? parse_edgelist(text) : parse_graph6(text);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift : {30, 24, 18, 12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, nbits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

std::string to_edgelist(const Graph& g) {
  std::string out;
  for (auto [a, b] : g.edges()) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

}  // namespace irrwalk
