#include <istream>
#include <sstream>
#include <vector>

#include "gammacrit/error.hpp"
#include "gammacrit/io.hpp"

namespace gammacrit {

namespace {

constexpr std::size_t kMaxShortOrder = 62;
constexpr std::size_t kMaxMediumOrder = 258047;

[[noreturn]] void malformed(const std::string& why) { throw Error(Errc::MalformedGraph6, why); }

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kMaxMediumOrder) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3F)));
    }
  } else {
    throw Error(Errc::TooLarge, "graph6 encoder supports n <= 258047");
  }

  // Upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<bool> x(bits, false);
  for (const Edge& e : g.edges()) x[e.v * (e.v - 1) / 2 + e.u] = true;

  for (std::size_t i = 0; i < bits; i += 6) {
    int word = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      word <<= 1;
      if (i + b < bits && x[i + b]) word |= 1;
    }
    out.push_back(static_cast<char>(63 + word));
  }
  return out;
}

Graph decode_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.empty()) malformed("empty input");
  for (char c : text) {
    if (c < 63 || c > 126) malformed("byte outside 63..126");
  }

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4) malformed("truncated order prefix");
    if (text[1] == '~') malformed("8-byte order prefix not supported");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    if (n <= kMaxShortOrder) malformed("non-canonical order prefix");
    pos = 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t words = (bits + 5) / 6;
  if (text.size() - pos != words) {
    malformed("expected " + std::to_string(words) + " data bytes, got " +
              std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int word = text[pos + k / 6] - 63;
      if (word >> (5 - k % 6) & 1) edges.push_back(Edge{u, v});
    }
  }
  // Padding bits must be zero.
  if (words > 0) {
    const int last = text.back() - 63;
    const std::size_t pad = words * 6 - bits;
    if ((last & ((1 << pad) - 1)) != 0) malformed("nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 0) throw Error(Errc::MalformedInput, "edge list must start with n >= 0");
  std::vector<Edge> edges;
  long long a = 0;
  while (in >> a) {
    long long b = 0;
    if (!(in >> b)) throw Error(Errc::MalformedInput, "odd number of endpoint tokens");
    if (a < 0 || b < 0) throw Error(Errc::IndexOutOfRange, "negative vertex index");
    edges.push_back(Edge{static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!in.eof()) throw Error(Errc::MalformedInput, "non-integer token in edge list");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace gammacrit
