#include "qgraph/graph6.hpp"

#include <cstdint>

namespace qgraph {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c, std::size_t position) {
  const auto value = static_cast<unsigned char>(c);
  if (value < 63 || value > 126) {
    throw Graph6Error(Graph6ErrorKind::BadChar, "graph6: byte " + std::to_string(value) +
                                                    " at offset " + std::to_string(position) +
                                                    " is outside [63, 126]");
  }
  return value - 63;
}

void encode_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
  }
}

}  // namespace

AdjacencyBits decode_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error(Graph6ErrorKind::TruncatedBits, "graph6: empty line");

  std::size_t pos = 0;
  auto take = [&](int count) {
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i, ++pos) {
      if (pos >= line.size()) {
        throw Graph6Error(Graph6ErrorKind::TruncatedBits, "graph6: size header truncated");
      }
      value = (value << 6) | static_cast<std::uint64_t>(sextet(line[pos], pos));
    }
    return value;
  };

  std::uint64_t n = 0;
  if (line[0] != '~') {
    n = take(1);
  } else if (line.size() > 1 && line[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > static_cast<std::uint64_t>(kMaxVertices)) {
    throw Graph6Error(Graph6ErrorKind::SizeMismatch,
                      "graph6: " + std::to_string(n) + " vertices exceeds the supported " +
                          std::to_string(kMaxVertices));
  }

  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t char_count = (bit_count + 5) / 6;
  const std::size_t body = line.size() - pos;
  if (body < char_count) {
    throw Graph6Error(Graph6ErrorKind::TruncatedBits,
                      "graph6: expected " + std::to_string(char_count) + " data bytes for n=" +
                          std::to_string(n) + ", found " + std::to_string(body));
  }
  if (body > char_count) {
    throw Graph6Error(Graph6ErrorKind::SizeMismatch,
                      "graph6: " + std::to_string(body - char_count) +
                          " trailing bytes after adjacency data for n=" + std::to_string(n));
  }

  AdjacencyBits bits(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(line[pos + k / 6], pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) bits.add_edge(i, j);
    }
  }
  for (; k < char_count * 6; ++k) {
    const int chunk = sextet(line[pos + k / 6], pos + k / 6);
    if ((chunk >> (5 - k % 6)) & 1) {
      throw Graph6Error(Graph6ErrorKind::SizeMismatch, "graph6: nonzero padding bits");
    }
  }
  return bits;
}

std::string encode_graph6(const AdjacencyBits& bits) {
  const int n = bits.vertex_count();
  std::string out;
  encode_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (bits.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_graph6(std::string_view line) { return Graph::from_bits(decode_graph6(line)); }

std::string to_graph6(const Graph& graph) { return encode_graph6(graph.bits()); }

}  // namespace qgraph
