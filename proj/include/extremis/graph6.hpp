#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "extremis/graph.hpp"

namespace extremis {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6 with the single-byte order prefix (n <= 62). Upper-triangle bits are
// taken column by column: x(0,1), x(0,2), x(1,2), x(0,3), ..., packed six to a
// byte, most significant bit first, each byte offset by 63.

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
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

inline Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw Graph6Error("graph6 byte " + std::to_string(b) + " outside 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n == 63) throw Graph6Error("graph6 orders above 62 are not supported");
  if (n == 0) throw Graph6Error("graph6 order 0 is not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected)
    throw Graph6Error("graph6 length " + std::to_string(text.size()) + " does not match order " +
                      std::to_string(n) + " (expected " + std::to_string(expected) + ")");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw Graph6Error("graph6 padding bits are not zero");
  }
  return Graph(n, edges);
}

/// Reads graph6 lines, skipping blank lines. Errors carry the 1-based line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  /// Next graph, or nullopt at end of stream. Throws Graph6Error on a malformed line.
  std::optional<Graph> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        return decode_graph6(line);
      } catch (const std::exception& e) {
        throw Graph6Error("line " + std::to_string(line_) + ": " + e.what());
      }
    }
    return std::nullopt;
  }

  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace extremis
