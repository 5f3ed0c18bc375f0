#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stepwise/errors.hpp"
#include "stepwise/graph.hpp"

namespace stepwise {

namespace detail {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr std::uint64_t kGraph6MaxOrder = (std::uint64_t{1} << 36) - 1;

inline void put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace detail

/// graph6 encoding: N(n) followed by the upper triangle in column order
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian into 6-bit
/// groups offset by 63 and zero-padded.
inline std::string graph6_encode(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > detail::kGraph6MaxOrder) throw LimitExceeded("graph6: order too large");
  std::string out;
  detail::put_order(out, n);
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

/// Decodes one graph6 line (an optional ">>graph6<<" prefix and trailing
/// CR/LF are tolerated). Throws FormatError with the byte offset of the
/// first bad byte.
inline Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, detail::kGraph6Header.size()) == detail::kGraph6Header)
    pos = detail::kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto fail = [](const std::string& what, std::size_t at) {
    return FormatError("graph6: " + what + " at byte " + std::to_string(at), at);
  };
  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= text.size()) throw fail("truncated header", at);
    auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw fail("byte outside 63..126", at);
    return c - 63u;
  };

  if (pos >= text.size()) throw fail("empty input", pos);
  std::uint64_t n = 0;
  if (sextet(pos) != 63) {
    n = sextet(pos);
    pos += 1;
  } else if (sextet(pos + 1) != 63) {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(pos + i);
    if (n < 63) throw fail("non-minimal order header", pos);
    pos += 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | sextet(pos + i);
    if (n < 258048) throw fail("non-minimal order header", pos);
    pos += 8;
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw fail("body length " + std::to_string(text.size() - pos) +
                          " does not match expected " + std::to_string(body) +
                          " for n = " + std::to_string(n),
                      text.size() < pos + body ? text.size() : pos + body);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::uint64_t byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    std::uint64_t last = sextet(pos + body - 1);
    std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw fail("nonzero padding bits", pos + body - 1);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace stepwise
