#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stepwise/errors.hpp"
#include "stepwise/graph.hpp"
#include "stepwise/graph6.hpp"

namespace stepwise {

inline constexpr std::size_t kDefaultCanonicalLimit = 16;
inline constexpr std::size_t kMaxCanonicalOrder = 64;

namespace detail {

using Rows = std::span<const std::uint64_t>;
using Perm = std::array<std::uint8_t, kMaxCanonicalOrder>;

/// Ordered partition of positions [0, n). Cells are contiguous runs of
/// `lab`; `start[p]` is the first position of the cell containing p.
struct Partition {
  Perm lab{};
  Perm pos{};
  Perm start{};
  Perm len{};  // meaningful at cell starts only
  int cells = 0;
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

/// Individualization-refinement search for a canonical labeling.
///
/// Leaves are compared by their relabeled adjacency rows; the least one is
/// canonical. Two leaves with equal rows yield an automorphism. Subtrees are
/// skipped when they are images of already explored subtrees: children of a
/// node on the first path that lie in one orbit of the automorphisms fixing
/// that path's prefix, and the remainder of any subtree in which a leaf
/// equivalent to the first or the best leaf turns up.
class CanonSearch {
 public:
  CanonSearch(Rows rows, std::span<const std::uint32_t> colors) : rows_(rows), n_(rows.size()) {
    Partition p;
    std::vector<std::uint8_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return colors[a] < colors[b]; });
    std::vector<int> queue;
    for (std::size_t i = 0; i < n_; ++i) {
      p.lab[i] = order[i];
      p.pos[order[i]] = static_cast<std::uint8_t>(i);
      if (i == 0 || colors[order[i]] != colors[order[i - 1]]) {
        p.start[i] = static_cast<std::uint8_t>(i);
        p.len[i] = 1;
        ++p.cells;
        queue.push_back(static_cast<int>(i));
      } else {
        p.start[i] = p.start[i - 1];
        ++p.len[p.start[i]];
      }
    }
    if (n_ > 0) {
      refine(p, queue);
      search(p, 0, true);
    }
  }

  /// best_lab()[i] is the vertex placed at canonical position i.
  const Perm& best_lab() const { return best_lab_; }
  const std::vector<std::uint64_t>& best_rows() const { return best_rows_; }

  /// Orbit representative (least vertex) of every vertex under Aut.
  std::vector<std::uint8_t> orbits() const {
    UnionFind uf(n_);
    for (const auto& a : auts_)
      for (std::size_t v = 0; v < n_; ++v) uf.unite(v, a.perm[v]);
    std::vector<std::uint8_t> out(n_);
    for (std::size_t v = 0; v < n_; ++v) out[v] = static_cast<std::uint8_t>(uf.find(v));
    return out;
  }

  /// |Aut| as the product of first-path orbit lengths, or nullopt on
  /// 64-bit overflow.
  std::optional<std::uint64_t> group_order() const {
    std::uint64_t order = 1;
    for (std::size_t level = 0; level < first_path_.size(); ++level) {
      auto uf = stabilizer_orbits(level);
      const auto root = uf.find(first_path_[level]);
      std::uint64_t len = 0;
      for (std::size_t v = 0; v < n_; ++v) len += uf.find(v) == root;
      if (order > UINT64_MAX / len) return std::nullopt;
      order *= len;
    }
    return order;
  }

 private:
  struct Automorphism {
    Perm perm{};
    std::size_t fixes = 0;  // length of the first-path prefix fixed pointwise
  };

  std::uint64_t cell_mask(const Partition& p, int s) const {
    std::uint64_t m = 0;
    for (int i = s; i < s + p.len[s]; ++i) m |= std::uint64_t{1} << p.lab[i];
    return m;
  }

  /// Equitable refinement driven by a FIFO of splitter cells.
  void refine(Partition& p, std::vector<int>& queue) const {
    std::array<bool, kMaxCanonicalOrder> queued{};
    for (int s : queue) queued[s] = true;
    std::array<std::uint8_t, kMaxCanonicalOrder> count{};
    std::array<std::uint8_t, kMaxCanonicalOrder> tmp{};
    for (std::size_t head = 0; head < queue.size() && p.cells < static_cast<int>(n_); ++head) {
      const int w = queue[head];
      queued[w] = false;
      const std::uint64_t wmask = cell_mask(p, w);
      for (int c = 0; c < static_cast<int>(n_);) {
        const int len = p.len[c];
        const int next = c + len;
        if (len == 1) {
          c = next;
          continue;
        }
        bool uniform = true;
        for (int i = c; i < next; ++i) {
          count[i] = static_cast<std::uint8_t>(std::popcount(rows_[p.lab[i]] & wmask));
          uniform = uniform && count[i] == count[c];
        }
        if (uniform) {
          c = next;
          continue;
        }
        // Counting sort of the cell by count, ascending.
        std::array<std::uint8_t, kMaxCanonicalOrder + 1> bucket{};
        for (int i = c; i < next; ++i) ++bucket[count[i]];
        std::array<std::uint8_t, kMaxCanonicalOrder + 1> first{};
        int acc = c;
        for (std::size_t b = 0; b <= n_; ++b) {
          first[b] = static_cast<std::uint8_t>(acc);
          acc += bucket[b];
        }
        auto fill = first;
        for (int i = c; i < next; ++i) tmp[fill[count[i]]++] = p.lab[i];
        for (int i = c; i < next; ++i) {
          p.lab[i] = tmp[i];
          p.pos[tmp[i]] = static_cast<std::uint8_t>(i);
        }
        // New cells and their sizes.
        const bool was_queued = queued[c];
        int largest = -1, largest_len = 0;
        std::array<int, kMaxCanonicalOrder> fragments{};
        int nfrag = 0;
        for (std::size_t b = 0; b <= n_; ++b) {
          if (bucket[b] == 0) continue;
          const int s = first[b];
          fragments[nfrag++] = s;
          p.len[s] = bucket[b];
          for (int i = s; i < s + bucket[b]; ++i) p.start[i] = static_cast<std::uint8_t>(s);
          if (bucket[b] > largest_len) {
            largest_len = bucket[b];
            largest = s;
          }
        }
        p.cells += nfrag - 1;
        for (int f = 0; f < nfrag; ++f) {
          const int s = fragments[f];
          if (queued[s]) continue;
          if (was_queued || s != largest) {
            queued[s] = true;
            queue.push_back(s);
          }
        }
        c = next;
      }
    }
  }

  UnionFind stabilizer_orbits(std::size_t level) const {
    UnionFind uf(n_);
    for (const auto& a : auts_)
      if (a.fixes >= level)
        for (std::size_t v = 0; v < n_; ++v) uf.unite(v, a.perm[v]);
    return uf;
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    Automorphism a;
    for (std::size_t i = 0; i < n_; ++i) a.perm[from[i]] = to[i];
    while (a.fixes < first_path_.size() &&
           a.perm[first_path_[a.fixes]] == first_path_[a.fixes])
      ++a.fixes;
    auts_.push_back(a);
  }

  std::vector<std::uint64_t> leaf_rows(const Partition& p) const {
    std::vector<std::uint64_t> out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t r = rows_[p.lab[i]];
      std::uint64_t mapped = 0;
      while (r) {
        mapped |= std::uint64_t{1} << p.pos[std::countr_zero(r)];
        r &= r - 1;
      }
      out[i] = mapped;
    }
    return out;
  }

  static std::size_t divergence(const std::vector<std::uint8_t>& a,
                                const std::vector<std::uint8_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  /// Returns the level at which the search should resume.
  std::size_t leaf(const Partition& p, std::size_t level) {
    auto form = leaf_rows(p);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_rows_ = best_rows_ = std::move(form);
      first_path_ = best_path_ = path_;
      return level;
    }
    if (form == first_rows_) {
      record_automorphism(first_lab_, p.lab);
      return divergence(path_, first_path_);
    }
    if (form == best_rows_) {
      record_automorphism(best_lab_, p.lab);
      return divergence(path_, best_path_);
    }
    if (form < best_rows_) {
      best_rows_ = std::move(form);
      best_lab_ = p.lab;
      best_path_ = path_;
    }
    return level;
  }

  std::size_t search(const Partition& p, std::size_t level, bool on_first_path) {
    if (p.cells == static_cast<int>(n_)) return leaf(p, level);
    int target = 0;
    while (p.len[target] == 1) target += p.len[target];
    std::vector<std::uint8_t> candidates(p.lab.begin() + target,
                                         p.lab.begin() + target + p.len[target]);
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::uint8_t> tried;
    for (auto v : candidates) {
      if (on_first_path && !tried.empty()) {
        auto uf = stabilizer_orbits(level);
        const auto root = uf.find(v);
        if (std::any_of(tried.begin(), tried.end(), [&](auto u) { return uf.find(u) == root; }))
          continue;
      }
      Partition q = p;
      const int s = p.start[p.pos[v]];
      // Individualize v: it becomes a singleton at the front of its cell.
      const int at = q.pos[v];
      std::swap(q.lab[s], q.lab[at]);
      q.pos[q.lab[s]] = static_cast<std::uint8_t>(s);
      q.pos[q.lab[at]] = static_cast<std::uint8_t>(at);
      const int rest = q.len[s] - 1;
      q.len[s] = 1;
      q.len[s + 1] = static_cast<std::uint8_t>(rest);
      for (int i = s + 1; i < s + 1 + rest; ++i) q.start[i] = static_cast<std::uint8_t>(s + 1);
      ++q.cells;
      std::vector<int> queue{s};
      refine(q, queue);

      path_.resize(level);
      path_.push_back(v);
      const bool child_on_first = on_first_path && (!have_first_ || tried.empty());
      const auto resume = search(q, level + 1, child_on_first);
      tried.push_back(v);
      if (resume < level) return resume;
    }
    return level;
  }

  Rows rows_;
  std::size_t n_;
  bool have_first_ = false;
  Perm first_lab_{}, best_lab_{};
  std::vector<std::uint64_t> first_rows_, best_rows_;
  std::vector<std::uint8_t> path_, first_path_, best_path_;
  std::vector<Automorphism> auts_;
};

/// Vertex invariant used as the initial coloring everywhere a canonical
/// form is computed: (degree, sum of neighbor degrees), ranked.
inline std::vector<std::uint32_t> invariant_colors(Rows rows) {
  const std::size_t n = rows.size();
  std::vector<std::uint32_t> deg(n), key(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = static_cast<std::uint32_t>(std::popcount(rows[v]));
  for (std::size_t v = 0; v < n; ++v) {
    std::uint32_t s = 0;
    for (std::uint64_t r = rows[v]; r; r &= r - 1) s += deg[std::countr_zero(r)];
    key[v] = deg[v] * 4096u + s;
  }
  return key;
}

inline std::string rows_graph6(std::span<const std::uint64_t> rows) {
  const std::size_t n = rows.size();
  std::string out;
  put_order(out, n);
  int acc = 0, nbits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((rows[i] >> j) & 1u);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline std::vector<std::uint64_t> graph_rows(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row_mask(v);
  return rows;
}

}  // namespace detail

/// Result of canonical labeling on a 64-bit-row graph.
struct Labeling {
  /// order[i] = vertex placed at canonical position i.
  std::vector<Vertex> order;
  /// Canonically relabeled adjacency rows.
  std::vector<std::uint64_t> rows;
  /// Least vertex of each vertex's automorphism orbit.
  std::vector<Vertex> orbit;
  std::optional<std::uint64_t> automorphism_count;
};

inline Labeling canonical_labeling(std::span<const std::uint64_t> rows) {
  if (rows.size() > kMaxCanonicalOrder) throw LimitExceeded("canonical_labeling: n > 64");
  const auto colors = detail::invariant_colors(rows);
  detail::CanonSearch s(rows, colors);
  Labeling out;
  out.order.assign(s.best_lab().begin(), s.best_lab().begin() + rows.size());
  out.rows = s.best_rows();
  const auto orb = s.orbits();
  out.orbit.assign(orb.begin(), orb.end());
  out.automorphism_count = s.group_order();
  return out;
}

struct CanonicalForm {
  std::string graph6;
  std::optional<std::uint64_t> automorphism_count;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.graph6 == b.graph6;
  }
};

/// Label-invariant representative: equal for two graphs iff they are
/// isomorphic.
inline CanonicalForm canonical_form(const Graph& g, std::size_t limit = kDefaultCanonicalLimit) {
  if (g.order() > limit || g.order() > kMaxCanonicalOrder) {
    throw LimitExceeded("canonical_form: n = " + std::to_string(g.order()) +
                        " exceeds the canonicalization limit " + std::to_string(limit));
  }
  const auto rows = detail::graph_rows(g);
  auto lab = canonical_labeling(rows);
  return {detail::rows_graph6(lab.rows), lab.automorphism_count};
}

/// The canonically relabeled copy of g.
inline Graph canonical_graph(const Graph& g, std::size_t limit = kDefaultCanonicalLimit) {
  return graph6_decode(canonical_form(g, limit).graph6);
}

inline bool isomorphic(const Graph& a, const Graph& b,
                       std::size_t limit = kDefaultCanonicalLimit) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a, limit).graph6 == canonical_form(b, limit).graph6;
}

}  // namespace stepwise
