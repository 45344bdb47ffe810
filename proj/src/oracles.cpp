#include "ppr/oracles.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ppr/sequence.hpp"

namespace ppr {
namespace {

// Self-contained augmenting-path matcher, deliberately separate from the
// one inside graphcore so the oracle does not share code with the path it
// checks.
bool oracle_augment(int u, const std::vector<std::vector<bool>>& adj, std::vector<bool>& visited,
                    std::vector<int>& match_col) {
  const int k = static_cast<int>(adj.size());
  for (int v = 0; v < k; ++v) {
    if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ||
        visited[static_cast<std::size_t>(v)])
      continue;
    visited[static_cast<std::size_t>(v)] = true;
    if (match_col[static_cast<std::size_t>(v)] < 0 ||
        oracle_augment(match_col[static_cast<std::size_t>(v)], adj, visited, match_col)) {
      match_col[static_cast<std::size_t>(v)] = u;
      return true;
    }
  }
  return false;
}

bool has_perfect_matching(const IntMatrix& b, const std::vector<int>& alpha) {
  const int k = static_cast<int>(alpha.size());
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(k),
                                     std::vector<bool>(static_cast<std::size_t>(k), false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          b(alpha[static_cast<std::size_t>(i)] - 1, alpha[static_cast<std::size_t>(j)] - 1) == 1;
  std::vector<int> match_col(static_cast<std::size_t>(k), -1);
  for (int u = 0; u < k; ++u) {
    std::vector<bool> visited(static_cast<std::size_t>(k), false);
    if (!oracle_augment(u, adj, visited, match_col)) return false;
  }
  return true;
}

// ppr of a t-vertex matrix, padded with n-t isolated vertices: r0 becomes
// 1 and all bits beyond t are 0.
PprSequence pad_with_isolated(const PprSequence& seq, int n) {
  std::vector<bool> bits(static_cast<std::size_t>(n) + 1, false);
  bits[0] = true;
  for (int k = 0; k <= seq.order(); ++k)
    if (seq.bit(k)) bits[static_cast<std::size_t>(k)] = true;
  if (seq.order() == n) bits[0] = seq.bit(0);
  return PprSequence(std::move(bits));
}

IntMatrix skew_unit_matrix(const Digraph& tree) {
  const int n = tree.vertex_count();
  IntMatrix a = IntMatrix::Zero(n, n);
  for (const auto& [u, v] : tree.arcs()) {
    if (u < v) {
      a(u - 1, v - 1) = 1;
      a(v - 1, u - 1) = -1;
    }
  }
  return a;
}

void sweep_nonnegative(int n, bool symmetric, std::set<PprSequence>& out) {
  const int free_cells = symmetric ? n * (n + 1) / 2 : n * n;
  const std::uint64_t count = std::uint64_t(1) << free_cells;
  for (std::uint64_t code = 0; code < count; ++code) {
    IntMatrix b = IntMatrix::Zero(n, n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = symmetric ? i : 0; j < n; ++j) {
        if ((code >> bit++) & 1) {
          b(i, j) = 1;
          if (symmetric) b(j, i) = 1;
        }
      }
    out.insert(ppr_sequence(b));
  }
}

void sweep_skew_trees(int n, std::set<PprSequence>& out) {
  // Every tree on t vertices, padded with n-t isolated vertices. Isolated
  // padding only clears trailing bits, so the t-vertex ppr is computed once.
  for (int t = 1; t <= n; ++t) {
    if (t == 1) {
      out.insert(pad_with_isolated(ppr_sequence(IntMatrix::Zero(1, 1)), n));
      continue;
    }
    const int digits = t - 2;
    std::vector<int> code(static_cast<std::size_t>(digits), 1);
    while (true) {
      const Digraph tree = prufer_decode(code, t);
      out.insert(pad_with_isolated(ppr_sequence(skew_unit_matrix(tree)), n));
      int i = digits - 1;
      while (i >= 0 && code[static_cast<std::size_t>(i)] == t) --i;
      if (i < 0) break;
      ++code[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < digits; ++j) code[static_cast<std::size_t>(j)] = 1;
    }
  }
}

}  // namespace

int exhaustion_cap(Family family) {
  switch (family) {
    case Family::Nonnegative: return kCapNonnegative;
    case Family::SymmetricNonnegative: return kCapSymmetric;
    case Family::SkewTree: return kCapSkewTree;
  }
  return 0;
}

std::set<PprSequence> exhaustive_sequences(const FamilyUniverse& u, bool override_cap) {
  if (u.n < 1) throw std::invalid_argument("exhaustive_sequences: n must be >= 1");
  if (!override_cap && u.n > exhaustion_cap(u.family))
    throw std::invalid_argument("exhaustive_sequences: order exceeds the exhaustion cap for this family");
  std::set<PprSequence> out;
  switch (u.family) {
    case Family::Nonnegative: sweep_nonnegative(u.n, false, out); break;
    case Family::SymmetricNonnegative: sweep_nonnegative(u.n, true, out); break;
    case Family::SkewTree: sweep_skew_trees(u.n, out); break;
  }
  return out;
}

bool cycle_cover_exists(const IntMatrix& b, int k) {
  if (!is_zero_one(b)) throw std::invalid_argument("cycle_cover_exists: not a (0,1)-matrix");
  const int n = static_cast<int>(b.rows());
  if (k < 1 || k > n) throw std::invalid_argument("cycle_cover_exists: k out of range");
  return for_each_subset(n, k, [&](const std::vector<int>& alpha) {
    return has_perfect_matching(b, alpha);
  });
}

IntMatrix random_skew(int n, int magnitude, std::uint64_t seed) {
  if (n < 1 || magnitude < 1) throw std::invalid_argument("random_skew: bad parameters");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-magnitude, magnitude);
  IntMatrix a = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int value = entry(rng);
      a(i, j) = value;
      a(j, i) = -value;
    }
  return a;
}

Digraph prufer_decode(const std::vector<int>& code, int n) {
  if (n < 1) throw std::invalid_argument("prufer_decode: n must be >= 1");
  if (static_cast<int>(code.size()) != std::max(0, n - 2))
    throw std::invalid_argument("prufer_decode: code length must be n-2");
  Digraph g(n);
  if (n == 1) return g;
  std::vector<int> degree(static_cast<std::size_t>(n + 1), 1);
  for (int v : code) {
    if (v < 1 || v > n) throw std::invalid_argument("prufer_decode: label out of range");
    ++degree[static_cast<std::size_t>(v)];
  }
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  for (int v : code) {
    for (int leaf = 1; leaf <= n; ++leaf) {
      if (used[static_cast<std::size_t>(leaf)] || degree[static_cast<std::size_t>(leaf)] != 1) continue;
      g.add_edge(leaf, v);
      used[static_cast<std::size_t>(leaf)] = true;
      --degree[static_cast<std::size_t>(v)];
      break;
    }
  }
  // Join the two remaining vertices of degree 1.
  int first = 0;
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)] || degree[static_cast<std::size_t>(v)] != 1) continue;
    if (first == 0) {
      first = v;
    } else {
      g.add_edge(first, v);
      break;
    }
  }
  return g;
}

Digraph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> label(1, n);
  std::vector<int> code(static_cast<std::size_t>(std::max(0, n - 2)));
  for (int& v : code) v = label(rng);
  return prufer_decode(code, n);
}

}  // namespace ppr
