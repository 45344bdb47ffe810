#ifndef PPR_ORACLES_HPP
#define PPR_ORACLES_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "ppr/graph.hpp"
#include "ppr/matrix.hpp"
#include "ppr/realize.hpp"
#include "ppr/sequence.hpp"

namespace ppr {

// Orders up to which a full sweep of each family finishes in a couple of
// minutes on a desktop. Raisable per call via the override argument.
inline constexpr int kCapNonnegative = 4;
inline constexpr int kCapSymmetric = 5;
inline constexpr int kCapSkewTree = 7;

struct FamilyUniverse {
  int n;
  Family family;
};

int exhaustion_cap(Family family);

/// Ground truth: every ppr-sequence attained by the universe. Nonnegative
/// sweeps all (0,1) matrices, symmetric all symmetric (0,1) matrices, and
/// skew-tree all labeled trees (Prufer-decoded) padded with isolated
/// vertices and given +-1 skew weights. Throws when n exceeds the cap
/// unless override_cap is set.
std::set<PprSequence> exhaustive_sequences(const FamilyUniverse& u, bool override_cap = false);

/// True iff some k-subset alpha admits a perfect matching between rows and
/// columns of B[alpha] over its 1-entries. Permanent-free, self-contained.
bool cycle_cover_exists(const IntMatrix& b, int k);

/// Skew-symmetric matrix with entries uniform in [-magnitude, magnitude]
/// above the diagonal; deterministic in the seed.
IntMatrix random_skew(int n, int magnitude, std::uint64_t seed);

/// Uniform labeled tree on n vertices via a random Prufer sequence.
Digraph random_tree(int n, std::uint64_t seed);

/// Labeled tree on n vertices from a Prufer code (entries in [1, n],
/// length n-2; empty for n <= 2).
Digraph prufer_decode(const std::vector<int>& code, int n);

}  // namespace ppr

#endif  // PPR_ORACLES_HPP
