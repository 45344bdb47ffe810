#ifndef PPR_REALIZE_HPP
#define PPR_REALIZE_HPP

#include <string>
#include <vector>

#include "ppr/graph.hpp"
#include "ppr/matrix.hpp"
#include "ppr/sequence.hpp"

namespace ppr {

enum class Family { Nonnegative, SymmetricNonnegative, SkewTree };

enum class SequenceShape {
  ZeroLeading,       // r0 = 0, all later bits 1; witnessed by loops only
  BackArcPath,       // nonnegative, r0 = 1; path with back arcs
  AllOnesAfterZero,  // symmetric counterpart of ZeroLeading
  OddWindow,         // symmetric, odd ones on [2l+1, 2k+1], evens up to 2m
  EvenOnly,          // no odd ones; evens up to 2m
  NotRealizable,
};

/// Verdict of a realizability check. For OddWindow the parameters satisfy
/// l <= k <= m <= l + k + 1; for EvenOnly, 2m <= n. NotRealizable carries
/// a stable reason identifier (see kReason* constants).
struct FamilyClassification {
  bool realizable = false;
  SequenceShape shape = SequenceShape::NotRealizable;
  int ell = 0;
  int k = 0;
  int m = 0;
  std::string reason;  // set only when !realizable
};

inline constexpr const char* kReasonZeroLeadingGap = "zero-leading-gap";
inline constexpr const char* kReasonOddGap = "odd-gap";
inline constexpr const char* kReasonEvenGap = "even-gap";
inline constexpr const char* kReasonWindowBound = "window-bound";
inline constexpr const char* kReasonN1Conflict = "n1-conflict";
inline constexpr const char* kReasonOddBitInSkew = "odd-bit-in-skew";
inline constexpr const char* kReasonR0ZeroInSkew = "r0-zero-in-skew";

FamilyClassification classify(const PprSequence& seq, Family family);

/// Witness for a nonnegative-realizable sequence: loops-only for the
/// ZeroLeading shape, otherwise the directed path v1 -> ... -> vn with a
/// back arc vk -> v1 for every rk = 1.
Digraph construct_nonnegative(const PprSequence& seq);

/// Witness for a symmetric-nonnegative-realizable sequence (odd cycle,
/// pendant path, pendant vertices, disjoint edges, as the shape demands).
Digraph construct_symmetric(const PprSequence& seq);

/// Skew-symmetric +-1 witness whose underlying graph is a path on 2m
/// vertices with the remaining vertices attached to vertex 2m-1 (all
/// isolated when m = 0).
IntMatrix construct_skew_tree(const PprSequence& seq);

/// All realizable sequences of length n+1, lexicographic.
std::vector<PprSequence> enumerate_realizable(int n, Family family);

Family parse_family(const std::string& name);  // nonnegative | symmetric | skew-tree
std::string family_name(Family family);

}  // namespace ppr

#endif  // PPR_REALIZE_HPP
