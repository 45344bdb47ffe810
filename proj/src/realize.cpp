#include "ppr/realize.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace ppr {
namespace {

FamilyClassification rejected(const char* reason) {
  FamilyClassification c;
  c.realizable = false;
  c.shape = SequenceShape::NotRealizable;
  c.reason = reason;
  return c;
}

FamilyClassification accepted(SequenceShape shape, int ell = 0, int k = 0, int m = 0) {
  FamilyClassification c;
  c.realizable = true;
  c.shape = shape;
  c.ell = ell;
  c.k = k;
  c.m = m;
  return c;
}

bool all_ones_after_zero(const PprSequence& s) {
  if (s.bit(0)) return false;
  for (int i = 1; i <= s.order(); ++i)
    if (!s.bit(i)) return false;
  return true;
}

// Even indices >= 2 holding 1 must be exactly 2, 4, ..., 2m. Returns m,
// or -1 on a gap.
int even_prefix(const PprSequence& s) {
  int m = 0;
  for (int idx = 2; idx <= s.order(); idx += 2)
    if (s.bit(idx)) m = idx / 2;
  for (int j = 1; j <= m; ++j)
    if (!s.bit(2 * j)) return -1;
  return m;
}

FamilyClassification classify_nonnegative(const PprSequence& s) {
  if (!s.bit(0))
    return all_ones_after_zero(s) ? accepted(SequenceShape::ZeroLeading)
                                  : rejected(kReasonZeroLeadingGap);
  if (s.order() == 1 && s.bit(1)) return rejected(kReasonN1Conflict);
  return accepted(SequenceShape::BackArcPath);
}

FamilyClassification classify_symmetric(const PprSequence& s) {
  if (!s.bit(0))
    return all_ones_after_zero(s) ? accepted(SequenceShape::AllOnesAfterZero)
                                  : rejected(kReasonZeroLeadingGap);

  int first_odd = 0, last_odd = 0;
  for (int idx = 1; idx <= s.order(); idx += 2) {
    if (!s.bit(idx)) continue;
    if (first_odd == 0) first_odd = idx;
    last_odd = idx;
  }
  const int m = even_prefix(s);
  if (m < 0) return rejected(kReasonEvenGap);
  if (first_odd == 0) return accepted(SequenceShape::EvenOnly, 0, 0, m);

  for (int idx = first_odd; idx <= last_odd; idx += 2)
    if (!s.bit(idx)) return rejected(kReasonOddGap);
  const int ell = (first_odd - 1) / 2;
  const int k = (last_odd - 1) / 2;
  if (s.order() == 1) return rejected(kReasonN1Conflict);  // the sequence 11
  if (k > m || m > ell + k + 1) return rejected(kReasonWindowBound);
  return accepted(SequenceShape::OddWindow, ell, k, m);
}

FamilyClassification classify_skew_tree(const PprSequence& s) {
  for (int idx = 1; idx <= s.order(); idx += 2)
    if (s.bit(idx)) return rejected(kReasonOddBitInSkew);
  if (!s.bit(0)) return rejected(kReasonR0ZeroInSkew);
  const int m = even_prefix(s);
  if (m < 0) return rejected(kReasonEvenGap);
  return accepted(SequenceShape::EvenOnly, 0, 0, m);
}

void require_realizable(const PprSequence& seq, Family family) {
  if (!classify(seq, family).realizable)
    throw std::invalid_argument("constructor: sequence not realizable in family " + family_name(family));
}

}  // namespace

FamilyClassification classify(const PprSequence& seq, Family family) {
  switch (family) {
    case Family::Nonnegative: return classify_nonnegative(seq);
    case Family::SymmetricNonnegative: return classify_symmetric(seq);
    case Family::SkewTree: return classify_skew_tree(seq);
  }
  throw std::logic_error("classify: unknown family");
}

Digraph construct_nonnegative(const PprSequence& seq) {
  require_realizable(seq, Family::Nonnegative);
  const int n = seq.order();
  Digraph g(n);
  if (!seq.bit(0)) {  // identity pattern
    for (int v = 1; v <= n; ++v) g.add_arc(v, v);
    return g;
  }
  for (int v = 1; v < n; ++v) g.add_arc(v, v + 1);
  for (int k = 1; k <= n; ++k)
    if (seq.bit(k)) g.add_arc(k, 1);
  return g;
}

Digraph construct_symmetric(const PprSequence& seq) {
  require_realizable(seq, Family::SymmetricNonnegative);
  const FamilyClassification c = classify(seq, Family::SymmetricNonnegative);
  const int n = seq.order();
  Digraph g(n);

  if (c.shape == SequenceShape::AllOnesAfterZero) {
    for (int v = 1; v <= n; ++v) g.add_arc(v, v);
    return g;
  }
  if (c.shape == SequenceShape::EvenOnly) {
    for (int j = 1; j <= c.m; ++j) g.add_edge(2 * j - 1, 2 * j);
    return g;
  }

  // OddWindow
  const int ell = c.ell, k = c.k, m = c.m;
  if (ell == k && k == m) {
    if (ell == 0) {
      g.add_arc(1, 1);  // lone loop, everything else isolated
      return g;
    }
    for (int v = 1; v <= 2 * ell; ++v) g.add_edge(v, v + 1);  // odd cycle
    g.add_edge(2 * ell + 1, 1);
    return g;
  }

  // Odd cycle on 1..2l+1 (a loop on vertex 1 when l = 0).
  if (ell == 0) {
    g.add_arc(1, 1);
  } else {
    for (int v = 1; v <= 2 * ell; ++v) g.add_edge(v, v + 1);
    g.add_edge(2 * ell + 1, 1);
  }
  // Path on 2l+1 .. 2k+1.
  for (int v = 2 * ell + 1; v < 2 * k + 1; ++v) g.add_edge(v, v + 1);
  // Pendant vertices 2k+2 .. 2m, the i-th attached to vertex i.
  const int pendants = std::max(0, 2 * (m - k) - 1);
  for (int i = 1; i <= pendants; ++i) g.add_edge(i, 2 * k + 1 + i);
  // Remaining vertices become pendants that cannot enlarge the matching:
  // vertex 1 already carries a pendant when m > k; when m = k no maximum
  // matching of the core exposes the first interior path vertex 2l+2.
  const int anchor = (m > k) ? 1 : 2 * ell + 2;
  for (int v = 2 * k + 1 + pendants + 1; v <= n; ++v) g.add_edge(anchor, v);
  return g;
}

IntMatrix construct_skew_tree(const PprSequence& seq) {
  require_realizable(seq, Family::SkewTree);
  const FamilyClassification c = classify(seq, Family::SkewTree);
  const int n = seq.order();
  const int m = c.m;
  Digraph g(n);
  for (int v = 1; v < 2 * m; ++v) g.add_edge(v, v + 1);
  for (int v = 2 * m + 1; v <= n; ++v)
    if (m >= 1) g.add_edge(2 * m - 1, v);

  IntMatrix a = IntMatrix::Zero(n, n);
  for (const auto& [u, v] : g.arcs()) {
    if (u < v) {
      a(u - 1, v - 1) = 1;
      a(v - 1, u - 1) = -1;
    }
  }
  return a;
}

std::vector<PprSequence> enumerate_realizable(int n, Family family) {
  if (n < 1) throw std::invalid_argument("enumerate_realizable: n must be >= 1");
  std::vector<PprSequence> out;
  const std::uint64_t count = std::uint64_t(1) << (n + 1);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<bool> bits(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
      bits[static_cast<std::size_t>(i)] = (code >> (n - i)) & 1;  // r0 is most significant
    PprSequence seq(std::move(bits));
    if (classify(seq, family).realizable) out.push_back(std::move(seq));
  }
  return out;
}

Family parse_family(const std::string& name) {
  if (name == "nonnegative") return Family::Nonnegative;
  if (name == "symmetric") return Family::SymmetricNonnegative;
  if (name == "skew-tree") return Family::SkewTree;
  throw std::invalid_argument("unknown family '" + name + "' (expected nonnegative, symmetric, or skew-tree)");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Nonnegative: return "nonnegative";
    case Family::SymmetricNonnegative: return "symmetric";
    case Family::SkewTree: return "skew-tree";
  }
  return "?";
}

}  // namespace ppr
