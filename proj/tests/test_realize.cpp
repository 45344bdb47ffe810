#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ppr/graph.hpp"
#include "ppr/oracles.hpp"
#include "ppr/realize.hpp"
#include "ppr/sequence.hpp"

using ppr::Family;
using ppr::PprSequence;
using ppr::SequenceShape;

namespace {

ppr::FamilyClassification classify(const std::string& seq, Family family) {
  return ppr::classify(PprSequence::parse(seq), family);
}

PprSequence roundtrip(const std::string& seq, Family family) {
  const PprSequence s = PprSequence::parse(seq);
  switch (family) {
    case Family::Nonnegative: return ppr::ppr_sequence(ppr::to_pattern(ppr::construct_nonnegative(s)));
    case Family::SymmetricNonnegative:
      return ppr::ppr_sequence(ppr::to_pattern(ppr::construct_symmetric(s)));
    case Family::SkewTree: return ppr::ppr_sequence(ppr::construct_skew_tree(s));
  }
  throw std::logic_error("unknown family");
}

}  // namespace

TEST_CASE("classification examples") {
  auto c = classify("0111", Family::Nonnegative);
  CHECK(c.realizable);
  CHECK(c.shape == SequenceShape::ZeroLeading);

  c = classify("101100", Family::SymmetricNonnegative);
  CHECK(c.realizable);
  CHECK(c.shape == SequenceShape::OddWindow);
  CHECK(c.ell == 1);
  CHECK(c.k == 1);
  CHECK(c.m == 1);

  c = classify("101110101", Family::SymmetricNonnegative);
  CHECK_FALSE(c.realizable);
  CHECK(c.reason == ppr::kReasonWindowBound);

  c = classify("10111011", Family::SymmetricNonnegative);
  CHECK_FALSE(c.realizable);
  CHECK(c.reason == ppr::kReasonOddGap);

  c = classify("1010100", Family::SkewTree);
  CHECK(c.realizable);
  CHECK(c.shape == SequenceShape::EvenOnly);
  CHECK(c.m == 2);

  c = classify("0110", Family::Nonnegative);
  CHECK_FALSE(c.realizable);
  CHECK(c.reason == ppr::kReasonZeroLeadingGap);
}

TEST_CASE("n = 1 boundary") {
  for (Family family : {Family::Nonnegative, Family::SymmetricNonnegative, Family::SkewTree}) {
    const auto c = classify("11", family);
    CHECK_FALSE(c.realizable);
  }
  CHECK(classify("10", Family::Nonnegative).realizable);
  CHECK(classify("10", Family::SymmetricNonnegative).realizable);
  CHECK(classify("10", Family::SkewTree).realizable);
  CHECK(classify("01", Family::Nonnegative).realizable);
  CHECK(classify("01", Family::SymmetricNonnegative).realizable);
  CHECK_FALSE(classify("01", Family::SkewTree).realizable);
}

TEST_CASE("skew classification rejections") {
  CHECK(classify("10110", Family::SkewTree).reason == ppr::kReasonOddBitInSkew);
  CHECK(classify("00100", Family::SkewTree).reason == ppr::kReasonR0ZeroInSkew);
  CHECK(classify("100010", Family::SkewTree).reason == ppr::kReasonEvenGap);
}

TEST_CASE("nonnegative construction") {
  const ppr::Digraph figure = ppr::construct_nonnegative(PprSequence::parse("10010100100"));
  for (int v = 1; v < 10; ++v) CHECK(figure.has_arc(v, v + 1));
  CHECK(figure.has_arc(3, 1));
  CHECK(figure.has_arc(5, 1));
  CHECK(figure.has_arc(8, 1));
  CHECK(figure.arcs().size() == 12);
  CHECK(roundtrip("10010100100", Family::Nonnegative).str() == "10010100100");

  const ppr::Digraph loops = ppr::construct_nonnegative(PprSequence::parse("011"));
  CHECK(loops.arcs() == std::set<std::pair<int, int>>{{1, 1}, {2, 2}});

  const ppr::Digraph bare = ppr::construct_nonnegative(PprSequence::parse("100"));
  CHECK(bare.arcs() == std::set<std::pair<int, int>>{{1, 2}});
  CHECK(roundtrip("100", Family::Nonnegative).str() == "100");

  CHECK_THROWS_AS(ppr::construct_nonnegative(PprSequence::parse("0110")), std::invalid_argument);
}

TEST_CASE("symmetric construction") {
  const ppr::Digraph case3 = ppr::construct_symmetric(PprSequence::parse("101100"));
  CHECK(case3.has_arc(1, 2));
  CHECK(case3.has_arc(2, 3));
  CHECK(case3.has_arc(3, 1));
  CHECK(case3.arcs().size() == 6);  // triangle only, vertices 4 and 5 isolated
  CHECK(roundtrip("101100", Family::SymmetricNonnegative).str() == "101100");

  const ppr::Digraph case5 = ppr::construct_symmetric(PprSequence::parse("101010"));
  CHECK(case5.arcs() == std::set<std::pair<int, int>>{{1, 2}, {2, 1}, {3, 4}, {4, 3}});

  const ppr::Digraph case4 = ppr::construct_symmetric(PprSequence::parse("111110"));
  CHECK(case4.has_arc(1, 1));
  CHECK(case4.has_arc(1, 2));
  CHECK(case4.has_arc(2, 3));
  CHECK(case4.has_arc(1, 4));
  CHECK(case4.has_arc(1, 5));
  CHECK(roundtrip("111110", Family::SymmetricNonnegative).str() == "111110");

  CHECK_THROWS_AS(ppr::construct_symmetric(PprSequence::parse("10111011")), std::invalid_argument);
}

TEST_CASE("skew tree construction") {
  const ppr::IntMatrix forest = ppr::construct_skew_tree(PprSequence::parse("1010100"));
  CHECK(forest.rows() == 6);
  CHECK(forest(0, 1) == 1);
  CHECK(forest(1, 0) == -1);
  CHECK(forest(2, 4) == 1);  // vertex 5 hangs off vertex 3
  CHECK(forest(2, 5) == 1);
  CHECK(roundtrip("1010100", Family::SkewTree).str() == "1010100");

  CHECK((ppr::construct_skew_tree(PprSequence::parse("10")) == ppr::IntMatrix(ppr::IntMatrix::Zero(1, 1))));

  const ppr::IntMatrix pair = ppr::construct_skew_tree(PprSequence::parse("101"));
  CHECK(pair(0, 1) == 1);
  CHECK(pair(1, 0) == -1);
  CHECK(ppr::ppr_sequence(pair).str() == "101");
}

TEST_CASE("enumerate_realizable examples") {
  std::vector<std::string> got;
  for (const PprSequence& s : ppr::enumerate_realizable(2, Family::Nonnegative)) got.push_back(s.str());
  CHECK(got == std::vector<std::string>{"011", "100", "101", "110", "111"});

  got.clear();
  for (const PprSequence& s : ppr::enumerate_realizable(1, Family::SkewTree)) got.push_back(s.str());
  CHECK(got == std::vector<std::string>{"10"});

  got.clear();
  for (const PprSequence& s : ppr::enumerate_realizable(2, Family::SkewTree)) got.push_back(s.str());
  CHECK(got == std::vector<std::string>{"100", "101"});

  CHECK_THROWS_AS(ppr::enumerate_realizable(0, Family::Nonnegative), std::invalid_argument);
}

TEST_CASE("roundtrip soundness at small orders") {
  for (Family family : {Family::Nonnegative, Family::SymmetricNonnegative, Family::SkewTree}) {
    for (int n = 1; n <= 6; ++n) {
      for (const PprSequence& seq : ppr::enumerate_realizable(n, family)) {
        CHECK(roundtrip(seq.str(), family) == seq);
      }
    }
  }
}

TEST_CASE("skew tree theorem on random weighted trees") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const ppr::Digraph tree = ppr::random_tree(n, seed);
    const int mu = ppr::max_matching_tree(tree);

    // random nonzero skew weights on the tree edges
    ppr::IntMatrix a = ppr::IntMatrix::Zero(n, n);
    std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL;
    for (const auto& [u, v] : tree.arcs()) {
      if (u >= v) continue;
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      const int w = 1 + static_cast<int>((state >> 33) % 9);
      a(u - 1, v - 1) = w;
      a(v - 1, u - 1) = -w;
    }
    const PprSequence seq = ppr::ppr_sequence(a);
    for (int k = 1; k <= n; ++k) {
      if (k % 2 == 1)
        CHECK_FALSE(seq.bit(k));
      else
        CHECK(seq.bit(k) == (k <= 2 * mu));
    }
  }
}

TEST_CASE("family names") {
  CHECK(ppr::parse_family("nonnegative") == Family::Nonnegative);
  CHECK(ppr::parse_family("symmetric") == Family::SymmetricNonnegative);
  CHECK(ppr::parse_family("skew-tree") == Family::SkewTree);
  CHECK_THROWS_AS(ppr::parse_family("hermitian"), std::invalid_argument);
  CHECK(ppr::family_name(Family::SkewTree) == "skew-tree");
}
