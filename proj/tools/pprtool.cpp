// pprtool: compute, check, realize, verify, and enumerate principal
// permanent rank characteristic sequences.
//
// Exit codes: 0 success / realizable / verified, 1 domain-negative
// (not realizable, roundtrip mismatch), 2 usage or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ppr/graph.hpp"
#include "ppr/matrix.hpp"
#include "ppr/oracles.hpp"
#include "ppr/realize.hpp"
#include "ppr/sequence.hpp"

namespace {

constexpr int kDefaultOrderCap = 20;  // permanents cost 2^n; guard desk-scale use

ppr::IntMatrix read_matrix(const std::string& path) {
  if (path == "-") return ppr::parse_matrix(std::cin);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  return ppr::parse_matrix(file);
}

std::string classification_line(const ppr::FamilyClassification& c) {
  std::ostringstream out;
  if (!c.realizable) {
    out << "NOT-REALIZABLE " << c.reason;
    return out.str();
  }
  out << "REALIZABLE";
  if (c.shape == ppr::SequenceShape::OddWindow)
    out << " l=" << c.ell << " k=" << c.k << " m=" << c.m;
  else if (c.shape == ppr::SequenceShape::EvenOnly)
    out << " m=" << c.m;
  return out.str();
}

// Witness for a realizable sequence, as a matrix plus its underlying graph.
struct Witness {
  ppr::IntMatrix matrix;
  ppr::Digraph graph;
};

Witness build_witness(const ppr::PprSequence& seq, ppr::Family family) {
  switch (family) {
    case ppr::Family::Nonnegative: {
      ppr::Digraph g = ppr::construct_nonnegative(seq);
      return {ppr::to_pattern(g), g};
    }
    case ppr::Family::SymmetricNonnegative: {
      ppr::Digraph g = ppr::construct_symmetric(seq);
      return {ppr::to_pattern(g), g};
    }
    case ppr::Family::SkewTree: {
      ppr::IntMatrix a = ppr::construct_skew_tree(seq);
      return {a, ppr::from_pattern(ppr::pattern_of(a))};
    }
  }
  throw std::logic_error("unknown family");
}

int cmd_compute(const std::string& path, bool show_perrank, int max_order) {
  const ppr::IntMatrix a = read_matrix(path);
  if (a.rows() > max_order) {
    std::cerr << "error: order " << a.rows() << " exceeds the cap of " << max_order
              << " (raise with --max-order)\n";
    return 2;
  }
  std::cout << ppr::ppr_sequence(a).str() << '\n';
  if (show_perrank) std::cout << ppr::perrank(a) << '\n';
  return 0;
}

int cmd_check(const std::string& literal, ppr::Family family) {
  const ppr::PprSequence seq = ppr::PprSequence::parse(literal);
  const ppr::FamilyClassification c = ppr::classify(seq, family);
  std::cout << classification_line(c) << '\n';
  return c.realizable ? 0 : 1;
}

int cmd_realize(const std::string& literal, ppr::Family family, bool dot, bool verify) {
  const ppr::PprSequence seq = ppr::PprSequence::parse(literal);
  const ppr::FamilyClassification c = ppr::classify(seq, family);
  if (!c.realizable) {
    std::cerr << classification_line(c) << '\n';
    return 1;
  }
  const Witness w = build_witness(seq, family);
  if (verify && ppr::ppr_sequence(w.matrix) != seq) {
    std::cerr << "error: witness failed the ppr roundtrip\n";
    return 1;
  }
  std::cout << ppr::format_matrix(w.matrix);
  if (dot) std::cout << ppr::to_dot(w.graph);
  return 0;
}

int cmd_verify(const std::string& literal, ppr::Family family) {
  const ppr::PprSequence seq = ppr::PprSequence::parse(literal);
  const ppr::FamilyClassification c = ppr::classify(seq, family);
  if (!c.realizable) {
    std::cout << classification_line(c) << '\n';
    return 1;
  }
  const Witness w = build_witness(seq, family);
  const ppr::PprSequence actual = ppr::ppr_sequence(w.matrix);
  if (actual != seq) {
    std::cout << "MISMATCH expected " << seq.str() << " got " << actual.str() << '\n';
    return 1;
  }
  std::cout << "OK\n";
  return 0;
}

int cmd_enumerate(int n, ppr::Family family, bool exhaustive, int max_order) {
  if (exhaustive) {
    const int cap = std::max(ppr::exhaustion_cap(family), max_order == kDefaultOrderCap ? 0 : max_order);
    if (n > cap) {
      std::cerr << "error: --exhaustive at order " << n << " exceeds the cap of "
                << ppr::exhaustion_cap(family) << " (raise with --max-order)\n";
      return 2;
    }
  }
  const std::vector<ppr::PprSequence> claimed = ppr::enumerate_realizable(n, family);
  for (const ppr::PprSequence& seq : claimed) std::cout << seq.str() << '\n';
  if (exhaustive) {
    const std::set<ppr::PprSequence> truth =
        ppr::exhaustive_sequences({n, family}, /*override_cap=*/true);
    const std::set<ppr::PprSequence> claimed_set(claimed.begin(), claimed.end());
    std::cout << (claimed_set == truth ? "MATCH" : "MISMATCH") << '\n';
    if (claimed_set != truth) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"principal permanent rank sequence toolkit"};
  app.require_subcommand(1);

  std::string matrix_path, sequence_literal, family_name = "nonnegative";
  bool show_perrank = false, dot = false, verify = false, exhaustive = false;
  int n = 1;
  int max_order = kDefaultOrderCap;

  auto* compute = app.add_subcommand("compute", "ppr-sequence of a matrix file ('-' for stdin)");
  compute->add_option("matrix", matrix_path)->required();
  compute->add_flag("--perrank", show_perrank, "also print the principal permanent rank");
  compute->add_option("--max-order", max_order, "override the order cap");

  auto* check = app.add_subcommand("check", "classify a sequence for a family");
  check->add_option("sequence", sequence_literal)->required();
  check->add_option("--family", family_name)->required();

  auto* realize = app.add_subcommand("realize", "construct a witness matrix");
  realize->add_option("sequence", sequence_literal)->required();
  realize->add_option("--family", family_name)->required();
  realize->add_flag("--dot", dot, "also emit the underlying graph as DOT");
  realize->add_flag("--verify", verify, "recompute the ppr-sequence before printing");

  auto* verify_cmd = app.add_subcommand("verify", "classify, construct, and roundtrip a sequence");
  verify_cmd->add_option("sequence", sequence_literal)->required();
  verify_cmd->add_option("--family", family_name)->required();

  auto* enumerate = app.add_subcommand("enumerate", "all realizable sequences of order n");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--family", family_name)->required();
  enumerate->add_flag("--exhaustive", exhaustive, "cross-check against the brute-force oracle");
  enumerate->add_option("--max-order", max_order, "override the oracle exhaustion cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    const ppr::Family family = ppr::parse_family(family_name);
    if (compute->parsed()) return cmd_compute(matrix_path, show_perrank, max_order);
    if (check->parsed()) return cmd_check(sequence_literal, family);
    if (realize->parsed()) return cmd_realize(sequence_literal, family, dot, verify);
    if (verify_cmd->parsed()) return cmd_verify(sequence_literal, family);
    if (enumerate->parsed()) return cmd_enumerate(n, family, exhaustive, max_order);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
