#include "ppr/sequence.hpp"

#include <stdexcept>

#include "ppr/permanent.hpp"

namespace ppr {

PprSequence::PprSequence(std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.size() < 2) throw std::invalid_argument("PprSequence: need at least r0 and r1");
}

std::string PprSequence::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

PprSequence PprSequence::parse(const std::string& text) {
  if (text.size() < 2)
    throw std::invalid_argument("sequence parse: need at least two characters (r0 r1)");
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("sequence parse: invalid character");
    bits.push_back(c == '1');
  }
  return PprSequence(std::move(bits));
}

PprSequence ppr_sequence(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<bool> bits(static_cast<std::size_t>(n) + 1, false);
  for (int i = 0; i < n; ++i)
    if (a(i, i) == 0) bits[0] = true;
  for (int k = 1; k <= n; ++k) {
    bits[static_cast<std::size_t>(k)] = for_each_subset(n, k, [&](const std::vector<int>& alpha) {
      return permanent_ryser(principal_submatrix(a, IndexSet(n, alpha))) != 0;
    });
  }
  return PprSequence(std::move(bits));
}

int perrank(const IntMatrix& a) {
  const PprSequence seq = ppr_sequence(a);
  for (int k = seq.order(); k >= 1; --k)
    if (seq.bit(k)) return k;
  return 0;
}

bool sequences_equal(const PprSequence& p, const PprSequence& q) { return p == q; }

}  // namespace ppr
