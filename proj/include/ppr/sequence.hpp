#ifndef PPR_SEQUENCE_HPP
#define PPR_SEQUENCE_HPP

#include <string>
#include <vector>

#include "ppr/matrix.hpp"

namespace ppr {

/// Binary sequence r0 r1 ... rn. r0 = 1 records a zero diagonal entry;
/// rk (k >= 1) records a k-by-k principal submatrix with nonzero permanent.
class PprSequence {
 public:
  explicit PprSequence(std::vector<bool> bits);

  /// Matrix order n; the sequence has n+1 bits.
  int order() const { return static_cast<int>(bits_.size()) - 1; }
  bool bit(int k) const { return bits_.at(static_cast<std::size_t>(k)); }
  const std::vector<bool>& bits() const { return bits_; }

  std::string str() const;
  /// Parses a '0'/'1' string, leftmost character = r0. Throws
  /// std::invalid_argument on other characters or length < 2.
  static PprSequence parse(const std::string& text);

  bool operator==(const PprSequence& other) const = default;
  bool operator<(const PprSequence& other) const { return bits_ < other.bits_; }

 private:
  std::vector<bool> bits_;
};

PprSequence ppr_sequence(const IntMatrix& a);

/// Largest k with rk = 1 over principal submatrices, 0 when none.
int perrank(const IntMatrix& a);

bool sequences_equal(const PprSequence& p, const PprSequence& q);

}  // namespace ppr

#endif  // PPR_SEQUENCE_HPP
