#include "ppr/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace ppr {

IndexSet::IndexSet(int universe_, std::vector<int> members_)
    : universe(universe_), members(std::move(members_)) {
  if (universe < 1) throw std::invalid_argument("IndexSet: universe must be >= 1");
  if (members.empty()) throw std::invalid_argument("IndexSet: empty index set");
  if (!std::is_sorted(members.begin(), members.end()) ||
      std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("IndexSet: members must be strictly increasing");
  if (members.front() < 1 || members.back() > universe)
    throw std::invalid_argument("IndexSet: member out of range");
}

bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k < 1 || k > n) throw std::invalid_argument("for_each_subset: k out of range");
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (visit(combo)) return true;
    // advance to the next combination
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
}

IntMatrix principal_submatrix(const IntMatrix& a, const IndexSet& alpha) {
  if (alpha.universe != a.rows())
    throw std::invalid_argument("principal_submatrix: index set universe does not match matrix order");
  const int k = alpha.size();
  IntMatrix out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out(i, j) = a(alpha.members[static_cast<std::size_t>(i)] - 1,
                    alpha.members[static_cast<std::size_t>(j)] - 1);
  return out;
}

IntMatrix pattern_of(const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) != 0 ? 1 : 0;
  return out;
}

bool is_zero_one(const IntMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && a(i, j) != 1) return false;
  return true;
}

IntMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("matrix parse: empty input");
  std::istringstream header(line);
  long long n = 0;
  std::string extra;
  if (!(header >> n) || (header >> extra) || n < 1)
    throw std::runtime_error("matrix parse: first line must be a single integer n >= 1");
  IntMatrix a(n, n);
  for (long long i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("matrix parse: missing row");
    std::istringstream row(line);
    std::string token;
    for (long long j = 0; j < n; ++j) {
      if (!(row >> token)) throw std::runtime_error("matrix parse: short row");
      try {
        a(i, j) = Int(token);
      } catch (const std::exception&) {
        throw std::runtime_error("matrix parse: non-integer token '" + token + "'");
      }
    }
    if (row >> token) throw std::runtime_error("matrix parse: ragged row");
  }
  return a;
}

IntMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& a) {
  std::ostringstream out;
  out << a.rows() << '\n';
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << a(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ppr
