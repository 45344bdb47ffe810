#ifndef PPR_MATRIX_HPP
#define PPR_MATRIX_HPP

#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

// Boost.Multiprecision's is_byte_container trait is not SFINAE-safe for Eigen
// expression types (their const_iterator is void), so cpp_int's converting
// constructor hard-errors inside is_convertible checks. Short-circuit the
// trait for the Eigen templates that can reach it.
namespace boost { namespace multiprecision { namespace detail {

template <class Scalar, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<Scalar, R, C, O, MR, MC>> : public boost::false_type {};
template <class D>
struct is_byte_container<Eigen::MatrixBase<D>> : public boost::false_type {};
template <class D>
struct is_byte_container<Eigen::DenseBase<D>> : public boost::false_type {};
template <class Op, class M>
struct is_byte_container<Eigen::CwiseNullaryOp<Op, M>> : public boost::false_type {};
template <class Op, class M>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, M>> : public boost::false_type {};
template <class Op, class L, class R>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, R>> : public boost::false_type {};
template <class M>
struct is_byte_container<Eigen::Transpose<M>> : public boost::false_type {};
template <class L, class R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> : public boost::false_type {};
template <class M, int R, int C, bool P>
struct is_byte_container<Eigen::Block<M, R, C, P>> : public boost::false_type {};

}}}  // namespace boost::multiprecision::detail

namespace ppr {

/// Exact signed integer scalar; permanents are computed without overflow.
using Int = boost::multiprecision::cpp_int;

/// Dense square matrix of exact integers.
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// A subset of [1, n], kept sorted and duplicate-free.
struct IndexSet {
  int universe = 0;
  std::vector<int> members;  // 1-based, strictly increasing

  IndexSet(int universe, std::vector<int> members);

  int size() const { return static_cast<int>(members.size()); }
};

/// All size-k subsets of [1, n] in lexicographic order. The callback
/// returns true to stop early; the function reports whether it stopped.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit);

/// A[alpha]: rows and columns restricted to the same index set.
IntMatrix principal_submatrix(const IntMatrix& a, const IndexSet& alpha);

/// The (0,1) matrix marking nonzero entries of A.
IntMatrix pattern_of(const IntMatrix& a);

bool is_zero_one(const IntMatrix& a);

/// Text format: first line n, then n rows of n signed integers.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& a);

}  // namespace ppr

#endif  // PPR_MATRIX_HPP
