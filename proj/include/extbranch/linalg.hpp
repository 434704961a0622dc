#ifndef EXTBRANCH_LINALG_HPP
#define EXTBRANCH_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "extbranch/rational.hpp"

namespace extbranch {

// Dense matrix over the exact rationals. Row-major; rows() x cols().
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Rat& s) const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  Mat transpose() const;
  // Horizontal/vertical stacking.
  static Mat hstack(const Mat& l, const Mat& r);
  static Mat vstack(const Mat& t, const Mat& b);
  // Kronecker product (tensor of linear maps, row-major pair ordering).
  static Mat kronecker(const Mat& l, const Mat& r);

  std::size_t rank() const;
  // Basis of the right nullspace, as columns of the returned matrix.
  Mat nullspace() const;
  // Column span basis (subset of columns reduced to echelon form), as columns.
  Mat column_space() const;
  std::optional<Mat> inverse() const;
  // One solution x of A x = b, if any.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Row space manipulation helper: maintains an echelonized basis of a
// subspace of Q^dim and answers membership / reduction queries.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  // Adds a vector; returns true if it enlarged the space.
  bool add(std::vector<Rat> v);
  // Reduces v against the basis; result is zero iff v is in the space.
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  bool contains(const std::vector<Rat>& v) const;

  const std::vector<std::vector<Rat>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Indices of standard basis vectors completing this space to Q^dim.
  std::vector<std::size_t> complement() const;

 private:
  std::size_t dim_;
  std::vector<std::vector<Rat>> rows_;   // echelonized, pivot-normalized
  std::vector<std::size_t> pivots_;
};

}  // namespace extbranch

#endif
