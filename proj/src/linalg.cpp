#include "extbranch/linalg.hpp"

#include <stdexcept>

namespace extbranch {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.assign(rows_ * cols_, Rat(0));
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) at(i, j++) = Rat(v);
    ++i;
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::operator*(const Rat& s) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  std::vector<Rat> r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::hstack(const Mat& l, const Mat& r) {
  if (l.rows() != r.rows()) throw std::invalid_argument("hstack shape mismatch");
  Mat m(l.rows(), l.cols() + r.cols());
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) m.at(i, j) = l.at(i, j);
    for (std::size_t j = 0; j < r.cols(); ++j) m.at(i, l.cols() + j) = r.at(i, j);
  }
  return m;
}

Mat Mat::vstack(const Mat& t, const Mat& b) {
  if (t.cols() != b.cols()) throw std::invalid_argument("vstack shape mismatch");
  Mat m(t.rows() + b.rows(), t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) m.at(i, j) = t.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(t.rows() + i, j) = b.at(i, j);
  return m;
}

Mat Mat::kronecker(const Mat& l, const Mat& r) {
  Mat m(l.rows() * r.rows(), l.cols() * r.cols());
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) {
      if (l.at(i, j) == 0) continue;
      for (std::size_t p = 0; p < r.rows(); ++p)
        for (std::size_t q = 0; q < r.cols(); ++q)
          m.at(i * r.rows() + p, j * r.cols() + q) = l.at(i, j) * r.at(p, q);
    }
  return m;
}

namespace {

// Gaussian elimination to row echelon form; returns pivot column per row.
std::vector<std::size_t> echelonize(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    Rat inv = Rat(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t Mat::rank() const {
  Mat m = *this;
  return echelonize(m).size();
}

Mat Mat::nullspace() const {
  Mat m = *this;
  std::vector<std::size_t> pivots = echelonize(m);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat basis(cols_, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.at(fc, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], k) = -m.at(r, fc);
  }
  return basis;
}

Mat Mat::column_space() const {
  Mat m = *this;
  std::vector<std::size_t> pivots = echelonize(m);
  Mat basis(rows_, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) basis.at(i, k) = at(i, pivots[k]);
  return basis;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Mat aug = hstack(*this, identity(rows_));
  std::vector<std::size_t> pivots = echelonize(aug);
  if (pivots.size() != rows_) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    if (pivots[i] != i) return std::nullopt;
  Mat inv(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, rows_ + j);
  return inv;
}

std::optional<std::vector<Rat>> Mat::solve(const std::vector<Rat>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("solve shape mismatch");
  Mat aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<std::size_t> pivots = echelonize(aug);
  for (std::size_t p : pivots)
    if (p == cols_) return std::nullopt;  // inconsistent system
  std::vector<Rat> x(cols_, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

bool RowSpace::add(std::vector<Rat> v) {
  if (v.size() != dim_) throw std::invalid_argument("rowspace dim mismatch");
  v = reduce(std::move(v));
  std::size_t piv = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    if (v[j] != 0) { piv = j; break; }
  if (piv == dim_) return false;
  Rat inv = Rat(1) / v[piv];
  for (auto& x : v) x *= inv;
  // Back-substitute into existing rows so the basis stays fully reduced.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = rows_[r][piv];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) rows_[r][j] -= f * v[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

std::vector<Rat> RowSpace::reduce(std::vector<Rat> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = v[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool RowSpace::contains(const std::vector<Rat>& v) const {
  std::vector<Rat> r = reduce(v);
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

std::vector<std::size_t> RowSpace::complement() const {
  std::vector<bool> is_pivot(dim_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < dim_; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

}  // namespace extbranch
