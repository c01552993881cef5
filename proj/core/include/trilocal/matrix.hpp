#ifndef TRILOCAL_MATRIX_HPP
#define TRILOCAL_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "trilocal/ring.hpp"

namespace trilocal {

/// Homomorphism of finitely generated free left R-modules, row-vector
/// convention: an element of R^a is a row, the map R^a -> R^b is
/// v -> v * A with A of shape a x b, and "f then g" has matrix A * B.
/// Right multiplication keeps the maps left-linear over noncommutative R.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Ring* ring, int rows, int cols);

  static Matrix identity(const Ring* ring, int n);
  /// c * I_n as a map (each basis vector sent to c times itself).
  static Matrix scalar(const Ring* ring, int n, RingElem c);

  const Ring* ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  RingElem& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const RingElem& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const;

  bool is_zero() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  /// row_i += c * row_j (left coefficient).
  void add_row(int i, int j, RingElem c);
  /// col_i += col_j * c (right coefficient).
  void add_col(int i, int j, RingElem c);
  /// row_i = c * row_i.
  void scale_row(int i, RingElem c);
  /// col_j = col_j * c.
  void scale_col(int j, RingElem c);

  Matrix submatrix(const std::vector<int>& row_sel,
                   const std::vector<int>& col_sel) const;

  std::string to_string() const;

 private:
  void check_ring(const Matrix& other) const;

  const Ring* ring_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<RingElem> entries_;
};

Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Horizontal concatenation [a | b].
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Row vector of length n over the ring, as a 1 x n matrix.
Matrix row_vector(const Ring* ring, const std::vector<RingElem>& entries);

/// Matrix over the residue field d, same row-vector convention.
class DMatrix {
 public:
  DMatrix() = default;
  DMatrix(const Field* field, int rows, int cols);

  static DMatrix identity(const Field* field, int n);

  const Field* field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t& at(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  std::uint32_t at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  DMatrix operator*(const DMatrix& other) const;
  bool operator==(const DMatrix& other) const = default;

 private:
  const Field* field_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> entries_;
};

/// Rank over d by Gaussian elimination.
int d_rank(DMatrix a);
/// Inverse over d; throws NotInvertible.
DMatrix d_inverse(const DMatrix& a);

}  // namespace trilocal

#endif  // TRILOCAL_MATRIX_HPP
