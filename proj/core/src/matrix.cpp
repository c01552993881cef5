#include "trilocal/matrix.hpp"

#include <sstream>

#include "trilocal/error.hpp"

namespace trilocal {

Matrix::Matrix(const Ring* ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, ring->zero()) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorCode::ShapeMismatch, "negative matrix dimension");
  }
}

Matrix Matrix::identity(const Ring* ring, int n) {
  Matrix out(ring, n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = ring->one();
  return out;
}

Matrix Matrix::scalar(const Ring* ring, int n, RingElem c) {
  Matrix out(ring, n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = c;
  return out;
}

void Matrix::check_ring(const Matrix& other) const {
  if (ring_ != other.ring_) {
    throw Error(ErrorCode::MixedRings, "matrices over different rings");
  }
}

Matrix Matrix::operator+(const Matrix& other) const {
  check_ring(other);
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::ShapeMismatch, "matrix addition shape mismatch");
  }
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] = ring_->add(entries_[k], other.entries_[k]);
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + (-other); }

Matrix Matrix::operator-() const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] = ring_->neg(entries_[k]);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  check_ring(other);
  if (cols_ != other.rows_) {
    throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  }
  Matrix out(ring_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const RingElem aik = at(i, k);
      if (aik == ring_->zero()) continue;
      for (int j = 0; j < other.cols_; ++j) {
        out.at(i, j) = ring_->add(out.at(i, j), ring_->mul(aik, other.at(k, j)));
      }
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!(e == ring_->zero())) return false;
  }
  return true;
}

void Matrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Matrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void Matrix::add_row(int i, int j, RingElem c) {
  for (int k = 0; k < cols_; ++k) {
    at(i, k) = ring_->add(at(i, k), ring_->mul(c, at(j, k)));
  }
}

void Matrix::add_col(int i, int j, RingElem c) {
  for (int k = 0; k < rows_; ++k) {
    at(k, i) = ring_->add(at(k, i), ring_->mul(at(k, j), c));
  }
}

void Matrix::scale_row(int i, RingElem c) {
  for (int k = 0; k < cols_; ++k) at(i, k) = ring_->mul(c, at(i, k));
}

void Matrix::scale_col(int j, RingElem c) {
  for (int k = 0; k < rows_; ++k) at(k, j) = ring_->mul(at(k, j), c);
}

Matrix Matrix::submatrix(const std::vector<int>& row_sel,
                         const std::vector<int>& col_sel) const {
  Matrix out(ring_, static_cast<int>(row_sel.size()),
             static_cast<int>(col_sel.size()));
  for (std::size_t i = 0; i < row_sel.size(); ++i) {
    for (std::size_t j = 0; j < col_sel.size(); ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) = at(row_sel[i], col_sel[j]);
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i > 0) out << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j > 0) out << " ";
      out << ring_->to_string(at(i, j));
    }
  }
  out << "]";
  return out.str();
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) {
    throw Error(ErrorCode::MixedRings, "direct sum over different rings");
  }
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) {
    throw Error(ErrorCode::MixedRings, "augmenting over different rings");
  }
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "augment needs equal row counts");
  }
  Matrix out(a.ring(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) {
    throw Error(ErrorCode::MixedRings, "stacking over different rings");
  }
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "vstack needs equal column counts");
  }
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

Matrix row_vector(const Ring* ring, const std::vector<RingElem>& entries) {
  Matrix out(ring, 1, static_cast<int>(entries.size()));
  for (std::size_t j = 0; j < entries.size(); ++j) {
    out.at(0, static_cast<int>(j)) = entries[j];
  }
  return out;
}

DMatrix::DMatrix(const Field* field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, 0) {}

DMatrix DMatrix::identity(const Field* field, int n) {
  DMatrix out(field, n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

DMatrix DMatrix::operator*(const DMatrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorCode::ShapeMismatch, "d-matrix product shape mismatch");
  }
  DMatrix out(field_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const std::uint32_t aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        out.at(i, j) = field_->add_idx(out.at(i, j),
                                       field_->mul_idx(aik, other.at(k, j)));
      }
    }
  }
  return out;
}

int d_rank(DMatrix a) {
  const Field* f = a.field();
  int rank = 0;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < a.rows(); ++i) {
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(rank, j), a.at(pivot, j));
    const std::uint32_t inv = f->inv_idx(a.at(rank, col));
    for (int j = 0; j < a.cols(); ++j) a.at(rank, j) = f->mul_idx(inv, a.at(rank, j));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == rank || a.at(i, col) == 0) continue;
      const std::uint32_t c = a.at(i, col);
      for (int j = 0; j < a.cols(); ++j) {
        a.at(i, j) = f->add_idx(a.at(i, j),
                                f->neg_idx(f->mul_idx(c, a.at(rank, j))));
      }
    }
    ++rank;
  }
  return rank;
}

DMatrix d_inverse(const DMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::NotInvertible, "non-square residue matrix");
  }
  const Field* f = a.field();
  const int n = a.rows();
  DMatrix work = a;
  DMatrix inv = DMatrix::identity(f, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (work.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      throw Error(ErrorCode::NotInvertible, "singular residue matrix");
    }
    for (int j = 0; j < n; ++j) {
      std::swap(work.at(col, j), work.at(pivot, j));
      std::swap(inv.at(col, j), inv.at(pivot, j));
    }
    const std::uint32_t scale = f->inv_idx(work.at(col, col));
    for (int j = 0; j < n; ++j) {
      work.at(col, j) = f->mul_idx(scale, work.at(col, j));
      inv.at(col, j) = f->mul_idx(scale, inv.at(col, j));
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || work.at(i, col) == 0) continue;
      const std::uint32_t c = work.at(i, col);
      for (int j = 0; j < n; ++j) {
        work.at(i, j) = f->add_idx(work.at(i, j),
                                   f->neg_idx(f->mul_idx(c, work.at(col, j))));
        inv.at(i, j) = f->add_idx(inv.at(i, j),
                                  f->neg_idx(f->mul_idx(c, inv.at(col, j))));
      }
    }
  }
  return inv;
}

}  // namespace trilocal
