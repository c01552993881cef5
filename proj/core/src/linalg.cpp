#include "trilocal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace trilocal {

DMatrix residue_matrix(const Matrix& a) {
  const Ring* ring = a.ring();
  DMatrix out(ring->base().get(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j).a0;
  }
  return out;
}

bool is_invertible(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  return d_rank(residue_matrix(a)) == a.rows();
}

Matrix invert(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::NotInvertible, "non-square matrix");
  }
  const Ring* ring = a.ring();
  const int n = a.rows();
  DMatrix r_inv = d_inverse(residue_matrix(a));
  Matrix b0(ring, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b0.at(i, j) = ring->lift({ring->base().get(), r_inv.at(i, j)});
    }
  }
  // A*B0 = I - E with E entries in m, so B0*(2I - A*B0) inverts exactly.
  Matrix two_i = Matrix::scalar(ring, n, ring->add(ring->one(), ring->one()));
  Matrix b = b0 * (two_i - a * b0);
  Matrix id = Matrix::identity(ring, n);
  if (!(a * b == id) || !(b * a == id)) {
    throw Error(ErrorCode::Internal, "inverse correction failed");
  }
  return b;
}

Matrix block_form(const StructureInfo& info, int rows, int cols, int m_unit,
                  int m_x) {
  const Ring* ring = info.ring().get();
  Matrix out(ring, rows, cols);
  for (int i = 0; i < m_unit; ++i) out.at(i, i) = ring->one();
  for (int i = 0; i < m_x; ++i) {
    out.at(m_unit + i, m_unit + i) = info.x();
  }
  return out;
}

namespace {

// Pivot scan: first eligible entry in row-major order, or a seeded random
// choice among the eligible ones when shuffling is requested.
template <typename Eligible>
std::optional<std::pair<int, int>> find_pivot(const Matrix& m, int row0, int col0,
                                              Rng* shuffle, Eligible eligible) {
  std::vector<std::pair<int, int>> hits;
  for (int i = row0; i < m.rows(); ++i) {
    for (int j = col0; j < m.cols(); ++j) {
      if (eligible(m.at(i, j))) {
        if (!shuffle) return std::make_pair(i, j);
        hits.emplace_back(i, j);
      }
    }
  }
  if (hits.empty()) return std::nullopt;
  return hits[shuffle->below(hits.size())];
}

}  // namespace

NormalForm normal_form(const StructureInfo& info, const Matrix& a,
                       Rng* pivot_shuffle) {
  const Ring* ring = info.ring().get();
  if (a.ring() != ring) {
    throw Error(ErrorCode::MixedRings, "matrix over a different ring");
  }
  Matrix m = a;
  Matrix u = Matrix::identity(ring, a.rows());
  Matrix v = Matrix::identity(ring, a.cols());

  // Row op L applied to both m and u keeps m = u * a * v; same for column
  // ops applied to m and v.
  auto row_swap = [&](int i, int j) { m.swap_rows(i, j); u.swap_rows(i, j); };
  auto col_swap = [&](int i, int j) { m.swap_cols(i, j); v.swap_cols(i, j); };
  auto row_add = [&](int i, int j, RingElem c) { m.add_row(i, j, c); u.add_row(i, j, c); };
  auto col_add = [&](int i, int j, RingElem c) { m.add_col(i, j, c); v.add_col(i, j, c); };
  auto row_scale = [&](int i, RingElem c) { m.scale_row(i, c); u.scale_row(i, c); };

  // Phase 1: unit pivots build the identity block.
  int rank_unit = 0;
  while (true) {
    auto pivot = find_pivot(m, rank_unit, rank_unit, pivot_shuffle,
                            [&](const RingElem& e) { return ring->is_unit(e); });
    if (!pivot) break;
    row_swap(rank_unit, pivot->first);
    col_swap(rank_unit, pivot->second);
    row_scale(rank_unit, ring->unit_inverse(m.at(rank_unit, rank_unit)));
    for (int i = 0; i < m.rows(); ++i) {
      if (i != rank_unit && !(m.at(i, rank_unit) == ring->zero())) {
        row_add(i, rank_unit, ring->neg(m.at(i, rank_unit)));
      }
    }
    for (int j = 0; j < m.cols(); ++j) {
      if (j != rank_unit && !(m.at(rank_unit, j) == ring->zero())) {
        col_add(j, rank_unit, ring->neg(m.at(rank_unit, j)));
      }
    }
    ++rank_unit;
  }

  // Phase 2: what is left lives in m = xR. Factor entries as lift(c) * x
  // and run Gaussian elimination on the c-matrix over d; column operations
  // move their scalar across x via sigma_x^{-1}.
  int rank_x = 0;
  if (!ring->is_field()) {
    const Field& d = *ring->base();
    while (true) {
      const int base = rank_unit + rank_x;
      auto pivot = find_pivot(m, base, base, pivot_shuffle,
                              [&](const RingElem& e) { return !(e == ring->zero()); });
      if (!pivot) break;
      row_swap(base, pivot->first);
      col_swap(base, pivot->second);
      FieldElem c = info.factor_by_x(m.at(base, base));
      row_scale(base, ring->lift(d.inv(c)));
      for (int i = base + 1; i < m.rows(); ++i) {
        if (!(m.at(i, base) == ring->zero())) {
          FieldElem ci = info.factor_by_x(m.at(i, base));
          row_add(i, base, ring->neg(ring->lift(ci)));
        }
      }
      for (int j = base + 1; j < m.cols(); ++j) {
        if (!(m.at(base, j) == ring->zero())) {
          FieldElem cj = info.factor_by_x(m.at(base, j));
          col_add(j, base, ring->neg(ring->lift(info.sigma_inv(cj))));
        }
      }
      ++rank_x;
    }
  }

  NormalForm nf{std::move(u), std::move(v), rank_unit, rank_x};
  Matrix expect = block_form(info, a.rows(), a.cols(), rank_unit, rank_x);
  if (!(nf.u_op * a * nf.v_op == expect)) {
    throw Error(ErrorCode::Internal, "normal form postcondition failed");
  }
  if (!is_invertible(nf.u_op) || !is_invertible(nf.v_op)) {
    throw Error(ErrorCode::Internal, "normal form transforms not invertible");
  }
  return nf;
}

namespace {

// ---- additive coordinates -------------------------------------------------
//
// Flattens R-linear equations to a linear system over Z/p (fields and
// skewpoly) or Z/p^2 (witt2, free over Z/p^2 on the multiplicative section
// of a basis of k). Both encode and decode are additive group isomorphisms
// onto (Z/p^k)^dim, so solving the flattened system is exactly solving the
// original one.

struct AdditiveCoords {
  const Ring* ring = nullptr;
  std::uint32_t p = 2;
  int digits = 1;  // 1 or 2; modulus = p^digits
  std::uint32_t modulus = 2;
  int dim = 0;
  std::vector<RingElem> basis;

  std::vector<std::uint32_t> encode(RingElem a) const;
  RingElem decode(const std::vector<std::uint32_t>& coords, int offset) const;
};

AdditiveCoords make_coords(const Ring* ring) {
  AdditiveCoords out;
  out.ring = ring;
  const Field& k = *ring->base();
  out.p = k.p();
  const int n = static_cast<int>(k.n());
  switch (ring->family()) {
    case RingFamily::Field: {
      out.digits = 1;
      out.modulus = out.p;
      out.dim = n;
      std::uint32_t idx = 1;
      for (int i = 0; i < n; ++i, idx *= out.p) {
        out.basis.push_back(ring->make(idx, 0));
      }
      break;
    }
    case RingFamily::SkewPoly: {
      out.digits = 1;
      out.modulus = out.p;
      out.dim = 2 * n;
      std::uint32_t idx = 1;
      for (int i = 0; i < n; ++i, idx *= out.p) out.basis.push_back(ring->make(idx, 0));
      idx = 1;
      for (int i = 0; i < n; ++i, idx *= out.p) out.basis.push_back(ring->make(0, idx));
      break;
    }
    case RingFamily::Witt2: {
      out.digits = 2;
      out.modulus = out.p * out.p;
      out.dim = n;
      std::uint32_t idx = 1;
      for (int i = 0; i < n; ++i, idx *= out.p) {
        out.basis.push_back(ring->make(idx, 0));  // multiplicative section
      }
      break;
    }
  }
  return out;
}

std::vector<std::uint32_t> AdditiveCoords::encode(RingElem a) const {
  const Field& k = *ring->base();
  std::vector<std::uint32_t> out(dim, 0);
  switch (ring->family()) {
    case RingFamily::Field: {
      auto c = k.coeffs({&k, a.a0});
      for (int i = 0; i < dim; ++i) out[i] = c[i];
      break;
    }
    case RingFamily::SkewPoly: {
      auto c0 = k.coeffs({&k, a.a0});
      auto c1 = k.coeffs({&k, a.a1});
      const int n = dim / 2;
      for (int i = 0; i < n; ++i) {
        out[i] = c0[i];
        out[n + i] = c1[i];
      }
      break;
    }
    case RingFamily::Witt2: {
      // first digit from the a0 coefficients, second from the p-th root of
      // the leftover radical part
      auto c0 = k.coeffs({&k, a.a0});
      RingElem w0 = ring->zero();
      for (int i = 0; i < dim; ++i) {
        w0 = ring->add(w0, ring->int_mul(c0[i], basis[i]));
      }
      RingElem diff = ring->sub(a, w0);
      if (diff.a0 != 0) {
        throw Error(ErrorCode::Internal, "witt coordinate split failed");
      }
      const std::uint32_t root = k.frobenius_idx(diff.a1, k.n() - 1 == 0 ? 0 : k.n() - 1);
      auto c1 = k.coeffs({&k, root});
      for (int i = 0; i < dim; ++i) out[i] = c0[i] + p * c1[i];
      break;
    }
  }
  return out;
}

RingElem AdditiveCoords::decode(const std::vector<std::uint32_t>& coords,
                                int offset) const {
  RingElem acc = ring->zero();
  for (int i = 0; i < dim; ++i) {
    acc = ring->add(acc, ring->int_mul(coords[offset + i], basis[i]));
  }
  return acc;
}

// ---- linear solving over Z/p^k, k in {1, 2} -------------------------------
//
// Unit-pivot Gauss-Jordan, then p-pivots on the all-divisible remainder.
// This is the two-stage residue-then-correct method in matrix form; the
// diagonalization makes it complete on singular systems as well.

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t modulus) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = modulus, new_r = a % modulus;
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    const std::int64_t next_t = t - quotient * new_t;
    const std::int64_t next_r = r - quotient * new_r;
    t = new_t;
    new_t = next_t;
    r = new_r;
    new_r = next_r;
  }
  if (r != 1) throw Error(ErrorCode::Internal, "non-unit pivot");
  return static_cast<std::uint32_t>((t % modulus + modulus) % modulus);
}

struct ChainPivot {
  int row;
  int col;
  bool unit;
};

std::optional<std::vector<std::uint32_t>> chain_solve(
    std::vector<std::vector<std::uint32_t>>& m, std::vector<std::uint32_t>& rhs,
    std::uint32_t p, int digits, int cols) {
  const std::uint32_t e = digits == 2 ? p * p : p;
  const int rows = static_cast<int>(m.size());

  // column-operation tracker: solution = V * y
  std::vector<std::vector<std::uint32_t>> v(cols, std::vector<std::uint32_t>(cols, 0));
  for (int j = 0; j < cols; ++j) v[j][j] = 1;

  std::vector<bool> row_used(rows, false), col_used(cols, false);
  std::vector<ChainPivot> pivots;

  auto row_submul = [&](int dst, int src, std::uint32_t c) {
    if (c == 0) return;
    for (int j = 0; j < cols; ++j) {
      m[dst][j] = static_cast<std::uint32_t>(
          (m[dst][j] + static_cast<std::uint64_t>(e - c) * m[src][j]) % e);
    }
    rhs[dst] = static_cast<std::uint32_t>(
        (rhs[dst] + static_cast<std::uint64_t>(e - c) * rhs[src]) % e);
  };
  auto col_submul = [&](int dst, int src, std::uint32_t c) {
    if (c == 0) return;
    for (int i = 0; i < rows; ++i) {
      m[i][dst] = static_cast<std::uint32_t>(
          (m[i][dst] + static_cast<std::uint64_t>(e - c) * m[i][src]) % e);
    }
    for (int i = 0; i < cols; ++i) {
      v[i][dst] = static_cast<std::uint32_t>(
          (v[i][dst] + static_cast<std::uint64_t>(e - c) * v[i][src]) % e);
    }
  };
  auto row_scale = [&](int i, std::uint32_t c) {
    for (int j = 0; j < cols; ++j) {
      m[i][j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(m[i][j]) * c % e);
    }
    rhs[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(rhs[i]) * c % e);
  };

  // phase 1: unit pivots
  for (;;) {
    int pr = -1, pc = -1;
    for (int i = 0; i < rows && pr < 0; ++i) {
      if (row_used[i]) continue;
      for (int j = 0; j < cols; ++j) {
        if (!col_used[j] && m[i][j] % p != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr < 0) break;
    row_scale(pr, mod_inverse(m[pr][pc], e));
    for (int i = 0; i < rows; ++i) {
      if (i != pr) row_submul(i, pr, m[i][pc]);
    }
    for (int j = 0; j < cols; ++j) {
      if (j != pc) col_submul(j, pc, m[pr][j]);
    }
    row_used[pr] = true;
    col_used[pc] = true;
    pivots.push_back({pr, pc, true});
  }

  // phase 2: every remaining entry is divisible by p
  if (digits == 2) {
    for (;;) {
      int pr = -1, pc = -1;
      for (int i = 0; i < rows && pr < 0; ++i) {
        if (row_used[i]) continue;
        for (int j = 0; j < cols; ++j) {
          if (!col_used[j] && m[i][j] != 0) {
            pr = i;
            pc = j;
            break;
          }
        }
      }
      if (pr < 0) break;
      // entry = p*t with t a unit mod p; normalize to exactly p
      row_scale(pr, mod_inverse(m[pr][pc] / p, e));
      for (int i = 0; i < rows; ++i) {
        if (i != pr && !row_used[i]) row_submul(i, pr, m[i][pc] / p);
      }
      for (int j = 0; j < cols; ++j) {
        if (j != pc && m[pr][j] != 0) col_submul(j, pc, m[pr][j] / p);
      }
      row_used[pr] = true;
      col_used[pc] = true;
      pivots.push_back({pr, pc, false});
    }
  }

  // consistency of the zero rows
  for (int i = 0; i < rows; ++i) {
    if (!row_used[i] && rhs[i] % e != 0) return std::nullopt;
  }

  std::vector<std::uint32_t> y(cols, 0);
  for (const auto& piv : pivots) {
    if (piv.unit) {
      y[piv.col] = rhs[piv.row];
    } else {
      if (rhs[piv.row] % p != 0) return std::nullopt;
      y[piv.col] = rhs[piv.row] / p;
    }
  }

  std::vector<std::uint32_t> z(cols, 0);
  for (int i = 0; i < cols; ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < cols; ++j) {
      acc += static_cast<std::uint64_t>(v[i][j]) * y[j];
    }
    z[i] = static_cast<std::uint32_t>(acc % e);
  }
  return z;
}

}  // namespace

std::optional<std::vector<RingElem>> solve_scalar_system(
    const Ring* ring, int num_vars, const std::vector<LinearEquation>& eqs) {
  AdditiveCoords coords = make_coords(ring);
  const int dim = coords.dim;
  const int rows = static_cast<int>(eqs.size()) * dim;
  const int cols = num_vars * dim;

  std::vector<std::vector<std::uint32_t>> m(rows, std::vector<std::uint32_t>(cols, 0));
  std::vector<std::uint32_t> rhs(rows, 0);

  for (std::size_t ei = 0; ei < eqs.size(); ++ei) {
    auto rc = coords.encode(eqs[ei].rhs);
    for (int c = 0; c < dim; ++c) rhs[ei * dim + c] = rc[c];
    // sum the contributions per (variable, coordinate) before encoding
    for (int var = 0; var < num_vars; ++var) {
      for (int j = 0; j < dim; ++j) {
        RingElem total = ring->zero();
        bool touched = false;
        for (const auto& term : eqs[ei].terms) {
          if (term.var != var) continue;
          total = ring->add(
              total, ring->mul(ring->mul(term.left, coords.basis[j]), term.right));
          touched = true;
        }
        if (!touched) continue;
        auto tc = coords.encode(total);
        for (int c = 0; c < dim; ++c) {
          m[ei * dim + c][var * dim + j] = tc[c];
        }
      }
    }
  }

  auto z = chain_solve(m, rhs, coords.p, coords.digits, cols);
  if (!z) return std::nullopt;

  std::vector<RingElem> out;
  out.reserve(num_vars);
  for (int var = 0; var < num_vars; ++var) {
    out.push_back(coords.decode(*z, var * dim));
  }

  // substitute back; the flattening is exact so this cannot fail
  for (const auto& eq : eqs) {
    RingElem acc = ring->zero();
    for (const auto& term : eq.terms) {
      acc = ring->add(acc, ring->mul(ring->mul(term.left, out[term.var]), term.right));
    }
    if (!(acc == eq.rhs)) {
      throw Error(ErrorCode::Internal, "scalar system verification failed");
    }
  }
  return out;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& c,
                                   SolveSide side) {
  const Ring* ring = a.ring();
  if (ring != c.ring()) {
    throw Error(ErrorCode::MixedRings, "solve over different rings");
  }
  int xr, xc;
  if (side == SolveSide::Left) {
    // X * A = C: X is (c.rows x a.rows), needs a.cols == c.cols
    if (a.cols() != c.cols()) {
      throw Error(ErrorCode::ShapeMismatch, "X*A = C needs matching columns");
    }
    xr = c.rows();
    xc = a.rows();
  } else {
    // A * X = C: X is (a.cols x c.cols), needs a.rows == c.rows
    if (a.rows() != c.rows()) {
      throw Error(ErrorCode::ShapeMismatch, "A*X = C needs matching rows");
    }
    xr = a.cols();
    xc = c.cols();
  }

  auto var_of = [&](int i, int j) { return i * xc + j; };
  std::vector<LinearEquation> eqs;
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < c.cols(); ++j) {
      LinearEquation eq;
      eq.rhs = c.at(i, j);
      if (side == SolveSide::Left) {
        // sum_k X[i][k] * A[k][j]
        for (int k = 0; k < xc; ++k) {
          eq.terms.push_back({var_of(i, k), ring->one(), a.at(k, j)});
        }
      } else {
        // sum_k A[i][k] * X[k][j]
        for (int k = 0; k < xr; ++k) {
          eq.terms.push_back({var_of(k, j), a.at(i, k), ring->one()});
        }
      }
      eqs.push_back(std::move(eq));
    }
  }

  auto sol = solve_scalar_system(ring, xr * xc, eqs);
  if (!sol) return std::nullopt;
  Matrix x(ring, xr, xc);
  for (int i = 0; i < xr; ++i) {
    for (int j = 0; j < xc; ++j) x.at(i, j) = (*sol)[var_of(i, j)];
  }
  // direct substitution check
  Matrix check = (side == SolveSide::Left) ? x * a : a * x;
  if (!(check == c)) {
    throw Error(ErrorCode::Internal, "solve_linear verification failed");
  }
  return x;
}

namespace {

std::uint32_t bits_for(std::uint64_t size) {
  std::uint32_t bits = 0;
  while ((1ull << bits) < size) ++bits;
  return bits;
}

}  // namespace

bool exactness_check(const Matrix& a, const Matrix& b) {
  const Ring* ring = a.ring();
  if (ring != b.ring()) {
    throw Error(ErrorCode::MixedRings, "exactness over different rings");
  }
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "junction shapes do not compose");
  }
  if (!(a * b).is_zero()) {
    throw Error(ErrorCode::InvalidSpec, "junction composite is nonzero");
  }
  const std::uint64_t size = ring->size();
  const double limit = 20.0;  // |R|^rank <= 2^20
  auto too_large = [&](int rank) {
    return rank * std::log2(static_cast<double>(size)) > limit;
  };
  if (too_large(a.rows()) || too_large(a.cols())) {
    throw Error(ErrorCode::TooLarge, "exactness enumeration exceeds 2^20");
  }

  const std::uint32_t bits = bits_for(size);
  const int mid = a.cols();

  auto pack = [&](const Matrix& row) {
    std::uint64_t key = 0;
    for (int j = 0; j < row.cols(); ++j) {
      key |= ring->index_of(row.at(0, j)) << (bits * j);
    }
    return key;
  };

  // kernel of (. * B) inside R^mid
  std::unordered_set<std::uint64_t> kernel;
  {
    std::vector<std::uint64_t> odo(mid, 0);
    Matrix vec(ring, 1, mid);
    for (;;) {
      for (int j = 0; j < mid; ++j) vec.at(0, j) = ring->from_index(odo[j]);
      if ((vec * b).is_zero()) kernel.insert(pack(vec));
      int pos = 0;
      while (pos < mid && ++odo[pos] == size) odo[pos++] = 0;
      if (pos == mid) break;
    }
  }

  // image of (. * A); always contained in the kernel, so equality is a
  // cardinality check
  std::unordered_set<std::uint64_t> image;
  {
    const int src = a.rows();
    std::vector<std::uint64_t> odo(src, 0);
    Matrix vec(ring, 1, src);
    for (;;) {
      for (int j = 0; j < src; ++j) vec.at(0, j) = ring->from_index(odo[j]);
      Matrix img = vec * a;
      std::uint64_t key = pack(img);
      if (!kernel.count(key)) {
        throw Error(ErrorCode::Internal, "image escaped the kernel");
      }
      image.insert(key);
      int pos = 0;
      while (pos < src && ++odo[pos] == size) odo[pos++] = 0;
      if (pos == src) break;
    }
  }

  return image.size() == kernel.size();
}

}  // namespace trilocal
