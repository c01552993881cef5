#ifndef TRILOCAL_LINALG_HPP
#define TRILOCAL_LINALG_HPP

#include <optional>

#include "trilocal/matrix.hpp"
#include "trilocal/rng.hpp"
#include "trilocal/structure.hpp"

namespace trilocal {

/// Entrywise projection to the residue field.
DMatrix residue_matrix(const Matrix& a);

/// Invertible over R iff the residue matrix is invertible over d (m is the
/// Jacobson radical and m^2 = 0).
bool is_invertible(const Matrix& a);

/// Lifts a residue inverse B0 and corrects once: B = B0 (2I - A B0).
/// The correction is exact because the error E = I - A B0 has entries in m
/// and E^2 = 0. Verified on both sides; throws NotInvertible.
Matrix invert(const Matrix& a);

/// U * A * V = diag(I_{m_unit}, x I_{m_x}, 0) with U, V invertible.
struct NormalForm {
  Matrix u_op;  // rows x rows
  Matrix v_op;  // cols x cols
  int m_unit = 0;
  int m_x = 0;
};

/// The padded block matrix diag(I_{m_unit}, x I_{m_x}, 0) of a given shape.
Matrix block_form(const StructureInfo& info, int rows, int cols, int m_unit,
                  int m_x);

/// Two-phase reduction: unit pivots clear an identity block, then the
/// remaining entries (all in m = xR) are factored as lift(c) * x and the
/// c-matrix is reduced over d, moving scalars across x with the sigma_x
/// tables. Pivots are chosen first-in-row-major order; pass an Rng to
/// randomize eligible pivot choice (the multiplicities must not change).
NormalForm normal_form(const StructureInfo& info, const Matrix& a,
                       Rng* pivot_shuffle = nullptr);

enum class SolveSide { Left, Right };

/// One exact solution of X*A = C (Left) or A*X = C (Right), or nullopt if
/// none exists. Exactness and completeness come from flattening to a linear
/// system over Z/p (or Z/p^2 for witt2, solved by unit-then-p pivot
/// elimination, i.e. residue solving plus one correction digit).
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& c,
                                   SolveSide side);

/// Whether image(. * A) = kernel(. * B) inside R^b for A: a x b, B: b x c.
/// Requires A * B = 0 and |R|^a, |R|^b <= 2^20 (both sides are enumerated).
bool exactness_check(const Matrix& a, const Matrix& b);

/// Shared backend: a system of R-linear equations
///   sum_k  left_k * X_{var_k} * right_k = rhs   (one equation per entry)
/// in scalar unknowns X_0..X_{num_vars-1}, solved exactly over R.
struct LinearTerm {
  int var;
  RingElem left;
  RingElem right;
};
struct LinearEquation {
  std::vector<LinearTerm> terms;
  RingElem rhs;
};
std::optional<std::vector<RingElem>> solve_scalar_system(
    const Ring* ring, int num_vars, const std::vector<LinearEquation>& eqs);

}  // namespace trilocal

#endif  // TRILOCAL_LINALG_HPP
