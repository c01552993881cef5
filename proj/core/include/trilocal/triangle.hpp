#ifndef TRILOCAL_TRIANGLE_HPP
#define TRILOCAL_TRIANGLE_HPP

#include <cstdint>
#include <optional>

#include "trilocal/linalg.hpp"

namespace trilocal {

/// A triangle X -> Y -> Z -> X (the translation is the identity, so the
/// fourth object is X again). Consecutive composites are zero; this is
/// enforced at construction.
struct Triangle {
  Matrix u;  // a x b
  Matrix v;  // b x c
  Matrix w;  // c x a

  const Ring* ring() const { return u.ring(); }
  int rank_x() const { return u.rows(); }
  int rank_y() const { return u.cols(); }
  int rank_z() const { return v.cols(); }
};

Triangle make_triangle(Matrix u, Matrix v, Matrix w);
Triangle zero_triangle(const Ring* ring);

/// A morphism of triangles: three commuting squares (with identity
/// translation, the fourth component equals the first).
struct TriangleMorphism {
  Triangle source;
  Triangle target;
  Matrix f;  // X -> X'
  Matrix g;  // Y -> Y'
  Matrix h;  // Z -> Z'
};

TriangleMorphism make_morphism(Triangle source, Triangle target, Matrix f,
                               Matrix g, Matrix h);
/// The commuting-square conditions, without throwing.
bool morphism_commutes(const Triangle& source, const Triangle& target,
                       const Matrix& f, const Matrix& g, const Matrix& h);
TriangleMorphism identity_morphism(const Triangle& t);
TriangleMorphism zero_morphism(const Triangle& source, const Triangle& target);
/// Componentwise composition (first a, then b).
TriangleMorphism compose(const TriangleMorphism& a, const TriangleMorphism& b);
/// Inverse of an isomorphism of triangles. Throws NotInvertible.
TriangleMorphism invert_morphism(const TriangleMorphism& iso);
bool is_isomorphism(const TriangleMorphism& m);
TriangleMorphism morphism_direct_sum(const TriangleMorphism& a,
                                     const TriangleMorphism& b);

/// A homotopy between two morphisms phi, phi' with the same source and
/// target: Theta: Y -> X', Phi: Z -> Y', Psi: X -> Z'.
struct Homotopy {
  Matrix theta;
  Matrix phi;
  Matrix psi;
};

/// The three homotopy identities, checked exactly:
///   g - g' = v Phi + Theta u',  h - h' = w Psi + Phi v',
///   f - f' = u Theta + Psi w'.
bool is_homotopy(const TriangleMorphism& a, const TriangleMorphism& b,
                 const Homotopy& h);

/// phi shifted by the homotopy H: the unique phi' with
/// is_homotopy(phi, phi', H). The result is again a morphism of triangles.
TriangleMorphism apply_homotopy(const TriangleMorphism& phi, const Homotopy& h);

/// Generating triangle Delta^r of rank n: (.x, .x, .(lift(r) x)) on R^n.
Triangle delta_triangle(const TriangulationDescriptor& desc, int n);

/// The three rotation shapes of the elementary contractible triangle:
/// 1: (I, 0, 0) on (n, n, 0); 2: (0, I, 0) on (0, n, n);
/// 3: (0, 0, I) on (n, 0, n).
Triangle elementary_contractible(const Ring* ring, int shape, int n);
/// An explicit nullhomotopy of an elementary contractible.
Homotopy elementary_nullhomotopy(const Ring* ring, int shape, int n);

/// Rotation (v, w, -u) on (b, c, a); the negation is entrywise and is a
/// real sign in mixed characteristic.
Triangle rotate(const Triangle& t);

Triangle triangle_direct_sum(const Triangle& a, const Triangle& b);

/// The mapping cone of a morphism, with the signed block matrices
/// [[-v, g], [0, u']] / [[-w, h], [0, v']] / [[-u, f], [0, w']]
/// written in row-vector convention.
Triangle mapping_cone(const TriangleMorphism& phi);

/// A homotopy witnessing phi ~ phi', or nullopt. Exact and complete (the
/// equations are linear over R).
std::optional<Homotopy> solve_homotopy(const TriangleMorphism& a,
                                       const TriangleMorphism& b);
/// Nullhomotopy of the identity; a triangle is contractible iff this
/// succeeds.
std::optional<Homotopy> nullhomotopy_solve(const Triangle& t);

/// How a distinguished triangle decomposes: counts of the generating and
/// elementary summands, plus the isomorphism from the canonical direct sum
///   Delta(delta_rank) + E1(e1) + E2(e2) + E3(e3)
/// onto the witnessed triangle.
struct DistinguishedWitness {
  int delta_rank = 0;
  int e1 = 0;
  int e2 = 0;
  int e3 = 0;
  TriangleMorphism iso;
};

/// The canonical direct sum triangle for given multiplicities.
Triangle standard_sum(const TriangulationDescriptor& desc, int delta_rank,
                      int e1, int e2, int e3);

constexpr std::uint64_t kDefaultBudget = 1u << 20;

/// Witness-producing membership test: canonicalize the three maps, split
/// elementary summands greedily, and close with the residual Delta block
/// (decided exactly through the sigma_x^3 similarity equation). The
/// bounded search only runs when sigma^3 is not the identity; exceeding
/// its budget raises BudgetExceeded, distinct from a definite negative.
std::optional<DistinguishedWitness> is_distinguished(
    const Triangle& t, const TriangulationDescriptor& desc,
    std::uint64_t budget = kDefaultBudget);

/// A.1: the completed distinguished triangle with first map exactly f,
/// built through the finite-rank normal form, plus its witness.
std::pair<Triangle, DistinguishedWitness> complete_morphism(
    const Matrix& f, const TriangulationDescriptor& desc,
    std::uint64_t budget = kDefaultBudget);

/// A.3: given the commuting first square (alpha, beta) between two
/// distinguished triangles with witnesses, construct a verified filler.
/// Delta-to-Delta blocks use the sigma^-1 lift rule; blocks touching a
/// contractible side use the nullhomotopy corrections, with the paper-level
/// injectivity replaced by exact linear solving. Throws NoFiller if the
/// assembled candidate fails verification (an axiom-violation signal).
TriangleMorphism fill_square(const TriangulationDescriptor& desc,
                             const Triangle& t1, const DistinguishedWitness& w1,
                             const Triangle& t2, const DistinguishedWitness& w2,
                             const Matrix& alpha, const Matrix& beta);

}  // namespace trilocal

#endif  // TRILOCAL_TRIANGLE_HPP
