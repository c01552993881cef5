#ifndef TRILOCAL_STRUCTURE_HPP
#define TRILOCAL_STRUCTURE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trilocal/ring.hpp"

namespace trilocal {

/// One entry of a structural verification report.
struct PremiseCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample on failure
};

struct PremiseReport {
  std::vector<PremiseCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Checks, by enumeration, that the nonunits form a two-sided ideal, that
/// m^2 = {0}, and that m = Rx = xR for every nonzero x in m. Requires
/// |R| <= 2^12.
PremiseReport verify_premises(const RingPtr& ring);

/// The residue field d = R/m, modeled on the ring's base field with the
/// canonical a0-section as lift. residue_field() verifies exhaustively
/// that the projection is a surjective ring homomorphism with kernel m and
/// that project . lift = id.
struct ResidueField {
  RingPtr ring;
  FieldPtr d;
  FieldElem project(RingElem a) const { return ring->project(a); }
  RingElem lift(FieldElem t) const { return ring->lift(t); }
};

ResidueField residue_field(const RingPtr& ring);

/// The automorphism sigma_x of d defined by x * lift(t) = lift(sigma(t)) * x
/// for a fixed generator x of m. Tables are indexed by field element index.
struct SigmaAut {
  RingPtr ring;
  RingElem x;
  std::vector<std::uint32_t> table;
  std::vector<std::uint32_t> inverse;

  FieldElem apply(FieldElem t) const { return {t.field, table[t.idx]}; }
  FieldElem apply_inv(FieldElem t) const { return {t.field, inverse[t.idx]}; }
  FieldElem apply_pow(FieldElem t, std::uint32_t k) const {
    for (std::uint32_t i = 0; i < k; ++i) t = apply(t);
    return t;
  }
};

/// Builds sigma_x by scanning R for the defining solutions, then verifies
/// the automorphism property, the defining relation, and the inverse
/// relation lift(t) * x = x * lift(sigma^-1(t)). Throws NoSolution if the
/// scan fails (which would mean Rx != xR).
SigmaAut sigma(const RingPtr& ring, RingElem x);

/// Whether sigma_y(t) = sigma_x(r) sigma_x(t) sigma_x(r)^-1 for all t,
/// where y = x * lift(r). Always true by the structure theory; exposed as
/// a self-test.
bool sigma_relation_check(const RingPtr& ring, RingElem x, RingElem y);

struct Centers {
  std::vector<RingElem> z_ring;       // Z(R)
  std::vector<FieldElem> z_d;         // Z(d) (all of d here)
  std::vector<FieldElem> d_prime;     // image of Z(R) in d
  std::vector<FieldElem> sigma_fixed; // fixed points of sigma_x inside Z(d)
};

enum class TriangulationCase { Semisimple, Mixed, Equicharacteristic, None };

const char* case_name(TriangulationCase c);

/// Why no triangulation exists. `failed` lists the broken conditions in the
/// fixed order {m=2R, char=2, condition (a), condition (b), x=-x}; the sign
/// witness (x, -x) is attached whenever x != -x since that is the filler
/// obstruction that rules everything out.
struct Obstruction {
  std::vector<std::string> failed;
  std::optional<std::pair<RingElem, RingElem>> sign_witness;
  std::string detail;

  std::string primary() const;
};

struct Classification {
  TriangulationCase kind = TriangulationCase::None;
  std::optional<RingElem> x;
  std::vector<FieldElem> admissible_r;
  std::optional<Obstruction> obstruction;
};

/// Returns the (x, -x) witness when x != -x, i.e. when no triangulation can
/// exist; empty when x = -x.
std::optional<std::pair<RingElem, RingElem>> sign_obstruction(const RingPtr& ring,
                                                              RingElem x);

/// Cached structural analysis of one ring: premises, residue data, the
/// canonical generator with its sigma tables, centers, classification.
/// Everything downstream (normal forms, triangles, the axiom suite) works
/// through one of these.
class StructureInfo {
 public:
  static std::shared_ptr<const StructureInfo> analyze(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const FieldPtr& d() const { return residue_.d; }
  const PremiseReport& premises() const { return premises_; }
  const Classification& classification() const { return classification_; }
  const Centers& centers() const { return centers_; }

  bool has_radical() const { return sigma_.has_value(); }
  RingElem x() const;
  const SigmaAut& sigma_aut() const;

  FieldElem project(RingElem a) const { return ring_->project(a); }
  RingElem lift(FieldElem t) const { return ring_->lift(t); }

  FieldElem sigma(FieldElem t) const;
  FieldElem sigma_inv(FieldElem t) const;
  FieldElem sigma_pow(FieldElem t, std::uint32_t k) const;

  /// The unique c in d with lift(c) * x = s, for s in m. Exact; verified.
  FieldElem factor_by_x(RingElem s) const;
  /// lift(c) * x.
  RingElem times_x(FieldElem c) const;

 private:
  StructureInfo() = default;

  RingPtr ring_;
  ResidueField residue_;
  PremiseReport premises_;
  std::optional<SigmaAut> sigma_;
  Centers centers_;
  Classification classification_;
};

using StructurePtr = std::shared_ptr<const StructureInfo>;

/// Decides the trichotomy and computes the admissible set
/// { r in d \ {0} : sigma_x(r) = r and sigma_x^3(t) = r^-1 t r for all t }.
Classification classify(const RingPtr& ring);

/// Centers and fixed fields for the diagram Z(R) -> d' -> Z(d)^sigma -> Z(d).
Centers centers(const RingPtr& ring);

/// Number of triangulations: |admissible_r| for the mixed and
/// equicharacteristic cases (cross-checked against the center counts),
/// 1 for the semisimple case, 0 for none.
std::uint64_t count_triangulations(const Classification& cls, const Centers& ctr);
std::uint64_t count_triangulations(const RingPtr& ring);

/// Partition of admissible_r into isomorphism classes: r ~ r' iff some lift
/// of r^-1 r' lies in Z(R). Class count cross-checked against the quotient
/// group order.
std::vector<std::vector<FieldElem>> equivalence_classes(const RingPtr& ring);

/// The pair (x, r) generating one triangulation; r is absent exactly in the
/// semisimple case. Admissibility of r is checked at construction.
struct TriangulationDescriptor {
  StructurePtr info;
  std::optional<FieldElem> r;

  const RingPtr& ring() const { return info->ring(); }
  bool semisimple() const { return !r.has_value(); }
  RingElem x() const { return info->x(); }
  /// lift(r) * x, the third map of the generating triangle.
  RingElem w_elem() const;
};

TriangulationDescriptor make_descriptor(const StructurePtr& info, FieldElem r);
/// Canonical descriptor: least admissible r (none for semisimple rings).
/// Throws InvalidSpec when the ring admits no triangulation.
TriangulationDescriptor canonical_descriptor(const StructurePtr& info);

}  // namespace trilocal

#endif  // TRILOCAL_STRUCTURE_HPP
