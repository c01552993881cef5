#ifndef TRILOCAL_RING_HPP
#define TRILOCAL_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trilocal/gf.hpp"

namespace trilocal {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingFamily { Field, Witt2, SkewPoly };

const char* family_name(RingFamily family);

/// Construction recipe for one of the three finite local ring families:
/// a finite field k, the length-2 Witt vectors W2(k), or the skew
/// polynomial quotient k[X;tau]/(X^2) with tau = Frobenius^aut_exponent.
struct RingSpec {
  RingFamily family = RingFamily::Field;
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  std::uint32_t aut_exponent = 0;  // skewpoly only

  bool operator==(const RingSpec&) const = default;
};

/// Parses `gf(q)`, `w2(q)`, `skewpoly(q; frob^k)` with q given either as a
/// prime power integer or as `p^n`. Case-insensitive, whitespace ignored,
/// `frob` alone means `frob^1`. Throws ParseError / InvalidSpec.
RingSpec parse_ring_spec(const std::string& text);
std::string spec_string(const RingSpec& spec);

/// An element of a Ring: the base-field component pair (a0, a1).
/// Field-family elements keep a1 = 0. Witt2 pairs follow the carry-based
/// vector arithmetic; SkewPoly pairs represent a0 + a1*X with X^2 = 0 and
/// X*b = tau(b)*X.
struct RingElem {
  const Ring* ring = nullptr;
  std::uint32_t a0 = 0;
  std::uint32_t a1 = 0;

  bool operator==(const RingElem&) const = default;
};

/// Handle to a constructed ring. Immutable after ring_make; the canonical
/// generator of the maximal ideal, the characteristic, and the structural
/// verification all happen eagerly at construction (sizes here are desk
/// scale, |R| <= 2^24).
class Ring {
 public:
  static constexpr std::uint64_t kEnumerationCeiling = 1u << 12;

  const RingSpec& spec() const { return spec_; }
  RingFamily family() const { return spec_.family; }
  const FieldPtr& base() const { return base_; }
  std::string spec_str() const { return spec_string(spec_); }

  std::uint64_t size() const { return size_; }
  std::uint32_t characteristic() const { return characteristic_; }
  bool is_field() const { return spec_.family == RingFamily::Field; }

  RingElem zero() const { return {this, 0, 0}; }
  RingElem one() const { return {this, 1, 0}; }
  RingElem make(std::uint32_t a0, std::uint32_t a1) const;

  /// Dense element index: a0*q + a1 for two-component families, a0 for
  /// fields. Enumeration order is lexicographic on (a0, a1) with a0 most
  /// significant, matching the field's own coefficient order.
  std::uint64_t index_of(RingElem a) const;
  RingElem from_index(std::uint64_t idx) const;

  RingElem add(RingElem a, RingElem b) const;
  RingElem sub(RingElem a, RingElem b) const;
  RingElem neg(RingElem a) const;
  RingElem mul(RingElem a, RingElem b) const;
  /// n-fold sum of a (n is an ordinary integer scalar).
  RingElem int_mul(std::uint64_t n, RingElem a) const;

  bool is_unit(RingElem a) const;
  /// Closed-form inverse using m^2 = 0; verified by multiplication on both
  /// sides. Throws NotAUnit.
  RingElem unit_inverse(RingElem a) const;

  /// All elements in index order. Throws RingTooLarge above 2^12 elements.
  std::vector<RingElem> enumerate_elements() const;

  /// Nonzero elements of the maximal ideal exist iff the ring is not a
  /// field; x is the canonical generator (p for witt2, the class of X for
  /// skewpoly).
  std::optional<RingElem> radical_generator() const { return x_; }
  /// The nonunit set together with the canonical generator; verified to be
  /// the two-sided ideal Rx = xR at construction. Throws NotLocal on a
  /// broken family (cannot happen for these three) and RingTooLarge when
  /// enumeration is infeasible.
  std::pair<std::vector<RingElem>, std::optional<RingElem>> maximal_ideal() const;

  /// Residue component [a] in d = R/m and the canonical section t -> (t, 0).
  FieldElem project(RingElem a) const;
  RingElem lift(FieldElem t) const;

  /// tau applied to a base-field element (identity for field/witt2).
  FieldElem tau(FieldElem t) const;

  std::string to_string(RingElem a) const;

  ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

 private:
  friend RingPtr ring_make(const RingSpec& spec);
  Ring() = default;

  void check_owner(RingElem a) const;

  RingSpec spec_;
  FieldPtr base_;
  std::uint64_t size_ = 0;
  std::uint32_t characteristic_ = 0;
  std::optional<RingElem> x_;
  // witt2 addition carry: carry(u, v) = sum_i carry_coeff_[i] u^i v^(p-i),
  // the coefficient (-1)^i / i mod p embedded into the base field.
  std::vector<std::uint32_t> carry_coeff_;
};

RingPtr ring_make(const RingSpec& spec);

}  // namespace trilocal

#endif  // TRILOCAL_RING_HPP
