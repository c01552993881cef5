#ifndef TRILOCAL_GF_HPP
#define TRILOCAL_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "trilocal/error.hpp"

namespace trilocal {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of GF(p^n). The packed index encodes the dense little-endian
/// coefficient vector (c_0, ..., c_{n-1}) as the base-p integer
/// sum c_i * p^i, so index order and coefficient order coincide.
struct FieldElem {
  const Field* field = nullptr;
  std::uint32_t idx = 0;

  bool is_zero() const { return idx == 0; }
  bool operator==(const FieldElem& other) const = default;
};

/// The map a -> a^(p^k) on a fixed field, 0 <= k < n.
struct FieldAut {
  const Field* field = nullptr;
  std::uint32_t exponent = 0;
};

/// Exact arithmetic in GF(p^n), p^n <= 2^16.
///
/// The modulus is the lexicographically least monic irreducible polynomial
/// of degree n over Z/p, where candidates are ordered by the base-p value
/// of their lower coefficient tuple (constant term least significant).
/// This makes construction deterministic without external tables; repeated
/// calls with equal (p, n) always rebuild the identical field.
///
/// Multiplication runs off exp/log tables for a fixed primitive element,
/// addition is an XOR in characteristic 2 and a digit loop otherwise.
/// All state is immutable after construction.
class Field {
 public:
  static constexpr std::uint32_t kMaxCardinality = 1u << 16;

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }

  /// Monic modulus, n+1 little-endian coefficients (constant term first).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, 1}; }
  FieldElem from_index(std::uint32_t idx) const;
  /// Element from little-endian coefficients; shorter vectors are padded.
  FieldElem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem a) const;

  /// A fixed primitive element (generator of the multiplicative group).
  FieldElem generator() const { return {this, generator_}; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_idx(std::uint32_t a) const;
  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_idx(std::uint32_t a) const;
  std::uint32_t frobenius_idx(std::uint32_t a, std::uint32_t k) const;

  /// a^(p^k) by iterated Frobenius tables; k may be any nonnegative value.
  FieldElem frobenius(FieldElem a, std::uint32_t k) const;

  std::string to_string(FieldElem a) const;

  ~Field() = default;
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  friend FieldPtr gf_make(std::uint32_t p, std::uint32_t n);
  Field() = default;

  void check_owner(FieldElem a) const;

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 0;

  // log_[a] for a != 0, exp_[e] for e in [0, 2(q-1)).
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> neg_;
  // frob_[k][a] = a^(p^k) for 0 <= k < n.
  std::vector<std::vector<std::uint32_t>> frob_;
};

/// Builds GF(p^n). Throws CompositeP if p is not prime and DegreeTooLarge
/// if p^n exceeds the construction ceiling.
FieldPtr gf_make(std::uint32_t p, std::uint32_t n);

/// {a : aut(a) = a}; a subfield with p^gcd(n, k) elements, returned in
/// index order.
std::vector<FieldElem> fixed_subfield(const FieldAut& aut);

bool is_prime(std::uint32_t value);

}  // namespace trilocal

#endif  // TRILOCAL_GF_HPP
