#include "trilocal/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace trilocal {

const char* family_name(RingFamily family) {
  switch (family) {
    case RingFamily::Field: return "field";
    case RingFamily::Witt2: return "witt2";
    case RingFamily::SkewPoly: return "skewpoly";
  }
  return "unknown";
}

namespace {

struct BaseSize {
  std::uint32_t p;
  std::uint32_t n;
};

// q as "p^n" or as a plain prime power integer.
BaseSize parse_base(const std::string& text) {
  auto caret = text.find('^');
  if (caret != std::string::npos) {
    std::uint32_t p = 0, n = 0;
    try {
      p = static_cast<std::uint32_t>(std::stoul(text.substr(0, caret)));
      n = static_cast<std::uint32_t>(std::stoul(text.substr(caret + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad base field size '" + text + "'");
    }
    return {p, n};
  }
  std::uint64_t q = 0;
  try {
    q = std::stoull(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad base field size '" + text + "'");
  }
  if (q < 2) throw Error(ErrorCode::InvalidSpec, "field size must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) {
    ++p;
    if (static_cast<std::uint64_t>(p) * p > q) {
      p = static_cast<std::uint32_t>(q);
      break;
    }
  }
  std::uint32_t n = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) {
    throw Error(ErrorCode::InvalidSpec,
                std::to_string(q) + " is not a prime power");
  }
  return {p, n};
}

}  // namespace

RingSpec parse_ring_spec(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') {
    throw Error(ErrorCode::ParseError, "expected name(...) in '" + text + "'");
  }
  const std::string name = s.substr(0, open);
  const std::string args = s.substr(open + 1, s.size() - open - 2);

  RingSpec spec;
  if (name == "gf") {
    spec.family = RingFamily::Field;
  } else if (name == "w2") {
    spec.family = RingFamily::Witt2;
  } else if (name == "skewpoly") {
    spec.family = RingFamily::SkewPoly;
  } else {
    throw Error(ErrorCode::ParseError, "unknown ring family '" + name + "'");
  }

  std::string base_text = args;
  if (spec.family == RingFamily::SkewPoly) {
    auto semi = args.find(';');
    if (semi == std::string::npos) {
      throw Error(ErrorCode::ParseError, "skewpoly needs '; frob^k'");
    }
    base_text = args.substr(0, semi);
    std::string aut = args.substr(semi + 1);
    if (aut.rfind("frob", 0) != 0) {
      throw Error(ErrorCode::ParseError, "expected frob^k in '" + text + "'");
    }
    aut = aut.substr(4);
    if (aut.empty()) {
      spec.aut_exponent = 1;
    } else if (aut[0] == '^') {
      try {
        spec.aut_exponent = static_cast<std::uint32_t>(std::stoul(aut.substr(1)));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad frobenius exponent in '" + text + "'");
      }
    } else {
      throw Error(ErrorCode::ParseError, "expected frob^k in '" + text + "'");
    }
  } else if (args.find(';') != std::string::npos) {
    throw Error(ErrorCode::ParseError, "unexpected ';' in '" + text + "'");
  }

  const BaseSize base = parse_base(base_text);
  spec.p = base.p;
  spec.n = base.n;
  if (spec.family == RingFamily::SkewPoly && spec.aut_exponent >= spec.n) {
    throw Error(ErrorCode::InvalidSpec,
                "skewpoly automorphism exponent must satisfy 0 <= k < n");
  }
  return spec;
}

std::string spec_string(const RingSpec& spec) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.n; ++i) q *= spec.p;
  std::ostringstream out;
  switch (spec.family) {
    case RingFamily::Field:
      out << "gf(" << q << ")";
      break;
    case RingFamily::Witt2:
      out << "w2(" << q << ")";
      break;
    case RingFamily::SkewPoly:
      out << "skewpoly(" << q << "; frob^" << spec.aut_exponent << ")";
      break;
  }
  return out.str();
}

RingPtr ring_make(const RingSpec& spec) {
  if (spec.family == RingFamily::SkewPoly && spec.aut_exponent >= spec.n) {
    throw Error(ErrorCode::InvalidSpec,
                "skewpoly automorphism exponent must satisfy 0 <= k < n");
  }
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->spec_ = spec;
  ring->base_ = gf_make(spec.p, spec.n);
  const std::uint32_t q = ring->base_->q();
  ring->size_ = (spec.family == RingFamily::Field)
                    ? q
                    : static_cast<std::uint64_t>(q) * q;

  if (spec.family == RingFamily::Witt2) {
    // carry coefficient for u^i v^(p-i): (-1)^i / i mod p, the expansion of
    // (u^p + v^p - (u+v)^p) / p with the division by p done once in Z.
    const std::uint32_t p = spec.p;
    ring->carry_coeff_.assign(p, 0);
    for (std::uint32_t i = 1; i < p; ++i) {
      std::uint32_t inv_i = 1;
      for (std::uint32_t c = 1; c < p; ++c) {
        if (c * i % p == 1) {
          inv_i = c;
          break;
        }
      }
      std::uint32_t value = inv_i % p;
      if (i % 2 == 1) value = (p - value) % p;  // (-1)^i
      ring->carry_coeff_[i] = value;
    }
  }

  // Characteristic by iterating 1 + 1 + ...
  RingElem acc = ring->one();
  std::uint32_t characteristic = 1;
  while (!(acc.a0 == 0 && acc.a1 == 0)) {
    acc = ring->add(acc, ring->one());
    ++characteristic;
    if (characteristic > ring->size_ + 1) {
      throw Error(ErrorCode::Internal, "characteristic iteration diverged");
    }
  }
  ring->characteristic_ = characteristic;

  // Canonical generator of m: p for witt2 (computed as 1 + ... + 1),
  // the class of X for skewpoly.
  if (spec.family == RingFamily::Witt2) {
    ring->x_ = ring->int_mul(spec.p, ring->one());
  } else if (spec.family == RingFamily::SkewPoly) {
    ring->x_ = ring->make(0, 1);
  }
  if (ring->x_ && ring->x_->a0 != 0) {
    throw Error(ErrorCode::Internal, "canonical generator escaped the ideal");
  }

  // Construction-time verification at enumeration scale: the closed-form
  // unit inverse really inverts, and the nonunit set is the two-sided ideal
  // generated by x.
  if (ring->size_ <= Ring::kEnumerationCeiling && !ring->is_field()) {
    const RingElem x = *ring->x_;
    for (std::uint64_t i = 0; i < ring->size_; ++i) {
      RingElem a = ring->from_index(i);
      if (ring->is_unit(a)) {
        ring->unit_inverse(a);  // throws Internal if either side fails
      } else {
        RingElem left = ring->mul(a, x);  // m * m = 0 keeps products inside m
        RingElem right = ring->mul(x, a);
        if (left.a0 != 0 || right.a0 != 0) {
          throw Error(ErrorCode::NotLocal, "nonunits are not an ideal");
        }
      }
    }
    // m = Rx = xR for the canonical generator.
    std::vector<bool> left_hit(ring->size_, false), right_hit(ring->size_, false);
    for (std::uint64_t i = 0; i < ring->size_; ++i) {
      RingElem r = ring->from_index(i);
      left_hit[ring->index_of(ring->mul(r, x))] = true;
      right_hit[ring->index_of(ring->mul(x, r))] = true;
    }
    for (std::uint64_t i = 0; i < ring->size_; ++i) {
      RingElem a = ring->from_index(i);
      const bool in_m = !ring->is_unit(a);
      if (left_hit[i] != in_m || right_hit[i] != in_m) {
        throw Error(ErrorCode::NotLocal, "Rx = xR = m fails for the canonical x");
      }
    }
  }

  return ring;
}

void Ring::check_owner(RingElem a) const {
  if (a.ring != this) {
    throw Error(ErrorCode::MixedRings, "operands belong to different rings");
  }
}

RingElem Ring::make(std::uint32_t a0, std::uint32_t a1) const {
  if (a0 >= base_->q() || a1 >= base_->q()) {
    throw Error(ErrorCode::InvalidSpec, "component out of range");
  }
  if (is_field() && a1 != 0) {
    throw Error(ErrorCode::InvalidSpec, "field elements have no second component");
  }
  return {this, a0, a1};
}

std::uint64_t Ring::index_of(RingElem a) const {
  check_owner(a);
  if (is_field()) return a.a0;
  return static_cast<std::uint64_t>(a.a0) * base_->q() + a.a1;
}

RingElem Ring::from_index(std::uint64_t idx) const {
  if (idx >= size_) throw Error(ErrorCode::InvalidSpec, "element index out of range");
  if (is_field()) return {this, static_cast<std::uint32_t>(idx), 0};
  const std::uint32_t q = base_->q();
  return {this, static_cast<std::uint32_t>(idx / q), static_cast<std::uint32_t>(idx % q)};
}

RingElem Ring::add(RingElem a, RingElem b) const {
  check_owner(a);
  check_owner(b);
  const Field& k = *base_;
  switch (spec_.family) {
    case RingFamily::Field:
      return {this, k.add_idx(a.a0, b.a0), 0};
    case RingFamily::SkewPoly:
      return {this, k.add_idx(a.a0, b.a0), k.add_idx(a.a1, b.a1)};
    case RingFamily::Witt2: {
      std::uint32_t carry = 0;
      if (spec_.p == 2) {
        carry = k.mul_idx(a.a0, b.a0);
      } else {
        for (std::uint32_t i = 1; i < spec_.p; ++i) {
          const std::uint32_t term = k.mul_idx(
              k.pow({&k, a.a0}, i).idx, k.pow({&k, b.a0}, spec_.p - i).idx);
          carry = k.add_idx(carry, k.mul_idx(carry_coeff_[i], term));
        }
      }
      return {this, k.add_idx(a.a0, b.a0),
              k.add_idx(k.add_idx(a.a1, b.a1), carry)};
    }
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

RingElem Ring::neg(RingElem a) const {
  check_owner(a);
  const Field& k = *base_;
  switch (spec_.family) {
    case RingFamily::Field:
      return {this, k.neg_idx(a.a0), 0};
    case RingFamily::SkewPoly:
      return {this, k.neg_idx(a.a0), k.neg_idx(a.a1)};
    case RingFamily::Witt2: {
      // -(a0, a1) = (-a0, -a1 - carry(a0, -a0))
      RingElem candidate{this, k.neg_idx(a.a0), k.neg_idx(a.a1)};
      RingElem sum = add(a, candidate);
      candidate.a1 = k.add_idx(candidate.a1, k.neg_idx(sum.a1));
      return candidate;
    }
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

RingElem Ring::sub(RingElem a, RingElem b) const { return add(a, neg(b)); }

RingElem Ring::mul(RingElem a, RingElem b) const {
  check_owner(a);
  check_owner(b);
  const Field& k = *base_;
  switch (spec_.family) {
    case RingFamily::Field:
      return {this, k.mul_idx(a.a0, b.a0), 0};
    case RingFamily::SkewPoly: {
      const std::uint32_t tau_b0 = k.frobenius_idx(b.a0, spec_.aut_exponent);
      return {this, k.mul_idx(a.a0, b.a0),
              k.add_idx(k.mul_idx(a.a0, b.a1), k.mul_idx(a.a1, tau_b0))};
    }
    case RingFamily::Witt2: {
      // (a0 b0, b0^p a1 + b1 a0^p); the p-th powers are Frobenius images.
      const std::uint32_t a0p = k.frobenius_idx(a.a0, 1);
      const std::uint32_t b0p = k.frobenius_idx(b.a0, 1);
      return {this, k.mul_idx(a.a0, b.a0),
              k.add_idx(k.mul_idx(b0p, a.a1), k.mul_idx(b.a1, a0p))};
    }
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

RingElem Ring::int_mul(std::uint64_t n, RingElem a) const {
  check_owner(a);
  RingElem acc = zero();
  RingElem base = a;
  while (n > 0) {
    if (n & 1) acc = add(acc, base);
    base = add(base, base);
    n >>= 1;
  }
  return acc;
}

bool Ring::is_unit(RingElem a) const {
  check_owner(a);
  return a.a0 != 0;
}

RingElem Ring::unit_inverse(RingElem a) const {
  check_owner(a);
  if (a.a0 == 0) throw Error(ErrorCode::NotAUnit, "element is in the maximal ideal");
  const Field& k = *base_;
  RingElem inv = zero();
  switch (spec_.family) {
    case RingFamily::Field:
      inv = {this, k.inv_idx(a.a0), 0};
      break;
    case RingFamily::SkewPoly: {
      // (a0 + a1 X)^-1 = a0^-1 - a0^-1 a1 tau(a0^-1) X
      const std::uint32_t b0 = k.inv_idx(a.a0);
      const std::uint32_t tau_b0 = k.frobenius_idx(b0, spec_.aut_exponent);
      inv = {this, b0, k.neg_idx(k.mul_idx(k.mul_idx(b0, a.a1), tau_b0))};
      break;
    }
    case RingFamily::Witt2: {
      // (a0, a1)^-1 = (a0^-1, -a1 a0^(-2p))
      const FieldElem b0{&k, k.inv_idx(a.a0)};
      const std::uint32_t b0_2p = k.pow(b0, 2 * spec_.p).idx;
      inv = {this, b0.idx, k.neg_idx(k.mul_idx(a.a1, b0_2p))};
      break;
    }
  }
  if (!(mul(a, inv) == one()) || !(mul(inv, a) == one())) {
    throw Error(ErrorCode::Internal, "unit inverse failed verification");
  }
  return inv;
}

std::vector<RingElem> Ring::enumerate_elements() const {
  if (size_ > kEnumerationCeiling) {
    throw Error(ErrorCode::RingTooLarge,
                "ring has " + std::to_string(size_) + " elements");
  }
  std::vector<RingElem> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(from_index(i));
  return out;
}

std::pair<std::vector<RingElem>, std::optional<RingElem>> Ring::maximal_ideal() const {
  if (size_ > kEnumerationCeiling) {
    throw Error(ErrorCode::RingTooLarge, "maximal ideal enumeration too large");
  }
  std::vector<RingElem> m;
  if (is_field()) {
    m.push_back(zero());
  } else {
    const std::uint32_t q = base_->q();
    for (std::uint32_t a1 = 0; a1 < q; ++a1) m.push_back({this, 0, a1});
  }
  return {m, x_};
}

FieldElem Ring::project(RingElem a) const {
  check_owner(a);
  return {base_.get(), a.a0};
}

RingElem Ring::lift(FieldElem t) const {
  if (t.field != base_.get()) {
    throw Error(ErrorCode::MixedFields, "residue element from a foreign field");
  }
  return {this, t.idx, 0};
}

FieldElem Ring::tau(FieldElem t) const {
  if (t.field != base_.get()) {
    throw Error(ErrorCode::MixedFields, "element from a foreign field");
  }
  if (spec_.family == RingFamily::SkewPoly) {
    return base_->frobenius(t, spec_.aut_exponent);
  }
  return t;
}

std::string Ring::to_string(RingElem a) const {
  check_owner(a);
  if (is_field()) return base_->to_string({base_.get(), a.a0});
  std::ostringstream out;
  out << "(" << base_->to_string({base_.get(), a.a0}) << ","
      << base_->to_string({base_.get(), a.a1}) << ")";
  return out.str();
}

}  // namespace trilocal
