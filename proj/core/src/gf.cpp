#include "trilocal/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trilocal {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeP: return "CompositeP";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::RingTooLarge: return "RingTooLarge";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoFiller: return "NoFiller";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint32_t value) {
  if (value < 2) return false;
  for (std::uint32_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

namespace {

// Polynomials over Z/p, little-endian coefficients, used only during field
// construction. Leading zeros are trimmed.
using Poly = std::vector<std::uint32_t>;

Poly trimmed(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return trimmed(out);
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  a = trimmed(std::move(a));
  const std::size_t deg_m = m.size() - 1;
  while (a.size() > deg_m) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - deg_m;
    if (lead != 0) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint32_t& c = a[shift + i];
        c = (c + (p - 1) * lead % p * m[i]) % p;
      }
    }
    a.pop_back();
  }
  return trimmed(std::move(a));
}

bool poly_divides(const Poly& divisor, const Poly& candidate, std::uint32_t p) {
  return poly_mod(candidate, divisor, p).empty();
}

Poly poly_from_index(std::uint64_t k, std::uint32_t degree, std::uint32_t p) {
  Poly out(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    out[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  out[degree] = 1;  // monic
  return out;
}

// Monic degree-d polynomials ordered by the base-p value of their lower
// coefficients; every divisor candidate appears (irreducible or not), which
// only costs a few spurious trial divisions.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size()) - 1;
  if (deg == 1) return true;
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      if (poly_divides(poly_from_index(k, d, p), f, p)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t value) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) {
      out.push_back(d);
      while (value % d == 0) value /= d;
    }
  }
  if (value > 1) out.push_back(value);
  return out;
}

}  // namespace

FieldPtr gf_make(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::CompositeP, "p = " + std::to_string(p) + " is not prime");
  }
  if (n < 1) throw Error(ErrorCode::InvalidSpec, "degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > Field::kMaxCardinality) {
      throw Error(ErrorCode::DegreeTooLarge,
                  "p^n exceeds the construction ceiling 2^16");
    }
  }

  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->n_ = n;
  field->q_ = static_cast<std::uint32_t>(q);

  // Deterministic modulus: first irreducible in the base-p candidate order.
  Poly modulus;
  for (std::uint64_t k = 0; k < q; ++k) {
    Poly f = poly_from_index(k, n, p);
    if (is_irreducible(f, p)) {
      modulus = f;
      break;
    }
  }
  if (modulus.empty()) {
    throw Error(ErrorCode::Internal, "no irreducible polynomial found");
  }
  field->modulus_.assign(modulus.begin(), modulus.end());

  const std::uint32_t qq = field->q_;

  auto decode = [&](std::uint32_t idx) {
    Poly c(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return trimmed(std::move(c));
  };
  auto encode = [&](const Poly& c) {
    std::uint32_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
    return idx;
  };
  auto mul_slow = [&](std::uint32_t a, std::uint32_t b) {
    return encode(poly_mod(poly_mul(decode(a), decode(b), p), modulus, p));
  };
  auto pow_slow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t acc = 1;
    std::uint32_t base = a;
    while (e > 0) {
      if (e & 1) acc = mul_slow(acc, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    return acc;
  };

  // Primitive element: smallest index whose order is exactly q-1.
  const std::uint32_t group = qq - 1;
  const auto factors = prime_factors(group);
  std::uint32_t gen = 0;
  for (std::uint32_t cand = (qq == 2 ? 1 : 2); cand < qq; ++cand) {
    bool primitive = true;
    for (std::uint32_t f : factors) {
      if (pow_slow(cand, group / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = cand;
      break;
    }
  }
  if (gen == 0 && qq == 2) gen = 1;
  if (gen == 0) throw Error(ErrorCode::Internal, "no primitive element found");
  field->generator_ = gen;

  field->log_.assign(qq, 0);
  field->exp_.assign(2 * group, 0);
  std::uint32_t acc = 1;
  for (std::uint32_t e = 0; e < group; ++e) {
    field->exp_[e] = acc;
    field->exp_[e + group] = acc;
    field->log_[acc] = e;
    acc = mul_slow(acc, gen);
  }
  if (acc != 1) throw Error(ErrorCode::Internal, "generator order mismatch");

  field->inv_.assign(qq, 0);
  for (std::uint32_t a = 1; a < qq; ++a) {
    field->inv_[a] = field->exp_[(group - field->log_[a]) % group];
  }

  field->neg_.assign(qq, 0);
  for (std::uint32_t a = 0; a < qq; ++a) {
    Poly c = decode(a);
    for (auto& ci : c) ci = (p - ci) % p;
    field->neg_[a] = encode(c);
  }

  field->frob_.assign(n, std::vector<std::uint32_t>(qq, 0));
  for (std::uint32_t a = 0; a < qq; ++a) field->frob_[0][a] = a;
  if (n > 1) {
    for (std::uint32_t a = 0; a < qq; ++a) field->frob_[1][a] = pow_slow(a, p);
    for (std::uint32_t k = 2; k < n; ++k) {
      for (std::uint32_t a = 0; a < qq; ++a) {
        field->frob_[k][a] = field->frob_[1][field->frob_[k - 1][a]];
      }
    }
  }

  return field;
}

void Field::check_owner(FieldElem a) const {
  if (a.field != this) {
    throw Error(ErrorCode::MixedFields, "operands belong to different fields");
  }
}

FieldElem Field::from_index(std::uint32_t idx) const {
  if (idx >= q_) throw Error(ErrorCode::InvalidSpec, "element index out of range");
  return {this, idx};
}

FieldElem Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > n_) {
    throw Error(ErrorCode::InvalidSpec, "coefficient vector longer than degree");
  }
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) {
      throw Error(ErrorCode::InvalidSpec, "coefficient out of range");
    }
    idx = idx * p_ + coeffs[i];
  }
  return {this, idx};
}

std::vector<std::uint32_t> Field::coeffs(FieldElem a) const {
  check_owner(a);
  std::vector<std::uint32_t> out(n_, 0);
  std::uint32_t idx = a.idx;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = idx % p_;
    idx /= p_;
  }
  return out;
}

std::uint32_t Field::add_idx(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0;
  std::uint32_t shift = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += (a % p_ + b % p_) % p_ * shift;
    a /= p_;
    b /= p_;
    shift *= p_;
  }
  return out;
}

std::uint32_t Field::neg_idx(std::uint32_t a) const { return neg_[a]; }

std::uint32_t Field::mul_idx(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t Field::inv_idx(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return inv_[a];
}

std::uint32_t Field::frobenius_idx(std::uint32_t a, std::uint32_t k) const {
  return frob_[k % n_][a];
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  check_owner(a);
  check_owner(b);
  return {this, add_idx(a.idx, b.idx)};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const {
  check_owner(a);
  check_owner(b);
  return {this, add_idx(a.idx, neg_[b.idx])};
}

FieldElem Field::neg(FieldElem a) const {
  check_owner(a);
  return {this, neg_[a.idx]};
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  check_owner(a);
  check_owner(b);
  return {this, mul_idx(a.idx, b.idx)};
}

FieldElem Field::inv(FieldElem a) const {
  check_owner(a);
  return {this, inv_idx(a.idx)};
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  check_owner(a);
  if (a.idx == 0) return e == 0 ? one() : zero();
  const std::uint32_t group = q_ - 1;
  const std::uint64_t le = (static_cast<std::uint64_t>(log_[a.idx]) * (e % group)) % group;
  return {this, exp_[le]};
}

FieldElem Field::frobenius(FieldElem a, std::uint32_t k) const {
  check_owner(a);
  return {this, frobenius_idx(a.idx, k)};
}

std::string Field::to_string(FieldElem a) const {
  check_owner(a);
  if (n_ == 1) return std::to_string(a.idx);
  std::ostringstream out;
  out << "[";
  auto c = coeffs(a);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (i > 0) out << ",";
    out << c[i];
  }
  out << "]";
  return out.str();
}

std::vector<FieldElem> fixed_subfield(const FieldAut& aut) {
  const Field* f = aut.field;
  std::vector<FieldElem> out;
  for (std::uint32_t a = 0; a < f->q(); ++a) {
    if (f->frobenius_idx(a, aut.exponent) == a) out.push_back({f, a});
  }
  return out;
}

}  // namespace trilocal
