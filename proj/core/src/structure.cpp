#include "trilocal/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace trilocal {

const char* case_name(TriangulationCase c) {
  switch (c) {
    case TriangulationCase::Semisimple: return "semisimple";
    case TriangulationCase::Mixed: return "mixed";
    case TriangulationCase::Equicharacteristic: return "equicharacteristic";
    case TriangulationCase::None: return "none";
  }
  return "unknown";
}

std::string Obstruction::primary() const {
  if (sign_witness) return "x != -x";
  if (!failed.empty()) return failed.front();
  return detail;
}

namespace {

void require_enumerable(const RingPtr& ring) {
  if (ring->size() > Ring::kEnumerationCeiling) {
    throw Error(ErrorCode::RingTooLarge,
                "structure analysis needs |R| <= 2^12, got " +
                    std::to_string(ring->size()));
  }
}

}  // namespace

PremiseReport verify_premises(const RingPtr& ring) {
  require_enumerable(ring);
  PremiseReport report;
  const std::uint64_t size = ring->size();

  std::vector<RingElem> m;
  for (std::uint64_t i = 0; i < size; ++i) {
    RingElem a = ring->from_index(i);
    if (!ring->is_unit(a)) m.push_back(a);
  }

  // locality: the nonunits form a two-sided ideal
  {
    PremiseCheck check{"nonunits_form_ideal", true, ""};
    for (const auto& a : m) {
      if (!check.passed) break;
      for (const auto& b : m) {
        if (ring->is_unit(ring->add(a, b))) {
          check.passed = false;
          check.detail = ring->to_string(a) + " + " + ring->to_string(b) +
                         " is a unit";
          break;
        }
      }
    }
    for (std::uint64_t i = 0; i < size && check.passed; ++i) {
      RingElem r = ring->from_index(i);
      for (const auto& a : m) {
        if (ring->is_unit(ring->mul(r, a)) || ring->is_unit(ring->mul(a, r))) {
          check.passed = false;
          check.detail = "multiple of " + ring->to_string(a) + " escaped m";
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  // m^2 = {0}
  {
    PremiseCheck check{"m_squared_zero", true, ""};
    for (const auto& a : m) {
      if (!check.passed) break;
      for (const auto& b : m) {
        if (!(ring->mul(a, b) == ring->zero())) {
          check.passed = false;
          check.detail = ring->to_string(a) + " * " + ring->to_string(b) +
                         " != 0";
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  // every nonzero x in m satisfies Rx = xR = m
  {
    PremiseCheck check{"m_principal_for_every_generator", true, ""};
    std::vector<bool> in_m(size, false);
    for (const auto& a : m) in_m[ring->index_of(a)] = true;
    for (const auto& x : m) {
      if (x == ring->zero()) continue;
      std::vector<bool> left(size, false), right(size, false);
      for (std::uint64_t i = 0; i < size; ++i) {
        RingElem r = ring->from_index(i);
        left[ring->index_of(ring->mul(r, x))] = true;
        right[ring->index_of(ring->mul(x, r))] = true;
      }
      for (std::uint64_t i = 0; i < size; ++i) {
        if (left[i] != in_m[i] || right[i] != in_m[i]) {
          check.passed = false;
          check.detail = "Rx = xR = m fails for x = " + ring->to_string(x);
          break;
        }
      }
      if (!check.passed) break;
    }
    report.checks.push_back(std::move(check));
  }

  return report;
}

ResidueField residue_field(const RingPtr& ring) {
  require_enumerable(ring);
  ResidueField rf{ring, ring->base()};
  const Field& d = *rf.d;
  const std::uint64_t size = ring->size();

  // project . lift = id on d
  for (std::uint32_t t = 0; t < d.q(); ++t) {
    if (ring->project(ring->lift({&d, t})).idx != t) {
      throw Error(ErrorCode::NotAField, "lift is not a section of project");
    }
  }
  // surjective ring homomorphism with kernel m, verified on all pairs
  for (std::uint64_t i = 0; i < size; ++i) {
    RingElem a = ring->from_index(i);
    if ((ring->project(a).idx == 0) == ring->is_unit(a)) {
      throw Error(ErrorCode::NotAField, "kernel of project differs from m");
    }
    for (std::uint64_t j = 0; j < size; ++j) {
      RingElem b = ring->from_index(j);
      if (!(ring->project(ring->add(a, b)) ==
            d.add(ring->project(a), ring->project(b))) ||
          !(ring->project(ring->mul(a, b)) ==
            d.mul(ring->project(a), ring->project(b)))) {
        throw Error(ErrorCode::NotAField, "project is not a ring homomorphism");
      }
    }
  }
  return rf;
}

SigmaAut sigma(const RingPtr& ring, RingElem x) {
  require_enumerable(ring);
  if (ring->is_unit(x) || x == ring->zero()) {
    throw Error(ErrorCode::InvalidSpec, "sigma needs x in m \\ {0}");
  }
  const Field& d = *ring->base();
  const std::uint64_t size = ring->size();

  SigmaAut aut;
  aut.ring = ring;
  aut.x = x;
  aut.table.assign(d.q(), 0);
  aut.inverse.assign(d.q(), 0);

  for (std::uint32_t t = 0; t < d.q(); ++t) {
    RingElem xt = ring->mul(x, ring->lift({&d, t}));
    bool found = false;
    for (std::uint64_t i = 0; i < size; ++i) {
      RingElem s = ring->from_index(i);
      if (ring->mul(s, x) == xt) {
        aut.table[t] = ring->project(s).idx;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorCode::NoSolution,
                  "no s with s*x = x*lift(t); Rx != xR at t = " +
                      d.to_string({&d, t}));
    }
  }

  // automorphism: bijective, additive, multiplicative
  std::set<std::uint32_t> image(aut.table.begin(), aut.table.end());
  if (image.size() != d.q()) {
    throw Error(ErrorCode::Internal, "sigma table is not a bijection");
  }
  for (std::uint32_t s = 0; s < d.q(); ++s) {
    for (std::uint32_t t = 0; t < d.q(); ++t) {
      if (aut.table[d.add_idx(s, t)] != d.add_idx(aut.table[s], aut.table[t]) ||
          aut.table[d.mul_idx(s, t)] != d.mul_idx(aut.table[s], aut.table[t])) {
        throw Error(ErrorCode::Internal, "sigma is not a field automorphism");
      }
    }
  }
  for (std::uint32_t t = 0; t < d.q(); ++t) aut.inverse[aut.table[t]] = t;

  // defining relation and its inverse form
  for (std::uint32_t t = 0; t < d.q(); ++t) {
    RingElem lt = ring->lift({&d, t});
    if (!(ring->mul(x, lt) == ring->mul(ring->lift({&d, aut.table[t]}), x))) {
      throw Error(ErrorCode::Internal, "sigma defining relation failed");
    }
    if (!(ring->mul(lt, x) == ring->mul(x, ring->lift({&d, aut.inverse[t]})))) {
      throw Error(ErrorCode::Internal, "sigma inverse relation failed");
    }
  }
  return aut;
}

bool sigma_relation_check(const RingPtr& ring, RingElem x, RingElem y) {
  const Field& d = *ring->base();
  // write y = x * lift(r)
  std::optional<FieldElem> r;
  for (std::uint32_t c = 0; c < d.q(); ++c) {
    if (ring->mul(x, ring->lift({&d, c})) == y) {
      r = FieldElem{&d, c};
      break;
    }
  }
  if (!r) return false;
  SigmaAut sx = sigma(ring, x);
  SigmaAut sy = sigma(ring, y);
  FieldElem sr = sx.apply(*r);
  FieldElem sr_inv = d.inv(sr);
  for (std::uint32_t t = 0; t < d.q(); ++t) {
    FieldElem lhs = sy.apply({&d, t});
    FieldElem rhs = d.mul(d.mul(sr, sx.apply({&d, t})), sr_inv);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Centers centers(const RingPtr& ring) {
  require_enumerable(ring);
  Centers out;
  const Field& d = *ring->base();
  const std::uint64_t size = ring->size();

  for (std::uint64_t i = 0; i < size; ++i) {
    RingElem a = ring->from_index(i);
    bool central = true;
    for (std::uint64_t j = 0; j < size; ++j) {
      RingElem b = ring->from_index(j);
      if (!(ring->mul(a, b) == ring->mul(b, a))) {
        central = false;
        break;
      }
    }
    if (central) out.z_ring.push_back(a);
  }

  for (std::uint32_t t = 0; t < d.q(); ++t) {
    bool central = true;
    for (std::uint32_t s = 0; s < d.q(); ++s) {
      if (d.mul_idx(t, s) != d.mul_idx(s, t)) {
        central = false;
        break;
      }
    }
    if (central) out.z_d.push_back({&d, t});
  }

  std::set<std::uint32_t> dp;
  for (const auto& a : out.z_ring) dp.insert(ring->project(a).idx);
  for (std::uint32_t t : dp) out.d_prime.push_back({&d, t});

  if (auto x = ring->radical_generator()) {
    SigmaAut aut = sigma(ring, *x);
    for (const auto& t : out.z_d) {
      if (aut.apply(t) == t) out.sigma_fixed.push_back(t);
    }
  } else {
    out.sigma_fixed = out.z_d;
  }
  return out;
}

std::optional<std::pair<RingElem, RingElem>> sign_obstruction(const RingPtr& ring,
                                                              RingElem x) {
  RingElem minus = ring->neg(x);
  if (minus == x) return std::nullopt;
  return std::make_pair(x, minus);
}

Classification classify(const RingPtr& ring) {
  Classification cls;
  cls.x = ring->radical_generator();

  if (ring->is_field()) {
    cls.kind = TriangulationCase::Semisimple;
    return cls;
  }

  PremiseReport premises = verify_premises(ring);
  if (!premises.all_passed()) {
    cls.kind = TriangulationCase::None;
    Obstruction obs;
    obs.failed.push_back("structural premises");
    for (const auto& c : premises.checks) {
      if (!c.passed) obs.detail += c.name + ": " + c.detail + "; ";
    }
    cls.obstruction = obs;
    return cls;
  }

  const Field& d = *ring->base();
  const RingElem x = *cls.x;
  const RingElem two = ring->add(ring->one(), ring->one());
  const bool two_zero = two == ring->zero();
  const bool m_is_2R = !two_zero && !ring->is_unit(two);

  if (!m_is_2R && !two_zero) {
    // neither theorem case applies; the filler argument x = -x pins it down
    cls.kind = TriangulationCase::None;
    Obstruction obs;
    obs.failed = {"m = 2R", "char R = 2"};
    obs.sign_witness = sign_obstruction(ring, x);
    if (obs.sign_witness) {
      obs.failed.push_back("x = -x");
      obs.detail = "x = " + ring->to_string(x) +
                   ", -x = " + ring->to_string(obs.sign_witness->second);
    }
    cls.obstruction = obs;
    return cls;
  }

  // admissible r: sigma_x(r) = r and sigma_x^3(t) = r^-1 t r for all t
  SigmaAut aut = sigma(ring, x);
  std::vector<std::uint32_t> sigma3(d.q());
  for (std::uint32_t t = 0; t < d.q(); ++t) {
    sigma3[t] = aut.table[aut.table[aut.table[t]]];
  }
  for (std::uint32_t r = 1; r < d.q(); ++r) {
    if (aut.table[r] != r) continue;
    const std::uint32_t r_inv = d.inv_idx(r);
    bool ok = true;
    for (std::uint32_t t = 0; t < d.q(); ++t) {
      if (sigma3[t] != d.mul_idx(d.mul_idx(r_inv, t), r)) {
        ok = false;
        break;
      }
    }
    if (ok) cls.admissible_r.push_back({&d, r});
  }

  if (m_is_2R) {
    cls.kind = TriangulationCase::Mixed;
    if (cls.admissible_r.empty()) {
      throw Error(ErrorCode::Internal, "mixed case with empty admissible set");
    }
    return cls;
  }

  // char R = 2 from here on
  if (!cls.admissible_r.empty()) {
    cls.kind = TriangulationCase::Equicharacteristic;
    return cls;
  }

  cls.kind = TriangulationCase::None;
  Obstruction obs;
  obs.failed.push_back("m = 2R");
  // condition (a) always has r = 1; what broke is (b)
  obs.failed.push_back("condition (b)");
  for (std::uint32_t t = 0; t < d.q(); ++t) {
    if (sigma3[t] != t) {
      obs.detail = "sigma_x^3(" + d.to_string({&d, t}) + ") = " +
                   d.to_string({&d, sigma3[t]}) + " != conjugate for any r";
      break;
    }
  }
  obs.sign_witness = sign_obstruction(ring, x);  // empty in characteristic 2
  cls.obstruction = obs;
  return cls;
}

std::uint64_t count_triangulations(const Classification& cls, const Centers& ctr) {
  switch (cls.kind) {
    case TriangulationCase::Semisimple:
      return 1;
    case TriangulationCase::None:
      return 0;
    case TriangulationCase::Mixed: {
      const std::uint64_t count = cls.admissible_r.size();
      if (count != ctr.z_d.size() - 1) {
        throw Error(ErrorCode::Internal,
                    "mixed count disagrees with |Z(d)| - 1");
      }
      return count;
    }
    case TriangulationCase::Equicharacteristic: {
      const std::uint64_t count = cls.admissible_r.size();
      if (count != ctr.sigma_fixed.size() - 1) {
        throw Error(ErrorCode::Internal,
                    "equicharacteristic count disagrees with |Z(d)^sigma| - 1");
      }
      return count;
    }
  }
  return 0;
}

std::uint64_t count_triangulations(const RingPtr& ring) {
  if (ring->is_field()) return 1;
  return count_triangulations(classify(ring), centers(ring));
}

std::vector<std::vector<FieldElem>> equivalence_classes(const RingPtr& ring) {
  Classification cls = classify(ring);
  if (cls.kind != TriangulationCase::Mixed &&
      cls.kind != TriangulationCase::Equicharacteristic) {
    return {};
  }
  const Field& d = *ring->base();
  Centers ctr = centers(ring);
  std::set<std::uint64_t> z_ring;
  for (const auto& a : ctr.z_ring) z_ring.insert(ring->index_of(a));

  auto [m, x] = ring->maximal_ideal();
  // r ~ r' iff some lift of r^-1 r' is central in R; lifts of c are
  // lift(c) + m.
  auto related = [&](FieldElem r, FieldElem rp) {
    FieldElem c = d.mul(d.inv(r), rp);
    for (const auto& e : m) {
      if (z_ring.count(ring->index_of(ring->add(ring->lift(c), e)))) return true;
    }
    return false;
  };

  std::vector<std::vector<FieldElem>> classes;
  std::vector<bool> assigned(cls.admissible_r.size(), false);
  for (std::size_t i = 0; i < cls.admissible_r.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<FieldElem> group{cls.admissible_r[i]};
    assigned[i] = true;
    for (std::size_t j = i + 1; j < cls.admissible_r.size(); ++j) {
      if (!assigned[j] && related(cls.admissible_r[i], cls.admissible_r[j])) {
        group.push_back(cls.admissible_r[j]);
        assigned[j] = true;
      }
    }
    classes.push_back(std::move(group));
  }

  // cross-check against the quotient group order
  const std::uint64_t dp_units = ctr.d_prime.size() - 1;
  const std::uint64_t numerator = (cls.kind == TriangulationCase::Mixed)
                                      ? ctr.z_d.size() - 1
                                      : ctr.sigma_fixed.size() - 1;
  if (numerator % dp_units != 0 || classes.size() != numerator / dp_units) {
    throw Error(ErrorCode::Internal,
                "class count disagrees with the quotient group order");
  }
  return classes;
}

RingElem StructureInfo::x() const {
  if (!sigma_) throw Error(ErrorCode::InvalidSpec, "field rings have m = {0}");
  return sigma_->x;
}

const SigmaAut& StructureInfo::sigma_aut() const {
  if (!sigma_) throw Error(ErrorCode::InvalidSpec, "field rings have m = {0}");
  return *sigma_;
}

FieldElem StructureInfo::sigma(FieldElem t) const {
  return sigma_ ? sigma_->apply(t) : t;
}

FieldElem StructureInfo::sigma_inv(FieldElem t) const {
  return sigma_ ? sigma_->apply_inv(t) : t;
}

FieldElem StructureInfo::sigma_pow(FieldElem t, std::uint32_t k) const {
  return sigma_ ? sigma_->apply_pow(t, k) : t;
}

FieldElem StructureInfo::factor_by_x(RingElem s) const {
  const Ring& ring = *ring_;
  ring.project(s);  // owner check
  if (ring.is_unit(s)) {
    throw Error(ErrorCode::InvalidSpec, "factor_by_x needs an element of m");
  }
  const Field& d = *ring.base();
  FieldElem c = d.zero();
  switch (ring.family()) {
    case RingFamily::Field:
      if (!(s == ring.zero())) {
        throw Error(ErrorCode::Internal, "nonzero radical element in a field");
      }
      return d.zero();
    case RingFamily::SkewPoly: {
      // lift(c) * X = (0, c * x1) with x = (0, x1)
      const std::uint32_t x1 = x().a1;
      c = {&d, d.mul_idx(s.a1, d.inv_idx(x1))};
      break;
    }
    case RingFamily::Witt2: {
      // lift(c) * x = (0, c^p * x1); take the inverse Frobenius image
      const std::uint32_t x1 = x().a1;
      const std::uint32_t cp = d.mul_idx(s.a1, d.inv_idx(x1));
      c = {&d, d.frobenius_idx(cp, d.n() == 1 ? 0 : d.n() - 1)};
      break;
    }
  }
  if (!(ring.mul(ring.lift(c), x()) == s)) {
    throw Error(ErrorCode::Internal, "factor_by_x verification failed");
  }
  return c;
}

RingElem StructureInfo::times_x(FieldElem c) const {
  return ring_->mul(ring_->lift(c), x());
}

StructurePtr StructureInfo::analyze(const RingPtr& ring) {
  auto info = std::shared_ptr<StructureInfo>(new StructureInfo());
  info->ring_ = ring;
  info->premises_ = verify_premises(ring);
  info->residue_ = residue_field(ring);
  if (auto x = ring->radical_generator()) {
    info->sigma_ = ::trilocal::sigma(ring, *x);
  }
  info->centers_ = ::trilocal::centers(ring);
  info->classification_ = classify(ring);
  return info;
}

RingElem TriangulationDescriptor::w_elem() const {
  if (!r) throw Error(ErrorCode::InvalidSpec, "semisimple descriptor has no x");
  return info->times_x(*r);
}

TriangulationDescriptor make_descriptor(const StructurePtr& info, FieldElem r) {
  const Classification& cls = info->classification();
  if (cls.kind != TriangulationCase::Mixed &&
      cls.kind != TriangulationCase::Equicharacteristic) {
    throw Error(ErrorCode::InvalidSpec,
                "ring admits no generating triangle for this case");
  }
  bool admissible = false;
  for (const auto& cand : cls.admissible_r) {
    if (cand == r) {
      admissible = true;
      break;
    }
  }
  if (!admissible) {
    throw Error(ErrorCode::InvalidSpec,
                "r fails the admissibility conditions (a)/(b)");
  }
  return TriangulationDescriptor{info, r};
}

TriangulationDescriptor canonical_descriptor(const StructurePtr& info) {
  const Classification& cls = info->classification();
  if (cls.kind == TriangulationCase::Semisimple) {
    return TriangulationDescriptor{info, std::nullopt};
  }
  if (cls.admissible_r.empty()) {
    throw Error(ErrorCode::InvalidSpec, "ring admits no triangulation");
  }
  return TriangulationDescriptor{info, cls.admissible_r.front()};
}

}  // namespace trilocal
