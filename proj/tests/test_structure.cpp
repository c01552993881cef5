#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "trilocal/structure.hpp"

using namespace trilocal;

namespace {
RingPtr R(const char* spec) { return ring_make(parse_ring_spec(spec)); }
}  // namespace

TEST_CASE("premises hold on the paper rings") {
  for (const char* spec : {"w2(2)", "w2(4)", "skewpoly(8; frob^1)", "gf(8)",
                           "w2(3)", "skewpoly(16; frob^1)"}) {
    auto report = verify_premises(R(spec));
    for (const auto& check : report.checks) {
      INFO(spec, " / ", check.name, ": ", check.detail);
      CHECK(check.passed);
    }
  }
}

TEST_CASE("residue fields have the right cardinality") {
  CHECK(residue_field(R("w2(4)")).d->q() == 4);
  CHECK(residue_field(R("skewpoly(8; frob^1)")).d->q() == 8);
  CHECK(residue_field(R("gf(3)")).d->q() == 3);
}

TEST_CASE("sigma is the identity on witt2") {
  auto ring = R("w2(4)");
  auto [m, x] = ring->maximal_ideal();
  for (const auto& y : m) {
    if (y == ring->zero()) continue;
    SigmaAut aut = sigma(ring, y);
    for (std::uint32_t t = 0; t < ring->base()->q(); ++t) {
      CHECK(aut.table[t] == t);
    }
  }
}

TEST_CASE("sigma is the Frobenius power on skewpoly") {
  auto sp8 = R("skewpoly(8; frob^1)");
  SigmaAut aut = sigma(sp8, *sp8->radical_generator());
  const Field& d = *sp8->base();
  for (std::uint32_t t = 0; t < d.q(); ++t) {
    CHECK(aut.table[t] == d.mul_idx(t, t));  // squaring
    CHECK(aut.inverse[aut.table[t]] == t);
  }

  auto sp64 = R("skewpoly(64; frob^2)");
  SigmaAut aut2 = sigma(sp64, *sp64->radical_generator());
  const Field& d64 = *sp64->base();
  for (std::uint32_t t = 0; t < d64.q(); ++t) {
    CHECK(aut2.table[t] == d64.frobenius_idx(t, 2));
  }

  // every nonzero x in m defines a valid sigma (construction verifies the
  // defining relation and automorphism property)
  auto [m, x] = sp8->maximal_ideal();
  for (const auto& y : m) {
    if (y == sp8->zero()) continue;
    CHECK_NOTHROW(sigma(sp8, y));
  }
}

TEST_CASE("sigma relation between generators") {
  auto w2 = R("w2(2)");
  RingElem two = *w2->radical_generator();
  CHECK(sigma_relation_check(w2, two, two));

  auto sp8 = R("skewpoly(8; frob^1)");
  RingElem x = *sp8->radical_generator();
  RingElem y = sp8->mul(x, sp8->lift(sp8->base()->generator()));
  CHECK(sigma_relation_check(sp8, x, y));

  // commutative residue field: all generators define the same sigma
  auto [m, gen] = sp8->maximal_ideal();
  SigmaAut base_aut = sigma(sp8, x);
  for (const auto& z : m) {
    if (z == sp8->zero()) continue;
    CHECK(sigma(sp8, z).table == base_aut.table);
  }
}

TEST_CASE("centers of the skew examples") {
  auto sp8 = R("skewpoly(8; frob^1)");
  Centers c8 = centers(sp8);
  CHECK(c8.z_ring.size() == 2);  // {0, 1}
  CHECK(c8.d_prime.size() == 2);
  CHECK(c8.z_d.size() == 8);
  CHECK(c8.sigma_fixed.size() == 2);

  auto sp64 = R("skewpoly(64; frob^2)");
  Centers c64 = centers(sp64);
  CHECK(c64.d_prime.size() == 4);
  CHECK(c64.sigma_fixed.size() == 4);
  for (const auto& a : c64.z_ring) CHECK(a.a1 == 0);

  auto w2 = R("w2(4)");
  Centers cw = centers(w2);
  CHECK(cw.z_ring.size() == w2->size());
  CHECK(cw.d_prime.size() == 4);
}

TEST_CASE("classification trichotomy") {
  Classification mixed = classify(R("w2(2)"));
  CHECK(mixed.kind == TriangulationCase::Mixed);
  REQUIRE(mixed.admissible_r.size() == 1);
  CHECK(mixed.admissible_r[0].idx == 1);

  Classification equi = classify(R("skewpoly(8; frob^1)"));
  CHECK(equi.kind == TriangulationCase::Equicharacteristic);
  REQUIRE(equi.admissible_r.size() == 1);
  CHECK(equi.admissible_r[0].idx == 1);

  Classification none_mixed = classify(R("w2(3)"));
  CHECK(none_mixed.kind == TriangulationCase::None);
  CHECK(none_mixed.admissible_r.empty());
  REQUIRE(none_mixed.obstruction.has_value());
  REQUIRE(none_mixed.obstruction->sign_witness.has_value());
  CHECK(none_mixed.obstruction->primary() == "x != -x");

  Classification none_equi = classify(R("skewpoly(16; frob^1)"));
  CHECK(none_equi.kind == TriangulationCase::None);
  CHECK(none_equi.admissible_r.empty());
  REQUIRE(none_equi.obstruction.has_value());
  CHECK(!none_equi.obstruction->sign_witness.has_value());  // char 2
  // sigma^3 = Frob^3 has order 4 on F16, so condition (b) fails
  bool b_failed = false;
  for (const auto& f : none_equi.obstruction->failed) {
    if (f == "condition (b)") b_failed = true;
  }
  CHECK(b_failed);

  CHECK(classify(R("gf(8)")).kind == TriangulationCase::Semisimple);
}

TEST_CASE("triangulation counts match the examples") {
  CHECK(count_triangulations(R("skewpoly(8; frob^1)")) == 1);
  CHECK(count_triangulations(R("skewpoly(2^6; frob^2)")) == 3);
  CHECK(count_triangulations(R("gf(8)")) == 1);
  CHECK(count_triangulations(R("w2(2)")) == 1);
  CHECK(count_triangulations(R("w2(4)")) == 3);
  CHECK(count_triangulations(R("w2(8)")) == 7);
  CHECK(count_triangulations(R("w2(3)")) == 0);
  CHECK(count_triangulations(R("skewpoly(16; frob^1)")) == 0);
}

TEST_CASE("equivalence classes of triangulations") {
  auto cls64 = equivalence_classes(R("skewpoly(2^6; frob^2)"));
  REQUIRE(cls64.size() == 1);
  CHECK(cls64[0].size() == 3);

  auto clsw4 = equivalence_classes(R("w2(4)"));
  REQUIRE(clsw4.size() == 1);
  CHECK(clsw4[0].size() == 3);

  auto cls8 = equivalence_classes(R("skewpoly(8; frob^1)"));
  REQUIRE(cls8.size() == 1);
  CHECK(cls8[0].size() == 1);

  CHECK(equivalence_classes(R("w2(3)")).empty());
}

TEST_CASE("sign obstruction") {
  auto w2f2 = R("w2(2)");
  CHECK(!sign_obstruction(w2f2, *w2f2->radical_generator()).has_value());

  auto w2f3 = R("w2(3)");
  auto witness = sign_obstruction(w2f3, *w2f3->radical_generator());
  REQUIRE(witness.has_value());
  CHECK(witness->first == w2f3->make(0, 1));
  CHECK(witness->second == w2f3->make(0, 2));

  auto sp8 = R("skewpoly(8; frob^1)");
  CHECK(!sign_obstruction(sp8, *sp8->radical_generator()).has_value());
}

TEST_CASE("factoring by x round-trips on the maximal ideal") {
  for (const char* spec : {"w2(2)", "w2(4)", "w2(8)", "w2(3)",
                           "skewpoly(8; frob^1)", "skewpoly(64; frob^2)"}) {
    auto info = StructureInfo::analyze(R(spec));
    auto [m, x] = info->ring()->maximal_ideal();
    for (const auto& s : m) {
      FieldElem c = info->factor_by_x(s);
      CHECK(info->times_x(c) == s);
    }
  }
}

TEST_CASE("descriptors validate admissibility") {
  auto info = StructureInfo::analyze(R("w2(4)"));
  const Field& d = *info->d();
  CHECK_NOTHROW(make_descriptor(info, d.one()));
  CHECK_THROWS_AS(make_descriptor(info, d.zero()), Error);

  auto desc = canonical_descriptor(info);
  REQUIRE(desc.r.has_value());
  CHECK(desc.r->idx == 1);
  CHECK(desc.w_elem() == info->ring()->mul(info->ring()->lift(*desc.r), info->x()));

  auto none_info = StructureInfo::analyze(R("w2(3)"));
  CHECK_THROWS_AS(canonical_descriptor(none_info), Error);

  auto field_info = StructureInfo::analyze(R("gf(8)"));
  auto field_desc = canonical_descriptor(field_info);
  CHECK(field_desc.semisimple());
}

TEST_CASE("analysis bundles stay consistent") {
  auto info = StructureInfo::analyze(R("skewpoly(8; frob^1)"));
  CHECK(info->premises().all_passed());
  CHECK(info->classification().kind == TriangulationCase::Equicharacteristic);
  const Field& d = *info->d();
  for (std::uint32_t t = 0; t < d.q(); ++t) {
    CHECK(info->sigma_inv(info->sigma({&d, t})).idx == t);
    CHECK(info->sigma_pow({&d, t}, 3).idx == t);  // Frob^3 = id on F8
  }
}
