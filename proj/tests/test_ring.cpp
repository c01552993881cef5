#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "trilocal/ring.hpp"
#include "trilocal/rng.hpp"

using namespace trilocal;

namespace {

// Independent oracle for W2(F_p) over a prime field: the integers mod p^2
// under the Teichmueller correspondence (a0, a1) -> a0^p + p*a1.
std::uint32_t witt_to_zp2(const Ring& r, RingElem a) {
  const std::uint32_t p = r.spec().p;
  const std::uint32_t p2 = p * p;
  std::uint32_t teich = 1;
  for (std::uint32_t i = 0; i < p; ++i) teich = teich * a.a0 % p2;
  return (teich + p * a.a1) % p2;
}

}  // namespace

TEST_CASE("ring_make basic shapes") {
  auto w2f2 = ring_make(parse_ring_spec("w2(2)"));
  CHECK(w2f2->size() == 4);
  CHECK(w2f2->characteristic() == 4);

  auto sp8 = ring_make(parse_ring_spec("skewpoly(8; frob^1)"));
  CHECK(sp8->size() == 64);
  CHECK(sp8->characteristic() == 2);

  auto f8 = ring_make(parse_ring_spec("gf(8)"));
  CHECK(f8->size() == 8);
  CHECK(f8->characteristic() == 2);
  auto [m, x] = f8->maximal_ideal();
  CHECK(m.size() == 1);
  CHECK(m[0] == f8->zero());
  CHECK(!x.has_value());
}

TEST_CASE("spec parsing") {
  CHECK(parse_ring_spec("GF(2^6)") == RingSpec{RingFamily::Field, 2, 6, 0});
  CHECK(parse_ring_spec(" w2( 4 ) ") == RingSpec{RingFamily::Witt2, 2, 2, 0});
  CHECK(parse_ring_spec("skewpoly(64; frob^2)") ==
        RingSpec{RingFamily::SkewPoly, 2, 6, 2});
  CHECK(parse_ring_spec("skewpoly(8;frob)") ==
        RingSpec{RingFamily::SkewPoly, 2, 3, 1});
  CHECK(spec_string(parse_ring_spec("skewpoly(2^6; frob^2)")) ==
        "skewpoly(64; frob^2)");
  CHECK(spec_string(parse_ring_spec("W2(8)")) == "w2(8)");

  CHECK_THROWS_AS(parse_ring_spec("gf(6)"), Error);       // not a prime power
  CHECK_THROWS_AS(parse_ring_spec("sp(8)"), Error);       // unknown family
  CHECK_THROWS_AS(parse_ring_spec("skewpoly(8)"), Error); // missing frob
  CHECK_THROWS_AS(parse_ring_spec("skewpoly(8; frob^3)"), Error);
  CHECK_THROWS_AS(ring_make(RingSpec{RingFamily::SkewPoly, 2, 3, 3}), Error);
}

TEST_CASE("W2(F_p) is Z/p^2 for p in {2, 3}") {
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ring_make(RingSpec{RingFamily::Witt2, p, 1, 0});
    const std::uint32_t p2 = p * p;
    REQUIRE(r->size() == p2);

    // bijectivity of the correspondence
    std::set<std::uint32_t> image;
    for (std::uint64_t i = 0; i < r->size(); ++i) {
      image.insert(witt_to_zp2(*r, r->from_index(i)));
    }
    CHECK(image.size() == p2);

    // ring homomorphism on all pairs
    for (std::uint64_t i = 0; i < r->size(); ++i) {
      for (std::uint64_t j = 0; j < r->size(); ++j) {
        RingElem a = r->from_index(i), b = r->from_index(j);
        CHECK(witt_to_zp2(*r, r->add(a, b)) ==
              (witt_to_zp2(*r, a) + witt_to_zp2(*r, b)) % p2);
        CHECK(witt_to_zp2(*r, r->mul(a, b)) ==
              (witt_to_zp2(*r, a) * witt_to_zp2(*r, b)) % p2);
      }
      RingElem a = r->from_index(i);
      CHECK(witt_to_zp2(*r, r->neg(a)) == (p2 - witt_to_zp2(*r, a)) % p2);
    }

    // the explicit p = 2 table from the Z/4 model
    if (p == 2) {
      CHECK(witt_to_zp2(*r, r->make(0, 0)) == 0);
      CHECK(witt_to_zp2(*r, r->make(1, 0)) == 1);
      CHECK(witt_to_zp2(*r, r->make(0, 1)) == 2);
      CHECK(witt_to_zp2(*r, r->make(1, 1)) == 3);
    }
  }
}

TEST_CASE("witt vector arithmetic formulas") {
  auto r = ring_make(parse_ring_spec("w2(2)"));
  // (1,0) + (1,0) = (0,1): the carry a0*b0 kicks in
  CHECK(r->add(r->make(1, 0), r->make(1, 0)) == r->make(0, 1));
  // (1,1) * (1,1) = (1,0): cross-check 3*3 = 9 = 1 mod 4
  CHECK(r->mul(r->make(1, 1), r->make(1, 1)) == r->make(1, 0));
}

TEST_CASE("skew multiplication rule X a = tau(a) X") {
  auto r = ring_make(parse_ring_spec("skewpoly(8; frob^1)"));
  const Field& k = *r->base();
  for (std::uint32_t a = 0; a < k.q(); ++a) {
    RingElem xa = r->mul(r->make(0, 1), r->make(a, 0));
    CHECK(xa == r->make(0, k.frobenius_idx(a, 1)));
  }
}

TEST_CASE("units and inverses") {
  auto w2 = ring_make(parse_ring_spec("w2(2)"));
  CHECK(w2->is_unit(w2->make(1, 1)));
  CHECK(w2->unit_inverse(w2->make(1, 1)) == w2->make(1, 1));  // 3*3 = 1 mod 4
  CHECK(w2->unit_inverse(w2->one()) == w2->one());

  auto sp = ring_make(parse_ring_spec("skewpoly(8; frob^1)"));
  CHECK(!sp->is_unit(sp->make(0, 1)));
  CHECK_THROWS_AS(sp->unit_inverse(sp->make(0, 1)), Error);

  // every unit in every small ring inverts on both sides (checked inside
  // unit_inverse); spot the count too
  std::size_t units = 0;
  for (std::uint64_t i = 0; i < sp->size(); ++i) {
    if (sp->is_unit(sp->from_index(i))) {
      ++units;
      sp->unit_inverse(sp->from_index(i));
    }
  }
  CHECK(units == 56);  // 64 - 8 nonunits
}

TEST_CASE("enumeration is deterministic and complete") {
  auto r = ring_make(parse_ring_spec("skewpoly(8; frob^1)"));
  auto elems = r->enumerate_elements();
  REQUIRE(elems.size() == 64);
  std::set<std::uint64_t> seen;
  for (auto e : elems) seen.insert(r->index_of(e));
  CHECK(seen.size() == 64);

  auto w2 = ring_make(parse_ring_spec("w2(2)"));
  CHECK(w2->enumerate_elements().size() == 4);
  CHECK(ring_make(parse_ring_spec("gf(3)"))->enumerate_elements().size() == 3);
}

TEST_CASE("maximal ideal and canonical generator") {
  auto w2 = ring_make(parse_ring_spec("w2(2)"));
  auto [m, x] = w2->maximal_ideal();
  CHECK(m.size() == 2);
  REQUIRE(x.has_value());
  CHECK(*x == w2->make(0, 1));  // the element 2 in the Z/4 model

  auto sp = ring_make(parse_ring_spec("skewpoly(8; frob^1)"));
  auto [m2, x2] = sp->maximal_ideal();
  CHECK(m2.size() == 8);
  REQUIRE(x2.has_value());
  CHECK(*x2 == sp->make(0, 1));  // the class of X
  for (auto e : m2) CHECK(e.a0 == 0);
}

TEST_CASE("ring axioms exhaustively for |R| <= 64 and sampled above") {
  for (const char* spec : {"w2(2)", "w2(3)", "gf(8)", "skewpoly(4; frob^1)",
                           "skewpoly(4; frob^0)"}) {
    auto r = ring_make(parse_ring_spec(spec));
    REQUIRE(r->size() <= 64);
    const std::uint64_t s = r->size();
    for (std::uint64_t i = 0; i < s; ++i) {
      RingElem a = r->from_index(i);
      CHECK(r->add(a, r->zero()) == a);
      CHECK(r->mul(a, r->one()) == a);
      CHECK(r->mul(r->one(), a) == a);
      CHECK(r->add(a, r->neg(a)) == r->zero());
      for (std::uint64_t j = 0; j < s; ++j) {
        RingElem b = r->from_index(j);
        CHECK(r->add(a, b) == r->add(b, a));
        for (std::uint64_t l = 0; l < s; ++l) {
          RingElem c = r->from_index(l);
          CHECK(r->add(r->add(a, b), c) == r->add(a, r->add(b, c)));
          CHECK(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
          CHECK(r->mul(a, r->add(b, c)) == r->add(r->mul(a, b), r->mul(a, c)));
          CHECK(r->mul(r->add(a, b), c) == r->add(r->mul(a, c), r->mul(b, c)));
        }
      }
    }
  }

  // seeded random triples for the larger rings
  for (const char* spec : {"skewpoly(64; frob^2)", "w2(16)", "skewpoly(8; frob^1)"}) {
    auto r = ring_make(parse_ring_spec(spec));
    Rng rng(0);
    for (int trial = 0; trial < 10000; ++trial) {
      RingElem a = r->from_index(rng.below(r->size()));
      RingElem b = r->from_index(rng.below(r->size()));
      RingElem c = r->from_index(rng.below(r->size()));
      CHECK(r->add(r->add(a, b), c) == r->add(a, r->add(b, c)));
      CHECK(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
      CHECK(r->mul(a, r->add(b, c)) == r->add(r->mul(a, b), r->mul(a, c)));
      CHECK(r->mul(r->add(a, b), c) == r->add(r->mul(a, c), r->mul(b, c)));
    }
  }
}

TEST_CASE("witt2 is commutative, skewpoly with frob is not") {
  auto w2 = ring_make(parse_ring_spec("w2(4)"));
  for (std::uint64_t i = 0; i < w2->size(); ++i) {
    for (std::uint64_t j = 0; j < w2->size(); ++j) {
      CHECK(w2->mul(w2->from_index(i), w2->from_index(j)) ==
            w2->mul(w2->from_index(j), w2->from_index(i)));
    }
  }

  auto sp = ring_make(parse_ring_spec("skewpoly(8; frob^1)"));
  bool witness_found = false;
  RingElem wa = sp->zero(), wb = sp->zero();
  for (std::uint64_t i = 0; i < sp->size() && !witness_found; ++i) {
    for (std::uint64_t j = 0; j < sp->size() && !witness_found; ++j) {
      RingElem a = sp->from_index(i), b = sp->from_index(j);
      if (!(sp->mul(a, b) == sp->mul(b, a))) {
        witness_found = true;
        wa = a;
        wb = b;
      }
    }
  }
  REQUIRE(witness_found);
  CHECK(!(sp->mul(wa, wb) == sp->mul(wb, wa)));

  // aut_exponent 0 gives the commutative truncated polynomial ring
  auto sp0 = ring_make(parse_ring_spec("skewpoly(8; frob^0)"));
  for (std::uint64_t i = 0; i < sp0->size(); ++i) {
    for (std::uint64_t j = 0; j < sp0->size(); ++j) {
      CHECK(sp0->mul(sp0->from_index(i), sp0->from_index(j)) ==
            sp0->mul(sp0->from_index(j), sp0->from_index(i)));
    }
  }
}

TEST_CASE("unit and ideal closure") {
  for (const char* spec : {"w2(2)", "w2(3)", "skewpoly(4; frob^1)", "gf(8)"}) {
    auto r = ring_make(parse_ring_spec(spec));
    REQUIRE(r->size() <= 64);
    for (std::uint64_t i = 0; i < r->size(); ++i) {
      for (std::uint64_t j = 0; j < r->size(); ++j) {
        RingElem a = r->from_index(i), b = r->from_index(j);
        if (r->is_unit(a) && r->is_unit(b)) CHECK(r->is_unit(r->mul(a, b)));
        if (!r->is_unit(a)) {
          CHECK(!r->is_unit(r->mul(a, b)));
          CHECK(!r->is_unit(r->mul(b, a)));
        }
      }
    }
  }
}

TEST_CASE("2R equals the nonunit set for witt2 over GF(2^n)") {
  for (const char* spec : {"w2(2)", "w2(4)", "w2(8)"}) {
    auto r = ring_make(parse_ring_spec(spec));
    RingElem two = r->add(r->one(), r->one());
    std::set<std::uint64_t> ideal;
    for (std::uint64_t i = 0; i < r->size(); ++i) {
      ideal.insert(r->index_of(r->mul(two, r->from_index(i))));
    }
    std::set<std::uint64_t> nonunits;
    for (std::uint64_t i = 0; i < r->size(); ++i) {
      if (!r->is_unit(r->from_index(i))) nonunits.insert(i);
    }
    CHECK(ideal == nonunits);
  }
}

TEST_CASE("mixed ring operands are rejected") {
  auto a = ring_make(parse_ring_spec("w2(2)"));
  auto b = ring_make(parse_ring_spec("w2(4)"));
  CHECK_THROWS_AS(a->add(a->one(), b->one()), Error);
}
