#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "trilocal/gf.hpp"

using namespace trilocal;

namespace {

// Test-local polynomial arithmetic over Z/p, independent of the library
// path it checks. Little-endian coefficients.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return trim(out);
}

Poly mod(Poly a, const Poly& m, std::uint32_t p) {
  a = trim(a);
  while (a.size() >= m.size()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = (a[shift + i] + (p - 1) * lead % p * m[i]) % p;
    a = trim(a);
    if (!a.empty() && a.size() >= m.size() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

}  // namespace

TEST_CASE("prime field construction") {
  auto f2 = gf_make(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->modulus() == std::vector<std::uint32_t>{0, 1});  // modulus x
  CHECK(f2->add(f2->one(), f2->one()).is_zero());

  auto f3 = gf_make(3, 1);
  CHECK(f3->q() == 3);
  // inv(2) = 2 since 2*2 = 4 = 1 mod 3
  CHECK(f3->inv(f3->from_index(2)).idx == 2);
}

TEST_CASE("gf_make rejects bad input") {
  CHECK_THROWS_AS(gf_make(4, 1), Error);
  CHECK_THROWS_AS(gf_make(1, 1), Error);
  CHECK_THROWS_AS(gf_make(2, 17), Error);
}

TEST_CASE("F8 modulus is the first irreducible cubic") {
  // Oracle: scan the 8 monic cubics over F2 in base-2 order of the lower
  // coefficients; irreducible means no root and no monic linear divisor.
  Poly first;
  for (std::uint32_t k = 0; k < 8 && first.empty(); ++k) {
    Poly f = {k & 1u, (k >> 1) & 1u, (k >> 2) & 1u, 1u};
    bool irred = true;
    for (std::uint32_t r = 0; r < 2 && irred; ++r) {
      Poly lin = {(2 - r) % 2, 1};  // x - r
      if (mod(f, lin, 2).empty()) irred = false;
    }
    if (irred) first = f;
  }
  REQUIRE(first == Poly{1, 1, 0, 1});  // x^3 + x + 1

  auto f8 = gf_make(2, 3);
  CHECK(f8->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("gf_make is deterministic") {
  auto a = gf_make(2, 6);
  auto b = gf_make(2, 6);
  CHECK(a->modulus() == b->modulus());
  auto c = gf_make(3, 2);
  auto d = gf_make(3, 2);
  CHECK(c->modulus() == d->modulus());
}

TEST_CASE("F8 multiplication against long division oracle") {
  auto f8 = gf_make(2, 3);
  const Poly m = {1, 1, 0, 1};
  FieldElem g = f8->from_coeffs({0, 1});  // class of x
  // g*g*g reduced by the modulus
  Poly ggg = mod(mul(mul({0, 1}, {0, 1}, 2), {0, 1}, 2), m, 2);
  CHECK(f8->mul(f8->mul(g, g), g).idx == encode(ggg, 2));
  CHECK(f8->mul(f8->mul(g, g), g) == f8->from_coeffs({1, 1}));  // g + 1

  // full multiplication table against the oracle
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      Poly pa = {a & 1u, (a >> 1) & 1u, (a >> 2) & 1u};
      Poly pb = {b & 1u, (b >> 1) & 1u, (b >> 2) & 1u};
      CHECK(f8->mul_idx(a, b) == encode(mod(mul(trim(pa), trim(pb), 2), m, 2), 2));
    }
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                      {2, 2},
                      {2, 3},
                      {2, 6},
                      {3, 1},
                      {3, 2},
                      {5, 1},
                      {7, 1}}) {
    auto f = gf_make(p, n);
    const std::uint32_t q = f->q();
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f->add_idx(a, 0) == a);
      CHECK(f->mul_idx(a, 1) == a);
      CHECK(f->add_idx(a, f->neg_idx(a)) == 0);
      if (a != 0) CHECK(f->mul_idx(a, f->inv_idx(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f->add_idx(a, b) == f->add_idx(b, a));
        CHECK(f->mul_idx(a, b) == f->mul_idx(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(f->add_idx(f->add_idx(a, b), c) == f->add_idx(a, f->add_idx(b, c)));
          CHECK(f->mul_idx(f->mul_idx(a, b), c) == f->mul_idx(a, f->mul_idx(b, c)));
          CHECK(f->mul_idx(a, f->add_idx(b, c)) ==
                f->add_idx(f->mul_idx(a, b), f->mul_idx(a, c)));
        }
      }
    }
  }
}

TEST_CASE("frobenius is a field automorphism") {
  for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 3}, {2, 6}, {3, 2}}) {
    auto f = gf_make(p, n);
    const std::uint32_t q = f->q();
    for (std::uint32_t k = 0; k < n; ++k) {
      std::set<std::uint32_t> image;
      for (std::uint32_t a = 0; a < q; ++a) image.insert(f->frobenius_idx(a, k));
      CHECK(image.size() == q);  // bijective
      for (std::uint32_t a = 0; a < q; ++a) {
        CHECK(f->frobenius_idx(a, n) == a);  // a^(p^n) = a
        for (std::uint32_t b = 0; b < q; ++b) {
          CHECK(f->frobenius_idx(f->add_idx(a, b), k) ==
                f->add_idx(f->frobenius_idx(a, k), f->frobenius_idx(b, k)));
          CHECK(f->frobenius_idx(f->mul_idx(a, b), k) ==
                f->mul_idx(f->frobenius_idx(a, k), f->frobenius_idx(b, k)));
        }
      }
    }
  }
}

TEST_CASE("frobenius fixed points in F8 are 0 and 1") {
  auto f8 = gf_make(2, 3);
  FieldElem g = f8->generator();
  CHECK(f8->frobenius(g, 3) == g);
  auto fixed = fixed_subfield({f8.get(), 1});
  REQUIRE(fixed.size() == 2);
  CHECK(fixed[0].idx == 0);
  CHECK(fixed[1].idx == 1);
}

TEST_CASE("fixed subfield cardinality is p^gcd(n,k)") {
  auto f64 = gf_make(2, 6);
  auto f4_in_f64 = fixed_subfield({f64.get(), 2});
  REQUIRE(f4_in_f64.size() == 4);  // the copy of F4 inside F64

  // closure under the field operations
  std::set<std::uint32_t> idx;
  for (auto e : f4_in_f64) idx.insert(e.idx);
  for (auto a : f4_in_f64) {
    if (!a.is_zero()) CHECK(idx.count(f64->inv(a).idx) == 1);
    for (auto b : f4_in_f64) {
      CHECK(idx.count(f64->add(a, b).idx) == 1);
      CHECK(idx.count(f64->mul(a, b).idx) == 1);
    }
  }

  CHECK(fixed_subfield({f64.get(), 0}).size() == 64);
  CHECK(fixed_subfield({f64.get(), 1}).size() == 2);
  CHECK(fixed_subfield({f64.get(), 3}).size() == 8);
}

TEST_CASE("mixed field operands are rejected") {
  auto f8 = gf_make(2, 3);
  auto f4 = gf_make(2, 2);
  CHECK_THROWS_AS(f8->add(f8->one(), f4->one()), Error);
}
