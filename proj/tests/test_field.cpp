#include "doctest.h"
#include "support.hpp"
#include "xl/field.hpp"

using namespace xl;

TEST_CASE("make_field accepts primes and rejects composites") {
  CHECK(PrimeField(3109).modulus() == 3109);
  CHECK(PrimeField(2).modulus() == 2);
  CHECK_THROWS_AS(PrimeField(15), CompositeModulus);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 31), std::invalid_argument);
  CHECK(PrimeField(2147483647).modulus() == 2147483647u);
}

TEST_CASE("inv") {
  const PrimeField f5(5);
  CHECK(f5.inv(FieldElement{1}) == FieldElement{1});
  CHECK(f5.inv(FieldElement{2}) == FieldElement{3});
  CHECK_THROWS_AS(f5.inv(FieldElement{0}), DivisionByZero);
  CHECK_THROWS_AS(f5.inv_fermat(FieldElement{0}), DivisionByZero);

  const PrimeField f(3109);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto a = test::random_nonzero(rng, f);
    const auto ia = f.inv(a);
    CHECK((std::uint64_t{a.value()} * ia.value()) % 3109 == 1);
    CHECK(ia == f.inv_fermat(a));
    CHECK(f.inv(ia) == a);
  }
}

TEST_CASE("pow") {
  const PrimeField f13(13);
  CHECK(f13.pow(FieldElement{2}, 4) == FieldElement{3});
  CHECK(f13.pow(FieldElement{7}, 0) == FieldElement{1});
  CHECK(f13.pow(FieldElement{0}, 0) == FieldElement{1});
  CHECK(f13.pow(FieldElement{0}, 5) == FieldElement{0});

  const PrimeField f(5011);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto a = test::random_nonzero(rng, f);
    std::uint64_t slow = 1;
    for (int k = 0; k < 5010; ++k) slow = slow * a.value() % 5011;
    CHECK(slow == 1);
    CHECK(f.pow(a, 5010) == FieldElement{1});
    const auto e1 = uniform_below(rng, 10000), e2 = uniform_below(rng, 10000);
    CHECK(f.pow(a, e1 + e2) == f.mul(f.pow(a, e1), f.pow(a, e2)));
  }
}

TEST_CASE("field axioms on random triples") {
  for (std::uint32_t p : {2u, 3u, 3109u, 2147483647u}) {
    const PrimeField f(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 300; ++i) {
      const auto a = test::random_element(rng, f), b = test::random_element(rng, f), c = test::random_element(rng, f);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      CHECK(f.mul(a, b).value() == (std::uint64_t{a.value()} * b.value()) % p);
    }
  }
}

TEST_CASE("reduce handles the full 64-bit range") {
  const PrimeField f(2147483647);
  for (std::uint64_t x : {0ull, 1ull, 2147483646ull, 2147483647ull, ~0ull, ~0ull - 1, 1ull << 63}) {
    CHECK(f.reduce(x) == x % 2147483647ull);
  }
  CHECK(f.element(-1) == FieldElement{2147483646});
}
