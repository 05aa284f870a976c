#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "saa/field.hpp"

using namespace saa;

TEST_CASE("prime field arithmetic") {
  GF f(5);
  CHECK(f.from_int(2) * f.from_int(4) == f.from_int(3));
  CHECK(f.from_int(3) - f.from_int(4) == f.from_int(4));
  CHECK(f.from_int(2) / f.from_int(3) == f.from_int(4));
  CHECK(f.from_int(-1) == f.from_int(4));
  CHECK_THROWS_AS(f.one() / f.zero(), DomainError);
}

TEST_CASE("GF(4) multiplication is forced by the modulus") {
  GF f(2, {1, 1, 1});
  auto t = f.gen();
  CHECK(t * t == t + f.one());
  CHECK(f.str(t * t) == "1+t");
  CHECK(t.pow(3) == f.one());
}

TEST_CASE("extension fields: every nonzero element is invertible") {
  for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 3u}}) {
    GF f = GF::with_order(p, n);
    CHECK(f.order() == static_cast<std::uint64_t>(std::pow(p, n)));
    for (const auto& a : f.elements())
      if (!a.is_zero()) CHECK(a * a.inv() == f.one());
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 3) + Rational(1, 6) == Rational(5, 6));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("field spec parsing") {
  CHECK(std::holds_alternative<QQ>(parse_field("Q")));
  auto f = std::get<GF>(parse_field("GF(9)"));
  CHECK(f.order() == 9);
  CHECK(f.characteristic() == 3);
  auto g = std::get<GF>(parse_field("GF(2^2;1,1,1)"));
  CHECK(g.str(g.gen() * g.gen()) == "1+t");
  CHECK(std::get<GF>(parse_field(g.spec())) == g);
  CHECK_THROWS_AS(parse_field("GF(6)"), DomainError);
  CHECK_THROWS_AS(parse_field("GF(2^2;1,0,1)"), DomainError);  // t^2+1 = (t+1)^2
  CHECK_THROWS_AS(parse_field("F(5)"), ParseError);
}

TEST_CASE("element parsing round-trips") {
  GF f = GF::with_order(3, 2);
  for (const auto& a : f.elements()) CHECK(f.parse(f.str(a)) == a);
  QQ q;
  CHECK(q.parse("-7/21") == Rational(-1, 3));
  CHECK_THROWS_AS(q.parse("1.5"), ParseError);
  CHECK_THROWS_AS(GF(5).parse("t"), ParseError);
}

TEST_CASE("irreducible quadratics") {
  GF f2(2), f3(3);
  CHECK(is_irreducible_quadratic(f2, f2.one(), f2.one()));
  CHECK(is_irreducible_quadratic(f3, f3.zero(), f3.one()));
  CHECK_FALSE(is_irreducible_quadratic(f3, f3.zero(), f3.zero()));
  CHECK_FALSE(is_irreducible_quadratic(f2, f2.zero(), f2.zero()));
  QQ q;
  CHECK(is_irreducible_quadratic(q, Rational(0), Rational(1)));
  CHECK(is_irreducible_quadratic(q, Rational(1), Rational(1)));
  CHECK_FALSE(is_irreducible_quadratic(q, Rational(0), Rational(-1)));
  CHECK_FALSE(is_irreducible_quadratic(q, Rational(3), Rational(2)));
  CHECK_FALSE(is_irreducible_quadratic(q, Rational(0), Rational(0)));
  CHECK(is_irreducible_quadratic(q, Rational(0), Rational(2)));
  CHECK_FALSE(is_irreducible_quadratic(q, Rational(1, 2), Rational(1, 16)));
}

TEST_CASE("power coset index") {
  CHECK(power_coset_index(GF(5), 4) == 4);
  CHECK(power_coset_index(GF(3), 11) == 1);
  CHECK(power_coset_index(GF(23), 11) == 11);
  CHECK(power_coset_index(GF::with_order(3, 2), 4) == 4);
  for (std::uint32_t p : {2u, 7u, 13u}) CHECK(power_coset_index(GF(p), 1) == 1);
  CHECK_THROWS_AS(power_coset_index(QQ{}, 4), DomainError);
}

TEST_CASE("same power coset") {
  GF f(5);
  CHECK_FALSE(same_power_coset(f, f.one(), f.from_int(4), 4));
  CHECK(same_power_coset(f, f.from_int(3), f.from_int(3), 7));
  QQ q;
  CHECK(same_power_coset(q, Rational(1), Rational(2048), 11));
  CHECK_FALSE(same_power_coset(q, Rational(1), Rational(1024), 11));
  CHECK(same_power_coset(q, Rational(-3), Rational(-3, 16), 4));
  CHECK_FALSE(same_power_coset(q, Rational(1), Rational(-1), 4));
  CHECK(same_power_coset(q, Rational(1), Rational(-8, 27), 3));
  CHECK_THROWS_AS(same_power_coset(f, f.zero(), f.one(), 2), DomainError);
}

TEST_CASE("kth roots over Q") {
  QQ q;
  CHECK(kth_root(q, Rational(16, 81), 4) == Rational(2, 3));
  CHECK_FALSE(kth_root(q, Rational(-16), 4).has_value());
  CHECK(kth_root(q, Rational(-27), 3) == Rational(-3));
  CHECK_FALSE(kth_root(q, Rational(2), 2).has_value());
}
