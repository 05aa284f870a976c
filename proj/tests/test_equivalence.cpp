#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "saa/equivalence.hpp"
#include "saa/symplectic.hpp"

using namespace saa;

namespace {

std::set<std::uint32_t> kth_powers(const GF& f, long k) {
  std::set<std::uint32_t> out;
  for (const auto& x : f.elements())
    if (!x.is_zero()) out.insert(x.pow(k).code());
  return out;
}

std::vector<GFElem> valid_betas(const GF& f) {
  std::vector<GFElem> out;
  for (const auto& b : f.elements())
    if (is_irreducible_quadratic(f, f.zero(), b)) out.push_back(b);
  return out;
}

}  // namespace

TEST_CASE("equiv_c examples") {
  GF f(5);
  auto a = f.from_int(1), b = f.from_int(2);
  auto d = equiv_c(f, a, b, a, b);
  CHECK(d.equal());
  CHECK(d.sl2 == SL2<GFElem>{f.one(), f.zero(), f.zero(), f.one()});

  GF f3(3);
  CHECK(g_beta(f3, f3.one()) == std::set<std::uint32_t>{f3.one().code()});
  CHECK(equiv_c(f3, f3.zero(), f3.one(), f3.zero(), f3.one()).equal());

  CHECK_THROWS_AS(equiv_c(f, f.zero(), f.from_int(1), f.zero(), f.from_int(2)), DomainError);  // t^2+1 = (t-2)(t+2)
}

TEST_CASE("one type C class in odd characteristic") {
  for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
    GF f(q);
    auto bs = valid_betas(f);
    REQUIRE_FALSE(bs.empty());
    for (const auto& b1 : bs)
      for (const auto& b2 : bs) {
        auto d = equiv_c(f, f.zero(), b1, f.zero(), b2);
        REQUIRE(d.equal());
        CHECK(transform_c_params(f.zero(), b1, *d.sl2) == std::make_pair(f.zero(), b2));
      }
  }
}

TEST_CASE("SL2 enumeration finds witnesses for general alpha") {
  GF f(7);
  auto a1 = f.from_int(1), b1 = f.from_int(3), a2 = f.from_int(2), b2 = f.from_int(2);
  REQUIRE(is_irreducible_quadratic(f, a1, b1));
  REQUIRE(is_irreducible_quadratic(f, a2, b2));
  auto d = equiv_c(f, a1, b1, a2, b2);
  CHECK(d.criterion == "SL2 enumeration");
  REQUIRE(d.equal());
  const auto& s = *d.sl2;
  CHECK(s[0] * s[3] - s[1] * s[2] == f.one());
  CHECK(transform_c_params(a1, b1, s) == std::make_pair(a2, b2));
}

TEST_CASE("SL2 enumeration covers the group") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    GF f = q == 4 ? GF::with_order(2, 2) : GF(q);
    std::set<std::array<std::uint32_t, 4>> seen;
    for_each_sl2(f, [&](const SL2<GFElem>& s) {
      CHECK(s[0] * s[3] - s[1] * s[2] == f.one());
      seen.insert({s[0].code(), s[1].code(), s[2].code(), s[3].code()});
      return false;
    });
    CHECK(seen.size() == q * (q * q - 1));
  }
}

TEST_CASE("G(beta) is a subgroup of the squares, invariant under square rescaling") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 13u}) {
    GF f = q == 9 ? GF::with_order(3, 2) : GF(q);
    auto squares = kth_powers(f, 2);
    for (const auto& beta : valid_betas(f)) {
      auto g = g_beta(f, beta);
      CHECK(g.count(f.one().code()));
      for (auto x : g) {
        CHECK(squares.count(x));
        CHECK(g.count(f.from_code(x).inv().code()));
        for (auto y : g) CHECK(g.count((f.from_code(x) * f.from_code(y)).code()));
      }
      for (const auto& c : f.elements())
        if (!c.is_zero()) CHECK(g_beta(f, beta * c * c) == g);
    }
  }
}

TEST_CASE("norm step multiplies beta by a squared norm") {
  GF f(11);
  for (const auto& beta : valid_betas(f))
    for (const auto& a : f.elements())
      for (const auto& b : f.elements()) {
        auto n = a * a + b * b * beta;
        if (n.is_zero()) continue;
        auto s = detail::norm_step(a, b, beta);
        CHECK(s[0] * s[3] - s[1] * s[2] == f.one());
        CHECK(transform_c_params(f.zero(), beta, s) == std::make_pair(f.zero(), beta * n * n));
      }
}

TEST_CASE("equiv_c over Q") {
  QQ q;
  // beta = 1/a^4 lands on (0,1)
  for (long a : {1L, 2L, 3L, 5L, -7L}) {
    Rational beta = Rational(1) / Rational(a).pow(4);
    auto d = equiv_c(q, Rational(0), beta, Rational(0), Rational(1));
    REQUIRE(d.equal());
    CHECK(transform_c_params(Rational(0), beta, *d.sl2) == std::make_pair(Rational(0), Rational(1)));
  }
  // 2 is not a square, so (0,1) and (0,2) are separated
  CHECK(equiv_c(q, Rational(0), Rational(1), Rational(0), Rational(2)).verdict == Verdict::NotEqual);
  // alpha != 0 is first moved to alpha = 0
  auto d = equiv_c(q, Rational(2), Rational(2), Rational(0), Rational(1));
  REQUIRE(d.equal());
  CHECK(transform_c_params(Rational(2), Rational(2), *d.sl2) == std::make_pair(Rational(0), Rational(1)));
  CHECK_THROWS_AS(equiv_c(q, Rational(0), Rational(-1), Rational(0), Rational(1)), DomainError);
}

TEST_CASE("equiv_r examples") {
  GF f5(5);
  CHECK(equiv_r(Family::P2_2, f5.one(), f5.from_int(2), f5).verdict == Verdict::NotEqual);
  GF f3(3);
  for (int r = 1; r <= 2; ++r)
    for (int s = 1; s <= 2; ++s) CHECK(equiv_r(Family::P2_4, f3.from_int(r), f3.from_int(s), f3).equal());
  GF f13(13);
  for (Family fam : {Family::P2_2, Family::P2_4, Family::P2_5, Family::P2_6}) {
    auto d = equiv_r(fam, f13.from_int(6), f13.from_int(6), f13);
    CHECK(d.equal());
    CHECK(d.root->pow(power_exponent(fam)) == f13.one());
  }
  CHECK_THROWS_AS(equiv_r(Family::P2_2, f5.zero(), f5.one(), f5), DomainError);
  CHECK_THROWS_AS(equiv_r(Family::P2_3, f5.one(), f5.one(), f5), DomainError);
  QQ q;
  CHECK(equiv_r(Family::P2_5, Rational(2), Rational(16), q).equal());
  CHECK_FALSE(equiv_r(Family::P2_5, Rational(2), Rational(8), q).equal());
}

TEST_CASE("iso_witness diagonal patterns") {
  GF f(23);
  auto a = f.from_int(5);
  auto b = iso_witness(Family::P2_4, f.one(), a.pow(11), f);
  auto root = *equiv_r(Family::P2_4, f.one(), a.pow(11), f).root;
  CHECK(root.pow(11) == a.pow(11));
  std::vector<GFElem> expect{root, root.inv(), root.pow(3), root.pow(-3), root.pow(5),
                             root.pow(-5), root.pow(-4), root.pow(4), root.pow(-2), root.pow(2)};
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) CHECK(b[i][j] == (i == j ? expect[i] : f.zero()));

  GF f7(7);
  auto c = f7.from_int(2);
  auto w = iso_witness(Family::P2_5, f7.one(), c.pow(3), f7);
  auto r = *equiv_r(Family::P2_5, f7.one(), c.pow(3), f7).root;
  CHECK(w[X(2)][X(2)] == r);
  CHECK(w[Y(3)][Y(3)] == r);
  CHECK(w[Y(5)][Y(5)] == r);
  CHECK(w[X(1)][X(1)] == f7.one());

  for (Family fam : {Family::P2_2, Family::P2_4, Family::P2_5, Family::P2_6})
    CHECK(iso_witness(fam, f7.from_int(3), f7.from_int(3), f7) == identity(10, f7.one()));

  CHECK_THROWS_AS(iso_witness(Family::P2_2, GF(5).one(), GF(5).from_int(2), GF(5)), DomainError);
}

TEST_CASE("necessity direction") {
  GF f5(5);
  CHECK(reachable_parameters(Family::P2_2, f5.one(), f5) == std::set<std::uint32_t>{f5.one().code()});
  GF f2(2);
  for (Family fam : {Family::P2_2, Family::P2_4, Family::P2_5, Family::P2_6})
    CHECK(reachable_parameters(fam, f2.one(), f2).size() == 1);

  // the reachable set is the coset r (F*)^k
  for (std::uint32_t q : {5u, 7u, 9u, 13u, 23u}) {
    GF f = q == 9 ? GF::with_order(3, 2) : GF(q);
    for (Family fam : {Family::P2_2, Family::P2_4, Family::P2_5, Family::P2_6}) {
      auto r = f.elements().back();
      std::set<std::uint32_t> coset;
      for (auto p : kth_powers(f, power_exponent(fam))) coset.insert((r * f.from_code(p)).code());
      CHECK(reachable_parameters(fam, r, f) == coset);
    }
  }
  GF f13(13);
  CHECK(f13.order() - 1 == 12 * reachable_parameters(Family::P2_6, f13.one(), f13).size());
}

TEST_CASE("class counts") {
  CHECK(count_classes(Family::P2_2, GF(5)) == 4);
  CHECK(count_classes(Family::P2_2, GF(3)) == 2);
  CHECK(count_classes(Family::P2_4, GF(23)) == 11);
  CHECK(count_classes(Family::P2_7, GF(23)) == 1);
  CHECK(count_classes(Family::P4_4, GF(7)) == 1);
  CHECK(count_classes(Family::P4_4, GF::with_order(2, 3)) == 1);
  CHECK_THROWS_AS(count_classes(Family::P2_2, QQ{}), DomainError);
  for (std::uint32_t q : {7u, 11u, 13u, 25u}) {
    GF f = q == 25 ? GF::with_order(5, 2) : GF(q);
    for (Family fam : {Family::P2_2, Family::P2_4, Family::P2_5, Family::P2_6})
      CHECK(count_classes(fam, f) == (f.order() - 1) / kth_powers(f, power_exponent(fam)).size());
  }
}

TEST_CASE("equiv_forms dispatch") {
  GF f(5);
  CanonicalForm<GF> a{Family::P2_2, {f.one()}, ""}, b{Family::P2_2, {f.from_int(2)}, ""};
  CanonicalForm<GF> c{Family::P2_3, {}, ""}, o{Family::OutOfScope, {}, "x"};
  CHECK(equiv_forms(f, a, b).verdict == Verdict::NotEqual);
  CHECK(equiv_forms(f, a, c).criterion == "different families");
  CHECK(equiv_forms(f, c, c).equal());
  CHECK(equiv_forms(f, a, o).verdict == Verdict::Undecided);
}

TEST_CASE("brute-force oracle") {
  GF f(2);
  auto p23 = family_algebra(f, Family::P2_3, {});
  CHECK(brute_force_iso(p23, p23));
  CHECK_FALSE(brute_force_iso(family_algebra(f, Family::P2_1, {}), family_algebra(f, Family::P2_2, {f.one()})));
  CHECK_FALSE(brute_force_iso(p23, family_algebra(f, Family::P2_7, {})));

  std::mt19937_64 rng(8);
  auto sc = scramble(p23, rng).first;
  CHECK(brute_force_iso(p23, sc));

  GF f5(5);
  auto big = family_algebra(f5, Family::P2_3, {});
  CHECK_THROWS_WITH(brute_force_iso(big, big), Catch::Matchers::ContainsSubstring("oracle out of range"));
  auto p41 = family_algebra(f, Family::P4_1, {});
  CHECK_THROWS_WITH(brute_force_iso(p41, p41), Catch::Matchers::ContainsSubstring("oracle out of range"));
}
