#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "saa/canonical.hpp"
#include "saa/structure.hpp"
#include "saa/symplectic.hpp"

using namespace saa;

namespace {

template <class E>
Subspace<E> span_of(std::size_t n, std::initializer_list<std::size_t> idx, const E& one) {
  Matrix<E> rows;
  for (auto i : idx) rows.push_back(unit_vec(n, i, one));
  return Subspace<E>(n, rows);
}

}  // namespace

TEST_CASE("subspace sum, intersection, containment") {
  GF f(3);
  const auto one = f.one();
  auto a = span_of<GFElem>(10, {X(1)}, one), b = span_of<GFElem>(10, {Y(1)}, one);
  CHECK((a + b).dim() == 2);
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, b).is_zero());
  CHECK((a + b).contains(a));
  CHECK_FALSE(a.contains(b));
  CHECK_THROWS_AS(a + Subspace<GFElem>(8), DomainError);
}

TEST_CASE("dimension formula for random subspaces") {
  GF f(5);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    auto rand_space = [&](int k) {
      Matrix<GFElem> rows;
      for (int i = 0; i < k; ++i) {
        Vec<GFElem> v(10);
        for (auto& x : v) x = random_elem(f, rng);
        rows.push_back(v);
      }
      return Subspace<GFElem>(10, rows);
    };
    auto a = rand_space(1 + t % 7), b = rand_space(1 + (t * 3) % 8);
    CHECK((a + b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("echelon form is canonical") {
  Vec<Rational> u{Rational(1), Rational(2), Rational(0), Rational(-1)}, v{Rational(0), Rational(1), Rational(3), Rational(1)};
  Subspace<Rational> s1(4, {u, v});
  Subspace<Rational> s2(4, {vadd(u, v), vsub(vscale(Rational(2), u), v)});
  CHECK(s1 == s2);
}

TEST_CASE("perp on the standard form") {
  GF f(7);
  const auto one = f.one();
  auto g = standard_gram(5, one);
  auto whole = Subspace<GFElem>::whole(10, one);
  CHECK(perp(whole, g, one).is_zero());
  auto z = span_of<GFElem>(10, {X(5), X(4), X(3), X(2)}, one);
  CHECK(perp(z, g, one) == span_of<GFElem>(10, {X(5), X(4), X(3), X(2), X(1), Y(1)}, one));
  auto xs = span_of<GFElem>(10, {X(1), X(2), X(3), X(4), X(5)}, one);
  CHECK(is_isotropic(xs, g));
  CHECK_FALSE(is_isotropic(span_of<GFElem>(10, {X(1), Y(1)}, one), g));
}

TEST_CASE("perp is an inclusion-reversing involution") {
  GF f(3);
  const auto one = f.one();
  auto alg = family_algebra(f, Family::P2_4, {one});
  std::mt19937_64 rng(3);
  auto sc = scramble(alg, rng).first;
  auto lower = lower_central_series(sc);
  for (std::size_t i = 0; i < lower.size(); ++i) {
    auto p = perp(sc, lower[i]);
    CHECK(p.dim() + lower[i].dim() == 10);
    CHECK(perp(sc, p) == lower[i]);
    if (i + 1 < lower.size()) CHECK(perp(sc, lower[i]).dim() <= perp(sc, lower[i + 1]).dim());
    if (i + 1 < lower.size()) CHECK(perp(sc, lower[i + 1]).contains(perp(sc, lower[i])));
  }
}

TEST_CASE("quotient coordinates") {
  GF f(5);
  const auto one = f.one();
  auto m = span_of<GFElem>(10, {X(1), X(2)}, one);
  Matrix<GFElem> basis{unit_vec(10, Y(1), one), unit_vec(10, Y(2), one)};
  CHECK(quotient_coords(unit_vec(10, X(2), one), m, basis) == Vec<GFElem>{f.zero(), f.zero()});
  auto v = vadd(basis[0], unit_vec(10, X(1), f.from_int(3)));
  CHECK(quotient_coords(v, m, basis) == Vec<GFElem>{one, f.zero()});
  CHECK_THROWS_AS(quotient_coords(unit_vec(10, Y(5), one), m, basis), DomainError);
  Matrix<GFElem> dependent{basis[0], vadd(basis[0], unit_vec(10, X(1), one))};
  CHECK_THROWS_AS(quotient_coords(basis[0], m, dependent), DomainError);
}

TEST_CASE("quotient coordinates in L/L^2 of the type A algebra") {
  GF f(3);
  const auto one = f.one();
  auto alg = family_algebra(f, Family::P4_2, {});
  auto l2 = product_space(alg, whole_space(alg), whole_space(alg));
  CHECK(l2.contains(alg.unit(X(1))));
  Matrix<GFElem> basis{alg.unit(Y(5)), alg.unit(Y(4)), alg.unit(Y(3)), alg.unit(Y(2))};
  auto c = quotient_coords(vadd(alg.unit(Y(2)), alg.unit(X(1))), l2, basis);
  CHECK(c == Vec<GFElem>{f.zero(), f.zero(), f.zero(), one});
}

TEST_CASE("linear solves and inverses") {
  Matrix<Rational> m{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  auto inv = inverse(m);
  CHECK(matmul(m, inv) == identity<Rational>(2, Rational(1)));
  auto x = solve(m, Vec<Rational>{Rational(3), Rational(2)}, 2);
  REQUIRE(x.has_value());
  CHECK(*x == Vec<Rational>{Rational(1), Rational(1)});
  Matrix<Rational> sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(rank(sing, 2) == 1);
  CHECK_FALSE(solve(sing, Vec<Rational>{Rational(1), Rational(0)}, 2).has_value());
}
