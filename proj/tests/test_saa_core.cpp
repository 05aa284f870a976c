#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "saa/canonical.hpp"
#include "saa/symplectic.hpp"

using namespace saa;

TEST_CASE("expand derives products from triple values") {
  GF f(5);
  auto alg = family_algebra(f, Family::P4_1, {});
  CHECK(alg.mul(alg.unit(Y(2)), alg.unit(Y(3))) == alg.unit(X(4)));
  CHECK(alg.mul(alg.unit(Y(3)), alg.unit(Y(2))) == vscale(-f.one(), alg.unit(X(4))));

  auto p23 = family_algebra(f, Family::P2_3, {});
  CHECK(p23.mul(p23.unit(Y(1)), p23.unit(Y(2))) == p23.unit(X(4)));
  CHECK(p23.mul(p23.unit(X(1)), p23.unit(Y(2))) == p23.unit(X(5)));
  // (y4y5, x3) = -(x3y4, y5): the x-part of the reconstruction is needed
  CHECK(p23.mul(p23.unit(Y(4)), p23.unit(Y(5))) == vscale(-f.one(), p23.unit(Y(3))));
}

TEST_CASE("empty presentation gives the abelian algebra") {
  GF f(3);
  NilpotentPresentation<GF> p(f, 5);
  auto alg = expand(p);
  for (std::size_t a = 0; a < 10; ++a)
    for (std::size_t b = 0; b < 10; ++b) CHECK(is_zero_vec(alg.product(a, b)));
  CHECK(verify_axioms(alg).ok);
}

TEST_CASE("x_i y_j vanishes for j <= i") {
  GF f(7);
  for (Family fam : all_families) {
    std::vector<GFElem> ps;
    if (fam == Family::P4_4) ps = {f.zero(), f.one()};
    else if (power_exponent(fam)) ps = {f.from_int(3)};
    auto alg = family_algebra(f, fam, ps);
    for (std::size_t i = 1; i <= 5; ++i)
      for (std::size_t j = 1; j <= i; ++j) CHECK(is_zero_vec(alg.product(X(i), Y(j))));
    for (std::size_t i = 1; i <= 5; ++i)
      for (std::size_t j = 1; j <= 5; ++j) CHECK(is_zero_vec(alg.product(X(i), X(j))));
  }
}

TEST_CASE("axiom verification") {
  GF f3(3);
  CHECK(verify_axioms(family_algebra(f3, Family::P4_2, {})).ok);

  // y2 y3 = x4 with the other rows left zero breaks invariance
  GF f(5);
  std::vector<Matrix<GFElem>> table(10, Matrix<GFElem>(10, Vec<GFElem>(10)));
  table[Y(2)][Y(3)] = unit_vec(10, X(4), f.one());
  table[Y(3)][Y(2)] = unit_vec(10, X(4), -f.one());
  Algebra<GF> bad(f, standard_gram(5, f.one()), table);
  auto r = verify_axioms(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.where == std::array<std::size_t, 3>{Y(2), Y(3), Y(4)});
  CHECK(r.failure == "invariance fails at (y2,y3,y4)");

  table[Y(3)][Y(2)] = unit_vec(10, X(4), f.one());
  CHECK_FALSE(verify_axioms(Algebra<GF>(f, standard_gram(5, f.one()), table)).ok);

  auto g = standard_gram(5, f.one());
  g[X(1)][Y(1)] = f.zero();
  g[Y(1)][X(1)] = f.zero();
  std::vector<Matrix<GFElem>> zero(10, Matrix<GFElem>(10, Vec<GFElem>(10)));
  CHECK(verify_axioms(Algebra<GF>(f, g, zero)).failure == "form degenerate");
}

TEST_CASE("triple values of the presentations") {
  GF f(11);
  auto r = f.from_int(6);
  auto p22 = family_algebra(f, Family::P2_2, {r});
  CHECK(p22.triple(p22.unit(X(3)), p22.unit(Y(4)), p22.unit(Y(5))) == r);
  auto a = f.from_int(1), b = f.from_int(1);
  REQUIRE(is_irreducible_quadratic(f, a, b));
  auto p44 = family_algebra(f, Family::P4_4, {a, b});
  CHECK(p44.triple(p44.unit(X(1)), p44.unit(Y(3)), p44.unit(Y(4))) == a);
  CHECK(p44.triple(p44.unit(X(1)), p44.unit(Y(4)), p44.unit(Y(5))) == b);
}

TEMPLATE_TEST_CASE("triple is alternating and cyclic", "", GF, QQ) {
  TestType f = [] {
    if constexpr (std::is_same_v<TestType, GF>) return GF(7);
    else return QQ{};
  }();
  using E = typename TestType::Elem;
  std::mt19937_64 rng(11);
  std::vector<E> ps{f.from_int(2)};
  auto alg = family_algebra(f, Family::P2_6, ps);
  auto rv = [&] {
    Vec<E> v(10);
    for (auto& x : v) x = random_elem(f, rng);
    return v;
  };
  for (int t = 0; t < 25; ++t) {
    auto u = rv(), v = rv(), w = rv();
    E uvw = alg.triple(u, v, w);
    CHECK(alg.triple(v, w, u) == uvw);
    CHECK(alg.triple(w, u, v) == uvw);
    CHECK(alg.triple(v, u, w) == -uvw);
    CHECK(alg.triple(u, u, w).is_zero());
    CHECK(alg.form(alg.mul(u, v), w) == uvw);
  }
}

TEST_CASE("expand is injective and inverted by as_presentation") {
  GF f(3);
  std::mt19937_64 rng(5);
  std::vector<NilpotentPresentation<GF>> seen;
  for (int t = 0; t < 40; ++t) {
    NilpotentPresentation<GF> p(f, 5);
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        for (int k = j + 1; k <= 5; ++k) {
          if (rng() % 3 == 0) p.xyy(i, j, k, random_elem(f, rng));
          if (rng() % 4 == 0) p.yyy(i, j, k, random_elem(f, rng));
        }
    auto alg = expand(p);
    CHECK(verify_axioms(alg).ok);
    auto back = as_presentation(alg);
    REQUIRE(back.has_value());
    CHECK(*back == p);
    for (const auto& q : seen)
      if (!(q == p)) CHECK_FALSE(expand(q).trilinear() == alg.trilinear());
    seen.push_back(p);
  }
}

TEST_CASE("presentation indices are validated") {
  NilpotentPresentation<GF> p(GF(3), 5);
  CHECK_THROWS_AS(p.xyy(2, 2, 3, GF(3).one()), DomainError);
  CHECK_THROWS_AS(p.yyy(1, 2, 6, GF(3).one()), DomainError);
}

TEST_CASE("basis changes compose and symplectic changes keep the Gram matrix") {
  GF f(5);
  auto alg = family_algebra(f, Family::P2_5, {f.from_int(2)});
  std::mt19937_64 rng(2);
  auto b1 = random_symplectic(f, alg.gram(), rng), b2 = random_symplectic(f, alg.gram(), rng);
  CHECK(is_symplectic(b1, alg.gram()));
  auto once = alg.transform(matmul(b2, b1));
  auto twice = alg.transform(b1).transform(b2);
  CHECK(once.trilinear() == twice.trilinear());
  CHECK(once.gram() == alg.gram());
  CHECK(verify_axioms(once).ok);
}

TEST_CASE("rational transform agrees with a finite-field reduction") {
  // entries stay integral, so reducing mod 7 must commute with the change of basis
  QQ q;
  GF f(7);
  auto aq = family_algebra(q, Family::P2_4, {Rational(3)});
  auto af = family_algebra(f, Family::P2_4, {f.from_int(3)});
  std::mt19937_64 rng(9);
  Matrix<Rational> bq = identity(10, Rational(1));
  for (int t = 0; t < 6; ++t) {
    Vec<Rational> v(10);
    for (auto& x : v) x = Rational(static_cast<long>(rng() % 5) - 2);
    if (!is_zero_vec(v)) apply_transvection(bq, aq.gram(), v, Rational(1));
  }
  Matrix<GFElem> bf(10, Vec<GFElem>(10));
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) bf[i][j] = f.from_int(bq[i][j].value().get_num().get_si());
  auto tq = aq.transform(bq).trilinear();
  auto tf = af.transform(bf).trilinear();
  for (std::size_t i = 0; i < tq.v.size(); ++i) {
    REQUIRE(tq.v[i].value().get_den() == 1);
    CHECK(f.from_int(mpz_class(tq.v[i].value().get_num() % 7).get_si()) == tf.v[i]);
  }
}
