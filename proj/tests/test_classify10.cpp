#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "saa/classify.hpp"
#include "saa/symplectic.hpp"

using namespace saa;

namespace {

template <class E>
E det(Matrix<E> m, const E& one) {
  const std::size_t n = m.size();
  E d = one;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return E{};
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      E f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

Matrix<GFElem> y_reps(const Algebra<GF>& alg) {
  return {alg.unit(Y(2)), alg.unit(Y(3)), alg.unit(Y(4)), alg.unit(Y(5))};
}

}  // namespace

TEST_CASE("phi forms") {
  GF f(5);
  auto a = f.from_int(1), b = f.from_int(2);  // t^2+t+2 has no root mod 5
  REQUIRE(is_irreducible_quadratic(f, a, b));
  auto alg = family_algebra(f, Family::P4_4, {a, b});
  PhiSpace<GF> ps(alg, y_reps(alg));
  CHECK(ps.phi(alg.unit(X(3))) == Matrix<GFElem>(4, Vec<GFElem>(4)));
  for (const auto& r : f.elements())
    for (const auto& s : f.elements()) {
      auto z = vadd(vscale(r, alg.unit(X(1))), vscale(s, alg.unit(Y(1))));
      auto q = b * r * r + a * r * s + s * s;
      CHECK(det(ps.phi(z), f.one()) == q * q);
    }
  CHECK_THROWS_AS(ps.phi(alg.unit(Y(2))), DomainError);

  GF f3(3);
  auto p42 = family_algebra(f3, Family::P4_2, {});
  PhiSpace<GF> ps42(p42, y_reps(p42));
  CHECK(rank(ps42.phi(p42.unit(X(1))), 4) == 2);
}

TEST_CASE("phi is well defined modulo the centre and L^2") {
  GF f(3);
  auto alg = family_algebra(f, Family::P4_4, {f.zero(), f.one()});
  auto reps = y_reps(alg);
  PhiSpace<GF> ps(alg, reps);
  auto shifted = reps;
  shifted[0] = vadd(shifted[0], alg.unit(X(1)));
  shifted[2] = vadd(shifted[2], alg.unit(Y(1)));
  PhiSpace<GF> ps2(alg, shifted);
  auto z = alg.unit(X(1));
  CHECK(ps.phi(z) == ps2.phi(z));
  CHECK(ps.phi(z) == ps.phi(vadd(z, alg.unit(X(4)))));
}

TEST_CASE("centre 4 type trichotomy") {
  GF f(3);
  CHECK(centre4_type(family_algebra(f, Family::P4_2, {})).tag == C4Type::A);
  CHECK(centre4_type(family_algebra(f, Family::P4_3, {})).tag == C4Type::B);
  auto c = centre4_type(family_algebra(f, Family::P4_4, {f.zero(), f.one()}));
  CHECK(c.tag == C4Type::C);
  REQUIRE(c.params.has_value());
  CHECK(is_irreducible_quadratic(f, c.params->first, c.params->second));
  QQ q;
  CHECK(centre4_type(family_algebra(q, Family::P4_2, {})).tag == C4Type::A);
  CHECK(centre4_type(family_algebra(q, Family::P4_3, {})).tag == C4Type::B);
  CHECK(centre4_type(family_algebra(q, Family::P4_4, {Rational(1), Rational(3)})).tag == C4Type::C);
  CHECK_THROWS_AS(centre4_type(family_algebra(f, Family::P4_1, {})), DomainError);
}

TEST_CASE("totally isotropic planes") {
  GF f(3);
  const auto one = f.one(), zero = f.zero();
  auto alg = family_algebra(f, Family::P4_4, {zero, one});
  PhiSpace<GF> ps(alg, y_reps(alg));
  auto e = [&](std::size_t i) { return unit_vec(4, i, one); };
  CHECK(totally_isotropic_plane(ps, alg.unit(Y(2))) == Subspace<GFElem>(4, {e(0), e(2)}));
  CHECK(totally_isotropic_plane(ps, alg.unit(Y(3))) == Subspace<GFElem>(4, {e(1), e(3)}));
  CHECK_THROWS_AS(totally_isotropic_plane(ps, alg.unit(X(1))), DomainError);
}

TEST_CASE("type C parameters") {
  GF f(3);
  const auto one = f.one(), zero = f.zero();
  auto alg = family_algebra(f, Family::P4_4, {zero, one});
  auto p = extract_c_params(alg, alg.unit(X(1)), alg.unit(Y(1)));
  CHECK(p == std::make_pair(zero, one));

  // x1 -> y1, y1 -> -x1; expected values from the fraction formulas
  auto swapped = extract_c_params(alg, alg.unit(Y(1)), vscale(-one, alg.unit(X(1))));
  CHECK(swapped == transform_c_params(zero, one, SL2<GFElem>{zero, one, -one, zero}));
  CHECK_THROWS_AS(extract_c_params(alg, alg.unit(X(1)), vscale(-one, alg.unit(Y(1)))), DomainError);
}

TEST_CASE("transform_c_params matches the fraction formulas") {
  GF f(7);
  auto prop = [&](GFElem al, GFElem be, GFElem a, GFElem b, GFElem c, GFElem d) {
    auto two = f.from_int(2);
    auto den = d * d + al * c * d + c * c * be;
    return std::make_pair(((a * d + b * c) * al + two * (a * c * be + b * d)) / den, (b * b + a * b * al + a * a * be) / den);
  };
  auto al = f.from_int(1), be = f.from_int(3);
  REQUIRE(is_irreducible_quadratic(f, al, be));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    auto a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
    if (a.is_zero()) continue;
    auto d = (f.one() + b * c) / a;
    CHECK(transform_c_params(al, be, SL2<GFElem>{a, b, c, d}) == prop(al, be, a, b, c, d));
  }
}

TEST_CASE("classification examples") {
  GF f7(7);
  auto p25 = family_algebra(f7, Family::P2_5, {f7.from_int(2)});
  std::mt19937_64 rng(17);
  auto [sc, basis] = scramble(p25, rng);
  auto c = canonicalize(sc);
  CHECK(c.form.family == Family::P2_5);
  CHECK(same_power_coset(f7, f7.from_int(2), c.form.params.at(0), 3));
  CHECK(is_symplectic(c.witness, sc.gram()));
  CHECK(as_presentation(sc.transform(c.witness)) == std::optional(family_presentation(f7, Family::P2_5, c.form.params)));

  GF f3(3);
  auto p41 = canonicalize(family_algebra(f3, Family::P4_1, {}));
  CHECK(p41.form.family == Family::P4_1);
  CHECK(canonicalize(family_algebra(f3, Family::P2_7, {})).form.family == Family::P2_7);
}

TEST_CASE("algebras outside the scope") {
  GF f(3);
  NilpotentPresentation<GF> empty(f, 5);
  auto ab = canonicalize(expand(empty));
  CHECK(ab.form.family == Family::OutOfScope);
  CHECK(ab.form.reason == "handled in prior work: non-isotropic centre of dimension 10");
  CHECK(ab.witness.empty());

  // y3y4y5 only: x1,...,x5 and y1, y2 are central
  NilpotentPresentation<GF> p(f, 5);
  p.yyy(3, 4, 5, f.one());
  CHECK(canonicalize(expand(p)).form.family == Family::OutOfScope);

  // isotropic centre of dimension 3
  NilpotentPresentation<GF> q(f, 5);
  q.xyy(1, 2, 4, f.one());
  q.yyy(1, 3, 5, f.one());
  q.xyy(2, 3, 4, f.one());
  auto alg = expand(q);
  auto z = centre(alg);
  REQUIRE(z.dim() == 3);
  REQUIRE(is_isotropic(z, alg.gram()));
  CHECK(canonicalize(alg).form.reason.rfind("handled in prior work: isotropic centre", 0) == 0);

  NilpotentPresentation<GF> small(f, 4);
  CHECK_THROWS_AS(canonicalize(expand(small)), DomainError);
}

TEST_CASE("non-SAA tables are rejected") {
  GF f(5);
  std::vector<Matrix<GFElem>> table(10, Matrix<GFElem>(10, Vec<GFElem>(10)));
  table[Y(2)][Y(3)] = unit_vec(10, X(4), f.one());
  table[Y(3)][Y(2)] = unit_vec(10, X(4), -f.one());
  CHECK_THROWS_AS(canonicalize(Algebra<GF>(f, standard_gram(5, f.one()), table)), DomainError);
}

TEST_CASE("classification over Q") {
  QQ q;
  std::mt19937_64 rng(4);
  auto alg = family_algebra(q, Family::P2_4, {Rational(2)});
  auto sc = scramble(alg, rng, 6).first;
  auto c = canonicalize(sc);
  CHECK(c.form.family == Family::P2_4);
  CHECK(same_power_coset(q, Rational(2), c.form.params.at(0), 11));
  CHECK(as_presentation(sc.transform(c.witness)) == std::optional(family_presentation(q, Family::P2_4, c.form.params)));

  auto cc = canonicalize(scramble(family_algebra(q, Family::P4_4, {Rational(1), Rational(1)}), rng, 6).first);
  CHECK(cc.form.family == Family::P4_4);
  CHECK(cc.form.params.at(0).is_zero());
}
