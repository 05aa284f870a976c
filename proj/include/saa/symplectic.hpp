// Symplectic basis changes: checks, transvections and random scrambles.
#pragma once

#include <random>

#include "saa/algebra.hpp"

namespace saa {

inline GFElem random_elem(const GF& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  return f.from_code(d(rng));
}

/// Small fractions keep scrambled tables readable; any nonzero value would do.
inline Rational random_elem(const QQ&, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  return Rational(num(rng), den(rng));
}

template <class F>
typename F::Elem random_nonzero(const F& f, std::mt19937_64& rng) {
  for (;;) {
    auto e = random_elem(f, rng);
    if (!e.is_zero()) return e;
  }
}

/// B G B^T == G, with the rows of B the new basis vectors.
template <class E>
bool is_symplectic(const Matrix<E>& b, const Matrix<E>& g) {
  return matmul(matmul(b, g), transpose(b, g.size())) == g;
}

/// Applies w -> w + c (v, w) v to every row.
template <class E>
void apply_transvection(Matrix<E>& rows, const Matrix<E>& g, const Vec<E>& v, const E& c) {
  for (auto& w : rows) {
    E k = c * bilinear(v, g, w);
    if (!k.is_zero()) axpy(w, k, v);
  }
}

/// Product of `count` random transvections; preserves g.
template <class F>
Matrix<typename F::Elem> random_symplectic(const F& f, const Matrix<typename F::Elem>& g, std::mt19937_64& rng,
                                           int count = 24) {
  using E = typename F::Elem;
  const std::size_t n = g.size();
  Matrix<E> b = identity(n, f.one());
  for (int i = 0; i < count; ++i) {
    Vec<E> v(n);
    for (auto& x : v) x = random_elem(f, rng);
    if (is_zero_vec(v)) continue;
    apply_transvection(b, g, v, random_nonzero(f, rng));
  }
  return b;
}

/// The algebra rewritten in a random standard basis, together with that basis.
template <class F>
std::pair<Algebra<F>, Matrix<typename F::Elem>> scramble(const Algebra<F>& alg, std::mt19937_64& rng,
                                                        int count = 24) {
  auto b = random_symplectic(alg.field(), alg.gram(), rng, count);
  return {alg.transform(b), b};
}

}  // namespace saa
