// Symplectic alternating algebras given by a product table and a Gram matrix.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "saa/field.hpp"
#include "saa/linalg.hpp"

namespace saa {

namespace detail {

/// Rational vector as integer numerators over one common denominator.
struct IntVec {
  std::vector<mpz_class> num;
  mpz_class den = 1;
};

inline IntVec integerize(const std::vector<Rational>& v) {
  IntVec out;
  for (const auto& x : v) mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), x.value().get_den_mpz_t());
  out.num.reserve(v.size());
  for (const auto& x : v) out.num.push_back(x.value().get_num() * (out.den / x.value().get_den()));
  return out;
}

}  // namespace detail

/// Index of x_i (1-based i) in the order x1,y1,...,xn,yn.
constexpr std::size_t X(std::size_t i) { return 2 * (i - 1); }
/// Index of y_i (1-based i).
constexpr std::size_t Y(std::size_t i) { return 2 * (i - 1) + 1; }

inline std::string basis_name(std::size_t a) {
  return std::string(a % 2 ? "y" : "x") + std::to_string(a / 2 + 1);
}

template <class E>
Matrix<E> standard_gram(std::size_t n, const E& one) {
  Matrix<E> g(2 * n, Vec<E>(2 * n));
  for (std::size_t i = 1; i <= n; ++i) {
    g[X(i)][Y(i)] = one;
    g[Y(i)][X(i)] = -one;
  }
  return g;
}

/// Dense 3-tensor indexed [a][b][c].
template <class E>
struct Tensor3 {
  std::size_t n = 0;
  std::vector<E> v;
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : n(dim), v(dim * dim * dim) {}
  E& operator()(std::size_t a, std::size_t b, std::size_t c) { return v[(a * n + b) * n + c]; }
  const E& operator()(std::size_t a, std::size_t b, std::size_t c) const { return v[(a * n + b) * n + c]; }
  friend bool operator==(const Tensor3& x, const Tensor3& y) { return x.n == y.n && x.v == y.v; }
};

/// A finite-dimensional algebra with a bilinear form. Symplectic alternating when verify_axioms passes.
template <class F>
class Algebra {
 public:
  using Field = F;
  using E = typename F::Elem;

  Algebra(F f, Matrix<E> gram, std::vector<Matrix<E>> table)
      : f_(std::move(f)), gram_(std::move(gram)), table_(std::move(table)) {
    const std::size_t n = gram_.size();
    tri_ = Tensor3<E>(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec<E> row = vecmat(table_[a][b], gram_);
        for (std::size_t c = 0; c < n; ++c) tri_(a, b, c) = row[c];
      }
    if constexpr (std::is_same_v<E, Rational>) tri_int_ = detail::integerize(tri_.v);
  }

  /// Builds the product from the values (e_a e_b, e_c); requires a non-degenerate Gram matrix.
  static Algebra from_trilinear(F f, Matrix<E> gram, const Tensor3<E>& t) {
    const std::size_t n = gram.size();
    // (uv, e_c) = sum_k c_k G[k][c]  =>  c = t_ab * G^{-1}
    Matrix<E> ginv = inverse(gram);
    std::vector<Matrix<E>> table(n, Matrix<E>(n, Vec<E>(n)));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec<E> row(n);
        bool any = false;
        for (std::size_t c = 0; c < n; ++c) {
          row[c] = t(a, b, c);
          any = any || !row[c].is_zero();
        }
        if (any) table[a][b] = vecmat(row, ginv);
      }
    return Algebra(std::move(f), std::move(gram), std::move(table));
  }

  const F& field() const { return f_; }
  std::size_t dim() const { return gram_.size(); }
  const Matrix<E>& gram() const { return gram_; }
  const std::vector<Matrix<E>>& table() const { return table_; }
  const Vec<E>& product(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const Tensor3<E>& trilinear() const { return tri_; }

  Vec<E> unit(std::size_t a) const { return unit_vec(dim(), a, f_.one()); }

  Vec<E> mul(const Vec<E>& u, const Vec<E>& v) const {
    Vec<E> r(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (u[a].is_zero()) continue;
      for (std::size_t b = 0; b < dim(); ++b)
        if (!v[b].is_zero()) axpy(r, u[a] * v[b], table_[a][b]);
    }
    return r;
  }

  E form(const Vec<E>& u, const Vec<E>& v) const { return bilinear(u, gram_, v); }

  /// (uv, w)
  E triple(const Vec<E>& u, const Vec<E>& v, const Vec<E>& w) const {
    if constexpr (std::is_same_v<E, Rational>) return triple_int(u, v, w);
    E s{};
    const std::size_t n = dim();
    for (std::size_t a = 0; a < n; ++a) {
      if (u[a].is_zero()) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (v[b].is_zero()) continue;
        E uv = u[a] * v[b];
        for (std::size_t c = 0; c < n; ++c)
          if (!w[c].is_zero() && !tri_(a, b, c).is_zero()) s += uv * tri_(a, b, c) * w[c];
      }
    }
    return s;
  }

  /// The same algebra written in a new basis; row a of `basis` is the a-th new basis vector.
  Algebra transform(const Matrix<E>& basis) const {
    const std::size_t n = dim();
    if (basis.size() != n) throw DomainError("transform: basis size mismatch");
    if constexpr (std::is_same_v<E, Rational>) return transform_int(basis);
    Matrix<E> g = matmul(matmul(basis, gram_), transpose(basis, n));
    // contract one slot at a time
    Tensor3<E> t1(n), t2(n), t3(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t i = 0; i < n; ++i) {
        if (basis[a][i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (!tri_(i, j, k).is_zero()) t1(a, j, k) += basis[a][i] * tri_(i, j, k);
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < n; ++j) {
          if (basis[b][j].is_zero()) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (!t1(a, j, k).is_zero()) t2(a, b, k) += basis[b][j] * t1(a, j, k);
        }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t k = 0; k < n; ++k)
            if (!basis[c][k].is_zero() && !t2(a, b, k).is_zero()) t3(a, b, c) += basis[c][k] * t2(a, b, k);
    return from_trilinear(f_, std::move(g), t3);
  }

  bool is_standard_basis() const { return gram_ == standard_gram(dim() / 2, f_.one()); }

 private:
  E triple_int(const Vec<E>& u, const Vec<E>& v, const Vec<E>& w) const {
    const std::size_t n = dim();
    auto iu = detail::integerize(u), iv = detail::integerize(v), iw = detail::integerize(w);
    mpz_class total = 0, inner, mid;
    for (std::size_t a = 0; a < n; ++a) {
      if (sgn(iu.num[a]) == 0) continue;
      mid = 0;
      for (std::size_t b = 0; b < n; ++b) {
        if (sgn(iv.num[b]) == 0) continue;
        inner = 0;
        const mpz_class* t = &tri_int_.num[(a * n + b) * n];
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(t[c]) != 0 && sgn(iw.num[c]) != 0) mpz_addmul(inner.get_mpz_t(), t[c].get_mpz_t(), iw.num[c].get_mpz_t());
        mpz_addmul(mid.get_mpz_t(), inner.get_mpz_t(), iv.num[b].get_mpz_t());
      }
      mpz_addmul(total.get_mpz_t(), mid.get_mpz_t(), iu.num[a].get_mpz_t());
    }
    return Rational(mpq_class(total, iu.den * iv.den * iw.den * tri_int_.den));
  }

  Algebra transform_int(const Matrix<E>& basis) const {
    const std::size_t n = dim();
    Matrix<E> g = matmul(matmul(basis, gram_), transpose(basis, n));
    std::vector<detail::IntVec> rows;
    for (const auto& r : basis) rows.push_back(detail::integerize(r));
    const auto& t = tri_int_.num;
    std::vector<mpz_class> t1(n * n * n), t2(n * n * n), t3(n * n * n);
    auto at = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(rows[a].num[i]) == 0) continue;
        for (std::size_t jk = 0; jk < n * n; ++jk)
          if (sgn(t[i * n * n + jk]) != 0)
            mpz_addmul(t1[a * n * n + jk].get_mpz_t(), rows[a].num[i].get_mpz_t(), t[i * n * n + jk].get_mpz_t());
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < n; ++j) {
          if (sgn(rows[b].num[j]) == 0) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (sgn(t1[at(a, j, k)]) != 0)
              mpz_addmul(t2[at(a, b, k)].get_mpz_t(), rows[b].num[j].get_mpz_t(), t1[at(a, j, k)].get_mpz_t());
        }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t k = 0; k < n; ++k)
            if (sgn(rows[c].num[k]) != 0 && sgn(t2[at(a, b, k)]) != 0)
              mpz_addmul(t3[at(a, b, c)].get_mpz_t(), rows[c].num[k].get_mpz_t(), t2[at(a, b, k)].get_mpz_t());
    Tensor3<E> out(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(t3[at(a, b, c)]) != 0)
            out(a, b, c) = Rational(mpq_class(t3[at(a, b, c)], rows[a].den * rows[b].den * rows[c].den * tri_int_.den));
    return from_trilinear(f_, std::move(g), out);
  }

  F f_;
  Matrix<E> gram_;
  std::vector<Matrix<E>> table_;
  Tensor3<E> tri_;
  detail::IntVec tri_int_;  // Q only
};

struct AxiomReport {
  bool ok = true;
  std::string failure;  // empty when ok
  std::array<std::size_t, 3> where{0, 0, 0};
};

/// Alternating product, invariance (e_a e_b, e_c) = (e_b e_c, e_a), alternating non-degenerate form.
template <class F>
AxiomReport verify_axioms(const Algebra<F>& alg) {
  using E = typename F::Elem;
  const std::size_t n = alg.dim();
  const auto& g = alg.gram();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!(g[a][b] == -g[b][a]) || (a == b && !g[a][a].is_zero()))
        return {false, "form not alternating at (" + basis_name(a) + "," + basis_name(b) + ")", {a, b, 0}};
  if (rank(g, n) != n) return {false, "form degenerate", {0, 0, 0}};
  for (std::size_t a = 0; a < n; ++a) {
    if (!is_zero_vec(alg.product(a, a)))
      return {false, "product not alternating at " + basis_name(a) + basis_name(a), {a, a, 0}};
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec<E> s = vadd(alg.product(a, b), alg.product(b, a));
      if (!is_zero_vec(s))
        return {false, "product not alternating at (" + basis_name(a) + "," + basis_name(b) + ")", {a, b, 0}};
    }
  }
  const auto& t = alg.trilinear();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!(t(a, b, c) == t(b, c, a)))
          return {false,
                  "invariance fails at (" + basis_name(a) + "," + basis_name(b) + "," + basis_name(c) + ")",
                  {a, b, c}};
  return {};
}

enum class TripleKind { XYY, YYY };

/// Sparse values (x_i y_j, y_k) and (y_i y_j, y_k), 1 <= i < j < k <= n; absent entries are zero.
template <class F>
struct NilpotentPresentation {
  using E = typename F::Elem;
  using Key = std::tuple<TripleKind, int, int, int>;

  F field;
  int n = 5;
  std::map<Key, E> triples;

  NilpotentPresentation(F f, int half_dim) : field(std::move(f)), n(half_dim) {}

  void set(TripleKind kind, int i, int j, int k, const E& value) {
    if (!(1 <= i && i < j && j < k && k <= n))
      throw DomainError("triple indices must satisfy 1 <= i < j < k <= " + std::to_string(n));
    if (value.is_zero())
      triples.erase({kind, i, j, k});
    else
      triples[{kind, i, j, k}] = value;
  }
  void xyy(int i, int j, int k, const E& v) { set(TripleKind::XYY, i, j, k, v); }
  void yyy(int i, int j, int k, const E& v) { set(TripleKind::YYY, i, j, k, v); }

  E get(TripleKind kind, int i, int j, int k) const {
    auto it = triples.find({kind, i, j, k});
    return it == triples.end() ? field.zero() : it->second;
  }

  friend bool operator==(const NilpotentPresentation& a, const NilpotentPresentation& b) {
    return a.n == b.n && a.triples == b.triples;
  }
};

namespace detail {
template <class E>
void set_alternating(Tensor3<E>& t, std::size_t a, std::size_t b, std::size_t c, const E& v) {
  t(a, b, c) = v;
  t(b, c, a) = v;
  t(c, a, b) = v;
  t(b, a, c) = -v;
  t(a, c, b) = -v;
  t(c, b, a) = -v;
}
}  // namespace detail

/// Full algebra on the standard basis x1,y1,...,xn,yn.
template <class F>
Algebra<F> expand(const NilpotentPresentation<F>& p) {
  using E = typename F::Elem;
  const std::size_t n = static_cast<std::size_t>(p.n);
  Tensor3<E> t(2 * n);
  for (const auto& [key, v] : p.triples) {
    auto [kind, i, j, k] = key;
    std::size_t a = kind == TripleKind::XYY ? X(i) : Y(i);
    detail::set_alternating(t, a, Y(j), Y(k), v);
  }
  return Algebra<F>::from_trilinear(p.field, standard_gram(n, p.field.one()), t);
}

/// Reads the presentation off an algebra on a standard basis; nothing if some other triple is nonzero.
template <class F>
std::optional<NilpotentPresentation<F>> as_presentation(const Algebra<F>& alg) {
  const int n = static_cast<int>(alg.dim() / 2);
  if (!alg.is_standard_basis()) return std::nullopt;
  NilpotentPresentation<F> p(alg.field(), n);
  const auto& t = alg.trilinear();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        p.xyy(i, j, k, t(X(i), Y(j), Y(k)));
        p.yyy(i, j, k, t(Y(i), Y(j), Y(k)));
      }
  if (!(expand(p).trilinear() == t)) return std::nullopt;
  return p;
}

}  // namespace saa
