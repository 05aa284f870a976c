// Dense exact linear algebra: vectors, matrices, subspaces in reduced echelon form.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "saa/field.hpp"

namespace saa {

template <class E>
using Vec = std::vector<E>;

template <class E>
using Matrix = std::vector<Vec<E>>;

template <class E>
bool is_zero_vec(const Vec<E>& v) {
  return std::all_of(v.begin(), v.end(), [](const E& x) { return x.is_zero(); });
}

template <class E>
Vec<E> vadd(const Vec<E>& a, const Vec<E>& b) {
  Vec<E> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class E>
Vec<E> vsub(const Vec<E>& a, const Vec<E>& b) {
  Vec<E> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class E>
Vec<E> vscale(const E& c, const Vec<E>& a) {
  Vec<E> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

/// a += c * b
template <class E>
void axpy(Vec<E>& a, const E& c, const Vec<E>& b) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

template <class E>
Vec<E> unit_vec(std::size_t n, std::size_t i, const E& one) {
  Vec<E> v(n);
  v[i] = one;
  return v;
}

template <class E>
Matrix<E> identity(std::size_t n, const E& one) {
  Matrix<E> m(n, Vec<E>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = one;
  return m;
}

template <class E>
Matrix<E> transpose(const Matrix<E>& m, std::size_t cols) {
  Matrix<E> t(cols, Vec<E>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

template <class E>
Matrix<E> matmul(const Matrix<E>& a, const Matrix<E>& b) {
  std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix<E> r(a.size(), Vec<E>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (!a[i][k].is_zero()) axpy(r[i], a[i][k], b[k]);
  return r;
}

/// Row vector times matrix.
template <class E>
Vec<E> vecmat(const Vec<E>& v, const Matrix<E>& m) {
  Vec<E> r(m.empty() ? 0 : m[0].size());
  for (std::size_t k = 0; k < m.size(); ++k) axpy(r, v[k], m[k]);
  return r;
}

/// Matrix times column vector.
template <class E>
Vec<E> matvec(const Matrix<E>& m, const Vec<E>& v) {
  Vec<E> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero() && !m[i][k].is_zero()) r[i] += m[i][k] * v[k];
  return r;
}

/// u^T G v
template <class E>
E bilinear(const Vec<E>& u, const Matrix<E>& g, const Vec<E>& v) {
  E s{};
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero() && !g[i][j].is_zero()) s += u[i] * g[i][j] * v[j];
  }
  return s;
}

/// In-place reduced row echelon form; zero rows are dropped. Returns pivot columns.
template <class E>
std::vector<std::size_t> rref(Matrix<E>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    E inv = m[r][c].inv();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      E f = -m[i][c];
      axpy(m[i], f, m[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <class E>
std::size_t rank(Matrix<E> m, std::size_t cols) {
  return rref(m, cols).size();
}

/// Basis of {x : m x = 0}.
template <class E>
Matrix<E> nullspace(Matrix<E> m, std::size_t cols, const E& one) {
  auto piv = rref(m, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  Matrix<E> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec<E> v(cols);
    v[f] = one;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

/// Some x with m x = b, or nothing.
template <class E>
std::optional<Vec<E>> solve(const Matrix<E>& m, const Vec<E>& b, std::size_t cols) {
  Matrix<E> aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug, cols + 1);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vec<E> x(cols);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
  return x;
}

template <class E>
Matrix<E> inverse(const Matrix<E>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  E one = E{};
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) {
        one = x / x;
        break;
      }
  Matrix<E> aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n);
    aug[i][n + i] = one;
  }
  auto piv = rref(aug, 2 * n);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DomainError("singular matrix");
  Matrix<E> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = Vec<E>(aug[i].begin() + n, aug[i].end());
  return inv;
}

/// Subspace of F^n held as a reduced row echelon basis; equal subspaces compare equal.
template <class E>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}
  Subspace(std::size_t ambient, Matrix<E> rows) : n_(ambient), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != n_) throw DomainError("Subspace: vector length mismatch");
    piv_ = rref(rows_, n_);
  }

  static Subspace whole(std::size_t ambient, const E& one) { return Subspace(ambient, identity(ambient, one)); }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const Matrix<E>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }
  bool is_zero() const { return rows_.empty(); }

  /// Remainder of v after elimination by the echelon rows.
  Vec<E> reduce(Vec<E> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!v[piv_[i]].is_zero()) {
        E f = -v[piv_[i]];
        axpy(v, f, rows_[i]);
      }
    return v;
  }

  /// Coefficients of v in the echelon basis; v must lie in the subspace.
  Vec<E> coords(const Vec<E>& v) const {
    if (!contains(v)) throw DomainError("Subspace::coords: vector not in subspace");
    Vec<E> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
    return c;
  }

  bool contains(const Vec<E>& v) const {
    check(v.size());
    return is_zero_vec(reduce(v));
  }
  bool contains(const Subspace& s) const {
    check(s.n_);
    for (const auto& r : s.rows_)
      if (!contains(r)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check(b.n_);
    Matrix<E> m = a.rows_;
    m.insert(m.end(), b.rows_.begin(), b.rows_.end());
    return Subspace(a.n_, std::move(m));
  }

  Subspace with(const Vec<E>& v) const {
    Matrix<E> m = rows_;
    m.push_back(v);
    return Subspace(n_, std::move(m));
  }

  /// Orthogonal complement for the plain dot product.
  Subspace annihilator() const {
    E one = rows_.empty() ? E{} : rows_[0][piv_[0]];
    if (rows_.empty()) throw DomainError("annihilator of zero subspace needs a field unit");
    return Subspace(n_, nullspace(rows_, n_, one));
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check(b.n_);
    if (a.is_zero() || b.is_zero()) return Subspace(a.n_);
    E one = a.rows_[0][a.piv_[0]];
    Matrix<E> ann = nullspace(a.rows_, a.n_, one);
    Matrix<E> annb = nullspace(b.rows_, b.n_, one);
    ann.insert(ann.end(), annb.begin(), annb.end());
    if (ann.empty()) return Subspace(a.n_, identity(a.n_, one));
    return Subspace(a.n_, nullspace(ann, a.n_, one));
  }

 private:
  void check(std::size_t m) const {
    if (m != n_) throw DomainError("Subspace: dimension mismatch");
  }

  std::size_t n_ = 0;
  Matrix<E> rows_;
  std::vector<std::size_t> piv_;
};

/// {v : (s, v) = 0 for all s in S} for the Gram matrix g.
template <class E>
Subspace<E> perp(const Subspace<E>& s, const Matrix<E>& g, const E& one) {
  const std::size_t n = g.size();
  if (s.is_zero()) return Subspace<E>::whole(n, one);
  return Subspace<E>(n, nullspace(matmul(s.basis(), g), n, one));
}

template <class E>
bool is_isotropic(const Subspace<E>& s, const Matrix<E>& g) {
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (!bilinear(u, g, v).is_zero()) return false;
  return true;
}

/// Coefficients c with v = sum c_i basis_i (mod M), unique when the basis is independent mod M.
template <class E>
Vec<E> quotient_coords(const Vec<E>& v, const Subspace<E>& m, const Matrix<E>& basis) {
  const std::size_t n = m.ambient(), k = basis.size();
  // columns: basis vectors then M's rows; solve for the combination giving v
  Matrix<E> cols;
  for (const auto& b : basis) cols.push_back(b);
  for (const auto& r : m.basis()) cols.push_back(r);
  Matrix<E> a = transpose(cols, n);
  if (rank(a, cols.size()) != cols.size()) throw DomainError("quotient_coords: basis dependent modulo subspace");
  auto x = solve(a, v, cols.size());
  if (!x) throw DomainError("quotient_coords: vector outside span of basis and subspace");
  return Vec<E>(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(k));
}

}  // namespace saa
