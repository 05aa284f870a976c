// Products of subspaces, central series, centre and class.
#pragma once

#include <vector>

#include "saa/algebra.hpp"

namespace saa {

template <class F>
using SubspaceOf = Subspace<typename F::Elem>;

template <class F>
SubspaceOf<F> zero_space(const Algebra<F>& alg) {
  return SubspaceOf<F>(alg.dim());
}

template <class F>
SubspaceOf<F> whole_space(const Algebra<F>& alg) {
  return SubspaceOf<F>::whole(alg.dim(), alg.field().one());
}

template <class F>
SubspaceOf<F> span(const Algebra<F>& alg, const Matrix<typename F::Elem>& vs) {
  return SubspaceOf<F>(alg.dim(), vs);
}

/// span{uv : u in U, v in V}
template <class F>
SubspaceOf<F> product_space(const Algebra<F>& alg, const SubspaceOf<F>& u, const SubspaceOf<F>& v) {
  Matrix<typename F::Elem> rows;
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) rows.push_back(alg.mul(a, b));
  return SubspaceOf<F>(alg.dim(), std::move(rows));
}

template <class F>
SubspaceOf<F> perp(const Algebra<F>& alg, const SubspaceOf<F>& s) {
  return perp(s, alg.gram(), alg.field().one());
}

/// {x in S : xV is contained in T}
template <class F>
SubspaceOf<F> multiplier_space(const Algebra<F>& alg, const SubspaceOf<F>& s, const SubspaceOf<F>& v,
                               const SubspaceOf<F>& t) {
  using E = typename F::Elem;
  const std::size_t n = alg.dim();
  if (s.is_zero()) return s;
  // linear conditions on the coefficients of x in the basis of S
  Matrix<E> ann = t.is_zero() ? identity(n, alg.field().one()) : Matrix<E>{};
  if (!t.is_zero() && t.dim() < n) ann = t.annihilator().basis();
  if (ann.empty()) return s;
  Matrix<E> cond;
  for (const auto& vb : v.basis()) {
    std::vector<Vec<E>> images;
    for (const auto& sb : s.basis()) images.push_back(alg.mul(sb, vb));
    for (const auto& w : ann) {
      Vec<E> row(s.dim());
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t k = 0; k < n; ++k)
          if (!w[k].is_zero() && !images[i][k].is_zero()) row[i] += w[k] * images[i][k];
      cond.push_back(std::move(row));
    }
  }
  if (cond.empty()) return s;
  Matrix<E> coeffs = nullspace(cond, s.dim(), alg.field().one());
  Matrix<E> rows;
  for (const auto& c : coeffs) rows.push_back(vecmat(c, s.basis()));
  return SubspaceOf<F>(n, std::move(rows));
}

template <class F>
SubspaceOf<F> centre(const Algebra<F>& alg) {
  return multiplier_space(alg, whole_space(alg), whole_space(alg), zero_space(alg));
}

/// [L, L^2, L^3, ...] ending with 0 when nilpotent; stops early on stabilisation.
template <class F>
std::vector<SubspaceOf<F>> lower_central_series(const Algebra<F>& alg) {
  std::vector<SubspaceOf<F>> out{whole_space(alg)};
  const auto all = whole_space(alg);
  for (std::size_t it = 0; it < 2 * alg.dim() + 1; ++it) {
    auto next = product_space(alg, out.back(), all);
    if (next == out.back()) break;
    out.push_back(next);
    if (next.is_zero()) break;
  }
  return out;
}

/// [0, Z(L), Z_2(L), ...] ending with L when nilpotent.
template <class F>
std::vector<SubspaceOf<F>> upper_central_series(const Algebra<F>& alg) {
  std::vector<SubspaceOf<F>> out{zero_space(alg)};
  const auto all = whole_space(alg);
  for (std::size_t it = 0; it < 2 * alg.dim() + 1; ++it) {
    auto next = multiplier_space(alg, all, all, out.back());
    if (next == out.back()) break;
    out.push_back(next);
    if (next.dim() == alg.dim()) break;
  }
  return out;
}

struct StructureReport {
  std::vector<std::size_t> lower_dims;  // dim L^1, L^2, ..., 0
  std::vector<std::size_t> upper_dims;  // dim Z_0, Z_1, ..., dim L
  bool nilpotent = false;
  int nil_class = -1;                   // -1 when not nilpotent
  std::size_t centre_dim = 0;
  bool centre_isotropic = false;
  bool perp_duality = false;            // Z_i = (L^{i+1})^perp for all i
};

template <class F>
StructureReport structure_report(const Algebra<F>& alg) {
  StructureReport r;
  auto lower = lower_central_series(alg);
  auto upper = upper_central_series(alg);
  for (const auto& s : lower) r.lower_dims.push_back(s.dim());
  for (const auto& s : upper) r.upper_dims.push_back(s.dim());
  r.nilpotent = lower.back().is_zero();
  if (r.nilpotent) r.nil_class = static_cast<int>(lower.size()) - 1;
  auto z = centre(alg);
  r.centre_dim = z.dim();
  r.centre_isotropic = is_isotropic(z, alg.gram());
  if (r.nilpotent && lower.size() == upper.size()) {
    r.perp_duality = true;
    // lower[i] = L^{i+1}
    for (std::size_t i = 0; i < lower.size(); ++i)
      if (!(upper[i] == perp(alg, lower[i]))) r.perp_duality = false;
  }
  return r;
}

/// Maximal class test on a standard basis: x_i y_{i+1} != 0 for i = 2..n-2 and x1y2, y1y2 independent.
template <class F>
bool is_maximal_class(const Algebra<F>& alg) {
  const std::size_t n = alg.dim() / 2;
  if (n < 4) throw DomainError("is_maximal_class: needs dimension at least 8");
  for (std::size_t i = 2; i + 2 <= n; ++i)
    if (is_zero_vec(alg.product(X(i), Y(i + 1)))) return false;
  Matrix<typename F::Elem> m{alg.product(X(1), Y(2)), alg.product(Y(1), Y(2))};
  return rank(m, alg.dim()) == 2;
}

}  // namespace saa
