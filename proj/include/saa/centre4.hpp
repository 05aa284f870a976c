// Canonical forms for nilpotent SAAs of dimension 10 with isotropic centre of dimension 4.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "saa/canonical.hpp"
#include "saa/frame.hpp"
#include "saa/power.hpp"

namespace saa {

enum class C4Type { A, B, C };

inline std::string c4_type_name(C4Type t) {
  switch (t) {
    case C4Type::A: return "A";
    case C4Type::B: return "B";
    case C4Type::C: return "C";
  }
  return "?";
}

template <class F>
struct Centre4Type {
  C4Type tag = C4Type::A;
  std::optional<std::pair<typename F::Elem, typename F::Elem>> params;  // C only
};

/// An element of SL2 acting by x1 -> a x1 + b y1, y1 -> c x1 + d y1.
template <class E>
using SL2 = std::array<E, 4>;

/// The forms phi_z on L/L^2 for an algebra with L^3 = Z(L) of dimension 4, in a fixed
/// basis of representatives for L/L^2.
template <class F>
class PhiSpace {
 public:
  using E = typename F::Elem;

  explicit PhiSpace(const Algebra<F>& alg) : alg_(&alg) {
    init();
    const std::size_t n = alg.dim();
    SubspaceOf<F> acc = L2_;
    for (std::size_t i = 0; i < n && quot_.size() < 4; ++i) {
      auto e = unit_vec(n, i, alg.field().one());
      if (acc.contains(e)) continue;
      quot_.push_back(e);
      acc = acc.with(e);
    }
  }

  PhiSpace(const Algebra<F>& alg, Matrix<E> quot) : alg_(&alg), quot_(std::move(quot)) {
    init();
    if (quot_.size() != 4 || !(span_with(L2_, quot_).dim() == alg.dim()))
      throw DomainError("PhiSpace: representatives do not give a basis of L/L^2");
  }

  const Algebra<F>& algebra() const { return *alg_; }
  const SubspaceOf<F>& centre() const { return Z_; }
  const SubspaceOf<F>& square() const { return L2_; }
  const Matrix<E>& representatives() const { return quot_; }

  /// Matrix of phi_z in the representative basis.
  Matrix<E> phi(const Vec<E>& z) const {
    if (!L2_.contains(z)) throw DomainError("phi: z is not in L^2");
    Matrix<E> m(4, Vec<E>(4));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) {
        m[a][b] = alg_->triple(z, quot_[a], quot_[b]);
        m[b][a] = -m[a][b];
      }
    return m;
  }

  /// Coordinates of u + L^2 in the representative basis.
  Vec<E> coords(const Vec<E>& u) const { return quotient_coords(u, L2_, quot_); }
  Vec<E> lift(const Vec<E>& c) const { return vecmat(c, quot_); }

  /// A pair x1, y1 in L^2 with (x1, y1) = 1, taken from the echelon basis.
  std::pair<Vec<E>, Vec<E>> default_pair() const {
    for (const auto& u : L2_.basis()) {
      if (Z_.contains(u)) continue;
      for (const auto& v : L2_.basis()) {
        E c = alg_->form(u, v);
        if (!c.is_zero()) return {u, vscale(c.inv(), v)};
      }
    }
    throw InternalError("PhiSpace: L^2/Z(L) carries no symplectic pair");
  }

 private:
  static SubspaceOf<F> span_with(const SubspaceOf<F>& s, const Matrix<E>& vs) {
    SubspaceOf<F> out = s;
    for (const auto& v : vs) out = out.with(v);
    return out;
  }

  void init() {
    const auto& alg = *alg_;
    if (alg.dim() != 10) throw DomainError("PhiSpace: dimension must be 10");
    Z_ = saa::centre(alg);
    if (Z_.dim() != 4 || !is_isotropic(Z_, alg.gram())) throw DomainError("PhiSpace: centre is not isotropic of dimension 4");
    L2_ = product_space(alg, whole_space(alg), whole_space(alg));
    if (!(L2_ == perp(alg, Z_))) throw DomainError("PhiSpace: L^2 differs from Z(L)^perp");
    if (!(product_space(alg, L2_, whole_space(alg)) == Z_)) throw DomainError("PhiSpace: L^3 differs from Z(L)");
  }

  const Algebra<F>* alg_;
  SubspaceOf<F> Z_, L2_;
  Matrix<E> quot_;
};

/// Pfaffian of a 4x4 alternating matrix.
template <class E>
E pfaffian4(const Matrix<E>& m) {
  return m[0][1] * m[2][3] - m[0][2] * m[1][3] + m[0][3] * m[1][2];
}

/// Projective zeros (r : s) of A r^2 + B r s + C s^2.
inline std::vector<std::pair<GFElem, GFElem>> projective_zeros(const GF& f, const GFElem& a, const GFElem& b,
                                                               const GFElem& c) {
  std::vector<std::pair<GFElem, GFElem>> out;
  if (a.is_zero()) out.emplace_back(f.one(), f.zero());
  for (const auto& t : f.elements())
    if ((a * t * t + b * t + c).is_zero()) out.emplace_back(t, f.one());
  return out;
}

inline std::vector<std::pair<Rational, Rational>> projective_zeros(const QQ& f, const Rational& a, const Rational& b,
                                                                   const Rational& c) {
  std::vector<std::pair<Rational, Rational>> out;
  if (a.is_zero() && b.is_zero() && c.is_zero()) throw InternalError("projective_zeros: zero form");
  if (a.is_zero()) {
    out.emplace_back(f.one(), f.zero());
    if (!b.is_zero()) out.emplace_back(-c / b, f.one());
    return out;
  }
  Rational disc = b * b - Rational(4) * a * c;
  auto root = kth_root(f, disc, 2);
  if (!root) return out;
  Rational two_a = Rational(2) * a;
  out.emplace_back((-b + *root) / two_a, f.one());
  if (!root->is_zero()) out.emplace_back((-b - *root) / two_a, f.one());
  return out;
}

namespace detail {

/// Coefficients (A, B, C) of pf(r phi_x + s phi_y) = A r^2 + B r s + C s^2.
template <class E>
std::array<E, 3> pfaffian_quadratic(const Matrix<E>& px, const Matrix<E>& py) {
  E a = pfaffian4(px), c = pfaffian4(py);
  Matrix<E> sum = px;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) sum[i][j] += py[i][j];
  return {a, pfaffian4(sum) - a - c, c};
}

/// A v in the subspace meeting the conditions u^T phi v = value; unique unless `any` is set.
template <class E>
Vec<E> pick_in(const Subspace<E>& plane, const std::vector<std::tuple<const Matrix<E>*, Vec<E>, E>>& conds,
               const std::string& what, bool any = false) {
  const auto& bs = plane.basis();
  Matrix<E> m;
  Vec<E> rhs;
  for (const auto& [phi, u, val] : conds) {
    Vec<E> row;
    for (const auto& b : bs) row.push_back(bilinear(u, *phi, b));
    m.push_back(std::move(row));
    rhs.push_back(val);
  }
  auto c = solve(m, rhs, bs.size());
  if (!c) throw InternalError("type C: no choice for " + what);
  if (!any && rank(m, bs.size()) != bs.size()) throw InternalError("type C: choice of " + what + " is not unique");
  return vecmat(*c, bs);
}

template <class F>
void apply_sl2(Frame<F>& fr, const SL2<typename F::Elem>& s) {
  auto x1 = fr.x(1), y1 = fr.y(1);
  fr.x(1) = vadd(vscale(s[0], x1), vscale(s[1], y1));
  fr.y(1) = vadd(vscale(s[2], x1), vscale(s[3], y1));
}

/// y_{idx[a]} -> sum_b g[a][b] y_{idx[b]}, with the dual change on the x's.
template <class F>
void apply_block(Frame<F>& fr, const std::vector<int>& idx, const Matrix<typename F::Elem>& g) {
  using E = typename F::Elem;
  const std::size_t k = idx.size();
  Matrix<E> dual = transpose(inverse(g), k);
  Matrix<E> xs, ys;
  for (int i : idx) {
    xs.push_back(fr.x(i));
    ys.push_back(fr.y(i));
  }
  for (std::size_t a = 0; a < k; ++a) {
    fr.x(idx[a]) = vecmat(dual[a], xs);
    fr.y(idx[a]) = vecmat(g[a], ys);
  }
}

template <class F>
Matrix<typename F::Elem> frame_phi(const Frame<F>& fr, const Vec<typename F::Elem>& z) {
  Matrix<typename F::Elem> m(4, Vec<typename F::Elem>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      m[a][b] = fr.tri(z, fr.y(a + 2), fr.y(b + 2));
      m[b][a] = -m[a][b];
    }
  return m;
}

/// Clears (y_i y_j, y_k), 2 <= i < j < k <= 5, by y_i += a_i w for w in span(x1, y1).
template <class F>
void clear_top(Frame<F>& fr, const std::string& step) {
  using E = typename F::Elem;
  const auto& f = fr.field();
  const std::vector<Coord> top{B(2, 3, 4), B(2, 3, 5), B(2, 4, 5), B(3, 4, 5)};
  auto shifted = [&](const Vec<E>& a, const E& lam, const E& mu) {
    Frame<F> g = fr;
    Vec<E> w = vadd(vscale(lam, fr.x(1)), vscale(mu, fr.y(1)));
    for (int i = 2; i <= 5; ++i) {
      const E& ai = a[static_cast<std::size_t>(i - 2)];
      if (ai.is_zero()) continue;
      axpy(g.y(i), ai, w);
      axpy(g.x(1), -(mu * ai), fr.x(i));
      axpy(g.y(1), lam * ai, fr.x(i));
    }
    return g;
  };
  Vec<E> base(4);
  for (std::size_t r = 0; r < 4; ++r) base[r] = fr.at(top[r]);
  if (is_zero_vec(base)) return;
  const std::vector<std::pair<long, long>> dirs{{1, 1}, {1, 0}, {0, 1}, {1, -1}, {1, 2}, {2, 1}};
  for (const auto& [l, m] : dirs) {
    E lam = f.from_int(l), mu = f.from_int(m);
    if (lam.is_zero() && mu.is_zero()) continue;
    Matrix<E> mat(4, Vec<E>(4));
    for (std::size_t c = 0; c < 4; ++c) {
      Vec<E> e(4);
      e[c] = f.one();
      Frame<F> g = shifted(e, lam, mu);
      for (std::size_t r = 0; r < 4; ++r) mat[r][c] = g.at(top[r]) - base[r];
    }
    auto a = solve(mat, vscale(-f.one(), base), 4);
    if (!a) continue;
    fr = shifted(*a, lam, mu);
    fr.require_standard(step);
    for (const auto& c : top)
      if (!fr.at(c).is_zero()) throw InternalError(step + ": shift left " + coord_name(c) + " nonzero");
    return;
  }
  throw InternalError(step + ": no shift clears the y-triples");
}

}  // namespace detail

/// phi_z in the default representative basis of L/L^2.
template <class F>
Matrix<typename F::Elem> phi(const Algebra<F>& alg, const Vec<typename F::Elem>& z) {
  return PhiSpace<F>(alg).phi(z);
}

/// {u}^perp for phi_x intersected with {u}^perp for phi_y, in quotient coordinates.
template <class E>
Subspace<E> isotropic_plane(const Matrix<E>& px, const Matrix<E>& py, const Vec<E>& u, const E& one) {
  if (is_zero_vec(u)) throw DomainError("totally_isotropic_plane: zero vector");
  Subspace<E> line(4, {u});
  auto plane = intersect(perp(line, px, one), perp(line, py, one));
  if (plane.dim() != 2) throw InternalError("totally isotropic plane has dimension " + std::to_string(plane.dim()));
  for (const auto& a : plane.basis())
    for (const auto& b : plane.basis())
      if (!bilinear(a, px, b).is_zero() || !bilinear(a, py, b).is_zero())
        throw InternalError("plane is not totally isotropic");
  return plane;
}

/// The unique totally isotropic plane through u + L^2, in the coordinates of `ps`.
template <class F>
Subspace<typename F::Elem> totally_isotropic_plane(const PhiSpace<F>& ps, const Vec<typename F::Elem>& u) {
  if (ps.square().contains(u)) throw DomainError("totally_isotropic_plane: u lies in L^2");
  auto [x1, y1] = ps.default_pair();
  return isotropic_plane(ps.phi(x1), ps.phi(y1), ps.coords(u), ps.algebra().field().one());
}

/// Basis y2..y5 of L/L^2 (quotient coordinates) built from planes P1, P2 and y2 in P1, with the resulting (alpha, beta).
template <class E>
struct CBasis {
  Vec<E> y2, y3, y4, y5;
  E alpha, beta;
};

template <class E>
CBasis<E> c_basis(const Matrix<E>& px, const Matrix<E>& py, const Subspace<E>& p1, const Subspace<E>& p2,
                  const Vec<E>& y2, const E& one) {
  using detail::pick_in;
  const E zero{};
  if (is_zero_vec(y2) || !p1.contains(y2)) throw DomainError("c_basis: y2 must be a nonzero vector of P1");
  if (p1 == p2) throw DomainError("c_basis: planes must be distinct");
  CBasis<E> out;
  out.y2 = y2;
  out.y5 = pick_in<E>(p2, {{&px, y2, zero}, {&py, y2, one}}, "y5");
  out.y3 = pick_in<E>(p2, {{&py, y2, zero}, {&px, y2, one}}, "y3");
  // phi_y(y4, y5) = 0 and phi_y(y3, y4) = 1
  out.y4 = pick_in<E>(p1, {{&py, out.y5, zero}, {&py, out.y3, one}}, "y4");
  out.alpha = bilinear(out.y3, px, out.y4);
  out.beta = bilinear(out.y4, px, out.y5);
  if (out.beta.is_zero()) throw InternalError("type C: beta vanished");
  return out;
}

/// (alpha, beta) of the type C procedure for the pair x1, y1, using planes through the first
/// representatives and the first echelon vector of P1.
template <class F>
std::pair<typename F::Elem, typename F::Elem> extract_c_params(const PhiSpace<F>& ps, const Vec<typename F::Elem>& x1,
                                                                 const Vec<typename F::Elem>& y1) {
  using E = typename F::Elem;
  const E one = ps.algebra().field().one();
  if (!(ps.algebra().form(x1, y1) == one)) throw DomainError("extract_c_params: (x1, y1) must be 1");
  auto px = ps.phi(x1), py = ps.phi(y1);
  auto p1 = isotropic_plane(px, py, unit_vec(4, 0, one), one);
  std::size_t i = 1;
  while (p1.contains(unit_vec(4, i, one))) ++i;
  auto p2 = isotropic_plane(px, py, unit_vec(4, i, one), one);
  auto cb = c_basis(px, py, p1, p2, p1.basis()[0], one);
  return {cb.alpha, cb.beta};
}

template <class F>
std::pair<typename F::Elem, typename F::Elem> extract_c_params(const Algebra<F>& alg, const Vec<typename F::Elem>& x1,
                                                                 const Vec<typename F::Elem>& y1) {
  return extract_c_params(PhiSpace<F>(alg), x1, y1);
}

/// Parameters after x1 -> a x1 + b y1, y1 -> c x1 + d y1.
template <class E>
std::pair<E, E> transform_c_params(const E& alpha, const E& beta, const SL2<E>& s) {
  const auto& [a, b, c, d] = s;
  E den = d * d + alpha * c * d + c * c * beta;
  if (den.is_zero()) throw InternalError("transform_c_params: vanishing denominator");
  E na = (a * d + b * c) * alpha + (a * c * beta + b * d) + (a * c * beta + b * d);
  E nb = b * b + a * b * alpha + a * a * beta;
  return {na / den, nb / den};
}

template <class F>
Centre4Type<F> centre4_type(const PhiSpace<F>& ps) {
  auto [x1, y1] = ps.default_pair();
  auto px = ps.phi(x1), py = ps.phi(y1);
  auto [qa, qb, qc] = detail::pfaffian_quadratic(px, py);
  auto zeros = projective_zeros(ps.algebra().field(), qa, qb, qc);
  Centre4Type<F> out;
  if (zeros.size() >= 2) {
    out.tag = C4Type::A;
  } else if (zeros.size() == 1) {
    out.tag = C4Type::B;
  } else {
    out.tag = C4Type::C;
    out.params = extract_c_params(ps, x1, y1);
  }
  return out;
}

template <class F>
Centre4Type<F> centre4_type(const Algebra<F>& alg) {
  return centre4_type(PhiSpace<F>(alg));
}

namespace detail {

/// SL2 steps taking (alpha, beta) to the chosen representative of its class.
inline std::vector<SL2<GFElem>> c_normalizer(const GF& f, GFElem alpha, GFElem beta) {
  std::vector<SL2<GFElem>> steps;
  const GFElem zero = f.zero(), one = f.one();
  auto push = [&](const SL2<GFElem>& s) {
    steps.push_back(s);
    std::tie(alpha, beta) = transform_c_params(alpha, beta, s);
  };
  if (f.characteristic() != 2) {
    if (!alpha.is_zero()) push({zero, one, -one, alpha / f.from_int(2)});
    GFElem target = zero;
    for (const auto& t : f.elements())
      if (!t.is_zero() && is_irreducible_quadratic(f, zero, t)) {
        target = t;
        break;
      }
    if (beta == target) return steps;
    // beta -> beta (a^2 + b'^2 beta)^2 via b = b' beta, c = -b / n, d = a beta / n, n = a^2 beta + b^2
    const GFElem ratio = target / beta;
    for (const auto& a : f.elements())
      for (const auto& bp : f.elements()) {
        GFElem nrm = a * a + bp * bp * beta;
        if (nrm.is_zero() || !(nrm * nrm == ratio)) continue;
        GFElem b = bp * beta, n = a * a * beta + b * b;
        push({a, b, -b / n, a * beta / n});
        return steps;
      }
    throw InternalError("type C: no norm reaches the representative");
  }
  if (alpha.is_zero()) throw InternalError("type C in characteristic 2 with alpha = 0");
  if (!beta.is_one()) {
    GFElem b = *kth_root(f, beta / alpha, 2);
    push({zero, b, b.inv(), b});
  }
  GFElem target = zero;
  for (const auto& t : f.elements())
    if (!t.is_zero() && is_irreducible_quadratic(f, t, one)) {
      target = t;
      break;
    }
  if (alpha == target) return steps;
  for (const auto& b : f.elements()) {
    GFElem den = b * (b + one) * alpha + one;
    if (!den.is_zero() && alpha / den == target) {
      push({b + one, b, b, b + one});
      return steps;
    }
  }
  throw InternalError("type C: no step reaches the characteristic 2 representative");
}

inline std::vector<SL2<Rational>> c_normalizer(const QQ& f, Rational alpha, Rational beta) {
  std::vector<SL2<Rational>> steps;
  const Rational zero(0), one(1);
  if (!alpha.is_zero()) {
    steps.push_back({zero, one, -one, alpha / Rational(2)});
    std::tie(alpha, beta) = transform_c_params(alpha, beta, steps.back());
  }
  auto [rep, u] = coset_representative(f, beta, 4);
  if (!(rep == beta)) steps.push_back({u, zero, zero, u.inv()});
  return steps;
}

template <class F>
Frame<F> base_frame4(const Algebra<F>& alg, const SubspaceOf<F>& Z, const SubspaceOf<F>& L2) {
  auto all = whole_space(alg);
  return adapted_frame(alg, {L2, Z, Z, Z, Z}, {L2, all, all, all, all}, "centre 4 frame");
}

/// Sets y2..y5 to the given quotient combinations of the current y2..y5.
template <class F>
void set_quotient_basis(Frame<F>& fr, const Matrix<typename F::Elem>& rows, const std::string& step) {
  detail::apply_block(fr, {2, 3, 4, 5}, rows);
  fr.require_standard(step);
}

template <class F>
Frame<F> finish_p4_1(const Algebra<F>& alg, const SubspaceOf<F>& Z, const SubspaceOf<F>& L2,
                     const SubspaceOf<F>& L3) {
  using E = typename F::Elem;
  const auto& f = alg.field();
  const E one = f.one(), zero = f.zero();
  auto all = whole_space(alg);
  auto Z2 = perp(alg, L3);
  Frame<F> fr = adapted_frame(alg, {L2, Z, L3, L3, L3}, {L2, Z2, all, all, all}, "P4_1 frame");
  // N[u][p] = (y_j y_k, u) for u in (y2, x1, y1) and pairs (34, 45, 53)
  const std::array<std::pair<int, int>, 3> pairs{{{3, 4}, {4, 5}, {5, 3}}};
  auto product_matrix = [&](const Frame<F>& g) {
    std::array<const Vec<E>*, 3> us{&g.y(2), &g.x(1), &g.y(1)};
    Matrix<E> m(3, Vec<E>(3));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) m[r][c] = g.tri(g.y(pairs[c].first), g.y(pairs[c].second), *us[r]);
    return m;
  };
  Matrix<E> n = product_matrix(fr);
  Matrix<E> n0{{one, zero, zero}, {zero, zero, -one}, {zero, one, zero}};
  E det = n[0][0] * (n[1][1] * n[2][2] - n[1][2] * n[2][1]) - n[0][1] * (n[1][0] * n[2][2] - n[1][2] * n[2][0]) +
          n[0][2] * (n[1][0] * n[2][1] - n[1][1] * n[2][0]);
  if (det.is_zero()) throw InternalError("P4_1: products of the top layer do not span L^2/L^3");
  const E gamma = det.inv();
  Matrix<E> pinv{{det, zero, zero}, {zero, one, zero}, {zero, zero, one}};
  Matrix<E> d = matmul(matmul(inverse(n), pinv), n0);  // transpose of the pair compound of g
  // pair p is complementary to index comp[p] of (3, 4, 5)
  const std::array<std::size_t, 3> comp{2, 0, 1};
  Matrix<E> k(3, Vec<E>(3));
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = 0; q < 3; ++q) k[comp[p]][comp[q]] = d[q][p];
  Matrix<E> g = inverse(transpose(k, 3));
  fr.y(2) = vscale(gamma, fr.y(2));
  fr.x(2) = vscale(det, fr.x(2));
  apply_block(fr, {3, 4, 5}, g);
  fr.require_standard("P4_1 top layer");
  if (!(product_matrix(fr) == n0)) throw InternalError("P4_1: top layer change missed the target products");
  settle(fr, B(3, 4, 5), mxx(2, 5), zero, "P4_1 (y3y4,y5)");
  return fr;
}

}  // namespace detail

/// Canonical form and witness frame for an algebra with isotropic centre of dimension 4.
template <class F>
std::pair<CanonicalForm<F>, Matrix<typename F::Elem>> canonicalize_centre4(const Algebra<F>& alg) {
  using namespace detail;
  using E = typename F::Elem;
  const auto& f = alg.field();
  const E one = f.one();
  auto Z = centre(alg);
  auto all = whole_space(alg);
  auto L2 = product_space(alg, all, all);
  auto L3 = product_space(alg, L2, all);
  if (!Z.contains(L3)) throw InternalError("centre 4: L^3 is not central");
  CanonicalForm<F> cf;
  Frame<F> fr(alg);
  if (!(L3 == Z)) {
    cf.family = Family::P4_1;
    fr = finish_p4_1(alg, Z, L2, L3);
  } else {
    fr = base_frame4(alg, Z, L2);
    auto px = frame_phi(fr, fr.x(1)), py = frame_phi(fr, fr.y(1));
    auto [qa, qb, qc] = pfaffian_quadratic(px, py);
    auto zeros = projective_zeros(f, qa, qb, qc);
    if (zeros.size() >= 2) {
      cf.family = Family::P4_2;
      auto [r1, s1] = zeros[0];
      auto [r2, s2] = zeros[1];
      E det = r1 * s2 - s1 * r2;
      apply_sl2(fr, SL2<E>{r1, s1, r2 / det, s2 / det});
      px = frame_phi(fr, fr.x(1));
      py = frame_phi(fr, fr.y(1));
      auto rx = nullspace(px, 4, one), ry = nullspace(py, 4, one);
      if (rx.size() != 2 || ry.size() != 2) throw InternalError("type A: radicals are not planes");
      Matrix<E> rows{ry[0], ry[1], rx[0], rx[1]};
      E c = bilinear(rows[0], px, rows[1]), c2 = bilinear(rows[2], py, rows[3]);
      if (c.is_zero() || c2.is_zero()) throw InternalError("type A: radicals pair trivially");
      rows[1] = vscale(c.inv(), rows[1]);
      rows[3] = vscale(c2.inv(), rows[3]);
      set_quotient_basis(fr, rows, "type A quotient basis");
    } else if (zeros.size() == 1) {
      cf.family = Family::P4_3;
      auto [r, s] = zeros[0];
      apply_sl2(fr, r.is_zero() ? SL2<E>{r, s, -s.inv(), f.zero()} : SL2<E>{r, s, f.zero(), r.inv()});
      px = frame_phi(fr, fr.x(1));
      py = frame_phi(fr, fr.y(1));
      auto rx = nullspace(px, 4, one);
      if (rx.size() != 2) throw InternalError("type B: radical is not a plane");
      Subspace<E> whole = Subspace<E>::whole(4, one);
      Vec<E> y4 = rx[0], y5 = rx[1];
      Vec<E> y2 = pick_in<E>(whole, {{&py, y4, -one}, {&py, y5, f.zero()}}, "type B y2", true);
      Vec<E> y3 = pick_in<E>(Subspace<E>(4, nullspace(Matrix<E>{vecmat(y4, py), vecmat(y2, py)}, 4, one)),
                             {{&py, y5, -one}}, "type B y3", true);
      E c = bilinear(y2, px, y3);
      if (c.is_zero()) throw InternalError("type B: phi_x(y2, y3) vanished");
      set_quotient_basis(fr, {y2, vscale(c.inv(), y3), y4, vscale(c, y5)}, "type B quotient basis");
    } else {
      cf.family = Family::P4_4;
      auto planes = [&](const Matrix<E>& a, const Matrix<E>& b) {
        auto p1 = isotropic_plane(a, b, unit_vec(4, 0, one), one);
        std::size_t i = 1;
        while (p1.contains(unit_vec(4, i, one))) ++i;
        return std::make_pair(p1, isotropic_plane(a, b, unit_vec(4, i, one), one));
      };
      auto [p1, p2] = planes(px, py);
      auto cb = c_basis(px, py, p1, p2, p1.basis()[0], one);
      E alpha = cb.alpha, beta = cb.beta;
      for (const auto& step : c_normalizer(f, cb.alpha, cb.beta)) {
        apply_sl2(fr, step);
        std::tie(alpha, beta) = transform_c_params(alpha, beta, step);
      }
      px = frame_phi(fr, fr.x(1));
      py = frame_phi(fr, fr.y(1));
      cb = c_basis(px, py, p1, p2, p1.basis()[0], one);
      if (!(cb.alpha == alpha) || !(cb.beta == beta))
        throw InternalError("type C: parameters after the SL2 step disagree with the transformation rule");
      cf.params = {alpha, beta};
      set_quotient_basis(fr, {cb.y2, cb.y3, cb.y4, cb.y5}, "type C quotient basis");
    }
    clear_top(fr, "centre 4 shift");
  }
  auto got = as_presentation(fr.transported());
  if (!got || !(*got == family_presentation(f, cf.family, cf.params)))
    throw InternalError(family_name(cf.family) + ": final basis does not give the canonical presentation");
  return {cf, fr.rows()};
}

}  // namespace saa
