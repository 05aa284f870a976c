// Isomorphism of canonical forms: parameter criteria, explicit witnesses, class counts and a
// brute-force oracle over GF(2) and GF(3).
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "saa/classify.hpp"

namespace saa {

enum class Verdict { Equal, NotEqual, Undecided };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::NotEqual: return "not-equal";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

template <class F>
struct EquivDecision {
  using E = typename F::Elem;
  Verdict verdict = Verdict::Undecided;
  std::optional<SL2<E>> sl2;  // type C
  std::optional<E> root;      // scaling families: s/r = root^k
  std::string criterion;

  bool equal() const { return verdict == Verdict::Equal; }
};

template <class E>
SL2<E> sl2_mul(const SL2<E>& p, const SL2<E>& q) {
  return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
          p[2] * q[1] + p[3] * q[3]};
}

template <class E>
SL2<E> sl2_inverse(const SL2<E>& s) {
  return {s[3], -s[1], -s[2], s[0]};
}

/// Calls visit(s) for every s in SL2(F), stopping when it returns true.
template <class Visit>
bool for_each_sl2(const GF& f, Visit&& visit) {
  const auto els = f.elements();
  const GFElem one = f.one();
  for (const auto& a : els)
    for (const auto& c : els) {
      if (a.is_zero() && c.is_zero()) continue;
      if (!a.is_zero()) {
        GFElem ainv = a.inv();
        for (const auto& b : els)
          if (visit(SL2<GFElem>{a, b, c, (one + b * c) * ainv})) return true;
      } else {
        GFElem b = -c.inv();
        for (const auto& d : els)
          if (visit(SL2<GFElem>{a, b, c, d})) return true;
      }
    }
  return false;
}

/// G(beta) = {(a^2 + b^2 beta)^2 : (a, b) != (0, 0)}.
inline std::set<std::uint32_t> g_beta(const GF& f, const GFElem& beta) {
  std::set<std::uint32_t> out;
  for (const auto& a : f.elements())
    for (const auto& b : f.elements()) {
      if (a.is_zero() && b.is_zero()) continue;
      GFElem n = a * a + b * b * beta;
      if (!n.is_zero()) out.insert((n * n).code());
    }
  return out;
}

/// beta~ / beta in G(beta).
inline bool norm_criterion(const GF& f, const GFElem& beta, const GFElem& beta2) {
  return g_beta(f, beta).count((beta2 / beta).code()) > 0;
}

namespace detail {

template <class F>
void require_type_c(const F& f, const typename F::Elem& alpha, const typename F::Elem& beta) {
  if (!is_irreducible_quadratic(f, alpha, beta))
    throw DomainError("type C parameters (" + f.str(alpha) + "," + f.str(beta) + ") give a reducible quadratic");
}

/// (a, b') with a^2 + b'^2 beta = target, searched over small fractions.
inline std::optional<std::pair<Rational, Rational>> small_norm(const Rational& beta, const Rational& target) {
  for (const auto& t : {target, -target}) {
    if (auto r = kth_root(QQ{}, t, 2)) return std::make_pair(*r, Rational(0));
    if (auto r = kth_root(QQ{}, t / beta, 2)) return std::make_pair(Rational(0), *r);
  }
  const long h = 24;
  for (long q = 1; q <= h; ++q)
    for (long p = 0; p <= h; ++p)
      for (long r = 1; r <= h; ++r) {
        Rational a(p, q), b(r, q);
        Rational n = a * a + b * b * beta;
        if (n == target || n == -target) return std::make_pair(a, b);
      }
  return std::nullopt;
}

/// The SL2 element realising beta -> beta (a^2 + b'^2 beta)^2 when alpha = 0.
template <class E>
SL2<E> norm_step(const E& a, const E& bp, const E& beta) {
  E b = bp * beta, n = a * a * beta + b * b;
  return {a, b, -b / n, a * beta / n};
}

}  // namespace detail

/// Exhaustive SL2 search for a change taking (alpha, beta) to (alpha2, beta2).
inline EquivDecision<GF> equiv_c_sl2(const GF& f, const GFElem& alpha, const GFElem& beta, const GFElem& alpha2,
                                     const GFElem& beta2) {
  detail::require_type_c(f, alpha, beta);
  detail::require_type_c(f, alpha2, beta2);
  EquivDecision<GF> d;
  d.criterion = "SL2 enumeration";
  d.verdict = Verdict::NotEqual;
  for_each_sl2(f, [&](const SL2<GFElem>& s) {
    auto [na, nb] = transform_c_params(alpha, beta, s);
    if (na == alpha2 && nb == beta2) {
      d.verdict = Verdict::Equal;
      d.sl2 = s;
      return true;
    }
    return false;
  });
  return d;
}

inline EquivDecision<GF> equiv_c(const GF& f, const GFElem& alpha, const GFElem& beta, const GFElem& alpha2,
                                 const GFElem& beta2) {
  detail::require_type_c(f, alpha, beta);
  detail::require_type_c(f, alpha2, beta2);
  if (alpha == alpha2 && beta == beta2) {
    EquivDecision<GF> d;
    d.verdict = Verdict::Equal;
    d.sl2 = SL2<GFElem>{f.one(), f.zero(), f.zero(), f.one()};
    d.criterion = "identical parameters";
    return d;
  }
  if (f.characteristic() != 2 && alpha.is_zero() && alpha2.is_zero()) {
    EquivDecision<GF> d;
    d.criterion = "G(beta) membership";
    d.verdict = Verdict::NotEqual;
    const GFElem ratio = beta2 / beta;
    for (const auto& a : f.elements())
      for (const auto& b : f.elements()) {
        GFElem n = a * a + b * b * beta;
        if (n.is_zero() || !(n * n == ratio)) continue;
        auto s = detail::norm_step(a, b, beta);
        if (!(transform_c_params(alpha, beta, s) == std::make_pair(alpha2, beta2)))
          throw InternalError("equiv_c: norm witness misses the target");
        d.verdict = Verdict::Equal;
        d.sl2 = s;
        return d;
      }
    return d;
  }
  return equiv_c_sl2(f, alpha, beta, alpha2, beta2);
}

/// Over Q both sides are first moved to alpha = 0; then beta~/beta must be the square of a norm
/// a^2 + b^2 beta. A non-square ratio separates; a norm found by bounded search joins; otherwise undecided.
inline EquivDecision<QQ> equiv_c(const QQ& f, const Rational& alpha, const Rational& beta, const Rational& alpha2,
                                 const Rational& beta2) {
  detail::require_type_c(f, alpha, beta);
  detail::require_type_c(f, alpha2, beta2);
  const Rational zero(0), one(1);
  EquivDecision<QQ> d;
  if (alpha == alpha2 && beta == beta2) {
    d.verdict = Verdict::Equal;
    d.sl2 = SL2<Rational>{one, zero, zero, one};
    d.criterion = "identical parameters";
    return d;
  }
  auto to_zero = [&](const Rational& a) {
    return a.is_zero() ? SL2<Rational>{one, zero, zero, one} : SL2<Rational>{zero, one, -one, a / Rational(2)};
  };
  SL2<Rational> s1 = to_zero(alpha), t1 = to_zero(alpha2);
  Rational b1 = transform_c_params(alpha, beta, s1).second, b2 = transform_c_params(alpha2, beta2, t1).second;
  d.criterion = "norm criterion after alpha = 0";
  auto sigma = kth_root(f, b2 / b1, 2);
  if (!sigma) {
    d.verdict = Verdict::NotEqual;
    return d;
  }
  auto ab = detail::small_norm(b1, *sigma);
  if (!ab) {
    d.verdict = Verdict::Undecided;
    return d;
  }
  SL2<Rational> w = detail::norm_step(ab->first, ab->second, b1);
  SL2<Rational> total = sl2_mul(sl2_inverse(t1), sl2_mul(w, s1));
  if (!(transform_c_params(alpha, beta, total) == std::make_pair(alpha2, beta2)))
    throw InternalError("equiv_c: composed witness misses the target");
  d.verdict = Verdict::Equal;
  d.sl2 = total;
  return d;
}

/// s/r in (F*)^k for the family's exponent k.
template <class F>
EquivDecision<F> equiv_r(Family fam, const typename F::Elem& r, const typename F::Elem& s, const F& f) {
  const long k = power_exponent(fam);
  if (k == 0) throw DomainError(family_name(fam) + " has no scalar parameter");
  if (r.is_zero() || s.is_zero()) throw DomainError("equiv_r: parameters must be nonzero");
  EquivDecision<F> d;
  d.criterion = "s/r in (F*)^" + std::to_string(k);
  auto root = kth_root(f, s / r, k);
  d.verdict = root ? Verdict::Equal : Verdict::NotEqual;
  d.root = root;
  return d;
}

namespace detail {

/// x_i -> a^w_i x_i, y_i -> a^-w_i y_i multiplies the parameter by a^k.
inline std::array<long, 5> witness_weights(Family fam) {
  switch (fam) {
    case Family::P2_2: return {0, -1, 1, -1, -2};
    case Family::P2_4: return {1, 3, 5, -4, -2};
    case Family::P2_5: return {0, 1, -1, 0, -1};
    case Family::P2_6: return {-1, 4, -3, 2, -5};
    default: throw DomainError(family_name(fam) + " has no scalar parameter");
  }
}

}  // namespace detail

/// Basis change taking the table of family(r) exactly onto family(s).
template <class F>
Matrix<typename F::Elem> iso_witness(Family fam, const typename F::Elem& r, const typename F::Elem& s, const F& f) {
  using E = typename F::Elem;
  auto d = equiv_r(fam, r, s, f);
  if (!d.root) throw DomainError(family_name(fam) + ": s/r is not a " + std::to_string(power_exponent(fam)) + "-th power");
  const auto w = detail::witness_weights(fam);
  Matrix<E> b(10, Vec<E>(10));
  for (std::size_t i = 0; i < 5; ++i) {
    E t = d.root->pow(w[i]);
    b[X(i + 1)][X(i + 1)] = t;
    b[Y(i + 1)][Y(i + 1)] = t.inv();
  }
  auto moved = family_algebra(f, fam, {r}).transform(b);
  auto got = as_presentation(moved);
  if (!got || !(*got == family_presentation(f, fam, {s})))
    throw InternalError(family_name(fam) + ": witness does not transport the table");
  return b;
}

/// Parameters s reachable from r by the diagonal part of the basis changes that preserve the
/// presentation shape, enumerated over the free scalars.
inline std::set<std::uint32_t> reachable_parameters(Family fam, const GFElem& r, const GF& f) {
  std::set<std::uint32_t> out;
  std::vector<GFElem> units;
  for (const auto& u : f.elements())
    if (!u.is_zero()) units.push_back(u);
  switch (fam) {
    case Family::P2_2: {
      // s^3 = (ad - bc)^4 r^3 with ad - bc ranging over F*
      std::set<std::uint32_t> cubes;
      for (const auto& det : units) cubes.insert((det.pow(4) * r.pow(3)).code());
      for (const auto& s : units)
        if (cubes.count(s.pow(3).code())) out.insert(s.code());
      break;
    }
    case Family::P2_4:
      for (const auto& a : units) {
        GFElem b = a.pow(3), c = a.pow(5), d = a.pow(-4), e = a.pow(-2);
        if (!(b * e / a == f.one()) || !(a * b * d == f.one()) || !(c * d / a == f.one()) || !(c * e / b == f.one()))
          throw InternalError("P2_4 ansatz inconsistent");
        out.insert((d * e / c * r).code());
      }
      break;
    case Family::P2_5:
      for (const auto& a : units)
        for (const auto& b : units) {
          GFElem c = (a * b).inv(), e = a / b, d = a.pow(-2);
          if (!(c / (d * e) == f.one()) || !(a / (b * e) == f.one()) || !((a * b * c).inv() == f.one()))
            throw InternalError("P2_5 ansatz inconsistent");
          out.insert((b * r / (c * e)).code());
        }
      break;
    case Family::P2_6:
      for (const auto& a : units) {
        GFElem b = a.pow(-4), c = a.pow(3), d = a.pow(-2), e = a.pow(5);
        if (!(c / (d * e) == f.one()) || !(a / (b * e) == f.one()) || !((a * b * c).inv() == f.one()) ||
            !(a / (c * d) == f.one()))
          throw InternalError("P2_6 ansatz inconsistent");
        out.insert((b * r / (c * e)).code());
      }
      break;
    default: throw DomainError(family_name(fam) + " has no scalar parameter");
  }
  return out;
}

inline bool necessity_check(Family fam, const GFElem& r, const GFElem& s, const GF& f) {
  return reachable_parameters(fam, r, f).count(s.code()) > 0;
}

/// Orbits of SL2 on the valid type C parameters, by exhaustive enumeration.
inline std::size_t type_c_orbits(const GF& f) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> seen;
  std::vector<std::pair<GFElem, GFElem>> valid;
  for (const auto& a : f.elements())
    for (const auto& b : f.elements())
      if (is_irreducible_quadratic(f, a, b)) valid.emplace_back(a, b);
  std::size_t orbits = 0;
  for (const auto& [a, b] : valid) {
    if (seen.count({a.code(), b.code()})) continue;
    ++orbits;
    for_each_sl2(f, [&](const SL2<GFElem>& s) {
      auto [na, nb] = transform_c_params(a, b, s);
      seen[{na.code(), nb.code()}] = true;
      return false;
    });
  }
  return orbits;
}

/// Number of isomorphism classes in the family over a finite field.
inline std::uint64_t count_classes(Family fam, const GF& f) {
  if (fam == Family::OutOfScope) throw DomainError("count_classes: no family");
  if (fam == Family::P4_4) {
    if (f.order() <= 16) return type_c_orbits(f);
    return 1;
  }
  const long k = power_exponent(fam);
  if (k == 0) return 1;
  return power_coset_index(f, static_cast<std::uint64_t>(k));
}

inline std::uint64_t count_classes(Family, const QQ&) {
  throw DomainError("count_classes: Q is not finitely enumerable");
}

/// Decision for two classified algebras: different families never meet.
template <class F>
EquivDecision<F> equiv_forms(const F& f, const CanonicalForm<F>& a, const CanonicalForm<F>& b) {
  EquivDecision<F> d;
  if (a.family == Family::OutOfScope || b.family == Family::OutOfScope) {
    d.criterion = "out of scope";
    return d;
  }
  if (a.family != b.family) {
    d.verdict = Verdict::NotEqual;
    d.criterion = "different families";
    return d;
  }
  if (a.family == Family::P4_4) return equiv_c(f, a.params[0], a.params[1], b.params[0], b.params[1]);
  if (power_exponent(a.family) != 0) return equiv_r(a.family, a.params[0], b.params[0], f);
  d.verdict = Verdict::Equal;
  d.criterion = "unique algebra in family";
  return d;
}

namespace detail {

/// Basis of the algebra as iterated products of two generators: words[k] = words[l] * words[m].
struct WordPlan {
  std::vector<std::pair<std::size_t, std::size_t>> steps;  // for k >= 2
};

template <class F>
std::optional<WordPlan> word_plan(const Algebra<F>& alg, const Vec<typename F::Elem>& u, const Vec<typename F::Elem>& v,
                                  Matrix<typename F::Elem>& words) {
  const std::size_t n = alg.dim();
  words = {u, v};
  SubspaceOf<F> span(n, words);
  if (span.dim() != 2) return std::nullopt;
  WordPlan plan;
  bool grew = true;
  while (grew && words.size() < n) {
    grew = false;
    for (std::size_t i = 0; i < words.size() && words.size() < n; ++i)
      for (std::size_t j = 0; j < i && words.size() < n; ++j) {
        auto p = alg.mul(words[j], words[i]);
        if (span.contains(p)) continue;
        span = span.with(p);
        words.push_back(p);
        plan.steps.emplace_back(j, i);
        grew = true;
      }
  }
  if (words.size() != n) return std::nullopt;
  return plan;
}

}  // namespace detail

/// Exhaustive isomorphism test for two-generated algebras over GF(2) or GF(3).
/// Generator images are fixed one layer L^l/L^(l+1) of B at a time; the structure constants of A
/// in a word basis must hold modulo L^(l+2) before the next layer is tried.
inline bool brute_force_iso(const Algebra<GF>& a, const Algebra<GF>& b) {
  using E = GFElem;
  const GF& f = a.field();
  if (f.order() > 3 || b.field().order() != f.order()) throw DomainError("oracle out of range");
  const std::size_t n = a.dim();
  if (b.dim() != n) return false;
  auto la = lower_central_series(a), lb = lower_central_series(b);
  if (la.size() < 2 || n - la[1].dim() != 2) throw DomainError("oracle out of range: algebra is not two-generated");
  if (la.size() != lb.size()) return false;
  for (std::size_t i = 0; i < la.size(); ++i)
    if (la[i].dim() != lb[i].dim()) return false;

  Matrix<E> gens;
  for (std::size_t i = 0; i < n && gens.size() < 2; ++i) {
    Matrix<E> m = la[1].basis();
    m.insert(m.end(), gens.begin(), gens.end());
    auto e = unit_vec(n, i, f.one());
    if (!SubspaceOf<GF>(n, m).contains(e)) gens.push_back(e);
  }
  Matrix<E> words;
  auto plan = detail::word_plan(a, gens[0], gens[1], words);
  if (!plan) throw DomainError("oracle out of range: algebra is not two-generated");

  // structure constants and Gram matrix of A in the word basis
  const Matrix<E> winv = inverse(words);
  auto coords = [&](const Vec<E>& v) {
    Vec<E> c(n);
    for (std::size_t r = 0; r < n; ++r)
      if (!v[r].is_zero()) axpy(c, v[r], winv[r]);
    return c;
  };
  std::vector<std::vector<Vec<E>>> sc(n, std::vector<Vec<E>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sc[i][j] = coords(a.mul(words[i], words[j]));
  Matrix<E> gram(n, Vec<E>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = a.form(words[i], words[j]);

  // complement of L^(l+2) in L^(l+1) inside B, for each layer
  const std::size_t layers = lb.size() - 1;
  std::vector<Matrix<E>> comp(layers);
  for (std::size_t l = 0; l < layers; ++l) {
    auto span = lb[l + 1];
    for (const auto& v : lb[l].basis())
      if (!span.contains(v)) {
        comp[l].push_back(v);
        span = span.with(v);
      }
  }

  // depth[k]: largest p with words[k] in L^p of A, so images lie in L^p of B
  auto level = [](const std::vector<SubspaceOf<GF>>& series, std::size_t p) {
    return p <= series.size() ? series[p - 1] : series.back();
  };
  std::vector<std::size_t> depth(n, 1);
  for (std::size_t k = 0; k < n; ++k)
    while (depth[k] < la.size() && la[depth[k]].contains(words[k])) ++depth[k];
  auto perp_spaces = [&](const SubspaceOf<GF>& x, const SubspaceOf<GF>& y) {
    for (const auto& p : x.basis())
      for (const auto& q : y.basis())
        if (!b.form(p, q).is_zero()) return false;
    return true;
  };
  // settled[l][i][j]: once generators are fixed modulo L^(l+1), the pairing of images i and j is final
  std::vector<std::vector<std::vector<bool>>> settled;
  for (std::size_t l = 0; l <= layers; ++l) {
    std::vector<SubspaceOf<GF>> change{level(lb, l + 1), level(lb, l + 1)};
    for (const auto& [x, y] : plan->steps) {
      auto c = product_space(b, change[x], level(lb, depth[y])) + product_space(b, level(lb, depth[x]), change[y]) +
               product_space(b, change[x], change[y]);
      change.push_back(c);
    }
    std::vector<std::vector<bool>> t(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        t[i][j] = perp_spaces(change[i], level(lb, depth[j])) && perp_spaces(level(lb, depth[i]), change[j]) &&
                  perp_spaces(change[i], change[j]);
    settled.push_back(std::move(t));
  }

  const auto els = f.elements();
  auto combos = [&](std::size_t d) {
    std::vector<Vec<E>> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= els.size();
    for (std::size_t code = 0; code < total; ++code) {
      Vec<E> c(d);
      std::size_t x = code;
      for (std::size_t i = 0; i < d; ++i, x /= els.size()) c[i] = els[x % els.size()];
      out.push_back(c);
    }
    return out;
  };
  auto combine = [&](Vec<E> base, const Vec<E>& c, const Matrix<E>& basis) {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) axpy(base, c[i], basis[i]);
    return base;
  };

  Matrix<E> img(n);
  auto relations_hold = [&](const Vec<E>& u, const Vec<E>& v, const SubspaceOf<GF>& mod) {
    img[0] = u;
    img[1] = v;
    for (std::size_t k = 2; k < n; ++k) img[k] = b.mul(img[plan->steps[k - 2].first], img[plan->steps[k - 2].second]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec<E> r = b.mul(img[i], img[j]);
        for (std::size_t k = 2; k < n; ++k)
          if (!sc[i][j][k].is_zero()) axpy(r, -sc[i][j][k], img[k]);
        if (!mod.contains(r)) return false;
      }
    return true;
  };
  auto form_holds = [&](std::size_t l) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (settled[l][i][j] && !(b.form(img[i], img[j]) == gram[i][j])) return false;
    return true;
  };

  std::function<bool(std::size_t, const Vec<E>&, const Vec<E>&)> search = [&](std::size_t l, const Vec<E>& u,
                                                                             const Vec<E>& v) {
    // u, v are fixed modulo L^(l+1); relations are then determined modulo L^(l+2)
    if (l > 0 && (!relations_hold(u, v, lb[std::min(l + 1, layers)]) || !form_holds(l))) return false;
    if (l == layers) return true;
    const auto cs = combos(comp[l].size());
    for (const auto& x : cs)
      for (const auto& y : cs) {
        if (l == 0 && rank(Matrix<E>{x, y}, 2) != 2) continue;
        if (search(l + 1, combine(u, x, comp[l]), combine(v, y, comp[l]))) return true;
      }
    return false;
  };
  return search(0, Vec<E>(n), Vec<E>(n));
}

}  // namespace saa
