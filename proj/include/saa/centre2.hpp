// Canonical forms for nilpotent SAAs of dimension 10 with isotropic centre of dimension 2.
#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "saa/canonical.hpp"
#include "saa/frame.hpp"
#include "saa/power.hpp"

namespace saa {

namespace detail {

/// Characteristic subspaces shared by the class 6 and class 7 cases.
template <class F>
struct Series2 {
  std::vector<SubspaceOf<F>> L;  // L[i] = L^i, L[0] unused
  SubspaceOf<F> all, zero, Z;
  int cls = 0;

  explicit Series2(const Algebra<F>& alg) : all(whole_space(alg)), zero(zero_space(alg)), Z(centre(alg)) {
    auto lo = lower_central_series(alg);
    L.push_back(all);
    for (const auto& s : lo) L.push_back(s);
    cls = static_cast<int>(lo.size()) - 1;
    while (L.size() < 10) L.push_back(zero);
  }
};

template <class F>
using Spaces = std::vector<SubspaceOf<F>>;

/// The data of one family: target shape before the final substitution and the moves that reach it.
template <class F>
struct Shape {
  std::vector<Coord> fixed;      // set to 1 by the torus
  std::vector<Coord> free_coords;  // left as they are
  std::vector<std::pair<Coord, Move>> kills;  // cleared in order, before the shift
};

/// Every coordinate with i<j<k that is neither fixed nor free.
template <class F>
std::vector<Coord> zero_coords(const Shape<F>& s, TripleKind kind) {
  auto listed = [&](const Coord& c) {
    for (const auto& v : s.fixed)
      if (v.kind == c.kind && v.i == c.i && v.j == c.j && v.k == c.k) return true;
    for (const auto& v : s.free_coords)
      if (v.kind == c.kind && v.i == c.i && v.j == c.j && v.k == c.k) return true;
    return false;
  };
  std::vector<Coord> out;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = j + 1; k <= 5; ++k) {
        Coord c{kind, i, j, k};
        if (!listed(c)) out.push_back(c);
      }
  return out;
}

/// Checks that the frame presents the algebra with exactly the shape's nonzero pattern.
template <class F>
void require_shape(const Frame<F>& fr, const Shape<F>& s, const std::string& step) {
  fr.require_standard(step);
  auto p = as_presentation(fr.transported());
  if (!p) throw InternalError(step + ": basis does not give a nilpotent presentation");
  for (auto kind : {TripleKind::XYY, TripleKind::YYY})
    for (const auto& c : zero_coords(s, kind))
      if (!fr.at(c).is_zero()) throw InternalError(step + ": " + coord_name(c) + " is not zero");
  for (const auto& c : s.fixed)
    if (!(fr.at(c) == fr.field().one())) throw InternalError(step + ": " + coord_name(c) + " is not one");
}

template <class F>
Frame<F> reach_shape(Frame<F> fr, const Shape<F>& s, const std::string& step) {
  const auto& alg = fr.algebra();
  const auto zero = alg.field().zero();
  for (const auto& [c, m] : s.kills) settle(fr, c, m, zero, step);
  settle_shift(fr, zero_coords(s, TripleKind::YYY), step);
  std::vector<std::pair<Coord, typename F::Elem>> targets;
  for (const auto& c : s.fixed) targets.emplace_back(c, alg.field().one());
  settle_torus(fr, targets, step);
  require_shape(fr, s, step);
  return fr;
}

/// Builds a new frame from linear combinations of the current vectors.
template <class F>
struct Rebuild {
  using E = typename F::Elem;
  const Frame<F>& old;
  Frame<F> out;
  explicit Rebuild(const Frame<F>& fr) : old(fr), out(fr) {}
  Vec<E> x(int i) const { return old.x(i); }
  Vec<E> y(int i) const { return old.y(i); }
  static Vec<E> sum(std::initializer_list<std::pair<E, Vec<E>>> terms) {
    Vec<E> r;
    for (const auto& [c, v] : terms) {
      if (r.empty()) r.assign(v.size(), E{});
      axpy(r, c, v);
    }
    return r;
  }
};

// ---- class 6 ----

template <class F>
Frame<F> shape_p2_1(const Algebra<F>& alg, const Series2<F>& s) {
  const auto& L = s.L;
  auto l3l3 = product_space(alg, L[3], L[3]);
  auto S = multiplier_space(alg, L[3], L[2], l3l3);
  auto Sp = perp(alg, S);
  auto T = multiplier_space(alg, L[2], Sp, s.zero);
  auto Tp = perp(alg, T);
  auto R = multiplier_space(alg, perp(alg, l3l3), Tp, s.zero);
  Spaces<F> xs{L[4], Tp, intersect(L[5], perp(alg, R)), s.Z, l3l3};
  Spaces<F> ys{Sp, S, T, R, s.all};
  Shape<F> shape;
  shape.fixed = {A(2, 3, 5), A(1, 3, 4), B(1, 2, 5)};
  shape.free_coords = {B(1, 4, 5), B(2, 4, 5), A(3, 4, 5), B(3, 4, 5), B(2, 3, 5)};
  shape.kills = {{A(1, 3, 5), mxx(4, 5)}, {A(1, 4, 5), mxx(3, 5)}};
  return reach_shape(adapted_frame(alg, xs, ys, "P2_1"), shape, "P2_1");
}

template <class F>
Frame<F> finish_p2_1(const Frame<F>& fr) {
  using E = typename F::Elem;
  Rebuild<F> b(fr);
  const E one = fr.field().one();
  const E bb = fr.at(B(1, 4, 5)), e = fr.at(B(2, 4, 5)), r = fr.at(A(3, 4, 5)), f = fr.at(B(3, 4, 5)),
          c = fr.at(B(2, 3, 5));
  const E ri = one / r;
  auto& o = b.out;
  o.x(1) = vscale(r * r, b.x(1));
  o.y(1) = vscale(ri * ri, b.y(1));
  o.x(2) = b.sum({{ri, b.x(2)}, {bb * ri, b.x(4)}});
  o.y(2) = b.sum({{r, b.y(2)}, {-c * r, b.x(2)}, {-e, b.x(3)}, {-bb * c * r, b.x(4)}});
  o.x(4) = vscale(r * r, b.x(4));
  o.y(4) = b.sum({{ri * ri, b.y(4)}, {-bb * ri * ri, b.y(2)}});
  o.x(5) = vscale(ri, b.x(5));
  o.y(5) = vscale(r, b.y(5));
  o.y(3) = b.sum({{one, b.y(3)}, {-e * ri, b.x(2)}, {-(f + bb * c) * ri, b.x(3)}, {-bb * e * ri, b.x(4)}});
  return o;
}

template <class F>
Frame<F> shape_p2_2(const Algebra<F>& alg, const Series2<F>& s) {
  const auto& L = s.L;
  auto l3l3 = product_space(alg, L[3], L[3]);
  Spaces<F> xs{L[4], L[4], l3l3, s.Z, s.Z};
  Spaces<F> ys{s.all, s.all, s.all, s.all, s.all};
  Shape<F> shape;
  shape.fixed = {B(1, 2, 3), A(1, 3, 4), A(2, 3, 5)};
  shape.free_coords = {A(1, 4, 5), A(2, 4, 5), A(3, 4, 5), B(2, 3, 4), B(2, 3, 5),
                       B(2, 4, 5), B(1, 3, 4), B(1, 3, 5), B(1, 4, 5), B(3, 4, 5)};
  // x4 = x1y3 and x5 = x2y3; y3 modulo X depends only on x1, x2, x3
  auto first = adapted_frame(alg, xs, ys, "P2_2");
  std::vector<std::optional<Vec<typename F::Elem>>> fixed{first.x(1), first.x(2), first.x(3),
                                                          first.mul(first.x(1), first.y(3)),
                                                          first.mul(first.x(2), first.y(3))};
  return reach_shape(adapted_frame(alg, xs, ys, "P2_2", fixed), shape, "P2_2");
}

template <class F>
Frame<F> finish_p2_2(const Frame<F>& fr) {
  using E = typename F::Elem;
  Rebuild<F> b(fr);
  const E one = fr.field().one();
  const E a = fr.at(A(1, 4, 5)), bb = fr.at(A(2, 4, 5)), r = fr.at(A(3, 4, 5)), c = fr.at(B(2, 3, 4)),
          d = fr.at(B(2, 3, 5)), e = fr.at(B(2, 4, 5)), f = fr.at(B(1, 3, 4)), g = fr.at(B(1, 3, 5)),
          h = fr.at(B(1, 4, 5)), k = fr.at(B(3, 4, 5));
  const E ri = one / r;
  const E al = a * c - e + bb * d, be = c - g;
  auto& o = b.out;
  o.x(1) = b.sum({{one, b.x(1)}, {-a * ri, b.x(3)}});
  o.y(1) = b.sum({{one, b.y(1)}, {-c, b.x(2)}, {-(h - bb * c) * ri, b.x(3)}});
  o.x(2) = b.sum({{one, b.x(2)}, {-bb * ri, b.x(3)}, {-f, b.x(4)}, {be, b.x(5)}});
  o.y(2) = b.sum({{one, b.y(2)}, {-c, b.x(1)}, {-d, b.x(2)}, {al * ri, b.x(3)}});
  o.y(3) = b.sum({{one, b.y(3)},
                  {-h * ri, b.x(1)},
                  {-e * ri, b.x(2)},
                  {-k * ri, b.x(3)},
                  {a * ri, b.y(1)},
                  {bb * ri, b.y(2)}});
  o.y(4) = b.sum({{one, b.y(4)}, {-c * f, b.x(1)}, {-d * f, b.x(2)}, {al * f * ri, b.x(3)}, {f, b.y(2)}});
  o.y(5) = b.sum({{one, b.y(5)}, {c * be, b.x(1)}, {d * be, b.x(2)}, {-be * al * ri, b.x(3)}, {-be, b.y(2)}});
  return o;
}

// ---- class 7 ----

template <class F>
struct Class7 {
  SubspaceOf<F> L5L2, L4L3, U, UL2;
  Class7(const Algebra<F>& alg, const Series2<F>& s) {
    const auto& L = s.L;
    L5L2 = product_space(alg, L[5], L[2]);
    L4L3 = product_space(alg, L[4], L[3]);
    SubspaceOf<F> ik = L[6];
    for (const auto& c : {L5L2, L[7], L[6]})
      if (intersect(c, L4L3).dim() > 0) {
        ik = c;
        break;
      }
    U = multiplier_space(alg, L[4], L[3], ik);
    UL2 = product_space(alg, U, L[2]);
  }
};

template <class F>
Frame<F> shape_p2_3(const Algebra<F>& alg, const Series2<F>& s, const Class7<F>& c7) {
  const auto& L = s.L;
  auto V = multiplier_space(alg, L[2], L[4], c7.L5L2);
  auto W = multiplier_space(alg, L[4], V, s.zero);
  auto Zs = multiplier_space(alg, V, L[3], c7.L5L2);
  auto Zp = perp(alg, Zs);
  Spaces<F> xs{intersect(intersect(W, c7.U), Zp), intersect(L[5], Zp), L[6], L[7], c7.L5L2};
  Spaces<F> ys{W, L[3], Zs, perp(alg, c7.L5L2), s.all};
  Shape<F> shape;
  shape.fixed = {A(1, 2, 5), A(2, 3, 5), B(1, 2, 4)};
  shape.free_coords = {A(1, 4, 5), A(2, 4, 5), B(1, 4, 5), B(2, 4, 5), B(3, 4, 5), A(3, 4, 5)};
  return reach_shape(adapted_frame(alg, xs, ys, "P2_3"), shape, "P2_3");
}

template <class F>
Frame<F> finish_p2_3(const Frame<F>& fr) {
  using E = typename F::Elem;
  Rebuild<F> b(fr);
  const E one = fr.field().one();
  const E a = fr.at(A(1, 4, 5)), bb = fr.at(A(2, 4, 5)), c = fr.at(B(1, 4, 5)), d = fr.at(B(2, 4, 5)),
          e = fr.at(B(3, 4, 5)), r = fr.at(A(3, 4, 5));
  const E ri = one / r, r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  auto& o = b.out;
  o.x(5) = vscale(ri * ri, b.x(5));
  o.x(4) = vscale(r4, b.x(4));
  o.x(3) = b.sum({{r, b.x(3)}, {bb * r, b.x(4)}});
  o.x(2) = b.sum({{ri, b.x(2)}, {a * ri, b.x(4)}, {-c * ri, b.x(5)}});
  o.x(1) = vscale(ri * ri * ri, b.x(1));
  o.y(1) = b.sum({{r3, b.y(1)}, {d * r3, b.x(4)}});
  o.y(2) = vscale(r, b.y(2));
  o.y(3) = b.sum({{ri, b.y(3)}, {-e * ri * ri, b.x(3)}, {-e * bb * ri * ri, b.x(4)}});
  const E r4i = one / r4;
  o.y(4) = b.sum({{r4i, b.y(4)}, {-bb * r4i, b.y(3)}, {-a * r4i, b.y(2)}, {d * r4i, b.x(1)}});
  o.y(5) = b.sum({{r2, b.y(5)}, {c * r2, b.y(2)}});
  return o;
}

template <class F>
void require_zero(const Frame<F>& fr, std::initializer_list<Coord> cs, const std::string& step) {
  fr.require_standard(step);
  for (const auto& c : cs)
    if (!fr.at(c).is_zero()) throw InternalError(step + ": " + coord_name(c) + " is not zero");
}

template <class F>
Frame<F> shape_p2_4(const Algebra<F>& alg, const Series2<F>& s, const Class7<F>& c7) {
  using E = typename F::Elem;
  const auto& L = s.L;
  const E one = alg.field().one();
  Spaces<F> xs{c7.U, L[5], L[6], L[7], c7.L5L2};
  Spaces<F> ys{L[4], L[3], s.all, perp(alg, c7.L5L2), s.all};
  auto fr = adapted_frame(alg, xs, ys, "P2_4");
  // x1y2 = x2y3 = x5, y1y2 = x4
  settle(fr, B(1, 2, 5), mxx(4, 5), alg.field().zero(), "P2_4");
  settle_torus(fr, {{A(1, 2, 5), one}, {A(2, 3, 5), one}, {B(1, 2, 4), one}}, "P2_4");
  {  // y1y3 = 0
    const E a = fr.at(B(1, 3, 5)), b = fr.at(B(1, 3, 4));
    Rebuild<F> r(fr);
    r.out.x(2) = r.sum({{one, r.x(2)}, {b, r.x(3)}});
    r.out.y(1) = r.sum({{one, r.y(1)}, {-a, r.x(2)}});
    r.out.y(2) = r.sum({{one, r.y(2)}, {-a, r.x(1)}});
    r.out.y(3) = r.sum({{one, r.y(3)}, {-b, r.y(2)}, {a * b, r.x(1)}});
    fr = r.out;
    require_zero(fr, {B(1, 3, 4), B(1, 3, 5)}, "P2_4");
  }
  {  // y2y3 = 0
    const E a = fr.at(B(2, 3, 4)), b = fr.at(B(2, 3, 5));
    Rebuild<F> r(fr);
    r.out.x(1) = r.sum({{one, r.x(1)}, {-a, r.x(3)}});
    r.out.y(2) = r.sum({{one, r.y(2)}, {-b, r.x(2)}});
    r.out.y(3) = r.sum({{one, r.y(3)}, {a, r.y(1)}});
    fr = r.out;
    require_zero(fr, {B(2, 3, 4), B(2, 3, 5)}, "P2_4");
  }
  {  // x1y3 = b x4
    const E a = fr.at(A(1, 3, 5));
    Rebuild<F> r(fr);
    r.out.x(1) = r.sum({{one, r.x(1)}, {-a, r.x(2)}});
    r.out.y(2) = r.sum({{one, r.y(2)}, {a, r.y(1)}});
    fr = r.out;
  }
  settle_torus(fr, {{A(1, 2, 5), one}, {A(2, 3, 5), one}, {B(1, 2, 4), one}, {A(1, 3, 4), one}}, "P2_4");
  Shape<F> shape;
  shape.fixed = {A(1, 2, 5), A(2, 3, 5), B(1, 2, 4), A(1, 3, 4)};
  shape.free_coords = {A(1, 4, 5), A(2, 4, 5), B(1, 4, 5), B(2, 4, 5), B(3, 4, 5), A(3, 4, 5)};
  require_shape(fr, shape, "P2_4");
  return fr;
}

template <class F>
Frame<F> finish_p2_4(const Frame<F>& fr) {
  using E = typename F::Elem;
  Rebuild<F> b(fr);
  const E one = fr.field().one();
  const E a = fr.at(A(1, 4, 5)), bb = fr.at(A(2, 4, 5)), c = fr.at(B(1, 4, 5)), d = fr.at(B(2, 4, 5)),
          e = fr.at(B(3, 4, 5)), r = fr.at(A(3, 4, 5));
  auto& o = b.out;
  o.y(5) = b.sum({{one, b.y(5)}, {c, b.y(2)}});
  o.y(1) = b.sum({{one, b.y(1)}, {d, b.x(4)}});
  o.x(3) = b.sum({{one, b.x(3)}, {bb, b.x(4)}});
  o.y(3) = b.sum({{one, b.y(3)}, {-e / r, b.x(3)}, {-bb * e / r, b.x(4)}});
  o.x(2) = b.sum({{one, b.x(2)}, {a, b.x(4)}, {-c, b.x(5)}});
  o.y(4) = b.sum({{one, b.y(4)}, {-a, b.y(2)}, {-bb, b.y(3)}, {d, b.x(1)}});
  return o;
}

template <class F>
Frame<F> shape_p2_5(const Algebra<F>& alg, const Series2<F>& s, const Class7<F>& c7) {
  const auto& L = s.L;
  auto V = multiplier_space(alg, L[5], perp(alg, c7.L4L3), s.zero);
  auto Vp = perp(alg, V);
  auto W = multiplier_space(alg, c7.U, Vp, s.zero);
  auto L4Vp = product_space(alg, L[4], Vp);
  auto T = L4Vp + c7.L4L3;
  auto Tp = perp(alg, T);
  auto R = multiplier_space(alg, W, Tp, s.zero);
  Spaces<F> xs{R, L4Vp, c7.L4L3, L[7], c7.L5L2};
  Spaces<F> ys{L[4], perp(alg, W), perp(alg, R + L4Vp), Tp, s.all};
  Shape<F> shape;
  shape.fixed = {A(3, 4, 5), A(1, 2, 5), B(1, 2, 3)};
  shape.free_coords = {B(3, 4, 5), B(1, 3, 5), B(1, 4, 5), B(2, 4, 5), B(2, 3, 4), B(2, 3, 5), A(2, 3, 5)};
  return reach_shape(adapted_frame(alg, xs, ys, "P2_5"), shape, "P2_5");
}

template <class F>
Frame<F> finish_p2_5(const Frame<F>& fr) {
  using E = typename F::Elem;
  Rebuild<F> b(fr);
  const E one = fr.field().one();
  const E a = fr.at(B(3, 4, 5)), bb = fr.at(B(1, 3, 5)), c = fr.at(B(1, 4, 5)), f = fr.at(B(2, 4, 5)),
          d = fr.at(B(2, 3, 4)), e = fr.at(B(2, 3, 5)), r = fr.at(A(2, 3, 5));
  auto& o = b.out;
  o.x(1) = b.sum({{one, b.x(1)}, {d, b.x(4)}});
  o.x(2) = b.sum({{one, b.x(2)}, {-bb, b.x(5)}});
  o.y(1) = b.sum({{one, b.y(1)}, {-c, b.x(3)}});
  o.y(2) = b.sum({{one, b.y(2)}, {-(c + e) / r, b.x(2)}, {-f, b.x(3)}, {bb * (c + e) / r, b.x(5)}});
  o.y(3) = b.sum({{one, b.y(3)},
                  {-c, b.x(1)},
                  {-f, b.x(2)},
                  {-(a + bb * d), b.x(3)},
                  {-c * d, b.x(4)},
                  {bb * f, b.x(5)}});
  o.y(4) = b.sum({{one, b.y(4)}, {-d, b.y(1)}});
  o.y(5) = b.sum({{one, b.y(5)}, {bb, b.y(2)}});
  return o;
}

template <class F>
Frame<F> shape_p2_6(const Algebra<F>& alg, const Series2<F>& s, const Class7<F>& c7) {
  const auto& L = s.L;
  auto V = multiplier_space(alg, L[5], perp(alg, c7.L4L3), s.zero);
  Spaces<F> xs{c7.U, V, c7.L4L3, L[7], c7.L5L2};
  Spaces<F> ys{L[4], L[3], perp(alg, V), perp(alg, c7.L4L3), s.all};
  Shape<F> shape;
  shape.fixed = {A(3, 4, 5), A(1, 2, 5), A(1, 3, 4), B(1, 2, 3)};
  shape.free_coords = {B(1, 3, 4), B(1, 3, 5), B(1, 4, 5), B(2, 3, 4), B(2, 3, 5),
                       B(2, 4, 5), A(1, 4, 5), B(3, 4, 5), A(2, 3, 5)};
  shape.kills = {{A(1, 3, 5), mxx(4, 5)}};
  return reach_shape(adapted_frame(alg, xs, ys, "P2_6"), shape, "P2_6");
}

template <class F>
Frame<F> finish_p2_6(const Frame<F>& fr) {
  using E = typename F::Elem;
  Rebuild<F> b(fr);
  const E one = fr.field().one();
  const E a = fr.at(B(1, 3, 4)), bb = fr.at(B(1, 3, 5)), c = fr.at(B(1, 4, 5)), d = fr.at(B(2, 3, 4)),
          e = fr.at(B(2, 3, 5)), f = fr.at(B(2, 4, 5)), g = fr.at(A(1, 4, 5)), h = fr.at(B(3, 4, 5));
  const E ga = c + e, be = a * e - h - bb * d;
  auto& o = b.out;
  o.x(2) = b.sum({{one, b.x(2)}, {-a, b.x(4)}, {-bb, b.x(5)}});
  o.x(1) = b.sum({{one, b.x(1)}, {-(a + g), b.x(3)}, {d, b.x(4)}, {ga, b.x(5)}});
  o.y(1) = b.sum({{one, b.y(1)}, {-c, b.x(3)}});
  o.y(2) = b.sum({{one, b.y(2)}, {-f, b.x(3)}});
  o.y(3) = b.sum({{one, b.y(3)},
                  {-c, b.x(1)},
                  {-f, b.x(2)},
                  {be, b.x(3)},
                  {a * f - c * d, b.x(4)},
                  {bb * f, b.x(5)},
                  {a + g, b.y(1)}});
  o.y(4) = b.sum({{one, b.y(4)}, {-d, b.y(1)}, {a, b.y(2)}});
  o.y(5) = b.sum({{one, b.y(5)}, {c * ga, b.x(3)}, {-ga, b.y(1)}, {bb, b.y(2)}});
  return o;
}

template <class F>
Frame<F> shape_p2_7(const Algebra<F>& alg, const Series2<F>& s, const Class7<F>& c7) {
  const auto& L = s.L;
  auto W = product_space(alg, c7.U, perp(alg, c7.L5L2));
  auto Wp = perp(alg, W);
  auto WL = product_space(alg, W, s.all);
  auto R = multiplier_space(alg, c7.U, Wp, s.zero);
  auto V = multiplier_space(alg, L[4], L[3], intersect(c7.L4L3, WL));
  Spaces<F> xs{R, product_space(alg, L[4], Wp), intersect(c7.L4L3, WL), intersect(c7.L4L3, L[7]), c7.L5L2};
  Spaces<F> ys{V, s.all, Wp, s.all, s.all};
  Shape<F> shape;
  shape.fixed = {A(3, 4, 5), A(2, 3, 5), A(1, 2, 4), B(1, 2, 3)};
  shape.free_coords = {A(1, 4, 5), B(1, 4, 5), B(2, 4, 5), B(3, 4, 5), B(1, 3, 5), B(2, 3, 4), B(2, 3, 5)};
  return reach_shape(adapted_frame(alg, xs, ys, "P2_7"), shape, "P2_7");
}

template <class F>
Frame<F> finish_p2_7(const Frame<F>& fr) {
  using E = typename F::Elem;
  Rebuild<F> b(fr);
  const E one = fr.field().one();
  const E a = fr.at(A(1, 4, 5)), d = fr.at(B(1, 4, 5)), g = fr.at(B(2, 4, 5)), h = fr.at(B(3, 4, 5)),
          c = fr.at(B(1, 3, 5)), e = fr.at(B(2, 3, 4)), f = fr.at(B(2, 3, 5));
  auto& o = b.out;
  o.x(2) = b.sum({{one, b.x(2)}, {-c, b.x(5)}});
  o.x(1) = b.sum({{one, b.x(1)}, {c - a, b.x(3)}, {e + d, b.x(4)}, {f, b.x(5)}});
  o.y(1) = b.sum({{one, b.y(1)}, {-d, b.x(3)}});
  o.y(2) = b.sum({{one, b.y(2)}, {-g, b.x(3)}});
  o.y(3) = b.sum({{one, b.y(3)},
                  {-d, b.x(1)},
                  {-g, b.x(2)},
                  {-(h + c * e), b.x(3)},
                  {c * g - d * f, b.x(5)},
                  {a - c, b.y(1)}});
  o.y(4) = b.sum({{one, b.y(4)}, {d * (d + e), b.x(3)}, {-(e + d), b.y(1)}});
  o.y(5) = b.sum({{one, b.y(5)}, {-f, b.y(1)}, {c, b.y(2)}});
  return o;
}

/// The coordinate carrying the parameter in each parameterized family.
inline Coord parameter_coord(Family fam) {
  switch (fam) {
    case Family::P2_2:
    case Family::P2_4: return A(3, 4, 5);
    default: return A(2, 3, 5);
  }
}

/// Torus exponents fixing every nonzero coordinate of the family except `pc`, with the least positive
/// weight on `pc` among all such exponents.
inline std::pair<std::vector<long>, long> parameter_torus(Family fam, const Coord& pc) {
  QQ q;
  auto pres = family_presentation(q, fam, std::vector<Rational>(family_arity(fam), Rational(1)));
  std::vector<std::vector<long>> rows;
  for (const auto& [key, v] : pres.triples) {
    auto [kind, i, j, k] = key;
    if (kind == pc.kind && i == pc.i && j == pc.j && k == pc.k) continue;
    rows.push_back(torus_weight(Coord{kind, i, j, k}, 5));
  }
  auto ker = integer_kernel(rows, 5);
  const auto pw = torus_weight(pc, 5);
  // combine kernel vectors by extended Euclid on their weights
  std::vector<long> w(5, 0);
  long g = 0;
  for (const auto& kv : ker) {
    long v = 0;
    for (std::size_t i = 0; i < 5; ++i) v += pw[i] * kv[i];
    if (v == 0) continue;
    // g' = s g + t v
    long s0 = 1, t0 = 0, s1 = 0, t1 = 1, a = g, b = v;
    while (b != 0) {
      long qq = a / b;
      std::tie(a, b) = std::make_pair(b, a - qq * b);
      std::tie(s0, s1) = std::make_pair(s1, s0 - qq * s1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - qq * t1);
    }
    for (std::size_t i = 0; i < 5; ++i) w[i] = s0 * w[i] + t0 * kv[i];
    g = a;
  }
  if (g == 0) throw InternalError(family_name(fam) + ": no torus moves the parameter");
  if (g < 0) {
    g = -g;
    for (auto& x : w) x = -x;
  }
  return {w, g};
}

template <class F>
void apply_scaling(Frame<F>& fr, const std::vector<long>& w, const typename F::Elem& base) {
  for (int i = 1; i <= fr.half(); ++i) {
    auto t = base.pow(w[static_cast<std::size_t>(i - 1)]);
    fr.x(i) = vscale(t, fr.x(i));
    fr.y(i) = vscale(t.inv(), fr.y(i));
  }
}

/// Representative of the parameter's class and the torus moving r onto it.
template <class F>
std::tuple<typename F::Elem, std::vector<long>, typename F::Elem> coset_scaling(const Frame<F>& fr, Family fam,
                                                                                const Coord& pc,
                                                                                const typename F::Elem& r) {
  auto [w, weight] = parameter_torus(fam, pc);
  if (weight != power_exponent(fam))
    throw InternalError(family_name(fam) + ": parameter torus has weight " + std::to_string(weight));
  auto [rep, u] = coset_representative(fr.field(), r, weight);
  return {rep, w, u};
}

}  // namespace detail

/// Canonical form and witness frame for a centre-dimension-2 algebra; nothing when the class is not 6 or 7.
template <class F>
std::optional<std::pair<CanonicalForm<F>, Matrix<typename F::Elem>>> canonicalize_centre2(const Algebra<F>& alg) {
  using namespace detail;
  using E = typename F::Elem;
  Series2<F> s(alg);
  Family fam;
  Frame<F> fr(alg);
  if (s.cls == 6) {
    auto l3l3 = product_space(alg, s.L[3], s.L[3]);
    if (s.Z.contains(l3l3)) {
      fam = Family::P2_1;
      fr = finish_p2_1(shape_p2_1(alg, s));
    } else {
      fam = Family::P2_2;
      fr = finish_p2_2(shape_p2_2(alg, s));
    }
  } else if (s.cls == 7) {
    Class7<F> c7(alg, s);
    const bool thin = c7.UL2.dim() == 1;
    if (c7.L4L3 == s.L[7]) {
      fam = thin ? Family::P2_3 : Family::P2_4;
      fr = thin ? finish_p2_3(shape_p2_3(alg, s, c7)) : finish_p2_4(shape_p2_4(alg, s, c7));
    } else if (c7.L4L3.contains(c7.L5L2)) {
      fam = thin ? Family::P2_5 : Family::P2_6;
      fr = thin ? finish_p2_5(shape_p2_5(alg, s, c7)) : finish_p2_6(shape_p2_6(alg, s, c7));
    } else {
      fam = Family::P2_7;
      fr = finish_p2_7(shape_p2_7(alg, s, c7));
    }
  } else {
    return std::nullopt;
  }
  CanonicalForm<F> cf;
  cf.family = fam;
  if (family_arity(fam) == 1) {
    const Coord pc = parameter_coord(fam);
    E r = fr.at(pc);
    auto [rep, w, base] = coset_scaling(fr, fam, pc, r);
    apply_scaling(fr, w, base);
    cf.params = {fr.at(pc)};
    if (!(cf.params[0] == rep)) throw InternalError(family_name(fam) + ": parameter scaling failed");
  }
  auto got = as_presentation(fr.transported());
  if (!got || !(*got == family_presentation(alg.field(), fam, cf.params)))
    throw InternalError(family_name(fam) + ": final basis does not give the canonical presentation");
  return std::make_pair(cf, fr.rows());
}

}  // namespace saa
