// Working standard bases used by the canonicalization procedures.
#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "saa/structure.hpp"

namespace saa {

/// Raised when a procedure reaches a state its input class rules out.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A triple coordinate (x_i y_j, y_k) or (y_i y_j, y_k) of a presentation.
struct Coord {
  TripleKind kind;
  int i, j, k;
};
inline Coord A(int i, int j, int k) { return {TripleKind::XYY, i, j, k}; }
inline Coord B(int i, int j, int k) { return {TripleKind::YYY, i, j, k}; }

inline std::string coord_name(const Coord& c) {
  return std::string("(") + (c.kind == TripleKind::XYY ? "x" : "y") + std::to_string(c.i) + "y" +
         std::to_string(c.j) + ",y" + std::to_string(c.k) + ")";
}

/// Ten vectors x1,y1,...,x5,y5 in the coordinates of a fixed algebra.
template <class F>
class Frame {
 public:
  using E = typename F::Elem;

  explicit Frame(const Algebra<F>& alg) : alg_(&alg), v_(alg.dim(), Vec<E>(alg.dim())) {}
  Frame(const Algebra<F>& alg, Matrix<E> rows) : alg_(&alg), v_(std::move(rows)) {}

  const Algebra<F>& algebra() const { return *alg_; }
  const F& field() const { return alg_->field(); }
  int half() const { return static_cast<int>(v_.size() / 2); }

  Vec<E>& x(int i) { return v_[X(static_cast<std::size_t>(i))]; }
  Vec<E>& y(int i) { return v_[Y(static_cast<std::size_t>(i))]; }
  const Vec<E>& x(int i) const { return v_[X(static_cast<std::size_t>(i))]; }
  const Vec<E>& y(int i) const { return v_[Y(static_cast<std::size_t>(i))]; }
  const Matrix<E>& rows() const { return v_; }

  E tri(const Vec<E>& u, const Vec<E>& v, const Vec<E>& w) const { return alg_->triple(u, v, w); }
  E form(const Vec<E>& u, const Vec<E>& v) const { return alg_->form(u, v); }
  Vec<E> mul(const Vec<E>& u, const Vec<E>& v) const { return alg_->mul(u, v); }

  const Vec<E>& first(const Coord& c) const { return c.kind == TripleKind::XYY ? x(c.i) : y(c.i); }
  E at(const Coord& c) const { return tri(first(c), y(c.j), y(c.k)); }

  bool is_standard() const { return standard_check(); }

  void require_standard(const std::string& step) const {
    if (!standard_check()) throw InternalError(step + ": basis is not standard");
  }

  Vec<E> lc(std::initializer_list<std::pair<E, const Vec<E>*>> terms) const {
    Vec<E> r(v_.size());
    for (const auto& [c, p] : terms) axpy(r, c, *p);
    return r;
  }

  /// Table of the algebra written in this basis.
  Algebra<F> transported() const { return alg_->transform(v_); }

 private:
  bool standard_check() const {
    const std::size_t n = v_.size() / 2;
    const E one = field().one();
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        if (!(form(v_[X(i)], v_[Y(j)]) == (i == j ? one : field().zero()))) return false;
        if (!form(v_[X(i)], v_[X(j)]).is_zero() || !form(v_[Y(i)], v_[Y(j)]).is_zero()) return false;
      }
    return true;
  }

  const Algebra<F>* alg_;
  Matrix<E> v_;
};

/// First echelon basis vector of `s` outside `avoid`; nothing when s is inside avoid.
template <class E>
std::optional<Vec<E>> pick_outside(const Subspace<E>& s, const Subspace<E>& avoid) {
  for (const auto& b : s.basis())
    if (!avoid.contains(b)) return b;
  return std::nullopt;
}

/// Chooses x_i from xs[i-1] (in order of increasing dimension, outside the span of earlier
/// choices) unless `fixed_x` already supplies it, then solves for y_i in ys[i-1] dual to the x's
/// and makes the y's pairwise orthogonal by adding x's.
template <class F>
Frame<F> adapted_frame(const Algebra<F>& alg, const std::vector<SubspaceOf<F>>& xs,
                       const std::vector<SubspaceOf<F>>& ys, const std::string& step,
                       const std::vector<std::optional<Vec<typename F::Elem>>>& fixed_x = {}) {
  using E = typename F::Elem;
  const int n = static_cast<int>(alg.dim() / 2);
  Frame<F> fr(alg);
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  SubspaceOf<F> span_x(alg.dim());
  for (int i = 1; i <= n; ++i)
    if (static_cast<std::size_t>(i) <= fixed_x.size() && fixed_x[static_cast<std::size_t>(i - 1)]) {
      fr.x(i) = *fixed_x[static_cast<std::size_t>(i - 1)];
      chosen[static_cast<std::size_t>(i - 1)] = true;
      span_x = span_x.with(fr.x(i));
    }
  std::vector<int> order;
  for (int i = 1; i <= n; ++i)
    if (!chosen[static_cast<std::size_t>(i - 1)]) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return xs[static_cast<std::size_t>(a - 1)].dim() < xs[static_cast<std::size_t>(b - 1)].dim();
  });
  for (int i : order) {
    auto v = pick_outside(xs[static_cast<std::size_t>(i - 1)], span_x);
    if (!v) throw InternalError(step + ": no choice for x" + std::to_string(i));
    fr.x(i) = *v;
    span_x = span_x.with(*v);
  }
  if (span_x.dim() != static_cast<std::size_t>(n)) throw InternalError(step + ": x vectors dependent");

  const E one = alg.field().one();
  for (int i = 1; i <= n; ++i) {
    const auto& bs = ys[static_cast<std::size_t>(i - 1)].basis();
    Matrix<E> m;
    Vec<E> rhs;
    for (int j = 1; j <= n; ++j) {
      Vec<E> row;
      for (const auto& b : bs) row.push_back(alg.form(fr.x(j), b));
      m.push_back(std::move(row));
      rhs.push_back(i == j ? one : alg.field().zero());
    }
    auto c = solve(m, rhs, bs.size());
    if (!c) throw InternalError(step + ": no dual choice for y" + std::to_string(i));
    fr.y(i) = vecmat(*c, bs);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      E c = alg.form(fr.y(i), fr.y(j));
      if (c.is_zero()) continue;
      if (ys[static_cast<std::size_t>(j - 1)].contains(fr.x(i))) {
        axpy(fr.y(j), c, fr.x(i));
      } else if (ys[static_cast<std::size_t>(i - 1)].contains(fr.x(j))) {
        axpy(fr.y(i), -c, fr.x(j));
      } else {
        throw InternalError(step + ": cannot orthogonalize y" + std::to_string(i) + ", y" + std::to_string(j));
      }
    }
  fr.require_standard(step);
  return fr;
}

/// One-parameter symplectic moves on a frame.
struct Move {
  enum Kind { XX, YX } kind;
  int i, j;
};
/// x_i += t x_j and y_j -= t y_i.
inline Move mxx(int i, int j) { return {Move::XX, i, j}; }
/// y_i += t x_j and y_j += t x_i (just y_i += t x_i when i == j).
inline Move myx(int i, int j) { return {Move::YX, i, j}; }

template <class F>
void apply_move(Frame<F>& fr, const Move& m, const typename F::Elem& t) {
  if (m.kind == Move::XX) {
    auto xj = fr.x(m.j);
    auto yi = fr.y(m.i);
    axpy(fr.x(m.i), t, xj);
    axpy(fr.y(m.j), -t, yi);
  } else if (m.i == m.j) {
    auto xi = fr.x(m.i);
    axpy(fr.y(m.i), t, xi);
  } else {
    auto xi = fr.x(m.i), xj = fr.x(m.j);
    axpy(fr.y(m.i), t, xj);
    axpy(fr.y(m.j), t, xi);
  }
}

/// Uses `m` to move coordinate `c` to `target`; the coordinate must depend affinely on the move.
template <class F>
void settle(Frame<F>& fr, const Coord& c, const Move& m, const typename F::Elem& target, const std::string& step) {
  using E = typename F::Elem;
  const E zero = fr.field().zero(), one = fr.field().one();
  // c(t) = c0 + c1 t + c2 t^2 + c3 t^3 from the vector deltas of the move at t = 1
  Frame<F> moved = fr;
  apply_move(moved, m, one);
  const Vec<E>* base[3] = {&fr.first(c), &fr.y(c.j), &fr.y(c.k)};
  Vec<E> delta[3] = {vsub(moved.first(c), fr.first(c)), vsub(moved.y(c.j), fr.y(c.j)),
                     vsub(moved.y(c.k), fr.y(c.k))};
  auto pick = [&](int slot, bool d) -> const Vec<E>& { return d ? delta[slot] : *base[slot]; };
  E coef[4] = {zero, zero, zero, zero};
  for (int mask = 0; mask < 8; ++mask) {
    int deg = __builtin_popcount(static_cast<unsigned>(mask));
    coef[deg] += fr.tri(pick(0, mask & 1), pick(1, mask & 2), pick(2, mask & 4));
  }
  if (!coef[2].is_zero() || !coef[3].is_zero()) throw InternalError(step + ": move is not affine on " + coord_name(c));
  E gap = target - coef[0];
  if (gap.is_zero()) return;
  if (coef[1].is_zero()) throw InternalError(step + ": move does not reach " + coord_name(c));
  apply_move(fr, m, gap / coef[1]);
}

/// Adds a symmetric combination y_i += sum_j S_ij x_j solving the listed coordinates to zero;
/// requires the x's to multiply trivially so that the coordinates are affine in S.
template <class F>
void settle_shift(Frame<F>& fr, const std::vector<Coord>& zeros, const std::string& step) {
  using E = typename F::Elem;
  const int n = fr.half();
  const E one = fr.field().one();
  std::vector<Move> moves;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) moves.push_back(myx(i, j));
  Matrix<E> m(zeros.size(), Vec<E>(moves.size()));
  Vec<E> rhs(zeros.size());
  for (std::size_t r = 0; r < zeros.size(); ++r) rhs[r] = -fr.at(zeros[r]);
  for (std::size_t c = 0; c < moves.size(); ++c) {
    Frame<F> moved = fr;
    apply_move(moved, moves[c], one);
    for (std::size_t r = 0; r < zeros.size(); ++r) m[r][c] = moved.at(zeros[r]) + rhs[r];
  }
  auto s = solve(m, rhs, moves.size());
  if (!s) throw InternalError(step + ": no symmetric shift clears the coordinates");
  Frame<F> base = fr;
  for (std::size_t c = 0; c < moves.size(); ++c) {
    const auto& mv = moves[c];
    const E& t = (*s)[c];
    if (t.is_zero()) continue;
    if (mv.i == mv.j) {
      axpy(fr.y(mv.i), t, base.x(mv.i));
    } else {
      axpy(fr.y(mv.i), t, base.x(mv.j));
      axpy(fr.y(mv.j), t, base.x(mv.i));
    }
  }
  for (const auto& c : zeros)
    if (!fr.at(c).is_zero()) throw InternalError(step + ": shift left " + coord_name(c) + " nonzero");
}

namespace detail {

/// Integer K with M K = I (M is m x n, m <= n), by column Hermite reduction; nothing when the
/// row lattice is not unimodular.
inline std::optional<std::vector<std::vector<long>>> right_inverse(std::vector<std::vector<long>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::vector<long>> u(cols, std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto colop = [&](std::size_t a, std::size_t b, long q) {  // col_a -= q col_b
    for (auto& row : m) row[a] -= q * row[b];
    for (auto& row : u) row[a] -= q * row[b];
  };
  auto colswap = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
  };
  auto colneg = [&](std::size_t a) {
    for (auto& row : m) row[a] = -row[a];
    for (auto& row : u) row[a] = -row[a];
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (;;) {
      std::size_t piv = cols;
      for (std::size_t c = r; c < cols; ++c)
        if (m[r][c] != 0 && (piv == cols || std::labs(m[r][c]) < std::labs(m[r][piv]))) piv = c;
      if (piv == cols) return std::nullopt;
      if (piv != r) colswap(piv, r);
      bool done = true;
      for (std::size_t c = r + 1; c < cols; ++c)
        if (m[r][c] != 0) {
          colop(c, r, m[r][c] / m[r][r]);
          if (m[r][c] != 0) done = false;
        }
      if (done) break;
    }
    if (std::labs(m[r][r]) != 1) return std::nullopt;
    if (m[r][r] < 0) colneg(r);
  }
  // M U = [H | 0] with H unit lower triangular; K = U[:, :rows] H^{-1}
  std::vector<std::vector<long>> hinv(rows, std::vector<long>(rows, 0));
  for (std::size_t c = 0; c < rows; ++c) {
    hinv[c][c] = 1;
    for (std::size_t r = c + 1; r < rows; ++r) {
      long s = 0;
      for (std::size_t k = c; k < r; ++k) s += m[r][k] * hinv[k][c];
      hinv[r][c] = -s;
    }
  }
  std::vector<std::vector<long>> k(cols, std::vector<long>(rows, 0));
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t c = 0; c < rows; ++c)
      for (std::size_t r = 0; r < rows; ++r) k[i][c] += u[i][r] * hinv[r][c];
  return k;
}

/// Basis of the integer vectors v with m v = 0, by column reduction.
inline std::vector<std::vector<long>> integer_kernel(std::vector<std::vector<long>> m, std::size_t cols) {
  std::vector<std::vector<long>> u(cols, std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto colop = [&](std::size_t a, std::size_t b, long q) {
    for (auto& row : m) row[a] -= q * row[b];
    for (auto& row : u) row[a] -= q * row[b];
  };
  auto colswap = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
  };
  std::size_t next = 0;
  for (std::size_t r = 0; r < m.size() && next < cols; ++r) {
    for (;;) {
      std::size_t piv = cols;
      for (std::size_t c = next; c < cols; ++c)
        if (m[r][c] != 0 && (piv == cols || std::labs(m[r][c]) < std::labs(m[r][piv]))) piv = c;
      if (piv == cols) break;
      if (piv != next) colswap(piv, next);
      bool done = true;
      for (std::size_t c = next + 1; c < cols; ++c)
        if (m[r][c] != 0) {
          colop(c, next, m[r][c] / m[r][next]);
          if (m[r][c] != 0) done = false;
        }
      if (done) {
        ++next;
        break;
      }
    }
  }
  std::vector<std::vector<long>> out;
  for (std::size_t c = next; c < cols; ++c) {
    std::vector<long> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][c];
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<long> torus_weight(const Coord& c, int n) {
  std::vector<long> w(static_cast<std::size_t>(n), 0);
  if (c.kind == TripleKind::XYY)
    w[static_cast<std::size_t>(c.i - 1)] += 1;
  else
    w[static_cast<std::size_t>(c.i - 1)] -= 1;
  w[static_cast<std::size_t>(c.j - 1)] -= 1;
  w[static_cast<std::size_t>(c.k - 1)] -= 1;
  return w;
}

}  // namespace detail

/// Rescales x_i -> t_i x_i, y_i -> y_i / t_i so that every listed coordinate takes its target.
template <class F>
void settle_torus(Frame<F>& fr, const std::vector<std::pair<Coord, typename F::Elem>>& targets,
                  const std::string& step) {
  using E = typename F::Elem;
  const int n = fr.half();
  std::vector<std::vector<long>> m;
  std::vector<E> ratio;
  for (const auto& [c, t] : targets) {
    E v = fr.at(c);
    if (v.is_zero()) throw InternalError(step + ": coordinate " + coord_name(c) + " vanishes");
    m.push_back(detail::torus_weight(c, n));
    ratio.push_back(t / v);
  }
  auto k = detail::right_inverse(m);
  if (!k) throw InternalError(step + ": torus equations need roots");
  for (int i = 1; i <= n; ++i) {
    E ti = fr.field().one();
    for (std::size_t c = 0; c < ratio.size(); ++c) ti *= ratio[c].pow((*k)[static_cast<std::size_t>(i - 1)][c]);
    fr.x(i) = vscale(ti, fr.x(i));
    fr.y(i) = vscale(ti.inv(), fr.y(i));
  }
  for (const auto& [c, t] : targets)
    if (!(fr.at(c) == t)) throw InternalError(step + ": torus normalization failed on " + coord_name(c));
}

}  // namespace saa
