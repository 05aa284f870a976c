// Exact scalar fields: GF(p), GF(p^n) and the rationals.
#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace saa {

/// Raised for mathematically invalid requests (division by zero, bad field, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when text input cannot be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline long parse_long(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) throw ParseError("empty integer");
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + t + "'");
  }
  if (pos != t.size()) throw ParseError("bad integer '" + t + "'");
  return v;
}

// Polynomials over GF(p) as coefficient vectors, low degree first.
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  poly_trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = 1;
  for (std::uint32_t x = 1; x < p; ++x)
    if (x * m.back() % p == 1) lead_inv = x;
  while (a.size() > dm) {
    std::uint32_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    poly_trim(a);
  }
  return a;
}

// Exhaustive check: no monic factor of degree 1..deg/2.
inline bool poly_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  if (deg == 0 || m.back() == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[d] = 1;
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

struct GFTables {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  std::uint32_t q = 2;
  Poly modulus;  // monic, degree n; empty for prime fields
  std::vector<std::uint16_t> add, mul, neg, inv;

  std::uint32_t add_(std::uint32_t a, std::uint32_t b) const {
    return n == 1 ? (a + b) % p : add[a * q + b];
  }
  std::uint32_t mul_(std::uint32_t a, std::uint32_t b) const {
    return n == 1 ? static_cast<std::uint32_t>(std::uint64_t(a) * b % p) : mul[a * q + b];
  }
  std::uint32_t neg_(std::uint32_t a) const { return n == 1 ? (p - a) % p : neg[a]; }
  std::uint32_t inv_(std::uint32_t a) const {
    if (n > 1) return inv[a];
    // Fermat
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }
};

inline std::shared_ptr<const GFTables> build_tables(std::uint32_t p, Poly modulus) {
  auto t = std::make_shared<GFTables>();
  t->p = p;
  if (modulus.empty() || modulus.size() == 2) {
    t->n = 1;
    t->q = p;
    return t;
  }
  t->n = static_cast<std::uint32_t>(modulus.size() - 1);
  t->q = 1;
  for (std::uint32_t i = 0; i < t->n; ++i) t->q *= p;
  t->modulus = std::move(modulus);
  const std::uint32_t q = t->q, n = t->n;
  auto digits = [&](std::uint32_t c) {
    Poly d(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      d[i] = c % p;
      c /= p;
    }
    return d;
  };
  auto code = [&](const Poly& d) {
    std::uint32_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
    return c;
  };
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly da = digits(a);
    Poly na(n);
    for (std::uint32_t i = 0; i < n; ++i) na[i] = (p - da[i]) % p;
    t->neg[a] = static_cast<std::uint16_t>(code(na));
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly db = digits(b);
      Poly s(n);
      for (std::uint32_t i = 0; i < n; ++i) s[i] = (da[i] + db[i]) % p;
      t->add[a * q + b] = static_cast<std::uint16_t>(code(s));
      Poly pr(2 * n, 0);
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) pr[i + j] = (pr[i + j] + da[i] * db[j]) % p;
      Poly r = poly_mod(pr, t->modulus, p);
      r.resize(n, 0);
      t->mul[a * q + b] = static_cast<std::uint16_t>(code(r));
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) t->inv[a] = static_cast<std::uint16_t>(b);
  return t;
}

}  // namespace detail

class GF;

/// Element of a finite field. A default-constructed value is the zero of any field.
class GFElem {
 public:
  GFElem() = default;
  GFElem(const detail::GFTables* t, std::uint32_t v) : t_(t), v_(v) {}

  std::uint32_t code() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend GFElem operator+(const GFElem& a, const GFElem& b) {
    const auto* t = a.t_ ? a.t_ : b.t_;
    if (!t) return {};
    return {t, t->add_(a.v_, b.v_)};
  }
  friend GFElem operator-(const GFElem& a) {
    if (!a.t_) return {};
    return {a.t_, a.t_->neg_(a.v_)};
  }
  friend GFElem operator-(const GFElem& a, const GFElem& b) { return a + (-b); }
  friend GFElem operator*(const GFElem& a, const GFElem& b) {
    if (a.v_ == 0 || b.v_ == 0) return {a.t_ ? a.t_ : b.t_, 0};
    return {a.t_, a.t_->mul_(a.v_, b.v_)};
  }
  GFElem inv() const {
    if (v_ == 0) throw DomainError("division by zero");
    return {t_, t_->inv_(v_)};
  }
  friend GFElem operator/(const GFElem& a, const GFElem& b) { return a * b.inv(); }
  GFElem& operator+=(const GFElem& b) { return *this = *this + b; }
  GFElem& operator-=(const GFElem& b) { return *this = *this - b; }
  GFElem& operator*=(const GFElem& b) { return *this = *this * b; }
  GFElem& operator/=(const GFElem& b) { return *this = *this / b; }
  friend bool operator==(const GFElem& a, const GFElem& b) { return a.v_ == b.v_; }
  friend bool operator<(const GFElem& a, const GFElem& b) { return a.v_ < b.v_; }

  GFElem pow(long e) const {
    if (!t_) {
      if (e <= 0) throw DomainError("power of a zero without field context");
      return {};
    }
    GFElem base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    GFElem r{t_, 1};
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

 private:
  const detail::GFTables* t_ = nullptr;
  std::uint32_t v_ = 0;
};

/// Finite field context. Prime fields use modular arithmetic; extensions use lookup tables.
class GF {
 public:
  using Elem = GFElem;

  explicit GF(std::uint32_t p, detail::Poly modulus = {}) {
    if (!detail::is_prime(p)) throw DomainError("GF: " + std::to_string(p) + " is not prime");
    if (p > 65521) throw DomainError("GF: prime too large");
    if (modulus.size() > 2) {
      for (auto& c : modulus) c %= p;
      std::uint64_t q = 1;
      for (std::size_t i = 1; i < modulus.size(); ++i) q *= p;
      if (q > 256) throw DomainError("GF: extension order above 256");
      if (modulus.back() != 1) throw DomainError("GF: modulus must be monic");
      if (!detail::poly_irreducible(modulus, p)) throw DomainError("GF: modulus is reducible");
    } else {
      modulus.clear();
    }
    t_ = detail::build_tables(p, std::move(modulus));
  }

  /// First monic irreducible polynomial of degree n (lexicographic on c0..c_{n-1}).
  static GF with_order(std::uint32_t p, std::uint32_t n) {
    if (n == 1) return GF(p);
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      detail::Poly m(n + 1);
      std::uint64_t x = c;
      for (std::uint32_t i = 0; i < n; ++i) {
        m[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      m[n] = 1;
      if (detail::poly_irreducible(m, p)) return GF(p, m);
    }
    throw DomainError("GF: no irreducible polynomial");
  }

  bool finite() const { return true; }
  long characteristic() const { return t_->p; }
  std::uint64_t order() const { return t_->q; }
  std::uint32_t degree() const { return t_->n; }
  const detail::Poly& modulus() const { return t_->modulus; }

  Elem zero() const { return {t_.get(), 0}; }
  Elem one() const { return {t_.get(), 1}; }
  Elem from_int(long v) const {
    long p = t_->p;
    return {t_.get(), static_cast<std::uint32_t>(((v % p) + p) % p)};
  }
  Elem from_code(std::uint32_t c) const {
    if (c >= t_->q) throw DomainError("GF: element code out of range");
    return {t_.get(), c};
  }
  /// The residue class of t (generator of the extension over its prime field).
  Elem gen() const {
    if (t_->n == 1) throw DomainError("GF: prime field has no generator t");
    return {t_.get(), t_->p};
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(t_->q);
    for (std::uint32_t c = 0; c < t_->q; ++c) out.push_back({t_.get(), c});
    return out;
  }

  std::string str(const Elem& a) const {
    if (t_->n == 1) return std::to_string(a.code());
    std::uint32_t c = a.code();
    if (c == 0) return "0";
    std::string s;
    for (std::uint32_t i = 0; i < t_->n; ++i) {
      std::uint32_t d = c % t_->p;
      c /= t_->p;
      if (d == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0) {
        s += std::to_string(d);
        continue;
      }
      if (d != 1) s += std::to_string(d) + "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

  /// Integers, or polynomials in t such as "1+2*t^2" for extension fields.
  Elem parse(std::string_view text) const {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty field element");
    Elem acc = zero();
    std::size_t i = 0;
    while (i < s.size()) {
      int sign = 1;
      while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -sign;
        ++i;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      std::string term = s.substr(i, j - i);
      if (term.empty()) throw ParseError("bad field element '" + std::string(text) + "'");
      i = j;
      long coef = 1;
      long expo = 0;
      auto tpos = term.find('t');
      if (tpos == std::string::npos) {
        coef = detail::parse_long(term);
      } else {
        if (t_->n == 1) throw ParseError("'t' used in prime field GF(" + std::to_string(t_->p) + ")");
        std::string head = term.substr(0, tpos);
        std::string tail = term.substr(tpos + 1);
        if (!head.empty()) {
          if (head.back() != '*') throw ParseError("bad term '" + term + "'");
          head.pop_back();
          coef = detail::parse_long(head);
        }
        if (tail.empty()) {
          expo = 1;
        } else {
          if (tail[0] != '^') throw ParseError("bad term '" + term + "'");
          expo = detail::parse_long(tail.substr(1));
          if (expo < 0) throw ParseError("negative exponent in '" + term + "'");
        }
      }
      Elem term_val = from_int(sign * coef);
      if (expo > 0) term_val *= gen().pow(expo);
      acc += term_val;
    }
    return acc;
  }

  std::string spec() const {
    if (t_->n == 1) return "GF(" + std::to_string(t_->p) + ")";
    std::string s = "GF(" + std::to_string(t_->p) + "^" + std::to_string(t_->n) + ";";
    for (std::size_t i = 0; i < t_->modulus.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(t_->modulus[i]);
    }
    return s + ")";
  }

  friend bool operator==(const GF& a, const GF& b) {
    return a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus;
  }

 private:
  std::shared_ptr<const detail::GFTables> t_;
};

/// Reduced fraction backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(long num, long den) {
    if (den == 0) throw DomainError("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  Rational inv() const {
    if (is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(1 / v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational pow(long e) const {
    Rational base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational r(1);
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_{0};
};

/// The field of rational numbers.
class QQ {
 public:
  using Elem = Rational;

  bool finite() const { return false; }
  long characteristic() const { return 0; }
  std::uint64_t order() const { throw DomainError("Q is not finitely enumerable"); }
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long v) const { return Rational(v); }
  std::vector<Elem> elements() const { throw DomainError("Q is not finitely enumerable"); }
  std::string str(const Elem& a) const { return a.str(); }
  Elem parse(std::string_view text) const {
    std::string s = detail::trim(text);
    if (s.empty()) throw ParseError("empty rational");
    for (char ch : s)
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
        throw ParseError("bad rational '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (sgn(v.get_den()) == 0) throw DomainError("zero denominator in '" + s + "'");
    return Rational(v);
  }
  std::string spec() const { return "Q"; }
  friend bool operator==(const QQ&, const QQ&) { return true; }
};

using AnyField = std::variant<GF, QQ>;

/// Parses "Q", "GF(p)", "GF(q)", "GF(p^n)" or "GF(p^n;c0,...,cn)".
inline AnyField parse_field(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "Q" || s == "QQ") return QQ{};
  if (s.size() < 5 || s.rfind("GF(", 0) != 0 || s.back() != ')')
    throw ParseError("bad field spec '" + std::string(text) + "'");
  std::string body = s.substr(3, s.size() - 4);
  std::string head = body, coeffs;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    head = body.substr(0, semi);
    coeffs = body.substr(semi + 1);
  }
  long p = 0, n = 1;
  if (auto caret = head.find('^'); caret != std::string::npos) {
    p = detail::parse_long(head.substr(0, caret));
    n = detail::parse_long(head.substr(caret + 1));
  } else {
    p = detail::parse_long(head);
  }
  if (p < 2 || n < 1) throw ParseError("bad field spec '" + std::string(text) + "'");
  if (!detail::is_prime(static_cast<std::uint64_t>(p))) {
    if (!coeffs.empty()) throw DomainError("GF: " + std::to_string(p) + " is not prime");
    // GF(q) for a prime power q
    long base = 0, e = 0;
    for (long d = 2; d * d <= p && !base; ++d)
      if (p % d == 0) base = d;
    if (!base || !detail::is_prime(static_cast<std::uint64_t>(base)) || n != 1)
      throw DomainError("GF: " + std::to_string(p) + " is not a prime power");
    long x = p;
    while (x % base == 0) {
      x /= base;
      ++e;
    }
    if (x != 1) throw DomainError("GF: " + std::to_string(p) + " is not a prime power");
    p = base;
    n = e;
  }
  if (coeffs.empty()) return GF::with_order(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
  detail::Poly m;
  std::size_t start = 0;
  while (true) {
    auto comma = coeffs.find(',', start);
    long c = detail::parse_long(coeffs.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    m.push_back(static_cast<std::uint32_t>(((c % p) + p) % p));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<long>(m.size()) != n + 1)
    throw ParseError("modulus of GF(" + std::to_string(p) + "^" + std::to_string(n) + ") needs " +
                     std::to_string(n + 1) + " coefficients");
  if (n == 1) {
    if (m[1] == 0) throw DomainError("GF: modulus of degree 1 must have nonzero leading coefficient");
    return GF(static_cast<std::uint32_t>(p));
  }
  return GF(static_cast<std::uint32_t>(p), m);
}

// ---------------------------------------------------------------------------
// Field-generic helpers

template <class F>
typename F::Elem field_elem(const F& f, long v) {
  return f.from_int(v);
}

inline bool is_rational_square(const Rational& x) {
  if (x.sign() < 0) return false;
  return mpz_perfect_square_p(x.value().get_num_mpz_t()) && mpz_perfect_square_p(x.value().get_den_mpz_t());
}

/// True iff t^2 + alpha t + beta has no root in the field.
inline bool is_irreducible_quadratic(const GF& f, const GFElem& alpha, const GFElem& beta) {
  for (const auto& t : f.elements())
    if ((t * t + alpha * t + beta).is_zero()) return false;
  return true;
}

inline bool is_irreducible_quadratic(const QQ&, const Rational& alpha, const Rational& beta) {
  return !is_rational_square(alpha * alpha - Rational(4) * beta);
}

/// |F*/(F*)^k| computed from gcd(k, |F|-1).
inline std::uint64_t power_coset_index(const GF& f, std::uint64_t k) {
  if (k == 0) throw DomainError("power_coset_index: k must be positive");
  return std::gcd(k, f.order() - 1);
}

inline std::uint64_t power_coset_index(const QQ&, std::uint64_t) {
  throw DomainError("power_coset_index: Q is not finitely enumerable");
}

/// Count of cosets by listing the k-th powers.
inline std::uint64_t power_coset_index_enumerated(const GF& f, std::uint64_t k) {
  std::vector<bool> seen(f.order(), false);
  std::uint64_t powers = 0;
  for (const auto& x : f.elements()) {
    if (x.is_zero()) continue;
    auto y = x.pow(static_cast<long>(k));
    if (!seen[y.code()]) {
      seen[y.code()] = true;
      ++powers;
    }
  }
  return (f.order() - 1) / powers;
}

/// Some y with y^k = x, if one exists.
inline std::optional<GFElem> kth_root(const GF& f, const GFElem& x, long k) {
  for (const auto& y : f.elements())
    if (y.pow(k) == x) return y;
  return std::nullopt;
}

inline std::optional<Rational> kth_root(const QQ&, const Rational& x, long k) {
  if (k <= 0) throw DomainError("kth_root: k must be positive");
  mpz_class num = x.value().get_num(), den = x.value().get_den();
  bool negative = sgn(num) < 0;
  if (negative) {
    if (k % 2 == 0) return std::nullopt;
    num = -num;
  }
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k))) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k))) return std::nullopt;
  if (negative) rn = -rn;
  return Rational(mpq_class(rn, rd));
}

/// True iff s/r is a k-th power.
template <class F>
bool same_power_coset(const F& f, const typename F::Elem& r, const typename F::Elem& s, long k) {
  if (r.is_zero() || s.is_zero()) throw DomainError("same_power_coset: zero argument");
  return kth_root(f, s / r, k).has_value();
}

}  // namespace saa
