// The eleven canonical presentation families in dimension 10.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saa/algebra.hpp"

namespace saa {

enum class Family { P4_1, P4_2, P4_3, P4_4, P2_1, P2_2, P2_3, P2_4, P2_5, P2_6, P2_7, OutOfScope };

inline constexpr std::array<Family, 11> all_families{Family::P4_1, Family::P4_2, Family::P4_3, Family::P4_4,
                                                     Family::P2_1, Family::P2_2, Family::P2_3, Family::P2_4,
                                                     Family::P2_5, Family::P2_6, Family::P2_7};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::P4_1: return "P4_1";
    case Family::P4_2: return "P4_2";
    case Family::P4_3: return "P4_3";
    case Family::P4_4: return "P4_4";
    case Family::P2_1: return "P2_1";
    case Family::P2_2: return "P2_2";
    case Family::P2_3: return "P2_3";
    case Family::P2_4: return "P2_4";
    case Family::P2_5: return "P2_5";
    case Family::P2_6: return "P2_6";
    case Family::P2_7: return "P2_7";
    case Family::OutOfScope: return "OutOfScope";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : all_families)
    if (family_name(f) == s) return f;
  return std::nullopt;
}

/// Number of field parameters carried by the family.
inline std::size_t family_arity(Family f) {
  switch (f) {
    case Family::P4_4: return 2;
    case Family::P2_2:
    case Family::P2_4:
    case Family::P2_5:
    case Family::P2_6: return 1;
    default: return 0;
  }
}

inline std::size_t family_centre_dim(Family f) {
  switch (f) {
    case Family::P4_1:
    case Family::P4_2:
    case Family::P4_3:
    case Family::P4_4: return 4;
    default: return 2;
  }
}

/// k with P(r) ~ P(s) iff s/r is a k-th power; 0 for families without a scalar parameter.
inline long power_exponent(Family f) {
  switch (f) {
    case Family::P2_2: return 4;
    case Family::P2_4: return 11;
    case Family::P2_5: return 3;
    case Family::P2_6: return 12;
    default: return 0;
  }
}

template <class F>
struct CanonicalForm {
  using E = typename F::Elem;
  Family family = Family::OutOfScope;
  std::vector<E> params;
  std::string reason;  // OutOfScope only

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.family == b.family && a.params == b.params;
  }
};

template <class F>
std::string to_string(const F& f, const CanonicalForm<F>& c) {
  if (c.family == Family::OutOfScope) return "OutOfScope(" + c.reason + ")";
  std::string s = family_name(c.family);
  if (!c.params.empty()) {
    s += "(";
    for (std::size_t i = 0; i < c.params.size(); ++i) {
      if (i) s += ",";
      s += f.str(c.params[i]);
    }
    s += ")";
  }
  return s;
}

/// Throws DomainError when the parameters are invalid over the field.
template <class F>
void check_family_params(const F& f, Family fam, const std::vector<typename F::Elem>& params) {
  if (fam == Family::OutOfScope) throw DomainError("no presentation for OutOfScope");
  if (params.size() != family_arity(fam))
    throw DomainError(family_name(fam) + " takes " + std::to_string(family_arity(fam)) + " parameter(s)");
  if (fam == Family::P4_4) {
    if (!is_irreducible_quadratic(f, params[0], params[1]))
      throw DomainError("P4_4(" + f.str(params[0]) + "," + f.str(params[1]) +
                        "): t^2+alpha*t+beta is reducible over " + f.spec());
  } else if (!params.empty() && params[0].is_zero()) {
    throw DomainError(family_name(fam) + ": parameter must be nonzero");
  }
}

template <class F>
NilpotentPresentation<F> family_presentation(const F& f, Family fam, const std::vector<typename F::Elem>& params) {
  check_family_params(f, fam, params);
  NilpotentPresentation<F> p(f, 5);
  const auto one = f.one();
  switch (fam) {
    case Family::P4_1:
      p.yyy(2, 3, 4, one);
      p.yyy(1, 4, 5, one);
      p.xyy(1, 3, 5, one);
      break;
    case Family::P4_2:
      p.xyy(1, 2, 3, one);
      p.yyy(1, 4, 5, one);
      break;
    case Family::P4_3:
      p.xyy(1, 2, 3, one);
      p.yyy(1, 2, 4, one);
      p.yyy(1, 3, 5, one);
      break;
    case Family::P4_4:
      p.xyy(1, 2, 3, one);
      p.xyy(1, 3, 4, params[0]);
      p.xyy(1, 4, 5, params[1]);
      p.yyy(1, 2, 5, one);
      p.yyy(1, 3, 4, one);
      break;
    case Family::P2_1:
      p.xyy(3, 4, 5, one);
      p.xyy(2, 3, 5, one);
      p.xyy(1, 3, 4, one);
      p.yyy(1, 2, 5, one);
      break;
    case Family::P2_2:
      p.xyy(3, 4, 5, params[0]);
      p.xyy(2, 3, 5, one);
      p.xyy(1, 3, 4, one);
      p.yyy(1, 2, 3, one);
      break;
    case Family::P2_3:
      p.xyy(3, 4, 5, one);
      p.xyy(2, 3, 5, one);
      p.xyy(1, 2, 5, one);
      p.yyy(1, 2, 4, one);
      break;
    case Family::P2_4:
      p.xyy(3, 4, 5, params[0]);
      p.xyy(2, 3, 5, one);
      p.xyy(1, 2, 5, one);
      p.xyy(1, 3, 4, one);
      p.yyy(1, 2, 4, one);
      break;
    case Family::P2_5:
      p.xyy(2, 3, 5, params[0]);
      p.xyy(3, 4, 5, one);
      p.xyy(1, 2, 5, one);
      p.yyy(1, 2, 3, one);
      break;
    case Family::P2_6:
      p.xyy(2, 3, 5, params[0]);
      p.xyy(3, 4, 5, one);
      p.xyy(1, 2, 5, one);
      p.xyy(1, 3, 4, one);
      p.yyy(1, 2, 3, one);
      break;
    case Family::P2_7:
      p.xyy(2, 3, 5, one);
      p.xyy(3, 4, 5, one);
      p.xyy(1, 2, 4, one);
      p.yyy(1, 2, 3, one);
      break;
    case Family::OutOfScope: break;
  }
  return p;
}

template <class F>
Algebra<F> family_algebra(const F& f, Family fam, const std::vector<typename F::Elem>& params) {
  return expand(family_presentation(f, fam, params));
}

template <class F>
Algebra<F> family_algebra(const F& f, const CanonicalForm<F>& c) {
  return family_algebra(f, c.family, c.params);
}

}  // namespace saa
