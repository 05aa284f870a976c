// Classification entry point for nilpotent SAAs of dimension 10.
#pragma once

#include <string>
#include <utility>

#include "saa/centre2.hpp"
#include "saa/centre4.hpp"

namespace saa {

template <class F>
struct Classification {
  CanonicalForm<F> form;
  Matrix<typename F::Elem> witness;  // rows: the new standard basis; empty when out of scope
};

/// Canonical form of `alg` with a symplectic basis change onto the canonical table.
/// Non-isotropic centres and centres of dimension other than 2 or 4 are reported out of scope.
template <class F>
Classification<F> canonicalize(const Algebra<F>& alg) {
  if (alg.dim() != 10) throw DomainError("canonicalize: dimension must be 10, got " + std::to_string(alg.dim()));
  auto axioms = verify_axioms(alg);
  if (!axioms.ok) throw DomainError("canonicalize: not a symplectic alternating algebra: " + axioms.failure);
  auto lower = lower_central_series(alg);
  if (!lower.back().is_zero()) throw DomainError("canonicalize: algebra is not nilpotent");
  auto z = centre(alg);
  Classification<F> out;
  const bool isotropic = is_isotropic(z, alg.gram());
  if (!isotropic || (z.dim() != 2 && z.dim() != 4)) {
    out.form.family = Family::OutOfScope;
    out.form.reason = std::string("handled in prior work: ") + (isotropic ? "isotropic" : "non-isotropic") + " centre of dimension " +
                      std::to_string(z.dim());
    return out;
  }
  if (z.dim() == 4) {
    std::tie(out.form, out.witness) = canonicalize_centre4(alg);
    return out;
  }
  auto r = canonicalize_centre2(alg);
  if (!r) throw InternalError("centre 2: class " + std::to_string(lower.size() - 1) + " outside 6..7");
  std::tie(out.form, out.witness) = *r;
  return out;
}

}  // namespace saa
