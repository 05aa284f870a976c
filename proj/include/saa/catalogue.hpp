// One instance per isomorphism class of every canonical family over a field, with invariants.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "saa/centre4.hpp"
#include "saa/structure.hpp"

namespace saa {

template <class F>
struct CatalogueRow {
  CanonicalForm<F> form;
  StructureReport report;
  std::string type;        // L3<Z, A, B, C for centre 4; "-" otherwise
  std::string constraint;  // condition on the parameters
};

/// Least-code representatives of F* / (F*)^k.
inline std::vector<GFElem> power_class_representatives(const GF& f, long k) {
  std::vector<GFElem> reps;
  for (const auto& r : f.elements()) {
    if (r.is_zero()) continue;
    if (coset_representative(f, r, k).first == r) reps.push_back(r);
  }
  return reps;
}

/// Canonical type C parameters over a finite field.
inline std::pair<GFElem, GFElem> type_c_representative(const GF& f) {
  for (const auto& a : f.elements())
    for (const auto& b : f.elements())
      if (is_irreducible_quadratic(f, a, b)) {
        auto form = canonicalize_centre4(family_algebra(f, Family::P4_4, {a, b})).first;
        return {form.params[0], form.params[1]};
      }
  throw InternalError("no irreducible quadratic over " + f.spec());
}

inline std::vector<CanonicalForm<GF>> family_instances(const GF& f, Family fam) {
  std::vector<CanonicalForm<GF>> out;
  if (fam == Family::P4_4) {
    auto [a, b] = type_c_representative(f);
    out.push_back({fam, {a, b}, {}});
  } else if (long k = power_exponent(fam)) {
    for (const auto& r : power_class_representatives(f, k)) out.push_back({fam, {r}, {}});
  } else {
    out.push_back({fam, {}, {}});
  }
  return out;
}

/// Over Q the scalar families have infinitely many classes; r = 1 stands for them.
inline std::vector<CanonicalForm<QQ>> family_instances(const QQ&, Family fam) {
  if (fam == Family::P4_4) return {{fam, {Rational(0), Rational(1)}, {}}};
  if (power_exponent(fam)) return {{fam, {Rational(1)}, {}}};
  return {{fam, {}, {}}};
}

inline std::string parameter_constraint(Family fam) {
  if (fam == Family::P4_4) return "t^2+alpha*t+beta irreducible";
  if (long k = power_exponent(fam)) return "r in F*/(F*)^" + std::to_string(k);
  return "-";
}

template <class F>
std::vector<CatalogueRow<F>> catalogue(const F& f) {
  std::vector<CatalogueRow<F>> rows;
  for (Family fam : all_families) {
    for (auto& form : family_instances(f, fam)) {
      auto alg = family_algebra(f, form);
      CatalogueRow<F> row{form, structure_report(alg), "-", parameter_constraint(fam)};
      if (family_centre_dim(fam) == 4)
        row.type = fam == Family::P4_1 ? "L3<Z" : c4_type_name(centre4_type(alg).tag);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string join_dims(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s;
}

template <class F>
std::string catalogue_tsv(const F& f, const std::vector<CatalogueRow<F>>& rows) {
  std::ostringstream out;
  out << "family\tparams\tcentre_dim\tclass\ttype\tlower_series\tupper_series\tconstraint\n";
  for (const auto& r : rows) {
    std::string params;
    for (std::size_t i = 0; i < r.form.params.size(); ++i) params += (i ? "," : "") + f.str(r.form.params[i]);
    out << family_name(r.form.family) << '\t' << (params.empty() ? "-" : params) << '\t' << r.report.centre_dim
        << '\t' << r.report.nil_class << '\t' << r.type << '\t' << join_dims(r.report.lower_dims) << '\t'
        << join_dims(r.report.upper_dims) << '\t' << r.constraint << '\n';
  }
  return out.str();
}

template <class F>
std::string catalogue_text(const F& f, const std::vector<CatalogueRow<F>>& rows) {
  std::ostringstream out;
  out << "canonical algebras over " << f.spec() << "\n";
  for (const auto& r : rows) {
    out << "  " << to_string(f, r.form) << "  centre " << r.report.centre_dim << ", class " << r.report.nil_class
        << ", type " << r.type << ", L^i dims " << join_dims(r.report.lower_dims);
    if (r.constraint != "-") out << "  [" << r.constraint << "]";
    out << "\n";
  }
  return out.str();
}

}  // namespace saa
