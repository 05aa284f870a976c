// saa: command-line front end for the classification library.
#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "saa/catalogue.hpp"
#include "saa/classify.hpp"
#include "saa/equivalence.hpp"
#include "saa/io.hpp"
#include "saa/structure.hpp"
#include "saa/symplectic.hpp"

namespace {

using namespace saa;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> fields;
  std::vector<std::string> files;
  std::string family;
  std::vector<std::string> params;
  std::string format = "text";
  std::uint64_t seed = 0;
  int count = 20;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

Family require_family(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  auto fam = parse_family(o.family);
  if (!fam || *fam == Family::OutOfScope) throw UsageError("unknown family '" + o.family + "'");
  return *fam;
}

AnyField require_one_field(const Options& o) {
  if (o.fields.size() != 1) throw UsageError("exactly one --field is required");
  try {
    return parse_field(o.fields[0]);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

template <class F>
std::vector<typename F::Elem> parse_params(const F& f, const std::string& text) {
  std::vector<typename F::Elem> out;
  if (text.empty()) return out;
  for (const auto& s : split_commas(text)) {
    try {
      out.push_back(f.parse(s));
    } catch (const ParseError& e) {
      throw UsageError(std::string("--params: ") + e.what());
    }
  }
  return out;
}

void check_arity(Family fam, std::size_t given) {
  if (given != family_arity(fam))
    throw UsageError(family_name(fam) + " takes " + std::to_string(family_arity(fam)) + " parameter(s), got " +
                     std::to_string(given));
}

template <class F>
void print_matrix(std::ostream& out, const F& f, const Matrix<typename F::Elem>& m) {
  for (const auto& row : m) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "  ") << f.str(row[i]);
    out << "\n";
  }
}

template <class F>
std::string params_str(const F& f, const std::vector<typename F::Elem>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + f.str(p[i]);
  return s.empty() ? "-" : s;
}

/// The single algebra named by --file, or by --family/--field/--params.
struct Loaded {
  std::variant<Algebra<GF>, Algebra<QQ>> alg;
  std::string label;
};

Loaded load_one(const Options& o) {
  if (!o.files.empty()) {
    if (o.files.size() != 1 || !o.family.empty()) throw UsageError("give one --file, or --family with --field");
    auto p = read_presentation_file(o.files[0]);
    if (!o.fields.empty()) {
      AnyField given = require_one_field(o);
      bool same = std::visit(
          [&](const auto& f, const auto& pr) {
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, std::decay_t<decltype(pr.field)>>)
              return f == pr.field;
            else
              return false;
          },
          given, p);
      if (!same) throw UsageError("--field does not match the field of " + o.files[0]);
    }
    return std::visit([&](const auto& pr) { return Loaded{expand(pr), o.files[0]}; }, p);
  }
  Family fam = require_family(o);
  AnyField field = require_one_field(o);
  if (o.params.size() > 1) throw UsageError("give at most one --params");
  std::string ptext = o.params.empty() ? "" : o.params[0];
  return std::visit(
      [&](const auto& f) {
        auto ps = parse_params(f, ptext);
        check_arity(fam, ps.size());
        return Loaded{family_algebra(f, fam, ps), family_name(fam) + (ps.empty() ? "" : "(" + params_str(f, ps) + ")")};
      },
      field);
}

int cmd_verify(const Options& o) {
  auto l = load_one(o);
  return std::visit(
      [&](const auto& alg) {
        auto r = verify_axioms(alg);
        if (o.format == "tsv")
          std::cout << l.label << '\t' << (r.ok ? "pass" : "fail") << '\t' << (r.ok ? "-" : r.failure) << "\n";
        else
          std::cout << (r.ok ? "pass" : "fail: " + r.failure) << "\n";
        return r.ok ? 0 : 1;
      },
      l.alg);
}

int cmd_report(const Options& o) {
  auto l = load_one(o);
  std::visit(
      [&](const auto& alg) {
        auto r = structure_report(alg);
        if (o.format == "tsv") {
          std::cout << "algebra\tnilpotent\tclass\tcentre_dim\tcentre_isotropic\tlower_series\tupper_series\n";
          std::cout << l.label << '\t' << r.nilpotent << '\t' << r.nil_class << '\t' << r.centre_dim << '\t'
                    << r.centre_isotropic << '\t' << join_dims(r.lower_dims) << '\t' << join_dims(r.upper_dims) << "\n";
          return;
        }
        std::cout << "algebra           " << l.label << "\n";
        std::cout << "nilpotent         " << (r.nilpotent ? "yes" : "no") << "\n";
        if (r.nilpotent) std::cout << "class             " << r.nil_class << "\n";
        std::cout << "centre dim        " << r.centre_dim << (r.centre_isotropic ? " (isotropic)" : " (not isotropic)")
                  << "\n";
        std::cout << "lower series      " << join_dims(r.lower_dims) << "\n";
        std::cout << "upper series      " << join_dims(r.upper_dims) << "\n";
        std::cout << "Z_i = (L^(i+1))^perp  " << (r.perp_duality ? "yes" : "no") << "\n";
      },
      l.alg);
  return 0;
}

int cmd_classify(const Options& o) {
  auto l = load_one(o);
  std::visit(
      [&](const auto& alg) {
        const auto& f = alg.field();
        auto c = canonicalize(alg);
        if (o.format == "tsv") {
          std::cout << l.label << '\t' << to_string(f, c.form) << "\n";
          return;
        }
        std::cout << to_string(f, c.form) << "\n";
        if (!c.witness.empty()) {
          std::cout << "witness (rows: new basis x1,y1,...,x5,y5 in old coordinates)\n";
          print_matrix(std::cout, f, c.witness);
        }
      },
      l.alg);
  return 0;
}

template <class F>
EquivDecision<F> decide(const F& f, const Algebra<F>& a, const Algebra<F>& b) {
  return equiv_forms(f, canonicalize(a).form, canonicalize(b).form);
}

template <class F>
void print_decision(const F& f, const EquivDecision<F>& d, const std::string& format) {
  std::string extra;
  if (d.sl2) extra = "sl2=(" + params_str(f, std::vector<typename F::Elem>(d.sl2->begin(), d.sl2->end())) + ")";
  if (d.root) extra = "root=" + f.str(*d.root);
  if (format == "tsv")
    std::cout << verdict_name(d.verdict) << '\t' << d.criterion << '\t' << (extra.empty() ? "-" : extra) << "\n";
  else
    std::cout << verdict_name(d.verdict) << " (" << d.criterion << ")" << (extra.empty() ? "" : " " + extra) << "\n";
}

int cmd_iso(const Options& o) {
  if (!o.files.empty()) {
    if (o.files.size() != 2 || !o.family.empty()) throw UsageError("iso takes exactly two --file arguments");
    auto pa = read_presentation_file(o.files[0]), pb = read_presentation_file(o.files[1]);
    if (pa.index() != pb.index()) throw DomainError("the two presentations are over different fields");
    return std::visit(
        [&](const auto& a) {
          using P = std::decay_t<decltype(a)>;
          const auto& b = std::get<P>(pb);
          if (!(a.field == b.field)) throw DomainError("the two presentations are over different fields");
          auto d = decide(a.field, expand(a), expand(b));
          print_decision(a.field, d, o.format);
          return d.verdict == Verdict::Undecided ? 1 : 0;
        },
        pa);
  }
  Family fam = require_family(o);
  AnyField field = require_one_field(o);
  if (o.params.size() != 2) throw UsageError("iso with --family needs two --params");
  return std::visit(
      [&](const auto& f) {
        auto pa = parse_params(f, o.params[0]), pb = parse_params(f, o.params[1]);
        check_arity(fam, pa.size());
        check_arity(fam, pb.size());
        auto a = family_algebra(f, fam, pa);
        auto b = family_algebra(f, fam, pb);
        auto d = decide(f, a, b);
        print_decision(f, d, o.format);
        return d.verdict == Verdict::Undecided ? 1 : 0;
      },
      field);
}

int cmd_count(const Options& o) {
  Family fam = require_family(o);
  if (o.fields.empty()) throw UsageError("count needs at least one --field");
  std::vector<GF> fields;
  for (const auto& s : o.fields) {
    AnyField f = [&] {
      try {
        return parse_field(s);
      } catch (const std::exception& e) {
        throw UsageError(std::string("--field: ") + e.what());
      }
    }();
    if (!std::holds_alternative<GF>(f)) throw DomainError("count: " + s + " is not a finite field");
    fields.push_back(std::get<GF>(f));
  }
  if (fields.size() == 1 && o.format == "text") {
    std::cout << count_classes(fam, fields[0]) << "\n";
    return 0;
  }
  if (o.format == "tsv") std::cout << "field\tfamily\tclasses\n";
  for (const auto& f : fields) {
    auto n = count_classes(fam, f);
    if (o.format == "tsv")
      std::cout << f.spec() << '\t' << family_name(fam) << '\t' << n << "\n";
    else
      std::cout << f.spec() << "  " << n << "\n";
  }
  return 0;
}

int cmd_catalogue(const Options& o) {
  AnyField field = require_one_field(o);
  std::visit(
      [&](const auto& f) {
        auto rows = catalogue(f);
        std::cout << (o.format == "tsv" ? catalogue_tsv(f, rows) : catalogue_text(f, rows));
      },
      field);
  return 0;
}

int cmd_scramble(const Options& o) {
  auto l = load_one(o);
  return std::visit(
      [&](const auto& alg) {
        const auto& f = alg.field();
        auto base = canonicalize(alg);
        if (base.form.family == Family::OutOfScope) throw DomainError("algebra is out of scope");
        int failures = 0;
        for (int i = 0; i < o.count; ++i) {
          std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(i));
          auto scrambled = scramble(alg, rng, f.finite() ? 24 : 6).first;
          auto c = canonicalize(scrambled);
          bool transported = as_presentation(scrambled.transform(c.witness)) ==
                             std::optional(family_presentation(f, c.form.family, c.form.params));
          auto d = equiv_forms(f, base.form, c.form);
          bool ok = transported && d.verdict == Verdict::Equal;
          failures += ok ? 0 : 1;
          std::cout << "seed " << o.seed + static_cast<std::uint64_t>(i) << "  " << to_string(f, c.form) << "  "
                    << (ok ? "ok" : "FAIL") << "\n";
        }
        std::cout << (failures ? "failures: " + std::to_string(failures) : std::string("all ok")) << "\n";
        return failures ? 1 : 0;
      },
      l.alg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent symplectic alternating algebras of dimension 10"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool many_fields, bool params) {
    sub->add_option("--field", o.fields, "field: Q, GF(p), GF(q), GF(p^n;c0,...,cn)")->expected(many_fields ? -1 : 1);
    sub->add_option("--file", o.files, "presentation file");
    sub->add_option("--family", o.family, "family tag, e.g. P2_4");
    if (params) sub->add_option("--params", o.params, "comma-separated parameters");
    sub->add_option("--format", o.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
  };
  auto* verify = app.add_subcommand("verify", "check the SAA axioms");
  auto* report = app.add_subcommand("report", "central series and centre");
  auto* classify = app.add_subcommand("classify", "canonical form and witness");
  auto* iso = app.add_subcommand("iso", "decide isomorphism of two algebras");
  auto* count = app.add_subcommand("count", "isomorphism classes of a family over finite fields");
  auto* cat = app.add_subcommand("catalogue", "all canonical algebras over a field");
  auto* rt = app.add_subcommand("scramble-roundtrip", "classify random symplectic scrambles");
  for (auto* s : {verify, report, classify, rt}) add_common(s, false, true);
  add_common(iso, false, true);
  add_common(count, true, false);
  add_common(cat, false, false);
  rt->add_option("--seed", o.seed, "first seed");
  rt->add_option("--count", o.count, "number of scrambles")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (verify->parsed()) return cmd_verify(o);
    if (report->parsed()) return cmd_report(o);
    if (classify->parsed()) return cmd_classify(o);
    if (iso->parsed()) return cmd_iso(o);
    if (count->parsed()) return cmd_count(o);
    if (cat->parsed()) return cmd_catalogue(o);
    if (rt->parsed()) return cmd_scramble(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
