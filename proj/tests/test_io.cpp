#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "saa/catalogue.hpp"
#include "saa/io.hpp"

using namespace saa;

namespace {

AnyPresentation parse(const std::string& text) {
  std::istringstream in(text);
  return read_presentation(in, "mem");
}

std::string parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("reading a presentation") {
  auto any = parse("# P2_2 with r = 2\nGF(5)\nn=5\n\nxyy 3 4 5 = 2\nxyy 2 3 5 = 1\nxyy 1 3 4 = 1  \nyyy 1 2 3 = 1\n");
  auto& p = std::get<NilpotentPresentation<GF>>(any);
  GF f(5);
  CHECK(p == family_presentation(f, Family::P2_2, {f.from_int(2)}));

  auto q = std::get<NilpotentPresentation<QQ>>(parse("Q\n n = 5 \nyyy 1 2 3 = -3/4\n"));
  CHECK(q.get(TripleKind::YYY, 1, 2, 3) == Rational(-3, 4));
  CHECK(q.triples.size() == 1);

  auto e = std::get<NilpotentPresentation<GF>>(parse("GF(9)\nn=5\nxyy 1 2 3 = 1+2*t\n"));
  CHECK(e.field.order() == 9);
}

TEST_CASE("write then read is the identity") {
  GF f = GF::with_order(2, 3);
  for (Family fam : all_families) {
    std::vector<GFElem> ps;
    if (fam == Family::P4_4) ps = {f.one(), f.one()};
    else if (power_exponent(fam)) ps = {f.gen()};
    if (fam == Family::P4_4) REQUIRE(is_irreducible_quadratic(f, ps[0], ps[1]));
    auto p = family_presentation(f, fam, ps);
    auto back = std::get<NilpotentPresentation<GF>>(parse(presentation_text(p)));
    CHECK(back == p);
    CHECK(back.field == f);
  }
  QQ q;
  auto p = family_presentation(q, Family::P2_6, {Rational(-5, 3)});
  CHECK(std::get<NilpotentPresentation<QQ>>(parse(presentation_text(p))) == p);
}

TEST_CASE("parse errors name the line") {
  CHECK(parse_error("GF(5)\nn=5\nxyy 1 2 = 1\n") == "mem:3: expected '<xyy|yyy> i j k = <elem>'");
  CHECK(parse_error("GF(5)\nn=5\n# c\nzzz 1 2 3 = 1\n") == "mem:4: unknown triple kind 'zzz'");
  CHECK(parse_error("GF(5)\nn=5\nxyy 1 2 3 = 1\nxyy 1 2 3 = 2\n") == "mem:4: triple given twice");
  CHECK(parse_error("GF(5)\nn=5\nyyy 1 2 3 = 0\nyyy 1 2 3 = 1\n") == "mem:4: triple given twice");
  CHECK(parse_error("GF(5)\nn=5\nxyy 3 2 1 = 1\n").rfind("mem:3: triple indices", 0) == 0);
  CHECK(parse_error("GF(5)\nn=5\nxyy 1 2 3 = t\n").rfind("mem:3:", 0) == 0);
  CHECK(parse_error("GF(6)\nn=5\n").rfind("mem:1:", 0) == 0);
  CHECK(parse_error("GF(5)\nm=5\n") == "mem:2: expected 'n=<int>'");
  CHECK(parse_error("GF(5)\n") == "mem:1: missing 'n=<int>'");
  CHECK_THROWS_WITH(read_presentation_file("/nonexistent/x.saa"), Catch::Matchers::ContainsSubstring("cannot open file"));
}

TEST_CASE("catalogue rows") {
  GF f(5);
  auto rows = catalogue(f);
  std::size_t p22 = 0;
  for (const auto& r : rows) {
    if (r.form.family == Family::P2_2) ++p22;
    if (r.form.family == Family::P4_3) CHECK(r.type == "B");
    if (r.form.family == Family::P4_1) CHECK(r.type == "L3<Z");
    if (family_centre_dim(r.form.family) == 2) CHECK(r.type == "-");
    CHECK(r.report.centre_dim == family_centre_dim(r.form.family));
  }
  CHECK(p22 == power_coset_index(f, 4));

  auto tsv = catalogue_tsv(f, rows);
  CHECK(tsv.rfind("family\tparams\tcentre_dim\tclass\ttype\tlower_series\tupper_series\tconstraint\n", 0) == 0);
  CHECK(tsv == catalogue_tsv(f, catalogue(f)));
  CHECK(tsv.find("P2_4\t1\t2\t7\t-\t10,8,7,6,4,3,2,0\t") != std::string::npos);
  CHECK(catalogue(QQ{}).size() == all_families.size());
}
