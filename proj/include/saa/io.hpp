// Text format for nilpotent presentations.
//
//   GF(5)
//   n=5
//   xyy 3 4 5 = 2
//   yyy 1 2 3 = 1
//
// Blank lines and lines starting with '#' are ignored after the header.
#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>

#include "saa/algebra.hpp"

namespace saa {

using AnyPresentation = std::variant<NilpotentPresentation<GF>, NilpotentPresentation<QQ>>;

namespace detail {

inline ParseError line_error(const std::string& source, std::size_t line, const std::string& what) {
  return ParseError(source + ":" + std::to_string(line) + ": " + what);
}

template <class F>
NilpotentPresentation<F> read_triples(const F& f, int n, std::istream& in, const std::string& source,
                                      std::size_t& lineno) {
  NilpotentPresentation<F> p(f, n);
  std::set<std::tuple<TripleKind, int, int, int>> seen;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw line_error(source, lineno, "expected '<xyy|yyy> i j k = <elem>'");
    std::istringstream head(t.substr(0, eq));
    std::string kind;
    int i = 0, j = 0, k = 0;
    std::string extra;
    if (!(head >> kind >> i >> j >> k) || (head >> extra))
      throw line_error(source, lineno, "expected '<xyy|yyy> i j k = <elem>'");
    if (kind != "xyy" && kind != "yyy") throw line_error(source, lineno, "unknown triple kind '" + kind + "'");
    try {
      auto v = f.parse(t.substr(eq + 1));
      TripleKind tk = kind == "xyy" ? TripleKind::XYY : TripleKind::YYY;
      if (!seen.emplace(tk, i, j, k).second) throw line_error(source, lineno, "triple given twice");
      p.set(tk, i, j, k, v);
    } catch (const ParseError& e) {
      if (std::string(e.what()).rfind(source + ":", 0) == 0) throw;
      throw line_error(source, lineno, e.what());
    } catch (const DomainError& e) {
      throw line_error(source, lineno, e.what());
    }
  }
  return p;
}

}  // namespace detail

inline AnyPresentation read_presentation(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t lineno = 0;
  auto next_header = [&](const char* what) {
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = detail::trim(line);
      if (!t.empty() && t[0] != '#') return t;
    }
    throw detail::line_error(source, lineno, std::string("missing ") + what);
  };
  std::string fs = next_header("field spec");
  AnyField field = [&] {
    try {
      return parse_field(fs);
    } catch (const std::exception& e) {
      throw detail::line_error(source, lineno, e.what());
    }
  }();
  std::string ns = next_header("'n=<int>'");
  int n = 0;
  {
    std::string s;
    for (char ch : ns)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.rfind("n=", 0) != 0) throw detail::line_error(source, lineno, "expected 'n=<int>'");
    try {
      n = static_cast<int>(detail::parse_long(s.substr(2)));
    } catch (const std::exception&) {
      throw detail::line_error(source, lineno, "expected 'n=<int>'");
    }
    if (n < 1 || n > 64) throw detail::line_error(source, lineno, "n out of range");
  }
  return std::visit(
      [&](const auto& f) -> AnyPresentation { return detail::read_triples(f, n, in, source, lineno); }, field);
}

inline AnyPresentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return read_presentation(in, path);
}

template <class F>
void write_presentation(std::ostream& out, const NilpotentPresentation<F>& p) {
  out << p.field.spec() << "\n" << "n=" << p.n << "\n";
  for (const auto& [key, v] : p.triples) {
    auto [kind, i, j, k] = key;
    out << (kind == TripleKind::XYY ? "xyy " : "yyy ") << i << " " << j << " " << k << " = " << p.field.str(v) << "\n";
  }
}

template <class F>
std::string presentation_text(const NilpotentPresentation<F>& p) {
  std::ostringstream s;
  write_presentation(s, p);
  return s.str();
}

}  // namespace saa
