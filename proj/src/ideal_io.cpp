#include "comvar/ideal_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "comvar/errors.hpp"

namespace comvar {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t column_of(const std::string& line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.data()) + 1;
}

}  // namespace

IdealPresentation read_ideal(std::istream& in) {
  std::optional<std::vector<std::string>> names;
  FieldSpec field = FieldSpec::rationals();
  MonomialOrder order = MonomialOrder::grevlex();
  bool radical = false;
  bool in_gens = false;
  std::optional<Ring> ring;
  std::vector<Polynomial> gens;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    if (in_gens) {
      try {
        gens.push_back(parse_polynomial(*ring, body));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), lineno, column_of(line, body) + e.column() - 1);
      }
      continue;
    }

    auto space = body.find_first_of(" \t");
    std::string_view key = body.substr(0, space);
    std::string_view value = space == std::string_view::npos ? "" : trim(body.substr(space));
    const std::size_t value_col = value.empty() ? column_of(line, body) : column_of(line, value);

    if (key == "gens:") {
      if (!names) throw ParseError("'gens:' before 'ring'", lineno, column_of(line, body));
      try {
        ring = make_ring(*names, field, order);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, column_of(line, body));
      }
      in_gens = true;
    } else if (key == "ring") {
      std::vector<std::string> vs;
      std::istringstream ss{std::string(value)};
      for (std::string v; ss >> v;) vs.push_back(v);
      if (vs.empty()) throw ParseError("ring needs at least one variable", lineno, value_col);
      names = std::move(vs);
    } else if (key == "field") {
      try {
        field = FieldSpec::parse(value);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, value_col);
      }
    } else if (key == "order") {
      try {
        order = MonomialOrder::parse(value);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, value_col);
      }
    } else if (key == "closure") {
      if (value != "radical") throw ParseError("expected 'closure radical'", lineno, value_col);
      radical = true;
    } else {
      throw ParseError("unknown header '" + std::string(key) + "'", lineno, column_of(line, body));
    }
  }
  if (!in_gens) throw ParseError("missing 'gens:' section", lineno + 1, 1);
  return IdealPresentation(*ring, std::move(gens), radical);
}

IdealPresentation read_ideal_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_ideal(in);
}

IdealPresentation read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_ideal(in);
}

void write_ideal(std::ostream& out, const IdealPresentation& I) {
  out << "ring";
  for (const auto& n : I.ring.names()) out << ' ' << n;
  out << "\nfield " << I.ring.field().to_string() << "\norder " << I.ring.order().to_string()
      << '\n';
  if (I.radical_closure) out << "closure radical\n";
  out << "gens:\n";
  for (const auto& g : I.generators) out << g.to_string() << '\n';
}

std::string write_ideal_text(const IdealPresentation& I) {
  std::ostringstream out;
  write_ideal(out, I);
  return out.str();
}

IdealPresentation recast(const IdealPresentation& I, const FieldSpec& field,
                         const MonomialOrder& order) {
  Ring ring = make_ring(I.ring.names(), field, order);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) {
    std::vector<Term> terms(g.terms().begin(), g.terms().end());
    for (auto& t : terms) t.coeff = I.ring.field().display_value(t.coeff);
    gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return IdealPresentation(ring, std::move(gens), I.radical_closure);
}

}  // namespace comvar
