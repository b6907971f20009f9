#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "comvar/groebner.hpp"

namespace comvar {

// Ideal text format:
//
//   # comment
//   ring x1 y1 z1 x2 y2 z2
//   field p=32003            (q, p=<prime> or mod <prime>; default q)
//   order grevlex            (lex, grevlex or block:<k>; default grevlex)
//   closure radical          (optional: the intended ideal is the radical)
//   gens:
//   x1^2 + y1*z1
//   ...
//
// Blank lines and lines starting with '#' are ignored everywhere.

/// Throws ParseError with the file line and column of the problem.
IdealPresentation read_ideal(std::istream& in);
IdealPresentation read_ideal_text(std::string_view text);
IdealPresentation read_ideal_file(const std::string& path);

void write_ideal(std::ostream& out, const IdealPresentation& I);
std::string write_ideal_text(const IdealPresentation& I);

/// Same variables and generators over another field and order. Prime-field
/// coefficients move through their symmetric representatives.
IdealPresentation recast(const IdealPresentation& I, const FieldSpec& field,
                         const MonomialOrder& order);

}  // namespace comvar
