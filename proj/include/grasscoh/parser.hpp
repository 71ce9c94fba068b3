#pragma once

#include <string_view>

#include "grasscoh/bundle.hpp"

namespace grasscoh {

/// Parses an ASCII bundle expression.
///
///   expr    := term ('+' term)*
///   term    := factor ('*' factor)*
///   factor  := prefix* primary twist*
///   prefix  := 'Sym^' INT | 'Wedge^' INT
///   primary := INT | 'O' | 'Q' | 'S' | 'Sd' | 'dual' '(' expr ')'
///            | 'W' '(' INT ',' INT ';' INT ',' INT ',' INT ')' | '(' expr ')'
///   twist   := '(' INT ')'
///
/// Prefix operators apply to the primary before any trailing twist, so
/// `Sym^2 Q(-3)` is (Sym^2 Q)(-3). An integer n denotes n copies of O, which
/// makes `5*O(-1)` five copies of O(-1). `W(a1,a2;b1,b2,b3)` names an
/// arbitrary irreducible weight. Whitespace is ignored.
BundleExpr parse_bundle(std::string_view text);

}  // namespace grasscoh
