#pragma once

#include <string>

#include "forge/felem.hpp"

namespace forge {

/// Expression grammar shared by config files, CLI arguments and fixtures:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('-')* base ('^' integer)?
///   base   := rational | 'x'<k> | 't' | '(' expr ')'
/// Division by a Laurent element requires the divisor to be homogeneous.
FElem parse_felem(const Tower& tw, const std::string& text);

/// Same grammar restricted to K (no 't' allowed).
RatFunc parse_ratfunc(int nvars, const std::string& text);

}  // namespace forge
