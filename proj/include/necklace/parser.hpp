#pragma once

#include <string>
#include <variant>

#include "necklace/path.hpp"

namespace necklace {

using ParsedElement = std::variant<PathAlgebraElement, NecklaceElement>;

// Grammar:
//   expr := term (('+'|'-') term)*
//   term := [rational '*'] atom
//   atom := path | 'cyc(' path ')' | 'e_' vertex
//   path := edgename ('.' edgename)*    (edge names may end in '*')
// An expression with any cyc(...) atom parses as a necklace element; bare
// nontrivial paths cannot be mixed into it.
ParsedElement parse_element(const std::string& src, const QuiverPtr& q);

PathAlgebraElement parse_path_element(const std::string& src, const QuiverPtr& q);
NecklaceElement parse_necklace(const std::string& src, const QuiverPtr& q);

std::string print_element(const PathAlgebraElement& x);
std::string print_element(const NecklaceElement& x);
std::string print_element(const ParsedElement& x);

}  // namespace necklace
