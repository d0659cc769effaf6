#pragma once

#include <string>

#include "crossnest/setpart.hpp"
#include "crossnest/walks.hpp"
#include "crossnest/young.hpp"

namespace crossnest {

// "21" for (2,1); "0" for the empty shape; "[11,3]" once a part needs
// two digits.
std::string format_shape(const Shape& s);
Shape parse_shape(const std::string& text);

// Comma-joined shapes, e.g. "0,0,1,1,11,1,1".
std::string format_walk(const TableauWalk& w);
TableauWalk parse_walk(WalkKind kind, const std::string& text);

// One row per line, entries space-separated; "(empty)" for the empty tableau.
std::string format_tableau(const StandardTableau& t);
// "[[1,7],[5]]"
std::string format_tableau_inline(const StandardTableau& t);

}  // namespace crossnest
