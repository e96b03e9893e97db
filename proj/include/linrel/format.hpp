#pragma once

#include <string>

#include "linrel/relation.hpp"

namespace linrel {

// Plain-text relation files, line oriented and diff friendly:
//
//   # comment
//   field gf 2        (or: field q)
//   dims 2 2
//   gen 1 0 1 0       (dom_dim + cod_dim scalars per generator row)
//
// '#' starts a comment, blank lines are ignored. Scalars are integers for
// prime fields, integers or a/b for the rationals.
LinearRelation parse_relation(const std::string& text);

// Canonical serialization: the RREF basis rows of the graph. Re-parsing
// yields an equal relation (bit-exact round trip of the canonical form).
std::string serialize_relation(const LinearRelation& r);

} // namespace linrel
