#ifndef NLIE_FORMAT_HPP
#define NLIE_FORMAT_HPP

#include <string>
#include <string_view>

#include "nlie/algebra.hpp"

namespace nlie {

// nlie-v1 algebra documents:
//
//   {"format": "nlie-v1", "arity": 3, "dim": 4, "field": "Q" | {"p": 5},
//    "labels": ["x1", ...],                       (optional)
//    "brackets": [{"on": [1,2,3], "val": {"4": "1"}}, ...]}
//
// Indices are 1-based, "on" tuples strictly increasing and unique, and
// scalars are texts ("-3/2" over Q, integers over F_p). Omitted tuples and
// coordinates are zero.

NLieAlgebra parse_algebra(std::string_view text);
/// Canonical document: brackets in lexicographic order, zero coordinates
/// dropped, two-space indentation, trailing newline.
std::string serialize_algebra(const NLieAlgebra& l);

// nlie-subspace-v1 sidecar:
//
//   {"format": "nlie-subspace-v1", "dim": 4, "rows": [["1","0","0","1"], ...]}
//
// "dim" is the ambient dimension; rows use the algebra's field.

Subspace parse_subspace(std::string_view text, Field f);
std::string serialize_subspace(const Subspace& s);

/// "1,0,-1/2" -> vector over f of the given length.
Vector parse_vector(std::string_view text, Field f, std::size_t length);

std::string field_to_text(Field f);  // "Q" or "F_p"

}  // namespace nlie

#endif
