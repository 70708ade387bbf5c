#ifndef NLIE_SRC_JSON_IO_HPP
#define NLIE_SRC_JSON_IO_HPP

#include <json.hpp>

#include "nlie/algebra.hpp"

namespace nlie::detail {

using json = nlohmann::ordered_json;

json field_json(Field f);
Field field_from_json(const json& j);
json vector_json(std::span<const Scalar> v);
json subspace_json(const Subspace& s);
json tuple_json(const IndexTuple& t);  // 1-based
json algebra_json(const NLieAlgebra& l);

}  // namespace nlie::detail

#endif
