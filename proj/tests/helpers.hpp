#ifndef NLIE_TESTS_HELPERS_HPP
#define NLIE_TESTS_HELPERS_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nlie/catalog.hpp"

namespace nlie::test {

inline const Field Q = Field::rationals();

inline Vector vec(Field f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar::from_int(f, x));
  return v;
}

inline Subspace span_of(Field f, std::size_t m, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> vs;
  for (auto r : rows) vs.push_back(vec(f, r));
  return Subspace::span(f, m, vs);
}

// span{e_i : i in one_based}
inline Subspace coords(Field f, std::size_t m, std::initializer_list<int> one_based) {
  std::vector<Vector> vs;
  for (int i : one_based) vs.push_back(unit_vector(f, m, i - 1));
  return Subspace::span(f, m, vs);
}

inline NLieAlgebra build(const std::string& id, std::optional<int> dim = std::nullopt,
                         Field f = Field::rationals(), std::string alpha = "1") {
  CatalogParams p;
  p.dim = dim;
  p.field = f;
  p.alpha = std::move(alpha);
  return catalog_build(id, p);
}

inline NLieAlgebra table(const std::string& id, std::optional<int> dim = std::nullopt,
                         Field f = Field::rationals()) {
  CatalogParams p;
  p.dim = dim;
  p.field = f;
  return catalog_table(id, p);
}

}  // namespace nlie::test

#endif
