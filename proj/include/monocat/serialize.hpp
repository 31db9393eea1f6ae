#pragma once

#include <json.hpp>

#include "monocat/algebra.hpp"

namespace monocat {

  using Json = nlohmann::json;

  // Scalars serialize as integers when integral and as "n/d" strings
  // otherwise; residues mod p are integers in [0, p).
  Json   to_json(Scalar const& s);
  Scalar scalar_from_json(Json const& j, Characteristic p);

  // Matrices serialize as a list of rows.
  Json   to_json(Matrix const& m);
  Matrix matrix_from_json(Json const& j, Characteristic p);

  // {"name", "characteristic", "dim", "structure", "unit"}, where
  // structure[i][j] lists the coordinates of e_i e_j.
  Json       to_json(Algebra const& a);
  AlgebraPtr algebra_from_json(Json const& j);

  // {"algebra", "name", "dim", "side", "action"}; action[i] is the matrix
  // of e_i.  An already-loaded algebra may be supplied to share it.
  Json   to_json(Module const& m);
  Module module_from_json(Json const& j, AlgebraPtr alg = nullptr);

  // {"algebra", "name", "dim", "left", "right"}.
  Json     to_json(Bimodule const& m);
  Bimodule bimodule_from_json(Json const& j, AlgebraPtr alg = nullptr);

}  // namespace monocat
