#include "monocat/serialize.hpp"

#include <limits>

#include "monocat/errors.hpp"

namespace monocat {

  namespace {

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    std::size_t size_field(Json const& j, char const* key) {
      auto const& v = field(j, key);
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0)) {
        throw ParseError(std::string("field \"") + key
                         + "\" must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    Json action_to_json(Action const& act) {
      Json out = Json::array();
      for (auto const& g : act.gens) {
        out.push_back(to_json(g));
      }
      return out;
    }

    Action action_from_json(Json const& j, Side side, Characteristic p) {
      if (!j.is_array()) {
        throw ParseError("action must be a list of matrices");
      }
      Action act{side, {}};
      for (auto const& g : j) {
        act.gens.push_back(matrix_from_json(g, p));
      }
      return act;
    }

    AlgebraPtr resolve_algebra(Json const& j, AlgebraPtr alg) {
      if (alg != nullptr && !j.contains("algebra")) {
        return alg;
      }
      AlgebraPtr loaded = algebra_from_json(field(j, "algebra"));
      if (alg == nullptr) {
        return loaded;
      }
      require_same_algebra(alg, loaded);
      return alg;
    }

    Side side_from_json(Json const& j) {
      auto s = j.get<std::string>();
      if (s == "right") {
        return Side::right;
      }
      if (s == "left") {
        return Side::left;
      }
      throw ParseError("side must be \"left\" or \"right\", got " + s);
    }

  }  // namespace

  Json to_json(Scalar const& s) {
    if (s.characteristic() != 0) {
      return s.residue();
    }
    mpq_class q = s.rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
      return q.get_num().get_si();
    }
    return q.get_str();
  }

  Scalar scalar_from_json(Json const& j, Characteristic p) {
    if (j.is_number_integer()) {
      return Scalar(j.get<long>(), p);
    }
    if (j.is_string()) {
      return Scalar::parse(j.get<std::string>(), p);
    }
    throw ParseError("scalar must be an integer or a string, got " + j.dump());
  }

  Json to_json(Matrix const& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) {
        row.push_back(to_json(m(i, k)));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  Matrix matrix_from_json(Json const& j, Characteristic p) {
    if (!j.is_array()) {
      throw ParseError("matrix must be a list of rows");
    }
    std::size_t const rows = j.size();
    std::size_t const cols = rows == 0 ? 0 : j[0].size();
    Matrix            m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!j[i].is_array() || j[i].size() != cols) {
        throw ParseError("matrix rows have unequal lengths");
      }
      for (std::size_t k = 0; k < cols; ++k) {
        m(i, k) = scalar_from_json(j[i][k], p);
      }
    }
    return m;
  }

  Json to_json(Algebra const& a) {
    std::size_t const n         = a.dim();
    Json              structure = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < n; ++k) {
        Json coords = Json::array();
        for (std::size_t l = 0; l < n; ++l) {
          coords.push_back(to_json(a.coefficient(i, k, l)));
        }
        row.push_back(std::move(coords));
      }
      structure.push_back(std::move(row));
    }
    Json unit = Json::array();
    for (std::size_t l = 0; l < n; ++l) {
      unit.push_back(to_json(a.unit()(l, 0)));
    }
    return Json{{"name", a.name()},
                {"characteristic", a.characteristic()},
                {"dim", n},
                {"structure", std::move(structure)},
                {"unit", std::move(unit)}};
  }

  AlgebraPtr algebra_from_json(Json const& j) {
    auto const p = field(j, "characteristic").get<Characteristic>();
    check_characteristic(p);
    std::size_t const n = size_field(j, "dim");
    auto const&       s = field(j, "structure");
    auto const&       u = field(j, "unit");
    if (!s.is_array() || s.size() != n || !u.is_array() || u.size() != n) {
      throw ParseError("algebra structure or unit has the wrong size");
    }
    Matrix mult(n, n * n, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (!s[i].is_array() || s[i].size() != n) {
        throw ParseError("algebra structure has the wrong size");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!s[i][k].is_array() || s[i][k].size() != n) {
          throw ParseError("algebra structure has the wrong size");
        }
        for (std::size_t l = 0; l < n; ++l) {
          mult(l, i * n + k) = scalar_from_json(s[i][k][l], p);
        }
      }
    }
    Matrix unit(n, 1, p);
    for (std::size_t l = 0; l < n; ++l) {
      unit(l, 0) = scalar_from_json(u[l], p);
    }
    std::string name = j.value("name", std::string("R"));
    return std::make_shared<Algebra const>(
        Algebra(std::move(name), std::move(mult), std::move(unit)));
  }

  Json to_json(Module const& m) {
    return Json{{"algebra", to_json(*m.algebra())},
                {"name", m.name()},
                {"dim", m.dim()},
                {"side", m.side() == Side::right ? "right" : "left"},
                {"action", action_to_json(m.action())}};
  }

  Module module_from_json(Json const& j, AlgebraPtr alg) {
    alg                 = resolve_algebra(j, std::move(alg));
    std::size_t const n = size_field(j, "dim");
    Side const        side
        = j.contains("side") ? side_from_json(j.at("side")) : Side::right;
    return Module(alg,
                  n,
                  action_from_json(field(j, "action"), side, alg->characteristic()),
                  j.value("name", std::string()));
  }

  Json to_json(Bimodule const& m) {
    return Json{{"algebra", to_json(*m.algebra())},
                {"name", m.name()},
                {"dim", m.dim()},
                {"left", action_to_json(m.left())},
                {"right", action_to_json(m.right())}};
  }

  Bimodule bimodule_from_json(Json const& j, AlgebraPtr alg) {
    alg                    = resolve_algebra(j, std::move(alg));
    std::size_t const    n = size_field(j, "dim");
    Characteristic const p = alg->characteristic();
    return Bimodule(alg,
                    n,
                    action_from_json(field(j, "left"), Side::left, p),
                    action_from_json(field(j, "right"), Side::right, p),
                    j.value("name", std::string()));
  }

}  // namespace monocat
