#include "monocat/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "monocat/errors.hpp"

#ifndef MONOCAT_DEFAULT_FIXTURES
#define MONOCAT_DEFAULT_FIXTURES "fixtures"
#endif

namespace monocat {

  namespace {

    Json const& require(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("fixture: missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    Matrix element(Json const& j, std::size_t n, Characteristic p) {
      if (!j.is_array() || j.size() != n) {
        throw ParseError("fixture: algebra element needs " + std::to_string(n)
                         + " coordinates, got " + j.dump());
      }
      Matrix out(n, 1, p);
      for (std::size_t i = 0; i < n; ++i) {
        out(i, 0) = scalar_from_json(j[i], p);
      }
      return out;
    }

    Matrix unit_cube(Algebra const& alg) {
      Matrix const& u = alg.unit();
      return u.kron(u).kron(u);
    }

    // Quotient of the regular right module by the right ideal generated by
    // the given elements.
    Module regular_quotient(AlgebraPtr const& alg, std::vector<Matrix> const& gens) {
      Characteristic const p = alg->characteristic();
      std::size_t const    n = alg->dim();
      Module const         r = Module::right_regular(alg);
      if (gens.empty()) {
        return r;
      }
      std::vector<Matrix> blocks;
      for (auto const& g : gens) {
        blocks.push_back(alg->left_multiplication_by(g));
      }
      Matrix span   = Matrix::hstack(blocks, n, p);
      Module source = r;
      for (std::size_t i = 1; i < gens.size(); ++i) {
        source = direct_sum(source, r);
      }
      return cokernel(ModuleMap{source, r, span}).module;
    }

    Module parse_module(Json const&                  spec,
                        AlgebraPtr const&            alg,
                        Module const&                unit,
                        std::vector<Module> const&   known) {
      Characteristic const p = alg->characteristic();
      if (spec.is_string()) {
        auto s = spec.get<std::string>();
        if (s == "regular") {
          return Module::right_regular(alg);
        }
        if (s == "unit") {
          return unit;
        }
        if (s == "zero") {
          return Module::zero(alg);
        }
        throw ParseError("fixture: unknown module shorthand \"" + s + "\"");
      }
      if (spec.contains("line")) {
        Action act{Side::right, {}};
        for (auto const& v : spec.at("line")) {
          Matrix m(1, 1, p);
          m(0, 0) = scalar_from_json(v, p);
          act.gens.push_back(m);
        }
        return Module(alg, 1, std::move(act));
      }
      if (spec.contains("quotient")) {
        std::vector<Matrix> gens;
        for (auto const& g : spec.at("quotient")) {
          gens.push_back(element(g, alg->dim(), p));
        }
        return regular_quotient(alg, gens);
      }
      if (spec.contains("sum")) {
        std::vector<Module> parts;
        for (auto const& name : spec.at("sum")) {
          auto it = std::find_if(known.begin(), known.end(), [&](Module const& m) {
            return m.name() == name.get<std::string>();
          });
          if (it == known.end()) {
            throw ParseError("fixture: direct sum refers to unknown module "
                             + name.dump());
          }
          parts.push_back(*it);
        }
        if (parts.empty()) {
          return Module::zero(alg);
        }
        Module out = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) {
          out = direct_sum(out, parts[i]);
        }
        return out;
      }
      return module_from_json(spec, alg);
    }

    std::vector<long> parse_cocycle(Json const& j, std::size_t n) {
      if (!j.is_array() || j.size() != n * n * n) {
        throw ParseError("fixture: cocycle needs n³ = " + std::to_string(n * n * n)
                         + " entries");
      }
      std::vector<long> out;
      for (auto const& v : j) {
        out.push_back(v.get<long>());
      }
      return out;
    }

    std::size_t parse_group(Json const& j) {
      auto s = j.get<std::string>();
      if (s.rfind("Z/", 0) != 0) {
        throw ParseError("fixture: only cyclic groups Z/n are supported, got " + s);
      }
      try {
        long n = std::stol(s.substr(2));
        if (n < 1) {
          throw ParseError("fixture: group order must be positive");
        }
        return static_cast<std::size_t>(n);
      } catch (std::logic_error const&) {
        throw ParseError("fixture: cannot read group " + s);
      }
    }

    TensorPresentation parse_presentation(Json const& j, AlgebraPtr const& alg) {
      Characteristic const p = alg->characteristic();
      std::size_t const    n = alg->dim();
      TensorPresentation   data{
          alg,
          {},
          {},
          unit_cube(*alg),
          parse_module(require(j, "unit"), alg, Module::zero(alg), {}).renamed("I"),
          {},
          {}};

      auto const& rel = require(j, "relations");
      if (rel.is_string()) {
        if (rel.get<std::string>() != "diagonal") {
          throw ParseError("fixture: unknown relation shorthand " + rel.dump());
        }
        for (std::size_t a = 0; a < n; ++a) {
          data.relations.emplace_back(alg->basis_vector(a), alg->basis_vector(a));
        }
      } else {
        for (auto const& pair : rel) {
          if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("fixture: relations are pairs of elements");
          }
          data.relations.emplace_back(element(pair[0], n, p), element(pair[1], n, p));
        }
      }

      auto const& cop = require(j, "coproduct");
      if (cop.is_string()) {
        if (cop.get<std::string>() != "left") {
          throw ParseError("fixture: unknown coproduct shorthand " + cop.dump());
        }
        for (std::size_t b = 0; b < n; ++b) {
          data.coproduct.push_back(alg->basis_vector(b).kron(alg->unit().transpose()));
        }
      } else {
        for (auto const& m : cop) {
          data.coproduct.push_back(matrix_from_json(m, p));
        }
      }

      auto const& assoc = require(j, "associator");
      if (assoc.is_string()) {
        if (assoc.get<std::string>() != "trivial") {
          throw ParseError("fixture: unknown associator shorthand " + assoc.dump());
        }
        data.associator = unit_cube(*alg);
      } else {
        data.associator = element(assoc, n * n * n, p);
      }

      for (char const* key : {"left_unit", "right_unit"}) {
        auto const&          spec = require(j, key);
        std::vector<Matrix>& out
            = std::string(key) == "left_unit" ? data.left_unit : data.right_unit;
        if (spec.is_string()) {
          if (spec.get<std::string>() != "basis" || data.unit.dim() != n) {
            throw ParseError(std::string("fixture: shorthand \"basis\" for ") + key
                             + " needs the regular unit");
          }
          for (std::size_t k = 0; k < n; ++k) {
            out.push_back(alg->basis_vector(k));
          }
        } else {
          for (auto const& e : spec) {
            out.push_back(element(e, n, p));
          }
        }
      }
      return data;
    }

  }  // namespace

  Module const& WattsFixture::module(std::string const& name) const {
    for (auto const& m : modules) {
      if (m.name() == name) {
        return m;
      }
    }
    throw ParseError("fixture " + this->name + ": unknown module \"" + name + "\"");
  }

  std::vector<Module> WattsFixture::sample_modules() const {
    std::vector<Module> out;
    for (auto const& s : sample) {
      out.push_back(module(s));
    }
    return out;
  }

  TensorPresentation graded_presentation(std::size_t              n,
                                         Characteristic           p,
                                         std::vector<long> const& cocycle) {
    std::vector<std::vector<std::vector<long>>> table(
        n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
    for (std::size_t g = 0; g < n; ++g) {
      table[g][g][g] = 1;
    }
    auto alg = std::make_shared<Algebra const>(Algebra::from_table(
        "K^{Z/" + std::to_string(n) + "}", table, std::vector<long>(n, 1), p));

    Action unit_action{Side::right, {}};
    for (std::size_t g = 0; g < n; ++g) {
      unit_action.gens.push_back(Matrix::from_rows({{g == 0 ? 1 : 0}}, p));
    }
    TensorPresentation data{alg,
                            {},
                            {},
                            Matrix(n * n * n, 1, p),
                            Module(alg, 1, unit_action, "I"),
                            {alg->unit()},
                            {alg->unit()}};
    for (std::size_t g = 0; g < n; ++g) {
      Matrix d(n, n, p);
      for (std::size_t a = 0; a < n; ++a) {
        d(a, (g + n - a) % n) = Scalar::one(p);
      }
      data.coproduct.push_back(d);
    }
    for (std::size_t i = 0; i < n * n * n; ++i) {
      data.associator(i, 0) = Scalar(cocycle.at(i), p);
    }
    return data;
  }

  WattsFixture parse_watts_fixture(Json const& doc) {
    WattsFixture fx;
    fx.name        = require(doc, "name").get<std::string>();
    fx.description = doc.value("description", std::string());

    TensorPresentation data = [&] {
      if (doc.contains("graded")) {
        auto const&       g = doc.at("graded");
        std::size_t const n = parse_group(require(g, "group"));
        auto const        p = require(g, "characteristic").get<Characteristic>();
        check_characteristic(p);
        return graded_presentation(n, p, parse_cocycle(require(g, "cocycle"), n));
      }
      return parse_presentation(require(doc, "tensor"),
                                algebra_from_json(require(doc, "algebra")));
    }();
    AlgebraPtr alg = data.algebra;
    fx.tensor      = std::make_shared<PresentedTensor const>(fx.name, std::move(data));

    for (auto const& entry : require(doc, "modules")) {
      auto name = require(entry, "name").get<std::string>();
      Json spec = entry.contains("module") ? entry.at("module") : entry;
      fx.modules.push_back(
          parse_module(spec, alg, fx.tensor->unit(), fx.modules).renamed(name));
    }
    for (auto const& s : require(doc, "sample")) {
      fx.sample.push_back(s.get<std::string>());
      (void) fx.module(fx.sample.back());
    }

    Characteristic const p = alg->characteristic();
    for (auto const& s : doc.value("sequences", Json::array())) {
      ExactSequence seq;
      seq.name = require(s, "name").get<std::string>();
      seq.kind = require(s, "kind").get<std::string>();
      if (seq.kind != "short_exact" && seq.kind != "right_exact") {
        throw ParseError("fixture: sequence kind must be short_exact or right_exact");
      }
      auto const& objs = require(s, "objects");
      auto const& maps = require(s, "maps");
      if (objs.size() != 3 || maps.size() != 2) {
        throw ParseError("fixture: a sequence has three objects and two maps");
      }
      seq.a = objs[0].get<std::string>();
      seq.b = objs[1].get<std::string>();
      seq.c = objs[2].get<std::string>();
      seq.f = matrix_from_json(maps[0], p);
      seq.g = matrix_from_json(maps[1], p);
      ModuleMap f{fx.module(seq.a), fx.module(seq.b), seq.f};
      ModuleMap g{fx.module(seq.b), fx.module(seq.c), seq.g};
      if (!f.is_equivariant() || !g.is_equivariant()) {
        throw InvalidStructure("fixture: sequence " + seq.name
                               + " contains a map that is not R-linear");
      }
      fx.sequences.push_back(std::move(seq));
    }
    for (auto const& r : doc.value("rigid", Json::array())) {
      RigidDatum d;
      d.object = require(r, "object").get<std::string>();
      d.dual   = require(r, "dual").get<std::string>();
      d.ev     = matrix_from_json(require(r, "ev"), p);
      d.db     = matrix_from_json(require(r, "db"), p);
      (void) fx.module(d.object);
      (void) fx.module(d.dual);
      fx.rigid.push_back(std::move(d));
    }
    return fx;
  }

  Json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path.string());
    }
    try {
      return Json::parse(in);
    } catch (Json::exception const& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }

  WattsFixture load_watts_fixture(std::filesystem::path const& path) {
    Json doc = read_json_file(path);
    try {
      return parse_watts_fixture(doc);
    } catch (Json::exception const& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }

  std::filesystem::path fixture_directory() {
    if (char const* env = std::getenv("MONOCAT_FIXTURES"); env != nullptr && *env != 0) {
      return env;
    }
    return MONOCAT_DEFAULT_FIXTURES;
  }

}  // namespace monocat
