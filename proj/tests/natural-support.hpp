#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "monocat/algebra.hpp"
#include "test-helpers.hpp"

namespace monocat::testing {

  inline std::vector<AlgebraPtr> small_algebras(Characteristic p) {
    auto make = [p](std::string name,
                    std::vector<std::vector<std::vector<long>>> table,
                    std::vector<long> unit) {
      return std::make_shared<Algebra const>(
          Algebra::from_table(std::move(name), table, unit, p));
    };
    std::vector<AlgebraPtr> out;
    out.push_back(make("K[Z/2]", {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, {1, 0}));
    out.push_back(make("K[x]/x^2", {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {1, 0}));
    out.push_back(make("KxK", {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}, {1, 1}));
    out.push_back(make("K[x]/x^3",
                       {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                        {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
                        {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}},
                       {1, 0, 0}));
    // Upper triangular 2x2 matrices on e11, e12, e22.
    out.push_back(make("T2",
                       {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
                        {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}},
                        {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}},
                       {1, 0, 1}));
    // K[x,y]/(x^2, y^2) on 1, x, y, xy.
    out.push_back(make("K[x,y]/(x^2,y^2)",
                       {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
                        {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}},
                        {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
                        {{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
                       {1, 0, 0, 0}));
    return out;
  }

  // R⊗_K R with R acting on the left of the first factor and on the right
  // of the second.
  inline Bimodule enveloping(AlgebraPtr const& alg) {
    Characteristic const p = alg->characteristic();
    Matrix const         id = Matrix::identity(alg->dim(), p);
    Action               left{Side::left, {}}, right{Side::right, {}};
    for (std::size_t a = 0; a < alg->dim(); ++a) {
      left.gens.push_back(alg->left_multiplication(a).kron(id));
      right.gens.push_back(id.kron(alg->right_multiplication(a)));
    }
    return Bimodule(alg, alg->dim() * alg->dim(), left, right, "R⊗R");
  }

  inline std::vector<Bimodule> small_bimodules(AlgebraPtr const& alg) {
    Bimodule const r = Bimodule::regular(alg);
    return {r, direct_sum(r, r), enveloping(alg)};
  }

  // Test objects: R, R⊕R and the quotients R / e_a R.
  inline std::vector<Module> small_objects(AlgebraPtr const& alg) {
    Module const        r = Module::right_regular(alg);
    std::vector<Module> out{r, direct_sum(r, r)};
    for (std::size_t a = 1; a < alg->dim(); ++a) {
      out.push_back(
          cokernel(ModuleMap{r, r, alg->left_multiplication(a)}).module.renamed("R/e" + std::to_string(a) + "R"));
    }
    return out;
  }

  struct NaturalCase {
    std::string         label;
    Bimodule            p;
    Bimodule            q;
    Matrix              f;
    std::vector<Module> objects;
  };

  // Seeded random bimodule maps over algebras of dimension at most 4 over
  // F_2 and F_3.  Every map is a random nonzero combination of a basis of
  // Hom(P, Q); pairs with Hom(P, Q) = 0 are skipped.
  inline std::vector<NaturalCase> natural_cases(std::uint32_t seed, std::size_t count) {
    std::mt19937            rng(seed);
    std::vector<NaturalCase> out;
    std::vector<AlgebraPtr> algebras;
    for (Characteristic p : {2U, 3U}) {
      for (auto const& a : small_algebras(p)) {
        algebras.push_back(a);
      }
    }
    while (out.size() < count) {
      AlgebraPtr const& alg  = algebras[rng() % algebras.size()];
      auto const        bims = small_bimodules(alg);
      Bimodule const&   p    = bims[rng() % bims.size()];
      Bimodule const&   q    = bims[rng() % bims.size()];
      auto const        basis = hom_bimodules(p, q);
      if (basis.empty()) {
        continue;
      }
      Characteristic const ch = alg->characteristic();
      Matrix               f(q.dim(), p.dim(), ch);
      while (f.is_zero()) {
        for (auto const& b : basis) {
          f = f + Scalar(static_cast<long>(rng() % (ch == 0 ? 5 : ch)), ch) * b;
        }
      }
      out.push_back(NaturalCase{alg->name() + "/F" + std::to_string(ch) + " " + p.name()
                                   + "->" + q.name(),
                               p, q, f, small_objects(alg)});
    }
    return out;
  }

}  // namespace monocat::testing
