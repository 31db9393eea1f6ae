#pragma once

#include <vector>

#include "monocat/algebra.hpp"

namespace monocat {

  // A family c_M : M⊗_R P -> M⊗_R Q of right-module maps, one per object.
  // M⊗_R P is written in the basis of tensor_over(M, P as a left module).
  struct NaturalFamily {
    Bimodule            p;
    Bimodule            q;
    std::vector<Module> objects;
    std::vector<Matrix> components;
  };

  // M⊗_R P with the right action coming from P.
  Module tensor_with_bimodule(Module const& m, Bimodule const& p);

  // c_M = id_M ⊗ f for a bimodule map f : P -> Q.
  NaturalFamily induce_family(Bimodule const&            p,
                              Bimodule const&            q,
                              Matrix const&              f,
                              std::vector<Module> const& objects);

  // The bimodule map f : P -> Q with c_M = id_M ⊗ f, read off from the
  // component at the regular module as p ↦ c_R(1⊗p).  The objects must
  // include the regular module.
  //
  // Throws NotBalanced if the extracted map is not R-bilinear and NotNatural
  // if some square with a basis morphism between sample objects fails to
  // commute.
  Matrix nat_to_bimodule_hom(NaturalFamily const& family);

  // Whether every component of the family equals id_M ⊗ f.
  bool reconstructs(NaturalFamily const& family, Matrix const& f);

}  // namespace monocat
