#pragma once

#include <functional>
#include <string>
#include <vector>

#include "monocat/custom_tensor.hpp"
#include "monocat/fixtures.hpp"
#include "monocat/report.hpp"
#include "monocat/watts.hpp"

namespace monocat {

  struct AxiomOptions {
    bool naturality   = true;
    bool interchange  = true;
    bool end_unit     = true;
  };

  // Pentagon on every quadruple of the sample, triangle and the two derived
  // unit diagrams on every pair, λ_I = ρ_I, commutativity of End(I), the
  // End(I) actions on Hom-spaces, naturality of α, λ, ρ and the interchange
  // law on basis morphisms between sample modules.
  //
  // Throws InvalidStructure if the sample lacks R or I and MalformedTensor
  // if a structure component is not invertible.
  CoherenceReport check_monoidal_axioms(CustomTensor const&        ct,
                                        std::vector<Module> const& sample,
                                        AxiomOptions const&        options = {});

  // Conditions on T alone.  A = α'_{R,R,R} must commute with the three left
  // actions and the right action; the components of α' at (R⊙'R, R, R) and
  // the other slots are reconstructed from A by naturality and must satisfy
  // the pentagon at (R, R, R, R) and agree with the direct construction; and
  // the transported unit triangle at (R, I, R) must commute.
  CoherenceReport check_T_coherence(Watts const& w);

  struct FunctorOptions {
    // Applied to every ξ component before it is checked; used to plant
    // deliberate defects.
    std::function<Matrix(Module const&, Module const&, Matrix)> xi_hook;
  };

  // (ω, ξ, η) as a monoidal functor from the transported structure to
  // bimodules: the associativity pentagon on all triples and both unit
  // squares on every sample module, plus bilinearity and invertibility of ξ.
  CoherenceReport verify_monoidal_functor(Watts const&               w,
                                          std::vector<Module> const& sample,
                                          FunctorOptions const&      options = {});

  // ω(X) ≠ 0, injectivity of f ↦ ω(f) on Hom-spaces, right exactness of
  // ω on the supplied sequences; exactness of ω on short exact sequences is
  // recorded as a probe.
  CoherenceReport verify_embedding(Watts const&                       w,
                                   std::vector<Module> const&         sample,
                                   std::vector<ExactSequence> const&  sequences,
                                   std::function<Module(std::string const&)> const& lookup);

  // Snake identities for ev : X*⊙X -> I and db : I -> X⊙X*.  With a Watts
  // context, also probes ω(X) and ω(X*) for projectivity and compares
  // dim ω(X*) with dim Hom_R(ω(X), R).
  CoherenceReport check_rigidity(CustomTensor const& ct,
                                 Module const&       x,
                                 Module const&       xdual,
                                 ModuleMap const&    ev,
                                 ModuleMap const&    db,
                                 Watts const*        w = nullptr);

  // Whether a right module is projective, decided by splitting M⊗_K R -> M.
  bool is_projective(Module const& m);

}  // namespace monocat
