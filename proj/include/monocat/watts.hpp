#pragma once

#include <memory>
#include <string>

#include "monocat/algebra.hpp"
#include "monocat/custom_tensor.hpp"

namespace monocat {

  namespace detail {
    template <typename Value>
    class Memo;
  }

  // T = R⊙R with its right action and two left actions:
  //   outer(r) = (r·) ⊙ id_R,   inner(r) = id_R ⊙ (r·).
  struct TripleModule {
    Module module;  // T with its right action
    Action outer;
    Action inner;

    [[nodiscard]] std::size_t dim() const noexcept {
      return module.dim();
    }
  };

  // Throws ActionClash if two of the three actions fail to commute or one of
  // the left actions is not an action.
  TripleModule build_T(CustomTensor const& ct);

  // The construction attached to a custom tensor.  ω(X) is X tensored with T
  // over the inner action; its left action is the outer one, and
  // X⊙'Y := X ⊗_R ω(Y) is the transported product.  Copies share caches.
  class Watts {
   public:
    explicit Watts(CustomTensorPtr ct);

    [[nodiscard]] CustomTensor const& tensor() const noexcept {
      return *_state->ct;
    }
    [[nodiscard]] CustomTensorPtr const& tensor_ptr() const noexcept {
      return _state->ct;
    }
    [[nodiscard]] AlgebraPtr const& algebra() const noexcept {
      return _state->ct->algebra();
    }
    [[nodiscard]] Module const& regular() const noexcept {
      return _state->regular;
    }
    [[nodiscard]] TripleModule const& T() const noexcept {
      return _state->t;
    }

    struct Omega {
      Bimodule      bimodule;
      TensorProduct product;  // X ⊗_inner T
    };
    [[nodiscard]] std::shared_ptr<Omega const> omega_data(Module const& x) const;
    [[nodiscard]] Bimodule omega(Module const& x) const {
      return omega_data(x)->bimodule;
    }
    // ω(f) = f ⊗ id_T.
    [[nodiscard]] Matrix omega_map(Module const& x,
                                   Module const& y,
                                   Matrix const& f) const;

    // The left action r ↦ (r·) ⊙ id_X on R⊙X.
    [[nodiscard]] Action outer_action(Module const& x) const;

    // θ_X(Y) : Y ⊗_R (R⊙X) -> Y⊙X, y ⊗ t ↦ (ŷ ⊙ id_X)(t).
    [[nodiscard]] Matrix theta(Module const& x, Module const& y) const;
    // ν_X : ω(X) -> R⊙X, x ⊗ t ↦ (id_R ⊙ x̂)(t), and μ_X = ν_X⁻¹.
    [[nodiscard]] Matrix nu(Module const& x) const;
    [[nodiscard]] Matrix mu(Module const& x) const;
    // c_{X,Y} = θ_Y(X) ∘ (id_X ⊗ ν_Y) : X⊙'Y -> X⊙Y.
    [[nodiscard]] Matrix c(Module const& x, Module const& y) const;

    struct Transported {
      Module        module;
      TensorProduct product;  // X ⊗_outer ω(Y)
    };
    [[nodiscard]] std::shared_ptr<Transported const>
    transported_product(Module const& x, Module const& y) const;

    [[nodiscard]] Matrix alpha_prime(Module const& x,
                                     Module const& y,
                                     Module const& z) const;
    // λ'_X = λ_X ∘ c_{I,X} and ρ'_X = ρ_X ∘ c_{X,I}.
    [[nodiscard]] Matrix lambda_prime(Module const& x) const;
    [[nodiscard]] Matrix rho_prime(Module const& x) const;

    // The canonical isomorphism R ⊗_R M -> M, for M a left module presented
    // through the given tensor product with the regular right module.
    [[nodiscard]] Matrix contract_left(TensorProduct const& product,
                                       Action const&        left) const;

    // ξ_{X,Y} : ω(X) ⊗_R ω(Y) -> ω(X⊙'Y), with the source presented by
    // bimodule_tensor_with_product(ω(X), ω(Y)).
    [[nodiscard]] Matrix xi(Module const& x, Module const& y) const;
    // η : R -> ω(I).
    [[nodiscard]] Matrix eta() const;

    // (X⊙'Y)⊙'Z etc. as a CustomTensor.
    [[nodiscard]] CustomTensorPtr transported() const;

   private:
    struct State {
      CustomTensorPtr                           ct;
      Module                                    regular;
      TripleModule                              t;
      std::shared_ptr<detail::Memo<Omega>>       omegas;
      std::shared_ptr<detail::Memo<Transported>> transported;
      std::shared_ptr<detail::Memo<Matrix>>      cs;
    };
    std::shared_ptr<State const> _state;
  };

  // The transported monoidal structure (⊙', α', λ', ρ') with unit I.
  class TransportedTensor final : public CustomTensor {
   public:
    explicit TransportedTensor(Watts w) : _w(std::move(w)) {}

    [[nodiscard]] std::string name() const override {
      return _w.tensor().name() + "'";
    }
    [[nodiscard]] AlgebraPtr const& algebra() const override {
      return _w.algebra();
    }
    [[nodiscard]] Module const& unit() const override {
      return _w.tensor().unit();
    }
    [[nodiscard]] Module tensor(Module const& x, Module const& y) const override {
      return _w.transported_product(x, y)->module;
    }
    [[nodiscard]] Matrix tensor_maps(Module const& x,
                                     Module const& x2,
                                     Matrix const& f,
                                     Module const& y,
                                     Module const& y2,
                                     Matrix const& g) const override;
    [[nodiscard]] Matrix associator(Module const& x,
                                    Module const& y,
                                    Module const& z) const override {
      return _w.alpha_prime(x, y, z);
    }
    [[nodiscard]] Matrix left_unitor(Module const& x) const override {
      return _w.lambda_prime(x);
    }
    [[nodiscard]] Matrix right_unitor(Module const& x) const override {
      return _w.rho_prime(x);
    }

   private:
    Watts _w;
  };

  // Inverse of a square matrix; throws NotInvertible naming `what`.
  Matrix invert(Matrix const& m, std::string const& what);

}  // namespace monocat
