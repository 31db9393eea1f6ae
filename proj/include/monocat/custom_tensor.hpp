#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "monocat/algebra.hpp"

namespace monocat {

  namespace detail {
    template <typename Value>
    class Memo;
  }

  // A monoidal structure on the category of right modules over a fixed
  // algebra.  Every method works on arbitrary modules, not just a sample.
  // Matrices are written in the canonical bases of the modules returned by
  // tensor().
  class CustomTensor {
   public:
    virtual ~CustomTensor() = default;

    [[nodiscard]] virtual std::string       name() const    = 0;
    [[nodiscard]] virtual AlgebraPtr const& algebra() const = 0;
    [[nodiscard]] virtual Module const&     unit() const    = 0;

    [[nodiscard]] virtual Module tensor(Module const& x, Module const& y) const = 0;
    // f ⊙ g : X⊙Y -> X'⊙Y' for f : X -> X' and g : Y -> Y'.
    [[nodiscard]] virtual Matrix tensor_maps(Module const& x,
                                             Module const& x2,
                                             Matrix const& f,
                                             Module const& y,
                                             Module const& y2,
                                             Matrix const& g) const = 0;
    // (X⊙Y)⊙Z -> X⊙(Y⊙Z).
    [[nodiscard]] virtual Matrix associator(Module const& x,
                                            Module const& y,
                                            Module const& z) const = 0;
    // I⊙X -> X.
    [[nodiscard]] virtual Matrix left_unitor(Module const& x) const = 0;
    // X⊙I -> X.
    [[nodiscard]] virtual Matrix right_unitor(Module const& x) const = 0;

    // Convenience: f ⊙ id_Y and id_X ⊙ g.
    [[nodiscard]] Matrix tensor_left(Module const& x,
                                     Module const& x2,
                                     Matrix const& f,
                                     Module const& y) const;
    [[nodiscard]] Matrix tensor_right(Module const& x,
                                      Module const& y,
                                      Module const& y2,
                                      Matrix const& g) const;
  };

  using CustomTensorPtr = std::shared_ptr<CustomTensor const>;

  // Bilinear data presenting a tensor product on Mod_R:
  //
  //  * X⊙Y is the quotient of X⊗_K Y by x·u ⊗ y - x ⊗ y·v for every relation
  //    (u, v) and all x, y;
  //  * R acts on X⊙Y through the coproduct: e_b acts as Σ D_b(i, j) e_i ⊗ e_j;
  //  * the associator is induced by the element Φ of R⊗R⊗R acting on
  //    X⊗Y⊗Z;
  //  * λ(e_k ⊗ x) = x·ℓ_k and ρ(x ⊗ e_k) = x·r_k for the basis e_k of I.
  //
  // All induced maps are checked to be well defined on the quotients;
  // violations throw MalformedTensor.
  struct TensorPresentation {
    AlgebraPtr                             algebra;
    std::vector<std::pair<Matrix, Matrix>> relations;
    std::vector<Matrix>                    coproduct;   // dim x dim each
    Matrix                                 associator;  // dim³ x 1
    Module                                 unit;
    std::vector<Matrix>                    left_unit;   // dim x 1 each
    std::vector<Matrix>                    right_unit;  // dim x 1 each
  };

  class PresentedTensor final : public CustomTensor {
   public:
    PresentedTensor(std::string name, TensorPresentation data);
    ~PresentedTensor() override;

    [[nodiscard]] std::string name() const override {
      return _name;
    }
    [[nodiscard]] AlgebraPtr const& algebra() const override {
      return _data.algebra;
    }
    [[nodiscard]] Module const& unit() const override {
      return _data.unit;
    }
    [[nodiscard]] TensorPresentation const& presentation() const noexcept {
      return _data;
    }

    [[nodiscard]] Module tensor(Module const& x, Module const& y) const override;
    [[nodiscard]] Matrix tensor_maps(Module const& x,
                                     Module const& x2,
                                     Matrix const& f,
                                     Module const& y,
                                     Module const& y2,
                                     Matrix const& g) const override;
    [[nodiscard]] Matrix associator(Module const& x,
                                    Module const& y,
                                    Module const& z) const override;
    [[nodiscard]] Matrix left_unitor(Module const& x) const override;
    [[nodiscard]] Matrix right_unitor(Module const& x) const override;

    // X⊙Y together with its presentation as a quotient of X⊗_K Y.
    struct Product {
      Module   module;
      Quotient quotient;
    };
    [[nodiscard]] std::shared_ptr<Product const> product(Module const& x,
                                                         Module const& y) const;

   private:
    std::string                                 _name;
    TensorPresentation                          _data;
    std::unique_ptr<detail::Memo<Product>>      _products;
  };

  // Wraps a tensor and replaces id_R ⊙ g on (R, R) by P (id_R ⊙ g) P⁻¹ for a
  // fixed shear P.  The result is functorial in each variable separately but
  // violates the interchange law, so the two left actions on R⊙R clash.
  class SkewedSecondSlot final : public CustomTensor {
   public:
    explicit SkewedSecondSlot(CustomTensorPtr base) : _base(std::move(base)) {}

    [[nodiscard]] std::string name() const override {
      return _base->name() + "+skew";
    }
    [[nodiscard]] AlgebraPtr const& algebra() const override {
      return _base->algebra();
    }
    [[nodiscard]] Module const& unit() const override {
      return _base->unit();
    }
    [[nodiscard]] Module tensor(Module const& x, Module const& y) const override {
      return _base->tensor(x, y);
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
      return _base->associator(x, y, z);
    }
    [[nodiscard]] Matrix left_unitor(Module const& x) const override {
      return _base->left_unitor(x);
    }
    [[nodiscard]] Matrix right_unitor(Module const& x) const override {
      return _base->right_unitor(x);
    }

   private:
    CustomTensorPtr _base;
  };

  // Map between quotients induced by an ambient map.  dst_ambient is the
  // composite (target projection) ∘ (ambient map); the source quotient is
  // given by a projection and a section.  Throws MalformedTensor with the
  // message `what` unless the kernel of the source projection is killed.
  Matrix descend(Matrix const& dst_ambient,
                 Matrix const& src_projection,
                 Matrix const& src_section,
                 std::string const& what);

  // Right-module map R -> X, r ↦ x·r, for x given by coordinates.
  Matrix hat(Module const& x, Matrix const& element);
  // Right-module map R -> R, s ↦ e_a s.
  Matrix left_translation(Algebra const& alg, std::size_t a);

}  // namespace monocat
