#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monocat/linear_map.hpp"
#include "monocat/matrix.hpp"

namespace monocat {

  // A finite-dimensional associative unital algebra over Q or F_p, given by
  // structure constants e_i e_j = Σ_k c(i, j, k) e_k.
  class Algebra {
   public:
    // mult is dim x dim², with mult(k, i * dim + j) = c(i, j, k); unit is
    // dim x 1.  Associativity and unit laws are verified; throws
    // InvalidStructure otherwise.
    Algebra(std::string name, Matrix mult, Matrix unit);

    // Builds from c[i][j] = coordinates of e_i e_j.
    static Algebra from_table(std::string                                  name,
                              std::vector<std::vector<std::vector<long>>> const& table,
                              std::vector<long> const&                     unit,
                              Characteristic                               p);

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
      return _unit.rows();
    }
    [[nodiscard]] Characteristic characteristic() const noexcept {
      return _unit.characteristic();
    }
    [[nodiscard]] Matrix const& structure() const noexcept {
      return _mult;
    }
    [[nodiscard]] Matrix const& unit() const noexcept {
      return _unit;
    }
    [[nodiscard]] Scalar const& coefficient(std::size_t i,
                                            std::size_t j,
                                            std::size_t k) const {
      return _mult(k, i * dim() + j);
    }

    // Coordinates of a * b.
    [[nodiscard]] Matrix multiply(Matrix const& a, Matrix const& b) const;
    // Matrix of x ↦ e_i x.
    [[nodiscard]] Matrix left_multiplication(std::size_t i) const;
    // Matrix of x ↦ x e_i.
    [[nodiscard]] Matrix right_multiplication(std::size_t i) const;
    // Matrix of x ↦ a x for a given by coordinates.
    [[nodiscard]] Matrix left_multiplication_by(Matrix const& a) const;
    [[nodiscard]] Matrix basis_vector(std::size_t i) const;

    [[nodiscard]] bool is_commutative() const;

    friend bool operator==(Algebra const& a, Algebra const& b) {
      return a._mult == b._mult && a._unit == b._unit;
    }

   private:
    std::string _name;
    Matrix      _mult;
    Matrix      _unit;
  };

  using AlgebraPtr = std::shared_ptr<Algebra const>;

  enum class Side { left, right };

  // An action of an algebra on a space of dimension dim: gens[i] is the
  // matrix of the action of the basis element e_i.
  struct Action {
    Side                side = Side::right;
    std::vector<Matrix> gens;

    // Matrix of the action of the element with coordinates a.
    [[nodiscard]] Matrix of(Matrix const& a) const;
    friend bool          operator==(Action const&, Action const&) = default;
  };

  // Empty optional if the action is associative and unital, else a message.
  std::optional<std::string> action_defect(Algebra const& alg,
                                           Action const&  act,
                                           std::size_t    dim);
  // Empty optional if every generator of a commutes with every generator of b.
  std::optional<std::string> commutation_defect(Action const& a,
                                                Action const& b);

  // One-sided module.  Right modules are the objects of Mod_R.
  class Module {
   public:
    Module(AlgebraPtr alg, std::size_t dim, Action action, std::string name = {});

    static Module right_regular(AlgebraPtr const& alg);
    static Module left_regular(AlgebraPtr const& alg);
    static Module zero(AlgebraPtr const& alg, Side side = Side::right);

    [[nodiscard]] AlgebraPtr const& algebra() const noexcept {
      return _alg;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
      return _dim;
    }
    [[nodiscard]] Side side() const noexcept {
      return _action.side;
    }
    [[nodiscard]] Action const& action() const noexcept {
      return _action;
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] Characteristic characteristic() const noexcept {
      return _alg->characteristic();
    }
    [[nodiscard]] VectorSpace underlying() const {
      return VectorSpace::standard(_dim, _name.empty() ? "m" : _name + ":");
    }
    // Same space and matrices with the side flipped; valid over a
    // commutative algebra.
    [[nodiscard]] Module as_side(Side side) const;
    [[nodiscard]] Module renamed(std::string name) const;

    friend bool operator==(Module const& a, Module const& b);

   private:
    AlgebraPtr  _alg;
    std::size_t _dim;
    Action      _action;
    std::string _name;
  };

  class Bimodule {
   public:
    Bimodule(AlgebraPtr  alg,
             std::size_t dim,
             Action      left,
             Action      right,
             std::string name = {});

    static Bimodule regular(AlgebraPtr const& alg);

    [[nodiscard]] AlgebraPtr const& algebra() const noexcept {
      return _alg;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
      return _dim;
    }
    [[nodiscard]] Action const& left() const noexcept {
      return _left;
    }
    [[nodiscard]] Action const& right() const noexcept {
      return _right;
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] Characteristic characteristic() const noexcept {
      return _alg->characteristic();
    }
    [[nodiscard]] Module right_module() const {
      return Module(_alg, _dim, _right, _name);
    }
    [[nodiscard]] Module left_module() const {
      return Module(_alg, _dim, _left, _name);
    }

    friend bool operator==(Bimodule const& a, Bimodule const& b);

   private:
    AlgebraPtr  _alg;
    std::size_t _dim;
    Action      _left;
    Action      _right;
    std::string _name;
  };

  // A linear map together with the modules it claims to intertwine.
  struct ModuleMap {
    Module source;
    Module target;
    Matrix matrix;

    [[nodiscard]] bool is_equivariant() const;
  };

  // X ⊗_R Y for an action on X from the right and an action on Y from the
  // left, realised as the canonical cokernel of X⊗R⊗Y -> X⊗Y.
  struct TensorProduct {
    std::size_t left_dim  = 0;
    std::size_t right_dim = 0;
    Quotient    quotient;

    [[nodiscard]] std::size_t dim() const noexcept {
      return quotient.dim;
    }
    // π ∘ (a ⊗ b) ∘ σ for endomorphisms a of X and b of Y that descend.
    [[nodiscard]] Matrix induce(Matrix const& a, Matrix const& b) const;
    [[nodiscard]] Matrix const& projection() const noexcept {
      return quotient.projection;
    }
    [[nodiscard]] Matrix const& section() const noexcept {
      return quotient.section;
    }
  };

  TensorProduct balanced_tensor(std::size_t    left_dim,
                                Action const&  right_action_on_left,
                                std::size_t    right_dim,
                                Action const&  left_action_on_right,
                                Characteristic p);

  // tensor_over_R of a right module with a left module.
  TensorProduct tensor_over(Module const& x, Module const& y);

  // Matrix of f ⊗ g : src -> dst for f : X -> X', g : Y -> Y'.
  Matrix tensor_maps(TensorProduct const& src,
                     TensorProduct const& dst,
                     Matrix const&        f,
                     Matrix const&        g);

  // M ⊗_R N with the outer actions.
  Bimodule bimodule_tensor(Bimodule const& m, Bimodule const& n);
  struct BimoduleTensor {
    Bimodule      result;
    TensorProduct product;
  };
  BimoduleTensor bimodule_tensor_with_product(Bimodule const& m,
                                              Bimodule const& n);
  // Canonical rebracketing (M⊗N)⊗P -> M⊗(N⊗P) on canonical bases.
  Matrix canonical_rebracketing(Bimodule const& m,
                                Bimodule const& n,
                                Bimodule const& p);
  // Canonical maps R⊗M -> M and M⊗R -> M.
  Matrix left_unitor(Bimodule const& m);
  Matrix right_unitor(Bimodule const& m);

  // Basis of all matrices F : dim_x -> dim_y with F a = b F for every pair.
  std::vector<Matrix> intertwiners(std::vector<std::pair<Matrix, Matrix>> const& pairs,
                                   std::size_t dim_x,
                                   std::size_t dim_y,
                                   Characteristic p);
  // Basis of Hom between two modules of the same side over the same algebra.
  std::vector<Matrix> hom_modules(Module const& x, Module const& y);
  std::vector<Matrix> hom_bimodules(Bimodule const& x, Bimodule const& y);

  bool is_zero(Module const& m) noexcept;
  bool is_zero(Bimodule const& m) noexcept;

  Module   direct_sum(Module const& a, Module const& b);
  Bimodule direct_sum(Bimodule const& a, Bimodule const& b);
  // Cokernel of a module map, with its projection.
  struct ModuleQuotient {
    Module module;
    Matrix projection;
  };
  ModuleQuotient cokernel(ModuleMap const& f);
  // Submodule spanned by the columns of basis (which must be stable).
  struct Submodule {
    Module module;
    Matrix inclusion;
  };
  Submodule submodule(Module const& m, Matrix const& basis);

  // f : A -> B, g : B -> C as matrices.
  bool is_right_exact(Matrix const& f, Matrix const& g);
  bool is_short_exact(Matrix const& f, Matrix const& g);

  void require_same_algebra(AlgebraPtr const& a, AlgebraPtr const& b);

}  // namespace monocat
