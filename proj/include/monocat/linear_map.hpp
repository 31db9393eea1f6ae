#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monocat/matrix.hpp"

namespace monocat {

  // A finite-dimensional space with an ordered basis of opaque labels.
  class VectorSpace {
   public:
    VectorSpace() = default;
    explicit VectorSpace(std::vector<std::string> labels)
        : _labels(std::move(labels)) {}
    // Basis labelled prefix0, prefix1, ...
    static VectorSpace standard(std::size_t dim, std::string const& prefix);

    [[nodiscard]] std::size_t dim() const noexcept {
      return _labels.size();
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    friend bool operator==(VectorSpace const&, VectorSpace const&) = default;

   private:
    std::vector<std::string> _labels;
  };

  class LinearMap {
   public:
    LinearMap(VectorSpace source, VectorSpace target, Matrix matrix);

    static LinearMap identity(VectorSpace const& v, Characteristic p);
    static LinearMap zero(VectorSpace const& source,
                          VectorSpace const& target,
                          Characteristic     p);

    [[nodiscard]] VectorSpace const& source() const noexcept {
      return _source;
    }
    [[nodiscard]] VectorSpace const& target() const noexcept {
      return _target;
    }
    [[nodiscard]] Matrix const& matrix() const noexcept {
      return _matrix;
    }
    [[nodiscard]] std::size_t rank() const {
      return _matrix.rank();
    }

    friend bool operator==(LinearMap const&, LinearMap const&) = default;

   private:
    VectorSpace _source;
    VectorSpace _target;
    Matrix      _matrix;
  };

  // f ∘ g; throws DimensionMismatch unless g.target() == f.source().
  LinearMap compose(LinearMap const& f, LinearMap const& g);

  struct Kernel {
    VectorSpace space;
    LinearMap   inclusion;
  };
  Kernel kernel(LinearMap const& f);

  // Two-sided inverse; throws NotInvertible.
  LinearMap solve_iso(LinearMap const& f);

  // Kronecker construction on the product basis (label "a⊗b").
  LinearMap tensor(LinearMap const& f, LinearMap const& g);
  VectorSpace tensor(VectorSpace const& v, VectorSpace const& w);

  // Canonical quotient V / span(columns of relations).  The basis of the
  // quotient is the set of standard vectors of V at the non-pivot positions of
  // the reduced relation space, so projection ∘ section is the identity and
  // the construction depends only on the relation span.
  struct Quotient {
    std::size_t              dim = 0;
    Matrix                   projection;  // dim x dim V
    Matrix                   section;     // dim V x dim
    std::vector<std::size_t> kept;        // indices in V of the basis vectors
  };
  Quotient cokernel(Matrix const& relations, std::size_t ambient_dim,
                    Characteristic p);

}  // namespace monocat
