#include "monocat/linear_map.hpp"

#include "monocat/errors.hpp"

namespace monocat {

  VectorSpace VectorSpace::standard(std::size_t dim, std::string const& prefix) {
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      labels.push_back(prefix + std::to_string(i));
    }
    return VectorSpace(std::move(labels));
  }

  LinearMap::LinearMap(VectorSpace source, VectorSpace target, Matrix matrix)
      : _source(std::move(source)),
        _target(std::move(target)),
        _matrix(std::move(matrix)) {
    if (_matrix.rows() != _target.dim() || _matrix.cols() != _source.dim()) {
      throw DimensionMismatch("matrix is " + std::to_string(_matrix.rows())
                              + "x" + std::to_string(_matrix.cols())
                              + " but map is " + std::to_string(_source.dim())
                              + " -> " + std::to_string(_target.dim()));
    }
  }

  LinearMap LinearMap::identity(VectorSpace const& v, Characteristic p) {
    return LinearMap(v, v, Matrix::identity(v.dim(), p));
  }

  LinearMap LinearMap::zero(VectorSpace const& source,
                            VectorSpace const& target,
                            Characteristic     p) {
    return LinearMap(source, target, Matrix(target.dim(), source.dim(), p));
  }

  LinearMap compose(LinearMap const& f, LinearMap const& g) {
    if (!(g.target() == f.source())) {
      throw DimensionMismatch("compose: target of g is not source of f");
    }
    return LinearMap(g.source(), f.target(), f.matrix() * g.matrix());
  }

  Kernel kernel(LinearMap const& f) {
    Matrix k     = f.matrix().kernel_basis();
    auto   space = VectorSpace::standard(k.cols(), "k");
    return Kernel{space, LinearMap(space, f.source(), std::move(k))};
  }

  LinearMap solve_iso(LinearMap const& f) {
    if (f.source().dim() != f.target().dim()) {
      throw NotInvertible("source and target dimensions differ");
    }
    auto inv = f.matrix().inverse();
    if (!inv) {
      throw NotInvertible("rank " + std::to_string(f.rank()) + " < "
                          + std::to_string(f.source().dim()));
    }
    return LinearMap(f.target(), f.source(), std::move(*inv));
  }

  VectorSpace tensor(VectorSpace const& v, VectorSpace const& w) {
    std::vector<std::string> labels;
    labels.reserve(v.dim() * w.dim());
    for (auto const& a : v.labels()) {
      for (auto const& b : w.labels()) {
        labels.push_back(a + "⊗" + b);
      }
    }
    return VectorSpace(std::move(labels));
  }

  LinearMap tensor(LinearMap const& f, LinearMap const& g) {
    return LinearMap(tensor(f.source(), g.source()),
                     tensor(f.target(), g.target()),
                     f.matrix().kron(g.matrix()));
  }

  Quotient cokernel(Matrix const&  relations,
                    std::size_t    ambient_dim,
                    Characteristic p) {
    if (relations.rows() != ambient_dim) {
      throw DimensionMismatch("cokernel: relations live in the wrong space");
    }
    Quotient q;
    // Rows of the echelon form of relationsᵀ span the relation space.
    Echelon e;
    if (relations.cols() == 0) {
      e.reduced = Matrix(0, ambient_dim, p);
    } else {
      e = relations.transpose().rref();
    }
    std::vector<long> position(ambient_dim, -1);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto c : e.pivots) {
      is_pivot[c] = true;
    }
    for (std::size_t c = 0; c < ambient_dim; ++c) {
      if (!is_pivot[c]) {
        position[c] = static_cast<long>(q.kept.size());
        q.kept.push_back(c);
      }
    }
    q.dim        = q.kept.size();
    q.projection = Matrix(q.dim, ambient_dim, p);
    q.section    = Matrix(ambient_dim, q.dim, p);
    for (std::size_t i = 0; i < q.dim; ++i) {
      q.projection(i, q.kept[i]) = Scalar::one(p);
      q.section(q.kept[i], i)    = Scalar::one(p);
    }
    // e_pivot ≡ e_pivot − row = −(non-pivot part of row) modulo relations
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      for (std::size_t i = 0; i < q.dim; ++i) {
        q.projection(i, e.pivots[r]) = -e.reduced(r, q.kept[i]);
      }
    }
    return q;
  }

}  // namespace monocat
