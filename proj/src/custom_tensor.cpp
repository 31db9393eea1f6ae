#include "monocat/custom_tensor.hpp"

#include "memo.hpp"
#include "monocat/errors.hpp"

namespace monocat {

  Matrix descend(Matrix const&      dst_ambient,
                 Matrix const&      src_projection,
                 Matrix const&      src_section,
                 std::string const& what) {
    Matrix result = dst_ambient * src_section;
    if (!(result * src_projection == dst_ambient)) {
      throw MalformedTensor(what + ": map is not well defined on the quotient");
    }
    return result;
  }

  Matrix hat(Module const& x, Matrix const& element) {
    std::size_t const n = x.algebra()->dim();
    Matrix            out(x.dim(), n, x.characteristic());
    for (std::size_t a = 0; a < n; ++a) {
      out.set_block(0, a, x.action().gens[a] * element);
    }
    return out;
  }

  Matrix left_translation(Algebra const& alg, std::size_t a) {
    return alg.left_multiplication(a);
  }

  Matrix CustomTensor::tensor_left(Module const& x,
                                   Module const& x2,
                                   Matrix const& f,
                                   Module const& y) const {
    return tensor_maps(x, x2, f, y, y, Matrix::identity(y.dim(), y.characteristic()));
  }

  Matrix CustomTensor::tensor_right(Module const& x,
                                    Module const& y,
                                    Module const& y2,
                                    Matrix const& g) const {
    return tensor_maps(x, x, Matrix::identity(x.dim(), x.characteristic()), y, y2, g);
  }

  ////////////////////////////////////////////////////////////////////////
  // PresentedTensor
  ////////////////////////////////////////////////////////////////////////

  PresentedTensor::PresentedTensor(std::string name, TensorPresentation data)
      : _name(std::move(name)),
        _data(std::move(data)),
        _products(std::make_unique<detail::Memo<Product>>()) {
    auto const&       alg = *_data.algebra;
    std::size_t const n   = alg.dim();
    require_same_algebra(_data.algebra, _data.unit.algebra());
    if (_data.unit.side() != Side::right) {
      throw MalformedTensor("the unit object must be a right module");
    }
    auto check_element = [&](Matrix const& e, char const* what) {
      if (e.rows() != n || e.cols() != 1) {
        throw MalformedTensor(std::string(what) + " has the wrong dimension");
      }
    };
    for (auto const& [u, v] : _data.relations) {
      check_element(u, "relation");
      check_element(v, "relation");
    }
    if (_data.coproduct.size() != n) {
      throw MalformedTensor("coproduct needs one entry per basis element");
    }
    for (auto const& d : _data.coproduct) {
      if (d.rows() != n || d.cols() != n) {
        throw MalformedTensor("coproduct entries must be dim x dim");
      }
    }
    if (_data.associator.rows() != n * n * n || _data.associator.cols() != 1) {
      throw MalformedTensor("associator element must have dim³ coordinates");
    }
    if (_data.left_unit.size() != _data.unit.dim()
        || _data.right_unit.size() != _data.unit.dim()) {
      throw MalformedTensor("unit data needs one element per basis vector of I");
    }
    for (auto const& e : _data.left_unit) {
      check_element(e, "left unit element");
    }
    for (auto const& e : _data.right_unit) {
      check_element(e, "right unit element");
    }
  }

  PresentedTensor::~PresentedTensor() = default;

  std::shared_ptr<PresentedTensor::Product const>
  PresentedTensor::product(Module const& x, Module const& y) const {
    require_same_algebra(_data.algebra, x.algebra());
    require_same_algebra(_data.algebra, y.algebra());
    std::string key = detail::fingerprint(x) + "#" + detail::fingerprint(y);
    return _products->get(key, [&] {
      Characteristic const p  = _data.algebra->characteristic();
      std::size_t const    n  = _data.algebra->dim();
      std::size_t const    dx = x.dim();
      std::size_t const    dy = y.dim();
      Matrix const         ix = Matrix::identity(dx, p);
      Matrix const         iy = Matrix::identity(dy, p);

      std::vector<Matrix> blocks;
      for (auto const& [u, v] : _data.relations) {
        blocks.push_back(x.action().of(u).kron(iy) - ix.kron(y.action().of(v)));
      }
      Quotient q = cokernel(Matrix::hstack(blocks, dx * dy, p), dx * dy, p);

      Action act{Side::right, {}};
      for (std::size_t b = 0; b < n; ++b) {
        Matrix ambient(dx * dy, dx * dy, p);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            Scalar const& c = _data.coproduct[b](i, j);
            if (!c.is_zero()) {
              ambient = ambient
                        + c * x.action().gens[i].kron(y.action().gens[j]);
            }
          }
        }
        act.gens.push_back(descend(q.projection * ambient,
                                   q.projection,
                                   q.section,
                                   _name + ": action on X⊙Y"));
      }
      std::string label = x.name().empty() || y.name().empty()
                              ? std::string()
                              : "(" + x.name() + "⊙" + y.name() + ")";
      try {
        Module m(_data.algebra, q.dim, std::move(act), std::move(label));
        return Product{std::move(m), std::move(q)};
      } catch (InvalidStructure const& e) {
        throw MalformedTensor(_name + ": X⊙Y is not a module: " + e.what());
      }
    });
  }

  Module PresentedTensor::tensor(Module const& x, Module const& y) const {
    return product(x, y)->module;
  }

  Matrix PresentedTensor::tensor_maps(Module const& x,
                                      Module const& x2,
                                      Matrix const& f,
                                      Module const& y,
                                      Module const& y2,
                                      Matrix const& g) const {
    if (f.rows() != x2.dim() || f.cols() != x.dim() || g.rows() != y2.dim()
        || g.cols() != y.dim()) {
      throw DimensionMismatch(_name + ": tensor_maps factors have wrong shape");
    }
    auto src = product(x, y);
    auto dst = product(x2, y2);
    return descend(dst->quotient.projection * f.kron(g),
                   src->quotient.projection,
                   src->quotient.section,
                   _name + ": f⊙g");
  }

  Matrix PresentedTensor::associator(Module const& x,
                                     Module const& y,
                                     Module const& z) const {
    Characteristic const p  = _data.algebra->characteristic();
    std::size_t const    n  = _data.algebra->dim();
    auto                 xy = product(x, y);
    auto                 xy_z = product(xy->module, z);
    auto                 yz   = product(y, z);
    auto                 x_yz = product(x, yz->module);
    Matrix const         ix   = Matrix::identity(x.dim(), p);
    Matrix const         iz   = Matrix::identity(z.dim(), p);

    std::size_t const ambient_dim = x.dim() * y.dim() * z.dim();
    Matrix            ambient(ambient_dim, ambient_dim, p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          Scalar const& c = _data.associator((i * n + j) * n + k, 0);
          if (!c.is_zero()) {
            ambient = ambient
                      + c
                            * x.action().gens[i].kron(y.action().gens[j]).kron(
                                z.action().gens[k]);
          }
        }
      }
    }
    Matrix src_projection = xy_z->quotient.projection
                            * xy->quotient.projection.kron(iz);
    Matrix src_section = xy->quotient.section.kron(iz) * xy_z->quotient.section;
    Matrix dst         = x_yz->quotient.projection
                 * ix.kron(yz->quotient.projection) * ambient;
    return descend(dst, src_projection, src_section, _name + ": associator");
  }

  Matrix PresentedTensor::left_unitor(Module const& x) const {
    auto const&          unit = _data.unit;
    Characteristic const p    = x.characteristic();
    auto                 ix   = product(unit, x);
    Matrix               ambient(x.dim(), unit.dim() * x.dim(), p);
    for (std::size_t k = 0; k < unit.dim(); ++k) {
      ambient.set_block(0, k * x.dim(), x.action().of(_data.left_unit[k]));
    }
    return descend(ambient,
                   ix->quotient.projection,
                   ix->quotient.section,
                   _name + ": left unitor");
  }

  Matrix PresentedTensor::right_unitor(Module const& x) const {
    auto const&          unit = _data.unit;
    Characteristic const p    = x.characteristic();
    auto                 xi   = product(x, unit);
    Matrix               ambient(x.dim(), x.dim() * unit.dim(), p);
    for (std::size_t k = 0; k < unit.dim(); ++k) {
      Matrix act = x.action().of(_data.right_unit[k]);
      for (std::size_t j = 0; j < x.dim(); ++j) {
        ambient.set_block(0, j * unit.dim() + k, act.column(j));
      }
    }
    return descend(ambient,
                   xi->quotient.projection,
                   xi->quotient.section,
                   _name + ": right unitor");
  }

  ////////////////////////////////////////////////////////////////////////
  // SkewedSecondSlot
  ////////////////////////////////////////////////////////////////////////

  Matrix SkewedSecondSlot::tensor_maps(Module const& x,
                                       Module const& x2,
                                       Matrix const& f,
                                       Module const& y,
                                       Module const& y2,
                                       Matrix const& g) const {
    Matrix      out = _base->tensor_maps(x, x2, f, y, y2, g);
    auto const  r   = Module::right_regular(algebra());
    if (!(x == r && x2 == r && y == r && y2 == r && f.is_identity())) {
      return out;
    }
    std::size_t const    d = out.rows();
    Characteristic const p = out.characteristic();
    if (d < 2) {
      return out;
    }
    Matrix shear     = Matrix::identity(d, p);
    Matrix inv_shear = Matrix::identity(d, p);
    shear(0, d - 1)     = Scalar::one(p);
    inv_shear(0, d - 1) = -Scalar::one(p);
    return shear * out * inv_shear;
  }

}  // namespace monocat
