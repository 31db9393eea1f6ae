#include "monocat/watts.hpp"

#include "memo.hpp"
#include "monocat/errors.hpp"

namespace monocat {

  Matrix invert(Matrix const& m, std::string const& what) {
    if (!m.is_square()) {
      throw NotInvertible(what + " is not square (" + std::to_string(m.rows())
                          + "x" + std::to_string(m.cols()) + ")");
    }
    auto inv = m.inverse();
    if (!inv) {
      throw NotInvertible(what + " is singular");
    }
    return *inv;
  }

  TripleModule build_T(CustomTensor const& ct) {
    auto const&    alg = *ct.algebra();
    Module const   r   = Module::right_regular(ct.algebra());
    Module const   t   = ct.tensor(r, r);
    Action         outer{Side::left, {}};
    Action         inner{Side::left, {}};
    for (std::size_t a = 0; a < alg.dim(); ++a) {
      Matrix la = left_translation(alg, a);
      outer.gens.push_back(ct.tensor_left(r, r, la, r));
      inner.gens.push_back(ct.tensor_right(r, r, r, la));
    }
    if (auto d = action_defect(alg, outer, t.dim())) {
      throw ActionClash("first left action on R⊙R: " + *d);
    }
    if (auto d = action_defect(alg, inner, t.dim())) {
      throw ActionClash("second left action on R⊙R: " + *d);
    }
    if (auto d = commutation_defect(outer, inner)) {
      throw ActionClash("the two left actions on R⊙R do not commute: " + *d);
    }
    if (auto d = commutation_defect(outer, t.action())) {
      throw ActionClash("first left action and right action on R⊙R: " + *d);
    }
    if (auto d = commutation_defect(inner, t.action())) {
      throw ActionClash("second left action and right action on R⊙R: " + *d);
    }
    return TripleModule{t.renamed("T"), std::move(outer), std::move(inner)};
  }

  Watts::Watts(CustomTensorPtr ct) {
    Module       regular = Module::right_regular(ct->algebra()).renamed("R");
    TripleModule t       = build_T(*ct);
    _state               = std::make_shared<State const>(
        State{std::move(ct),
              std::move(regular),
              std::move(t),
              std::make_shared<detail::Memo<Omega>>(),
              std::make_shared<detail::Memo<Transported>>(),
              std::make_shared<detail::Memo<Matrix>>()});
  }

  std::shared_ptr<Watts::Omega const> Watts::omega_data(Module const& x) const {
    require_same_algebra(algebra(), x.algebra());
    return _state->omegas->get(detail::fingerprint(x), [&] {
      auto const&          t  = _state->t;
      Characteristic const p  = x.characteristic();
      TensorProduct        tp = balanced_tensor(x.dim(), x.action(), t.dim(), t.inner, p);
      Matrix const         ix = Matrix::identity(x.dim(), p);
      Action               left{Side::left, {}}, right{Side::right, {}};
      for (std::size_t a = 0; a < algebra()->dim(); ++a) {
        left.gens.push_back(tp.induce(ix, t.outer.gens[a]));
        right.gens.push_back(tp.induce(ix, t.module.action().gens[a]));
      }
      std::string name = x.name().empty() ? std::string() : "ω(" + x.name() + ")";
      return Omega{Bimodule(algebra(), tp.dim(), std::move(left), std::move(right), name),
                   std::move(tp)};
    });
  }

  Matrix Watts::omega_map(Module const& x, Module const& y, Matrix const& f) const {
    auto src = omega_data(x);
    auto dst = omega_data(y);
    return descend(dst->product.projection()
                       * f.kron(Matrix::identity(T().dim(), x.characteristic())),
                   src->product.projection(),
                   src->product.section(),
                   "ω(f)");
  }

  Action Watts::outer_action(Module const& x) const {
    auto const& alg = *algebra();
    Action      out{Side::left, {}};
    for (std::size_t a = 0; a < alg.dim(); ++a) {
      out.gens.push_back(
          tensor().tensor_left(regular(), regular(), left_translation(alg, a), x));
    }
    return out;
  }

  Matrix Watts::theta(Module const& x, Module const& y) const {
    auto const&          ct = tensor();
    Characteristic const p  = x.characteristic();
    Module const         rx = ct.tensor(regular(), x);
    Module const         yx = ct.tensor(y, x);
    TensorProduct        tp
        = balanced_tensor(y.dim(), y.action(), rx.dim(), outer_action(x), p);
    Matrix ambient(yx.dim(), y.dim() * rx.dim(), p);
    for (std::size_t j = 0; j < y.dim(); ++j) {
      Matrix yhat(y.dim(), 1, p);
      yhat(j, 0) = Scalar::one(p);
      ambient.set_block(0, j * rx.dim(), ct.tensor_left(regular(), y, hat(y, yhat), x));
    }
    Matrix result = descend(ambient, tp.projection(), tp.section(), "θ");
    invert(result, "θ_" + x.name() + "(" + y.name() + ")");
    return result;
  }

  Matrix Watts::nu(Module const& x) const {
    auto const&          ct = tensor();
    Characteristic const p  = x.characteristic();
    auto                 w  = omega_data(x);
    Module const         rx = ct.tensor(regular(), x);
    Matrix               ambient(rx.dim(), x.dim() * T().dim(), p);
    for (std::size_t j = 0; j < x.dim(); ++j) {
      Matrix xhat(x.dim(), 1, p);
      xhat(j, 0) = Scalar::one(p);
      ambient.set_block(0, j * T().dim(), ct.tensor_right(regular(), regular(), x, hat(x, xhat)));
    }
    return descend(ambient, w->product.projection(), w->product.section(), "ν");
  }

  Matrix Watts::mu(Module const& x) const {
    return invert(nu(x), "ν_" + x.name());
  }

  std::shared_ptr<Watts::Transported const>
  Watts::transported_product(Module const& x, Module const& y) const {
    require_same_algebra(algebra(), x.algebra());
    std::string key = detail::fingerprint(x) + "#" + detail::fingerprint(y);
    return _state->transported->get(key, [&] {
      Characteristic const p  = x.characteristic();
      auto                 wy = omega_data(y);
      TensorProduct        tp = balanced_tensor(
          x.dim(), x.action(), wy->bimodule.dim(), wy->bimodule.left(), p);
      Matrix const ix = Matrix::identity(x.dim(), p);
      Action       right{Side::right, {}};
      for (auto const& g : wy->bimodule.right().gens) {
        right.gens.push_back(tp.induce(ix, g));
      }
      std::string name = x.name().empty() || y.name().empty()
                             ? std::string()
                             : "(" + x.name() + "⊙'" + y.name() + ")";
      return Transported{Module(algebra(), tp.dim(), std::move(right), name),
                         std::move(tp)};
    });
  }

  Matrix Watts::c(Module const& x, Module const& y) const {
    std::string key = detail::fingerprint(x) + "#" + detail::fingerprint(y);
    return *_state->cs->get(key, [&] {
      Characteristic const p  = x.characteristic();
      auto                 tr = transported_product(x, y);
      Module const         ry = tensor().tensor(regular(), y);
      TensorProduct        dst
          = balanced_tensor(x.dim(), x.action(), ry.dim(), outer_action(y), p);
      Matrix step = descend(
          dst.projection() * Matrix::identity(x.dim(), p).kron(nu(y)),
          tr->product.projection(),
          tr->product.section(),
          "id⊗ν");
      return theta(y, x) * step;
    });
  }

  Matrix Watts::alpha_prime(Module const& x, Module const& y, Module const& z) const {
    auto const&          ct  = tensor();
    auto const           tt  = TransportedTensor(*this);
    Characteristic const p   = x.characteristic();
    Module const         xy  = ct.tensor(x, y);
    Module const         yz  = ct.tensor(y, z);
    Module const         xty = tt.tensor(x, y);
    Module const         ytz = tt.tensor(y, z);
    Matrix const         iz  = Matrix::identity(z.dim(), p);
    Matrix const         ix  = Matrix::identity(x.dim(), p);

    Matrix step1 = tt.tensor_maps(xty, xy, c(x, y), z, z, iz);
    Matrix step2 = c(xy, z);
    Matrix step3 = ct.associator(x, y, z);
    Matrix step4 = invert(c(x, yz), "c_{X,Y⊙Z}");
    Matrix step5 = invert(tt.tensor_maps(x, x, ix, ytz, yz, c(y, z)), "id⊙'c_{Y,Z}");
    return step5 * step4 * step3 * step2 * step1;
  }

  Matrix Watts::lambda_prime(Module const& x) const {
    return tensor().left_unitor(x) * c(tensor().unit(), x);
  }

  Matrix Watts::rho_prime(Module const& x) const {
    return tensor().right_unitor(x) * c(x, tensor().unit());
  }

  Matrix Watts::contract_left(TensorProduct const& product, Action const& left) const {
    std::size_t const dim = left.gens.empty() ? 0 : left.gens.front().rows();
    Matrix            ambient = Matrix::hstack(left.gens, dim, algebra()->characteristic());
    return descend(ambient, product.projection(), product.section(), "R⊗M -> M");
  }

  Matrix Watts::xi(Module const& x, Module const& y) const {
    Characteristic const p  = x.characteristic();
    auto                 wx = omega_data(x);
    auto                 wy = omega_data(y);
    auto bt = bimodule_tensor_with_product(wx->bimodule, wy->bimodule);

    auto   r_x   = transported_product(regular(), x);
    Matrix u_x   = contract_left(r_x->product, wx->bimodule.left());
    auto   rx_y  = transported_product(r_x->module, y);
    Matrix step1 = descend(rx_y->product.projection()
                               * invert(u_x, "R⊗ω(X) -> ω(X)")
                                     .kron(Matrix::identity(wy->bimodule.dim(), p)),
                           bt.product.projection(),
                           bt.product.section(),
                           "u⁻¹⊗id");
    Matrix step2 = alpha_prime(regular(), x, y);
    Module const xy   = transported_product(x, y)->module;
    auto         r_xy = transported_product(regular(), xy);
    Matrix       u_xy = contract_left(r_xy->product, omega(xy).left());
    return u_xy * step2 * step1;
  }

  Matrix Watts::eta() const {
    Module const& unit = tensor().unit();
    auto          r_i  = transported_product(regular(), unit);
    Matrix        u_i  = contract_left(r_i->product, omega(unit).left());
    return u_i * invert(rho_prime(regular()), "ρ'_R");
  }

  CustomTensorPtr Watts::transported() const {
    return std::make_shared<TransportedTensor const>(*this);
  }

  Matrix TransportedTensor::tensor_maps(Module const& x,
                                        Module const& x2,
                                        Matrix const& f,
                                        Module const& y,
                                        Module const& y2,
                                        Matrix const& g) const {
    auto src = _w.transported_product(x, y);
    auto dst = _w.transported_product(x2, y2);
    return descend(dst->product.projection() * f.kron(_w.omega_map(y, y2, g)),
                   src->product.projection(),
                   src->product.section(),
                   "f⊙'g");
  }

}  // namespace monocat
