#include "monocat/natural.hpp"

#include "monocat/custom_tensor.hpp"
#include "monocat/errors.hpp"

namespace monocat {

  namespace {

    TensorProduct product(Module const& m, Bimodule const& p) {
      return tensor_over(m, p.left_module());
    }

    void check_family(NaturalFamily const& family) {
      if (family.objects.size() != family.components.size()) {
        throw DimensionMismatch("natural family: one component per object is required");
      }
      require_same_algebra(family.p.algebra(), family.q.algebra());
      for (std::size_t i = 0; i < family.objects.size(); ++i) {
        Module const& m = family.objects[i];
        require_same_algebra(family.p.algebra(), m.algebra());
        if (family.components[i].cols() != product(m, family.p).dim()
            || family.components[i].rows() != product(m, family.q).dim()) {
          throw DimensionMismatch("natural family: component at " + m.name()
                                  + " has the wrong shape");
        }
      }
    }

    // R⊗_R P -> P, r ⊗ p ↦ r·p.
    Matrix contraction(Bimodule const& p, TensorProduct const& tp) {
      Matrix ambient = Matrix::hstack(p.left().gens, p.dim(), p.characteristic());
      return descend(ambient, tp.projection(), tp.section(), "R⊗P -> P");
    }

  }  // namespace

  Module tensor_with_bimodule(Module const& m, Bimodule const& p) {
    TensorProduct const tp = product(m, p);
    Matrix const        im = Matrix::identity(m.dim(), m.characteristic());
    Action              act{Side::right, {}};
    for (auto const& g : p.right().gens) {
      act.gens.push_back(tp.induce(im, g));
    }
    return Module(m.algebra(), tp.dim(), std::move(act));
  }

  NaturalFamily induce_family(Bimodule const&            p,
                              Bimodule const&            q,
                              Matrix const&              f,
                              std::vector<Module> const& objects) {
    if (f.rows() != q.dim() || f.cols() != p.dim()) {
      throw DimensionMismatch("induce_family: map has the wrong shape");
    }
    NaturalFamily family{p, q, objects, {}};
    for (auto const& m : objects) {
      family.components.push_back(tensor_maps(product(m, p), product(m, q),
                                              Matrix::identity(m.dim(), m.characteristic()),
                                              f));
    }
    return family;
  }

  Matrix nat_to_bimodule_hom(NaturalFamily const& family) {
    check_family(family);
    Bimodule const& p       = family.p;
    Bimodule const& q       = family.q;
    Module const    regular = Module::right_regular(p.algebra());
    std::size_t     at      = family.objects.size();
    for (std::size_t i = 0; i < family.objects.size(); ++i) {
      if (family.objects[i] == regular) {
        at = i;
        break;
      }
    }
    if (at == family.objects.size()) {
      throw InvalidStructure("natural family: the objects must include R");
    }

    TensorProduct const rp = product(regular, p);
    TensorProduct const rq = product(regular, q);
    Matrix const        up = contraction(p, rp);
    Matrix const        uq = contraction(q, rq);
    auto const          up_inv = up.inverse();
    if (!up_inv) {
      throw InvalidStructure("R⊗P -> P is not invertible; P is not unital on the left");
    }
    Matrix const f = uq * family.components[at] * *up_inv;

    for (std::size_t a = 0; a < p.left().gens.size(); ++a) {
      if (f * p.left().gens[a] != q.left().gens[a] * f) {
        throw NotBalanced("extracted map does not commute with the left action of e"
                          + std::to_string(a));
      }
      if (f * p.right().gens[a] != q.right().gens[a] * f) {
        throw NotBalanced("extracted map does not commute with the right action of e"
                          + std::to_string(a));
      }
    }

    Matrix const ip = Matrix::identity(p.dim(), p.characteristic());
    Matrix const iq = Matrix::identity(q.dim(), q.characteristic());
    std::vector<TensorProduct> mp, mq;
    for (auto const& m : family.objects) {
      mp.push_back(product(m, p));
      mq.push_back(product(m, q));
    }
    for (std::size_t i = 0; i < family.objects.size(); ++i) {
      for (std::size_t j = 0; j < family.objects.size(); ++j) {
        Module const& m = family.objects[i];
        Module const& n = family.objects[j];
        for (auto const& h : hom_modules(m, n)) {
          Matrix lhs = family.components[j] * tensor_maps(mp[i], mp[j], h, ip);
          Matrix rhs = tensor_maps(mq[i], mq[j], h, iq) * family.components[i];
          if (lhs != rhs) {
            throw NotNatural("natural family: square for a map " + m.name() + " -> "
                             + n.name() + " does not commute");
          }
        }
      }
    }
    return f;
  }

  bool reconstructs(NaturalFamily const& family, Matrix const& f) {
    NaturalFamily const rebuilt = induce_family(family.p, family.q, f, family.objects);
    return rebuilt.components == family.components;
  }

}  // namespace monocat
