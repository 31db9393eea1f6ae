#include "monocat/algebra.hpp"

#include "monocat/errors.hpp"

namespace monocat {

  ////////////////////////////////////////////////////////////////////////
  // Algebra
  ////////////////////////////////////////////////////////////////////////

  Algebra::Algebra(std::string name, Matrix mult, Matrix unit)
      : _name(std::move(name)), _mult(std::move(mult)), _unit(std::move(unit)) {
    std::size_t const n = _unit.rows();
    if (_unit.cols() != 1 || _mult.rows() != n || _mult.cols() != n * n) {
      throw DimensionMismatch("algebra structure constants have wrong shape");
    }
    Characteristic const p = characteristic();
    for (std::size_t i = 0; i < n; ++i) {
      Matrix const li = left_multiplication(i);
      for (std::size_t j = 0; j < n; ++j) {
        Matrix lij(n, n, p);
        for (std::size_t k = 0; k < n; ++k) {
          if (!coefficient(i, j, k).is_zero()) {
            lij = lij + coefficient(i, j, k) * left_multiplication(k);
          }
        }
        if (!(lij == li * left_multiplication(j))) {
          throw InvalidStructure("algebra " + _name
                                 + " is not associative at (e"
                                 + std::to_string(i) + ", e"
                                 + std::to_string(j) + ", -)");
        }
      }
    }
    if (!left_multiplication_by(_unit).is_identity()) {
      throw InvalidStructure("algebra " + _name + ": unit is not a left unit");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!(multiply(basis_vector(i), _unit) == basis_vector(i))) {
        throw InvalidStructure("algebra " + _name
                               + ": unit is not a right unit");
      }
    }
  }

  Algebra Algebra::from_table(
      std::string                                        name,
      std::vector<std::vector<std::vector<long>>> const& table,
      std::vector<long> const&                           unit,
      Characteristic                                     p) {
    std::size_t const n = unit.size();
    Matrix            mult(n, n * n, p);
    if (table.size() != n) {
      throw DimensionMismatch("multiplication table has wrong size");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw DimensionMismatch("multiplication table has wrong size");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j].size() != n) {
          throw DimensionMismatch("multiplication table has wrong size");
        }
        for (std::size_t k = 0; k < n; ++k) {
          mult(k, i * n + j) = Scalar(table[i][j][k], p);
        }
      }
    }
    Matrix u(n, 1, p);
    for (std::size_t i = 0; i < n; ++i) {
      u(i, 0) = Scalar(unit[i], p);
    }
    return Algebra(std::move(name), std::move(mult), std::move(u));
  }

  Matrix Algebra::multiply(Matrix const& a, Matrix const& b) const {
    return _mult * a.kron(b);
  }

  Matrix Algebra::left_multiplication(std::size_t i) const {
    std::size_t const n = dim();
    Matrix            l(n, n, characteristic());
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        l(k, j) = coefficient(i, j, k);
      }
    }
    return l;
  }

  Matrix Algebra::right_multiplication(std::size_t i) const {
    std::size_t const n = dim();
    Matrix            r(n, n, characteristic());
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        r(k, j) = coefficient(j, i, k);
      }
    }
    return r;
  }

  Matrix Algebra::left_multiplication_by(Matrix const& a) const {
    Matrix l(dim(), dim(), characteristic());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!a(i, 0).is_zero()) {
        l = l + a(i, 0) * left_multiplication(i);
      }
    }
    return l;
  }

  Matrix Algebra::basis_vector(std::size_t i) const {
    Matrix v(dim(), 1, characteristic());
    v(i, 0) = Scalar::one(characteristic());
    return v;
  }

  bool Algebra::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = i + 1; j < dim(); ++j) {
        for (std::size_t k = 0; k < dim(); ++k) {
          if (!(coefficient(i, j, k) == coefficient(j, i, k))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Actions
  ////////////////////////////////////////////////////////////////////////

  Matrix Action::of(Matrix const& a) const {
    if (gens.empty() || a.rows() != gens.size()) {
      throw DimensionMismatch("action: element has wrong dimension");
    }
    Matrix m(gens[0].rows(), gens[0].cols(), gens[0].characteristic());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!a(i, 0).is_zero()) {
        m = m + a(i, 0) * gens[i];
      }
    }
    return m;
  }

  std::optional<std::string> action_defect(Algebra const& alg,
                                           Action const&  act,
                                           std::size_t    dim) {
    std::size_t const n = alg.dim();
    if (act.gens.size() != n) {
      return "action has " + std::to_string(act.gens.size())
             + " generators for an algebra of dimension " + std::to_string(n);
    }
    for (auto const& g : act.gens) {
      if (g.rows() != dim || g.cols() != dim) {
        return std::string("action matrix has wrong shape");
      }
    }
    if (n == 0) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Matrix const prod = alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
        Matrix const lhs  = act.side == Side::right ? act.gens[j] * act.gens[i]
                                                    : act.gens[i] * act.gens[j];
        if (!(lhs == act.of(prod))) {
          return "action does not respect e" + std::to_string(i) + "·e"
                 + std::to_string(j);
        }
      }
    }
    if (!act.of(alg.unit()).is_identity()) {
      return std::string("unit does not act as the identity");
    }
    return std::nullopt;
  }

  std::optional<std::string> commutation_defect(Action const& a,
                                                Action const& b) {
    for (std::size_t i = 0; i < a.gens.size(); ++i) {
      for (std::size_t j = 0; j < b.gens.size(); ++j) {
        if (!(a.gens[i] * b.gens[j] == b.gens[j] * a.gens[i])) {
          return "generator " + std::to_string(i) + " of one action and "
                 + std::to_string(j) + " of the other do not commute";
        }
      }
    }
    return std::nullopt;
  }

  void require_same_algebra(AlgebraPtr const& a, AlgebraPtr const& b) {
    if (a != b && !(*a == *b)) {
      throw AlgebraMismatch("objects live over different algebras ("
                            + a->name() + ", " + b->name() + ")");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Module, Bimodule
  ////////////////////////////////////////////////////////////////////////

  Module::Module(AlgebraPtr alg, std::size_t dim, Action action, std::string name)
      : _alg(std::move(alg)),
        _dim(dim),
        _action(std::move(action)),
        _name(std::move(name)) {
    if (auto d = action_defect(*_alg, _action, _dim)) {
      throw InvalidStructure("module " + _name + ": " + *d);
    }
  }

  Module Module::right_regular(AlgebraPtr const& alg) {
    Action a{Side::right, {}};
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      a.gens.push_back(alg->right_multiplication(i));
    }
    return Module(alg, alg->dim(), std::move(a), "R");
  }

  Module Module::left_regular(AlgebraPtr const& alg) {
    Action a{Side::left, {}};
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      a.gens.push_back(alg->left_multiplication(i));
    }
    return Module(alg, alg->dim(), std::move(a), "R");
  }

  Module Module::zero(AlgebraPtr const& alg, Side side) {
    Action a{side, std::vector<Matrix>(alg->dim(), Matrix(0, 0, alg->characteristic()))};
    return Module(alg, 0, std::move(a), "0");
  }

  Module Module::as_side(Side side) const {
    Action a = _action;
    a.side   = side;
    return Module(_alg, _dim, std::move(a), _name);
  }

  Module Module::renamed(std::string name) const {
    Module m(*this);
    m._name = std::move(name);
    return m;
  }

  bool operator==(Module const& a, Module const& b) {
    return a._dim == b._dim && a._action == b._action
           && (a._alg == b._alg || *a._alg == *b._alg);
  }

  Bimodule::Bimodule(AlgebraPtr  alg,
                     std::size_t dim,
                     Action      left,
                     Action      right,
                     std::string name)
      : _alg(std::move(alg)),
        _dim(dim),
        _left(std::move(left)),
        _right(std::move(right)),
        _name(std::move(name)) {
    _left.side  = Side::left;
    _right.side = Side::right;
    if (auto d = action_defect(*_alg, _left, _dim)) {
      throw InvalidStructure("bimodule " + _name + " (left): " + *d);
    }
    if (auto d = action_defect(*_alg, _right, _dim)) {
      throw InvalidStructure("bimodule " + _name + " (right): " + *d);
    }
    if (auto d = commutation_defect(_left, _right)) {
      throw InvalidStructure("bimodule " + _name + ": " + *d);
    }
  }

  Bimodule Bimodule::regular(AlgebraPtr const& alg) {
    return Bimodule(alg,
                    alg->dim(),
                    Module::left_regular(alg).action(),
                    Module::right_regular(alg).action(),
                    "R");
  }

  bool operator==(Bimodule const& a, Bimodule const& b) {
    return a._dim == b._dim && a._left == b._left && a._right == b._right
           && (a._alg == b._alg || *a._alg == *b._alg);
  }

  bool ModuleMap::is_equivariant() const {
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
      return false;
    }
    auto const& s = source.action().gens;
    auto const& t = target.action().gens;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!(matrix * s[i] == t[i] * matrix)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tensor products over R
  ////////////////////////////////////////////////////////////////////////

  Matrix TensorProduct::induce(Matrix const& a, Matrix const& b) const {
    return quotient.projection * a.kron(b) * quotient.section;
  }

  TensorProduct balanced_tensor(std::size_t    left_dim,
                                Action const&  right_action_on_left,
                                std::size_t    right_dim,
                                Action const&  left_action_on_right,
                                Characteristic p) {
    auto const& ra = right_action_on_left.gens;
    auto const& la = left_action_on_right.gens;
    if (ra.size() != la.size()) {
      throw AlgebraMismatch("balanced tensor: actions of different algebras");
    }
    std::size_t const n = left_dim * right_dim;
    std::vector<Matrix> blocks;
    blocks.reserve(ra.size());
    Matrix const ix = Matrix::identity(left_dim, p);
    Matrix const iy = Matrix::identity(right_dim, p);
    for (std::size_t a = 0; a < ra.size(); ++a) {
      // column (i, j) of this block is x_i·e_a ⊗ y_j − x_i ⊗ e_a·y_j
      blocks.push_back(ra[a].kron(iy) - ix.kron(la[a]));
    }
    TensorProduct t;
    t.left_dim  = left_dim;
    t.right_dim = right_dim;
    t.quotient  = cokernel(Matrix::hstack(blocks, n, p), n, p);
    return t;
  }

  TensorProduct tensor_over(Module const& x, Module const& y) {
    require_same_algebra(x.algebra(), y.algebra());
    if (x.side() != Side::right || y.side() != Side::left) {
      throw InvalidStructure("tensor_over needs a right module and a left module");
    }
    return balanced_tensor(
        x.dim(), x.action(), y.dim(), y.action(), x.characteristic());
  }

  Matrix tensor_maps(TensorProduct const& src,
                     TensorProduct const& dst,
                     Matrix const&        f,
                     Matrix const&        g) {
    if (f.cols() != src.left_dim || g.cols() != src.right_dim
        || f.rows() != dst.left_dim || g.rows() != dst.right_dim) {
      throw DimensionMismatch("tensor_maps: factors do not match the products");
    }
    return dst.projection() * f.kron(g) * src.section();
  }

  BimoduleTensor bimodule_tensor_with_product(Bimodule const& m,
                                              Bimodule const& n) {
    require_same_algebra(m.algebra(), n.algebra());
    Characteristic const p  = m.characteristic();
    TensorProduct        tp = balanced_tensor(m.dim(), m.right(), n.dim(), n.left(), p);
    Matrix const         im = Matrix::identity(m.dim(), p);
    Matrix const         in = Matrix::identity(n.dim(), p);
    Action               left{Side::left, {}}, right{Side::right, {}};
    for (std::size_t a = 0; a < m.algebra()->dim(); ++a) {
      left.gens.push_back(tp.induce(m.left().gens[a], in));
      right.gens.push_back(tp.induce(im, n.right().gens[a]));
    }
    std::string name = "(" + m.name() + "⊗" + n.name() + ")";
    return BimoduleTensor{
        Bimodule(m.algebra(), tp.dim(), std::move(left), std::move(right), name),
        std::move(tp)};
  }

  Bimodule bimodule_tensor(Bimodule const& m, Bimodule const& n) {
    return bimodule_tensor_with_product(m, n).result;
  }

  Matrix canonical_rebracketing(Bimodule const& m,
                                Bimodule const& n,
                                Bimodule const& p) {
    Characteristic const ch = m.characteristic();
    auto const           mn = bimodule_tensor_with_product(m, n);
    auto const           mn_p = bimodule_tensor_with_product(mn.result, p);
    auto const           np   = bimodule_tensor_with_product(n, p);
    auto const           m_np = bimodule_tensor_with_product(m, np.result);
    return m_np.product.projection()
           * Matrix::identity(m.dim(), ch).kron(np.product.projection())
           * mn.product.section().kron(Matrix::identity(p.dim(), ch))
           * mn_p.product.section();
  }

  Matrix left_unitor(Bimodule const& m) {
    auto const r  = Bimodule::regular(m.algebra());
    auto const tp = bimodule_tensor_with_product(r, m);
    std::vector<Matrix> blocks(m.left().gens.begin(), m.left().gens.end());
    return Matrix::hstack(blocks, m.dim(), m.characteristic())
           * tp.product.section();
  }

  Matrix right_unitor(Bimodule const& m) {
    auto const           r  = Bimodule::regular(m.algebra());
    auto const           tp = bimodule_tensor_with_product(m, r);
    std::size_t const    n  = m.algebra()->dim();
    Characteristic const p  = m.characteristic();
    Matrix               raw(m.dim(), m.dim() * n, p);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      for (std::size_t a = 0; a < n; ++a) {
        raw.set_block(0, j * n + a, m.right().gens[a].column(j));
      }
    }
    return raw * tp.product.section();
  }

  ////////////////////////////////////////////////////////////////////////
  // Hom spaces
  ////////////////////////////////////////////////////////////////////////

  std::vector<Matrix> intertwiners(
      std::vector<std::pair<Matrix, Matrix>> const& pairs,
      std::size_t                                   dim_x,
      std::size_t                                   dim_y,
      Characteristic                                p) {
    std::size_t const   unknowns = dim_x * dim_y;
    std::vector<Matrix> eqs;
    Matrix const        ix = Matrix::identity(dim_x, p);
    Matrix const        iy = Matrix::identity(dim_y, p);
    for (auto const& [a, b] : pairs) {
      // row-major vec(F a) = (I ⊗ aᵀ) vec(F), vec(b F) = (b ⊗ I) vec(F)
      eqs.push_back(iy.kron(a.transpose()) - b.kron(ix));
    }
    Matrix sys = eqs.empty() ? Matrix(0, unknowns, p)
                             : Matrix::vstack(eqs, unknowns, p);
    Matrix basis = eqs.empty() ? Matrix::identity(unknowns, p) : sys.kernel_basis();
    std::vector<Matrix> result;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      Matrix f(dim_y, dim_x, p);
      for (std::size_t r = 0; r < dim_y; ++r) {
        for (std::size_t s = 0; s < dim_x; ++s) {
          f(r, s) = basis(r * dim_x + s, c);
        }
      }
      result.push_back(std::move(f));
    }
    return result;
  }

  std::vector<Matrix> hom_modules(Module const& x, Module const& y) {
    require_same_algebra(x.algebra(), y.algebra());
    if (x.side() != y.side()) {
      throw InvalidStructure("hom_modules: modules on different sides");
    }
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (std::size_t a = 0; a < x.action().gens.size(); ++a) {
      pairs.emplace_back(x.action().gens[a], y.action().gens[a]);
    }
    return intertwiners(pairs, x.dim(), y.dim(), x.characteristic());
  }

  std::vector<Matrix> hom_bimodules(Bimodule const& x, Bimodule const& y) {
    require_same_algebra(x.algebra(), y.algebra());
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (std::size_t a = 0; a < x.left().gens.size(); ++a) {
      pairs.emplace_back(x.left().gens[a], y.left().gens[a]);
      pairs.emplace_back(x.right().gens[a], y.right().gens[a]);
    }
    return intertwiners(pairs, x.dim(), y.dim(), x.characteristic());
  }

  bool is_zero(Module const& m) noexcept {
    return m.dim() == 0;
  }

  bool is_zero(Bimodule const& m) noexcept {
    return m.dim() == 0;
  }

  Module direct_sum(Module const& a, Module const& b) {
    require_same_algebra(a.algebra(), b.algebra());
    if (a.side() != b.side()) {
      throw InvalidStructure("direct_sum: modules on different sides");
    }
    Characteristic const p = a.characteristic();
    Action               act{a.side(), {}};
    for (std::size_t i = 0; i < a.action().gens.size(); ++i) {
      Matrix g(a.dim() + b.dim(), a.dim() + b.dim(), p);
      g.set_block(0, 0, a.action().gens[i]);
      g.set_block(a.dim(), a.dim(), b.action().gens[i]);
      act.gens.push_back(std::move(g));
    }
    return Module(a.algebra(),
                  a.dim() + b.dim(),
                  std::move(act),
                  a.name() + "⊕" + b.name());
  }

  Bimodule direct_sum(Bimodule const& a, Bimodule const& b) {
    Module const left  = direct_sum(a.left_module(), b.left_module());
    Module const right = direct_sum(a.right_module(), b.right_module());
    return Bimodule(a.algebra(), left.dim(), left.action(), right.action(), left.name());
  }

  ModuleQuotient cokernel(ModuleMap const& f) {
    Characteristic const p = f.target.characteristic();
    Quotient const       q = cokernel(f.matrix, f.target.dim(), p);
    Action               act{f.target.side(), {}};
    for (auto const& g : f.target.action().gens) {
      act.gens.push_back(q.projection * g * q.section);
    }
    return ModuleQuotient{
        Module(f.target.algebra(), q.dim, std::move(act), "coker"),
        q.projection};
  }

  Submodule submodule(Module const& m, Matrix const& basis) {
    if (basis.rank() != basis.cols()) {
      throw InvalidStructure("submodule: spanning vectors are dependent");
    }
    Action act{m.side(), {}};
    for (auto const& g : m.action().gens) {
      auto x = basis.solve(g * basis);
      if (!x) {
        throw InvalidStructure("submodule: span is not stable under the action");
      }
      act.gens.push_back(std::move(*x));
    }
    return Submodule{Module(m.algebra(), basis.cols(), std::move(act), "sub"),
                     basis};
  }

  bool is_right_exact(Matrix const& f, Matrix const& g) {
    if (f.rows() != g.cols()) {
      throw DimensionMismatch("is_right_exact: maps are not composable");
    }
    std::size_t const rg = g.rank();
    return (g * f).is_zero() && rg == g.rows() && f.rank() + rg == g.cols();
  }

  bool is_short_exact(Matrix const& f, Matrix const& g) {
    return is_right_exact(f, g) && f.rank() == f.cols();
  }

}  // namespace monocat
