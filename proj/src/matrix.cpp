#include "monocat/matrix.hpp"

#include <sstream>

#include "monocat/errors.hpp"

namespace monocat {

  Matrix::Matrix(std::size_t rows, std::size_t cols, Characteristic p)
      : _rows(rows), _cols(cols), _p(p), _data(rows * cols, Scalar::zero(p)) {
    check_characteristic(p);
  }

  Matrix Matrix::identity(std::size_t n, Characteristic p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = Scalar::one(p);
    }
    return m;
  }

  Matrix Matrix::from_rows(std::vector<std::vector<long>> const& rows,
                           Characteristic                        p) {
    std::size_t const ncols = rows.empty() ? 0 : rows.front().size();
    Matrix            m(rows.size(), ncols, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != ncols) {
        throw DimensionMismatch("ragged rows in matrix literal");
      }
      for (std::size_t j = 0; j < ncols; ++j) {
        m(i, j) = Scalar(rows[i][j], p);
      }
    }
    return m;
  }

  bool Matrix::is_zero() const {
    for (auto const& x : _data) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool Matrix::is_identity() const {
    if (!is_square()) {
      return false;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  void Matrix::check_same_shape(Matrix const& that, char const* op) const {
    if (_rows != that._rows || _cols != that._cols) {
      throw DimensionMismatch(std::string(op) + ": shapes "
                              + std::to_string(_rows) + "x"
                              + std::to_string(_cols) + " and "
                              + std::to_string(that._rows) + "x"
                              + std::to_string(that._cols));
    }
    if (_p != that._p) {
      throw FieldMismatch(std::string(op) + ": different characteristics");
    }
  }

  Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a._cols != b._rows) {
      throw DimensionMismatch("product of " + std::to_string(a._rows) + "x"
                              + std::to_string(a._cols) + " and "
                              + std::to_string(b._rows) + "x"
                              + std::to_string(b._cols));
    }
    if (a._p != b._p) {
      throw FieldMismatch("product: different characteristics");
    }
    Matrix c(a._rows, b._cols, a._p);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        Scalar const& x = a(i, k);
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          Scalar const& y = b(k, j);
          if (!y.is_zero()) {
            c(i, j) += x * y;
          }
        }
      }
    }
    return c;
  }

  Matrix operator+(Matrix const& a, Matrix const& b) {
    a.check_same_shape(b, "sum");
    Matrix c(a);
    for (std::size_t i = 0; i < c._data.size(); ++i) {
      c._data[i] += b._data[i];
    }
    return c;
  }

  Matrix operator-(Matrix const& a, Matrix const& b) {
    a.check_same_shape(b, "difference");
    Matrix c(a);
    for (std::size_t i = 0; i < c._data.size(); ++i) {
      c._data[i] -= b._data[i];
    }
    return c;
  }

  Matrix operator*(Scalar const& s, Matrix const& a) {
    Matrix c(a);
    for (auto& x : c._data) {
      x *= s;
    }
    return c;
  }

  Matrix Matrix::operator-() const {
    Matrix c(*this);
    for (auto& x : c._data) {
      x = -x;
    }
    return c;
  }

  bool operator==(Matrix const& a, Matrix const& b) {
    return a._rows == b._rows && a._cols == b._cols && a._p == b._p
           && a._data == b._data;
  }

  Matrix Matrix::transpose() const {
    Matrix t(_cols, _rows, _p);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  Matrix Matrix::column(std::size_t j) const {
    return block(0, j, _rows, 1);
  }

  Matrix Matrix::block(std::size_t r0,
                       std::size_t c0,
                       std::size_t nrows,
                       std::size_t ncols) const {
    if (r0 + nrows > _rows || c0 + ncols > _cols) {
      throw DimensionMismatch("block out of range");
    }
    Matrix b(nrows, ncols, _p);
    for (std::size_t i = 0; i < nrows; ++i) {
      for (std::size_t j = 0; j < ncols; ++j) {
        b(i, j) = (*this)(r0 + i, c0 + j);
      }
    }
    return b;
  }

  void Matrix::set_block(std::size_t r0, std::size_t c0, Matrix const& b) {
    if (r0 + b._rows > _rows || c0 + b._cols > _cols) {
      throw DimensionMismatch("set_block out of range");
    }
    for (std::size_t i = 0; i < b._rows; ++i) {
      for (std::size_t j = 0; j < b._cols; ++j) {
        (*this)(r0 + i, c0 + j) = b(i, j);
      }
    }
  }

  Matrix Matrix::kron(Matrix const& that) const {
    if (_p != that._p) {
      throw FieldMismatch("kron: different characteristics");
    }
    Matrix k(_rows * that._rows, _cols * that._cols, _p);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        Scalar const& x = (*this)(i, j);
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t a = 0; a < that._rows; ++a) {
          for (std::size_t b = 0; b < that._cols; ++b) {
            k(i * that._rows + a, j * that._cols + b) = x * that(a, b);
          }
        }
      }
    }
    return k;
  }

  Matrix Matrix::hstack(std::vector<Matrix> const& blocks,
                        std::size_t                rows,
                        Characteristic             p) {
    std::size_t cols = 0;
    for (auto const& b : blocks) {
      if (b.rows() != rows) {
        throw DimensionMismatch("hstack: row count mismatch");
      }
      cols += b.cols();
    }
    Matrix      m(rows, cols, p);
    std::size_t c = 0;
    for (auto const& b : blocks) {
      m.set_block(0, c, b);
      c += b.cols();
    }
    return m;
  }

  Matrix Matrix::vstack(std::vector<Matrix> const& blocks,
                        std::size_t                cols,
                        Characteristic             p) {
    std::size_t rows = 0;
    for (auto const& b : blocks) {
      if (b.cols() != cols) {
        throw DimensionMismatch("vstack: column count mismatch");
      }
      rows += b.rows();
    }
    Matrix      m(rows, cols, p);
    std::size_t r = 0;
    for (auto const& b : blocks) {
      m.set_block(r, 0, b);
      r += b.rows();
    }
    return m;
  }

  Echelon Matrix::rref() const {
    Echelon     e{*this, {}};
    Matrix&     m   = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < _cols && row < _rows; ++col) {
      std::size_t piv = row;
      while (piv < _rows && m(piv, col).is_zero()) {
        ++piv;
      }
      if (piv == _rows) {
        continue;
      }
      if (piv != row) {
        for (std::size_t j = 0; j < _cols; ++j) {
          std::swap(m(piv, j), m(row, j));
        }
      }
      Scalar const inv = m(row, col).inverse();
      for (std::size_t j = col; j < _cols; ++j) {
        m(row, j) *= inv;
      }
      for (std::size_t i = 0; i < _rows; ++i) {
        if (i == row || m(i, col).is_zero()) {
          continue;
        }
        Scalar const f = m(i, col);
        for (std::size_t j = col; j < _cols; ++j) {
          if (!m(row, j).is_zero()) {
            m(i, j) -= f * m(row, j);
          }
        }
      }
      e.pivots.push_back(col);
      ++row;
    }
    return e;
  }

  std::size_t Matrix::rank() const {
    return rref().pivots.size();
  }

  Matrix Matrix::kernel_basis() const {
    auto const               e = rref();
    std::vector<bool>        is_pivot(_cols, false);
    std::vector<std::size_t> free;
    for (auto c : e.pivots) {
      is_pivot[c] = true;
    }
    for (std::size_t c = 0; c < _cols; ++c) {
      if (!is_pivot[c]) {
        free.push_back(c);
      }
    }
    Matrix k(_cols, free.size(), _p);
    for (std::size_t f = 0; f < free.size(); ++f) {
      k(free[f], f) = Scalar::one(_p);
      for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        k(e.pivots[r], f) = -e.reduced(r, free[f]);
      }
    }
    return k;
  }

  std::optional<Matrix> Matrix::inverse() const {
    if (!is_square()) {
      return std::nullopt;
    }
    auto x = solve(identity(_rows, _p));
    if (x && rank() == _rows) {
      return x;
    }
    return std::nullopt;
  }

  std::optional<Matrix> Matrix::solve(Matrix const& rhs) const {
    if (rhs.rows() != _rows) {
      throw DimensionMismatch("solve: right-hand side has wrong row count");
    }
    Matrix aug = hstack({*this, rhs}, _rows, _p);
    auto   e   = aug.rref();
    Matrix x(_cols, rhs.cols(), _p);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      std::size_t const c = e.pivots[r];
      if (c >= _cols) {
        return std::nullopt;  // inconsistent
      }
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        x(c, j) = e.reduced(r, _cols + j);
      }
    }
    return x;
  }

  std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < _rows; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < _cols; ++j) {
        os << (j ? "," : "") << (*this)(i, j).to_string();
      }
      os << "]";
    }
    os << "]";
    return os.str();
  }

}  // namespace monocat
