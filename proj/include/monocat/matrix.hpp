#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monocat/scalar.hpp"

namespace monocat {

  // Dense matrix over Q or F_p.  Column vectors are coordinates, so a matrix
  // of a map V -> W has dim W rows and dim V columns.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Characteristic p);

    static Matrix identity(std::size_t n, Characteristic p);
    // Rows given as integers, reduced into the field.
    static Matrix from_rows(std::vector<std::vector<long>> const& rows,
                            Characteristic                        p);

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    [[nodiscard]] Characteristic characteristic() const noexcept {
      return _p;
    }

    Scalar& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Scalar const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] bool is_square() const noexcept {
      return _rows == _cols;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b);
    friend Matrix operator+(Matrix const& a, Matrix const& b);
    friend Matrix operator-(Matrix const& a, Matrix const& b);
    friend Matrix operator*(Scalar const& s, Matrix const& a);
    Matrix        operator-() const;
    friend bool   operator==(Matrix const& a, Matrix const& b);

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Matrix column(std::size_t j) const;
    [[nodiscard]] Matrix block(std::size_t r0,
                               std::size_t c0,
                               std::size_t nrows,
                               std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, Matrix const& b);

    // Kronecker product; basis of the result is ordered (i, j) with the index
    // of the left factor varying slowest.
    [[nodiscard]] Matrix kron(Matrix const& that) const;

    static Matrix hstack(std::vector<Matrix> const& blocks,
                         std::size_t                rows,
                         Characteristic             p);
    static Matrix vstack(std::vector<Matrix> const& blocks,
                         std::size_t                cols,
                         Characteristic             p);

    // Row-reduced echelon form together with the pivot columns.
    [[nodiscard]] struct Echelon rref() const;

    [[nodiscard]] std::size_t rank() const;
    // Columns form a basis of the null space.
    [[nodiscard]] Matrix                kernel_basis() const;
    [[nodiscard]] std::optional<Matrix> inverse() const;
    // Some X with (*this) * X == rhs, if one exists.
    [[nodiscard]] std::optional<Matrix> solve(Matrix const& rhs) const;

    [[nodiscard]] std::string to_string() const;

   private:
    void check_same_shape(Matrix const& that, char const* op) const;

    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    Characteristic      _p    = 0;
    std::vector<Scalar> _data;
  };

  struct Echelon {
    Matrix                   reduced;
    std::vector<std::size_t> pivots;
  };

}  // namespace monocat
