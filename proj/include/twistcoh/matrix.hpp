#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace twistcoh {

  using IntVector = std::vector<Integer>;

  // Dense row-major matrix of unbounded integers. Zero-sized dimensions are
  // allowed and behave as expected under products and stacking.
  class IntMatrix {
   public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _entries(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows)
        : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
      _entries.reserve(_rows * _cols);
      for (auto const& row : rows) {
        if (row.size() != _cols) {
          throw DimensionError("ragged matrix literal");
        }
        _entries.insert(_entries.end(), row.begin(), row.end());
      }
    }

    static IntMatrix identity(std::size_t n) {
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    static IntMatrix zero(std::size_t rows, std::size_t cols) {
      return IntMatrix(rows, cols);
    }

    static IntMatrix scalar(std::size_t n, Integer const& value) {
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = value;
      }
      return m;
    }

    static IntMatrix diagonal(std::span<Integer const> values) {
      IntMatrix m(values.size(), values.size());
      for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
      }
      return m;
    }

    // `rows` is required so that an empty column list still has a shape.
    static IntMatrix from_columns(std::size_t                   rows,
                                  std::vector<IntVector> const& columns) {
      IntMatrix m(rows, columns.size());
      for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) {
          throw DimensionError("column has wrong length");
        }
        for (std::size_t i = 0; i < rows; ++i) {
          m(i, j) = columns[j][i];
        }
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool square() const noexcept {
      return _rows == _cols;
    }

    Integer& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _cols + j];
    }
    Integer const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }

    IntVector row(std::size_t i) const {
      return IntVector(_entries.begin() + i * _cols,
                       _entries.begin() + (i + 1) * _cols);
    }

    IntVector column(std::size_t j) const {
      IntVector c(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        c[i] = (*this)(i, j);
      }
      return c;
    }

    std::vector<IntVector> columns() const {
      std::vector<IntVector> result;
      result.reserve(_cols);
      for (std::size_t j = 0; j < _cols; ++j) {
        result.push_back(column(j));
      }
      return result;
    }

    bool is_zero() const {
      return std::all_of(
          _entries.begin(), _entries.end(), [](Integer const& x) { return x == 0; });
    }

    IntMatrix transposed() const {
      IntMatrix t(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    IntMatrix block(std::size_t row0,
                    std::size_t col0,
                    std::size_t nrows,
                    std::size_t ncols) const {
      if (row0 + nrows > _rows || col0 + ncols > _cols) {
        throw DimensionError("block out of range");
      }
      IntMatrix b(nrows, ncols);
      for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) {
          b(i, j) = (*this)(row0 + i, col0 + j);
        }
      }
      return b;
    }

    void set_block(std::size_t row0, std::size_t col0, IntMatrix const& b) {
      if (row0 + b.rows() > _rows || col0 + b.cols() > _cols) {
        throw DimensionError("block out of range");
      }
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
          (*this)(row0 + i, col0 + j) = b(i, j);
        }
      }
    }

    // Entries reduced into [0, modulus); modulus 0 leaves the matrix as is.
    IntMatrix reduced(Integer const& modulus) const {
      IntMatrix r = *this;
      if (modulus != 0) {
        for (auto& x : r._entries) {
          x = floor_mod(x, modulus);
        }
      }
      return r;
    }

    // Elementary operations, used by the Smith normal form.
    void swap_rows(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t j = 0; j < _cols; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
      }
    }
    void swap_cols(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t i = 0; i < _rows; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
      }
    }
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, Integer const& k) {
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(dst, j) += k * (*this)(src, j);
      }
    }
    // col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, Integer const& k) {
      for (std::size_t i = 0; i < _rows; ++i) {
        (*this)(i, dst) += k * (*this)(i, src);
      }
    }
    void negate_row(std::size_t i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(i, j) = -(*this)(i, j);
      }
    }
    void negate_col(std::size_t j) {
      for (std::size_t i = 0; i < _rows; ++i) {
        (*this)(i, j) = -(*this)(i, j);
      }
    }

    IntMatrix& operator+=(IntMatrix const& other) {
      require_same_shape(other);
      for (std::size_t k = 0; k < _entries.size(); ++k) {
        _entries[k] += other._entries[k];
      }
      return *this;
    }
    IntMatrix& operator-=(IntMatrix const& other) {
      require_same_shape(other);
      for (std::size_t k = 0; k < _entries.size(); ++k) {
        _entries[k] -= other._entries[k];
      }
      return *this;
    }
    IntMatrix& operator*=(Integer const& k) {
      for (auto& x : _entries) {
        x *= k;
      }
      return *this;
    }

    friend IntMatrix operator+(IntMatrix a, IntMatrix const& b) {
      return a += b;
    }
    friend IntMatrix operator-(IntMatrix a, IntMatrix const& b) {
      return a -= b;
    }
    friend IntMatrix operator*(Integer const& k, IntMatrix a) {
      return a *= k;
    }
    friend IntMatrix operator-(IntMatrix a) {
      return a *= Integer(-1);
    }

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
      if (a._cols != b._rows) {
        throw DimensionError("matrix product: inner dimensions differ ("
                             + std::to_string(a._cols) + " vs "
                             + std::to_string(b._rows) + ")");
      }
      IntMatrix c(a._rows, b._cols);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          Integer const& aik = a(i, k);
          if (aik == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            c(i, j) += aik * b(k, j);
          }
        }
      }
      return c;
    }

    friend IntVector operator*(IntMatrix const& a, IntVector const& v) {
      if (a._cols != v.size()) {
        throw DimensionError("matrix-vector product: length mismatch");
      }
      IntVector out(a._rows);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          out[i] += a(i, k) * v[k];
        }
      }
      return out;
    }

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

    friend std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
      os << '[';
      for (std::size_t i = 0; i < m._rows; ++i) {
        if (i != 0) {
          os << "; ";
        }
        for (std::size_t j = 0; j < m._cols; ++j) {
          if (j != 0) {
            os << ' ';
          }
          os << m(i, j);
        }
      }
      return os << ']';
    }

   private:
    void require_same_shape(IntMatrix const& other) const {
      if (_rows != other._rows || _cols != other._cols) {
        throw DimensionError("matrix shapes differ");
      }
    }

    std::size_t          _rows = 0;
    std::size_t          _cols = 0;
    std::vector<Integer> _entries;
  };

  inline std::string to_string(IntMatrix const& m) {
    std::ostringstream os;
    os << m;
    return os.str();
  }

  inline IntMatrix hstack(std::vector<IntMatrix> const& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (auto const& b : blocks) {
      if (b.rows() != rows) {
        throw DimensionError("hstack: row counts differ");
      }
      cols += b.cols();
    }
    IntMatrix out(rows, cols);
    std::size_t col = 0;
    for (auto const& b : blocks) {
      out.set_block(0, col, b);
      col += b.cols();
    }
    return out;
  }

  inline IntMatrix vstack(std::vector<IntMatrix> const& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (auto const& b : blocks) {
      if (b.cols() != cols) {
        throw DimensionError("vstack: column counts differ");
      }
      rows += b.rows();
    }
    IntMatrix out(rows, cols);
    std::size_t row = 0;
    for (auto const& b : blocks) {
      out.set_block(row, 0, b);
      row += b.rows();
    }
    return out;
  }

  // Fraction-free Bareiss elimination; exact for any square integer matrix.
  inline Integer determinant(IntMatrix m) {
    if (!m.square()) {
      throw DimensionError("determinant of a non-square matrix");
    }
    std::size_t const n = m.rows();
    if (n == 0) {
      return 1;
    }
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && m(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        m.swap_rows(k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

  // adj(M) with M * adj(M) = det(M) * I.
  inline IntMatrix adjugate(IntMatrix const& m) {
    if (!m.square()) {
      throw DimensionError("adjugate of a non-square matrix");
    }
    std::size_t const n = m.rows();
    IntMatrix         adj(n, n);
    if (n == 1) {
      adj(0, 0) = 1;
      return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
          if (r == i) {
            continue;
          }
          for (std::size_t c = 0, mc = 0; c < n; ++c) {
            if (c == j) {
              continue;
            }
            minor(mr, mc++) = m(r, c);
          }
          ++mr;
        }
        Integer cof = determinant(std::move(minor));
        adj(j, i)   = (i + j) % 2 == 0 ? cof : Integer(-cof);
      }
    }
    return adj;
  }

}  // namespace twistcoh
