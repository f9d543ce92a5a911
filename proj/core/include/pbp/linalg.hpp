#ifndef PBP_LINALG_HPP_
#define PBP_LINALG_HPP_

// Dense exact linear algebra over the rationals.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pbp {

  using Rational = mpq_class;
  using Integer  = mpz_class;
  using QVector  = std::vector<Rational>;

  /// Parses "p/q", "p" or "-p/q".
  Rational parse_rational(std::string const& text);
  std::string to_string(Rational const& q);

  class QMatrix {
   public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(std::vector<QVector> const& rows, std::size_t cols);

    std::size_t rows() const noexcept { return _rows; }
    std::size_t cols() const noexcept { return _cols; }

    Rational& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    QVector row(std::size_t i) const;
    QVector column(std::size_t j) const;
    QMatrix transpose() const;
    bool is_zero() const;

    friend QMatrix operator*(QMatrix const& a, QMatrix const& b);
    friend QVector operator*(QMatrix const& a, QVector const& v);
    friend QMatrix operator+(QMatrix const& a, QMatrix const& b);
    friend QMatrix operator-(QMatrix const& a, QMatrix const& b);
    friend QMatrix operator*(Rational const& c, QMatrix const& a);
    friend bool    operator==(QMatrix const& a, QMatrix const& b) = default;

   private:
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    std::vector<Rational> _data;
  };

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref(QMatrix& m);
  std::size_t rank(QMatrix m);
  /// Basis (as rows) of {x : m x = 0}.
  std::vector<QVector> nullspace(QMatrix const& m);
  Rational determinant(QMatrix m);

  bool is_zero(QVector const& v);
  QVector add(QVector const& a, QVector const& b);
  QVector scale(Rational const& c, QVector const& v);

  /// A linear subspace of Q^n stored as the rows of its reduced echelon
  /// basis. Two equal subspaces have identical representations.
  class Subspace {
   public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : _ambient(ambient) {}
    Subspace(std::size_t ambient, std::vector<QVector> const& spanning);

    static Subspace whole(std::size_t ambient);

    std::size_t ambient_dim() const noexcept { return _ambient; }
    std::size_t dim() const noexcept { return _basis.size(); }
    bool        is_zero() const noexcept { return _basis.empty(); }
    bool        is_whole() const noexcept { return dim() == _ambient; }

    std::vector<QVector> const& basis() const noexcept { return _basis; }
    std::vector<std::size_t> const& pivots() const noexcept { return _pivots; }

    bool contains(QVector const& v) const;
    bool contains(Subspace const& other) const;
    /// Coordinates of v (which must lie in the subspace) in the echelon basis.
    QVector coordinates(QVector const& v) const;

    Subspace operator+(Subspace const& other) const;
    Subspace intersect(Subspace const& other) const;

    friend bool operator==(Subspace const& a, Subspace const& b) = default;
    friend bool operator<(Subspace const& a, Subspace const& b);

   private:
    std::size_t _ambient = 0;
    std::vector<QVector> _basis;
    std::vector<std::size_t> _pivots;
  };

}  // namespace pbp

#endif  // PBP_LINALG_HPP_
