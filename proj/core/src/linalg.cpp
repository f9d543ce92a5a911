#include "pbp/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "pbp/error.hpp"

namespace pbp {

  Rational parse_rational(std::string const& text) {
    std::string t;
    for (char c : text) {
      if (c != ' ' && c != '+') {
        t.push_back(c);
      }
    }
    if (t.empty()) {
      throw InvalidInput("empty rational literal");
    }
    Rational q;
    if (q.set_str(t, 10) != 0) {
      throw InvalidInput("malformed rational literal '" + text + "'");
    }
    if (q.get_den() == 0) {
      throw InvalidInput("zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return q;
  }

  std::string to_string(Rational const& q) {
    return q.get_str();
  }

  ////////////////////////////////////////////////////////////////////////
  // QMatrix
  ////////////////////////////////////////////////////////////////////////

  QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    _data.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw InvalidInput("ragged matrix literal");
      }
      _data.insert(_data.end(), r.begin(), r.end());
    }
  }

  QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  QMatrix QMatrix::from_rows(std::vector<QVector> const& rows,
                             std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == cols);
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  QVector QMatrix::row(std::size_t i) const {
    return QVector(_data.begin() + i * _cols, _data.begin() + (i + 1) * _cols);
  }

  QVector QMatrix::column(std::size_t j) const {
    QVector c(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      c[i] = (*this)(i, j);
    }
    return c;
  }

  QMatrix QMatrix::transpose() const {
    QMatrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  bool QMatrix::is_zero() const {
    return std::all_of(
        _data.begin(), _data.end(), [](Rational const& q) { return q == 0; });
  }

  QMatrix operator*(QMatrix const& a, QMatrix const& b) {
    assert(a._cols == b._rows);
    QMatrix c(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        Rational const& aik = a(i, k);
        if (aik == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          if (b(k, j) != 0) {
            c(i, j) += aik * b(k, j);
          }
        }
      }
    }
    return c;
  }

  QVector operator*(QMatrix const& a, QVector const& v) {
    assert(a._cols == v.size());
    QVector out(a._rows);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t j = 0; j < a._cols; ++j) {
        if (v[j] != 0 && a(i, j) != 0) {
          out[i] += a(i, j) * v[j];
        }
      }
    }
    return out;
  }

  QMatrix operator+(QMatrix const& a, QMatrix const& b) {
    assert(a._rows == b._rows && a._cols == b._cols);
    QMatrix c = a;
    for (std::size_t i = 0; i < c._data.size(); ++i) {
      c._data[i] += b._data[i];
    }
    return c;
  }

  QMatrix operator-(QMatrix const& a, QMatrix const& b) {
    assert(a._rows == b._rows && a._cols == b._cols);
    QMatrix c = a;
    for (std::size_t i = 0; i < c._data.size(); ++i) {
      c._data[i] -= b._data[i];
    }
    return c;
  }

  QMatrix operator*(Rational const& s, QMatrix const& a) {
    QMatrix c = a;
    for (auto& x : c._data) {
      x *= s;
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elimination
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t              r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      std::size_t p = r;
      while (p < m.rows() && m(p, c) == 0) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      if (p != r) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          std::swap(m(p, j), m(r, j));
        }
      }
      Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(r, j) *= inv;
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == r || m(i, c) == 0) {
          continue;
        }
        Rational f = m(i, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
          if (m(r, j) != 0) {
            m(i, j) -= f * m(r, j);
          }
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank(QMatrix m) {
    return rref(m).size();
  }

  std::vector<QVector> nullspace(QMatrix const& m) {
    QMatrix                  a      = m;
    std::vector<std::size_t> pivots = rref(a);
    std::vector<bool>        is_pivot(a.cols(), false);
    for (auto p : pivots) {
      is_pivot[p] = true;
    }
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
      if (is_pivot[free]) {
        continue;
      }
      QVector v(a.cols());
      v[free] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        v[pivots[i]] = -a(i, free);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Rational determinant(QMatrix m) {
    assert(m.rows() == m.cols());
    Rational    det = 1;
    std::size_t n   = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m(p, c) == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(p, j), m(c, j));
        }
        det = -det;
      }
      det *= m(c, c);
      for (std::size_t i = c + 1; i < n; ++i) {
        if (m(i, c) == 0) {
          continue;
        }
        Rational f = m(i, c) / m(c, c);
        for (std::size_t j = c; j < n; ++j) {
          m(i, j) -= f * m(c, j);
        }
      }
    }
    return det;
  }

  bool is_zero(QVector const& v) {
    return std::all_of(
        v.begin(), v.end(), [](Rational const& q) { return q == 0; });
  }

  QVector add(QVector const& a, QVector const& b) {
    assert(a.size() == b.size());
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = a[i] + b[i];
    }
    return out;
  }

  QVector scale(Rational const& c, QVector const& v) {
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] = c * v[i];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subspace
  ////////////////////////////////////////////////////////////////////////

  Subspace::Subspace(std::size_t ambient, std::vector<QVector> const& spanning)
      : _ambient(ambient) {
    if (spanning.empty()) {
      return;
    }
    for (auto const& v : spanning) {
      if (v.size() != ambient) {
        throw InvalidInput("vector length does not match ambient dimension");
      }
    }
    QMatrix m = QMatrix::from_rows(spanning, ambient);
    _pivots   = rref(m);
    _basis.reserve(_pivots.size());
    for (std::size_t i = 0; i < _pivots.size(); ++i) {
      _basis.push_back(m.row(i));
    }
  }

  Subspace Subspace::whole(std::size_t ambient) {
    std::vector<QVector> e;
    for (std::size_t i = 0; i < ambient; ++i) {
      QVector v(ambient);
      v[i] = 1;
      e.push_back(std::move(v));
    }
    return Subspace(ambient, e);
  }

  bool Subspace::contains(QVector const& v) const {
    // Reduce v against the echelon basis; v is inside iff nothing remains.
    QVector r = v;
    for (std::size_t i = 0; i < _basis.size(); ++i) {
      Rational c = r[_pivots[i]];
      if (c == 0) {
        continue;
      }
      for (std::size_t j = 0; j < _ambient; ++j) {
        if (_basis[i][j] != 0) {
          r[j] -= c * _basis[i][j];
        }
      }
    }
    return pbp::is_zero(r);
  }

  bool Subspace::contains(Subspace const& other) const {
    return std::all_of(other._basis.begin(),
                       other._basis.end(),
                       [this](QVector const& v) { return contains(v); });
  }

  QVector Subspace::coordinates(QVector const& v) const {
    QVector c(_basis.size());
    for (std::size_t i = 0; i < _basis.size(); ++i) {
      c[i] = v[_pivots[i]];
    }
    return c;
  }

  Subspace Subspace::operator+(Subspace const& other) const {
    assert(_ambient == other._ambient);
    std::vector<QVector> all = _basis;
    all.insert(all.end(), other._basis.begin(), other._basis.end());
    return Subspace(_ambient, all);
  }

  Subspace Subspace::intersect(Subspace const& other) const {
    assert(_ambient == other._ambient);
    if (is_zero() || other.is_zero()) {
      return Subspace(_ambient);
    }
    // Solve sum a_i u_i - sum b_j w_j = 0 and map the a-part back.
    std::size_t k = _basis.size(), l = other._basis.size();
    QMatrix     m(_ambient, k + l);
    for (std::size_t i = 0; i < _ambient; ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        m(i, a) = _basis[a][i];
      }
      for (std::size_t b = 0; b < l; ++b) {
        m(i, k + b) = -other._basis[b][i];
      }
    }
    std::vector<QVector> vecs;
    for (auto const& sol : nullspace(m)) {
      QVector v(_ambient);
      for (std::size_t a = 0; a < k; ++a) {
        if (sol[a] != 0) {
          v = add(v, scale(sol[a], _basis[a]));
        }
      }
      vecs.push_back(std::move(v));
    }
    return Subspace(_ambient, vecs);
  }

  bool operator<(Subspace const& a, Subspace const& b) {
    if (a._ambient != b._ambient) {
      return a._ambient < b._ambient;
    }
    if (a.dim() != b.dim()) {
      return a.dim() < b.dim();
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a._ambient; ++j) {
        int c = cmp(a._basis[i][j], b._basis[i][j]);
        if (c != 0) {
          return c < 0;
        }
      }
    }
    return false;
  }

}  // namespace pbp
