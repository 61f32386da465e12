#pragma once

// Dense matrices over the max-times semiring and the core operations on them:
// (+) = entrywise max, (x) = max-times product, powers, Kleene star,
// entrywise quotients and residuation.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "maxalg/error.hpp"
#include "maxalg/number.hpp"
#include "maxalg/path.hpp"

namespace maxalg {

template <class S>
using Vector = std::vector<S>;

template <class S>
class Matrix {
 public:
  using value_type = S;
  using N = Num<S>;

  Matrix() = default;

  // rows x cols matrix filled with the semiring zero.
  Matrix(std::size_t rows, std::size_t cols, double tol = kDefaultTolerance)
      : rows_(rows), cols_(cols), tol_(tol), data_(rows * cols, N::zero()) {}

  static Matrix zero(std::size_t n, double tol = kDefaultTolerance) { return Matrix(n, n, tol); }

  static Matrix identity(std::size_t n, double tol = kDefaultTolerance) {
    Matrix m(n, n, tol);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = N::one();
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<S>>& rows, double tol = kDefaultTolerance) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c, tol);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
      for (std::size_t j = 0; j < c; ++j) {
        N::validate(rows[i][j]);
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  // Builds from doubles through Num<S>::from_double; rationals convert exactly
  // from binary fractions such as 0.5 or 0.25.
  static Matrix from_doubles(std::initializer_list<std::initializer_list<double>> rows,
                             double tol = kDefaultTolerance) {
    std::vector<std::vector<S>> v;
    for (const auto& row : rows) {
      std::vector<S> r;
      for (double x : row) r.push_back(N::from_double(x));
      v.push_back(std::move(r));
    }
    return from_rows(v, tol);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  // Dimension of a square matrix.
  std::size_t n() const { return rows_; }
  double tol() const { return tol_; }

  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector<S> column(std::size_t j) const {
    Vector<S> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vector<S> row(std::size_t i) const {
    return Vector<S>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  // Exact structural equality; see approx_equal for the mode-aware version.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  double tol_ = kDefaultTolerance;
  std::vector<S> data_;
};

namespace detail {

template <class S>
void require_square(const Matrix<S>& a, const char* what) {
  if (!a.square()) throw DimensionMismatch(std::string(what) + ": matrix is not square");
}

template <class S>
void require_same_mode(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.tol() != b.tol()) throw ModeMismatch("operands carry different tolerances");
}

template <class S>
void require_same_shape(const Matrix<S>& a, const Matrix<S>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  require_same_mode(a, b);
}

}  // namespace detail

// Entrywise equality, exact or within the matrix tolerance.
template <class S>
bool approx_equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!Num<S>::eq(a(i, j), b(i, j), a.tol())) return false;
    }
  }
  return true;
}

// a <= b entrywise.
template <class S>
bool leq(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_shape(a, b, "leq");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!Num<S>::le(a(i, j), b(i, j), a.tol())) return false;
    }
  }
  return true;
}

template <class S>
bool approx_equal(const Vector<S>& a, const Vector<S>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!Num<S>::eq(a[i], b[i], tol)) return false;
  }
  return true;
}

template <class S>
bool is_positive(const Vector<S>& v) {
  for (const S& x : v) {
    if (Num<S>::is_zero(x)) return false;
  }
  return true;
}

template <class S>
Matrix<S> oplus(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_shape(a, b, "oplus");
  Matrix<S> c(a.rows(), a.cols(), a.tol());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = Num<S>::max(a(i, j), b(i, j));
  }
  return c;
}

template <class S>
Matrix<S> otimes(const Matrix<S>& a, const Matrix<S>& b) {
  using N = Num<S>;
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("otimes: inner dimensions " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
  }
  detail::require_same_mode(a, b);
  Matrix<S> c(a.rows(), b.cols(), a.tol());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (N::is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const S& bkj = b(k, j);
        if (N::is_zero(bkj)) continue;
        S p = N::mul(aik, bkj);
        if (N::raw_less(c(i, j), p)) c(i, j) = std::move(p);
      }
    }
  }
  return c;
}

// A (x) x for a column vector x.
template <class S>
Vector<S> otimes(const Matrix<S>& a, const Vector<S>& x) {
  using N = Num<S>;
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product");
  Vector<S> y(a.rows(), N::zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (N::is_zero(a(i, j)) || N::is_zero(x[j])) continue;
      S p = N::mul(a(i, j), x[j]);
      if (N::raw_less(y[i], p)) y[i] = std::move(p);
    }
  }
  return y;
}

template <class S>
Vector<S> oplus(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector oplus");
  Vector<S> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = Num<S>::max(a[i], b[i]);
  return c;
}

template <class S>
Vector<S> scale(const S& c, const Vector<S>& v) {
  Vector<S> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Num<S>::mul(c, v[i]);
  return out;
}

template <class S>
Matrix<S> scale(const S& c, const Matrix<S>& a) {
  Matrix<S> out(a.rows(), a.cols(), a.tol());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Num<S>::mul(c, a(i, j));
  }
  return out;
}

// A divided by a positive scalar.
template <class S>
Matrix<S> divide(const Matrix<S>& a, const S& c) {
  if (Num<S>::is_zero(c)) throw DomainError("division of a matrix by the semiring zero");
  Matrix<S> out(a.rows(), a.cols(), a.tol());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Num<S>::div(a(i, j), c);
  }
  return out;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> t(a.cols(), a.rows(), a.tol());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

// A^t for t >= 1, by binary powering. Equal to the t-fold product, since
// (x) is associative.
template <class S>
Matrix<S> mat_power(const Matrix<S>& a, std::size_t t) {
  detail::require_square(a, "mat_power");
  if (t == 0) throw DomainError("mat_power: exponent must be positive");
  Matrix<S> result;
  bool have = false;
  Matrix<S> base = a;
  while (t > 0) {
    if (t & 1U) {
      result = have ? otimes(result, base) : base;
      have = true;
    }
    t >>= 1U;
    if (t > 0) base = otimes(base, base);
  }
  return result;
}

// Weight of a path: product of its edge weights (1 for a single node).
template <class S>
S path_weight(const Matrix<S>& a, const Path& p) {
  S w = Num<S>::one();
  for (std::size_t k = 0; k + 1 < p.nodes.size(); ++k) {
    w = Num<S>::mul(w, a(p.nodes[k], p.nodes[k + 1]));
  }
  return w;
}

namespace detail {

// A cycle of weight > 1 (beyond tolerance), found by longest-walk relaxation
// from a virtual source. Any cycle of the predecessor graph is heavy.
template <class S>
Path heavy_cycle(const Matrix<S>& a) {
  using N = Num<S>;
  const std::size_t n = a.n();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<S> dist(n, N::one());
  std::vector<std::size_t> pred(n, kNone);
  for (std::size_t round = 0; round <= 4 * n + 4; ++round) {
    bool updated = false;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (N::is_zero(a(u, v))) continue;
        S cand = N::mul(dist[u], a(u, v));
        if (N::lt(dist[v], cand, a.tol())) {
          dist[v] = std::move(cand);
          pred[v] = u;
          updated = true;
        }
      }
    }
    if (!updated) return {};
    // Look for a cycle in the functional graph v -> pred[v].
    std::vector<int> state(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t v = s;
      std::vector<std::size_t> trail;
      while (v != kNone && state[v] == 0) {
        state[v] = 1;
        trail.push_back(v);
        v = pred[v];
      }
      if (v != kNone && state[v] == 1) {
        std::vector<std::size_t> back;
        std::size_t u = v;
        do {
          back.push_back(u);
          u = pred[u];
        } while (u != v);
        back.push_back(v);
        Path cycle{std::vector<std::size_t>(back.rbegin(), back.rend())};
        if (N::lt(N::one(), path_weight(a, cycle), a.tol())) return canonical_cycle(cycle);
      }
      for (std::size_t t : trail) state[t] = 2;
    }
  }
  return {};
}

}  // namespace detail

// Kleene star I (+) A (+) A^2 (+) ...; converges iff no cycle weighs more than 1,
// in which case it equals I (+) A (+) ... (+) A^(n-1). Otherwise the obstruction
// carries a cycle of weight > 1.
template <class S>
Solvable<Matrix<S>, S> kleene_star(const Matrix<S>& a) {
  using N = Num<S>;
  detail::require_square(a, "kleene_star");
  const std::size_t n = a.n();
  Matrix<S> k = a;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (N::is_zero(k(i, m))) continue;
      const S kim = k(i, m);
      for (std::size_t j = 0; j < n; ++j) {
        if (N::is_zero(k(m, j))) continue;
        S p = N::mul(kim, k(m, j));
        if (N::raw_less(k(i, j), p)) k(i, j) = std::move(p);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (N::lt(N::one(), k(i, i), a.tol())) {
      Path cycle = detail::heavy_cycle(a);
      if (cycle.empty()) throw CertificationFailure("divergent star without a heavy cycle");
      S w = path_weight(a, cycle);
      return Obstruction<S>{std::move(cycle), std::move(w)};
    }
    k(i, i) = N::one();
  }
  return k;
}

// Entrywise quotient B/C with 0/0 = 0; positive over zero is undefined.
template <class S>
Matrix<S> entrywise_div(const Matrix<S>& b, const Matrix<S>& c) {
  using N = Num<S>;
  detail::require_same_shape(b, c, "entrywise_div");
  Matrix<S> q(b.rows(), b.cols(), b.tol());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (N::is_zero(c(i, j))) {
        if (!N::is_zero(b(i, j))) throw UndefinedDivision(i, j);
        continue;
      }
      q(i, j) = N::div(b(i, j), c(i, j));
    }
  }
  return q;
}

// Greatest X with V (x) X <= W: x_ij = min_k { w_kj / v_ki : v_ki > 0 }.
template <class S>
Matrix<S> left_residual(const Matrix<S>& v, const Matrix<S>& w) {
  using N = Num<S>;
  if (v.rows() != w.rows()) throw DimensionMismatch("left_residual: row counts differ");
  detail::require_same_mode(v, w);
  Matrix<S> x(v.cols(), w.cols(), v.tol());
  for (std::size_t i = 0; i < v.cols(); ++i) {
    bool constrained = false;
    for (std::size_t k = 0; k < v.rows(); ++k) constrained = constrained || !N::is_zero(v(k, i));
    if (!constrained) {
      throw NoConstraint("left_residual: column " + std::to_string(i + 1) +
                         " of V is zero, row of X is unbounded");
    }
    for (std::size_t j = 0; j < w.cols(); ++j) {
      bool first = true;
      S best = N::zero();
      for (std::size_t k = 0; k < v.rows(); ++k) {
        if (N::is_zero(v(k, i))) continue;
        S q = N::div(w(k, j), v(k, i));
        if (first || N::raw_less(q, best)) best = std::move(q);
        first = false;
      }
      x(i, j) = std::move(best);
    }
  }
  return x;
}

// Converts between scalar types through doubles (used for float evaluation of
// exact data, e.g. the transient bound).
template <class To, class From>
Matrix<To> convert_numeric(const Matrix<From>& a) {
  Matrix<To> out(a.rows(), a.cols(), a.tol());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = Num<To>::from_double(Num<From>::to_double(a(i, j)));
    }
  }
  return out;
}

template <class S>
std::string to_string(const Matrix<S>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out += i == 0 ? "[[" : " [";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ", ";
      out += Num<S>::str(a(i, j));
    }
    out += i + 1 == a.rows() ? "]]" : "],\n";
  }
  if (a.rows() == 0) out = "[]";
  return out;
}

}  // namespace maxalg
