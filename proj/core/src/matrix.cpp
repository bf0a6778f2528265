#include "oscex/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "oscex/errors.hpp"

namespace oscex {

namespace {

constexpr double kConditionLimit = 1e12;

void require_same_dim(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimension mismatch");
}

// LU factorization with partial pivoting, kept local to this translation unit.
struct Lu {
  std::size_t n = 0;
  std::vector<double> lu;      // row-major combined L\U
  std::vector<std::size_t> perm;
  bool singular = false;

  explicit Lu(const SquareMatrix& a) : n(a.dim()), lu(a.data()), perm(n) {
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(lu[k * n + k]);
      for (std::size_t i = k + 1; i < n; ++i) {
        double v = std::abs(lu[i * n + k]);
        if (v > best) {
          best = v;
          p = i;
        }
      }
      if (best == 0.0) {
        singular = true;
        return;
      }
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu[k * n + j], lu[p * n + j]);
        std::swap(perm[k], perm[p]);
      }
      const double pivot = lu[k * n + k];
      for (std::size_t i = k + 1; i < n; ++i) {
        const double m = lu[i * n + k] / pivot;
        lu[i * n + k] = m;
        for (std::size_t j = k + 1; j < n; ++j) lu[i * n + j] -= m * lu[k * n + j];
      }
    }
  }

  Vec solve(const Vec& b) const {
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm[i]];
    for (std::size_t i = 1; i < n; ++i) {
      double s = x[i];
      for (std::size_t j = 0; j < i; ++j) s -= lu[i * n + j] * x[j];
      x[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = x[ii];
      for (std::size_t j = ii + 1; j < n; ++j) s -= lu[ii * n + j] * x[j];
      x[ii] = s / lu[ii * n + ii];
    }
    return x;
  }
};

double inverse_norm1(const Lu& f) {
  // Explicit inverse column norms; matrices here are tiny.
  double best = 0.0;
  Vec e(f.n, 0.0);
  for (std::size_t j = 0; j < f.n; ++j) {
    e[j] = 1.0;
    Vec col = f.solve(e);
    e[j] = 0.0;
    double s = 0.0;
    for (double v : col) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

const Lu& checked_factor(const SquareMatrix& a, const Lu& f, double* cond_out) {
  double cond = std::numeric_limits<double>::infinity();
  if (!f.singular) cond = norm1(a) * inverse_norm1(f);
  if (cond_out) *cond_out = cond;
  if (f.singular || cond > kConditionLimit) {
    std::ostringstream msg;
    msg << "singular or ill-conditioned matrix (condition estimate ";
    msg << cond << ", limit " << kConditionLimit << ")";
    throw SingularMatrixError(msg.str(), cond);
  }
  return f;
}

}  // namespace

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::diagonal(const Vec& d) {
  SquareMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

SquareMatrix& SquareMatrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs += rhs; }
SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs -= rhs; }
SquareMatrix operator*(double s, SquareMatrix m) { return m *= s; }

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  SquareMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vec operator*(const SquareMatrix& a, const Vec& x) {
  if (a.dim() != x.size()) throw DomainError("matrix-vector dimension mismatch");
  Vec y(a.dim(), 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double norm1(const SquareMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

double max_abs(const SquareMatrix& a) {
  double best = 0.0;
  for (double v : a.data()) best = std::max(best, std::abs(v));
  return best;
}

bool all_finite(const SquareMatrix& a) {
  for (double v : a.data())
    if (!std::isfinite(v)) return false;
  return true;
}

bool all_finite(const Vec& x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

double relative_asymmetry(const SquareMatrix& a) {
  double asym = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
  return asym / std::max(1.0, max_abs(a));
}

bool is_symmetric(const SquareMatrix& a, double tol) {
  return relative_asymmetry(a) < tol;
}

SquareMatrix symmetrized(const SquareMatrix& a) {
  SquareMatrix s(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("vector dimension mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("vector dimension mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec vec_scale(double s, const Vec& a) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

double vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("vector dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double vec_max_abs(const Vec& a) {
  double best = 0.0;
  for (double v : a) best = std::max(best, std::abs(v));
  return best;
}

Vec linear_solve(const SquareMatrix& a, const Vec& b) {
  if (a.dim() != b.size()) throw DomainError("linear_solve: dimension mismatch");
  if (!all_finite(a) || !all_finite(b)) throw DomainError("linear_solve: non-finite input");
  Lu f(a);
  checked_factor(a, f, nullptr);
  return f.solve(b);
}

SquareMatrix linear_solve(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b);
  if (!all_finite(a) || !all_finite(b)) throw DomainError("linear_solve: non-finite input");
  Lu f(a);
  checked_factor(a, f, nullptr);
  const std::size_t n = a.dim();
  SquareMatrix x(n);
  Vec col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = b(i, j);
    Vec sol = f.solve(col);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = sol[i];
  }
  return x;
}

SquareMatrix inverse(const SquareMatrix& a) {
  return linear_solve(a, SquareMatrix::identity(a.dim()));
}

double condition_estimate(const SquareMatrix& a) {
  Lu f(a);
  if (f.singular) return std::numeric_limits<double>::infinity();
  return norm1(a) * inverse_norm1(f);
}

}  // namespace oscex
