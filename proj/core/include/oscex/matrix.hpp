#pragma once

#include <cstddef>
#include <vector>

namespace oscex {

using Vec = std::vector<double>;

/// Dense real square matrix, row-major. Sized for the small systems this
/// library works with (a handful of coupled oscillators), not for large-scale
/// linear algebra.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

  static SquareMatrix identity(std::size_t n);
  static SquareMatrix diagonal(const Vec& d);

  std::size_t dim() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  const std::vector<double>& data() const { return a_; }

  SquareMatrix& operator+=(const SquareMatrix& rhs);
  SquareMatrix& operator-=(const SquareMatrix& rhs);
  SquareMatrix& operator*=(double s);

  SquareMatrix transposed() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs);
SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs);
SquareMatrix operator*(double s, SquareMatrix m);
SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
Vec operator*(const SquareMatrix& a, const Vec& x);

double norm1(const SquareMatrix& a);        // max column sum
double max_abs(const SquareMatrix& a);
bool all_finite(const SquareMatrix& a);
bool all_finite(const Vec& x);

/// max|A - A^T| relative to max(1, max|A|).
double relative_asymmetry(const SquareMatrix& a);
bool is_symmetric(const SquareMatrix& a, double tol = 1e-13);
SquareMatrix symmetrized(const SquareMatrix& a);

// Vector helpers.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(double s, const Vec& a);
double vec_dot(const Vec& a, const Vec& b);
double vec_max_abs(const Vec& a);

/// Solve A x = b by partial-pivoting elimination.
///
/// Throws SingularMatrixError when the 1-norm condition estimate exceeds
/// 1e12 (or a pivot is exactly zero); the estimate rides along on the
/// exception.
Vec linear_solve(const SquareMatrix& a, const Vec& b);

/// Column-by-column solve A X = B.
SquareMatrix linear_solve(const SquareMatrix& a, const SquareMatrix& b);

SquareMatrix inverse(const SquareMatrix& a);

/// 1-norm condition estimate cond1 = |A|_1 * |A^-1|_1; +inf when singular.
double condition_estimate(const SquareMatrix& a);

}  // namespace oscex
