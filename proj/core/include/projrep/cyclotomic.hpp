#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "projrep/error.hpp"

namespace projrep {

/// Exact element of Q(xi_p), xi = e^{2 pi i / p}, stored as rational
/// coefficients on the power basis {1, xi, ..., xi^{p-2}}. The relation
/// xi^{p-1} = -(1 + xi + ... + xi^{p-2}) keeps every value reduced.
/// For p = 2 this degenerates to plain rational arithmetic.
class CycScalar {
public:
  explicit CycScalar(std::int64_t p);  // zero
  static CycScalar zero(std::int64_t p) { return CycScalar(p); }
  static CycScalar one(std::int64_t p);
  static CycScalar from_rational(std::int64_t p, mpq_class q);
  static CycScalar root_power(std::int64_t p, std::int64_t e);  // xi^e

  std::int64_t p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()); }
  const mpq_class& coeff(int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_one() const;

  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  bool operator==(const CycScalar& o) const;

  /// Field inverse; the scalar must be nonzero.
  CycScalar inverse() const;

  /// Rendered as a polynomial in z (z = xi), e.g. "1-z", "-1/2*z^2".
  std::string str() const;

private:
  std::int64_t p_;
  std::vector<mpq_class> c_;
};

/// Dense matrix over Q(xi_p).
class CycMatrix {
public:
  CycMatrix(std::int64_t p, int rows, int cols);  // zero matrix
  static CycMatrix identity(std::int64_t p, int dim);

  std::int64_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const CycScalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  CycScalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

private:
  std::int64_t p_;
  int rows_;
  int cols_;
  std::vector<CycScalar> a_;
};

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b);
CycMatrix kron(const CycMatrix& a, const CycMatrix& b);
CycMatrix scalar_mul(const CycScalar& c, const CycMatrix& a);
bool mat_eq(const CycMatrix& a, const CycMatrix& b);

/// Rank over Q(xi_p); rows are combined fraction-free (no divisions),
/// pivoting on the first nonzero entry.
int cyc_rank(const CycMatrix& m);

/// Basis of {v : M v = 0} over Q(xi_p).
std::vector<std::vector<CycScalar>> cyc_kernel_basis(const CycMatrix& m);

/// Dimension over Q(xi_p) of {M : M A = A M for all A in mats}. Every input
/// must be d x d and invertible. For the image of a projective representation
/// the commutant of the generator images equals the commutant of the full
/// image, so dimension 1 certifies irreducibility.
int commutant_dimension(std::span<const CycMatrix> mats, int d);

}  // namespace projrep
