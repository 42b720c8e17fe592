#include "projrep/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

namespace projrep {

namespace {

void require_same_field(std::int64_t a, std::int64_t b) {
  if (a != b) fail(ErrorCode::ShapeMismatch, "operands live in different cyclotomic fields");
}

std::int64_t reduce_mod(std::int64_t e, std::int64_t p) {
  std::int64_t r = e % p;
  return r < 0 ? r + p : r;
}

}  // namespace

CycScalar::CycScalar(std::int64_t p) : p_(p) {
  if (p < 2) fail(ErrorCode::NotPrime, "cyclotomic order must be >= 2");
  c_.assign(static_cast<std::size_t>(p - 1), mpq_class(0));
}

CycScalar CycScalar::one(std::int64_t p) {
  CycScalar s(p);
  s.c_[0] = 1;
  return s;
}

CycScalar CycScalar::from_rational(std::int64_t p, mpq_class q) {
  CycScalar s(p);
  s.c_[0] = std::move(q);
  return s;
}

CycScalar CycScalar::root_power(std::int64_t p, std::int64_t e) {
  CycScalar s(p);
  std::int64_t r = reduce_mod(e, p);
  if (r < p - 1) {
    s.c_[r] = 1;
  } else {
    // xi^{p-1} = -(1 + xi + ... + xi^{p-2})
    for (auto& c : s.c_) c = -1;
  }
  return s;
}

bool CycScalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

bool CycScalar::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  CycScalar r = *this;
  r += o;
  return r;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
  CycScalar r = *this;
  r -= o;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  require_same_field(p_, o.p_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  require_same_field(p_, o.p_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
  require_same_field(p_, o.p_);
  // Convolve with exponents folded mod p, then eliminate xi^{p-1}.
  std::vector<mpq_class> acc(static_cast<std::size_t>(p_), mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      acc[(i + j) % p_] += c_[i] * o.c_[j];
    }
  }
  CycScalar r(p_);
  const mpq_class& top = acc[static_cast<std::size_t>(p_ - 1)];
  for (std::size_t i = 0; i + 1 < acc.size(); ++i) r.c_[i] = acc[i] - top;
  return r;
}

bool CycScalar::operator==(const CycScalar& o) const {
  if (p_ != o.p_) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) fail(ErrorCode::ShapeMismatch, "zero has no inverse in Q(xi_p)");
  // Solve (this) * x = 1 as a linear system over Q in the power basis.
  const int d = degree();
  std::vector<std::vector<mpq_class>> mat(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
  for (int j = 0; j < d; ++j) {
    CycScalar col = *this * CycScalar::root_power(p_, j);
    for (int i = 0; i < d; ++i) mat[i][j] = col.coeff(i);
  }
  mat[0][d] = 1;
  // Gaussian elimination with first-nonzero pivoting.
  int row = 0;
  std::vector<int> pivot_col(d, -1);
  for (int col = 0; col < d && row < d; ++col) {
    int sel = -1;
    for (int i = row; i < d; ++i)
      if (sgn(mat[i][col]) != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(mat[sel], mat[row]);
    mpq_class inv = 1 / mat[row][col];
    for (int j = col; j <= d; ++j) mat[row][j] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == row || sgn(mat[i][col]) == 0) continue;
      mpq_class f = mat[i][col];
      for (int j = col; j <= d; ++j) mat[i][j] -= f * mat[row][j];
    }
    pivot_col[row] = col;
    ++row;
  }
  CycScalar x(p_);
  for (int i = 0; i < row; ++i) x.c_[pivot_col[i]] = mat[i][d];
  return x;
}

std::string CycScalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < degree(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    mpq_class q = c_[i];
    if (first) {
      if (sgn(q) < 0) { os << "-"; q = -q; }
    } else {
      os << (sgn(q) < 0 ? "-" : "+");
      if (sgn(q) < 0) q = -q;
    }
    first = false;
    bool unit_coeff = (q == 1) && i > 0;
    if (!unit_coeff) os << q.get_str();
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

CycMatrix::CycMatrix(std::int64_t p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(ErrorCode::ShapeMismatch, "negative dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, CycScalar(p));
}

CycMatrix CycMatrix::identity(std::int64_t p, int dim) {
  CycMatrix m(p, dim, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = CycScalar::one(p);
  return m;
}

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) {
  require_same_field(a.p(), b.p());
  if (a.cols() != b.rows())
    fail(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  CycMatrix r(a.p(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const CycScalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const CycScalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  require_same_field(a.p(), b.p());
  CycMatrix r(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const CycScalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
    }
  return r;
}

CycMatrix scalar_mul(const CycScalar& c, const CycMatrix& a) {
  require_same_field(c.p(), a.p());
  CycMatrix r(a.p(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = c * a.at(i, j);
  return r;
}

bool mat_eq(const CycMatrix& a, const CycMatrix& b) {
  if (a.p() != b.p() || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

namespace {

// Forward elimination to row echelon form without divisions:
// row_i <- piv_lead * row_i - lead_i * piv_row. Returns pivot (row, col) pairs.
std::vector<std::pair<int, int>> echelon(CycMatrix& m) {
  std::vector<std::pair<int, int>> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(sel, j));
    const CycScalar piv = m.at(row, col);
    for (int i = row + 1; i < m.rows(); ++i) {
      if (m.at(i, col).is_zero()) continue;
      const CycScalar lead = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) {
        if (m.at(row, j).is_zero() && m.at(i, j).is_zero()) continue;
        m.at(i, j) = piv * m.at(i, j) - lead * m.at(row, j);
      }
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace

int cyc_rank(const CycMatrix& m) {
  CycMatrix work = m;
  return static_cast<int>(echelon(work).size());
}

std::vector<std::vector<CycScalar>> cyc_kernel_basis(const CycMatrix& m) {
  CycMatrix work = m;
  auto pivots = echelon(work);
  const int n = m.cols();
  std::vector<int> pivot_row_of_col(n, -1);
  for (auto [pr, pc] : pivots) pivot_row_of_col[pc] = pr;

  std::vector<std::vector<CycScalar>> basis;
  for (int freec = 0; freec < n; ++freec) {
    if (pivot_row_of_col[freec] >= 0) continue;
    std::vector<CycScalar> v(n, CycScalar(m.p()));
    v[freec] = CycScalar::one(m.p());
    // Back-substitute pivot coordinates from the echelon rows.
    for (int idx = static_cast<int>(pivots.size()) - 1; idx >= 0; --idx) {
      auto [pr, pc] = pivots[idx];
      CycScalar acc(m.p());
      for (int j = pc + 1; j < n; ++j) {
        if (work.at(pr, j).is_zero() || v[j].is_zero()) continue;
        acc += work.at(pr, j) * v[j];
      }
      if (!acc.is_zero())
        v[pc] = -(acc * work.at(pr, pc).inverse());
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int commutant_dimension(std::span<const CycMatrix> mats, int d) {
  if (mats.empty()) fail(ErrorCode::ShapeMismatch, "commutant of an empty family");
  const std::int64_t p = mats.front().p();
  for (const auto& a : mats) {
    if (a.p() != p || a.rows() != d || a.cols() != d)
      fail(ErrorCode::ShapeMismatch, "commutant inputs must all be d x d over one field");
    if (cyc_rank(a) != d) fail(ErrorCode::ShapeMismatch, "commutant inputs must be invertible");
  }
  // Unknown M (d^2 entries, index i*d+j); rows encode M*A - A*M = 0.
  const int nvars = d * d;
  CycMatrix sys(p, static_cast<int>(mats.size()) * nvars, nvars);
  int row = 0;
  for (const auto& a : mats) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          // + M[i,k] A[k,j]
          if (!a.at(k, j).is_zero()) sys.at(row, i * d + k) += a.at(k, j);
          // - A[i,k] M[k,j]
          if (!a.at(i, k).is_zero()) sys.at(row, k * d + j) -= a.at(i, k);
        }
        ++row;
      }
  }
  return nvars - cyc_rank(sys);
}

}  // namespace projrep
