#include "projrep/fpmatrix.hpp"

#include <algorithm>
#include <string>

namespace projrep {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

void check_shape(std::int64_t p, int rows, int cols) {
  if (p < 2) fail(ErrorCode::NotPrime, "modulus must be >= 2, got " + std::to_string(p));
  if (rows < 0 || cols < 0) fail(ErrorCode::ShapeMismatch, "negative dimension");
}

// p^e with overflow detection.
std::uint64_t checked_pow(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, p, &r))
      fail(ErrorCode::TooLarge, "power overflows 64 bits");
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::TooLarge, "count overflows 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::TooLarge, "count overflows 64 bits");
  return r;
}

}  // namespace

FpMatrix::FpMatrix(std::int64_t p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
  check_shape(p, rows, cols);
  a_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FpMatrix::FpMatrix(std::int64_t p, int rows, int cols, std::vector<std::int64_t> entries)
    : p_(p), rows_(rows), cols_(cols), a_(std::move(entries)) {
  check_shape(p, rows, cols);
  if (a_.size() != static_cast<std::size_t>(rows) * cols)
    fail(ErrorCode::ShapeMismatch, "entry count does not match dimensions");
  for (auto& v : a_) v = reduce(v, p_);
}

void FpMatrix::set(int i, int j, std::int64_t v) {
  a_[static_cast<std::size_t>(i) * cols_ + j] = reduce(v, p_);
}

bool FpMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0; });
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

FpMatrix FpMatrix::negated() const {
  FpMatrix t(p_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(i, j, p_ - at(i, j));
  return t;
}

FpMatrix FpMatrix::without_row(int i) const {
  FpMatrix t(p_, rows_ - 1, cols_);
  for (int r = 0, tr = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (int j = 0; j < cols_; ++j) t.set(tr, j, at(r, j));
    ++tr;
  }
  return t;
}

FpMatrix FpMatrix::without_col(int j) const {
  FpMatrix t(p_, rows_, cols_ - 1);
  for (int i = 0; i < rows_; ++i)
    for (int c = 0, tc = 0; c < cols_; ++c) {
      if (c == j) continue;
      t.set(i, tc++, at(i, c));
    }
  return t;
}

FpMatrix FpMatrix::without_rows(int i, int j) const {
  FpMatrix t(p_, rows_ - 2, cols_);
  for (int r = 0, tr = 0; r < rows_; ++r) {
    if (r == i || r == j) continue;
    for (int c = 0; c < cols_; ++c) t.set(tr, c, at(r, c));
    ++tr;
  }
  return t;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a = reduce(a, p);
  if (a == 0) fail(ErrorCode::ShapeMismatch, "zero has no inverse mod " + std::to_string(p));
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  return reduce(s0, p);
}

RrefResult rref(const FpMatrix& m) {
  FpMatrix r = m;
  const std::int64_t p = m.p();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (r.at(i, col) != 0) { sel = i; break; }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int j = 0; j < m.cols(); ++j) {
        std::int64_t a = r.at(row, j), b = r.at(sel, j);
        r.set(row, j, b);
        r.set(sel, j, a);
      }
    }
    std::int64_t inv = mod_inverse(r.at(row, col), p);
    for (int j = 0; j < m.cols(); ++j) r.set(row, j, r.at(row, j) * inv % p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      std::int64_t f = r.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < m.cols(); ++j)
        r.set(i, j, r.at(i, j) - f * r.at(row, j) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

int rank(const FpMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<std::vector<std::int64_t>> kernel_basis(const FpMatrix& m) {
  RrefResult rr = rref(m);
  const int n = m.cols();
  const std::int64_t p = m.p();
  std::vector<int> pivot_of_col(n, -1);
  for (int l = 0; l < static_cast<int>(rr.pivots.size()); ++l) pivot_of_col[rr.pivots[l]] = l;
  std::vector<std::vector<std::int64_t>> basis;
  for (int j = 0; j < n; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    std::vector<std::int64_t> b(n, 0);
    b[j] = 1;
    for (int l = 0; l < static_cast<int>(rr.pivots.size()); ++l)
      b[rr.pivots[l]] = (p - rr.r.at(l, j)) % p;
    basis.push_back(std::move(b));
  }
  return basis;
}

std::uint64_t count_rank_formula(std::int64_t p, int m, int n, int r) {
  if (r < 0 || r > std::min(m, n))
    fail(ErrorCode::RankOutOfRange,
         "rank " + std::to_string(r) + " not in [0, min(" + std::to_string(m) + "," +
             std::to_string(n) + ")]");
  const std::uint64_t up = static_cast<std::uint64_t>(p);
  std::uint64_t prefix = 1;
  for (int j = 1; j <= r; ++j)
    prefix = checked_mul(prefix, checked_pow(up, n) - checked_pow(up, j - 1));

  // Sum of p^{sum i*j_i} over all tuples (j_1..j_r) >= 0 with j_1+...+j_r <= m-r.
  // The empty tuple (r = 0) contributes 1.
  std::uint64_t sum = 0;
  std::vector<int> tuple(r, 0);
  const int budget = m - r;
  auto weight = [&]() {
    std::uint64_t e = 0;
    for (int i = 0; i < r; ++i) e += static_cast<std::uint64_t>(i + 1) * tuple[i];
    return checked_pow(up, static_cast<unsigned>(e));
  };
  if (r == 0) {
    sum = 1;
  } else {
    int used = 0;
    int pos = 0;
    // odometer over bounded compositions
    while (true) {
      sum = checked_add(sum, weight());
      pos = r - 1;
      while (pos >= 0) {
        if (used < budget) {
          ++tuple[pos];
          ++used;
          break;
        }
        used -= tuple[pos];
        tuple[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return checked_mul(prefix, sum);
}

std::uint64_t count_rank_enumerate(std::int64_t p, int m, int n, int r, std::uint64_t cap) {
  if (r < 0 || r > std::min(m, n))
    fail(ErrorCode::RankOutOfRange, "rank " + std::to_string(r) + " out of range");
  const int cells = m * n;
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) {
    total = checked_mul(total, static_cast<std::uint64_t>(p));
    if (total > cap)
      fail(ErrorCode::TooLarge, "p^(mn) exceeds enumeration cap " + std::to_string(cap));
  }
  std::uint64_t count = 0;
  std::vector<std::int64_t> entries(cells, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (int i = 0; i < cells; ++i) {
      entries[i] = static_cast<std::int64_t>(v % p);
      v /= p;
    }
    FpMatrix mat(p, m, n, entries);
    if (rank(mat) == r) ++count;
  }
  return count;
}

}  // namespace projrep
