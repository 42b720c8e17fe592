#pragma once

#include <cstdint>
#include <vector>

#include "projrep/error.hpp"

namespace projrep {

inline constexpr std::uint64_t kDefaultMatrixCap = 10'000'000;

/// Dense matrix over Z/p. Entries are always stored reduced to [0, p).
class FpMatrix {
public:
  FpMatrix(std::int64_t p, int rows, int cols);
  FpMatrix(std::int64_t p, int rows, int cols, std::vector<std::int64_t> entries);

  std::int64_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  void set(int i, int j, std::int64_t v);

  bool operator==(const FpMatrix&) const = default;

  bool is_zero() const;
  FpMatrix transposed() const;
  FpMatrix negated() const;
  FpMatrix without_row(int i) const;
  FpMatrix without_col(int j) const;
  FpMatrix without_rows(int i, int j) const;

private:
  std::int64_t p_;
  int rows_;
  int cols_;
  std::vector<std::int64_t> a_;
};

struct RrefResult {
  FpMatrix r;
  std::vector<int> pivots;  // 0-based column indices, strictly increasing
};

/// Row reduced echelon form, leftmost-pivot / topmost-row convention.
RrefResult rref(const FpMatrix& m);

int rank(const FpMatrix& m);

/// Basis of {b : M b = 0}, one column vector per free column of the RREF.
std::vector<std::vector<std::int64_t>> kernel_basis(const FpMatrix& m);

/// Inverse of a mod p (extended Euclid); a must be nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// Z(p,m,n,r): number of m x n matrices over Z/p of rank r, closed form.
std::uint64_t count_rank_formula(std::int64_t p, int m, int n, int r);

/// Same count by exhaustive enumeration of all p^(mn) matrices.
std::uint64_t count_rank_enumerate(std::int64_t p, int m, int n, int r,
                                   std::uint64_t cap = kDefaultMatrixCap);

}  // namespace projrep
