#pragma once

#include <cstdint>
#include <vector>

#include "projrep/fpmatrix.hpp"
#include "projrep/pgroup.hpp"

namespace projrep {

inline constexpr std::uint64_t kDefaultClassCap = 100'000;

/// Bilinear cocycle on G = G1 x G2, represented by its t x s matrix
/// C = [c(i,j)] over Z/p:
///   alpha(g, h) = xi^e,  e = sum_{i,j} c(i,j) * m_i(h) * k_j(g)  (mod p),
/// where m comes from the second argument and k from the first. Every such
/// class has order dividing p.
class BilinearCocycle {
public:
  BilinearCocycle(AbelianPGroup group, FpMatrix c);

  const AbelianPGroup& group() const { return group_; }
  const FpMatrix& matrix() const { return c_; }
  bool is_zero() const { return c_.is_zero(); }

  bool operator==(const BilinearCocycle&) const = default;

private:
  AbelianPGroup group_;
  FpMatrix c_;
};

/// Exponent e in [0, p) with alpha(g, h) = xi^e. The k-exponents are read
/// from g (first argument), the m-exponents from h (second argument); this
/// argument convention is the paper-facing sign convention of the artifact.
std::int64_t evaluate(const BilinearCocycle& alpha, const GroupElement& g, const GroupElement& h);

/// The (s+t) x (s+t) block matrix ( 0  C ; -C^T  0 ), C in the upper right.
FpMatrix a_matrix(const BilinearCocycle& alpha);

/// Generating set of G0, the subgroup of alpha-regular elements.
struct RegularSet {
  std::vector<GroupElement> generators;
  int index_exponent;  // |G / G0| = p^{index_exponent} = p^{rank A_alpha}
};

/// G0 as the preimage of ker(A_alpha) under mod-p reduction of exponent
/// vectors; the generators always include x_i^p (and y_j^p when n_j > 1).
RegularSet regular_elements(const BilinearCocycle& alpha);

/// Oracle: g is alpha-regular iff alpha(g,x) = alpha(x,g) for every x in G.
bool is_regular_bruteforce(const BilinearCocycle& alpha, const GroupElement& g,
                           std::uint64_t cap = kDefaultElementCap);

/// Restriction to a canonical subgroup, re-indexed to the subgroup's own
/// pairing coordinates: X(i)/B(i) delete row i, Y(j) deletes column j,
/// A(i,j) deletes rows i and j, C(i,j) deletes row i and column j.
BilinearCocycle restrict_cocycle(const BilinearCocycle& alpha, const SubgroupSpec& spec);

/// Coordinates of h (an element of the subgroup named by spec) on the
/// restricted cocycle's carrier group; deleted pairing coordinates are
/// dropped. Fails with GroupMismatch when h is not in the subgroup.
GroupElement to_subgroup_coords(const AbelianPGroup& g, const SubgroupSpec& spec,
                                const GroupElement& h);

/// Inflation along G -> G/N, N = <y_j^p>: the same matrix C reinterpreted on
/// the target group, whose evaluation reads the k-exponents mod p.
BilinearCocycle inflate(const BilinearCocycle& beta, const AbelianPGroup& target);

/// All p^{st} bilinear classes of G, lexicographic on the row-major entries.
std::vector<BilinearCocycle> enumerate_classes(const AbelianPGroup& g,
                                               std::uint64_t cap = kDefaultClassCap);

/// Number of bilinear classes, p^{st}, guarded by the same cap.
std::uint64_t class_count(const AbelianPGroup& g, std::uint64_t cap = kDefaultClassCap);

}  // namespace projrep
