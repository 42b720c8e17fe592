#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "projrep/cocycle.hpp"
#include "projrep/cyclotomic.hpp"

namespace projrep {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed0001;

/// Generalized permutation matrix over Q(xi_p): row i carries its single
/// nonzero xi^{exp(i)} in column col(i). All representation matrices produced
/// by the constructions have this shape; the dense CycMatrix form remains the
/// semantic ground truth and conversions are exact.
class MonomialMatrix {
public:
  MonomialMatrix(std::int64_t p, std::vector<int> col, std::vector<std::int64_t> exp);
  static MonomialMatrix identity(std::int64_t p, int dim);

  std::int64_t p() const { return p_; }
  int dim() const { return static_cast<int>(col_.size()); }
  int col(int i) const { return col_[i]; }
  std::int64_t exp(int i) const { return exp_[i]; }

  MonomialMatrix mul(const MonomialMatrix& o) const;
  MonomialMatrix pow(std::int64_t e) const;
  MonomialMatrix scaled(std::int64_t e) const;  // xi^e * this

  bool operator==(const MonomialMatrix&) const = default;

  CycMatrix dense() const;

private:
  std::int64_t p_;
  std::vector<int> col_;
  std::vector<std::int64_t> exp_;
};

MonomialMatrix monomial_kron(const MonomialMatrix& a, const MonomialMatrix& b);

/// Projective representation of G for the cocycle alpha, defined on the
/// generators x1..xt, y1..ys and extended to all of G by the canonical-order
/// product rho(g) = X1^m1 ... Xt^mt Y1^k1 ... Ys^ks. The cocycle identity
/// rho(gh) = xi^{alpha(g,h)} rho(g) rho(h) is a tested postcondition of every
/// construction, not an assumption.
struct ProjRep {
  AbelianPGroup group;
  BilinearCocycle cocycle;
  int dim;
  std::vector<CycMatrix> gen_images;  // x1..xt then y1..ys
  std::optional<std::vector<MonomialMatrix>> monomial_images;

  int generator_count() const { return group.t() + group.s(); }
  const CycMatrix& image(int g) const { return gen_images[g]; }
};

/// Section-3.1 construction: induce the trivial representation of the
/// index-p^n subgroup G3 read off the RREF of C along the transversal of
/// pivot-column y-products, ordered lexicographically on pivot exponents.
/// Result has dimension p^n, n = rank C. Requires elementary abelian G2.
ProjRep construct_general(const BilinearCocycle& alpha);

/// Section-3.2 construction for generalized-permutation patterns (s = t,
/// exactly one nonzero per row and column): Kronecker product of the p x p
/// blocks diag(xi^{-(m-1)c(i,j_i)}) and the cyclic shift.
ProjRep construct_tensor(const BilinearCocycle& alpha);

/// General-exponent G2: build the cocycle with the same matrix on
/// G1 x (Z/p)^s, run construct_general, and reinterpret the images on the
/// full group. The result factors through the quotient by <y_j^p>.
ProjRep construct_inflated(const BilinearCocycle& alpha);

/// Generic induction along the transversal of <h_gens>: block matrix
/// Gamma_ij(g) = alpha(g,t_j) alpha^{-1}(t_i, t_i^{-1} g t_j) rho(t_i^{-1} g t_j)
/// when t_i^{-1} g t_j lands in the subgroup, zero block otherwise.
/// rho_h lives on an abstract group whose generators correspond, in order,
/// to h_gens (orders must match exactly).
ProjRep induce(const AbelianPGroup& g, const std::vector<GroupElement>& h_gens,
               const ProjRep& rho_h, const BilinearCocycle& alpha,
               std::uint64_t cap = kDefaultElementCap);

/// Conjugate representation rho^{(z)} by the section-2.1 formula.
ProjRep conjugate_rep(const ProjRep& rho, const GroupElement& z);

/// Exponent c with rho^{(z)}(x) = xi^c rho(x), straight from the formula.
std::int64_t conjugate_scaling_exponent(const BilinearCocycle& alpha, const GroupElement& z,
                                        const GroupElement& x);

CycMatrix evaluate_rep(const ProjRep& rho, const GroupElement& g);
MonomialMatrix evaluate_rep_monomial(const ProjRep& rho, const GroupElement& g);

struct IdentityCheck {
  bool ok = false;
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
};

/// Checks rho(gh) = xi^{alpha(g,h)} rho(g) rho(h): over all |G|^2 pairs when
/// |G| <= exhaustive_limit, otherwise over seeded random pairs.
IdentityCheck verify_cocycle_identity(const ProjRep& rho, std::uint64_t exhaustive_limit = 4096,
                                      std::uint64_t sample_pairs = 100'000,
                                      std::uint64_t seed = kDefaultSeed);

/// Cocycle-level Mackey check for construct_general: every nonidentity
/// element z of the pivot transversal scales some generator nontrivially,
/// i.e. C * k(z) != 0 mod p. Matrix-free.
bool mackey_disjoint(const BilinearCocycle& alpha);

struct IntertwinerResult {
  int dimension = 0;
  bool invertible_sample = false;
};

/// Dimension of {M : M rho1(gen) = rho2(gen) M} over Q(xi_p); when it is 1,
/// also reports whether a kernel-basis solution is invertible.
IntertwinerResult intertwiner(const ProjRep& rho1, const ProjRep& rho2);

/// rho1 ~ rho2 (same cocycle) iff the intertwiner space is one-dimensional
/// with an invertible solution.
bool linearly_equivalent(const ProjRep& rho1, const ProjRep& rho2);

}  // namespace projrep
