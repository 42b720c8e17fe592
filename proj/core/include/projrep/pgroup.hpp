#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projrep/error.hpp"

namespace projrep {

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

/// Element of an abelian p-group, written as the canonical word
/// x1^m1 ... xt^mt y1^k1 ... ys^ks and stored as the exponent vectors (m, k).
struct GroupElement {
  std::vector<std::int64_t> m;
  std::vector<std::int64_t> k;

  bool operator==(const GroupElement&) const = default;
  bool is_identity() const;
};

/// G = G1 x G2 with G1 = Z/p^{r1} x ... x Z/p^{rt} (generators x_i) and
/// G2 = Z/p^{n1} x ... x Z/p^{ns} (generators y_j); r and n non-increasing.
/// G2 is elementary abelian exactly when every n_j = 1.
class AbelianPGroup {
public:
  /// Validated constructor: p prime, both factor lists nonempty,
  /// non-increasing, entries >= 1.
  static AbelianPGroup make(std::int64_t p, std::vector<int> r, std::vector<int> n);

  /// Carrier for restricted cocycles; factor lists may be empty.
  static AbelianPGroup unchecked(std::int64_t p, std::vector<int> r, std::vector<int> n);

  std::int64_t p() const { return p_; }
  int t() const { return static_cast<int>(r_.size()); }
  int s() const { return static_cast<int>(n_.size()); }
  const std::vector<int>& r() const { return r_; }
  const std::vector<int>& n() const { return n_; }
  std::int64_t x_order(int i) const { return x_mod_[i]; }
  std::int64_t y_order(int j) const { return y_mod_[j]; }
  std::uint64_t order() const { return order_; }
  bool elementary_g2() const;

  bool operator==(const AbelianPGroup&) const = default;

  GroupElement identity() const;
  GroupElement x_gen(int i, std::int64_t e = 1) const;  // x_{i+1}^e, 0-based i
  GroupElement y_gen(int j, std::int64_t e = 1) const;
  bool valid(const GroupElement& g) const;
  void require_element(const GroupElement& g) const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, std::int64_t e) const;

  /// Lexicographic position of g in the enumeration order (m1 most significant).
  std::uint64_t index_of(const GroupElement& g) const;
  GroupElement element_at(std::uint64_t idx) const;

  /// All |G| elements in lexicographic order on (m, k); identity first.
  std::vector<GroupElement> enumerate(std::uint64_t cap = kDefaultElementCap) const;

private:
  AbelianPGroup(std::int64_t p, std::vector<int> r, std::vector<int> n, bool checked);

  std::int64_t p_ = 2;
  std::vector<int> r_;
  std::vector<int> n_;
  std::vector<std::int64_t> x_mod_;  // p^{r_i}
  std::vector<std::int64_t> y_mod_;  // p^{n_j}
  std::uint64_t order_ = 1;
};

enum class SubgroupForm { X, Y, A, B, C, Full };

/// Canonical small-index subgroups of section-4 type. Indices are 1-based,
/// matching the x_i / y_j numbering.
struct SubgroupSpec {
  SubgroupForm form = SubgroupForm::Full;
  int i = 0;
  int j = 0;

  static SubgroupSpec x(int i) { return {SubgroupForm::X, i, 0}; }
  static SubgroupSpec y(int j) { return {SubgroupForm::Y, 0, j}; }
  static SubgroupSpec a(int i, int j) { return {SubgroupForm::A, i, j}; }
  static SubgroupSpec b(int i) { return {SubgroupForm::B, i, 0}; }
  static SubgroupSpec c(int i, int j) { return {SubgroupForm::C, i, j}; }
  static SubgroupSpec full() { return {SubgroupForm::Full, 0, 0}; }

  bool operator==(const SubgroupSpec&) const = default;
  std::string str() const;
};

struct Subgroup {
  SubgroupSpec spec;
  std::vector<GroupElement> generators;
  std::uint64_t index;  // p for X/Y, p^2 for A/B/C, 1 for Full
};

/// Generators of the subgroup named by spec, with its index in G. The index is
/// re-verified by enumeration whenever |G| is under the cap.
Subgroup subgroup(const AbelianPGroup& g, const SubgroupSpec& spec,
                  std::uint64_t cap = kDefaultElementCap);

/// Membership bitmap (indexed by enumeration position) of the subgroup
/// generated by gens, together with its size.
struct Closure {
  std::vector<std::uint8_t> member;
  std::uint64_t size = 0;
};
Closure subgroup_closure(const AbelianPGroup& g, const std::vector<GroupElement>& gens,
                         std::uint64_t cap = kDefaultElementCap);

/// Coset representatives of <gens> in G, identity first, sorted
/// lexicographically on exponent vectors. Per coset the representative is the
/// minimum in the right-to-left (colexicographic) reading, which makes the
/// transversal of a section-3.1 subgroup the set of pivot-column y-products.
std::vector<GroupElement> transversal(const AbelianPGroup& g,
                                      const std::vector<GroupElement>& gens,
                                      std::uint64_t cap = kDefaultElementCap);

}  // namespace projrep
