#include "projrep/construct.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace projrep {

namespace {

std::int64_t reduce_mod(std::int64_t e, std::int64_t p) {
  std::int64_t r = e % p;
  return r < 0 ? r + p : r;
}

int checked_dim_pow(std::int64_t p, int n) {
  std::int64_t d = 1;
  for (int i = 0; i < n; ++i) {
    d *= p;
    if (d > (1 << 20)) fail(ErrorCode::TooLarge, "representation dimension too large");
  }
  return static_cast<int>(d);
}

}  // namespace

MonomialMatrix::MonomialMatrix(std::int64_t p, std::vector<int> col,
                               std::vector<std::int64_t> exp)
    : p_(p), col_(std::move(col)), exp_(std::move(exp)) {
  if (col_.size() != exp_.size()) fail(ErrorCode::ShapeMismatch, "monomial data size mismatch");
  std::vector<std::uint8_t> hit(col_.size(), 0);
  for (std::size_t i = 0; i < col_.size(); ++i) {
    if (col_[i] < 0 || col_[i] >= static_cast<int>(col_.size()) || hit[col_[i]])
      fail(ErrorCode::ShapeMismatch, "monomial columns must be a permutation");
    hit[col_[i]] = 1;
    exp_[i] = reduce_mod(exp_[i], p_);
  }
}

MonomialMatrix MonomialMatrix::identity(std::int64_t p, int dim) {
  std::vector<int> col(dim);
  for (int i = 0; i < dim; ++i) col[i] = i;
  return MonomialMatrix(p, std::move(col), std::vector<std::int64_t>(dim, 0));
}

MonomialMatrix MonomialMatrix::mul(const MonomialMatrix& o) const {
  if (p_ != o.p_ || dim() != o.dim())
    fail(ErrorCode::ShapeMismatch, "monomial product shape mismatch");
  std::vector<int> col(dim());
  std::vector<std::int64_t> exp(dim());
  for (int i = 0; i < dim(); ++i) {
    col[i] = o.col_[col_[i]];
    exp[i] = (exp_[i] + o.exp_[col_[i]]) % p_;
  }
  return MonomialMatrix(p_, std::move(col), std::move(exp));
}

MonomialMatrix MonomialMatrix::pow(std::int64_t e) const {
  MonomialMatrix r = identity(p_, dim());
  for (std::int64_t i = 0; i < e; ++i) r = r.mul(*this);
  return r;
}

MonomialMatrix MonomialMatrix::scaled(std::int64_t e) const {
  MonomialMatrix r = *this;
  for (auto& x : r.exp_) x = reduce_mod(x + e, p_);
  return r;
}

CycMatrix MonomialMatrix::dense() const {
  CycMatrix m(p_, dim(), dim());
  for (int i = 0; i < dim(); ++i) m.at(i, col_[i]) = CycScalar::root_power(p_, exp_[i]);
  return m;
}

MonomialMatrix monomial_kron(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.p() != b.p()) fail(ErrorCode::ShapeMismatch, "kron over different fields");
  const int da = a.dim(), db = b.dim();
  std::vector<int> col(da * db);
  std::vector<std::int64_t> exp(da * db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < db; ++k) {
      col[i * db + k] = a.col(i) * db + b.col(k);
      exp[i * db + k] = (a.exp(i) + b.exp(k)) % a.p();
    }
  return MonomialMatrix(a.p(), std::move(col), std::move(exp));
}

namespace {

std::vector<CycMatrix> densify(const std::vector<MonomialMatrix>& mats) {
  std::vector<CycMatrix> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(m.dense());
  return out;
}

ProjRep make_rep(AbelianPGroup group, BilinearCocycle alpha, int dim,
                 std::vector<MonomialMatrix> monomial) {
  std::vector<CycMatrix> dense = densify(monomial);
  return ProjRep{std::move(group), std::move(alpha), dim, std::move(dense),
                 std::move(monomial)};
}

// Coset machinery of the section-3.1 subgroup G3: the coset of g in G/G3 is
// indexed by the digits d_l = (RREF row l) . k(g) mod p over pivot rows l.
struct PivotCosets {
  std::int64_t p;
  FpMatrix rref_mat;
  std::vector<int> pivots;  // 0-based pivot columns, ascending

  int n() const { return static_cast<int>(pivots.size()); }

  std::vector<std::int64_t> digits(const GroupElement& g) const {
    std::vector<std::int64_t> d(pivots.size(), 0);
    for (int l = 0; l < n(); ++l) {
      std::int64_t acc = 0;
      for (int j = 0; j < rref_mat.cols(); ++j)
        acc += rref_mat.at(l, j) * (g.k[j] % p);
      d[l] = acc % p;
    }
    return d;
  }

  int coset_index(const std::vector<std::int64_t>& d) const {
    std::int64_t idx = 0;
    for (int l = 0; l < n(); ++l) idx = idx * p + d[l];
    return static_cast<int>(idx);
  }

  GroupElement rep_element(const AbelianPGroup& g, int idx) const {
    std::vector<std::int64_t> d(pivots.size(), 0);
    for (int l = n() - 1; l >= 0; --l) {
      d[l] = idx % p;
      idx /= static_cast<int>(p);
    }
    GroupElement e = g.identity();
    for (int l = 0; l < n(); ++l) e.k[pivots[l]] = d[l];
    return e;
  }
};

}  // namespace

ProjRep construct_general(const BilinearCocycle& alpha) {
  const AbelianPGroup& g = alpha.group();
  if (!g.elementary_g2())
    fail(ErrorCode::NotElementaryG2, "construct_general needs every n_j = 1");
  RrefResult rr = rref(alpha.matrix());
  PivotCosets cosets{g.p(), rr.r, rr.pivots};
  const int n = cosets.n();
  const int dim = checked_dim_pow(g.p(), n);

  std::vector<GroupElement> reps(dim, g.identity());
  for (int i = 0; i < dim; ++i) reps[i] = cosets.rep_element(g, i);

  std::vector<MonomialMatrix> images;
  auto image_of = [&](const GroupElement& gen) {
    std::vector<int> col(dim, -1);
    std::vector<std::int64_t> exp(dim, 0);
    for (int j = 0; j < dim; ++j) {
      GroupElement h = g.mul(gen, reps[j]);
      int i = cosets.coset_index(cosets.digits(h));
      GroupElement hh = g.mul(g.inverse(reps[i]), h);
      std::int64_t e = reduce_mod(evaluate(alpha, gen, reps[j]) - evaluate(alpha, reps[i], hh),
                                  g.p());
      col[i] = j;
      exp[i] = e;
    }
    return MonomialMatrix(g.p(), std::move(col), std::move(exp));
  };
  for (int i = 0; i < g.t(); ++i) images.push_back(image_of(g.x_gen(i)));
  for (int j = 0; j < g.s(); ++j) images.push_back(image_of(g.y_gen(j)));
  return make_rep(g, alpha, dim, std::move(images));
}

ProjRep construct_tensor(const BilinearCocycle& alpha) {
  const AbelianPGroup& g = alpha.group();
  if (!g.elementary_g2())
    fail(ErrorCode::NotElementaryG2, "construct_tensor needs every n_j = 1");
  const FpMatrix& c = alpha.matrix();
  const std::int64_t p = g.p();
  const int t = g.t(), s = g.s();

  if (c.is_zero()) {
    std::vector<MonomialMatrix> ones(t + s, MonomialMatrix::identity(p, 1));
    return make_rep(g, alpha, 1, std::move(ones));
  }
  if (t != s) fail(ErrorCode::PatternMismatch, "tensor construction needs s = t");

  // j_of_row[i]: the unique nonzero column of row i; must form a permutation.
  std::vector<int> j_of_row(t, -1);
  std::vector<int> row_of_col(s, -1);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < s; ++j) {
      if (c.at(i, j) == 0) continue;
      if (j_of_row[i] >= 0)
        fail(ErrorCode::PatternMismatch, "row " + std::to_string(i + 1) + " has two nonzeros");
      if (row_of_col[j] >= 0)
        fail(ErrorCode::PatternMismatch, "column " + std::to_string(j + 1) + " has two nonzeros");
      j_of_row[i] = j;
      row_of_col[j] = i;
    }
    if (j_of_row[i] < 0)
      fail(ErrorCode::PatternMismatch, "row " + std::to_string(i + 1) + " is zero");
  }

  const int pd = static_cast<int>(p);
  auto diag_block = [&](std::int64_t cval) {
    std::vector<int> col(pd);
    std::vector<std::int64_t> exp(pd);
    for (int m = 0; m < pd; ++m) {
      col[m] = m;
      exp[m] = reduce_mod(-static_cast<std::int64_t>(m) * cval, p);
    }
    return MonomialMatrix(p, std::move(col), std::move(exp));
  };
  auto shift_block = [&]() {
    std::vector<int> col(pd);
    for (int m = 0; m < pd; ++m) col[m] = (m - 1 + pd) % pd;  // 1 at (m, n), m - n = 1 mod p
    return MonomialMatrix(p, std::move(col), std::vector<std::int64_t>(pd, 0));
  };
  auto slot_kron = [&](int slot, const MonomialMatrix& block) {
    MonomialMatrix acc = MonomialMatrix::identity(p, 1);
    for (int i = 0; i < t; ++i)
      acc = monomial_kron(acc, i == slot ? block : MonomialMatrix::identity(p, pd));
    return acc;
  };

  std::vector<MonomialMatrix> images;
  for (int i = 0; i < t; ++i) images.push_back(slot_kron(i, diag_block(c.at(i, j_of_row[i]))));
  for (int j = 0; j < s; ++j) images.push_back(slot_kron(row_of_col[j], shift_block()));
  return make_rep(g, alpha, checked_dim_pow(p, t), std::move(images));
}

ProjRep construct_inflated(const BilinearCocycle& alpha) {
  const AbelianPGroup& g = alpha.group();
  if (g.elementary_g2()) {
    ProjRep rep = construct_general(alpha);
    return rep;
  }
  AbelianPGroup quotient =
      AbelianPGroup::make(g.p(), g.r(), std::vector<int>(static_cast<std::size_t>(g.s()), 1));
  BilinearCocycle beta(quotient, alpha.matrix());
  ProjRep rep = construct_general(beta);
  // The images have order p, so the canonical-order product on the full group
  // automatically reads every k_j mod p: the same matrices represent alpha.
  return ProjRep{g, alpha, rep.dim, std::move(rep.gen_images), std::move(rep.monomial_images)};
}

namespace {

// Assigns abstract-H coordinates (with respect to the generator list, in
// order) to every element of the subgroup generated by h_gens.
struct SubgroupChart {
  std::vector<std::int64_t> coords;  // |G| x gens, -1-filled rows = not a member
  std::vector<std::uint8_t> member;
  std::size_t ngens;

  bool contains(std::uint64_t idx) const { return member[idx]; }
};

SubgroupChart chart_subgroup(const AbelianPGroup& g, const std::vector<GroupElement>& gens,
                             const std::vector<std::int64_t>& gen_orders, std::uint64_t cap) {
  if (g.order() > cap) fail(ErrorCode::TooLarge, "group too large to chart subgroup");
  SubgroupChart chart;
  chart.ngens = gens.size();
  chart.member.assign(g.order(), 0);
  chart.coords.assign(g.order() * gens.size(), 0);
  std::vector<std::uint64_t> work;
  const std::uint64_t id = g.index_of(g.identity());
  chart.member[id] = 1;
  work.push_back(id);
  while (!work.empty()) {
    std::uint64_t cur = work.back();
    work.pop_back();
    GroupElement e = g.element_at(cur);
    for (std::size_t l = 0; l < gens.size(); ++l) {
      GroupElement nxt = g.mul(e, gens[l]);
      std::uint64_t idx = g.index_of(nxt);
      if (chart.member[idx]) continue;
      chart.member[idx] = 1;
      for (std::size_t q = 0; q < gens.size(); ++q)
        chart.coords[idx * gens.size() + q] = chart.coords[cur * gens.size() + q];
      auto& c = chart.coords[idx * gens.size() + l];
      c = (c + 1) % gen_orders[l];
      work.push_back(idx);
    }
  }
  return chart;
}

}  // namespace

ProjRep induce(const AbelianPGroup& g, const std::vector<GroupElement>& h_gens,
               const ProjRep& rho_h, const BilinearCocycle& alpha, std::uint64_t cap) {
  if (!(alpha.group() == g)) fail(ErrorCode::GroupMismatch, "cocycle lives on a different group");
  const AbelianPGroup& habs = rho_h.group;
  if (static_cast<int>(h_gens.size()) != habs.t() + habs.s())
    fail(ErrorCode::CocycleMismatch, "generator list does not match the abstract subgroup");

  // Generator l of the abstract group must have the same order as h_gens[l].
  std::vector<std::int64_t> orders;
  std::vector<GroupElement> abstract_gens;
  for (int i = 0; i < habs.t(); ++i) {
    orders.push_back(habs.x_order(i));
    abstract_gens.push_back(habs.x_gen(i));
  }
  for (int j = 0; j < habs.s(); ++j) {
    orders.push_back(habs.y_order(j));
    abstract_gens.push_back(habs.y_gen(j));
  }
  for (std::size_t l = 0; l < h_gens.size(); ++l) {
    if (!g.valid(h_gens[l])) fail(ErrorCode::NotASubgroup, "generator outside the group");
    if (!g.power(h_gens[l], orders[l]).is_identity())
      fail(ErrorCode::CocycleMismatch, "generator order mismatch with the abstract subgroup");
    for (std::int64_t e = 1; e < orders[l]; ++e)
      if (g.power(h_gens[l], e).is_identity())
        fail(ErrorCode::CocycleMismatch, "generator order mismatch with the abstract subgroup");
  }
  // Bilinear cocycles are determined by generator pairs, so this check is
  // complete: rho_h's cocycle must be the restriction of alpha.
  for (std::size_t a = 0; a < h_gens.size(); ++a)
    for (std::size_t b = 0; b < h_gens.size(); ++b)
      if (evaluate(alpha, h_gens[a], h_gens[b]) !=
          evaluate(rho_h.cocycle, abstract_gens[a], abstract_gens[b]))
        fail(ErrorCode::CocycleMismatch, "rho_h does not represent the restricted cocycle");

  SubgroupChart chart = chart_subgroup(g, h_gens, orders, cap);
  std::vector<GroupElement> trans = transversal(g, h_gens, cap);
  const int blocks = static_cast<int>(trans.size());
  const int d = rho_h.dim;
  const int dim = blocks * d;

  auto h_coords = [&](std::uint64_t idx) {
    GroupElement e = habs.identity();
    for (int i = 0; i < habs.t(); ++i) e.m[i] = chart.coords[idx * chart.ngens + i];
    for (int j = 0; j < habs.s(); ++j)
      e.k[j] = chart.coords[idx * chart.ngens + habs.t() + j];
    return e;
  };

  std::vector<CycMatrix> images;
  auto image_of = [&](const GroupElement& gen) {
    CycMatrix mat(g.p(), dim, dim);
    for (int bj = 0; bj < blocks; ++bj) {
      GroupElement gtj = g.mul(gen, trans[bj]);
      for (int bi = 0; bi < blocks; ++bi) {
        GroupElement u = g.mul(g.inverse(trans[bi]), gtj);
        std::uint64_t idx = g.index_of(u);
        if (!chart.contains(idx)) continue;
        std::int64_t e = reduce_mod(
            evaluate(alpha, gen, trans[bj]) - evaluate(alpha, trans[bi], u), g.p());
        CycMatrix block = scalar_mul(CycScalar::root_power(g.p(), e),
                                     evaluate_rep(rho_h, h_coords(idx)));
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) mat.at(bi * d + r, bj * d + c) = block.at(r, c);
      }
    }
    return mat;
  };
  for (int i = 0; i < g.t(); ++i) images.push_back(image_of(g.x_gen(i)));
  for (int j = 0; j < g.s(); ++j) images.push_back(image_of(g.y_gen(j)));
  return ProjRep{g, alpha, dim, std::move(images), std::nullopt};
}

std::int64_t conjugate_scaling_exponent(const BilinearCocycle& alpha, const GroupElement& z,
                                        const GroupElement& x) {
  const AbelianPGroup& g = alpha.group();
  // alpha^{-1}(xz, z^{-1}) alpha^{-1}(z, z^{-1}xz) alpha(z, z^{-1}), with
  // z^{-1} x z = x since G is abelian.
  GroupElement zinv = g.inverse(z);
  std::int64_t e = -evaluate(alpha, g.mul(x, z), zinv) - evaluate(alpha, z, x) +
                   evaluate(alpha, z, zinv);
  return reduce_mod(e, g.p());
}

ProjRep conjugate_rep(const ProjRep& rho, const GroupElement& z) {
  const AbelianPGroup& g = rho.group;
  g.require_element(z);
  ProjRep out = rho;
  std::vector<GroupElement> gens;
  for (int i = 0; i < g.t(); ++i) gens.push_back(g.x_gen(i));
  for (int j = 0; j < g.s(); ++j) gens.push_back(g.y_gen(j));
  for (std::size_t l = 0; l < gens.size(); ++l) {
    std::int64_t e = conjugate_scaling_exponent(rho.cocycle, z, gens[l]);
    out.gen_images[l] = scalar_mul(CycScalar::root_power(g.p(), e), rho.gen_images[l]);
    if (out.monomial_images)
      (*out.monomial_images)[l] = (*rho.monomial_images)[l].scaled(e);
  }
  return out;
}

MonomialMatrix evaluate_rep_monomial(const ProjRep& rho, const GroupElement& g) {
  if (!rho.monomial_images)
    fail(ErrorCode::ShapeMismatch, "representation has no monomial form");
  rho.group.require_element(g);
  MonomialMatrix acc = MonomialMatrix::identity(rho.group.p(), rho.dim);
  const auto& imgs = *rho.monomial_images;
  for (int i = 0; i < rho.group.t(); ++i)
    if (g.m[i] != 0) acc = acc.mul(imgs[i].pow(g.m[i]));
  for (int j = 0; j < rho.group.s(); ++j)
    if (g.k[j] != 0) acc = acc.mul(imgs[rho.group.t() + j].pow(g.k[j]));
  return acc;
}

CycMatrix evaluate_rep(const ProjRep& rho, const GroupElement& g) {
  if (rho.monomial_images) return evaluate_rep_monomial(rho, g).dense();
  rho.group.require_element(g);
  CycMatrix acc = CycMatrix::identity(rho.group.p(), rho.dim);
  auto mul_pow = [&](const CycMatrix& m, std::int64_t e) {
    for (std::int64_t i = 0; i < e; ++i) acc = mat_mul(acc, m);
  };
  for (int i = 0; i < rho.group.t(); ++i) mul_pow(rho.gen_images[i], g.m[i]);
  for (int j = 0; j < rho.group.s(); ++j) mul_pow(rho.gen_images[rho.group.t() + j], g.k[j]);
  return acc;
}

namespace {

// Flat per-element tables for the exhaustive identity sweep.
struct RepTable {
  int dim;
  std::int64_t p;
  std::vector<int> col;           // order x dim
  std::vector<std::int64_t> exp;  // order x dim
  std::vector<std::int64_t> u;    // order x s: u_j(h) = sum_i C[i,j] m_i(h) mod p
  std::vector<std::int64_t> kk;   // order x s: k_j mod p
};

RepTable build_table(const ProjRep& rho) {
  const AbelianPGroup& g = rho.group;
  const std::uint64_t order = g.order();
  const int s = g.s(), t = g.t();
  RepTable tab;
  tab.dim = rho.dim;
  tab.p = g.p();
  tab.col.resize(order * rho.dim);
  tab.exp.resize(order * rho.dim);
  tab.u.resize(order * s);
  tab.kk.resize(order * s);
  const FpMatrix& c = rho.cocycle.matrix();
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    GroupElement e = g.element_at(idx);
    MonomialMatrix m = evaluate_rep_monomial(rho, e);
    for (int i = 0; i < rho.dim; ++i) {
      tab.col[idx * rho.dim + i] = m.col(i);
      tab.exp[idx * rho.dim + i] = m.exp(i);
    }
    for (int j = 0; j < s; ++j) {
      std::int64_t acc = 0;
      for (int i = 0; i < t; ++i) acc += c.at(i, j) * (e.m[i] % tab.p);
      tab.u[idx * s + j] = acc % tab.p;
      tab.kk[idx * s + j] = e.k[j] % tab.p;
    }
  }
  return tab;
}

}  // namespace

IdentityCheck verify_cocycle_identity(const ProjRep& rho, std::uint64_t exhaustive_limit,
                                      std::uint64_t sample_pairs, std::uint64_t seed) {
  const AbelianPGroup& g = rho.group;
  IdentityCheck out;
  const std::int64_t p = g.p();

  if (rho.monomial_images && g.order() <= exhaustive_limit) {
    out.exhaustive = true;
    RepTable tab = build_table(rho);
    const int d = tab.dim;
    const int s = g.s(), t = g.t();
    const std::uint64_t order = g.order();
    // strides for index arithmetic
    std::vector<std::int64_t> mods;
    for (int i = 0; i < t; ++i) mods.push_back(g.x_order(i));
    for (int j = 0; j < s; ++j) mods.push_back(g.y_order(j));
    std::vector<std::uint64_t> stride(mods.size(), 1);
    for (int c = static_cast<int>(mods.size()) - 2; c >= 0; --c)
      stride[c] = stride[c + 1] * static_cast<std::uint64_t>(mods[c + 1]);
    std::vector<std::int64_t> dg(mods.size()), dh(mods.size());
    auto digits_of = [&](std::uint64_t idx, std::vector<std::int64_t>& d2) {
      for (int c = static_cast<int>(mods.size()) - 1; c >= 0; --c) {
        d2[c] = static_cast<std::int64_t>(idx % mods[c]);
        idx /= mods[c];
      }
    };
    for (std::uint64_t gi = 0; gi < order; ++gi) {
      digits_of(gi, dg);
      for (std::uint64_t hi = 0; hi < order; ++hi) {
        digits_of(hi, dh);
        std::uint64_t prod = 0;
        for (std::size_t c2 = 0; c2 < mods.size(); ++c2)
          prod += static_cast<std::uint64_t>((dg[c2] + dh[c2]) % mods[c2]) * stride[c2];
        // e = sum_j k_j(g) * u_j(h)
        std::int64_t e = 0;
        for (int j = 0; j < s; ++j) e += tab.kk[gi * s + j] * tab.u[hi * s + j];
        e %= p;
        const int* ag = &tab.col[gi * d];
        const std::int64_t* xg = &tab.exp[gi * d];
        const int* ah = &tab.col[hi * d];
        const std::int64_t* xh = &tab.exp[hi * d];
        const int* ap = &tab.col[prod * d];
        const std::int64_t* xp = &tab.exp[prod * d];
        bool good = true;
        for (int i = 0; i < d; ++i) {
          if (ap[i] != ah[ag[i]] || xp[i] != (xg[i] + xh[ag[i]] + e) % p) {
            good = false;
            break;
          }
        }
        ++out.pairs_checked;
        if (!good) return out;
      }
    }
    out.ok = true;
    return out;
  }

  // Sampled fallback (and dense-only representations).
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, g.order() - 1);
  for (std::uint64_t it = 0; it < sample_pairs; ++it) {
    GroupElement a = g.element_at(pick(rng));
    GroupElement b = g.element_at(pick(rng));
    std::int64_t e = evaluate(rho.cocycle, a, b);
    CycMatrix lhs = evaluate_rep(rho, g.mul(a, b));
    CycMatrix rhs = scalar_mul(CycScalar::root_power(p, e),
                               mat_mul(evaluate_rep(rho, a), evaluate_rep(rho, b)));
    ++out.pairs_checked;
    if (!mat_eq(lhs, rhs)) return out;
  }
  out.ok = true;
  return out;
}

bool mackey_disjoint(const BilinearCocycle& alpha) {
  const AbelianPGroup& g = alpha.group();
  RrefResult rr = rref(alpha.matrix());
  const int n = static_cast<int>(rr.pivots.size());
  const std::int64_t p = g.p();
  std::int64_t count = 1;
  for (int l = 0; l < n; ++l) count *= p;
  // z runs over nonidentity pivot-column products; k(z) is its digit vector.
  for (std::int64_t zi = 1; zi < count; ++zi) {
    std::vector<std::int64_t> kz(g.s(), 0);
    std::int64_t v = zi;
    for (int l = n - 1; l >= 0; --l) {
      kz[rr.pivots[l]] = v % p;
      v /= p;
    }
    bool nonzero = false;
    for (int i = 0; i < g.t() && !nonzero; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < g.s(); ++j) acc += alpha.matrix().at(i, j) * kz[j];
      if (acc % p != 0) nonzero = true;
    }
    if (!nonzero) return false;
  }
  return true;
}

IntertwinerResult intertwiner(const ProjRep& rho1, const ProjRep& rho2) {
  if (!(rho1.group == rho2.group) || !(rho1.cocycle == rho2.cocycle))
    fail(ErrorCode::GroupMismatch, "intertwiner needs a common group and cocycle");
  if (rho1.dim != rho2.dim) return {0, false};
  const int d = rho1.dim;
  const std::int64_t p = rho1.group.p();
  const int ngens = rho1.generator_count();
  const int nvars = d * d;
  CycMatrix sys(p, ngens * nvars, nvars);
  int row = 0;
  for (int l = 0; l < ngens; ++l) {
    const CycMatrix& a = rho1.gen_images[l];
    const CycMatrix& b = rho2.gen_images[l];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          if (!a.at(k, j).is_zero()) sys.at(row, i * d + k) += a.at(k, j);   // + M[i,k] A[k,j]
          if (!b.at(i, k).is_zero()) sys.at(row, k * d + j) -= b.at(i, k);   // - B[i,k] M[k,j]
        }
        ++row;
      }
  }
  auto basis = cyc_kernel_basis(sys);
  IntertwinerResult res;
  res.dimension = static_cast<int>(basis.size());
  if (res.dimension >= 1) {
    CycMatrix m(p, d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = basis.front()[i * d + j];
    res.invertible_sample = (cyc_rank(m) == d);
  }
  return res;
}

bool linearly_equivalent(const ProjRep& rho1, const ProjRep& rho2) {
  IntertwinerResult r = intertwiner(rho1, rho2);
  return r.dimension == 1 && r.invertible_sample;
}

}  // namespace projrep
