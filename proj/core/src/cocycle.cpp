#include "projrep/cocycle.hpp"

#include <string>

namespace projrep {

BilinearCocycle::BilinearCocycle(AbelianPGroup group, FpMatrix c)
    : group_(std::move(group)), c_(std::move(c)) {
  if (c_.p() != group_.p()) fail(ErrorCode::GroupMismatch, "cocycle modulus differs from group prime");
  if (c_.rows() != group_.t() || c_.cols() != group_.s())
    fail(ErrorCode::ShapeMismatch, "cocycle matrix must be t x s");
}

std::int64_t evaluate(const BilinearCocycle& alpha, const GroupElement& g, const GroupElement& h) {
  const AbelianPGroup& grp = alpha.group();
  grp.require_element(g);
  grp.require_element(h);
  const std::int64_t p = grp.p();
  std::int64_t e = 0;
  for (int i = 0; i < grp.t(); ++i) {
    const std::int64_t mi = h.m[i] % p;  // m' from the second argument
    if (mi == 0) continue;
    for (int j = 0; j < grp.s(); ++j) {
      const std::int64_t kj = g.k[j] % p;  // k from the first argument
      if (kj == 0) continue;
      e += alpha.matrix().at(i, j) * mi % p * kj;
    }
  }
  return e % p;
}

FpMatrix a_matrix(const BilinearCocycle& alpha) {
  const int t = alpha.group().t(), s = alpha.group().s();
  const std::int64_t p = alpha.group().p();
  FpMatrix a(p, s + t, s + t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < s; ++j) {
      a.set(i, t + j, alpha.matrix().at(i, j));
      a.set(t + j, i, p - alpha.matrix().at(i, j));
    }
  return a;
}

RegularSet regular_elements(const BilinearCocycle& alpha) {
  const AbelianPGroup& g = alpha.group();
  const std::int64_t p = g.p();
  RegularSet out;
  for (int i = 0; i < g.t(); ++i)
    if (g.r()[i] >= 2) out.generators.push_back(g.x_gen(i, p));
  for (int j = 0; j < g.s(); ++j)
    if (g.n()[j] >= 2) out.generators.push_back(g.y_gen(j, p));
  FpMatrix a = a_matrix(alpha);
  for (const auto& b : kernel_basis(a)) {
    GroupElement e = g.identity();
    for (int i = 0; i < g.t(); ++i) e.m[i] = b[i];
    for (int j = 0; j < g.s(); ++j) e.k[j] = b[g.t() + j];
    if (!e.is_identity()) out.generators.push_back(std::move(e));
  }
  out.index_exponent = rank(a);
  return out;
}

bool is_regular_bruteforce(const BilinearCocycle& alpha, const GroupElement& g,
                           std::uint64_t cap) {
  const AbelianPGroup& grp = alpha.group();
  grp.require_element(g);
  if (grp.order() > cap) fail(ErrorCode::TooLarge, "group too large for brute-force regularity");
  for (std::uint64_t idx = 0; idx < grp.order(); ++idx) {
    GroupElement x = grp.element_at(idx);
    if (evaluate(alpha, g, x) != evaluate(alpha, x, g)) return false;
  }
  return true;
}

namespace {

void require_valid_form(const AbelianPGroup& g, const SubgroupSpec& spec) {
  // subgroup() performs the full validity checks for the form.
  (void)subgroup(g, spec, /*cap=*/0);
}

}  // namespace

BilinearCocycle restrict_cocycle(const BilinearCocycle& alpha, const SubgroupSpec& spec) {
  const AbelianPGroup& g = alpha.group();
  require_valid_form(g, spec);
  std::vector<int> r = g.r();
  std::vector<int> n = g.n();
  FpMatrix c = alpha.matrix();
  switch (spec.form) {
    case SubgroupForm::X:
    case SubgroupForm::B:
      c = c.without_row(spec.i - 1);
      r.erase(r.begin() + (spec.i - 1));
      break;
    case SubgroupForm::Y:
      c = c.without_col(spec.j - 1);
      n.erase(n.begin() + (spec.j - 1));
      break;
    case SubgroupForm::A:
      c = c.without_rows(spec.i - 1, spec.j - 1);
      r.erase(r.begin() + (std::max(spec.i, spec.j) - 1));
      r.erase(r.begin() + (std::min(spec.i, spec.j) - 1));
      break;
    case SubgroupForm::C:
      c = c.without_row(spec.i - 1).without_col(spec.j - 1);
      r.erase(r.begin() + (spec.i - 1));
      n.erase(n.begin() + (spec.j - 1));
      break;
    case SubgroupForm::Full:
      break;
  }
  // Deleting entries keeps the exponent lists non-increasing, but the carrier
  // may lose all factors on one side; unchecked() admits that.
  return BilinearCocycle(AbelianPGroup::unchecked(g.p(), std::move(r), std::move(n)), std::move(c));
}

GroupElement to_subgroup_coords(const AbelianPGroup& g, const SubgroupSpec& spec,
                                const GroupElement& h) {
  g.require_element(h);
  const std::int64_t p = g.p();
  auto require_multiple = [&](std::int64_t v, std::int64_t mod) {
    if (v % mod != 0)
      fail(ErrorCode::GroupMismatch, "element is not in the subgroup " + spec.str());
  };
  GroupElement out = h;
  auto drop_m = [&](int i) { out.m.erase(out.m.begin() + i); };
  auto drop_k = [&](int j) { out.k.erase(out.k.begin() + j); };
  switch (spec.form) {
    case SubgroupForm::X:
      require_multiple(h.m[spec.i - 1], p);
      drop_m(spec.i - 1);
      break;
    case SubgroupForm::B:
      require_multiple(h.m[spec.i - 1], p * p);
      drop_m(spec.i - 1);
      break;
    case SubgroupForm::Y:
      require_multiple(h.k[spec.j - 1], g.y_order(spec.j - 1));
      drop_k(spec.j - 1);
      break;
    case SubgroupForm::A:
      require_multiple(h.m[spec.i - 1], p);
      require_multiple(h.m[spec.j - 1], p);
      drop_m(std::max(spec.i, spec.j) - 1);
      drop_m(std::min(spec.i, spec.j) - 1);
      break;
    case SubgroupForm::C:
      require_multiple(h.m[spec.i - 1], p);
      require_multiple(h.k[spec.j - 1], g.y_order(spec.j - 1));
      drop_m(spec.i - 1);
      drop_k(spec.j - 1);
      break;
    case SubgroupForm::Full:
      break;
  }
  return out;
}

BilinearCocycle inflate(const BilinearCocycle& beta, const AbelianPGroup& target) {
  const AbelianPGroup& src = beta.group();
  if (!src.elementary_g2())
    fail(ErrorCode::ShapeMismatch, "inflation source must have elementary abelian G2");
  if (src.p() != target.p() || src.r() != target.r() || src.s() != target.s())
    fail(ErrorCode::ShapeMismatch, "inflation target must share p, r and s");
  return BilinearCocycle(target, beta.matrix());
}

std::uint64_t class_count(const AbelianPGroup& g, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int c = 0; c < g.t() * g.s(); ++c) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(g.p()), &total) || total > cap)
      fail(ErrorCode::TooLarge, "p^(st) exceeds class cap " + std::to_string(cap));
  }
  return total;
}

std::vector<BilinearCocycle> enumerate_classes(const AbelianPGroup& g, std::uint64_t cap) {
  const std::uint64_t total = class_count(g, cap);
  const int cells = g.t() * g.s();
  std::vector<BilinearCocycle> out;
  out.reserve(total);
  std::vector<std::int64_t> entries(cells, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    // row-major digits, c(1,1) most significant: lexicographic emission
    for (int c = cells - 1; c >= 0; --c) {
      entries[c] = static_cast<std::int64_t>(v % g.p());
      v /= g.p();
    }
    out.emplace_back(g, FpMatrix(g.p(), g.t(), g.s(), entries));
  }
  return out;
}

}  // namespace projrep
