#include "projrep/pgroup.hpp"

#include <algorithm>
#include <deque>

namespace projrep {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t reduce(std::int64_t v, std::int64_t mod) {
  std::int64_t r = v % mod;
  return r < 0 ? r + mod : r;
}

// Colexicographic comparison: rightmost exponent is most significant.
bool colex_less(const GroupElement& a, const GroupElement& b) {
  for (std::size_t j = a.k.size(); j-- > 0;) {
    if (a.k[j] != b.k[j]) return a.k[j] < b.k[j];
  }
  for (std::size_t i = a.m.size(); i-- > 0;) {
    if (a.m[i] != b.m[i]) return a.m[i] < b.m[i];
  }
  return false;
}

bool lex_less(const GroupElement& a, const GroupElement& b) {
  if (a.m != b.m) return a.m < b.m;
  return a.k < b.k;
}

}  // namespace

bool GroupElement::is_identity() const {
  auto zero = [](std::int64_t v) { return v == 0; };
  return std::all_of(m.begin(), m.end(), zero) && std::all_of(k.begin(), k.end(), zero);
}

AbelianPGroup::AbelianPGroup(std::int64_t p, std::vector<int> r, std::vector<int> n, bool checked)
    : p_(p), r_(std::move(r)), n_(std::move(n)) {
  if (!is_prime(p_)) fail(ErrorCode::NotPrime, std::to_string(p_) + " is not prime");
  if (checked && (r_.empty() || n_.empty()))
    fail(ErrorCode::EmptyFactorList, "both factor lists must be nonempty");
  auto check_list = [](const std::vector<int>& v, const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1) fail(ErrorCode::NotSorted, std::string(name) + " entries must be >= 1");
      if (i > 0 && v[i] > v[i - 1])
        fail(ErrorCode::NotSorted, std::string(name) + " must be non-increasing");
    }
  };
  check_list(r_, "r");
  check_list(n_, "n");
  auto pow_checked = [this](int e) {
    std::int64_t v = 1;
    for (int i = 0; i < e; ++i) {
      if (__builtin_mul_overflow(v, p_, &v)) fail(ErrorCode::TooLarge, "factor order overflows");
    }
    return v;
  };
  order_ = 1;
  for (int e : r_) {
    x_mod_.push_back(pow_checked(e));
    if (__builtin_mul_overflow(order_, static_cast<std::uint64_t>(x_mod_.back()), &order_))
      fail(ErrorCode::TooLarge, "group order overflows 64 bits");
  }
  for (int e : n_) {
    y_mod_.push_back(pow_checked(e));
    if (__builtin_mul_overflow(order_, static_cast<std::uint64_t>(y_mod_.back()), &order_))
      fail(ErrorCode::TooLarge, "group order overflows 64 bits");
  }
}

AbelianPGroup AbelianPGroup::make(std::int64_t p, std::vector<int> r, std::vector<int> n) {
  return AbelianPGroup(p, std::move(r), std::move(n), true);
}

AbelianPGroup AbelianPGroup::unchecked(std::int64_t p, std::vector<int> r, std::vector<int> n) {
  return AbelianPGroup(p, std::move(r), std::move(n), false);
}

bool AbelianPGroup::elementary_g2() const {
  return std::all_of(n_.begin(), n_.end(), [](int e) { return e == 1; });
}

GroupElement AbelianPGroup::identity() const {
  return {std::vector<std::int64_t>(r_.size(), 0), std::vector<std::int64_t>(n_.size(), 0)};
}

GroupElement AbelianPGroup::x_gen(int i, std::int64_t e) const {
  GroupElement g = identity();
  g.m[i] = reduce(e, x_mod_[i]);
  return g;
}

GroupElement AbelianPGroup::y_gen(int j, std::int64_t e) const {
  GroupElement g = identity();
  g.k[j] = reduce(e, y_mod_[j]);
  return g;
}

bool AbelianPGroup::valid(const GroupElement& g) const {
  if (g.m.size() != r_.size() || g.k.size() != n_.size()) return false;
  for (std::size_t i = 0; i < g.m.size(); ++i)
    if (g.m[i] < 0 || g.m[i] >= x_mod_[i]) return false;
  for (std::size_t j = 0; j < g.k.size(); ++j)
    if (g.k[j] < 0 || g.k[j] >= y_mod_[j]) return false;
  return true;
}

void AbelianPGroup::require_element(const GroupElement& g) const {
  if (!valid(g)) fail(ErrorCode::ShapeMismatch, "element does not belong to this group");
}

GroupElement AbelianPGroup::mul(const GroupElement& a, const GroupElement& b) const {
  require_element(a);
  require_element(b);
  GroupElement c = identity();
  for (std::size_t i = 0; i < c.m.size(); ++i) c.m[i] = reduce(a.m[i] + b.m[i], x_mod_[i]);
  for (std::size_t j = 0; j < c.k.size(); ++j) c.k[j] = reduce(a.k[j] + b.k[j], y_mod_[j]);
  return c;
}

GroupElement AbelianPGroup::inverse(const GroupElement& a) const {
  require_element(a);
  GroupElement c = identity();
  for (std::size_t i = 0; i < c.m.size(); ++i) c.m[i] = reduce(-a.m[i], x_mod_[i]);
  for (std::size_t j = 0; j < c.k.size(); ++j) c.k[j] = reduce(-a.k[j], y_mod_[j]);
  return c;
}

GroupElement AbelianPGroup::power(const GroupElement& a, std::int64_t e) const {
  require_element(a);
  GroupElement c = identity();
  for (std::size_t i = 0; i < c.m.size(); ++i) {
    std::int64_t base = reduce(a.m[i], x_mod_[i]);
    c.m[i] = reduce(base * reduce(e, x_mod_[i]) % x_mod_[i], x_mod_[i]);
  }
  for (std::size_t j = 0; j < c.k.size(); ++j) {
    std::int64_t base = reduce(a.k[j], y_mod_[j]);
    c.k[j] = reduce(base * reduce(e, y_mod_[j]) % y_mod_[j], y_mod_[j]);
  }
  return c;
}

std::uint64_t AbelianPGroup::index_of(const GroupElement& g) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < g.m.size(); ++i)
    idx = idx * static_cast<std::uint64_t>(x_mod_[i]) + static_cast<std::uint64_t>(g.m[i]);
  for (std::size_t j = 0; j < g.k.size(); ++j)
    idx = idx * static_cast<std::uint64_t>(y_mod_[j]) + static_cast<std::uint64_t>(g.k[j]);
  return idx;
}

GroupElement AbelianPGroup::element_at(std::uint64_t idx) const {
  GroupElement g = identity();
  for (std::size_t j = g.k.size(); j-- > 0;) {
    g.k[j] = static_cast<std::int64_t>(idx % y_mod_[j]);
    idx /= y_mod_[j];
  }
  for (std::size_t i = g.m.size(); i-- > 0;) {
    g.m[i] = static_cast<std::int64_t>(idx % x_mod_[i]);
    idx /= x_mod_[i];
  }
  return g;
}

std::vector<GroupElement> AbelianPGroup::enumerate(std::uint64_t cap) const {
  if (order_ > cap)
    fail(ErrorCode::TooLarge,
         "group order " + std::to_string(order_) + " exceeds cap " + std::to_string(cap));
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::uint64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::string SubgroupSpec::str() const {
  switch (form) {
    case SubgroupForm::X: return "X" + std::to_string(i);
    case SubgroupForm::Y: return "Y" + std::to_string(j);
    case SubgroupForm::A: return "A" + std::to_string(i) + "," + std::to_string(j);
    case SubgroupForm::B: return "B" + std::to_string(i);
    case SubgroupForm::C: return "C" + std::to_string(i) + "," + std::to_string(j);
    case SubgroupForm::Full: return "FULL";
  }
  return "?";
}

Subgroup subgroup(const AbelianPGroup& g, const SubgroupSpec& spec, std::uint64_t cap) {
  const int t = g.t(), s = g.s();
  auto need_x = [&](int i) {
    if (i < 1 || i > t) fail(ErrorCode::InvalidForm, "x index " + std::to_string(i) + " out of range");
  };
  auto need_y = [&](int j) {
    if (j < 1 || j > s) fail(ErrorCode::InvalidForm, "y index " + std::to_string(j) + " out of range");
    if (g.n()[j - 1] != 1)
      fail(ErrorCode::InvalidForm, "form needs n_" + std::to_string(j) + " = 1");
  };

  std::vector<GroupElement> gens;
  std::uint64_t index = 1;
  const std::uint64_t p = static_cast<std::uint64_t>(g.p());
  switch (spec.form) {
    case SubgroupForm::X: {
      need_x(spec.i);
      for (int i = 0; i < t; ++i) gens.push_back(g.x_gen(i, i == spec.i - 1 ? g.p() : 1));
      for (int j = 0; j < s; ++j) gens.push_back(g.y_gen(j));
      index = p;
      break;
    }
    case SubgroupForm::Y: {
      need_y(spec.j);
      for (int i = 0; i < t; ++i) gens.push_back(g.x_gen(i));
      for (int j = 0; j < s; ++j)
        if (j != spec.j - 1) gens.push_back(g.y_gen(j));
      index = p;
      break;
    }
    case SubgroupForm::A: {
      if (t < 2) fail(ErrorCode::InvalidForm, "form A needs t > 1");
      need_x(spec.i);
      need_x(spec.j);
      if (spec.i == spec.j) fail(ErrorCode::InvalidForm, "form A needs i != j");
      for (int i = 0; i < t; ++i) {
        bool powered = (i == spec.i - 1 || i == spec.j - 1);
        gens.push_back(g.x_gen(i, powered ? g.p() : 1));
      }
      for (int j = 0; j < s; ++j) gens.push_back(g.y_gen(j));
      index = p * p;
      break;
    }
    case SubgroupForm::B: {
      need_x(spec.i);
      if (g.r()[spec.i - 1] < 2)
        fail(ErrorCode::InvalidForm, "form B needs r_" + std::to_string(spec.i) + " >= 2");
      for (int i = 0; i < t; ++i)
        gens.push_back(g.x_gen(i, i == spec.i - 1 ? g.p() * g.p() : 1));
      for (int j = 0; j < s; ++j) gens.push_back(g.y_gen(j));
      index = p * p;
      break;
    }
    case SubgroupForm::C: {
      need_x(spec.i);
      need_y(spec.j);
      for (int i = 0; i < t; ++i) gens.push_back(g.x_gen(i, i == spec.i - 1 ? g.p() : 1));
      for (int j = 0; j < s; ++j)
        if (j != spec.j - 1) gens.push_back(g.y_gen(j));
      index = p * p;
      break;
    }
    case SubgroupForm::Full: {
      for (int i = 0; i < t; ++i) gens.push_back(g.x_gen(i));
      for (int j = 0; j < s; ++j) gens.push_back(g.y_gen(j));
      index = 1;
      break;
    }
  }

  if (g.order() <= cap) {
    Closure cl = subgroup_closure(g, gens, cap);
    if (cl.size * index != g.order())
      fail(ErrorCode::InvalidForm, "subgroup " + spec.str() + " does not have the stated index");
  }
  return {spec, std::move(gens), index};
}

Closure subgroup_closure(const AbelianPGroup& g, const std::vector<GroupElement>& gens,
                         std::uint64_t cap) {
  if (g.order() > cap)
    fail(ErrorCode::TooLarge, "group too large for subgroup closure");
  for (const auto& h : gens)
    if (!g.valid(h)) fail(ErrorCode::NotASubgroup, "generator does not belong to the group");
  Closure cl;
  cl.member.assign(g.order(), 0);
  std::deque<GroupElement> work;
  GroupElement id = g.identity();
  cl.member[g.index_of(id)] = 1;
  cl.size = 1;
  work.push_back(id);
  while (!work.empty()) {
    GroupElement cur = work.front();
    work.pop_front();
    for (const auto& h : gens) {
      GroupElement nxt = g.mul(cur, h);
      std::uint64_t idx = g.index_of(nxt);
      if (!cl.member[idx]) {
        cl.member[idx] = 1;
        ++cl.size;
        work.push_back(std::move(nxt));
      }
    }
  }
  return cl;
}

std::vector<GroupElement> transversal(const AbelianPGroup& g,
                                      const std::vector<GroupElement>& gens,
                                      std::uint64_t cap) {
  Closure h = subgroup_closure(g, gens, cap);
  std::vector<GroupElement> members;
  members.reserve(h.size);
  for (std::uint64_t idx = 0; idx < g.order(); ++idx)
    if (h.member[idx]) members.push_back(g.element_at(idx));

  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<GroupElement> reps;
  for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
    if (seen[idx]) continue;
    GroupElement lead = g.element_at(idx);
    GroupElement best = lead;
    for (const auto& hm : members) {
      GroupElement e = g.mul(lead, hm);
      seen[g.index_of(e)] = 1;
      if (colex_less(e, best)) best = e;
    }
    reps.push_back(std::move(best));
  }
  std::sort(reps.begin(), reps.end(), lex_less);
  return reps;
}

}  // namespace projrep
