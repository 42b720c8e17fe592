#include "projrep/census.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "projrep/textio.hpp"

namespace projrep {

const char* to_string(Category c) {
  switch (c) {
    case Category::Irreducible: return "irreducible";
    case Category::SplitsP: return "splits-p";
    case Category::SplitsP2: return "splits-p2";
  }
  return "?";
}

bool RestrictionVerdict::consistent(std::int64_t p) const {
  std::int64_t expect = 1;
  for (int i = 0; i < ambient_rank - restricted_rank; ++i) expect *= p;
  return constituents == expect;
}

RestrictionVerdict restrict_rep(const ProjRep& rho, const SubgroupSpec& spec) {
  const AbelianPGroup& g = rho.group;
  const BilinearCocycle& alpha = rho.cocycle;
  const std::int64_t p = g.p();

  const int n_g = rank(alpha.matrix());
  const int n_h = rank(restrict_cocycle(alpha, spec).matrix());

  Subgroup sub = subgroup(g, spec);
  std::vector<CycMatrix> images;
  images.reserve(sub.generators.size());
  for (const auto& gen : sub.generators) images.push_back(evaluate_rep(rho, gen));
  const int constituents = commutant_dimension(images, rho.dim);

  Category cat;
  if (constituents == 1) {
    cat = Category::Irreducible;
  } else if (constituents == p) {
    cat = Category::SplitsP;
  } else if (constituents == p * p) {
    cat = Category::SplitsP2;
  } else {
    fail(ErrorCode::VerdictMismatch,
         "commutant dimension " + std::to_string(constituents) + " for class " +
             format_matrix(alpha.matrix()) + " under " + spec.str());
  }
  return {alpha.matrix(), n_g, n_h, static_cast<std::uint64_t>(rho.dim), constituents, cat};
}

std::uint64_t CensusTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : rows) sum += row.count;
  return sum;
}

std::uint64_t CensusTable::count_at(Category c, int n) const {
  for (const auto& row : rows)
    if (row.category == c && row.n == n) return row.count;
  return 0;
}

namespace {

struct TableShape {
  int restricted_rows;
  int restricted_cols;
  bool has_splits_p2;
};

TableShape table_shape(const AbelianPGroup& g, const SubgroupSpec& spec) {
  const int t = g.t(), s = g.s();
  switch (spec.form) {
    case SubgroupForm::X: return {t - 1, s, false};
    case SubgroupForm::B: return {t - 1, s, false};
    case SubgroupForm::Y: return {t, s - 1, false};
    case SubgroupForm::A: return {t - 2, s, true};
    case SubgroupForm::C: return {t - 1, s - 1, true};
    case SubgroupForm::Full: return {t, s, false};
  }
  fail(ErrorCode::InvalidForm, "unhandled form");
}

Category category_of_drop(int drop, const FpMatrix& class_matrix, const SubgroupSpec& spec) {
  switch (drop) {
    case 0: return Category::Irreducible;
    case 1: return Category::SplitsP;
    case 2: return Category::SplitsP2;
    default:
      fail(ErrorCode::VerdictMismatch,
           "rank drop " + std::to_string(drop) + " for class " + format_matrix(class_matrix) +
               " under " + spec.str());
  }
}

std::uint64_t upow(std::int64_t p, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(p);
  return r;
}

}  // namespace

ClassifyResult classify_all(const AbelianPGroup& g, const SubgroupSpec& spec,
                            SpotCheckOptions opts, std::uint64_t class_cap) {
  (void)subgroup(g, spec, /*cap=*/0);  // validate the form up front
  TableShape shape = table_shape(g, spec);
  const int nmax = std::max(0, std::min(shape.restricted_rows, shape.restricted_cols));

  ClassifyResult res;
  res.table.group_descriptor = format_group(g);
  res.table.form = spec.str();
  auto cell = [&](Category c, int n) -> std::uint64_t& {
    for (auto& row : res.table.rows)
      if (row.category == c && row.n == n) return row.count;
    fail(ErrorCode::VerdictMismatch, "census cell out of table range");
  };
  for (Category c : {Category::Irreducible, Category::SplitsP, Category::SplitsP2}) {
    if (c == Category::SplitsP2 && !shape.has_splits_p2) continue;
    for (int n = 0; n <= nmax; ++n) res.table.rows.push_back({c, n, 0});
  }

  std::vector<BilinearCocycle> classes = enumerate_classes(g, class_cap);
  std::vector<std::pair<Category, int>> verdicts;
  verdicts.reserve(classes.size());
  for (const auto& alpha : classes) {
    const int n_g = rank(alpha.matrix());
    const int n_h = rank(restrict_cocycle(alpha, spec).matrix());
    Category cat = category_of_drop(n_g - n_h, alpha.matrix(), spec);
    ++cell(cat, n_h);
    verdicts.emplace_back(cat, n_h);
    bool fresh = true;
    for (const auto& [row, mat] : res.examples)
      if (row.category == cat && row.n == n_h) { fresh = false; break; }
    if (fresh) res.examples.push_back({{cat, n_h, 0}, alpha.matrix()});
  }

  // Matrix-level verification of the rank verdicts.
  std::vector<std::uint64_t> sample;
  const std::uint64_t total = classes.size();
  std::uint64_t want = opts.samples;
  if (want == 0) want = total <= 256 ? total : 100;
  if (want >= total) {
    for (std::uint64_t i = 0; i < total; ++i) sample.push_back(i);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < want) chosen.insert(pick(rng));
    sample.assign(chosen.begin(), chosen.end());
  }
  for (std::uint64_t idx : sample) {
    const auto& alpha = classes[idx];
    ProjRep rho = construct_general(alpha);
    RestrictionVerdict v = restrict_rep(rho, spec);
    ++res.spot_checked;
    const auto& [cat, n_h] = verdicts[idx];
    if (v.category != cat || v.restricted_rank != n_h || !v.consistent(g.p())) {
      res.anomalies.push_back("matrix verdict " + std::string(to_string(v.category)) +
                              " (constituents " + std::to_string(v.constituents) +
                              ") disagrees with rank verdict " + to_string(cat) + "/n=" +
                              std::to_string(n_h) + " for class " +
                              format_matrix(alpha.matrix()) + " under " + spec.str());
    }
  }
  return res;
}

CensusTable expected_counts(const AbelianPGroup& g, const SubgroupSpec& spec) {
  (void)subgroup(g, spec, /*cap=*/0);
  if (spec.form == SubgroupForm::Full)
    fail(ErrorCode::InvalidForm, "census forms are X, Y, A, B, C");
  TableShape shape = table_shape(g, spec);
  const int t = g.t(), s = g.s();
  const std::int64_t p = g.p();
  const int m = shape.restricted_rows, ncols = shape.restricted_cols;
  const int nmax = std::max(0, std::min(m, ncols));

  CensusTable table;
  table.group_descriptor = format_group(g);
  table.form = spec.str();

  auto z = [&](int n) { return count_rank_formula(p, m, ncols, n); };

  for (int n = 0; n <= nmax; ++n) {
    std::uint64_t c = 0;
    switch (spec.form) {
      case SubgroupForm::X:
      case SubgroupForm::B:
        if (n <= std::min(t - 1, s)) c = upow(p, n) * z(n);
        break;
      case SubgroupForm::Y:
        if (n <= std::min(t, s - 1)) c = upow(p, n) * z(n);
        break;
      case SubgroupForm::A:
        if (n <= std::min(t - 2, s)) c = upow(p, 2 * n) * z(n);
        break;
      case SubgroupForm::C:
        if (n <= std::min(t - 1, s - 1)) c = upow(p, 2 * n) * z(n);
        break;
      default: break;
    }
    table.rows.push_back({Category::Irreducible, n, c});
  }

  for (int n = 0; n <= nmax; ++n) {
    std::uint64_t c = 0;
    switch (spec.form) {
      case SubgroupForm::X:
      case SubgroupForm::B:
        if (n <= std::min(t, s) - 1) c = upow(p, n) * (upow(p, s - n) - 1) * z(n);
        break;
      case SubgroupForm::Y:
        if (n <= std::min(t, s) - 1) c = upow(p, n) * (upow(p, t - n) - 1) * z(n);
        break;
      case SubgroupForm::A:
        if (n <= std::min(t - 1, s) - 1)
          c = upow(p, 2 * n) * (static_cast<std::uint64_t>(p) + 1) * (upow(p, s - n) - 1) * z(n);
        break;
      case SubgroupForm::C:
        // The bordered-matrix count: rank grows by one when the new row/column
        // data [[0,X],[Y,Z]] has rank one, which happens for
        // (p-1) + p(p^{t-n-1}-1) + p(p^{s-n-1}-1) = p^{t-n} + p^{s-n} - p - 1
        // choices. (The corner-only case contributes the p-1 term.)
        if (n <= std::min(t, s) - 1)
          c = upow(p, 2 * n) *
              (upow(p, t - n) + upow(p, s - n) - static_cast<std::uint64_t>(p) - 1) * z(n);
        break;
      default: break;
    }
    table.rows.push_back({Category::SplitsP, n, c});
  }

  if (shape.has_splits_p2) {
    for (int n = 0; n <= nmax; ++n) {
      std::uint64_t c = 0;
      switch (spec.form) {
        case SubgroupForm::A:
          if (n <= std::min(t, s) - 2)
            c = upow(p, 2 * n) * (upow(p, s - n) - 1) * (upow(p, s - n) - p) * z(n);
          break;
        case SubgroupForm::C:
          if (n <= std::min(t, s) - 2)
            c = upow(p, 2 * n + 1) * (upow(p, t - n - 1) - 1) * (upow(p, s - n - 1) - 1) * z(n);
          break;
        default: break;
      }
      table.rows.push_back({Category::SplitsP2, n, c});
    }
  }
  return table;
}

CensusComparison compare_census(const CensusTable& expected, const ClassifyResult& observed) {
  CensusComparison cmp;
  cmp.group_descriptor = expected.group_descriptor;
  cmp.form = expected.form;
  cmp.all_match = true;

  std::set<std::pair<int, int>> keys;
  for (const auto& row : expected.rows) keys.insert({static_cast<int>(row.category), row.n});
  for (const auto& row : observed.table.rows) keys.insert({static_cast<int>(row.category), row.n});
  for (const auto& [cat_i, n] : keys) {
    Category cat = static_cast<Category>(cat_i);
    std::uint64_t e = expected.count_at(cat, n);
    std::uint64_t o = observed.table.count_at(cat, n);
    bool match = (e == o);
    cmp.rows.push_back({cat, n, e, o, match});
    if (!match) {
      cmp.all_match = false;
      std::string report = "form " + expected.form + " cell (" + to_string(cat) + ", n=" +
                           std::to_string(n) + "): expected " + std::to_string(e) +
                           ", observed " + std::to_string(o);
      for (const auto& [row, mat] : observed.examples)
        if (row.category == cat && row.n == n) {
          report += "; example class " + format_matrix(mat);
          break;
        }
      cmp.reports.push_back(std::move(report));
    }
  }
  for (const auto& a : observed.anomalies) {
    cmp.all_match = false;
    cmp.reports.push_back(a);
  }
  return cmp;
}

}  // namespace projrep
