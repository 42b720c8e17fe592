#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projrep/construct.hpp"

namespace projrep {

enum class Category { Irreducible, SplitsP, SplitsP2 };
const char* to_string(Category c);

/// How rho|_H decomposes for one cohomology class. The rank data comes from
/// the restricted cocycle matrix; constituents is the commutant dimension of
/// the actual restricted images and must equal p^(ambient_rank - restricted_rank).
struct RestrictionVerdict {
  FpMatrix class_matrix;
  int ambient_rank;
  int restricted_rank;
  std::uint64_t ambient_dim;
  int constituents;
  Category category;

  bool consistent(std::int64_t p) const;
};

RestrictionVerdict restrict_rep(const ProjRep& rho, const SubgroupSpec& spec);

struct CensusRow {
  Category category;
  int n;  // degree exponent of the restricted constituents
  std::uint64_t count;
};

/// Distribution of all p^{st} classes over (category, n) for one subgroup
/// form. Rows are emitted for every n in range even when the count is zero,
/// so expected and observed tables align structurally.
struct CensusTable {
  std::string group_descriptor;
  std::string form;
  std::vector<CensusRow> rows;

  std::uint64_t total() const;
  std::uint64_t count_at(Category c, int n) const;
};

struct SpotCheckOptions {
  // 0 = spec default: every class when p^{st} <= 256, else 100 seeded samples.
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
};

struct ClassifyResult {
  CensusTable table;
  std::uint64_t spot_checked = 0;
  // Rank-path vs matrix-path disagreements, reported with the offending
  // class matrix; must stay empty.
  std::vector<std::string> anomalies;
  // First class matrix observed in each (category, n) cell, for reporting.
  std::vector<std::pair<CensusRow, FpMatrix>> examples;
};

/// Classifies all p^{st} classes by the rank path (ambient vs restricted rank)
/// and spot-checks the matrix-level verdict on a sample.
ClassifyResult classify_all(const AbelianPGroup& g, const SubgroupSpec& spec,
                            SpotCheckOptions opts = {},
                            std::uint64_t class_cap = kDefaultClassCap);

/// Closed-form table from the restriction-counting theorems.
CensusTable expected_counts(const AbelianPGroup& g, const SubgroupSpec& spec);

struct CensusComparisonRow {
  Category category;
  int n;
  std::uint64_t expected;
  std::uint64_t observed;
  bool match;
};

struct CensusComparison {
  std::string group_descriptor;
  std::string form;
  std::vector<CensusComparisonRow> rows;
  bool all_match = false;
  std::vector<std::string> reports;  // discrepancy details incl. example matrices
};

CensusComparison compare_census(const CensusTable& expected, const ClassifyResult& observed);

}  // namespace projrep
