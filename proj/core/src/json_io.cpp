#include "projrep/json_io.hpp"

#include "projrep/textio.hpp"

namespace projrep {

namespace {

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::TooLarge, "coefficient does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

nlohmann::json scalar_to_json(const CycScalar& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 0; i < s.degree(); ++i) {
    const mpq_class& q = s.coeff(i);
    coeffs.push_back({to_i64(q.get_num()), to_i64(q.get_den())});
  }
  return {{"p", s.p()}, {"coeffs", coeffs}};
}

CycScalar scalar_from_json(const nlohmann::json& j) {
  const std::int64_t p = j.at("p").get<std::int64_t>();
  const auto& coeffs = j.at("coeffs");
  if (static_cast<std::int64_t>(coeffs.size()) != p - 1)
    fail(ErrorCode::ParseError, "scalar needs p-1 coefficients");
  CycScalar s(p);
  for (int i = 0; i < p - 1; ++i) {
    std::int64_t num = coeffs[i].at(0).get<std::int64_t>();
    std::int64_t den = coeffs[i].at(1).get<std::int64_t>();
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    s += CycScalar::from_rational(p, q) * CycScalar::root_power(p, i);
  }
  return s;
}

nlohmann::json matrix_to_json(const CycMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CycMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    fail(ErrorCode::ParseError, "matrix JSON must be a nonempty nested array");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  CycScalar first = scalar_from_json(j[0][0]);
  CycMatrix m(first.p(), rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) fail(ErrorCode::ParseError, "ragged matrix JSON");
    for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j[i][c]);
  }
  return m;
}

nlohmann::json rep_to_json(const ProjRep& rep) {
  nlohmann::json gens = nlohmann::json::array();
  for (int i = 0; i < rep.group.t(); ++i)
    gens.push_back({{"name", "x" + std::to_string(i + 1)},
                    {"matrix", matrix_to_json(rep.gen_images[i])}});
  for (int j = 0; j < rep.group.s(); ++j)
    gens.push_back({{"name", "y" + std::to_string(j + 1)},
                    {"matrix", matrix_to_json(rep.gen_images[rep.group.t() + j])}});
  return {{"schema", kSchemaTag},
          {"group", format_group(rep.group)},
          {"cocycle", format_matrix(rep.cocycle.matrix())},
          {"dim", rep.dim},
          {"generators", gens}};
}

ProjRep rep_from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != kSchemaTag)
    fail(ErrorCode::ParseError, "unknown or missing schema tag");
  AbelianPGroup g = parse_group(j.at("group").get<std::string>());
  BilinearCocycle alpha(g, parse_matrix(g.p(), j.at("cocycle").get<std::string>()));
  const int dim = j.at("dim").get<int>();
  const auto& gens = j.at("generators");
  if (static_cast<int>(gens.size()) != g.t() + g.s())
    fail(ErrorCode::ParseError, "generator count does not match the group");
  std::vector<CycMatrix> images;
  for (int l = 0; l < g.t() + g.s(); ++l) {
    std::string want = l < g.t() ? "x" + std::to_string(l + 1)
                                 : "y" + std::to_string(l - g.t() + 1);
    if (gens[l].at("name").get<std::string>() != want)
      fail(ErrorCode::ParseError, "generators must be listed as x1..xt, y1..ys");
    CycMatrix m = matrix_from_json(gens[l].at("matrix"));
    if (m.rows() != dim || m.cols() != dim || m.p() != g.p())
      fail(ErrorCode::ParseError, "generator image has the wrong shape");
    images.push_back(std::move(m));
  }
  return ProjRep{std::move(g), std::move(alpha), dim, std::move(images), std::nullopt};
}

nlohmann::json verdict_to_json(const RestrictionVerdict& v) {
  return {{"schema", kSchemaTag},
          {"class_matrix", format_matrix(v.class_matrix)},
          {"ambient_rank", v.ambient_rank},
          {"restricted_rank", v.restricted_rank},
          {"ambient_dim", v.ambient_dim},
          {"constituents", v.constituents},
          {"category", to_string(v.category)}};
}

nlohmann::json comparison_to_json(const CensusComparison& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : c.rows)
    rows.push_back({{"category", to_string(row.category)},
                    {"n", row.n},
                    {"expected", row.expected},
                    {"observed", row.observed},
                    {"match", row.match}});
  return {{"schema", kSchemaTag},
          {"group", c.group_descriptor},
          {"form", c.form},
          {"rows", rows},
          {"all_match", c.all_match},
          {"reports", c.reports}};
}

}  // namespace projrep
