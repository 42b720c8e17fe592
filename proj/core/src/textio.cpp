#include "projrep/textio.hpp"

#include <cctype>
#include <sstream>

namespace projrep {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad integer '" + text + "' in " + what);
  }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& part : split(text, ','))
    out.push_back(static_cast<int>(parse_int(part, what)));
  return out;
}

}  // namespace

AbelianPGroup parse_group(const std::string& text) {
  std::int64_t p = 0;
  std::vector<int> r, n;
  bool saw_p = false, saw_r = false, saw_s = false;
  for (const auto& field : split(text, ';')) {
    auto eq = field.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::ParseError, "group descriptor field without '=': " + field);
    std::string key = field.substr(0, eq);
    std::string val = field.substr(eq + 1);
    if (key == "p") {
      p = parse_int(val, "group descriptor");
      saw_p = true;
    } else if (key == "r") {
      r = parse_int_list(val, "group descriptor");
      saw_r = true;
    } else if (key == "s") {
      n = parse_int_list(val, "group descriptor");
      saw_s = true;
    } else {
      fail(ErrorCode::ParseError, "unknown group descriptor key '" + key + "'");
    }
  }
  if (!saw_p || !saw_r || !saw_s)
    fail(ErrorCode::ParseError, "group descriptor needs p=, r= and s= fields");
  return AbelianPGroup::make(p, std::move(r), std::move(n));
}

std::string format_group(const AbelianPGroup& g) {
  std::ostringstream os;
  os << "p=" << g.p() << ";r=";
  for (int i = 0; i < g.t(); ++i) os << (i ? "," : "") << g.r()[i];
  os << ";s=";
  for (int j = 0; j < g.s(); ++j) os << (j ? "," : "") << g.n()[j];
  return os.str();
}

FpMatrix parse_matrix(std::int64_t p, const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row_text : split(text, ';')) {
    std::vector<std::int64_t> row;
    for (const auto& cell : split(row_text, ',')) row.push_back(parse_int(cell, "matrix"));
    rows.push_back(std::move(row));
  }
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.front().size());
  std::vector<std::int64_t> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::ParseError, "ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return FpMatrix(p, m, n, std::move(entries));
}

std::string format_matrix(const FpMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m.at(i, j);
    }
  }
  return os.str();
}

SubgroupSpec parse_form(const std::string& text) {
  if (text == "FULL" || text == "full") return SubgroupSpec::full();
  if (text.empty()) fail(ErrorCode::ParseError, "empty subgroup form");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::string rest = text.substr(1);
  auto one_index = [&]() { return static_cast<int>(parse_int(rest, "subgroup form")); };
  auto two_indices = [&]() {
    auto parts = split(rest, ',');
    if (parts.size() != 2)
      fail(ErrorCode::ParseError, "form " + std::string(1, f) + " needs two indices");
    return std::pair<int, int>{static_cast<int>(parse_int(parts[0], "subgroup form")),
                               static_cast<int>(parse_int(parts[1], "subgroup form"))};
  };
  switch (f) {
    case 'X': return SubgroupSpec::x(one_index());
    case 'Y': return SubgroupSpec::y(one_index());
    case 'B': return SubgroupSpec::b(one_index());
    case 'A': {
      auto [i, j] = two_indices();
      return SubgroupSpec::a(i, j);
    }
    case 'C': {
      auto [i, j] = two_indices();
      return SubgroupSpec::c(i, j);
    }
    default:
      fail(ErrorCode::ParseError, "unknown subgroup form '" + text + "'");
  }
}

std::string format_element(const AbelianPGroup& g, const GroupElement& e) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* name, int idx, std::int64_t exp) {
    if (exp == 0) return;
    if (!first) os << "*";
    first = false;
    os << name << (idx + 1);
    if (exp != 1) os << "^" << exp;
  };
  for (int i = 0; i < g.t(); ++i) emit("x", i, e.m[i]);
  for (int j = 0; j < g.s(); ++j) emit("y", j, e.k[j]);
  if (first) os << "1";
  return os.str();
}

}  // namespace projrep
