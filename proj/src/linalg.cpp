#include "fanoquot/linalg.hpp"

#include <cctype>

namespace fanoquot {

namespace {

std::string strip(std::string_view s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(c);
  return r;
}

// Splits on commas that are not nested inside () or [].
std::vector<std::string> split_top(const std::string &s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string unbracket(const std::string &s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("matrix: expected bracketed list, got '" + s + "'");
  return s.substr(1, s.size() - 2);
}

} // namespace

MatC parse_matrix(std::string_view text) {
  std::string s = strip(text);
  auto rows = split_top(unbracket(s));
  std::vector<std::vector<Cyclotomic>> cells;
  for (const auto &r : rows) {
    std::vector<Cyclotomic> row;
    for (const auto &e : split_top(unbracket(r))) row.push_back(parse_cyclotomic(e));
    if (!cells.empty() && row.size() != cells[0].size()) throw ParseError("matrix: ragged rows");
    cells.push_back(std::move(row));
  }
  MatC m(static_cast<int>(cells.size()), cells.empty() ? 0 : static_cast<int>(cells[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = cells[i][j];
  return m;
}

std::string to_string(const MatC &m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

MatC permutation_matrix(const std::vector<int> &perm) {
  const int n = static_cast<int>(perm.size());
  MatC m(n, n);
  for (int j = 0; j < n; ++j) {
    if (perm[j] < 0 || perm[j] >= n) throw DimensionError("permutation out of range");
    m(perm[j], j) = Cyclotomic(1);
  }
  return m;
}

MatC diagonal_matrix(const std::vector<Cyclotomic> &d) {
  const int n = static_cast<int>(d.size());
  MatC m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

} // namespace fanoquot
