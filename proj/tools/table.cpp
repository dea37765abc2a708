/* SPDX-License-Identifier: Apache-2.0 */

#include "table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cfrac::cli {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  std::string s(buf);
  // Keep floats recognizable as such ("1.0" rather than "1").
  if (std::isfinite(v) && s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

nlohmann::json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, c);
}

nlohmann::json row_json(const Table& t, std::size_t row) {
  nlohmann::json obj = nlohmann::json::object();
  for (std::size_t i = 0; i < t.headers.size(); ++i) obj[t.headers[i]] = cell_json(t.rows[row][i]);
  return obj;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void print_csv(std::ostream& os, const Table& t) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(cells[i]);
    }
    os << "\n";
  };
  line(t.headers);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(cell_text(c));
    line(cells);
  }
}

void print_text(std::ostream& os, const Table& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
  for (const auto& row : t.rows) {
    auto& out = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      out.push_back(cell_text(row[i]));
      width[i] = std::max(width[i], out.back().size());
    }
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << "  ";
      os << r[i];
      if (i + 1 < r.size()) os << std::string(width[i] - r[i].size(), ' ');
    }
    os << '\n';
  };
  line(t.headers);
  for (const auto& r : cells) line(r);
}

}  // namespace

void print_table(std::ostream& os, const Table& t, Format f) {
  switch (f) {
    case Format::text: print_text(os, t); break;
    case Format::csv: print_csv(os, t); break;
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t r = 0; r < t.rows.size(); ++r) arr.push_back(row_json(t, r));
      os << arr.dump() << '\n';
      break;
    }
  }
}

void print_record(std::ostream& os, const Table& t, Format f) {
  if (f == Format::json && t.rows.size() == 1) {
    os << row_json(t, 0).dump() << '\n';
    return;
  }
  print_table(os, t, f);
}

}  // namespace cfrac::cli
