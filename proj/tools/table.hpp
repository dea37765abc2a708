/* SPDX-License-Identifier: Apache-2.0 */

// Tabular output in aligned text, CSV or JSON.

#ifndef CFRAC_TOOLS_TABLE_HPP
#define CFRAC_TOOLS_TABLE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cfrac::cli {

enum class Format { text, csv, json };

using Cell = std::variant<std::int64_t, double, bool, std::string>;

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v);
std::string cell_text(const Cell& c);
nlohmann::json cell_json(const Cell& c);

nlohmann::json row_json(const Table& t, std::size_t row);

/// text and csv print the header row and every data row; json prints an array
/// of objects.
void print_table(std::ostream& os, const Table& t, Format f);

/// A single row; json prints one object instead of an array.
void print_record(std::ostream& os, const Table& t, Format f);

}  // namespace cfrac::cli

#endif  // CFRAC_TOOLS_TABLE_HPP
