#include "cli/tables.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "cli/render.hpp"
#include "pavstat/bijections.hpp"
#include "pavstat/closed_forms.hpp"
#include "pavstat/statpoly.hpp"

namespace pavstat::cli {

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names{"catalan",   "narayana",  "s_nk",
                                              "symmetric_dyck", "a_nk_at_1", "signed"};
  return names;
}

namespace {

BigInt big(int v) { return BigInt(v); }

Table triangle(int first_n, int max_n, int (*k_lo)(int), int (*k_hi)(int),
               BigInt (*value)(int, int)) {
  Table t{{"n", "k", "value"}, {}};
  for (int n = first_n; n <= max_n; ++n) {
    for (int k = k_lo(n); k <= k_hi(n); ++k) t.rows.push_back({big(n), big(k), value(n, k)});
  }
  return t;
}

}  // namespace

Table build_table(const std::string& name, int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  const auto one = [](int) { return 1; };
  const auto same = [](int n) { return n; };
  if (name == "catalan") {
    Table t{{"n", "value"}, {}};
    for (int n = 0; n <= max_n; ++n) t.rows.push_back({big(n), catalan(n)});
    return t;
  }
  if (name == "narayana") return triangle(1, max_n, one, same, narayana);
  if (name == "s_nk") return triangle(1, max_n, one, same, s_coeff);
  if (name == "symmetric_dyck") {
    Table t{{"n", "k", "value"}, {}};
    for (int n = 1; n <= max_n; ++n) {
      const auto row = symmetric_dyck_row(n);
      for (int k = 1; k <= n; ++k) {
        t.rows.push_back({big(n), big(k), row[static_cast<std::size_t>(k)]});
      }
    }
    return t;
  }
  if (name == "a_nk_at_1") {
    Table t{{"n", "k", "value"}, {{big(0), big(0), big(1)}}};
    for (int n = 1; n <= max_n; ++n) {
      const UnivarPoly column = maj_poly(n).at_q(1);
      for (int k = 0; k < n; ++k) t.rows.push_back({big(n), big(k), column.coeff(k)});
    }
    return t;
  }
  if (name == "signed") {
    Table t{{"n", "k", "value"}, {}};
    const auto polys = signed_inv_polys(max_n);
    for (int n = 0; n <= max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        t.rows.push_back({big(n), big(k), polys[static_cast<std::size_t>(n)].coeff(k)});
      }
    }
    return t;
  }
  throw std::invalid_argument("unknown table '" + name + "'");
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

void write_table(const Table& table, Format format, std::ostream& out) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].get_str();
      out << '\n';
    }
    return;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = to_json_number(row[i]);
    rows.push_back(std::move(obj));
  }
  out << rows.dump(1) << '\n';
}

void write_table_file(const Table& table, Format format, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error(path + ": " + std::strerror(errno));
  write_table(table, format, file);
  file.close();
  if (!file) throw std::runtime_error(path + ": " + std::strerror(errno));
}

}  // namespace pavstat::cli
