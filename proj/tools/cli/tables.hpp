#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pavstat/poly.hpp"

namespace pavstat::cli {

/// Rows of integers under named columns, e.g. ("n", "k", "value").
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<BigInt>> rows;
};

/// Names accepted by `pavstat export`.
const std::vector<std::string>& table_names();

/// catalan:        (n, value), 0 <= n <= max_n
/// narayana:       (n, k, N(n,k)), 1 <= k <= n <= max_n
/// s_nk:           (n, k, s_{n,k}), 1 <= k <= n <= max_n
/// symmetric_dyck: (n, k, #symmetric Dyck paths with k peaks), by enumeration
/// a_nk_at_1:      (n, k, A_{n,k}(1)), 0 <= k < n <= max_n, plus (0, 0, 1)
/// signed:         (n, k, [t^k] I_n(-1,t)), 0 <= k <= n <= max_n
/// Throws std::invalid_argument for an unknown name.
Table build_table(const std::string& name, int max_n);

enum class Format { csv, json };
Format parse_format(const std::string& name);

/// CSV: header row then one line per row. JSON: array of row objects.
void write_table(const Table& table, Format format, std::ostream& out);

/// Writes to `path`; an I/O failure throws std::runtime_error carrying the
/// system message.
void write_table_file(const Table& table, Format format, const std::string& path);

}  // namespace pavstat::cli
