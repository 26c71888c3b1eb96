#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace levicool {

/// Column-oriented result table. CSV layout: column names, units,
/// a '#' metadata line (config hash, master seed), then data rows.
/// The JSON mirror carries the same fields.
struct OutputTable {
  std::vector<std::string> columns;
  std::vector<std::string> units;
  std::vector<std::vector<double>> rows;  // each row matches columns
  std::string config_hash;
  std::uint64_t master_seed = 0;
};

void write_csv(const OutputTable& t, std::ostream& out);
void write_json(const OutputTable& t, std::ostream& out);

/// Writes dir/stem.{csv|json} and returns the path written.
std::string write_table(const OutputTable& t, const std::string& dir,
                        const std::string& stem, const std::string& format);

}  // namespace levicool
