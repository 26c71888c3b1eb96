#include "levicool/output.hpp"

#include <filesystem>
#include <fstream>
#include "json.hpp"
#include <stdexcept>

namespace levicool {

namespace {

void check(const OutputTable& t) {
  if (t.units.size() != t.columns.size())
    throw std::invalid_argument("units/columns size mismatch");
  for (const auto& r : t.rows)
    if (r.size() != t.columns.size())
      throw std::invalid_argument("row/columns size mismatch");
}

}  // namespace

void write_csv(const OutputTable& t, std::ostream& out) {
  check(t);
  const auto join = [&](const std::vector<std::string>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      out << (i ? "," : "") << v[i];
    out << "\n";
  };
  join(t.columns);
  join(t.units);
  out << "# config_hash=" << t.config_hash << " master_seed=" << t.master_seed
      << "\n";
  out.precision(17);
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << "\n";
  }
}

void write_json(const OutputTable& t, std::ostream& out) {
  check(t);
  nlohmann::json j;
  j["config_hash"] = t.config_hash;
  j["master_seed"] = t.master_seed;
  j["columns"] = t.columns;
  j["units"] = t.units;
  j["rows"] = t.rows;
  out << j.dump(2) << "\n";
}

std::string write_table(const OutputTable& t, const std::string& dir,
                        const std::string& stem, const std::string& format) {
  if (format != "csv" && format != "json")
    throw std::invalid_argument("unknown output format: " + format);
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / (stem + "." + format);
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  if (format == "csv")
    write_csv(t, f);
  else
    write_json(t, f);
  return path.string();
}

}  // namespace levicool
