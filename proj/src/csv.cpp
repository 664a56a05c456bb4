#include "quenchlab/csv.hpp"

#include <charconv>
#include <fstream>
#include <string_view>
#include <vector>

namespace quenchlab {

namespace {

constexpr std::string_view kHeader =
    "problem,cs,nc,ni,ps,it,rep,seed,fitness,evals,wall_ms";

[[noreturn]] void fail(std::size_t line, std::string_view column,
                       std::string_view why) {
  throw ParseError("csv line " + std::to_string(line) + ", column '" +
                   std::string(column) + "': " + std::string(why));
}

std::vector<std::string_view> split_fields(std::string_view row) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = row.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(row.substr(start));
      return out;
    }
    out.push_back(row.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, std::string_view column) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    fail(line, column, "cannot parse '" + std::string(field) + "'");
  return value;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_csv(const std::string& file, const ResultSet& rs) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot open for writing: " + file);
  out << kHeader << '\n';
  for (const RunRecord& r : rs.records) {
    out << r.problem << ',' << schedule_code(r.cs) << ',' << r.nc << ',' << r.ni
        << ',' << r.ps << ',' << format_double(r.it) << ',' << r.rep << ','
        << r.seed << ',' << format_double(r.fitness) << ',' << r.evals << ','
        << r.wall_ms << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + file);
}

ResultSet read_csv(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open: " + file);

  ResultSet rs;
  std::string row;
  std::size_t line = 0;
  while (std::getline(in, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (line == 1) {
      if (row != kHeader)
        throw ParseError("csv line 1: expected header '" + std::string(kHeader) +
                         "'");
      continue;
    }
    if (row.empty()) continue;
    const auto f = split_fields(row);
    if (f.size() != 11)
      throw ParseError("csv line " + std::to_string(line) + ": expected 11 fields, got " +
                       std::to_string(f.size()));
    RunRecord r;
    if (f[0].empty()) fail(line, "problem", "empty");
    r.problem = std::string(f[0]);
    try {
      r.cs = schedule_from_code(f[1]);
    } catch (const std::invalid_argument& e) {
      fail(line, "cs", e.what());
    }
    r.nc = parse_number<int>(f[2], line, "nc");
    r.ni = parse_number<int>(f[3], line, "ni");
    r.ps = parse_number<int>(f[4], line, "ps");
    r.it = parse_number<double>(f[5], line, "it");
    r.rep = parse_number<int>(f[6], line, "rep");
    r.seed = parse_number<std::uint64_t>(f[7], line, "seed");
    r.fitness = parse_number<double>(f[8], line, "fitness");
    r.evals = parse_number<long long>(f[9], line, "evals");
    r.wall_ms = parse_number<long long>(f[10], line, "wall_ms");
    rs.records.push_back(std::move(r));
  }
  if (line == 0) throw ParseError("csv: empty file: " + file);
  rs.design_fingerprint = fingerprint_records(rs.records);
  return rs;
}

void write_path_csv(const std::string& file, const DiffusionPath& path) {
  path.validate();
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot open for writing: " + file);
  out << "time,value\n";
  for (std::size_t i = 0; i < path.times.size(); ++i)
    out << format_double(path.times[i]) << ',' << format_double(path.values[i])
        << '\n';
  if (!out) throw std::runtime_error("write failed: " + file);
}

DiffusionPath read_path_csv(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open: " + file);
  DiffusionPath p;
  std::string row;
  std::size_t line = 0;
  while (std::getline(in, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (line == 1) {
      if (row != "time,value")
        throw ParseError("path csv line 1: expected header 'time,value'");
      continue;
    }
    if (row.empty()) continue;
    const auto f = split_fields(row);
    if (f.size() != 2)
      throw ParseError("path csv line " + std::to_string(line) +
                       ": expected 2 fields");
    p.times.push_back(parse_number<double>(f[0], line, "time"));
    p.values.push_back(parse_number<double>(f[1], line, "value"));
  }
  try {
    p.validate();
  } catch (const std::domain_error& e) {
    throw ParseError(std::string("path csv: ") + e.what());
  }
  return p;
}

}  // namespace quenchlab
