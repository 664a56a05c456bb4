#pragma once

#include <string>

#include "quenchlab/errors.hpp"
#include "quenchlab/runner.hpp"

namespace quenchlab {

// Shortest decimal form that parses back to the same double (std::to_chars).
std::string format_double(double v);

// Result CSV, header line:
//   problem,cs,nc,ni,ps,it,rep,seed,fitness,evals,wall_ms
// it and fitness are written round-trip exact. read_csv accepts rows from
// several problems mixed in one file and recomputes the fingerprint; any
// malformed row raises ParseError naming the line and column.
void write_csv(const std::string& file, const ResultSet& rs);
ResultSet read_csv(const std::string& file);

// Diffusion paths as two-column CSV with header "time,value".
void write_path_csv(const std::string& file, const DiffusionPath& path);
DiffusionPath read_path_csv(const std::string& file);

}  // namespace quenchlab
