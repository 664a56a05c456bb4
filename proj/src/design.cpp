#include "quenchlab/design.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "quenchlab/errors.hpp"
#include "quenchlab/rng.hpp"

namespace quenchlab {

namespace {

template <typename T>
void require_unique_levels(const std::vector<T>& v, const char* what) {
  if (v.empty())
    throw std::invalid_argument(std::string("design: ") + what +
                                " needs at least one level");
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j])
        throw std::invalid_argument(std::string("design: duplicate ") + what +
                                    " level");
}

}  // namespace

void Design::validate() const {
  if (problem.empty()) throw std::invalid_argument("design: problem is empty");
  require_unique_levels(cs, "cs");
  require_unique_levels(nc, "nc");
  require_unique_levels(ni, "ni");
  require_unique_levels(ps, "ps");
  require_unique_levels(it, "it");
  for (int v : nc)
    if (v < 1) throw std::invalid_argument("design: nc levels must be >= 1");
  for (int v : ni)
    if (v < 1) throw std::invalid_argument("design: ni levels must be >= 1");
  for (int v : ps)
    if (v < 1) throw std::invalid_argument("design: ps levels must be >= 1");
  for (double v : it)
    if (!(v > 0.0)) throw std::invalid_argument("design: it levels must be positive");
  if (reps < 1) throw std::invalid_argument("design: reps must be >= 1");
}

std::vector<SqConfig> enumerate_design(const Design& d) {
  std::vector<SqConfig> out;
  out.reserve(d.cs.size() * d.nc.size() * d.ni.size() * d.ps.size() * d.it.size());
  for (Schedule cs : d.cs)
    for (int nc : d.nc)
      for (int ni : d.ni)
        for (int ps : d.ps)
          for (double it : d.it) out.push_back({cs, nc, ni, ps, it});
  return out;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view problem,
                          std::uint64_t config_index, std::uint64_t rep) {
  std::uint64_t h = mix64(base_seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ static_cast<std::uint64_t>(problem.size()));
  for (unsigned char c : problem) h = mix64(h ^ c);
  h = mix64(h ^ config_index);
  h = mix64(h ^ rep);
  return h;
}

Design full_design() {
  Design d;
  d.cs = {Schedule::Cauchy, Schedule::ModifiedCauchy, Schedule::Exponential};
  d.nc = {1000, 2000, 4000, 8000, 16000};
  d.ni = {2, 4, 8, 16, 32};
  d.ps = {1, 2, 4, 8, 16};
  d.it = {10.0, 50.0, 100.0};
  d.reps = 30;
  d.base_seed = 0;
  return d;
}

Design reduced_design() {
  Design d;
  d.cs = {Schedule::Cauchy, Schedule::ModifiedCauchy, Schedule::Exponential};
  d.nc = {1000, 2000};
  d.ni = {2, 4};
  d.ps = {1, 2};
  d.it = {10.0, 50.0};
  d.reps = 10;
  d.base_seed = 0;
  return d;
}

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& key, const char* why) {
  throw std::invalid_argument("design json: field '" + key + "' " + why);
}

std::vector<int> int_levels(const json& j, const std::string& key) {
  if (!j.is_array()) bad_field(key, "must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad_field(key, "must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Design parse_design_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("design json: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("design json: expected an object");

  static const std::unordered_set<std::string> known = {
      "cs", "nc", "ni", "ps", "it", "reps", "base_seed"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key))
      throw std::invalid_argument("design json: unknown field '" + key + "'");
  for (const char* req : {"cs", "nc", "ni", "ps", "it"})
    if (!j.contains(req))
      throw std::invalid_argument(std::string("design json: missing field '") +
                                  req + "'");

  Design d;
  if (!j["cs"].is_array()) bad_field("cs", "must be an array");
  for (const auto& v : j["cs"]) {
    if (!v.is_string()) bad_field("cs", "must hold schedule codes");
    d.cs.push_back(schedule_from_code(v.get<std::string>()));
  }
  d.nc = int_levels(j["nc"], "nc");
  d.ni = int_levels(j["ni"], "ni");
  d.ps = int_levels(j["ps"], "ps");
  if (!j["it"].is_array()) bad_field("it", "must be an array");
  for (const auto& v : j["it"]) {
    if (!v.is_number()) bad_field("it", "must hold numbers");
    d.it.push_back(v.get<double>());
  }
  if (j.contains("reps")) {
    if (!j["reps"].is_number_integer()) bad_field("reps", "must be an integer");
    d.reps = j["reps"].get<int>();
  }
  if (j.contains("base_seed")) {
    if (!j["base_seed"].is_number_unsigned() && !j["base_seed"].is_number_integer())
      bad_field("base_seed", "must be an integer");
    d.base_seed = j["base_seed"].get<std::uint64_t>();
  }
  return d;
}

Design load_design_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open design file: " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_design_json(ss.str());
}

}  // namespace quenchlab
