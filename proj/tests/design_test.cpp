#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>

#include "quenchlab/design.hpp"
#include "quenchlab/errors.hpp"

using namespace quenchlab;

namespace {

Design tiny_design() {
  Design d;
  d.problem = "ackley";
  d.cs = {Schedule::Cauchy, Schedule::Exponential};
  d.nc = {10, 20};
  d.ni = {1};
  d.ps = {1, 2, 4};
  d.it = {10.0};
  d.reps = 2;
  d.base_seed = 99;
  return d;
}

}  // namespace

TEST_CASE("full design spans the whole grid") {
  Design d = full_design();
  d.problem = "griewangk";
  CHECK_NOTHROW(d.validate());
  CHECK(d.reps == 30);
  const auto configs = enumerate_design(d);
  CHECK(configs.size() == 3u * 5u * 5u * 5u * 3u);  // 1125
  CHECK(configs.size() * d.reps == 33750u);
}

TEST_CASE("reduced design halves every numeric factor") {
  Design d = reduced_design();
  d.problem = "rastrigin";
  CHECK_NOTHROW(d.validate());
  CHECK(d.reps == 10);
  CHECK(enumerate_design(d).size() == 3u * 2u * 2u * 2u * 2u);  // 48
}

TEST_CASE("enumeration is lexicographic with it fastest") {
  const auto configs = enumerate_design(tiny_design());
  REQUIRE(configs.size() == 12);  // 2*2*1*3*1
  // first block: cs = C, nc = 10, ps sweeping fastest among the varying ones
  CHECK(configs[0].cs == Schedule::Cauchy);
  CHECK(configs[0].nc == 10);
  CHECK(configs[0].ps == 1);
  CHECK(configs[1].ps == 2);
  CHECK(configs[2].ps == 4);
  CHECK(configs[3].nc == 20);
  CHECK(configs[3].ps == 1);
  CHECK(configs[6].cs == Schedule::Exponential);
  CHECK(configs[6].nc == 10);
  // every config carries the fixed levels
  for (const auto& c : configs) {
    CHECK(c.ni == 1);
    CHECK(c.it == 10.0);
  }
}

TEST_CASE("design validation rejects broken level lists") {
  Design d = tiny_design();
  d.cs.clear();
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);

  d = tiny_design();
  d.nc = {10, 10};
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);  // duplicate

  d = tiny_design();
  d.ps = {0, 1};
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);

  d = tiny_design();
  d.it = {0.0};
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);

  d = tiny_design();
  d.reps = 0;
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("derived seeds are unique and sensitive to every ingredient") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t ci = 0; ci < 100; ++ci)
    for (std::uint64_t rep = 0; rep < 10; ++rep)
      seen.insert(derive_seed(0, "rastrigin", ci, rep));
  CHECK(seen.size() == 1000);

  const std::uint64_t s = derive_seed(0, "rastrigin", 3, 4);
  CHECK(derive_seed(1, "rastrigin", 3, 4) != s);
  CHECK(derive_seed(0, "rastrigim", 3, 4) != s);
  CHECK(derive_seed(0, "rastrigin", 4, 3) != s);
  CHECK(derive_seed(0, "rastrigin", 3, 4) == s);  // stable
}

TEST_CASE("design JSON round trip") {
  const std::string text = R"({
    "cs": ["C", "M"],
    "nc": [100, 200],
    "ni": [2],
    "ps": [4],
    "it": [10.0, 50.0],
    "reps": 5,
    "base_seed": 123
  })";
  const Design d = parse_design_json(text);
  CHECK(d.cs.size() == 2);
  CHECK(d.cs[1] == Schedule::ModifiedCauchy);
  CHECK(d.nc == std::vector<int>{100, 200});
  CHECK(d.ni == std::vector<int>{2});
  CHECK(d.ps == std::vector<int>{4});
  CHECK(d.it == std::vector<double>{10.0, 50.0});
  CHECK(d.reps == 5);
  CHECK(d.base_seed == 123);
}

TEST_CASE("design JSON defaults and rejection rules") {
  const Design d = parse_design_json(
      R"({"cs":["E"],"nc":[50],"ni":[1],"ps":[1],"it":[10]})");
  CHECK(d.reps == 30);
  CHECK(d.base_seed == 0);

  // malformed JSON text
  CHECK_THROWS_AS(parse_design_json("{"), ParseError);
  // unknown key
  CHECK_THROWS_AS(parse_design_json(
                      R"({"cs":["E"],"nc":[50],"ni":[1],"ps":[1],"it":[10],"foo":1})"),
                  std::invalid_argument);
  // missing required key
  CHECK_THROWS_AS(parse_design_json(R"({"cs":["E"],"nc":[50],"ni":[1],"ps":[1]})"),
                  std::invalid_argument);
  // bad schedule code
  CHECK_THROWS_AS(parse_design_json(
                      R"({"cs":["Q"],"nc":[50],"ni":[1],"ps":[1],"it":[10]})"),
                  std::invalid_argument);
  // non-integer level
  CHECK_THROWS_AS(parse_design_json(
                      R"({"cs":["E"],"nc":[50.5],"ni":[1],"ps":[1],"it":[10]})"),
                  std::invalid_argument);
}

TEST_CASE("loading a design from a missing file") {
  CHECK_THROWS_AS(load_design_json("/nonexistent/design.json"), ParseError);
}
