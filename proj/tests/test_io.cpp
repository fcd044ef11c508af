#include <doctest.h>

#include "helpers.hpp"
#include "mopuc/campaign.hpp"
#include "mopuc/json_io.hpp"
#include "mopuc/random.hpp"

using namespace mopuc;
using io::json;
using testing::max_abs;

TEST_CASE("matrices and vectors round trip exactly") {
  Rng rng(1);
  const Matrix m = random_gaussian(3, 4, rng);
  const Matrix back = io::matrix_from_json(json::parse(io::dump(io::to_json(m))));
  CHECK(max_abs(back - m) == 0.0);
  const Vector v = io::vector_from_json(json::parse(R"([[0.6, 0], [0, 0.8]])"));
  CHECK(v.size() == 2);
  CHECK(v(1) == cplx(0.0, 0.8));
  CHECK(io::vector_from_json(io::to_json(Matrix(v))).isApprox(v));
  CHECK_THROWS(io::matrix_from_json(json::parse(R"({"rows": 2, "cols": 1, "data": [[1, 0]]})")));
}

TEST_CASE("parameters and series round trip") {
  const auto p = random_parameters(2, 4, 3, true);
  const auto q = io::params_from_json(json::parse(io::dump(io::to_json(p))));
  REQUIRE(q.size() == 4);
  REQUIRE(q.terminated());
  for (std::size_t i = 0; i < 4; ++i) CHECK(max_abs(q[i] - p[i]) == 0.0);
  CHECK(max_abs(*q.terminal() - *p.terminal()) == 0.0);
  const auto f = synthesize(p, 6);
  CHECK(max_coefficient_difference(io::series_from_json(io::to_json(f)), f) == 0.0);
  CHECK_THROWS_AS(io::params_from_json(json::parse(R"({"d": 1, "alphas": [{"rows": 1, "cols": 1, "data": [[1.5, 0]]}]})")),
                  InvariantError);
}

TEST_CASE("index lists and partitions") {
  const auto v = io::parse_index_list("0,3,5", 6);
  CHECK(v.indices() == std::vector<std::size_t>{0, 3, 5});
  CHECK_THROWS_AS(io::parse_index_list("3,1", 6), InvariantError);
  CHECK_THROWS_AS(io::parse_index_list("9", 6), InvariantError);
  const auto part = io::parse_partition({"L=0,1", "C=2", "R=3,4,5"}, 6);
  CHECK(part.center.indices() == std::vector<std::size_t>{2});
  const auto inferred = io::parse_partition({"L=0", "C=1"}, 4);
  CHECK(inferred.right.indices() == std::vector<std::size_t>{2, 3});
  CHECK_THROWS_AS(io::parse_partition({"L=0", "C=0"}, 4), InvariantError);
  const auto j = io::to_json(part);
  CHECK(j["L"] == json::array({0, 1}));
}

TEST_CASE("campaign expansion") {
  const auto cfg = parse_campaign(json::parse(R"({
    "schema_version": 1, "name": "x",
    "defaults": {"order": 8, "params": {"random": {"d": 1, "length": 30}}},
    "jobs": [{"theorem": "site", "family": ["C", "Chat"], "seed": {"from": 0, "to": 2}, "j": [0, 1]}]
  })"));
  CHECK(cfg.jobs.size() == 12);
  CHECK(cfg.jobs[0].order == 8);
  CHECK_THROWS_AS(parse_campaign(json::parse(R"({"jobs": [{"theorem": "nope"}]})")), InvariantError);
  CHECK_THROWS_AS(parse_campaign(json::parse(R"({"schema_version": 7})")), InvariantError);
  CHECK_THROWS_AS(parse_campaign(json::parse(R"({"jobs": [{"theorem": "site", "params": {"random": {"d": 1}}}]})")),
                  InvariantError);
  CHECK(parse_campaign(json::parse(R"({"jobs": [{"theorem": "site", "params": {"random": {"d": 1, "seed": 3}}}]})"))
            .jobs[0]
            .params["random"]["seed"] == 3);
}

TEST_CASE("campaign exit codes") {
  CHECK(run_campaign(parse_campaign(json::parse(R"({"jobs": []})"))).exit_code == 0);
  const auto ok = run_campaign(parse_campaign(json::parse(R"({
    "jobs": [{"theorem": "site", "params": {"random": {"d": 2, "length": 30}}, "seed": [1, 2], "j": 1, "order": 8}]
  })")));
  CHECK(ok.exit_code == 0);
  CHECK(ok.report["summary"]["passed"] == 2);
  const auto fail = run_campaign(parse_campaign(json::parse(R"({
    "jobs": [{"theorem": "site", "params": {"random": {"d": 2, "length": 30}}, "seed": 4, "j": 1, "order": 8, "tolerance": 1e-30}]
  })")));
  CHECK(fail.exit_code == 1);
  const auto bad = run_campaign(parse_campaign(json::parse(R"({
    "jobs": [{"theorem": "site", "params": {"d": 1, "alphas": [{"rows": 1, "cols": 1, "data": [[2, 0]]}]}}]
  })")));
  CHECK(bad.exit_code == 2);
  CHECK(bad.report["summary"]["errors"] == 1);
}

TEST_CASE("campaign reports do not depend on the thread count") {
  const auto j = json::parse(R"({
    "name": "threads",
    "jobs": [{"theorem": "range", "family": ["C", "Chat"], "params": {"random": {"d": 1, "length": 40}},
              "seed": {"from": 0, "to": 3}, "j": 1, "k": 2, "order": 8}]
  })");
  auto one = parse_campaign(j);
  auto four = parse_campaign(j);
  one.threads = 1;
  four.threads = 4;
  CHECK(io::dump(run_campaign(one).report) == io::dump(run_campaign(four).report));
}
