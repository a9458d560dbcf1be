#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rlsuite/experiments/aggregate.hpp"
#include "rlsuite/experiments/outputs.hpp"
#include "rlsuite/experiments/presets.hpp"
#include "rlsuite/experiments/runner.hpp"

using namespace rlsuite;
using namespace rlsuite::experiments;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.name = "unit";
  cfg.total_steps = 600;
  cfg.repetitions = 3;
  cfg.base_seed = 11;
  cfg.log_every = 50;
  cfg.smoothing_window = 1;
  cfg.curves.push_back({"q", "supermarket", json::object(), "q_learning",
                        json{{"alpha", 0.5}, {"gamma", 0.99}, {"epsilon", 0.1}}, "q_learning",
                        "supermarket"});
  cfg.curves.push_back({"dyna", "supermarket", json::object(), "dyna",
                        json{{"alpha", 0.5}, {"gamma", 0.99}, {"epsilon", 0.1},
                             {"planning_budget", 5}},
                        "dyna", "supermarket"});
  return cfg;
}

}  // namespace

TEST_CASE("config: json round-trip is lossless") {
  const auto cfg = small_config();
  const auto back = ExperimentConfig::from_json(cfg.to_json());
  REQUIRE(back == cfg);
  for (const auto& name : preset_names()) {
    const auto p = preset(name);
    REQUIRE(ExperimentConfig::from_json(p.to_json()) == p);
  }
}

TEST_CASE("config: unknown keys and names are rejected with the offending name") {
  auto j = small_config().to_json();
  j["surprise"] = 1;
  REQUIRE_THROWS_WITH(ExperimentConfig::from_json(j),
                      Catch::Matchers::ContainsSubstring("surprise"));

  auto j2 = small_config().to_json();
  j2["curves"][0]["environment"]["name"] = "lunar_lander";
  REQUIRE_THROWS_WITH(ExperimentConfig::from_json(j2),
                      Catch::Matchers::ContainsSubstring("lunar_lander"));

  auto j3 = small_config().to_json();
  j3["curves"][0]["agent"]["name"] = "ppo";
  REQUIRE_THROWS_WITH(ExperimentConfig::from_json(j3),
                      Catch::Matchers::ContainsSubstring("ppo"));

  auto j4 = small_config().to_json();
  j4["curves"][0]["agent"]["params"]["warp"] = 9;
  REQUIRE_THROWS_WITH(ExperimentConfig::from_json(j4),
                      Catch::Matchers::ContainsSubstring("warp"));
}

TEST_CASE("run_experiment: zero steps produce an empty record") {
  auto cfg = small_config();
  cfg.total_steps = 0;
  cfg.repetitions = 1;
  const auto record = run_experiment(cfg);
  REQUIRE(record.curves.size() == 2);
  for (const auto& c : record.curves) REQUIRE(c.rows.empty());
  const auto agg = aggregate(record, 1);
  write_outputs(agg, "/tmp", "rlsuite_empty");
  REQUIRE(slurp("/tmp/rlsuite_empty.csv") == "step,mean_return,stderr,agent,env\n");
  const auto svg = slurp("/tmp/rlsuite_empty.svg");
  REQUIRE(svg.find("<svg") != std::string::npos);
  REQUIRE(svg.find("<polyline") == std::string::npos);  // axes only
}

TEST_CASE("run_experiment: rows are complete and strictly ordered") {
  const auto record = run_experiment(small_config());
  for (const auto& c : record.curves) {
    REQUIRE(c.rows.size() == static_cast<size_t>(3 * (600 / 50)));
    int rep = 0;
    int64_t last_step = 0;
    for (const auto& row : c.rows) {
      if (row.repetition != rep) {
        REQUIRE(row.repetition == rep + 1);
        rep = row.repetition;
        last_step = 0;
      }
      REQUIRE(row.step > last_step);  // strictly increasing within a repetition
      last_step = row.step;
    }
    REQUIRE(rep == 2);
  }
}

TEST_CASE("run_experiment: identical configs give byte-identical CSV output") {
  const auto cfg = small_config();
  const auto a = aggregate(run_experiment(cfg), cfg.smoothing_window);
  const auto b = aggregate(run_experiment(cfg), cfg.smoothing_window);
  std::filesystem::create_directories("/tmp/rlsuite_det_a");
  std::filesystem::create_directories("/tmp/rlsuite_det_b");
  write_outputs(a, "/tmp/rlsuite_det_a", "unit");
  write_outputs(b, "/tmp/rlsuite_det_b", "unit");
  REQUIRE(slurp("/tmp/rlsuite_det_a/unit.csv") == slurp("/tmp/rlsuite_det_b/unit.csv"));
  REQUIRE(slurp("/tmp/rlsuite_det_a/unit.svg") == slurp("/tmp/rlsuite_det_b/unit.svg"));
}

TEST_CASE("run_experiment: changing the base seed changes the raw curves") {
  auto cfg = small_config();
  const auto a = run_experiment(cfg);
  cfg.base_seed = 999;
  const auto b = run_experiment(cfg);
  bool any_difference = false;
  for (size_t c = 0; c < a.curves.size(); ++c)
    for (size_t i = 0; i < a.curves[c].rows.size(); ++i)
      if (a.curves[c].rows[i].value != b.curves[c].rows[i].value) any_difference = true;
  REQUIRE(any_difference);
}

TEST_CASE("aggregate: window=1 is the identity on the cross-rep mean") {
  RunRecord record;
  record.config = small_config();
  CurveRecord curve;
  curve.spec = record.config.curves[0];
  // two repetitions with returns {0,2} at one step, {1,1} at the next
  curve.rows = {{0, 1, 0, 0.0}, {0, 2, 0, 1.0}, {1, 1, 0, 2.0}, {1, 2, 0, 1.0}};
  record.curves.push_back(curve);
  const auto agg = aggregate(record, 1);
  REQUIRE(agg[0].points.size() == 2);
  REQUIRE(agg[0].points[0].mean == 1.0);
  REQUIRE(agg[0].points[0].stderr_ == 1.0);  // sample std sqrt(2), /sqrt(2)
  REQUIRE(agg[0].points[1].mean == 1.0);
  REQUIRE(agg[0].points[1].stderr_ == 0.0);  // constant across reps
}

TEST_CASE("aggregate: smoothing truncates at the edges") {
  RunRecord record;
  record.config = small_config();
  CurveRecord curve;
  curve.spec = record.config.curves[0];
  for (int64_t s = 1; s <= 5; ++s) curve.rows.push_back({0, s, 0, static_cast<double>(s)});
  record.curves.push_back(curve);
  const auto agg = aggregate(record, 3);
  // means of [1..5] smoothed with a centered window of 3
  REQUIRE(agg[0].points[0].mean == Catch::Approx(1.5));   // (1+2)/2
  REQUIRE(agg[0].points[2].mean == Catch::Approx(3.0));   // (2+3+4)/3
  REQUIRE(agg[0].points[4].mean == Catch::Approx(4.5));   // (4+5)/2
}

TEST_CASE("outputs: two-curve run yields two polylines and a legend") {
  const auto cfg = small_config();
  const auto agg = aggregate(run_experiment(cfg), 1);
  write_outputs(agg, "/tmp", "rlsuite_two");
  const auto svg = slurp("/tmp/rlsuite_two.svg");
  size_t count = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++count;
    pos += 9;
  }
  REQUIRE(count == 2);
  REQUIRE(svg.find("#1f77b4") != std::string::npos);
  REQUIRE(svg.find("#ff7f0e") != std::string::npos);
  const auto csv = slurp("/tmp/rlsuite_two.csv");
  REQUIRE(csv.find("q_learning,supermarket") != std::string::npos);
  REQUIRE(csv.find("dyna,supermarket") != std::string::npos);
}

TEST_CASE("run_experiment: greedy-every-k evaluation mode logs eval returns") {
  ExperimentConfig cfg;
  cfg.name = "greedy-eval";
  cfg.total_steps = 400;
  cfg.repetitions = 1;
  cfg.base_seed = 3;
  cfg.log_every = 100;
  cfg.greedy_eval_every = 100;
  cfg.curves.push_back({"q", "roadrunner", json{{"width", 8}, {"max_speed", 3}}, "q_learning",
                        json{{"alpha", 0.3}, {"gamma", 1.0}, {"epsilon", 0.3}}, "q_learning",
                        "roadrunner"});
  const auto record = run_experiment(cfg);
  REQUIRE(record.curves[0].rows.size() == 4);
  // eval returns are real episode returns, not zero-initialized logs
  const auto j = cfg.to_json();
  REQUIRE(j.at("eval").at("greedy_every") == 100);
}

TEST_CASE("presets: all nine names resolve and unknown names are listed") {
  REQUIRE(preset_names().size() == 9);
  for (const auto& n : preset_names()) REQUIRE(preset(n).curves.size() >= 2);
  REQUIRE_THROWS_WITH(preset("fig9-nonsense"),
                      Catch::Matchers::ContainsSubstring("fig2-boulder"));
}
