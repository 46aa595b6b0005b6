#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "handover/config.hpp"

using namespace handover;

namespace {

ExperimentConfig from_text(const std::string& text, const std::string& base = ".") {
  std::istringstream in(text);
  return parse_config(parse_key_values(in), base);
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("key-value parsing trims, skips comments and rejects junk") {
  std::istringstream in("# comment\n  rl.alpha = 0.2  # trailing\n\nrun.count=3\n");
  const auto kv = parse_key_values(in);
  CHECK(kv.at("rl.alpha") == "0.2");
  CHECK(kv.at("run.count") == "3");
  std::istringstream dup("a = 1\na = 2\n");
  CHECK_THROWS_AS(parse_key_values(dup), ConfigError);
  std::istringstream bad("just words\n");
  CHECK_THROWS_AS(parse_key_values(bad), ConfigError);
  CHECK_THROWS_AS(parse_double("k", "1.5x"), ConfigError);
  CHECK_THROWS_AS(parse_integer("k", "2.5"), ConfigError);
  CHECK(parse_bool("k", "true"));
  CHECK_FALSE(parse_bool("k", "0"));
  CHECK_THROWS_AS(parse_bool("k", "maybe"), ConfigError);
}

TEST_CASE("defaults give the desk-scale experiment") {
  const ExperimentConfig cfg = parse_config({});
  CHECK(cfg.step == 0.02);
  CHECK(cfg.task.boundary.cell_count() == 56511);
  CHECK(cfg.seeds.size() == 10);
  CHECK(cfg.seeds.front() == 1);
  CHECK(cfg.starts.size() == 5);
  CHECK(cfg.hyper.alpha == 0.1);
  CHECK(cfg.hyper.gamma == 0.9);
  CHECK(cfg.hyper.budget.steps == 100000);
  CHECK(cfg.task.box.handle_separation == 0.40);
}

TEST_CASE("every section is read") {
  const ExperimentConfig cfg = from_text(
      "anthro.height = 1.60\n"
      "boundary.step = 0.05\n"
      "box.handle_separation = 0.3\n"
      "rl.alpha = 0.3\nrl.gamma = 0.5\nrl.tau0 = 1.5\nrl.symmetry_weight = 0.5\n"
      "rl.start = 0, 1.0, 0.3\nrl.stop_at_postural = 3\n"
      "run.count = 3\nrun.seeds = 7, 8, 9\nrun.budget_seconds = 2.5\nrun.precompute = yes\n"
      "task.load = 1\ntask.coupling = 2\ntask.activity = 1\n"
      "task.starts = 0,1,1.2; 0.1,0.5,0.9\n"
      "ik.knee_step = 10\n");
  CHECK(cfg.task.anthro.height == 1.60);
  CHECK(cfg.task.anthro.upper_arm == doctest::Approx(0.186 * 1.60));
  CHECK(cfg.task.boundary.step() == 0.05);
  CHECK(cfg.task.box.handle_separation == 0.3);
  CHECK(cfg.hyper.alpha == 0.3);
  CHECK(cfg.hyper.tau0 == 1.5);
  CHECK(cfg.hyper.stop_at_postural == 3);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{7, 8, 9});
  CHECK(cfg.hyper.budget.seconds == 2.5);
  CHECK_FALSE(cfg.hyper.budget.steps);
  CHECK(cfg.precompute);
  CHECK(cfg.task.adjustments.coupling == 2);
  CHECK(cfg.starts.size() == 2);
  CHECK(cfg.task.limits.knee_step == 10);
  const Hyperparams h = cfg.run_hyper();
  REQUIRE(h.start);
  CHECK(distance(cfg.task.boundary.position(*h.start), {0, 1.0, 0.3}) <= 0.05);
}

TEST_CASE("errors name the offending key") {
  CHECK_THROWS_WITH_AS(from_text("rl.alfa = 0.1\n"), doctest::Contains("rl.alfa"), ConfigError);
  CHECK_THROWS_WITH_AS(from_text("run.count = 0\n"), doctest::Contains("run.count"), ConfigError);
  CHECK_THROWS_WITH_AS(from_text("run.count = 2\nrun.seeds = 1,2,3\n"),
                       doctest::Contains("run.seeds"), ConfigError);
  CHECK_THROWS_WITH_AS(from_text("rl.alpha = 1.5\n"), doctest::Contains("rl.alpha"), ConfigError);
  CHECK_THROWS_WITH_AS(from_text("boundary.step = -1\n"), doctest::Contains("boundary.step"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(from_text("boundary.step = 5\n"), doctest::Contains("boundary"), ConfigError);
  CHECK_THROWS_WITH_AS(from_text("task.load = 4\n"), doctest::Contains("load"), ConfigError);
  CHECK_THROWS_WITH_AS(from_text("anthro.upper_arm = -0.3\n"), doctest::Contains("upper_arm"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(from_text("rl.start = 0, 5, 0\n"), doctest::Contains("rl.start"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(from_text("task.starts = 1,2\n"), doctest::Contains("task.starts"),
                       ConfigError);
  CHECK_THROWS_AS(from_text("box.handle_separation = 0\n"), ConfigError);
}

TEST_CASE("anthropometry file is resolved next to the config") {
  const auto dir = std::filesystem::temp_directory_path() / "handover_config_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream body(dir / "body.txt");
    body << "height = 1.90\nshoulder_width = 0.50\n";
    std::ofstream cfg(dir / "exp.cfg");
    cfg << "anthro.file = body.txt\nanthro.hand = 0.2\nboundary.step = 0.05\n";
  }
  const ExperimentConfig cfg = load_config((dir / "exp.cfg").string());
  CHECK(cfg.task.anthro.height == 1.90);
  CHECK(cfg.task.anthro.shoulder_width == 0.50);
  CHECK(cfg.task.anthro.hand == 0.2);
  CHECK(cfg.task.boundary.max().x == doctest::Approx(0.25));
  CHECK_THROWS_AS(load_config((dir / "missing.cfg").string()), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("explicit boundary corners and step overrides") {
  ExperimentConfig cfg = from_text("boundary.min = -0.1, 0.9, 0.1\nboundary.max = 0.1, 1.3, 0.5\n"
                                   "boundary.step = 0.1\n");
  CHECK(cfg.task.boundary.counts() == std::array<int, 3>{3, 5, 5});
  cfg.set_step(0.05);
  CHECK(cfg.task.boundary.counts() == std::array<int, 3>{5, 9, 9});
  CHECK_THROWS_AS(cfg.set_step(0.0), ConfigError);
}

TEST_CASE("geometry hash tracks score-relevant settings only") {
  const ExperimentConfig a = parse_config({});
  CHECK(a.geometry_hash().size() == 16);
  CHECK(a.geometry_hash() == parse_config({}).geometry_hash());
  CHECK(from_text("rl.alpha = 0.4\nrun.count = 2\n").geometry_hash() == a.geometry_hash());
  CHECK(from_text("boundary.step = 0.03\n").geometry_hash() != a.geometry_hash());
  CHECK(from_text("task.load = 1\n").geometry_hash() != a.geometry_hash());
  CHECK(from_text("anthro.height = 1.7\n").geometry_hash() != a.geometry_hash());
  CHECK(from_text("box.handle_separation = 0.3\n").geometry_hash() != a.geometry_hash());
}

TEST_CASE("the shipped desk config spells out the defaults") {
  const ExperimentConfig cfg = load_config(HANDOVER_CONFIG_DIR "/desk.cfg");
  const ExperimentConfig def = parse_config({});
  CHECK(cfg.geometry_hash() == def.geometry_hash());
  CHECK(cfg.seeds == def.seeds);
  CHECK(cfg.starts == def.starts);
  CHECK(cfg.hyper.budget.steps == def.hyper.budget.steps);
}

}  // TEST_SUITE
