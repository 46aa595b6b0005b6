#include <doctest.h>

#include <filesystem>

#include "handover/artifacts.hpp"
#include "handover/config.hpp"

using namespace handover;

TEST_SUITE("artifacts") {

TEST_CASE("run record JSON round-trips") {
  RunRecord r;
  r.seed = 12;
  r.best_postural = 3;
  r.best_cell = {4, 5, 6};
  r.best_position = {0.02, 1.1, 0.38};
  r.steps = 999;
  r.visited_states = 321;
  r.trace = {{0, 6, 6, 1.0}, {10, 3, 3, 0.9}};
  const auto doc = run_record_to_json(r, "abc");
  std::string hash;
  const RunRecord back = run_record_from_json(nlohmann::json::parse(doc.dump()), &hash);
  CHECK(hash == "abc");
  CHECK(back.seed == 12);
  CHECK(back.best_postural == 3);
  CHECK(back.best_cell == r.best_cell);
  CHECK(back.best_position == r.best_position);
  CHECK(back.steps == 999);
  CHECK(back.visited_states == 321);
  REQUIRE(back.trace.size() == 2);
  CHECK(back.trace[1].tau == 0.9);
  CHECK_THROWS_AS(run_record_from_json(nlohmann::json{{"kind", "other"}}), ConfigError);
  auto broken = doc;
  broken.erase("best_cell");
  CHECK_THROWS_AS(run_record_from_json(broken), ConfigError);
}

TEST_CASE("sweep report JSON round-trips the verification fields") {
  SweepReport rep;
  rep.histogram = {{2, 3}, {4, 1}};
  rep.fractions = {{2, 0.75}, {4, 0.25}};
  rep.final_reba_histogram = {{1, 4}};
  rep.global_min = 2;
  rep.argmin_cells = {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}};
  rep.cell_count = 4;
  rep.elapsed_seconds = 0.5;
  const Boundary b = Boundary::box({0, 0, 0}, {0.1, 0, 0.1}, 0.1);
  const auto doc = sweep_report_to_json(rep, b, "h1");
  CHECK(doc.contains("elapsed_seconds"));
  CHECK_FALSE(sweep_report_to_json(rep, b, "h1", false).contains("elapsed_seconds"));
  std::string hash;
  const SweepReport back = sweep_report_from_json(doc, &hash);
  CHECK(hash == "h1");
  CHECK(back.histogram == rep.histogram);
  CHECK(back.fractions == rep.fractions);
  CHECK(back.argmin_cells == rep.argmin_cells);
  CHECK(back.global_min == 2);
}

TEST_CASE("CSV layouts") {
  CHECK(best_position_csv({0.0, 1.0987, 0.38}) == "x,y,z\n0.000000,1.098700,0.380000\n");

  RunRecord r;
  r.seed = 3;
  r.best_postural = 2;
  r.steps = 10;
  r.best_position = {0.0, 1.0, 0.5};
  CHECK(train_summary_csv({r}) == "seed,best_postural,steps,x,y,z\n3,2,10,0.000000,1.000000,0.500000\n");

  SweepReport rep;
  rep.histogram = {{2, 1}};
  rep.fractions = {{2, 1.0}};
  CHECK(histogram_csv(rep) == "postural,count,fraction\n2,1,1.000000000\n");

  ComparisonRow row{{0, 1, 2}, {0, 1, 0.4}, {0, 1.75, 0.77}, 2, 6, 1, 3};
  const std::string csv = comparison_csv({row});
  CHECK(csv.find("\n0.000000,1.000000,2.000000,0.000000,1.000000,0.400000,0.000000,1.750000,"
                 "0.770000,2,6,1,3\n") != std::string::npos);
  CHECK(comparison_table({row}).find("2 / 1") != std::string::npos);

  const std::string lm = landmarks_csv(forward_kinematics(Anthropometry{}, neutral_pose()));
  CHECK(lm.rfind("landmark,x,y,z\nhead_top,0.000000,1.750000,0.000000\n", 0) == 0);
}

TEST_CASE("files are written whole and read back") {
  const auto dir = std::filesystem::temp_directory_path() / "handover_artifacts_test";
  std::filesystem::remove_all(dir);
  const std::string path = (dir / "nested" / "best_position.csv").string();
  write_file(path, best_position_csv({0.02, 1.2, 0.4}));
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  const Vec3 p = read_best_position_csv(path);
  CHECK(p == Vec3{0.02, 1.2, 0.4});
  write_file(path, "nonsense\n");
  CHECK_THROWS_AS(read_best_position_csv(path), ConfigError);
  CHECK_THROWS_AS(read_best_position_csv((dir / "absent.csv").string()), ConfigError);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
