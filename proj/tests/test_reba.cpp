#include <doctest.h>

#include <random>
#include <stdexcept>

#include "handover/reba.hpp"
#include "support.hpp"

using namespace handover;
using namespace handover::reba;

TEST_SUITE("reba") {

TEST_CASE("trunk bands") {
  CHECK(band_trunk(0.0, false) == 1);
  CHECK(band_trunk(10.0, false) == 2);
  CHECK(band_trunk(-10.0, false) == 2);
  CHECK(band_trunk(19.999, false) == 2);
  CHECK(band_trunk(20.0, false) == 3);
  CHECK(band_trunk(25.0, true) == 4);
  CHECK(band_trunk(-20.0, false) == 3);
  CHECK(band_trunk(60.0, false) == 4);
  CHECK(band_trunk(70.0, true) == 5);
  CHECK(band_trunk(0.0, true) == 2);
}

TEST_CASE("neck bands") {
  CHECK(band_neck(0.0, false) == 1);
  CHECK(band_neck(19.9, false) == 1);
  CHECK(band_neck(20.0, false) == 2);
  CHECK(band_neck(-5.0, false) == 2);
  CHECK(band_neck(30.0, true) == 3);
  CHECK(band_neck(5.0, true) == 2);
}

TEST_CASE("leg bands") {
  CHECK(band_legs(true, 0.0) == 1);
  CHECK(band_legs(false, 0.0) == 2);
  CHECK(band_legs(true, 29.9) == 1);
  CHECK(band_legs(true, 30.0) == 2);
  CHECK(band_legs(true, 60.0) == 3);
  CHECK(band_legs(false, 45.0) == 3);
  CHECK(band_legs(false, 90.0) == 4);
}

TEST_CASE("upper arm bands with adjustments") {
  CHECK(band_upper_arm(0.0, false, false, false) == 1);
  CHECK(band_upper_arm(-19.9, false, false, false) == 1);
  CHECK(band_upper_arm(20.0, false, false, false) == 2);
  CHECK(band_upper_arm(-20.0, false, false, false) == 2);
  CHECK(band_upper_arm(-50.0, false, false, false) == 2);
  CHECK(band_upper_arm(45.0, false, false, false) == 3);
  CHECK(band_upper_arm(89.9, false, false, false) == 3);
  CHECK(band_upper_arm(90.0, false, false, false) == 4);
  CHECK(band_upper_arm(100.0, true, true, false) == 6);
  CHECK(band_upper_arm(30.0, true, false, false) == 3);
  CHECK(band_upper_arm(30.0, false, false, true) == 1);
  CHECK(band_upper_arm(0.0, false, false, true) == 1);
}

TEST_CASE("lower arm and wrist bands") {
  CHECK(band_lower_arm(80.0) == 1);
  CHECK(band_lower_arm(30.0) == 2);
  CHECK(band_lower_arm(60.0) == 1);
  CHECK(band_lower_arm(99.9) == 1);
  CHECK(band_lower_arm(100.0) == 2);
  CHECK(band_wrist(0.0, false) == 1);
  CHECK(band_wrist(14.9, false) == 1);
  CHECK(band_wrist(15.0, false) == 2);
  CHECK(band_wrist(-20.0, false) == 2);
  CHECK(band_wrist(-20.0, true) == 3);
  CHECK(band_wrist(5.0, true) == 2);
}

TEST_CASE("golden lookups from the published tables") {
  // Table A
  CHECK(table_a(1, 1, 1) == 1);
  CHECK(table_a(1, 3, 2) == 4);
  CHECK(table_a(2, 2, 1) == 3);
  CHECK(table_a(2, 5, 4) == 9);
  CHECK(table_a(3, 1, 1) == 3);
  CHECK(table_a(3, 5, 4) == 9);
  CHECK(table_a(1, 5, 4) == 8);
  // Table B
  CHECK(table_b(1, 1, 1) == 1);
  CHECK(table_b(1, 2, 1) == 1);
  CHECK(table_b(3, 1, 3) == 5);
  CHECK(table_b(4, 2, 3) == 7);
  CHECK(table_b(6, 2, 3) == 9);
  CHECK(table_b(5, 1, 1) == 6);
  // Table C
  CHECK(table_c(1, 1) == 1);
  CHECK(table_c(2, 5) == 4);
  CHECK(table_c(3, 5) == 4);
  CHECK(table_c(4, 4) == 4);
  CHECK(table_c(5, 8) == 8);
  CHECK(table_c(6, 1) == 6);
  CHECK(table_c(7, 10) == 11);
  CHECK(table_c(9, 7) == 11);
  CHECK(table_c(10, 4) == 11);
  CHECK(table_c(1, 12) == 7);
  CHECK(table_c(8, 10) == 11);
  CHECK(table_c(12, 12) == 12);
}

TEST_CASE("out-of-range table indices are rejected") {
  CHECK_THROWS_AS(table_a(0, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(table_a(1, 6, 1), std::out_of_range);
  CHECK_THROWS_AS(table_b(7, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(table_b(1, 3, 1), std::out_of_range);
  CHECK_THROWS_AS(table_c(13, 1), std::out_of_range);
  CHECK_THROWS_AS(table_c(1, 0), std::out_of_range);
}

TEST_CASE("tables are non-decreasing in every argument") {
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= 12; ++b) {
      if (a < 12) CHECK(table_c(a + 1, b) >= table_c(a, b));
      if (b < 12) CHECK(table_c(a, b + 1) >= table_c(a, b));
    }
  for (int n = 1; n <= 3; ++n)
    for (int t = 1; t <= 5; ++t)
      for (int l = 1; l <= 4; ++l) {
        if (n < 3) CHECK(table_a(n + 1, t, l) >= table_a(n, t, l));
        if (t < 5) CHECK(table_a(n, t + 1, l) >= table_a(n, t, l));
        if (l < 4) CHECK(table_a(n, t, l + 1) >= table_a(n, t, l));
      }
  for (int u = 1; u <= 6; ++u)
    for (int l = 1; l <= 2; ++l)
      for (int w = 1; w <= 3; ++w) {
        if (u < 6) CHECK(table_b(u + 1, l, w) >= table_b(u, l, w));
        if (w < 3) CHECK(table_b(u, l, w + 1) >= table_b(u, l, w));
      }
}

TEST_CASE("Table C has plateaus the postural score separates") {
  // Score B 6..9 at score A 8 all give 10.
  for (int b = 6; b <= 9; ++b) CHECK(table_c(8, b) == 10);
  // Same final score, different postural sums.
  CHECK(table_c(2, 5) == table_c(3, 5));
  CHECK(2 + 5 != 3 + 5);
}

TEST_CASE("neutral pose scores the minimum") {
  const RebaBreakdown b = score_pose(neutral_pose());
  CHECK(b.score_a == 1);
  CHECK(b.score_b == 1);
  CHECK(b.postural == 2);
  CHECK(b.final_reba == 1);
}

TEST_CASE("adjustments feed score A, score B and the final score") {
  const TaskAdjustments adj{1, 2, 3};
  const RebaBreakdown b = score_pose(neutral_pose(), adj);
  CHECK(b.score_a == 2);
  CHECK(b.score_b == 3);
  CHECK(b.postural == 5);
  CHECK(b.table_c == table_c(2, 3));
  CHECK(b.final_reba == table_c(2, 3) + 3);
  CHECK_THROWS_AS(score_pose(neutral_pose(), {4, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(score_pose(neutral_pose(), {0, -1, 0}), std::invalid_argument);
}

TEST_CASE("score B takes the worse arm") {
  Pose p = neutral_pose();
  p.right.shoulder_flexion = 100.0;  // band 4
  p.right.elbow_flexion = 30.0;      // band 2
  const RebaBreakdown b = score_pose(p);
  CHECK(b.table_b_r == table_b(4, 2, 1));
  CHECK(b.table_b_l == 1);
  CHECK(b.score_b == table_b(4, 2, 1));
}

TEST_CASE("pose thresholds for trunk twist and shoulder abduction") {
  Pose p = neutral_pose();
  p.trunk_twist = 4.9;
  CHECK(score_pose(p).trunk == 1);
  p.trunk_twist = 5.0;
  CHECK(score_pose(p).trunk == 2);
  p = neutral_pose();
  p.left.shoulder_abduction = 19.9;
  CHECK(score_pose(p).upper_arm_l == 1);
  p.left.shoulder_abduction = 20.0;
  CHECK(score_pose(p).upper_arm_l == 2);
}

TEST_CASE("every component stays in range over 1e5 random poses") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> adj(0, 3);
  for (int n = 0; n < 100000; ++n) {
    const Pose p = testing_support::random_pose(rng);
    const RebaBreakdown b = score_pose(p, {adj(rng), adj(rng), adj(rng)});
    REQUIRE((b.trunk >= 1 && b.trunk <= 5));
    REQUIRE((b.neck >= 1 && b.neck <= 3));
    REQUIRE((b.legs >= 1 && b.legs <= 4));
    for (int u : {b.upper_arm_l, b.upper_arm_r}) REQUIRE((u >= 1 && u <= 6));
    for (int l : {b.lower_arm_l, b.lower_arm_r}) REQUIRE((l >= 1 && l <= 2));
    for (int w : {b.wrist_l, b.wrist_r}) REQUIRE((w >= 1 && w <= 3));
    REQUIRE((b.table_a >= 1 && b.table_a <= 9));
    REQUIRE((b.table_b_l >= 1 && b.table_b_l <= 9));
    REQUIRE((b.score_a >= 1 && b.score_a <= 12));
    REQUIRE((b.score_b >= 1 && b.score_b <= 12));
    REQUIRE((b.table_c >= 1 && b.table_c <= 12));
    REQUIRE((b.final_reba >= 1 && b.final_reba <= 15));
    REQUIRE(b.final_reba == b.table_c + b.activity);
    REQUIRE(b.postural == b.score_a + b.score_b);
    REQUIRE((b.postural >= 2 && b.postural <= 24));
  }
}

TEST_CASE("mirrored poses give the same scores with sides swapped") {
  std::mt19937_64 rng(103);
  for (int n = 0; n < 2000; ++n) {
    const Pose p = testing_support::random_pose(rng);
    const RebaBreakdown a = score_pose(p);
    const RebaBreakdown m = score_pose(mirrored(p));
    CHECK(a.postural == m.postural);
    CHECK(a.final_reba == m.final_reba);
    CHECK(a.upper_arm_l == m.upper_arm_r);
    CHECK(a.table_b_r == m.table_b_l);
  }
}

TEST_CASE("breakdown JSON carries every field") {
  const auto j = to_json(score_pose(neutral_pose()));
  CHECK(j.at("postural") == 2);
  CHECK(j.at("final_reba") == 1);
  CHECK(j.at("upper_arm").at("left") == 1);
  CHECK(j.at("table_b").at("right") == 1);
}

}  // TEST_SUITE
