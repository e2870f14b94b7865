#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lipatrol/default_map.hpp"
#include "lipatrol/world.hpp"

using namespace lipatrol;

TEST_CASE("target id layout") {
  CHECK(target_of(0, 0) == 0);
  CHECK(target_of(2, 3) == 11);
  CHECK(waypoint_of_target(11) == 2);
  CHECK(slot_of_target(11) == 3);
}

TEST_CASE("init_rewards marks exactly half rewarding") {
  CHECK(init_rewards(16, 7).n_rewarding() == 8);
  CHECK(init_rewards(2, 7).n_rewarding() == 1);
  CHECK_THROWS_AS(init_rewards(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(init_rewards(0, 7), std::invalid_argument);
}

TEST_CASE("init_rewards is a deterministic function of env_seed") {
  int distinct = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const RewardTable a = init_rewards(16, seed);
    const RewardTable b = init_rewards(16, seed);
    CHECK(a.rewards == b.rewards);
    if (a.rewards != init_rewards(16, seed + 1).rewards) ++distinct;
  }
  CHECK(distinct > 90);  // different seeds almost always differ
}

TEST_CASE("shift_times follows the schedule rules") {
  CHECK(shift_times(1300, 0).shift_steps.empty());
  CHECK(shift_times(1300, 1).shift_steps == std::vector<int>{433});
  CHECK(shift_times(1300, 3).shift_steps == std::vector<int>{325, 650, 975});
  CHECK(shift_times(1000, 2).shift_steps == std::vector<int>{333, 666});
  CHECK_THROWS_AS(shift_times(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(shift_times(10, -1), std::invalid_argument);

  SUBCASE("degenerate tiny horizons drop zero or duplicate entries") {
    CHECK(shift_times(1, 1).shift_steps.empty());
    const auto tiny = shift_times(3, 5).shift_steps;
    for (std::size_t i = 0; i + 1 < tiny.size(); ++i) CHECK(tiny[i] < tiny[i + 1]);
    for (int t : tiny) {
      CHECK(t > 0);
      CHECK(t < 3);
    }
  }
}

TEST_CASE("apply_shift flips exactly half, balanced both ways") {
  Rng rng(99);
  RewardTable table = init_rewards(16, 5);
  const RewardTable before = table;
  apply_shift(table, rng);

  int flips_to_one = 0, flips_to_zero = 0;
  for (int id = 0; id < 16; ++id) {
    if (before.rewards[id] != table.rewards[id]) {
      (table.rewards[id] ? flips_to_one : flips_to_zero) += 1;
    }
  }
  CHECK(flips_to_one == 4);
  CHECK(flips_to_zero == 4);
  CHECK(table.n_rewarding() == 8);
}

TEST_CASE("apply_shift rejects invalid tables") {
  Rng rng(1);
  RewardTable odd;
  odd.rewards = {1, 0, 1, 0, 1, 0};  // 6 targets, not divisible by 4
  CHECK_THROWS_AS(apply_shift(odd, rng), std::invalid_argument);

  RewardTable unbalanced;
  unbalanced.rewards = {1, 1, 1, 0};
  CHECK_THROWS_AS(apply_shift(unbalanced, rng), std::invalid_argument);
}

TEST_CASE("a shift is a pure flip: inverting the same sets restores the table") {
  RewardTable table = init_rewards(16, 11);
  const RewardTable original = table;
  Rng rng(2024);
  apply_shift(table, rng);
  CHECK(table.rewards != original.rewards);
  // Flip the changed targets back; everything else must be untouched.
  for (int id = 0; id < 16; ++id)
    if (table.rewards[id] != original.rewards[id])
      table.rewards[id] = original.rewards[id];
  CHECK(table.rewards == original.rewards);

  // And a second shift whose selection happens to mirror the first restores
  // the original through the real API (found by seed search, n=4 targets).
  RewardTable small;
  small.rewards = {1, 1, 0, 0};
  const RewardTable small_original = small;
  Rng first(3);
  apply_shift(small, first);
  bool restored = false;
  for (std::uint64_t seed = 0; seed < 64 && !restored; ++seed) {
    RewardTable candidate = small;
    Rng second(seed);
    apply_shift(candidate, second);
    if (candidate.rewards == small_original.rewards) restored = true;
  }
  CHECK(restored);
}

TEST_CASE("per-target flip frequency is 0.5 over many shifts") {
  Rng rng(31415);
  std::vector<int> flips(16, 0);
  const int n_shifts = 1000;
  RewardTable table = init_rewards(16, 3);
  for (int s = 0; s < n_shifts; ++s) {
    const RewardTable before = table;
    apply_shift(table, rng);
    for (int id = 0; id < 16; ++id)
      if (before.rewards[id] != table.rewards[id]) ++flips[id];
  }
  for (int id = 0; id < 16; ++id) {
    const double freq = static_cast<double>(flips[id]) / n_shifts;
    CAPTURE(id);
    CHECK(freq == doctest::Approx(0.5).epsilon(0.1));  // 0.5 +/- 0.05
    CHECK(std::abs(freq - 0.5) <= 0.05);
  }
}

TEST_CASE("apply_shift consumes a fixed number of draws") {
  Rng rng(8);
  RewardTable table = init_rewards(16, 3);
  const auto before = rng.draws();
  apply_shift(table, rng);
  CHECK(rng.draws() - before == 8);  // n/4 per direction
}

TEST_CASE("truth_at reads the current table") {
  RewardTable table = init_rewards(4, 21);
  for (int id = 0; id < 4; ++id)
    CHECK(truth_at(table, id) == table.rewards[id]);
  CHECK_THROWS_AS(truth_at(table, -1), std::invalid_argument);
  CHECK_THROWS_AS(truth_at(table, 4), std::invalid_argument);

  SUBCASE("a flip inverts the reported truth") {
    RewardTable shifted = table;
    Rng rng(5);
    apply_shift(shifted, rng);
    for (int id = 0; id < 4; ++id) {
      if (shifted.rewards[id] != table.rewards[id])
        CHECK(truth_at(shifted, id) == 1 - truth_at(table, id));
    }
  }
}

TEST_CASE("rewarding count is conserved across many shifts") {
  RewardTable table = init_rewards(16, 12);
  Rng rng(6);
  for (int s = 0; s < 200; ++s) {
    apply_shift(table, rng);
    CHECK(table.n_rewarding() == 8);
  }
}

TEST_CASE("build_route on the default map") {
  const auto map = default_office_map();
  const PatrolRoute route = build_route(*map);
  CHECK(route.n_waypoints() == 4);
  CHECK(route.n_targets() == 16);
  CHECK(route.adjacency.size() == 4);
  CHECK(route.adjacency[0][1] > 0.0);
}
