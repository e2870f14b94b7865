#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lipatrol/stats.hpp"
#include "oracles.hpp"

using namespace lipatrol;
using lipatrol::testing::max_q_permutation_pvalues;

namespace {

std::vector<GroupSamples> two_groups() {
  return {{"a", {1.0, 2.0, 3.0}}, {"b", {4.0, 5.0, 6.0}}};
}

}  // namespace

TEST_CASE("anova on the hand-computed example") {
  // groups {1,2,3} and {4,5,6}: SS_within = 2 + 2 = 4, df_within = 4.
  const AnovaResult r = anova_oneway(two_groups());
  CHECK(r.ms_within == doctest::Approx(1.0));
  CHECK(r.df_within == 4);
  CHECK(r.df_between == 1);
  CHECK_FALSE(r.degenerate);
}

TEST_CASE("anova degenerate and error cases") {
  const std::vector<GroupSamples> flat = {{"a", {2.0, 2.0}}, {"b", {2.0, 2.0}}};
  const AnovaResult r = anova_oneway(flat);
  CHECK(r.ms_within == 0.0);
  CHECK(r.degenerate);

  CHECK_THROWS_AS(anova_oneway({{"solo", {1.0, 2.0}}}), std::invalid_argument);
  CHECK_THROWS_AS(anova_oneway({{"a", {1.0}}, {"b", {1.0, 2.0}}}),
                  std::invalid_argument);
}

TEST_CASE("identical groups have zero between-group spread") {
  const std::vector<GroupSamples> same = {{"a", {1.0, 2.0, 3.0}},
                                          {"b", {1.0, 2.0, 3.0}}};
  const TukeyReport report = tukey_hsd(same);
  REQUIRE(report.pairs.size() == 1);
  CHECK(report.pairs[0].mean_diff == 0.0);
  CHECK(report.pairs[0].q_statistic == 0.0);
  CHECK_FALSE(report.pairs[0].significant);
}

TEST_CASE("studentized range sf basics") {
  CHECK(studentized_range_sf(0.0, 3, 10) == 1.0);
  CHECK_THROWS_AS(studentized_range_sf(-1.0, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(studentized_range_sf(1.0, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(studentized_range_sf(1.0, 3, 0.5), std::invalid_argument);

  SUBCASE("monotone decreasing in q") {
    double prev = 1.0;
    for (int i = 1; i <= 100; ++i) {
      const double q = 0.08 * i;
      const double p = studentized_range_sf(q, 3, 10);
      CHECK(p <= prev + 1e-12);
      prev = p;
    }
    CHECK(prev < 0.01);
  }
}

TEST_CASE("critical value matches the published table at (k=3, df=10)") {
  // Standard studentized-range table: q_{0.05}(3, 10) = 3.88.
  const double q_crit = studentized_range_critical(0.05, 3, 10);
  CHECK(std::abs(q_crit - 3.88) <= 0.02);
}

TEST_CASE("more published critical values within table precision") {
  // q_{0.05}(2, 10) = 3.15, q_{0.05}(4, 20) = 3.96, q_{0.01}(3, 10) = 5.27.
  CHECK(std::abs(studentized_range_critical(0.05, 2, 10) - 3.15) <= 0.02);
  CHECK(std::abs(studentized_range_critical(0.05, 4, 20) - 3.96) <= 0.02);
  CHECK(std::abs(studentized_range_critical(0.01, 3, 10) - 5.27) <= 0.03);
}

TEST_CASE("k=2 studentized range agrees with the two-sided t tail") {
  // For two groups q = sqrt(2)|t|, so sf(q; 2, df) = 2 P(T_df > q/sqrt(2)).
  for (double q : {1.0, 2.5, 5.196152422706632}) {
    for (double df : {4.0, 10.0, 30.0}) {
      const double via_range = studentized_range_sf(q, 2, df);
      const double via_t = 2.0 * student_t_sf(q / std::numbers::sqrt2, df);
      CAPTURE(q);
      CAPTURE(df);
      CHECK(via_range == doctest::Approx(via_t).epsilon(2e-3));
    }
  }
}

TEST_CASE("tukey on the hand-computed example") {
  // q = |2-5| / sqrt(1/2 * (1/3+1/3)) = 3 sqrt(3) = 5.196; with k=2, df=4
  // the p-value equals the two-sided t-test p = 0.0213 -> significant.
  const TukeyReport report = tukey_hsd(two_groups(), 0.05);
  REQUIRE(report.pairs.size() == 1);
  const TukeyPair& p = report.pairs[0];
  CHECK(p.q_statistic == doctest::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(p.p_value == doctest::Approx(0.02131).epsilon(0.02));
  CHECK(p.significant);

  // Exhaustive-permutation sanity: this split is the most extreme of all
  // C(6,3) relabelings, so the oracle p-value is the smallest attainable.
  Rng rng(17);
  const auto perm = max_q_permutation_pvalues(two_groups(), 20000, rng);
  REQUIRE(perm.size() == 1);
  CHECK(perm[0] < 0.12);  // 2/20 two-sided floor, within resample noise
}

TEST_CASE("three-group dataset with one shifted group") {
  // Only pairs involving the shifted group are significant (5 sd shift).
  std::vector<GroupSamples> groups = {
      {"a", {10.1, 9.9, 10.0, 10.2, 9.8, 10.0, 10.1, 9.9, 10.0, 10.0}},
      {"b", {10.0, 10.2, 9.8, 10.1, 9.9, 10.1, 10.0, 9.9, 10.2, 9.8}},
      {"c", {10.8, 11.0, 10.9, 11.1, 10.7, 10.9, 11.0, 10.8, 11.1, 10.7}},
  };
  const TukeyReport report = tukey_hsd(groups, 0.05);
  REQUIRE(report.pairs.size() == 3);
  for (const TukeyPair& p : report.pairs) {
    const bool involves_c = p.label_a == "c" || p.label_b == "c";
    CAPTURE(p.label_a);
    CAPTURE(p.label_b);
    CHECK(p.significant == involves_c);
  }
}

TEST_CASE("degenerate ms_within flags nonidentical pairs") {
  const std::vector<GroupSamples> flat = {{"a", {1.0, 1.0}},
                                          {"b", {2.0, 2.0}},
                                          {"c", {1.0, 1.0}}};
  const TukeyReport report = tukey_hsd(flat);
  for (const TukeyPair& p : report.pairs) {
    CHECK(p.degenerate);
    const bool differs = p.mean_diff != 0.0;
    CHECK(p.significant == differs);
  }
  const std::string text = tukey_report_text(report);
  CHECK(text.find("WARNING") != std::string::npos);
}

TEST_CASE("tukey pairs are relabeling-equivariant") {
  std::vector<GroupSamples> groups = {
      {"x", {1.0, 2.0, 3.0, 2.5}}, {"y", {4.0, 5.0, 6.0, 5.5}},
      {"z", {1.5, 2.5, 2.0, 3.0}}};
  const TukeyReport forward = tukey_hsd(groups);
  std::swap(groups[0], groups[2]);
  const TukeyReport swapped = tukey_hsd(groups);

  auto find_pair = [](const TukeyReport& r, const std::string& a,
                      const std::string& b) {
    for (const TukeyPair& p : r.pairs)
      if ((p.label_a == a && p.label_b == b) || (p.label_a == b && p.label_b == a))
        return p;
    throw std::logic_error("pair not found");
  };
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"x", "y"}, {"x", "z"}, {"y", "z"}}) {
    const TukeyPair f = find_pair(forward, a, b);
    const TukeyPair s = find_pair(swapped, a, b);
    CHECK(f.q_statistic == doctest::Approx(s.q_statistic).epsilon(1e-12));
    CHECK(f.p_value == doctest::Approx(s.p_value).epsilon(1e-9));
    CHECK(f.significant == s.significant);
  }
}

TEST_CASE("location and scale invariance of q") {
  std::vector<GroupSamples> groups = {{"a", {1.0, 2.0, 3.0, 2.0}},
                                      {"b", {4.0, 5.0, 6.0, 5.0}}};
  const TukeyReport base = tukey_hsd(groups);

  std::vector<GroupSamples> shifted = groups;
  for (GroupSamples& g : shifted)
    for (double& v : g.values) v += 100.0;
  const TukeyReport shifted_report = tukey_hsd(shifted);
  CHECK(shifted_report.pairs[0].q_statistic ==
        doctest::Approx(base.pairs[0].q_statistic).epsilon(1e-9));
  CHECK(shifted_report.pairs[0].p_value ==
        doctest::Approx(base.pairs[0].p_value).epsilon(1e-6));

  std::vector<GroupSamples> scaled = groups;
  for (GroupSamples& g : scaled)
    for (double& v : g.values) v *= 7.0;
  const TukeyReport scaled_report = tukey_hsd(scaled);
  CHECK(scaled_report.pairs[0].q_statistic ==
        doctest::Approx(base.pairs[0].q_statistic).epsilon(1e-9));
}

TEST_CASE("tukey decisions agree with the permutation oracle on clear cases") {
  // Two constructions: a strong 5-sd effect and a null; both decided the
  // same way by Tukey and by a max-q permutation test.
  Rng data_rng(2718);
  auto noise = [&]() { return (data_rng.next_double() - 0.5) * 2.0; };

  for (int rep = 0; rep < 4; ++rep) {
    std::vector<GroupSamples> effect(3);
    std::vector<GroupSamples> null_case(3);
    const char* names[] = {"g0", "g1", "g2"};
    for (int g = 0; g < 3; ++g) {
      effect[g].label = names[g];
      null_case[g].label = names[g];
      for (int i = 0; i < 10; ++i) {
        const double base = noise();
        effect[g].values.push_back(base + (g == 2 ? 5.0 : 0.0));
        null_case[g].values.push_back(noise());
      }
    }

    Rng perm_rng(1000 + rep);
    const TukeyReport strong = tukey_hsd(effect, 0.05);
    const auto strong_perm = max_q_permutation_pvalues(effect, 5000, perm_rng);
    for (std::size_t p = 0; p < strong.pairs.size(); ++p) {
      CAPTURE(rep);
      CAPTURE(p);
      CHECK(strong.pairs[p].significant == (strong_perm[p] < 0.05));
    }
  }
}

TEST_CASE("report csv format") {
  const TukeyReport report = tukey_hsd(two_groups(), 0.05);
  const std::string csv = tukey_report_csv(report);
  CHECK(csv.rfind("group_a,group_b,mean_diff,q,p,significant\n", 0) == 0);
  CHECK(csv.find("a,b,-3.000000,5.196152,") != std::string::npos);
  CHECK(csv.find(",1\n") != std::string::npos);  // significant flag
}

TEST_CASE("student t tail matches table values") {
  // P(T_10 > 1.812) = 0.05, P(T_4 > 2.776) = 0.025, P(T_1 > 6.314) = 0.05.
  CHECK(student_t_sf(1.812, 10.0) == doctest::Approx(0.05).epsilon(2e-3));
  CHECK(student_t_sf(2.776, 4.0) == doctest::Approx(0.025).epsilon(2e-3));
  CHECK(student_t_sf(6.314, 1.0) == doctest::Approx(0.05).epsilon(2e-3));
  CHECK(student_t_sf(0.0, 7.0) == doctest::Approx(0.5));
  CHECK(student_t_sf(-1.812, 10.0) == doctest::Approx(0.95).epsilon(1e-3));
}

TEST_CASE("normal cdf anchor points") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(normal_cdf(1.959963985) == doctest::Approx(0.975).epsilon(1e-6));
  CHECK(normal_cdf(-1.959963985) == doctest::Approx(0.025).epsilon(1e-4));
}

TEST_CASE("welch one-sided test") {
  // Clear separation: one-sided p for mean(a) > mean(b) is small; reversed
  // direction gives the complement.
  const std::vector<double> high = {10.0, 11.0, 10.5, 9.5, 10.2, 10.8};
  const std::vector<double> low = {7.0, 8.0, 7.5, 6.5, 7.2, 7.8};
  const WelchResult forward = welch_one_sided(high, low);
  CHECK(forward.t > 0.0);
  CHECK(forward.p_one_sided < 0.001);

  const WelchResult reverse = welch_one_sided(low, high);
  CHECK(reverse.p_one_sided > 0.999);

  CHECK_THROWS_AS(welch_one_sided({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("welch reproduces an independently computed unequal-variance example") {
  // Expected values computed with an independent statistics package:
  // t = 2.660759, df = 25.739451, one-sided p = 0.0066210.
  const std::vector<double> a = {27.5, 21.0, 19.0, 23.6, 17.0, 17.9, 16.9,
                                 20.1, 21.9, 22.6, 23.1, 19.6, 19.0, 21.7};
  const std::vector<double> b = {27.1, 22.0, 20.8, 23.4, 23.4, 23.5, 25.8,
                                 22.0, 24.8, 20.2, 21.9, 22.1, 22.9, 30.0};
  const WelchResult r = welch_one_sided(b, a);
  CHECK(r.t == doctest::Approx(2.660759).epsilon(1e-5));
  CHECK(r.df == doctest::Approx(25.739451).epsilon(1e-5));
  CHECK(r.p_one_sided == doctest::Approx(0.0066210).epsilon(1e-3));
}

TEST_CASE("spearman rho") {
  CHECK(spearman_rho({1, 2, 3, 4, 5}, {2, 4, 6, 8, 10}) == doctest::Approx(1.0));
  CHECK(spearman_rho({1, 2, 3, 4, 5}, {10, 8, 6, 4, 2}) == doctest::Approx(-1.0));
  // one adjacent swap among 5 distinct values: rho = 1 - 6*2/120 = 0.9
  CHECK(spearman_rho({1, 2, 3, 4, 5}, {1, 3, 2, 4, 5}) == doctest::Approx(0.9));
  // monotone but nonlinear is still rank-perfect
  CHECK(spearman_rho({1, 2, 3, 4, 5}, {1, 4, 9, 16, 25}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(spearman_rho({1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("group summary") {
  const GroupSummary s = summarize({"g", {2.0, 4.0, 6.0}});
  CHECK(s.n == 3);
  CHECK(s.mean == doctest::Approx(4.0));
  CHECK(s.sd == doctest::Approx(2.0));
}
