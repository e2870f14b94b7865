#pragma once

#include <string>
#include <vector>

namespace lipatrol {

struct GroupSamples {
  std::string label;
  std::vector<double> values;
};

struct GroupSummary {
  std::string label;
  int n = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation
};

GroupSummary summarize(const GroupSamples& group);

struct AnovaResult {
  double ms_within = 0.0;
  long df_within = 0;
  long df_between = 0;
  bool degenerate = false;  // every sample identical across all groups
};

// One-way decomposition. Requires >= 2 groups, each with >= 2 samples.
AnovaResult anova_oneway(const std::vector<GroupSamples>& groups);

// Survival function of the studentized range distribution for k groups and
// df within-degrees-of-freedom, by numerical integration (outer integral over
// the scaled-chi density of the pooled SD, inner over the range of k standard
// normals). Absolute error < 1e-4.
double studentized_range_sf(double q, int k, double df);

// Inverse of the survival function: the critical q with sf(q) = alpha.
double studentized_range_critical(double alpha, int k, double df);

struct TukeyPair {
  std::string label_a;
  std::string label_b;
  double mean_diff = 0.0;    // mean_a - mean_b
  double q_statistic = 0.0;
  double p_value = 1.0;
  bool significant = false;
  bool degenerate = false;   // flagged when ms_within was 0
};

struct TukeyReport {
  std::vector<TukeyPair> pairs;  // all unordered pairs, input group order
  AnovaResult anova;
  double alpha = 0.05;
};

// Tukey HSD over all group pairs, Tukey-Kramer adjusted for unequal sizes:
// q = |mean_a - mean_b| / sqrt(ms_within/2 * (1/n_a + 1/n_b)).
TukeyReport tukey_hsd(const std::vector<GroupSamples>& groups, double alpha = 0.05);

// Report CSV with header group_a,group_b,mean_diff,q,p,significant and a
// human-readable summary table.
std::string tukey_report_csv(const TukeyReport& report);
std::string tukey_report_text(const TukeyReport& report);

// Supporting distributions.
double normal_cdf(double x);
double incomplete_beta(double a, double b, double x);  // regularized I_x(a,b)
double student_t_sf(double t, double df);               // P(T > t)

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p_one_sided = 1.0;  // H1: mean(a) > mean(b)
};

WelchResult welch_one_sided(const std::vector<double>& a, const std::vector<double>& b);

// Spearman rank correlation with average ranks for ties.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace lipatrol
