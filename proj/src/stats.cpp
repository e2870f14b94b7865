#include "lipatrol/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lipatrol {

namespace {

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Adaptive Simpson with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

double normal_pdf(double x) {
  static const double inv_sqrt_2pi = 0.3989422804014327;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

// CDF of the range of k iid standard normals, P(max - min <= w).
double normal_range_cdf(double w, int k) {
  if (w <= 0.0) return 0.0;
  auto integrand = [&](double u) {
    const double span = normal_cdf(u) - normal_cdf(u - w);
    return normal_pdf(u) * std::pow(span, k - 1);
  };
  const double p = static_cast<double>(k) * integrate(integrand, -9.0, 9.0, 1e-10);
  return std::clamp(p, 0.0, 1.0);
}

// Density of s = chi_df / sqrt(df) (the scaled pooled-SD factor), log-space.
double scaled_chi_log_pdf(double s, double df) {
  return 0.5 * df * std::log(df) - (0.5 * df - 1.0) * std::numbers::ln2 -
         std::lgamma(0.5 * df) + (df - 1.0) * std::log(s) - 0.5 * df * s * s;
}

}  // namespace

GroupSummary summarize(const GroupSamples& group) {
  GroupSummary s;
  s.label = group.label;
  s.n = static_cast<int>(group.values.size());
  if (s.n == 0) return s;
  s.mean = mean_of(group.values);
  if (s.n >= 2) {
    double ss = 0.0;
    for (double v : group.values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / (s.n - 1));
  }
  return s;
}

AnovaResult anova_oneway(const std::vector<GroupSamples>& groups) {
  if (groups.size() < 2)
    throw std::invalid_argument("anova_oneway: need at least 2 groups");
  long n_total = 0;
  for (const GroupSamples& g : groups) {
    if (g.values.size() < 2)
      throw std::invalid_argument("anova_oneway: every group needs >= 2 samples (" +
                                  g.label + ")");
    n_total += static_cast<long>(g.values.size());
  }

  double ss_within = 0.0;
  for (const GroupSamples& g : groups) {
    const double m = mean_of(g.values);
    for (double v : g.values) ss_within += (v - m) * (v - m);
  }

  AnovaResult r;
  r.df_within = n_total - static_cast<long>(groups.size());
  r.df_between = static_cast<long>(groups.size()) - 1;
  r.ms_within = ss_within / static_cast<double>(r.df_within);
  r.degenerate = r.ms_within == 0.0;
  return r;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0); }

double studentized_range_sf(double q, int k, double df) {
  if (q < 0.0) throw std::invalid_argument("studentized_range_sf: q must be >= 0");
  if (k < 2) throw std::invalid_argument("studentized_range_sf: k must be >= 2");
  if (df < 1.0) throw std::invalid_argument("studentized_range_sf: df must be >= 1");
  if (q == 0.0) return 1.0;

  // Integrate the range CDF against the scaled-chi density of the pooled SD.
  // The density mass sits near 1 with width ~1/sqrt(2 df); the bounds below
  // put the truncated tails far under the 1e-4 tolerance.
  const double spread = std::max(10.0 / std::sqrt(2.0 * df), 0.05);
  const double s_lo = std::max(0.0, 1.0 - spread - 0.5);
  const double s_hi = 1.0 + spread + std::sqrt(90.0 / df);
  auto integrand = [&](double s) {
    if (s <= 0.0) return 0.0;
    const double log_pdf = scaled_chi_log_pdf(s, df);
    if (log_pdf < -45.0) return 0.0;
    return std::exp(log_pdf) * normal_range_cdf(q * s, k);
  };
  const double cdf = integrate(integrand, s_lo, s_hi, 1e-7);
  return std::clamp(1.0 - cdf, 0.0, 1.0);
}

double studentized_range_critical(double alpha, int k, double df) {
  if (alpha <= 0.0 || alpha >= 1.0)
    throw std::invalid_argument("studentized_range_critical: alpha must be in (0,1)");
  double lo = 0.0, hi = 2.0;
  while (studentized_range_sf(hi, k, df) > alpha) {
    hi *= 2.0;
    if (hi > 1e4)
      throw std::runtime_error("studentized_range_critical: bracket failed");
  }
  for (int i = 0; i < 60 && hi - lo > 1e-7; ++i) {
    const double mid = 0.5 * (lo + hi);
    (studentized_range_sf(mid, k, df) > alpha ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

TukeyReport tukey_hsd(const std::vector<GroupSamples>& groups, double alpha) {
  TukeyReport report;
  report.alpha = alpha;
  report.anova = anova_oneway(groups);
  const int k = static_cast<int>(groups.size());

  std::vector<GroupSummary> summaries;
  summaries.reserve(groups.size());
  for (const GroupSamples& g : groups) summaries.push_back(summarize(g));

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      TukeyPair pair;
      pair.label_a = summaries[i].label;
      pair.label_b = summaries[j].label;
      pair.mean_diff = summaries[i].mean - summaries[j].mean;
      if (report.anova.ms_within > 0.0) {
        const double se = std::sqrt(report.anova.ms_within / 2.0 *
                                    (1.0 / summaries[i].n + 1.0 / summaries[j].n));
        pair.q_statistic = std::abs(pair.mean_diff) / se;
        pair.p_value = studentized_range_sf(pair.q_statistic, k,
                                            static_cast<double>(report.anova.df_within));
        pair.significant = pair.p_value < alpha;
      } else {
        // Zero within-group variance: any mean difference is degenerate-significant.
        pair.degenerate = true;
        pair.significant = pair.mean_diff != 0.0;
        pair.p_value = pair.significant ? 0.0 : 1.0;
        pair.q_statistic = 0.0;
      }
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

std::string tukey_report_csv(const TukeyReport& report) {
  std::ostringstream out;
  out << "group_a,group_b,mean_diff,q,p,significant\n";
  out.precision(6);
  out << std::fixed;
  for (const TukeyPair& p : report.pairs) {
    out << p.label_a << ',' << p.label_b << ',' << p.mean_diff << ','
        << p.q_statistic << ',' << p.p_value << ','
        << (p.degenerate ? "degenerate" : (p.significant ? "1" : "0")) << '\n';
  }
  return out.str();
}

std::string tukey_report_text(const TukeyReport& report) {
  std::ostringstream out;
  out.precision(4);
  out << std::fixed;
  out << "Tukey HSD, alpha=" << report.alpha
      << ", MS_within=" << report.anova.ms_within
      << ", df_within=" << report.anova.df_within << "\n";
  if (report.anova.ms_within == 0.0)
    out << "WARNING: zero within-group variance; pairwise comparisons are degenerate\n";
  for (const TukeyPair& p : report.pairs) {
    out << "  " << p.label_a << " vs " << p.label_b << ": diff=" << p.mean_diff
        << " q=" << p.q_statistic << " p=" << p.p_value
        << (p.degenerate ? " [degenerate]" : (p.significant ? " *" : "")) << "\n";
  }
  return out.str();
}

double incomplete_beta(double a, double b, double x) {
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("incomplete_beta: x must be in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  // Continued fraction (Lentz); symmetry keeps it on the fast-converging side.
  if (x > (a + 1.0) / (a + b + 2.0)) return 1.0 - incomplete_beta(b, a, 1.0 - x);

  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log(1.0 - x);
  const double tiny = 1e-300;
  double c = 1.0;
  double d = 1.0 - (a + b) * x / (a + 1.0);
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double result = d;
  for (int m = 1; m <= 400; ++m) {
    const double md = static_cast<double>(m);
    double num = md * (b - md) * x / ((a + 2.0 * md - 1.0) * (a + 2.0 * md));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    result *= d * c;
    num = -(a + md) * (a + b + md) * x / ((a + 2.0 * md) * (a + 2.0 * md + 1.0));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double factor = d * c;
    result *= factor;
    if (std::abs(factor - 1.0) < 1e-14) break;
  }
  return std::exp(log_front) * result / a;
}

double student_t_sf(double t, double df) {
  if (df <= 0.0) throw std::invalid_argument("student_t_sf: df must be > 0");
  const double x = df / (df + t * t);
  const double half_tail = 0.5 * incomplete_beta(0.5 * df, 0.5, x);
  return t >= 0.0 ? half_tail : 1.0 - half_tail;
}

WelchResult welch_one_sided(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() < 2 || b.size() < 2)
    throw std::invalid_argument("welch_one_sided: both samples need >= 2 values");
  const GroupSummary sa = summarize({"a", a});
  const GroupSummary sb = summarize({"b", b});
  const double va = sa.sd * sa.sd / sa.n;
  const double vb = sb.sd * sb.sd / sb.n;
  WelchResult r;
  if (va + vb == 0.0) {
    r.t = sa.mean == sb.mean ? 0.0 : std::numeric_limits<double>::infinity() *
                                         (sa.mean > sb.mean ? 1.0 : -1.0);
    r.df = static_cast<double>(sa.n + sb.n - 2);
    r.p_one_sided = sa.mean > sb.mean ? 0.0 : 1.0;
    return r;
  }
  r.t = (sa.mean - sb.mean) / std::sqrt(va + vb);
  r.df = (va + vb) * (va + vb) /
         (va * va / (sa.n - 1) + vb * vb / (sb.n - 1));
  r.p_one_sided = student_t_sf(r.t, r.df);
  return r;
}

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("spearman_rho: need two equal-length series of >= 2");
  auto ranks = [](const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
      const double avg = 0.5 * (i + j) + 1.0;  // average rank for ties
      for (std::size_t t = i; t <= j; ++t) rank[order[t]] = avg;
      i = j + 1;
    }
    return rank;
  };
  const std::vector<double> rx = ranks(x);
  const std::vector<double> ry = ranks(y);
  const double mx = mean_of(rx);
  const double my = mean_of(ry);
  double num = 0.0, dx = 0.0, dy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    num += (rx[i] - mx) * (ry[i] - my);
    dx += (rx[i] - mx) * (rx[i] - mx);
    dy += (ry[i] - my) * (ry[i] - my);
  }
  if (dx == 0.0 || dy == 0.0) return 0.0;
  return num / std::sqrt(dx * dy);
}

}  // namespace lipatrol
