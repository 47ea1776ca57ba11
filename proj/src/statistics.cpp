#include "compcov/statistics.hpp"

#include "compcov/gap_counts.hpp"

#include <algorithm>

namespace compcov {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Recursion: return "recursion";
    case Method::Gap: return "gap";
  }
  return "";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::Auto, Method::Recursion, Method::Gap})
    if (method_name(m) == name) return m;
  return std::nullopt;
}

namespace {

ExactRational ratio(const ExactInteger& num, const ExactInteger& den) {
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

ExactInteger MomentSummary::composition_exy_numerator() const {
  return sums.ones_run + sums.ones + sums.run + sums.size;
}

ExactRational MomentSummary::composition_covariance() const {
  return ratio(composition_exy_numerator(), size) - (1 + m) * (1 + mu);
}

ExactRational MomentSummary::rho_squared() const {
  if (sgn(s2) == 0 || sgn(sigma2) == 0)
    throw DegenerateVariance("zero variance for " + std::string(ensemble.name()) + " at n = " +
                             std::to_string(n));
  return covariance * covariance / (s2 * sigma2);
}

MomentSummary summarize(Ensemble e, int n, const CountSums& sums) {
  if (sgn(sums.size) <= 0)
    throw std::domain_error("no " + std::string(e.name()) + " strings of length " + std::to_string(n));
  MomentSummary s;
  s.ensemble = e;
  s.n = n;
  s.size = sums.size;
  s.m = ratio(sums.ones, sums.size);
  s.s2 = ratio(sums.ones_sq, sums.size) - s.m * s.m;
  s.mu = ratio(sums.run, sums.size);
  s.sigma2 = ratio(sums.run_sq, sums.size) - s.mu * s.mu;
  s.exy_numerator = sums.ones_run;
  s.covariance = ratio(sums.ones_run, sums.size) - s.m * s.mu;
  s.sums = sums;
  return s;
}

std::vector<CountSums> count_sums(Ensemble e, std::span<const int> ns, const StatsOptions& opt) {
  for (int n : ns)
    if (n < 0) throw std::invalid_argument("negative string length");
  auto by_recursion = [&](int n) {
    return opt.method == Method::Recursion || (opt.method == Method::Auto && n <= opt.recursion_cap);
  };
  int sweep_max = -1;
  for (int n : ns)
    if (by_recursion(n)) sweep_max = std::max(sweep_max, n);

  std::vector<CountSums> swept;
  if (sweep_max >= 0) swept = recursion_sums(e, sweep_max, opt.recursion_cap);

  std::vector<CountSums> out;
  out.reserve(ns.size());
  for (int n : ns) out.push_back(by_recursion(n) ? swept[static_cast<std::size_t>(n)] : gap_sums(e, n));
  return out;
}

std::vector<MomentSummary> moment_summaries(Ensemble e, std::span<const int> ns, const StatsOptions& opt) {
  const auto sums = count_sums(e, ns, opt);
  std::vector<MomentSummary> out;
  out.reserve(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) out.push_back(summarize(e, ns[i], sums[i]));
  return out;
}

MomentSummary moment_summary(Ensemble e, int n, const StatsOptions& opt) {
  const int ns[] = {n};
  return moment_summaries(e, ns, opt).front();
}

ExactInteger exy_numerator_bitstring(Ensemble e, int n, const StatsOptions& opt) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const int ns[] = {n};
  return count_sums(e, ns, opt).front().ones_run;
}

ExactInteger exy_numerator_composition(Family f, int N, const StatsOptions& opt) {
  if (N < 1) throw std::invalid_argument("need N >= 1");
  const int ns[] = {N - 1};
  const CountSums s = count_sums(ensemble_of(f), ns, opt).front();
  return s.ones_run + s.ones + s.run + s.size;
}

ExactRational covariance(Ensemble e, int n, const StatsOptions& opt) {
  return moment_summary(e, n, opt).covariance;
}

std::string correlation(const MomentSummary& s, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  const std::string magnitude = sqrt_to_fixed(s.rho_squared(), digits);
  return sgn(s.covariance) < 0 ? "-" + magnitude : magnitude;
}

std::string correlation(Ensemble e, int n, int digits, const StatsOptions& opt) {
  return correlation(moment_summary(e, n, opt), digits);
}

Real correlation_real(const MomentSummary& s) {
  const Real magnitude = sqrt(to_real(s.rho_squared()));
  return sgn(s.covariance) < 0 ? Real(-magnitude) : magnitude;
}

CorrelationRow table_row(int n, int digits, const StatsOptions& opt) {
  CorrelationRow row;
  row.n = n;
  for (Ensemble e : kAllEnsembles) row.rho.emplace_back(e, correlation(e, n, digits, opt));
  return row;
}

}  // namespace compcov
