#include "compcov/acceleration.hpp"

#include "compcov/asymptotics.hpp"

#include <algorithm>

namespace compcov {

void SequenceSample::validate() const {
  if (abscissae.size() != values.size())
    throw std::invalid_argument("sample abscissae and values differ in length");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!isfinite(values[i])) throw std::invalid_argument("sample value is not finite");
    if (i > 0 && !(abscissae[i] > abscissae[i - 1]))
      throw std::invalid_argument("sample abscissae must be strictly increasing");
  }
}

Real log_variable(const Real& n) { return 1 / log(n + 1); }

namespace {

void require_points(const SequenceSample& s, std::size_t needed, const char* method) {
  s.validate();
  if (s.size() < needed)
    throw InsufficientPoints(std::string(method) + " needs at least " + std::to_string(needed) +
                             " points, got " + std::to_string(s.size()));
}

// Differences at or below this relative size are treated as exact
// agreement: the tableau has converged and further columns are noise.
bool negligible(const Real& diff, const Real& a, const Real& b) {
  static const Real tol = pow(Real(10), -(kWorkingDigits - 8));
  const Real scale = std::max({Real(abs(a)), Real(abs(b)), Real(1)});
  return abs(diff) <= tol * scale;
}

}  // namespace

Extrapolation richardson(const SequenceSample& sample, int order) {
  if (order < 0) throw std::invalid_argument("richardson order must be >= 0");
  require_points(sample, static_cast<std::size_t>(order) + 1, "richardson");
  const std::size_t first = sample.size() - static_cast<std::size_t>(order) - 1;
  std::vector<Real> t;
  for (std::size_t i = first; i < sample.size(); ++i) t.push_back(log_variable(sample.abscissae[i]));

  Extrapolation r;
  r.method = "richardson";
  r.tableau.emplace_back(sample.values.begin() + static_cast<std::ptrdiff_t>(first), sample.values.end());
  // P_{i..i+j}(0) = (t_i P_{i+1..i+j} - t_{i+j} P_{i..i+j-1}) / (t_i - t_{i+j})
  for (int j = 1; j <= order; ++j) {
    const auto& prev = r.tableau.back();
    std::vector<Real> col(prev.size() - 1);
    for (std::size_t i = 0; i < col.size(); ++i) {
      const Real& ti = t[i];
      const Real& tj = t[i + static_cast<std::size_t>(j)];
      col[i] = (ti * prev[i + 1] - tj * prev[i]) / (ti - tj);
    }
    r.tableau.push_back(std::move(col));
  }
  r.value = r.tableau.back().back();
  if (order == 0)
    r.error_estimate = sample.size() > 1 ? Real(abs(sample.values.back() - sample.values[sample.size() - 2])) : Real(0);
  else
    r.error_estimate = abs(r.value - r.tableau[r.tableau.size() - 2].back());
  return r;
}

Extrapolation wynn_epsilon(const SequenceSample& sample) {
  require_points(sample, 1, "wynn-epsilon");
  Extrapolation r;
  r.method = "wynn-epsilon";
  std::vector<Real> before(sample.size() + 1, Real(0));  // epsilon_{-1}
  std::vector<Real> current = sample.values;               // epsilon_0
  r.tableau.push_back(current);

  Real best = current.back();
  Real previous_best = current.size() > 1 ? current[current.size() - 2] : current.back();
  for (int k = 1; current.size() > 1; ++k) {
    std::vector<Real> next(current.size() - 1);
    for (std::size_t i = 0; i < next.size(); ++i) {
      const Real diff = current[i + 1] - current[i];
      if (negligible(diff, current[i], current[i + 1])) {
        if ((k - 1) % 2 == 0) {
          // An estimate column has settled.
          r.value = current[i + 1];
          r.error_estimate = abs(diff);
          return r;
        }
        r.value = best;
        r.error_estimate = abs(best - previous_best);
        return r;
      }
      next[i] = before[i + 1] + 1 / diff;
    }
    if (k % 2 == 0) {
      previous_best = best;
      best = next.back();
    }
    before = std::move(current);
    current = std::move(next);
    r.tableau.push_back(current);
  }
  r.value = best;
  r.error_estimate = abs(best - previous_best);
  return r;
}

Extrapolation levin_u(const SequenceSample& sample, const Real& beta) {
  require_points(sample, 2, "levin-u");
  Extrapolation r;
  r.method = "levin-u";
  const auto& s = sample.values;
  const std::size_t m = s.size();

  std::vector<Real> omega(m);
  bool all_zero = true;
  for (std::size_t j = 1; j < m; ++j) {
    const Real diff = s[j] - s[j - 1];
    if (!negligible(diff, s[j], s[j - 1])) all_zero = false;
    omega[j] = (beta + Real(static_cast<long>(j))) * diff;
  }
  if (all_zero) {
    r.value = s.back();
    r.error_estimate = 0;
    return r;
  }
  for (std::size_t j = 1; j < m; ++j)
    if (omega[j] == 0) throw std::domain_error("levin-u: vanishing remainder estimate inside the sample");

  // L_k = sum_j (-1)^j C(k,j) ((beta+1+j)/(beta+1+k))^(k-1) s_{1+j}/w_{1+j}
  //       / (same with 1/w_{1+j}),   j = 0..k
  std::vector<Real> estimates;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    Real num = 0, den = 0, binom = 1;
    const Real last = beta + Real(static_cast<long>(k + 1));
    for (std::size_t j = 0; j <= k; ++j) {
      const Real scale = pow((beta + Real(static_cast<long>(j + 1))) / last, static_cast<long>(k) - 1);
      const Real w = (j % 2 == 0 ? binom : Real(-binom)) * scale / omega[j + 1];
      num += w * s[j + 1];
      den += w;
      binom = binom * Real(static_cast<long>(k - j)) / Real(static_cast<long>(j + 1));
    }
    estimates.push_back(num / den);
  }
  r.tableau.push_back(estimates);
  r.value = estimates.back();
  r.error_estimate = estimates.size() > 1 ? Real(abs(estimates.back() - estimates[estimates.size() - 2])) : Real(0);
  return r;
}

ConstantEstimate estimate_C(const SequenceSample& probe) {
  require_points(probe, kMinProbePoints, "estimate_C");
  ConstantEstimate c;
  c.per_method.push_back(richardson(probe, kProbeRichardsonOrder));
  c.per_method.push_back(wynn_epsilon(probe));
  c.per_method.push_back(levin_u(probe));

  std::vector<Real> v;
  for (const auto& e : c.per_method) v.push_back(e.value);
  std::sort(v.begin(), v.end());
  c.median = v.size() % 2 == 1 ? v[v.size() / 2] : Real((v[v.size() / 2 - 1] + v[v.size() / 2]) / 2);
  c.spread = v.back() - v.front();
  return c;
}

ConstantEstimate estimate_C(Ensemble e, std::span<const int> ns, const StatsOptions& opt, const Real& exponent) {
  if (ns.size() < kMinProbePoints)
    throw InsufficientPoints("estimate_C needs at least " + std::to_string(kMinProbePoints) + " lengths");
  SequenceSample sample;
  for (const auto& pt : conjecture_probe(e, ns, opt, exponent)) {
    sample.abscissae.push_back(Real(pt.n));
    sample.values.push_back(pt.q);
  }
  return estimate_C(sample);
}

}  // namespace compcov
