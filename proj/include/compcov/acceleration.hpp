#pragma once

#include "compcov/ensemble.hpp"
#include "compcov/numeric.hpp"
#include "compcov/statistics.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace compcov {

/// A slowly convergent sequence sampled at strictly increasing lengths n.
/// Transforms that need an extrapolation variable use t = 1 / ln(n + 1).
struct SequenceSample {
  std::vector<Real> abscissae;
  std::vector<Real> values;

  std::size_t size() const { return values.size(); }
  /// Throws std::invalid_argument on mismatched sizes, non-increasing
  /// abscissae or non-finite values.
  void validate() const;
};

class InsufficientPoints : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Extrapolation {
  std::string method;
  Real value;
  /// Difference between the last two estimates of the tableau.
  Real error_estimate;
  std::vector<std::vector<Real>> tableau;
};

Real log_variable(const Real& n);

/// Polynomial extrapolation to t = 0 through the last order + 1 points
/// (Neville tableau).
Extrapolation richardson(const SequenceSample& sample, int order);

/// Wynn's epsilon algorithm; the estimate is the deepest even column that
/// uses the newest point.
Extrapolation wynn_epsilon(const SequenceSample& sample);

/// Levin's u transform with remainder estimates (beta + j) * (s_j - s_{j-1})
/// over the term index j.
Extrapolation levin_u(const SequenceSample& sample, const Real& beta = Real(1));

struct ConstantEstimate {
  Real median;
  /// Largest pairwise difference between the per-method estimates.
  Real spread;
  std::vector<Extrapolation> per_method;
  bool negative() const { return median < 0; }
};

inline constexpr std::size_t kMinProbePoints = 8;
inline constexpr int kProbeRichardsonOrder = 2;

/// Applies every transform to a probe sequence q(n) and reports the median.
/// The estimate is conditional on the conjectured decay law, never a known
/// value.
ConstantEstimate estimate_C(const SequenceSample& probe);
ConstantEstimate estimate_C(Ensemble e, std::span<const int> ns, const StatsOptions& opt = {},
                            const Real& exponent = Real(2.5));

}  // namespace compcov
