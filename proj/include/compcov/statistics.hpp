#pragma once

#include "compcov/count_sums.hpp"
#include "compcov/count_tables.hpp"
#include "compcov/ensemble.hpp"
#include "compcov/numeric.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace compcov {

/// Which counting path supplies the power sums.
enum class Method { Auto, Recursion, Gap };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct StatsOptions {
  Method method = Method::Auto;
  /// Largest n served by the recursion; Auto switches to gap counts above.
  int recursion_cap = kDefaultRecursionCap;
};

class DegenerateVariance : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact moments of (ones, longest zero-run) over one ensemble at length n.
/// In composition terms: parts = ones + 1, maximum part = run + 1.
struct MomentSummary {
  Ensemble ensemble = Ensemble::unconstrained();
  int n = 0;
  ExactInteger size;
  ExactRational m;       // E[ones]
  ExactRational s2;      // V[ones]
  ExactRational mu;      // E[run]
  ExactRational sigma2;  // V[run]
  ExactInteger exy_numerator;  // size * E[ones * run]
  ExactRational covariance;
  CountSums sums;

  /// size * E[parts * max part]
  ExactInteger composition_exy_numerator() const;
  /// E[parts * max part] - E[parts] E[max part]; equals `covariance`.
  ExactRational composition_covariance() const;
  /// cov^2 / (s2 sigma2); throws DegenerateVariance when either is zero.
  ExactRational rho_squared() const;
};

MomentSummary summarize(Ensemble e, int n, const CountSums& sums);

/// Power sums for each requested length, routed per the options. Lengths
/// served by the recursion come from a single sweep.
std::vector<CountSums> count_sums(Ensemble e, std::span<const int> ns, const StatsOptions& opt = {});

MomentSummary moment_summary(Ensemble e, int n, const StatsOptions& opt = {});
std::vector<MomentSummary> moment_summaries(Ensemble e, std::span<const int> ns,
                                            const StatsOptions& opt = {});

ExactInteger exy_numerator_bitstring(Ensemble e, int n, const StatsOptions& opt = {});
/// Numerator of E[(parts)(max part)] over compositions of N; N = 1 is the
/// empty string.
ExactInteger exy_numerator_composition(Family f, int N, const StatsOptions& opt = {});

ExactRational covariance(Ensemble e, int n, const StatsOptions& opt = {});

/// Correlation rounded half-to-even to `digits` decimals, e.g. "-0.441772".
std::string correlation(const MomentSummary& s, int digits);
std::string correlation(Ensemble e, int n, int digits, const StatsOptions& opt = {});
Real correlation_real(const MomentSummary& s);

struct CorrelationRow {
  int n = 0;
  std::vector<std::pair<Ensemble, std::string>> rho;
};

/// One row of both published tables: Unconstrained and PinnedSolus (parts
/// vs maximum part), then Pinned and Solus (ones vs longest zero-run).
CorrelationRow table_row(int n, int digits, const StatsOptions& opt = {});

}  // namespace compcov
