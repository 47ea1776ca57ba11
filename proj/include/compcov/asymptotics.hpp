#pragma once

#include "compcov/ensemble.hpp"
#include "compcov/numeric.hpp"
#include "compcov/statistics.hpp"

#include <span>
#include <vector>

namespace compcov {

struct AsymptoticConstants {
  Real gamma;  // Euler-Mascheroni
  Real ln2;
  Real phi;    // golden mean (1 + sqrt 5) / 2
  Real pi;

  static const AsymptoticConstants& get();
};

/// The 1-free expansions are conjectured, not proven; every output that
/// reports them carries this flag.
constexpr bool is_conjectural(Family f) { return f == Family::OneFree; }

/// Leading behaviour of E[maximum part] (= 1 + E[longest zero-run]) for
/// compositions of N = n + 1, ignoring small periodic fluctuations:
///   ln n / ln b + gamma / ln b - c,  (b, c) = (2, 1/2) or (phi, 1).
Real predicted_max_mean(Family f, int n);

/// 1/12 + pi^2 / (6 ln^2 b); the limit of V[maximum part].
Real predicted_max_var(Family f);

inline constexpr double kDefaultProbeExponent = 2.5;

struct ProbePoint {
  int n = 0;
  Real rho;
  Real q;  // rho * ln(n + 1)^exponent
};

Real probe_value(const Real& rho, int n, const Real& exponent = Real(kDefaultProbeExponent));

/// q(n) = rho(n) ln(N)^exponent, N = n + 1. Under the conjectured decay
/// rho ~ C ln(N)^(-5/2) this tends to C.
std::vector<ProbePoint> conjecture_probe(Ensemble e, std::span<const int> ns, const StatsOptions& opt = {},
                                         const Real& exponent = Real(kDefaultProbeExponent));

}  // namespace compcov
