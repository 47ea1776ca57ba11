#include "compcov/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>

#include <stdexcept>

namespace compcov {

const AsymptoticConstants& AsymptoticConstants::get() {
  static const AsymptoticConstants constants = [] {
    namespace mc = boost::math::constants;
    AsymptoticConstants c;
    c.gamma = mc::euler<Real>();
    c.ln2 = mc::ln_two<Real>();
    c.phi = mc::phi<Real>();
    c.pi = mc::pi<Real>();
    return c;
  }();
  return constants;
}

namespace {
Real log_base(Family f) {
  const auto& c = AsymptoticConstants::get();
  return f == Family::Unrestricted ? c.ln2 : Real(log(c.phi));
}
}  // namespace

Real predicted_max_mean(Family f, int n) {
  if (n < 2) throw std::invalid_argument("asymptotic mean needs n >= 2");
  const Real lb = log_base(f);
  const Real shift = f == Family::Unrestricted ? Real(1) / 2 : Real(1);
  return log(Real(n)) / lb + AsymptoticConstants::get().gamma / lb - shift;
}

Real predicted_max_var(Family f) {
  const Real lb = log_base(f);
  const Real& pi = AsymptoticConstants::get().pi;
  return Real(1) / 12 + pi * pi / (6 * lb * lb);
}

Real probe_value(const Real& rho, int n, const Real& exponent) {
  return rho * pow(log(Real(n + 1)), exponent);
}

std::vector<ProbePoint> conjecture_probe(Ensemble e, std::span<const int> ns, const StatsOptions& opt,
                                         const Real& exponent) {
  std::vector<ProbePoint> out;
  if (ns.empty()) return out;
  const auto summaries = moment_summaries(e, ns, opt);
  out.reserve(ns.size());
  for (const auto& s : summaries) {
    ProbePoint pt;
    pt.n = s.n;
    pt.rho = correlation_real(s);
    pt.q = probe_value(pt.rho, s.n, exponent);
    out.push_back(pt);
  }
  return out;
}

}  // namespace compcov
