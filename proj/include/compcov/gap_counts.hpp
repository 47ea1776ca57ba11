#pragma once

#include "compcov/count_sums.hpp"
#include "compcov/count_tables.hpp"
#include "compcov/ensemble.hpp"
#include "compcov/numeric.hpp"

#include <memory>
#include <vector>

namespace compcov {

/// Pascal triangle C(m, k) for 0 <= m <= m_max. Out-of-range arguments
/// (m < 0, k < 0, k > m) read as zero. Immutable once built.
class BinomialTable {
 public:
  explicit BinomialTable(int m_max);

  int m_max() const { return m_max_; }
  const ExactInteger& operator()(long m, long k) const;

 private:
  int m_max_;
  std::vector<ExactInteger> entries_;
};

/// Process-wide table covering at least m_max; grows on demand.
std::shared_ptr<const BinomialTable> shared_binomials(int m_max);

/// Strings of length n with exactly p ones and every zero-run <= y, counted
/// by inclusion-exclusion over the p+1 gaps of the ensemble's gap profile.
ExactInteger count_at_most(Ensemble e, int n, int p, int y);

/// Strings with x zeros and longest zero-run exactly y.
ExactInteger joint_count(Ensemble e, int n, int x, int y);

JointCountTable gap_table(Ensemble e, int n);

/// Power sums at one length via tail counts #{run > y} per number of ones.
CountSums gap_sums(Ensemble e, int n);

}  // namespace compcov
