#pragma once

#include "compcov/count_sums.hpp"
#include "compcov/ensemble.hpp"
#include "compcov/numeric.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace compcov {

/// Counts of strings of one ensemble and length n by (x = number of zeros,
/// y = longest zero-run), 0 <= y <= x <= n. Entries outside that triangle
/// read as zero.
class JointCountTable {
 public:
  JointCountTable(Ensemble ensemble, int n);

  Ensemble ensemble() const { return ensemble_; }
  int n() const { return n_; }

  const ExactInteger& count(int x, int y) const;
  ExactInteger& at(int x, int y);

  /// Number of strings with x zeros, one entry per y in [0, x].
  std::span<const ExactInteger> row(int x) const;

  ExactInteger total() const;
  CountSums sums() const;

  friend bool operator==(const JointCountTable& a, const JointCountTable& b);

 private:
  static std::size_t index(int x, int y) {
    return static_cast<std::size_t>(x) * (x + 1) / 2 + static_cast<std::size_t>(y);
  }

  Ensemble ensemble_;
  int n_;
  std::vector<ExactInteger> counts_;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultRecursionCap = 600;

/// Gate of the recursion: 1 where a nonzero count is possible. Unconstrained
/// and PinnedSolus use the closed-form indicators; Pinned and Solus use the
/// exact gap-profile support.
int epsilon(Ensemble e, int n, int x, int y);

/// Number of admitted strings of length n with a single 1 (x = n-1 zeros)
/// and longest zero-run exactly y; zero outside the support.
int lambda(Ensemble e, int n, int y);

/// Number of admitted strings of length n.
ExactInteger ensemble_size(Ensemble e, int n);

/// Receives, for every length up to the sweep bound, the row of counts with
/// x zeros (span indexed by y).
using RowVisitor = std::function<void(int n, int x, std::span<const ExactInteger> counts)>;

/// Runs the first-block recursion for all lengths 0..n_max at once. Rows
/// are visited grouped by number of ones (p = n - x), ascending.
void sweep_tables(Ensemble e, int n_max, const RowVisitor& visit,
                  int cap = kDefaultRecursionCap);

JointCountTable build_table(Ensemble e, int n, int cap = kDefaultRecursionCap);

/// Power sums for every length 0..n_max from one sweep.
std::vector<CountSums> recursion_sums(Ensemble e, int n_max, int cap = kDefaultRecursionCap);

}  // namespace compcov
