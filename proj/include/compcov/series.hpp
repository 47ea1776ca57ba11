#pragma once

#include "compcov/ensemble.hpp"
#include "compcov/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace compcov {

/// Power series c_0 + c_1 z + ... + c_D z^D with everything above degree D
/// discarded. Arithmetic is exact for exact scalars and closed under the
/// bound; binary operations take the smaller bound of the two operands.
template <typename Scalar>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int degree) : coeffs_(checked(degree) + 1) {}

  TruncatedSeries(int degree, std::span<const Scalar> coeffs) : coeffs_(checked(degree) + 1) {
    const std::size_t n = std::min(coeffs.size(), coeffs_.size());
    std::copy_n(coeffs.begin(), n, coeffs_.begin());
  }

  TruncatedSeries(int degree, std::initializer_list<Scalar> coeffs)
      : TruncatedSeries(degree, std::span<const Scalar>(coeffs.begin(), coeffs.size())) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Scalar& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  std::span<const Scalar> coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    truncate(o.degree());
    for (int i = 0; i <= degree(); ++i) (*this)[i] += o[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    truncate(o.degree());
    for (int i = 0; i <= degree(); ++i) (*this)[i] -= o[i];
    return *this;
  }
  TruncatedSeries& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& s) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.degree(), b.degree()));
    for (int i = 0; i <= r.degree(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= r.degree(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static std::size_t checked(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree bound");
    return static_cast<std::size_t>(degree);
  }
  void truncate(int d) {
    if (d < degree()) coeffs_.resize(static_cast<std::size_t>(d) + 1);
  }

  std::vector<Scalar> coeffs_;
};

namespace detail {
// Exact quotient; for integer scalars the divisor must be a unit.
inline ExactInteger exact_quotient(const ExactInteger& a, const ExactInteger& b) {
  if (b != 1 && b != -1) throw std::domain_error("integer series division needs a unit constant term");
  return a * b;
}
inline ExactRational exact_quotient(const ExactRational& a, const ExactRational& b) {
  if (b == 0) throw std::domain_error("series division by a zero constant term");
  return a / b;
}
}  // namespace detail

/// Generic long division num / den, O(D^2). The constant term of `den` must
/// be invertible in Scalar.
template <typename Scalar>
TruncatedSeries<Scalar> divide(const TruncatedSeries<Scalar>& num, const TruncatedSeries<Scalar>& den) {
  TruncatedSeries<Scalar> q(std::min(num.degree(), den.degree()));
  for (int m = 0; m <= q.degree(); ++m) {
    Scalar acc = num[m];
    for (int j = 1; j <= m; ++j)
      if (den[j] != 0) acc -= den[j] * q[m - j];
    q[m] = detail::exact_quotient(acc, den[0]);
  }
  return q;
}

/// Polynomial product on dense coefficient lists.
template <typename Scalar>
std::vector<Scalar> poly_mul(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Scalar> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// P(z)/Q(z) with Q normalized to Q(0) = 1. Coefficients of the expansion
/// obey the recurrence induced by Q:
///   c_m = p_m - sum_{j >= 1} q_j c_{m-j},
/// evaluated over Q's nonzero terms only.
template <typename Scalar>
class RationalFunction {
 public:
  RationalFunction(std::vector<Scalar> numerator, std::vector<Scalar> denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.empty() || den_[0] == 0) throw std::domain_error("denominator needs a nonzero constant term");
    const Scalar lead = den_[0];
    if (lead != 1) {
      for (auto& c : num_) c = detail::exact_quotient(c, lead);
      for (auto& c : den_) c = detail::exact_quotient(c, lead);
    }
  }

  const std::vector<Scalar>& numerator() const { return num_; }
  const std::vector<Scalar>& denominator() const { return den_; }

  TruncatedSeries<Scalar> expand(int degree) const {
    std::vector<std::pair<int, Scalar>> taps;
    for (std::size_t j = 1; j < den_.size(); ++j)
      if (den_[j] != 0) taps.emplace_back(static_cast<int>(j), den_[j]);
    TruncatedSeries<Scalar> c(degree);
    for (int m = 0; m <= degree; ++m) {
      Scalar acc = static_cast<std::size_t>(m) < num_.size() ? num_[static_cast<std::size_t>(m)] : Scalar(0);
      for (const auto& [j, q] : taps)
        if (j <= m) acc -= q * c[m - j];
      c[m] = std::move(acc);
    }
    return c;
  }

  /// The same coefficients by generic series division.
  TruncatedSeries<Scalar> expand_by_division(int degree) const {
    return divide(TruncatedSeries<Scalar>(degree, std::span<const Scalar>(num_)),
                  TruncatedSeries<Scalar>(degree, std::span<const Scalar>(den_)));
  }

 private:
  std::vector<Scalar> num_, den_;
};

// ---------------------------------------------------------------------------
// Moment formulas for compositions of N = n + 1, read in the bitstring
// picture: ones <-> parts - 1, longest zero-run <-> maximum part - 1.

/// d_0 = 0, d_1 = 1, d_n = d_{n-1} + d_{n-2}: number of 1-free compositions
/// of n + 1.
ExactInteger fibonacci_d(int n);

/// Generating function of all strings of the family's ensemble, by length.
RationalFunction<ExactInteger> family_series(Family f);

/// Generating function of the family's strings whose zero-runs are all
/// shorter than k.
RationalFunction<ExactInteger> runs_below_series(Family f, int k);

struct MeanVariance {
  ExactRational mean;
  ExactRational variance;
  friend bool operator==(const MeanVariance&, const MeanVariance&) = default;
};

/// Mean and variance of the longest zero-run (mu_n, sigma_n^2), from the
/// k-sum of tail generating functions truncated at k = n.
MeanVariance max_part_moments(Family f, int n);
/// The same for every n in 1..n_max in one pass; index 0 is unused.
std::vector<MeanVariance> max_part_moments_upto(Family f, int n_max);

/// Mean and variance of the number of ones (m_n, s_n^2).
MeanVariance parts_moments(Family f, int n);
std::vector<MeanVariance> parts_moments_upto(Family f, int n_max);

}  // namespace compcov
