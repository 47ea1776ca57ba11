#pragma once

#include "compcov/count_sums.hpp"
#include "compcov/count_tables.hpp"
#include "compcov/ensemble.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace compcov {

/// Exhaustive ground truth over all 2^n strings; used only for validation.
namespace oracle {

inline constexpr int kMaxLength = 24;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BitString {
 public:
  BitString() = default;
  explicit BitString(std::string_view bits);
  BitString(unsigned long long packed, int length);

  int length() const { return static_cast<int>(bits_.size()); }
  bool operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  int ones() const;
  int longest_zero_run() const;
  bool pinned() const;
  bool solus() const;
  std::string str() const;

 private:
  std::vector<bool> bits_;
};

struct Composition {
  std::vector<int> parts;

  int total() const;
  int max_part() const;
  bool one_free() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Appends a 1 and reads off the waiting time before each 1.
Composition string_to_composition(const BitString& b);
BitString composition_to_string(const Composition& c);

/// All compositions of `total` with every part >= min_part, lexicographic.
std::vector<Composition> compositions(int total, int min_part);

JointCountTable brute_table(Ensemble e, int n);
CountSums brute_sums(Ensemble e, int n);

}  // namespace oracle
}  // namespace compcov
