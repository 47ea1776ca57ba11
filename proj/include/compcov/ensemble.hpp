#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace compcov {

enum class EnsembleTag { Unconstrained, Pinned, Solus, PinnedSolus };

/// Lower bounds on the zero-runs of a string with p ones, read as p+1 gaps
/// g_0..g_p around the ones. Each bound is 0 or 1. With p == 0 the single
/// gap is both first and last and takes the larger of the two end bounds.
struct GapProfile {
  int first = 0;
  int interior = 0;
  int last = 0;

  int lower_bound(int gap, int ones) const;
  int bound_sum(int ones) const;
};

/// A bitstring ensemble: which strings of length n are admitted, equally
/// weighted.
///   pinned: first and last bit are 0
///   solus:  every 1 is isolated
class Ensemble {
 public:
  constexpr explicit Ensemble(EnsembleTag tag) : tag_(tag) {}

  static constexpr Ensemble unconstrained() { return Ensemble(EnsembleTag::Unconstrained); }
  static constexpr Ensemble pinned() { return Ensemble(EnsembleTag::Pinned); }
  static constexpr Ensemble solus() { return Ensemble(EnsembleTag::Solus); }
  static constexpr Ensemble pinned_solus() { return Ensemble(EnsembleTag::PinnedSolus); }

  constexpr EnsembleTag tag() const { return tag_; }
  constexpr bool is_pinned() const {
    return tag_ == EnsembleTag::Pinned || tag_ == EnsembleTag::PinnedSolus;
  }
  constexpr bool is_solus() const {
    return tag_ == EnsembleTag::Solus || tag_ == EnsembleTag::PinnedSolus;
  }
  /// Lowest admissible length of the leading zero block in the recursion.
  /// 1 exactly when adjacent 1s are forbidden.
  constexpr int kappa() const { return is_solus() ? 1 : 0; }

  GapProfile gaps() const {
    return GapProfile{is_pinned() ? 1 : 0, is_solus() ? 1 : 0, is_pinned() ? 1 : 0};
  }

  /// Membership test on the low `length` bits of `bits`; bit i is the i-th
  /// character of the string.
  bool admits(unsigned long long bits, int length) const;

  std::string_view name() const;

  friend constexpr bool operator==(Ensemble a, Ensemble b) { return a.tag_ == b.tag_; }

 private:
  EnsembleTag tag_;
};

inline constexpr std::array<Ensemble, 4> kAllEnsembles = {
    Ensemble::unconstrained(), Ensemble::pinned_solus(), Ensemble::pinned(),
    Ensemble::solus()};

std::optional<Ensemble> parse_ensemble(std::string_view name);

/// Composition families. Unrestricted compositions of N correspond to
/// unconstrained strings of length N-1; 1-free compositions to pinned solus
/// strings.
enum class Family { Unrestricted, OneFree };

constexpr Ensemble ensemble_of(Family f) {
  return f == Family::Unrestricted ? Ensemble::unconstrained() : Ensemble::pinned_solus();
}
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Exact support test from the gap profile: some admitted string of length n
/// has x zeros and longest zero-run exactly y.
bool gap_support(const GapProfile& gaps, int n, int x, int y);

}  // namespace compcov
