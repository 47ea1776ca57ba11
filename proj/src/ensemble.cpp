#include "compcov/ensemble.hpp"

#include <algorithm>

namespace compcov {

int GapProfile::lower_bound(int gap, int ones) const {
  if (ones == 0) return std::max(first, last);
  if (gap == 0) return first;
  if (gap == ones) return last;
  return interior;
}

int GapProfile::bound_sum(int ones) const {
  if (ones == 0) return std::max(first, last);
  return first + last + (ones - 1) * interior;
}

bool Ensemble::admits(unsigned long long bits, int length) const {
  if (is_pinned()) {
    // The empty string maps to the composition {1}, which is neither pinned
    // nor 1-free.
    if (length == 0) return false;
    if ((bits & 1ULL) || ((bits >> (length - 1)) & 1ULL)) return false;
  }
  if (is_solus() && (bits & (bits >> 1))) return false;
  return true;
}

std::string_view Ensemble::name() const {
  switch (tag_) {
    case EnsembleTag::Unconstrained: return "unconstrained";
    case EnsembleTag::Pinned: return "pinned";
    case EnsembleTag::Solus: return "solus";
    case EnsembleTag::PinnedSolus: return "pinned-solus";
  }
  return "";
}

std::optional<Ensemble> parse_ensemble(std::string_view name) {
  for (Ensemble e : kAllEnsembles)
    if (e.name() == name) return e;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  return f == Family::Unrestricted ? "unrestricted" : "one-free";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "unrestricted") return Family::Unrestricted;
  if (name == "one-free") return Family::OneFree;
  return std::nullopt;
}

bool gap_support(const GapProfile& gaps, int n, int x, int y) {
  if (n < 0 || x < 0 || y < 0 || x > n || y > x) return false;
  const int ones = n - x;
  if (ones == 0) return y == n && n >= gaps.lower_bound(0, 0);
  // The gap realising the maximum takes the largest lower bound; the other
  // `ones` gaps share x - y between their own bounds and y.
  int top = std::max(gaps.first, gaps.last);
  if (ones > 1) top = std::max(top, gaps.interior);
  if (y < top) return false;
  const long long rest = static_cast<long long>(x) - y;
  return rest >= gaps.bound_sum(ones) - top && rest <= static_cast<long long>(ones) * y;
}

}  // namespace compcov
