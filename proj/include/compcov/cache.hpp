#pragma once

#include "compcov/count_sums.hpp"
#include "compcov/count_tables.hpp"
#include "compcov/ensemble.hpp"
#include "compcov/statistics.hpp"

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace compcov {

inline constexpr const char* kCacheDirEnv = "COMPCOV_CACHE_DIR";

/// On-disk cache of exact results keyed by (kind, ensemble, n, version,
/// method). Each file wraps its payload with a digest; a record that fails
/// to parse or verify is treated as missing. Writes go through a temporary
/// file and a rename, serialized within the process.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<CountSums> load_sums(Ensemble e, int n, Method method) const;
  void store_sums(Ensemble e, int n, Method method, const CountSums& sums);

  std::optional<JointCountTable> load_table(Ensemble e, int n, Method method) const;
  void store_table(Ensemble e, int n, Method method, const JointCountTable& table);

  std::filesystem::path path_for(std::string_view kind, Ensemble e, int n, Method method) const;

 private:
  std::optional<std::string> read_payload(const std::filesystem::path& p, std::string_view kind, Ensemble e,
                                          int n, Method method) const;
  void write_record(std::string_view kind, Ensemble e, int n, Method method, const std::string& payload);

  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

/// Flag value wins over the environment; neither means no caching.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value);

}  // namespace compcov
