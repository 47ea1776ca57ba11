#include "compcov/cache.hpp"

#include "compcov/table_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace compcov {

namespace fs = std::filesystem;

Cache::Cache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path Cache::path_for(std::string_view kind, Ensemble e, int n, Method method) const {
  std::ostringstream name;
  name << kind << '-' << e.name() << "-n" << n << "-v" << COMPCOV_VERSION << '-' << method_name(method) << ".json";
  return dir_ / name.str();
}

std::optional<std::string> Cache::read_payload(const fs::path& p, std::string_view kind, Ensemble e, int n,
                                               Method method) const {
  std::lock_guard lock(mutex_);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  const auto record = nlohmann::json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
  if (record.is_discarded() || !record.is_object()) return std::nullopt;
  const auto field = [&](const char* key) -> const nlohmann::json* {
    auto it = record.find(key);
    return it == record.end() ? nullptr : &*it;
  };
  const auto* k = field("kind");
  const auto* ens = field("ensemble");
  const auto* len = field("n");
  const auto* ver = field("version");
  const auto* meth = field("method");
  const auto* payload = field("payload");
  const auto* digest = field("digest");
  if (!k || !ens || !len || !ver || !meth || !payload || !digest || !payload->is_string() || !digest->is_string())
    return std::nullopt;
  if (*k != kind || *ens != e.name() || *len != n || *ver != COMPCOV_VERSION || *meth != method_name(method))
    return std::nullopt;
  const auto text = payload->get<std::string>();
  if (fnv1a_hex(text) != digest->get<std::string>()) return std::nullopt;
  return text;
}

void Cache::write_record(std::string_view kind, Ensemble e, int n, Method method, const std::string& payload) {
  const nlohmann::json record = {{"kind", kind},
                                 {"ensemble", std::string(e.name())},
                                 {"n", n},
                                 {"version", COMPCOV_VERSION},
                                 {"method", std::string(method_name(method))},
                                 {"payload", payload},
                                 {"digest", fnv1a_hex(payload)}};
  const fs::path target = path_for(kind, e, n, method);
  fs::path tmp = target;
  tmp += ".tmp";
  std::lock_guard lock(mutex_);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << record.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::optional<CountSums> Cache::load_sums(Ensemble e, int n, Method method) const {
  const auto text = read_payload(path_for("sums", e, n, method), "sums", e, n, method);
  if (!text) return std::nullopt;
  try {
    return sums_from_json(nlohmann::json::parse(*text));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Cache::store_sums(Ensemble e, int n, Method method, const CountSums& sums) {
  write_record("sums", e, n, method, sums_to_json(sums).dump());
}

std::optional<JointCountTable> Cache::load_table(Ensemble e, int n, Method method) const {
  const auto text = read_payload(path_for("table", e, n, method), "table", e, n, method);
  if (!text) return std::nullopt;
  try {
    auto table = table_from_json(nlohmann::json::parse(*text));
    if (table.ensemble() != e || table.n() != n) return std::nullopt;
    return table;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Cache::store_table(Ensemble e, int n, Method method, const JointCountTable& table) {
  write_record("table", e, n, method, table_to_json(table).dump());
}

std::optional<fs::path> resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return fs::path(flag_value);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return fs::path(env);
  return std::nullopt;
}

}  // namespace compcov
