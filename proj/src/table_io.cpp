#include "compcov/table_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace compcov {

namespace {

ExactInteger parse_count(const nlohmann::json& v) {
  if (!v.is_string()) throw std::runtime_error("count must be a decimal string");
  ExactInteger z;
  if (z.set_str(v.get<std::string>(), 10) != 0) throw std::runtime_error("malformed count");
  return z;
}

}  // namespace

nlohmann::json table_to_json(const JointCountTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (int x = 0; x <= table.n(); ++x)
    for (int y = 0; y <= x; ++y)
      if (sgn(table.count(x, y)) != 0) entries.push_back({x, y, table.count(x, y).get_str()});
  return {{"format", "compcov.table"},
          {"ensemble", std::string(table.ensemble().name())},
          {"n", table.n()},
          {"entries", std::move(entries)}};
}

JointCountTable table_from_json(const nlohmann::json& record) {
  try {
    if (record.at("format") != "compcov.table") throw std::runtime_error("not a table record");
    const auto e = parse_ensemble(record.at("ensemble").get<std::string>());
    if (!e) throw std::runtime_error("unknown ensemble");
    const int n = record.at("n").get<int>();
    JointCountTable table(*e, n);
    for (const auto& entry : record.at("entries")) {
      if (!entry.is_array() || entry.size() != 3) throw std::runtime_error("entry must be [x, y, count]");
      table.at(entry[0].get<int>(), entry[1].get<int>()) = parse_count(entry[2]);
    }
    return table;
  } catch (const nlohmann::json::exception& ex) {
    throw std::runtime_error(std::string("malformed table record: ") + ex.what());
  } catch (const std::out_of_range& ex) {
    throw std::runtime_error(std::string("malformed table record: ") + ex.what());
  }
}

nlohmann::json sums_to_json(const CountSums& s) {
  return {{"size", s.size.get_str()},       {"ones", s.ones.get_str()}, {"ones_sq", s.ones_sq.get_str()},
          {"run", s.run.get_str()},         {"run_sq", s.run_sq.get_str()},
          {"ones_run", s.ones_run.get_str()}};
}

CountSums sums_from_json(const nlohmann::json& record) {
  try {
    return CountSums{parse_count(record.at("size")),   parse_count(record.at("ones")),
                     parse_count(record.at("ones_sq")), parse_count(record.at("run")),
                     parse_count(record.at("run_sq")),  parse_count(record.at("ones_run"))};
  } catch (const nlohmann::json::exception& ex) {
    throw std::runtime_error(std::string("malformed sums record: ") + ex.what());
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace compcov
