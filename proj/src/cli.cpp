#include "compcov/cli.hpp"

#include "compcov/acceleration.hpp"
#include "compcov/asymptotics.hpp"
#include "compcov/cache.hpp"
#include "compcov/count_tables.hpp"
#include "compcov/gap_counts.hpp"
#include "compcov/oracle.hpp"
#include "compcov/series.hpp"
#include "compcov/statistics.hpp"
#include "compcov/table_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace compcov::cli {

namespace {

using nlohmann::json;

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

// ---------------------------------------------------------------------------
// Options shared by the computing subcommands.

struct Common {
  std::string method = "auto";
  int recursion_cap = kDefaultRecursionCap;
  int digits = 6;
  std::string format = "csv";
  std::string cache_dir;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--method", c.method, "Counting path: auto, recursion or gap")
      ->check(CLI::IsMember({"auto", "recursion", "gap"}))
      ->capture_default_str();
  cmd->add_option("--recursion-cap", c.recursion_cap, "Largest n served by the recursion")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();
  cmd->add_option("--digits", c.digits, "Decimals in rounded output")
      ->check(CLI::Range(1, 40))
      ->capture_default_str();
  cmd->add_option("--format", c.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--cache-dir", c.cache_dir, std::string("Cache directory (default $") + kCacheDirEnv + ")");
}

StatsOptions stats_options(const Common& c) {
  StatsOptions opt;
  opt.method = *parse_method(c.method);
  opt.recursion_cap = c.recursion_cap;
  return opt;
}

json common_meta(std::string_view command, const Common& c) {
  return {{"command", command},
          {"version", COMPCOV_VERSION},
          {"method", c.method},
          {"recursion_cap", c.recursion_cap},
          {"digits", c.digits}};
}

Ensemble ensemble_arg(const std::string& text) {
  if (auto e = parse_ensemble(text)) return *e;
  throw UsageError("unknown ensemble '" + text + "'");
}

Family family_arg(const std::string& text) {
  if (auto f = parse_family(text)) return *f;
  throw UsageError("unknown family '" + text + "'");
}

std::vector<Ensemble> ensembles_arg(const std::string& text) {
  if (text.empty()) return {kAllEnsembles.begin(), kAllEnsembles.end()};
  std::vector<Ensemble> out;
  for (const auto& name : split(text, ',')) {
    const Ensemble e = ensemble_arg(name);
    for (Ensemble seen : out)
      if (seen == e) throw UsageError("ensemble listed twice: " + name);
    out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tabular output, rendered as CSV or as {meta, rows}.

struct Output {
  json meta;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : o.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < o.columns.size(); ++i) obj[o.columns[i]] = r[i];
      rows.push_back(std::move(obj));
    }
    out << json{{"meta", o.meta}, {"rows", std::move(rows)}}.dump(2) << '\n';
    return;
  }
  auto line = [&](const auto& cells, auto render) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << render(cells[i]);
    out << '\n';
  };
  line(o.columns, [](const std::string& s) { return s; });
  for (const auto& r : o.rows) line(r, csv_cell);
}

// ---------------------------------------------------------------------------
// Power sums with an optional on-disk cache in front.

class SumsSource {
 public:
  SumsSource(const Common& c, std::ostream& err) : opt_(stats_options(c)), err_(err) {
    if (auto dir = resolve_cache_dir(c.cache_dir)) cache_ = std::make_unique<Cache>(*dir);
  }

  const StatsOptions& options() const { return opt_; }

  Method effective(int n) const {
    if (opt_.method == Method::Recursion || (opt_.method == Method::Auto && n <= opt_.recursion_cap))
      return Method::Recursion;
    return Method::Gap;
  }

  void check_cap(std::span<const int> ns) const {
    for (int n : ns)
      if (opt_.method == Method::Recursion && n > opt_.recursion_cap)
        throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the recursion cap " +
                                 std::to_string(opt_.recursion_cap) + "; use --method gap or raise --recursion-cap");
  }

  std::vector<CountSums> sums(Ensemble e, std::span<const int> ns) {
    check_cap(ns);
    std::vector<std::optional<CountSums>> found(ns.size());
    std::vector<int> missing;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (cache_) found[i] = cache_->load_sums(e, ns[i], effective(ns[i]));
      if (!found[i]) missing.push_back(ns[i]);
    }
    if (!missing.empty()) {
      const auto computed = count_sums(e, missing, opt_);
      std::size_t k = 0;
      for (std::size_t i = 0; i < ns.size(); ++i) {
        if (found[i]) continue;
        found[i] = computed[k++];
        store(e, ns[i], *found[i]);
      }
    }
    std::vector<CountSums> out;
    out.reserve(ns.size());
    for (auto& s : found) out.push_back(std::move(*s));
    return out;
  }

  std::vector<MomentSummary> summaries(Ensemble e, std::span<const int> ns) {
    const auto s = sums(e, ns);
    std::vector<MomentSummary> out;
    for (std::size_t i = 0; i < ns.size(); ++i) out.push_back(summarize(e, ns[i], s[i]));
    return out;
  }

  JointCountTable table(Ensemble e, int n) {
    const int ns[] = {n};
    check_cap(ns);
    const Method m = effective(n);
    if (cache_)
      if (auto t = cache_->load_table(e, n, m)) return std::move(*t);
    JointCountTable t = m == Method::Recursion ? build_table(e, n, opt_.recursion_cap) : gap_table(e, n);
    if (cache_) {
      try {
        cache_->store_table(e, n, m, t);
      } catch (const std::exception& ex) {
        err_ << "warning: " << ex.what() << '\n';
      }
    }
    return t;
  }

 private:
  void store(Ensemble e, int n, const CountSums& s) {
    if (!cache_) return;
    try {
      cache_->store_sums(e, n, effective(n), s);
    } catch (const std::exception& ex) {
      err_ << "warning: " << ex.what() << '\n';
    }
  }

  StatsOptions opt_;
  std::ostream& err_;
  std::unique_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Subcommands.

int cmd_rho(const Common& c, const std::string& ensembles_text, const std::string& n_text, std::ostream& out,
            std::ostream& err) {
  const auto ensembles = ensembles_arg(ensembles_text);
  const auto ns = parse_range(n_text);
  SumsSource source(c, err);

  Output o;
  o.meta = common_meta("rho", c);
  o.columns.push_back("n");
  json names = json::array();
  for (Ensemble e : ensembles) {
    o.columns.emplace_back(e.name());
    names.push_back(e.name());
  }
  o.meta["ensembles"] = names;
  o.meta["rounding"] = "half-even";

  std::vector<std::vector<std::string>> cols;
  for (Ensemble e : ensembles) {
    std::vector<std::string> col;
    for (const auto& s : source.summaries(e, ns)) col.push_back(correlation(s, c.digits));
    cols.push_back(std::move(col));
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    std::vector<json> row{ns[i]};
    for (const auto& col : cols) row.emplace_back(col[i]);
    o.rows.push_back(std::move(row));
  }
  emit(o, c.format, out);
  return kOk;
}

int cmd_sequence(const Common& c, const std::string& kind, const std::string& ensemble_text,
                 const std::string& family_text, int count, std::ostream& out, std::ostream& err) {
  if (count < 1) throw UsageError("--count must be >= 1");
  SumsSource source(c, err);
  std::vector<ExactInteger> terms;
  json meta = common_meta("sequence", c);
  meta["kind"] = kind;

  const bool by_family = kind == "exy-composition" || (kind == "size" && !family_text.empty());
  if (by_family) {
    if (!ensemble_text.empty()) throw UsageError(kind + " takes --family, not --ensemble");
    const Family f = family_arg(family_text.empty() ? "unrestricted" : family_text);
    meta["family"] = family_name(f);
    meta["index"] = "N";
    // Compositions of N = 1..count correspond to strings of length N - 1.
    std::vector<int> ns;
    for (int N = 1; N <= count; ++N) ns.push_back(N - 1);
    for (const auto& s : source.sums(ensemble_of(f), ns))
      terms.push_back(kind == "size" ? s.size : s.ones_run + s.ones + s.run + s.size);
  } else {
    if (!family_text.empty()) throw UsageError(kind + " takes --ensemble, not --family");
    const Ensemble e = ensemble_arg(ensemble_text.empty() ? "unconstrained" : ensemble_text);
    meta["ensemble"] = e.name();
    meta["index"] = "n";
    std::vector<int> ns;
    for (int n = 1; n <= count; ++n) ns.push_back(n);
    for (const auto& s : source.sums(e, ns)) terms.push_back(kind == "size" ? s.size : s.ones_run);
  }

  if (c.format == "json") {
    Output o;
    o.meta = meta;
    o.columns = {meta["index"].get<std::string>(), "value"};
    for (std::size_t i = 0; i < terms.size(); ++i) o.rows.push_back({static_cast<int>(i) + 1, terms[i].get_str()});
    emit(o, c.format, out);
  } else {
    for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? "," : "") << terms[i].get_str();
    out << '\n';
  }
  return kOk;
}

std::string moment_fields(const MomentSummary& s) {
  return to_fraction_string(s.m) + " " + to_fraction_string(s.s2) + " " + to_fraction_string(s.mu) + " " +
         to_fraction_string(s.sigma2) + " " + s.exy_numerator.get_str() + " " + to_fraction_string(s.covariance);
}

int cmd_verify(int max_n, std::ostream& out, std::ostream& err) {
  if (max_n < 0) throw UsageError("--max-n must be >= 0");
  if (max_n > oracle::kMaxLength)
    throw oracle::CapExceeded("brute force is capped at n = " + std::to_string(oracle::kMaxLength));

  std::vector<std::string> failures;
  auto fail = [&](Ensemble e, int n, std::string_view what) {
    failures.push_back(std::string(e.name()) + " n=" + std::to_string(n) + ": " + std::string(what));
  };

  for (Ensemble e : kAllEnsembles) {
    std::vector<CountSums> rec;
    if (max_n >= 1) rec = recursion_sums(e, max_n, std::max(max_n, kDefaultRecursionCap));
    std::optional<TruncatedSeries<ExactInteger>> family_counts;
    std::optional<Family> family;
    if (e == ensemble_of(Family::Unrestricted)) family = Family::Unrestricted;
    if (e == ensemble_of(Family::OneFree)) family = Family::OneFree;
    // Closed-form counts: strings of length n, i.e. compositions of n + 1.
    if (family) family_counts = family_series(*family).expand(max_n);

    for (int n = 1; n <= max_n; ++n) {
      // table
      const JointCountTable brute = oracle::brute_table(e, n);
      if (build_table(e, n, std::max(n, kDefaultRecursionCap)) != brute) fail(e, n, "recursion table");
      if (gap_table(e, n) != brute) fail(e, n, "gap table");

      // moments
      const CountSums bs = oracle::brute_sums(e, n);
      if (sgn(bs.size) == 0) {
        fail(e, n, "empty ensemble");
        continue;
      }
      const MomentSummary want = summarize(e, n, bs);
      if (moment_fields(summarize(e, n, rec[static_cast<std::size_t>(n)])) != moment_fields(want))
        fail(e, n, "recursion moments");
      if (moment_fields(summarize(e, n, gap_sums(e, n))) != moment_fields(want)) fail(e, n, "gap moments");
      if (want.composition_covariance() != want.covariance) fail(e, n, "composition covariance");
      if (family) {
        if (parts_moments(*family, n) != MeanVariance{want.m, want.s2}) fail(e, n, "series parts moments");
        if (max_part_moments(*family, n) != MeanVariance{want.mu, want.sigma2}) fail(e, n, "series max-part moments");
      }

      // bijection
      ExactInteger admitted = 0;
      bool ok = true;
      for (unsigned long long bits = 0; bits < (1ULL << n); ++bits) {
        if (!e.admits(bits, n)) continue;
        ++admitted;
        const oracle::BitString b(bits, n);
        const oracle::Composition comp = oracle::string_to_composition(b);
        ok = ok && oracle::composition_to_string(comp).str() == b.str() && comp.total() == n + 1 &&
             static_cast<int>(comp.parts.size()) == b.ones() + 1 && comp.max_part() == b.longest_zero_run() + 1;
        if (family == Family::OneFree) ok = ok && comp.one_free();
      }
      if (!ok) fail(e, n, "bijection round trip");
      if (admitted != ensemble_size(e, n) || admitted != bs.size) fail(e, n, "ensemble size");
      if (family_counts && (*family_counts)[n] != admitted) fail(e, n, "composition count");
    }
  }

  if (!failures.empty()) {
    for (const auto& f : failures) err << "MISMATCH: " << f << '\n';
    out << "FAILED: " << failures.size() << " mismatches\n";
    return kMismatch;
  }
  out << "OK: " << kAllEnsembles.size() << " ensembles × " << max_n
      << " lengths × {table, moments, bijection}\n";
  return kOk;
}

int cmd_moments(const Common& c, const std::string& family_text, const std::string& N_text,
                const std::string& ensemble_text, const std::string& n_text, std::ostream& out, std::ostream& err) {
  const bool by_family = !family_text.empty() || !N_text.empty();
  const bool by_ensemble = !ensemble_text.empty() || !n_text.empty();
  if (by_family == by_ensemble) throw UsageError("give either --family with --N, or --ensemble with --n");

  Output o;
  o.meta = common_meta("moments", c);
  std::vector<int> ns;
  Ensemble e = Ensemble::unconstrained();
  if (by_family) {
    if (family_text.empty() || N_text.empty()) throw UsageError("--family needs --N");
    const Family f = family_arg(family_text);
    e = ensemble_of(f);
    o.meta["family"] = family_name(f);
    o.columns.push_back("N");
    for (int N : parse_range(N_text)) ns.push_back(N - 1);
  } else {
    if (ensemble_text.empty() || n_text.empty()) throw UsageError("--ensemble needs --n");
    e = ensemble_arg(ensemble_text);
    ns = parse_range(n_text);
  }
  o.meta["ensemble"] = e.name();
  for (const char* col : {"n", "size", "m", "s2", "mu", "sigma2", "exy_numerator", "covariance"})
    o.columns.emplace_back(col);

  SumsSource source(c, err);
  for (const auto& s : source.summaries(e, ns)) {
    std::vector<json> row;
    if (by_family) row.emplace_back(s.n + 1);
    row.insert(row.end(), {s.n, s.size.get_str(), to_fraction_string(s.m), to_fraction_string(s.s2),
                           to_fraction_string(s.mu), to_fraction_string(s.sigma2), s.exy_numerator.get_str(),
                           to_fraction_string(s.covariance)});
    o.rows.push_back(std::move(row));
  }
  emit(o, c.format, out);
  return kOk;
}

int cmd_asymptotics(const Common& c, const std::string& family_text, const std::string& n_text,
                    std::ostream& out) {
  const Family f = family_arg(family_text);
  const auto ns = parse_range(n_text, 2);
  const auto exact = max_part_moments_upto(f, ns.back());
  const Real var_pred = predicted_max_var(f);

  Output o;
  o.meta = common_meta("asymptotics", c);
  o.meta.erase("method");
  o.meta.erase("recursion_cap");
  o.meta["family"] = family_name(f);
  o.meta["conjectured"] = is_conjectural(f);
  o.columns = {"n",      "mu",     "max_part_mean",    "predicted_max_mean", "mean_residual",
               "sigma2", "predicted_max_var", "var_residual", "conjectured"};
  for (int n : ns) {
    const Real mu = to_real(exact[static_cast<std::size_t>(n)].mean);
    const Real var = to_real(exact[static_cast<std::size_t>(n)].variance);
    const Real mean_pred = predicted_max_mean(f, n);
    o.rows.push_back({n, to_fixed(mu, c.digits), to_fixed(Real(mu + 1), c.digits), to_fixed(mean_pred, c.digits),
                      to_fixed(Real(mu + 1 - mean_pred), c.digits), to_fixed(var, c.digits),
                      to_fixed(var_pred, c.digits), to_fixed(Real(var - var_pred), c.digits), is_conjectural(f)});
  }
  emit(o, c.format, out);
  return kOk;
}

std::vector<ProbePoint> probe_points(SumsSource& source, Ensemble e, std::span<const int> ns, const Real& exponent) {
  std::vector<ProbePoint> pts;
  for (const auto& s : source.summaries(e, ns)) {
    ProbePoint pt;
    pt.n = s.n;
    pt.rho = correlation_real(s);
    pt.q = probe_value(pt.rho, s.n, exponent);
    pts.push_back(pt);
  }
  return pts;
}

int cmd_probe(const Common& c, const std::string& ensemble_text, const std::string& n_text, double exponent,
              std::ostream& out, std::ostream& err) {
  const Ensemble e = ensemble_arg(ensemble_text);
  const auto ns = parse_range(n_text, 3);
  SumsSource source(c, err);
  Output o;
  o.meta = common_meta("probe", c);
  o.meta["ensemble"] = e.name();
  o.meta["exponent"] = exponent;
  o.meta["log_argument"] = "n+1";
  o.columns = {"n", "rho", "q"};
  for (const auto& pt : probe_points(source, e, ns, Real(exponent)))
    o.rows.push_back({pt.n, to_fixed(pt.rho, c.digits), to_fixed(pt.q, c.digits)});
  emit(o, c.format, out);
  return kOk;
}

Real parse_real(const std::string& text) {
  try {
    std::size_t used = 0;
    (void)std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return Real(text);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
}

// Columns n,value; a header row is skipped, and `column` picks the value
// column by header name.
SequenceSample read_sample(std::istream& in, const std::string& column) {
  SequenceSample sample;
  std::string line;
  std::size_t value_col = 1;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (first) {
      first = false;
      bool header = false;
      try {
        parse_real(cells.front());
      } catch (const UsageError&) {
        header = true;
      }
      if (header) {
        if (!column.empty()) {
          auto it = std::find(cells.begin(), cells.end(), column);
          if (it == cells.end()) throw UsageError("no column '" + column + "' in input");
          value_col = static_cast<std::size_t>(it - cells.begin());
        }
        continue;
      }
      if (!column.empty()) throw UsageError("--column needs a header row");
    }
    if (cells.size() <= value_col) throw UsageError("short input row: '" + line + "'");
    sample.abscissae.push_back(parse_real(cells.front()));
    sample.values.push_back(parse_real(cells[value_col]));
  }
  return sample;
}

int cmd_accelerate(const Common& c, const std::string& transform, int order, const std::string& input,
                   const std::string& column, bool from_rho, double exponent, const std::string& ensemble_text,
                   const std::string& n_text, std::istream& in, std::ostream& out, std::ostream& err) {
  SequenceSample sample;
  json meta = common_meta("accelerate", c);
  meta["transform"] = transform;
  meta["exponent"] = exponent;
  meta["label"] = "extrapolated, conjecture-conditional";

  if (!ensemble_text.empty() || !n_text.empty()) {
    if (ensemble_text.empty() || n_text.empty()) throw UsageError("--ensemble needs --n");
    if (!input.empty()) throw UsageError("--input cannot be combined with --ensemble");
    const Ensemble e = ensemble_arg(ensemble_text);
    meta["ensemble"] = e.name();
    SumsSource source(c, err);
    for (const auto& pt : probe_points(source, e, parse_range(n_text, 3), Real(exponent))) {
      sample.abscissae.emplace_back(pt.n);
      sample.values.push_back(pt.q);
    }
  } else {
    if (input.empty() || input == "-") {
      sample = read_sample(in, column);
    } else {
      std::ifstream file(input);
      if (!file) throw UsageError("cannot open " + input);
      sample = read_sample(file, column);
    }
    if (from_rho)
      for (std::size_t i = 0; i < sample.size(); ++i)
        sample.values[i] = sample.values[i] * pow(log(Real(sample.abscissae[i] + 1)), Real(exponent));
    meta["input"] = input.empty() ? "-" : input;
    meta["from_rho"] = from_rho;
  }
  meta["points"] = sample.size();

  Output o;
  o.meta = meta;
  o.columns = {"method", "value", "error_estimate"};
  auto add = [&](const Extrapolation& x) {
    o.rows.push_back({x.method, to_fixed(x.value, c.digits), to_fixed(abs(x.error_estimate), c.digits)});
  };
  if (transform == "all") {
    const ConstantEstimate est = estimate_C(sample);
    for (const auto& x : est.per_method) add(x);
    o.rows.push_back({"median", to_fixed(est.median, c.digits), to_fixed(est.spread, c.digits)});
    o.meta["negative"] = est.negative();
  } else if (transform == "richardson") {
    add(richardson(sample, order));
  } else if (transform == "wynn-epsilon") {
    add(wynn_epsilon(sample));
  } else {
    add(levin_u(sample));
  }
  emit(o, c.format, out);
  return kOk;
}

int cmd_table(const Common& c, const std::string& ensemble_text, int n, std::ostream& out, std::ostream& err) {
  const Ensemble e = ensemble_arg(ensemble_text);
  if (n < 0) throw UsageError("--n must be >= 0");
  SumsSource source(c, err);
  const JointCountTable t = source.table(e, n);
  if (c.format == "json") {
    out << table_to_json(t).dump() << '\n';
    return kOk;
  }
  out << "x,y,count\n";
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= x; ++y)
      if (sgn(t.count(x, y)) != 0) out << x << ',' << y << ',' << t.count(x, y).get_str() << '\n';
  return kOk;
}

}  // namespace

std::vector<int> parse_range(const std::string& text, int min_value) {
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("range must be start:stop or start:stop:step");
    const int start = parse_int(parts[0], "range start");
    const int stop = parse_int(parts[1], "range stop");
    const int step = parts.size() == 3 ? parse_int(parts[2], "range step") : 1;
    if (step < 1) throw UsageError("range step must be positive");
    if (stop < start) throw UsageError("empty range '" + text + "'");
    for (long v = start; v <= stop; v += step) out.push_back(static_cast<int>(v));
  } else {
    for (const auto& item : split(text, ',')) out.push_back(parse_int(item, "length"));
  }
  if (out.empty()) throw UsageError("empty range");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < min_value)
      throw UsageError("length " + std::to_string(out[i]) + " is below the minimum " + std::to_string(min_value));
    if (i > 0 && out[i] <= out[i - 1]) throw UsageError("lengths must be strictly increasing");
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, std::cin, out, err);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact joint statistics of parts and maximum part in integer compositions", "compcov"};
  app.set_version_flag("--version", COMPCOV_VERSION);
  app.require_subcommand(1);

  Common common;
  std::string ensembles_text, ensemble_text, family_text, n_text, N_text;

  auto* rho = app.add_subcommand("rho", "Correlation of ones and longest zero-run, rounded half-even");
  add_common(rho, common);
  rho->add_option("--ensembles", ensembles_text, "Comma list (default: all four)");
  rho->add_option("--n", n_text, "Lengths: a:b[:step] or a comma list")->required();

  std::string kind;
  int count = 10;
  auto* seq = app.add_subcommand("sequence", "Exact numerator and size sequences");
  add_common(seq, common);
  seq->add_option("kind", kind, "exy-bitstring, exy-composition or size")
      ->required()
      ->check(CLI::IsMember({"exy-bitstring", "exy-composition", "size"}));
  seq->add_option("--ensemble", ensemble_text, "Bitstring ensemble");
  seq->add_option("--family", family_text, "Composition family");
  seq->add_option("--count", count, "Number of terms")->capture_default_str();

  int max_n = 14;
  auto* verify = app.add_subcommand("verify", "Cross-check every counting path against brute force");
  verify->add_option("--max-n", max_n, "Largest length checked")->capture_default_str();

  auto* moments = app.add_subcommand("moments", "Exact moments and covariance");
  add_common(moments, common);
  moments->add_option("--family", family_text, "unrestricted or one-free (with --N)");
  moments->add_option("--N", N_text, "Composition totals");
  moments->add_option("--ensemble", ensemble_text, "Bitstring ensemble (with --n)");
  moments->add_option("--n", n_text, "String lengths");

  auto* asym = app.add_subcommand("asymptotics", "Exact maximum-part moments against the asymptotic expansion");
  add_common(asym, common);
  asym->add_option("--family", family_text, "unrestricted or one-free")->required();
  asym->add_option("--n", n_text, "String lengths (>= 2)")->required();

  double exponent = kDefaultProbeExponent;
  auto* probe = app.add_subcommand("probe", "q(n) = rho(n) ln(n+1)^exponent");
  add_common(probe, common);
  probe->add_option("--ensemble", ensemble_text, "Bitstring ensemble")->required();
  probe->add_option("--n", n_text, "String lengths (>= 3)")->required();
  probe->add_option("--exponent", exponent, "Power of ln(n+1)")->capture_default_str();

  std::string transform = "all", input, column;
  int order = kProbeRichardsonOrder;
  bool from_rho = false;
  auto* accel = app.add_subcommand("accelerate", "Extrapolate a sequence to its limit");
  add_common(accel, common);
  accel->add_option("--transform", transform, "richardson, wynn-epsilon, levin-u or all")
      ->check(CLI::IsMember({"richardson", "wynn-epsilon", "levin-u", "all"}))
      ->capture_default_str();
  accel->add_option("--order", order, "Richardson order")->check(CLI::Range(0, 64))->capture_default_str();
  accel->add_option("--input", input, "CSV file with columns n,value ('-' for stdin)");
  accel->add_option("--column", column, "Value column, by header name");
  accel->add_flag("--from-rho", from_rho, "Input values are correlations; multiply by ln(n+1)^exponent");
  accel->add_option("--exponent", exponent, "Power of ln(n+1)")->capture_default_str();
  accel->add_option("--ensemble", ensemble_text, "Compute the probe sequence for this ensemble");
  accel->add_option("--n", n_text, "Lengths for --ensemble");

  int table_n = 0;
  auto* table = app.add_subcommand("table", "Joint count table F_n(x, y)");
  add_common(table, common);
  table->add_option("--ensemble", ensemble_text, "Bitstring ensemble")->required();
  table->add_option("--n", table_n, "String length")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rho) return cmd_rho(common, ensembles_text, n_text, out, err);
    if (*seq) return cmd_sequence(common, kind, ensemble_text, family_text, count, out, err);
    if (*verify) return cmd_verify(max_n, out, err);
    if (*moments) return cmd_moments(common, family_text, N_text, ensemble_text, n_text, out, err);
    if (*asym) return cmd_asymptotics(common, family_text, n_text, out);
    if (*probe) return cmd_probe(common, ensemble_text, n_text, exponent, out, err);
    if (*accel)
      return cmd_accelerate(common, transform, order, input, column, from_rho, exponent, ensemble_text, n_text,
                            in, out, err);
    if (*table) return cmd_table(common, ensemble_text, table_n, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  }
  return kUsage;
}

}  // namespace compcov::cli
