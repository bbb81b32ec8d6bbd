#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dsort/exact.hpp"
#include "dsort/ldsfast.hpp"
#include "dsort/mc.hpp"
#include "dsort/permcore.hpp"
#include "dsort/plancherel.hpp"
#include "dsort/selftest.hpp"
#include "dsort/stirling.hpp"

namespace dsort::cli {

namespace {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kRdsExactBound = 500;

enum class Format { csv, json };

struct RunConfig {
  std::string subcommand;
  std::string n_text;
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  std::string variant = "ds";
  std::string output_path;
  std::string format = "csv";
  int precision = kDefaultDecimalDigits;
  unsigned workers = 0;
  std::string sampling = "permutation";
  std::size_t exact_bound = 0;  // 0 = engine default
  bool show_layers = false;
  std::vector<std::string> values;
  std::vector<std::string> only;
};

// One CSV cell and its JSON counterpart.
struct Cell {
  std::string text;
  Json json;
};

Cell cell_uint(std::uint64_t v) { return {std::to_string(v), v}; }
Cell cell_real(double v) { return {format_real(v), v}; }
Cell cell_text(std::string s) { return {s, s}; }
Cell cell_empty() { return {"", nullptr}; }

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
  Json metadata;  // JSON only
};

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
  std::ostringstream buf;
  if (cfg.format == "json") {
    Json doc = Json::object();
    if (!table.metadata.is_null()) {
      for (const auto& [k, v] : table.metadata.items()) doc[k] = v;
    }
    Json rows = Json::array();
    for (const auto& row : table.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[table.header[i]] = row[i].json;
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    buf << doc.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      buf << (i ? "," : "") << table.header[i];
    }
    buf << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) buf << (i ? "," : "") << row[i].text;
      buf << '\n';
    }
  }
  if (cfg.output_path.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open output file '" + cfg.output_path + "'");
  file << buf.str();
  if (!file) throw Error("failed writing output file '" + cfg.output_path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedSequence gather_values(const std::vector<std::string>& values) {
  std::string text;
  for (const auto& v : values) {
    text += (!v.empty() && v.front() == '@') ? read_file(v.substr(1)) : v;
    text += ' ';
  }
  return parse_sequence(text);
}

int run_lds(const RunConfig& cfg, bool layers_only, std::ostream& out) {
  const ParsedSequence seq = gather_values(cfg.values);
  if (!layers_only) {
    const std::size_t d = seq.integral ? lds_fast(seq.integers) : lds_fast(seq.reals);
    out << d << '\n';
  }
  if (layers_only || cfg.show_layers) {
    const LayerDecomposition dec = seq.integral ? ds_layers(seq.integers) : ds_layers(seq.reals);
    for (const auto& layer : dec.layers) {
      out << '[';
      for (std::size_t k = 0; k < layer.size(); ++k) {
        out << (k ? "," : "") << seq.tokens[layer[k] - 1];
      }
      out << "]\n";
    }
  }
  return kOk;
}

int run_exact(const RunConfig& cfg, std::ostream& out) {
  const auto ns = parse_n_range(cfg.n_text);
  Table table;
  table.header = {"n", "exact_value_rational", "exact_value_decimal"};
  auto add = [&](std::size_t n, const Rational& q) {
    table.rows.push_back({cell_uint(n), cell_text(to_fraction_string(q)),
                          cell_text(to_decimal_string(q, cfg.precision))});
  };
  if (cfg.subcommand == "exact-rds") {
    const std::size_t bound = cfg.exact_bound ? cfg.exact_bound : kRdsExactBound;
    const std::size_t top = *std::max_element(ns.begin(), ns.end());
    if (top > bound) {
      throw SizeLimitExceeded("exact-rds: n=" + std::to_string(top) + " exceeds bound " +
                              std::to_string(bound));
    }
    const StirlingTable stirling(top);
    const auto d = rds_expectation(top, stirling);
    for (std::size_t n : ns) add(n, d[n]);
  } else {
    PlancherelOptions opts;
    opts.bound = cfg.exact_bound ? cfg.exact_bound : kPlancherelBound;
    opts.workers = cfg.workers;
    for (std::size_t n : ns) add(n, exact_ds_expectation(n, opts).value);
  }
  emit(table, cfg, out);
  return kOk;
}

Sampling parse_sampling(const std::string& s) {
  if (s == "uniform") return Sampling::uniform;
  if (s == "exponential") return Sampling::exponential;
  if (s == "normal") return Sampling::normal;
  return Sampling::permutation;
}

Json rng_metadata(const RunConfig& cfg) {
  Json meta = Json::object();
  meta["rng"] = kRngAlgorithm;
  meta["seed"] = cfg.seed;
  meta["stream"] = cfg.stream;
  meta["sampling"] = cfg.sampling;
  return meta;
}

int run_simulate(const RunConfig& cfg, std::ostream& out) {
  const auto ns = parse_n_range(cfg.n_text);
  const Variant variant = cfg.variant == "rds" ? Variant::rds : Variant::ds;
  const RngSpec spec{cfg.seed, cfg.stream};
  McOptions opts;
  opts.workers = cfg.workers;
  opts.sampling = parse_sampling(cfg.sampling);

  const std::size_t top = *std::max_element(ns.begin(), ns.end());
  std::optional<RdsExpectationTable> rds_exact;
  if (variant == Variant::rds) {
    const std::size_t bound = cfg.exact_bound ? cfg.exact_bound : kRdsExactBound;
    const std::size_t reach = std::min(top, bound);
    rds_exact = rds_expectation(reach, StirlingTable(reach));
  }
  PlancherelOptions popts;
  popts.bound = cfg.exact_bound ? cfg.exact_bound : kPlancherelBound;
  popts.workers = cfg.workers;

  Table table;
  table.header = {"variant", "n",         "trials",
                  "seed",    "mean",      "std_error",
                  "exact_value_decimal",  "abs_error"};
  table.metadata = rng_metadata(cfg);
  for (std::size_t n : ns) {
    const RunSummary s = mc_run(variant, n, cfg.trials, spec, opts);
    std::optional<Rational> exact;
    if (variant == Variant::rds) {
      if (n < rds_exact->size()) exact = (*rds_exact)[n];
    } else if (n <= popts.bound) {
      exact = exact_ds_expectation(n, popts).value;
    }
    std::vector<Cell> row = {cell_text(to_string(variant)), cell_uint(n), cell_uint(s.trials),
                             cell_uint(spec.seed), cell_real(s.mean), cell_real(s.std_error)};
    if (exact) {
      row.push_back(cell_text(to_decimal_string(*exact, cfg.precision)));
      row.push_back(cell_real(std::abs(s.mean - to_double(*exact))));
    } else {
      row.push_back(cell_empty());
      row.push_back(cell_empty());
    }
    table.rows.push_back(std::move(row));
  }
  emit(table, cfg, out);
  return kOk;
}

int run_asymptotics(const RunConfig& cfg, std::ostream& out) {
  const auto ns = parse_n_range(cfg.n_text);
  for (std::size_t n : ns) {
    if (n == 0) throw ParseError("asymptotics requires every n >= 1");
  }
  McOptions opts;
  opts.workers = cfg.workers;
  opts.sampling = parse_sampling(cfg.sampling);
  const auto rows = asymptotic_scan(ns, cfg.trials, RngSpec{cfg.seed, cfg.stream}, opts);
  Table table;
  table.header = {"n",         "trials",     "seed",  "mean",
                  "std_error", "two_sqrt_n", "ratio", "scaled_fluct"};
  table.metadata = rng_metadata(cfg);
  for (const auto& r : rows) {
    table.rows.push_back({cell_uint(r.n), cell_uint(r.trials), cell_uint(cfg.seed),
                          cell_real(r.mean), cell_real(r.std_error), cell_real(r.two_sqrt_n),
                          cell_real(r.ratio), cell_real(r.scaled_fluct)});
  }
  emit(table, cfg, out);
  return kOk;
}

int run_selftest_cmd(const RunConfig& cfg, std::ostream& out) {
  const auto results = run_selftest(cfg.only);
  std::size_t passed = 0;
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << secs << ") " << r.description;
    if (!r.passed) out << ": " << r.detail;
    out << '\n';
    passed += r.passed ? 1 : 0;
  }
  out << passed << "/" << results.size() << " suites passed\n";
  return passed == results.size() ? kOk : kSelftestFailed;
}

}  // namespace

ParsedSequence parse_sequence(const std::string& text) {
  ParsedSequence seq;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    seq.tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  for (std::size_t k = 0; k < seq.tokens.size(); ++k) {
    const std::string& tok = seq.tokens[k];
    const char* first = tok.data();
    const char* last = first + tok.size();
    if (*first == '+') ++first;
    double real = 0.0;
    auto [rp, rec] = std::from_chars(first, last, real);
    if (rec != std::errc() || rp != last || !std::isfinite(real)) {
      throw ParseError("invalid number '" + tok + "' at position " + std::to_string(k + 1));
    }
    long long integer = 0;
    auto [ip, iec] = std::from_chars(first, last, integer);
    if (iec != std::errc() || ip != last) seq.integral = false;
    seq.integers.push_back(integer);
    seq.reals.push_back(real);
  }
  if (!seq.integral) seq.integers.clear();
  return seq;
}

std::vector<std::size_t> parse_n_range(const std::string& text) {
  auto parse_one = [&](const std::string& tok) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
      throw ParseError("invalid size '" + tok + "' in n range '" + text + "'");
    }
    return v;
  };
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(parse_one(item));
      continue;
    }
    const std::size_t lo = parse_one(item.substr(0, colon));
    const std::size_t hi = parse_one(item.substr(colon + 1));
    if (lo > hi) throw ParseError("empty n range '" + item + "'");
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw ParseError("no sizes given in n range '" + text + "'");
  return out;
}

std::string format_real(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, p);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disappear-Sort pass counts: exact engines, Monte Carlo and checks", "dsort"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("dsort 1.0 (") + kRngAlgorithm + ")");

  RunConfig cfg;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output_path, "write to file instead of stdout");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "decimal places for exact values")
        ->check(CLI::Range(1, 50));
  };
  auto add_rng = [&](CLI::App* sub) {
    sub->add_option("--trials", cfg.trials, "Monte Carlo trials")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "64-bit seed")->envname(kSeedEnvVar);
    sub->add_option("--stream", cfg.stream, "64-bit stream id");
    sub->add_option("--workers", cfg.workers, "worker threads, 0 = all cores");
    sub->add_option("--sampling", cfg.sampling,
                    "permutation, or ranks of uniform/exponential/normal samples")
        ->check(CLI::IsMember({"permutation", "uniform", "exponential", "normal"}));
  };

  auto* lds = app.add_subcommand("lds", "pass count D(p) of a sequence");
  lds->add_flag("--layers", cfg.show_layers, "also print the DS layers");
  lds->add_option("values", cfg.values, "numbers, comma/space separated, or @file")->required();

  auto* layers = app.add_subcommand("layers", "print the DS layer decomposition");
  layers->add_option("values", cfg.values, "numbers, comma/space separated, or @file")
      ->required();

  auto* exact_rds = app.add_subcommand("exact-rds", "exact expected passes, resampling variant");
  exact_rds->add_option("--n", cfg.n_text, "size, range a:b, or list")->required();
  exact_rds->add_option("--bound", cfg.exact_bound, "largest n accepted");
  add_precision(exact_rds);
  add_output(exact_rds);

  auto* exact_ds = app.add_subcommand("exact-ds", "exact expected passes via the Plancherel sum");
  exact_ds->add_option("--n", cfg.n_text, "size, range a:b, or list")->required();
  exact_ds->add_option("--bound", cfg.exact_bound, "largest n accepted");
  exact_ds->add_option("--workers", cfg.workers, "worker threads, 0 = all cores");
  add_precision(exact_ds);
  add_output(exact_ds);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of expected passes");
  simulate->add_option("--variant", cfg.variant, "ds or rds")->check(CLI::IsMember({"ds", "rds"}));
  simulate->add_option("--n", cfg.n_text, "size, range a:b, or list")->required();
  simulate->add_option("--exact-bound", cfg.exact_bound, "largest n given an exact column");
  add_rng(simulate);
  add_precision(simulate);
  add_output(simulate);

  auto* asymptotics = app.add_subcommand("asymptotics", "mean/(2 sqrt n) and n^(1/6) scaling");
  asymptotics->add_option("--n", cfg.n_text, "sizes, e.g. 100,400,1600,6400")->required();
  add_rng(asymptotics);
  add_output(asymptotics);

  auto* selftest = app.add_subcommand("selftest", "run the bundled invariant suites");
  selftest->add_option("--only", cfg.only, "suite names")
      ->delimiter(',')
      ->check(CLI::IsMember(selftest_suite_names()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (lds->parsed()) return run_lds(cfg, false, out);
    if (layers->parsed()) return run_lds(cfg, true, out);
    if (exact_rds->parsed()) {
      cfg.subcommand = "exact-rds";
      return run_exact(cfg, out);
    }
    if (exact_ds->parsed()) {
      cfg.subcommand = "exact-ds";
      return run_exact(cfg, out);
    }
    if (simulate->parsed()) return run_simulate(cfg, out);
    if (asymptotics->parsed()) return run_asymptotics(cfg, out);
    if (selftest->parsed()) return run_selftest_cmd(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DuplicateValues& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SizeLimitExceeded& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kBoundExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsageError;
}

}  // namespace dsort::cli
