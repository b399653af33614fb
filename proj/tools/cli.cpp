#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "genfact/factorials.hpp"
#include "genfact/tables.hpp"
#include "genfact/verify.hpp"

namespace genfact::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct RunConfig {
  std::string command;
  std::string set_spec = "Z";
  std::int64_t base = 2;
  std::string bases_spec = "auto";
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::uint64_t n = 1;
  std::optional<std::uint64_t> x;
  int which = 0;
  std::string suite = "all";
  Format format = Format::Text;
  std::uint64_t seed = 7;
  double scale = 1.0;
  std::int64_t bound = EngineLimits{}.window;
  unsigned max_level = EngineLimits{}.max_level;
  std::size_t series_cap = VerifyOptions{}.series_cap;
  bool force_greedy = false;
  bool allow_uncertified = false;
  std::string golden_dir = GENFACT_DEFAULT_GOLDEN_DIR;

  EngineLimits limits() const {
    EngineLimits lim;
    lim.window = bound;
    lim.max_level = max_level;
    return lim;
  }
  ExponentOptions exponent_options() const { return {force_greedy, limits()}; }
};

/// Raised for spec errors detected after parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string format_name(Format f) { return f == Format::Text ? "text" : f == Format::Csv ? "csv" : "json"; }

std::string join_ints(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string render_ext(const ExtNat& e, Format f) { return f == Format::Text ? e.to_text() : e.to_string(); }

json ext_json(const ExtNat& e) {
  if (e.is_infinite()) return "inf";
  if (e.value() <= std::numeric_limits<std::uint64_t>::max()) return e.to_u64();
  return e.to_string();
}

/// Writes the reproducibility header for text and CSV; JSON embeds it as "config".
class Emitter {
 public:
  Emitter(const RunConfig& cfg, Fields config, std::ostream& out) : cfg_(cfg), config_(std::move(config)), out_(out) {}

  void header() {
    if (cfg_.format == Format::Json) return;
    out_ << "# genfact " << GENFACT_VERSION;
    for (const auto& [k, v] : config_) out_ << ' ' << k << '=' << v;
    out_ << '\n';
  }

  void json_document(json results) {
    json config = json::object();
    for (const auto& [k, v] : config_) config[k] = v;
    json doc = json::object();
    doc["config"] = std::move(config);
    doc["results"] = std::move(results);
    doc["version"] = GENFACT_VERSION;
    out_ << doc.dump(2) << '\n';
  }

 private:
  const RunConfig& cfg_;
  Fields config_;
  std::ostream& out_;
};

Fields common_fields(const RunConfig& cfg) {
  return {{"command", cfg.command}, {"format", format_name(cfg.format)}};
}

void add_engine_fields(Fields& f, const RunConfig& cfg) {
  f.emplace_back("force-greedy", cfg.force_greedy ? "true" : "false");
  f.emplace_back("max-level", std::to_string(cfg.max_level));
  f.emplace_back("bound", std::to_string(cfg.bound));
  f.emplace_back("allow-uncertified", cfg.allow_uncertified ? "true" : "false");
}

int uncertified_exit(const RunConfig& cfg, bool certified, std::ostream& err) {
  if (certified || cfg.allow_uncertified) return kOk;
  err << "error: result is not certified; rerun with --allow-uncertified to accept it\n";
  return kUncertified;
}

int cmd_exponents(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SetDescriptor s = parse_set_spec(cfg.set_spec);
  if (cfg.base < 0) throw UsageError("base must be nonnegative");
  const auto seq = exponent_sequence(s, cfg.base, cfg.k, cfg.exponent_options());
  Fields f = common_fields(cfg);
  f.emplace_back("set", s.describe());
  f.emplace_back("base", std::to_string(cfg.base));
  f.emplace_back("k", std::to_string(cfg.k));
  add_engine_fields(f, cfg);
  f.emplace_back("method", seq.method);
  Emitter em(cfg, f, out);
  em.header();
  const std::string cert = seq.certified ? "yes" : "no";
  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < seq.values.size(); ++i)
      rows.push_back({{"i", i}, {"alpha", ext_json(seq.values[i])}, {"certified", seq.certified}});
    em.json_document(std::move(rows));
  } else {
    const char sep = cfg.format == Format::Csv ? ',' : '\t';
    out << "i" << sep << "alpha" << sep << "certified\n";
    for (std::size_t i = 0; i < seq.values.size(); ++i)
      out << i << sep << render_ext(seq.values[i], cfg.format) << sep << cert << '\n';
    if (cfg.format == Format::Text) {
      out << "alpha:";
      for (std::size_t i = 0; i < seq.values.size(); ++i) out << (i ? "," : " ") << seq.values[i].to_text();
      out << '\n';
    }
  }
  return uncertified_exit(cfg, seq.certified, err);
}

/// Shared by factorial, integer and binomial.
int emit_factored(const RunConfig& cfg, const SetDescriptor& s, const BaseSet& t, const FactoredResult& r,
                  Fields params, std::ostream& out, std::ostream& err) {
  Fields f = common_fields(cfg);
  f.emplace_back("set", s.describe());
  f.emplace_back("bases", t.describe());
  f.emplace_back("resolved-bases", join_ints(r.bases));
  for (auto& p : params) f.push_back(std::move(p));
  add_engine_fields(f, cfg);
  Emitter em(cfg, f, out);
  em.header();
  const std::string factored = format_factored(refine_to_primes(r.value));
  const std::string by_base = format_factored(r.value);
  const std::string decimal = r.value.is_zero() ? "0" : format_decimal(to_decimal(r.value), true);
  const std::string plain = r.value.is_zero() ? "0" : format_decimal(to_decimal(r.value), false);
  if (cfg.format == Format::Json) {
    json row = {{"factored", factored}, {"by_base", by_base}, {"decimal", plain}, {"certified", r.certified}};
    json exps = json::object();
    for (const auto& [b, e] : r.value.exponents()) exps[std::to_string(b)] = ext_json(e);
    row["exponents"] = std::move(exps);
    em.json_document(json::array({std::move(row)}));
  } else if (cfg.format == Format::Csv) {
    out << "factored,by_base,decimal,certified\n";
    out << csv_field(factored) << ',' << csv_field(by_base) << ',' << plain << ',' << (r.certified ? "yes" : "no") << '\n';
  } else {
    out << "factored: " << factored << '\n';
    out << "by base: " << by_base << '\n';
    out << "decimal: " << decimal << '\n';
    out << "certified: " << (r.certified ? "yes" : "no") << '\n';
  }
  return uncertified_exit(cfg, r.certified, err);
}

BaseSet checked_bases(const RunConfig& cfg, const SetDescriptor& s) {
  const BaseSet t = parse_base_spec(cfg.bases_spec);
  if (t.is_auto() && s.kind() != SetKind::AllIntegers && s.kind() != SetKind::Primes)
    throw UsageError("--bases auto is only available for the sets Z and P; give an explicit range");
  return t;
}

int cmd_factorial(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SetDescriptor s = parse_set_spec(cfg.set_spec);
  const BaseSet t = checked_bases(cfg, s);
  const auto r = factorial(s, t.resolve(s, cfg.k), cfg.k, cfg.exponent_options());
  return emit_factored(cfg, s, t, r, {{"k", std::to_string(cfg.k)}}, out, err);
}

int cmd_integer(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  const SetDescriptor s = parse_set_spec(cfg.set_spec);
  const BaseSet t = checked_bases(cfg, s);
  const auto r = gen_integer(s, t.resolve(s, cfg.n), cfg.n, cfg.exponent_options());
  return emit_factored(cfg, s, t, r, {{"n", std::to_string(cfg.n)}}, out, err);
}

int cmd_binomial(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.l > cfg.k) throw UsageError("--l must not exceed --k");
  const SetDescriptor s = parse_set_spec(cfg.set_spec);
  const BaseSet t = checked_bases(cfg, s);
  const auto r = gen_binomial(s, t.resolve(s, cfg.k), cfg.k, cfg.l, cfg.exponent_options());
  return emit_factored(cfg, s, t, r, {{"k", std::to_string(cfg.k)}, {"l", std::to_string(cfg.l)}}, out, err);
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    cells.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
    if (tab == std::string::npos) return cells;
    pos = tab + 1;
  }
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<int> which;
  if (cfg.which == 0) which = {1, 2, 3, 4};
  else if (cfg.which >= 1 && cfg.which <= 4) which = {cfg.which};
  else throw UsageError("--which must be 1, 2, 3 or 4");
  Fields f = common_fields(cfg);
  f.emplace_back("which", cfg.which == 0 ? "all" : std::to_string(cfg.which));
  f.emplace_back("golden-dir", cfg.golden_dir);
  Emitter em(cfg, f, out);
  em.header();
  int status = kOk;
  json results = json::array();
  for (int t : which) {
    const std::string got = render_table(t);
    const std::string path = cfg.golden_dir + "/table" + std::to_string(t) + ".tsv";
    std::ifstream in(path, std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    const bool match = in && golden.str() == got;
    if (!in) {
      err << "table " << t << ": cannot read " << path << '\n';
    } else if (!match) {
      const auto g = split_lines(golden.str());
      const auto a = split_lines(got);
      err << "table " << t << " differs from " << path << ":\n";
      for (std::size_t i = 0; i < std::max(g.size(), a.size()); ++i) {
        const std::string* gl = i < g.size() ? &g[i] : nullptr;
        const std::string* al = i < a.size() ? &a[i] : nullptr;
        if (gl && al && *gl == *al) continue;
        if (gl) err << "-" << i + 1 << ": " << *gl << '\n';
        if (al) err << "+" << i + 1 << ": " << *al << '\n';
      }
    }
    if (!match) status = kPropertyFailure;
    const auto lines = split_lines(got);
    if (cfg.format == Format::Json) {
      json rows = json::array();
      for (const auto& line : lines) rows.push_back(split_tabs(line));
      results.push_back({{"table", t}, {"matches_golden", match}, {"rows", std::move(rows)}});
    } else {
      if (which.size() > 1) out << "# table " << t << (match ? " matches golden" : " DIFFERS from golden") << '\n';
      for (const auto& line : lines) {
        if (cfg.format == Format::Text) {
          out << line << '\n';
          continue;
        }
        const auto cells = split_tabs(line);
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << '\n';
      }
    }
  }
  if (cfg.format == Format::Json) em.json_document(std::move(results));
  return status;
}

int cmd_rowproduct(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.n < 1) throw UsageError("n must be at least 1");
  const std::uint64_t x = cfg.x.value_or(cfg.n);
  if (x > cfg.n) throw UsageError("--x must not exceed n");
  const FactoredNumber g = partial_row_product(cfg.n, x);
  long double log_value = 0;
  for (const auto& [b, e] : g.exponents()) log_value += static_cast<long double>(e.to_u64()) * std::log(static_cast<long double>(b));
  char log_text[64];
  std::snprintf(log_text, sizeof log_text, "%.12Lg", log_value);
  Fields f = common_fields(cfg);
  f.emplace_back("n", std::to_string(cfg.n));
  f.emplace_back("x", std::to_string(x));
  Emitter em(cfg, f, out);
  em.header();
  const BigInt v = to_decimal(g);
  const std::string factored = format_factored(refine_to_primes(g));
  if (cfg.format == Format::Json) {
    em.json_document(json::array({{{"n", cfg.n}, {"x", x}, {"factored", factored},
                                   {"decimal", format_decimal(v, false)}, {"log", log_text}}}));
  } else if (cfg.format == Format::Csv) {
    out << "n,x,factored,decimal,log\n";
    out << cfg.n << ',' << x << ',' << csv_field(factored) << ',' << format_decimal(v, false) << ',' << log_text << '\n';
  } else {
    out << "factored: " << factored << '\n';
    out << "decimal: " << format_decimal(v, true) << '\n';
    out << "log: " << log_text << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.scale > 0)) throw UsageError("--scale must be positive");
  const auto& names = suite_names();
  if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw UsageError("unknown suite '" + cfg.suite + "'");
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.scale = cfg.scale;
  opts.golden_dir = cfg.golden_dir;
  opts.limits = cfg.limits();
  opts.series_cap = cfg.series_cap;
  Fields f = common_fields(cfg);
  f.emplace_back("suite", cfg.suite);
  f.emplace_back("seed", std::to_string(cfg.seed));
  std::ostringstream scale;
  scale << cfg.scale;
  f.emplace_back("scale", scale.str());
  f.emplace_back("series-cap", std::to_string(cfg.series_cap));
  f.emplace_back("max-level", std::to_string(cfg.max_level));
  f.emplace_back("bound", std::to_string(cfg.bound));
  f.emplace_back("golden-dir", cfg.golden_dir);
  Emitter em(cfg, f, out);
  em.header();
  const auto reports = run_suites(cfg.suite, opts);
  bool all_passed = true;
  json results = json::array();
  if (cfg.format == Format::Csv) out << "suite,index,passed,description,detail\n";
  if (cfg.format == Format::Text) out << "suite\tinstances\tfailures\tstatus\n";
  for (const auto& r : reports) {
    all_passed = all_passed && r.passed();
    if (cfg.format == Format::Json) {
      json instances = json::array();
      for (const auto& i : r.instances)
        instances.push_back(
            {{"index", i.index}, {"description", i.description}, {"passed", i.passed}, {"detail", i.detail}});
      results.push_back({{"suite", r.name},
                         {"passed", r.passed()},
                         {"instance_count", r.instances.size()},
                         {"failures", r.failures()},
                         {"instances", std::move(instances)}});
    } else if (cfg.format == Format::Csv) {
      for (const auto& i : r.instances)
        out << r.name << ',' << i.index << ',' << (i.passed ? "yes" : "no") << ',' << csv_field(i.description) << ','
            << csv_field(i.detail) << '\n';
    } else {
      out << r.name << '\t' << r.instances.size() << '\t' << r.failures() << '\t' << (r.passed() ? "PASS" : "FAIL")
          << '\n';
    }
    for (const auto& i : r.instances)
      if (!i.passed) err << "counterexample [" << r.name << " #" << i.index << "] " << i.description << " :: " << i.detail << '\n';
  }
  if (cfg.format == Format::Json) em.json_document(std::move(results));
  if (cfg.format == Format::Text) out << "overall: " << (all_passed ? "PASS" : "FAIL") << '\n';
  return all_passed ? kOk : kPropertyFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Generalized factorials, b-orderings and exponent sequences over subsets of the integers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(GENFACT_VERSION));

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text | csv | json")->transform(CLI::CheckedTransformer(formats));
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--set", cfg.set_spec, "Z | N | P | ap:<first>,<step> | list:<a,...> | range:<lo>..<hi> | file:<path>");
    sub->add_flag("--force-greedy", cfg.force_greedy, "bypass the closed forms for Z and P");
    sub->add_flag("--allow-uncertified", cfg.allow_uncertified, "accept results that could not be proven");
    sub->add_option("--max-level", cfg.max_level, "deepest residue level searched before falling back")
        ->check(CLI::Range(1u, 62u));
    sub->add_option("--bound", cfg.bound, "|a| window for fallback and predicate-set scans")->check(CLI::PositiveNumber);
    add_format(sub);
  };
  auto add_bases = [&](CLI::App* sub) {
    sub->add_option("--bases", cfg.bases_spec, "auto | primes:auto | primes:<c> | upto:<c> | <lo>..<hi> | <b1>,<b2>,...");
  };

  auto* exponents = app.add_subcommand("exponents", "exponent sequence alpha_0..alpha_k of S at one base");
  add_engine(exponents);
  exponents->add_option("--base", cfg.base, "base b >= 0")->required();
  exponents->add_option("--k", cfg.k, "largest index")->required();

  auto* fact = app.add_subcommand("factorial", "k! over (S, T)");
  add_engine(fact);
  add_bases(fact);
  fact->add_option("--k", cfg.k)->required();

  auto* integer = app.add_subcommand("integer", "[n] = n!/(n-1)! over (S, T)");
  add_engine(integer);
  add_bases(integer);
  integer->add_option("--n", cfg.n)->required();

  auto* binom = app.add_subcommand("binomial", "binomial coefficient (k, l) over (S, T)");
  add_engine(binom);
  add_bases(binom);
  binom->add_option("--k", cfg.k)->required();
  binom->add_option("--l", cfg.l)->required();

  auto* tables = app.add_subcommand("tables", "regenerate the (Z, N) value tables and compare with the golden files");
  tables->add_option("which,--which", cfg.which, "1-4; all tables when omitted");
  tables->add_option("--golden-dir", cfg.golden_dir);
  add_format(tables);

  auto* rowprod = app.add_subcommand("rowproduct", "product of the binomial row n, optionally over bases 2..x");
  rowprod->add_option("n,--n", cfg.n)->required();
  rowprod->add_option("--x", cfg.x);
  add_format(rowprod);

  auto* verify = app.add_subcommand("verify", "run property suites and report every checked instance");
  verify->add_option("--suite", cfg.suite, "suite name or all");
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--scale", cfg.scale, "multiplies random instance counts");
  verify->add_option("--series-cap", cfg.series_cap, "truncation of random power series")->check(CLI::Range(2, 200));
  verify->add_option("--max-level", cfg.max_level)->check(CLI::Range(1u, 62u));
  verify->add_option("--bound", cfg.bound)->check(CLI::PositiveNumber);
  verify->add_option("--golden-dir", cfg.golden_dir);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kOk;
    std::ostringstream o, r;
    app.exit(e, o, r);
    err << r.str() << o.str();
    return kUsage;
  }

  const std::pair<CLI::App*, int (*)(const RunConfig&, std::ostream&, std::ostream&)> commands[] = {
      {exponents, cmd_exponents}, {fact, cmd_factorial},      {integer, cmd_integer}, {binom, cmd_binomial},
      {tables, cmd_tables},       {rowprod, cmd_rowproduct}, {verify, cmd_verify}};
  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    cfg.command = sub->get_name();
    // Validation happens before any output so a usage error never leaves a partial document.
    std::ostringstream buffer;
    try {
      const int code = fn(cfg, buffer, err);
      out << buffer.str();
      return code;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::domain_error& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::out_of_range& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << '\n';
      return kPropertyFailure;
    }
  }
  return kUsage;
}

}  // namespace genfact::cli
