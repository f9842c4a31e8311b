#include "confspace/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "confspace/algebra.hpp"
#include "confspace/analysis.hpp"
#include "confspace/presets.hpp"
#include "confspace/ring_io.hpp"

namespace confspace {

namespace {

constexpr const char* kBettiCsvHeader = "# confspace betti-csv v1";
constexpr const char* kChdimCsvHeader = "# confspace chdim-csv v1";
constexpr const char* kVerifyCsvHeader = "# confspace verify-csv v1";

// Failures carrying their exit code.
struct CliError : std::runtime_error {
  CliError(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
  int code;
};

struct RunConfig {
  std::string command;
  std::string preset;
  std::string file;
  std::optional<int> k;
  std::optional<int> k_max;
  bool reduced = false;
  std::string format = "tty";
  std::size_t max_basis = kDefaultMaxBasis;
  unsigned threads = 0;

  ComputeOptions options() const {
    ComputeOptions o;
    o.max_basis = max_basis;
    o.threads = threads;
    return o;
  }
};

CohomologyAlgebra load_source(const RunConfig& cfg) {
  if (cfg.preset.empty() == cfg.file.empty()) {
    throw CliError(kExitIo, "exactly one of --preset or --file is required");
  }
  try {
    return cfg.preset.empty() ? load_ring_file(cfg.file) : get_preset(cfg.preset);
  } catch (const RingFormatError& e) {
    throw CliError(kExitIo, e.what());
  } catch (const UnknownPresetError& e) {
    throw CliError(kExitIo, e.what());
  }
}

void print_issues(const ValidationReport& report, std::ostream& os) {
  for (const auto& issue : report.issues) {
    os << (issue.severity == Severity::kError ? "error" : "warning") << " [" << issue.check << "] "
       << issue.message << '\n';
  }
}

CohomologyAlgebra load_valid(const RunConfig& cfg, std::ostream& err) {
  CohomologyAlgebra algebra = load_source(cfg);
  const ValidationReport report = validate_algebra(algebra);
  if (!report.ok()) {
    print_issues(report, err);
    throw CliError(kExitDomain, "ring '" + algebra.name() + "' failed validation");
  }
  return algebra;
}

// k values requested by --k / --kmax.
std::vector<int> k_range(const RunConfig& cfg) {
  if (cfg.k) return {*cfg.k};
  if (cfg.k_max) {
    std::vector<int> ks;
    for (int k = 1; k <= *cfg.k_max; ++k) ks.push_back(k);
    return ks;
  }
  throw CliError(kExitIo, "one of --k or --kmax is required");
}

// --reduced applies wherever the reduced complex exists; over a --kmax range
// that means k >= 2. An explicit single k must satisfy the hypothesis.
bool use_reduced(const RunConfig& cfg, const CohomologyAlgebra& algebra, int k) {
  if (!cfg.reduced) return false;
  if (!algebra.closed()) {
    throw CliError(kExitDomain, "--reduced requires a closed manifold");
  }
  if (k < 2) {
    if (cfg.k) throw CliError(kExitDomain, "--reduced requires k >= 2");
    return false;
  }
  return true;
}

std::string header_line(const CohomologyAlgebra& a) {
  std::ostringstream os;
  os << "ring: " << a.name() << " (" << (a.closed() ? "closed" : "open")
     << ", d = " << a.dimension() << ", n = dim A^(d-1) = " << codimension_one_rank(a) << ")";
  return os.str();
}

std::string optional_str(const std::optional<int>& x) {
  return x ? std::to_string(*x) : std::string("-");
}

std::string optional_str(const std::optional<Integer>& x) {
  return x ? to_string(*x) : std::string("-");
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const CohomologyAlgebra algebra = load_source(cfg);
  const ValidationReport report = validate_algebra(algebra);
  print_issues(report, out);
  if (report.ok()) {
    out << "valid: " << algebra.name() << " (" << report.warning_count() << " warnings)\n";
    return kExitOk;
  }
  out << "invalid: " << algebra.name() << " (" << report.error_count() << " errors)\n";
  return kExitDomain;
}

std::vector<BettiTable> compute_tables(const RunConfig& cfg, const CohomologyAlgebra& algebra) {
  std::vector<BettiTable> tables;
  for (int k : k_range(cfg)) {
    if (k < 0) throw CliError(kExitIo, "k must be nonnegative");
    tables.push_back(betti_table(algebra, k, use_reduced(cfg, algebra, k), cfg.options()));
  }
  return tables;
}

void write_betti_csv(const std::vector<BettiTable>& tables, std::ostream& out) {
  out << kBettiCsvHeader << '\n' << "k,degree,betti,chdim_rational\n";
  for (const auto& t : tables) {
    const std::string top = optional_str(t.chdim_rational());
    for (const auto& [degree, b] : t.betti) {
      out << t.k << ',' << degree << ',' << b << ',' << top << '\n';
    }
  }
}

int cmd_betti(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CohomologyAlgebra algebra = load_valid(cfg, err);
  const auto tables = compute_tables(cfg, algebra);
  if (cfg.format == "csv") {
    write_betti_csv(tables, out);
    return kExitOk;
  }
  out << header_line(algebra) << '\n';
  for (const auto& t : tables) {
    out << "k = " << t.k << (t.reduced ? " (reduced complex)" : "") << '\n';
    out << "  degree  betti\n";
    for (const auto& [degree, b] : t.betti) {
      out << "  " << std::setw(6) << degree << "  " << b << '\n';
    }
    out << "  chdim_rational = " << optional_str(t.chdim_rational()) << '\n';
  }
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.k_max) throw CliError(kExitIo, "table requires --kmax");
  const CohomologyAlgebra algebra = load_valid(cfg, err);
  const auto tables = compute_tables(cfg, algebra);
  if (cfg.format == "csv") {
    write_betti_csv(tables, out);
    return kExitOk;
  }
  int max_degree = 0;
  for (const auto& t : tables) max_degree = std::max(max_degree, t.chdim_rational().value_or(0));
  out << header_line(algebra) << '\n';
  out << "   k |";
  for (int i = 0; i <= max_degree; ++i) out << std::setw(6) << i;
  out << " | chdim\n";
  for (const auto& t : tables) {
    out << std::setw(4) << t.k << " |";
    for (int i = 0; i <= max_degree; ++i) out << std::setw(6) << t.at(i);
    out << " | " << optional_str(t.chdim_rational()) << '\n';
  }
  return kExitOk;
}

int cmd_chdim(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CohomologyAlgebra algebra = load_valid(cfg, err);
  const bool csv = cfg.format == "csv";
  if (csv) {
    out << kChdimCsvHeader << '\n' << "k,chdim_rational,predicted,integral\n";
  } else {
    out << header_line(algebra) << '\n' << "   k  chdim_rational  predicted  integral\n";
  }
  for (int k : k_range(cfg)) {
    const int value = chdim(algebra, k, cfg.options());
    const auto predicted = predicted_chdim(algebra, k);
    // Equality with the integral Chdim is only claimed where the sandwich
    // between the rational lower bound and Kallel's bound closes.
    const bool integral = predicted && *predicted == value;
    if (csv) {
      out << k << ',' << value << ',' << optional_str(predicted) << ','
          << (integral ? "yes" : "no") << '\n';
    } else {
      out << std::setw(4) << k << std::setw(16) << value << std::setw(11) << optional_str(predicted)
          << std::setw(10) << (integral ? "yes" : "no") << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.k_max) throw CliError(kExitIo, "verify requires --kmax");
  const CohomologyAlgebra algebra = load_valid(cfg, err);
  const auto verdicts = verify_theorems(algebra, *cfg.k_max, cfg.options());
  const bool csv = cfg.format == "csv";
  if (csv) {
    out << kVerifyCsvHeader << '\n' << "k,theorem,applicable,predicted,relation,computed,status\n";
  } else {
    out << header_line(algebra) << '\n'
        << "   k  theorem  predicted  rel  computed  status\n";
  }
  bool violated = false;
  for (const auto& v : verdicts) {
    violated = violated || v.status == VerdictStatus::kViolated;
    if (csv) {
      out << v.k << ',' << to_string(v.theorem) << ',' << (v.applicable ? "yes" : "no") << ','
          << optional_str(v.predicted) << ',' << v.relation << ',' << optional_str(v.computed)
          << ',' << to_string(v.status) << '\n';
    } else {
      out << std::setw(4) << v.k << "  " << std::left << std::setw(7) << to_string(v.theorem)
          << std::right << std::setw(11) << optional_str(v.predicted) << "  " << std::setw(3)
          << (v.applicable ? v.relation : "") << std::setw(10) << optional_str(v.computed) << "  "
          << to_string(v.status) << '\n';
    }
  }
  if (!csv) out << (violated ? "VIOLATED\n" : "all applicable verdicts confirmed\n");
  return violated ? kExitDomain : kExitOk;
}

struct BoundsArgs {
  long n = 0;
  long k = 0;
  bool closed = false;
  std::optional<int> d;
  std::optional<int> r;
};

int cmd_bounds(const BoundsArgs& args, std::ostream& out) {
  const auto bound = lower_bound_rank(args.n, args.k, args.closed);
  out << "lower_bound_rank(n = " << args.n << ", k = " << args.k << ", "
      << (args.closed ? "closed" : "open") << ") = " << optional_str(bound) << '\n';
  if (args.d) {
    const long degree = (*args.d - 1) * args.k + (args.closed ? 1 : 0);
    out << "top degree (d - 1)k" << (args.closed ? " + 1" : "") << " = " << degree << '\n';
  }
  if (args.d && args.r) {
    const auto kallel = kallel_upper_bound(*args.d, static_cast<int>(args.k), *args.r, !args.closed);
    out << "kallel_upper_bound(d = " << *args.d << ", k = " << args.k << ", r = " << *args.r
        << ") = " << optional_str(kallel) << '\n';
  }
  return bound ? kExitOk : kExitDomain;
}

int cmd_dump_preset(const std::string& key, const std::string& output, std::ostream& out) {
  PresetEntry entry;
  try {
    entry = get_preset_entry(key);
  } catch (const UnknownPresetError& e) {
    throw CliError(kExitIo, e.what());
  }
  const std::string doc = dump_ring(entry.algebra);
  if (output.empty()) {
    out << doc;
    return kExitOk;
  }
  std::ofstream file(output);
  if (!(file << doc)) throw CliError(kExitIo, "cannot write '" + output + "'");
  out << "wrote " << output << " (" << entry.notes << ")\n";
  return kExitOk;
}

void add_source_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--preset", cfg.preset, "Built-in ring (see dump-preset --help)");
  cmd->add_option("--file", cfg.file, "Ring-description JSON file");
}

void add_compute_options(CLI::App* cmd, RunConfig& cfg, bool with_k, bool with_format) {
  if (with_k) cmd->add_option("--k", cfg.k, "Number of points")->check(CLI::NonNegativeNumber);
  cmd->add_option("--kmax", cfg.k_max, "Largest number of points (range starts at 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--reduced,!--full", cfg.reduced, "Use the reduced complex (closed, k >= 2)");
  if (with_format) {
    cmd->add_option("--format", cfg.format, "tty or csv")->check(CLI::IsMember({"tty", "csv"}));
  }
  cmd->add_option("--max-basis", cfg.max_basis, "Abort when a basis exceeds this many monomials");
  cmd->add_option("--threads", cfg.threads, "Worker threads for rank computations (0 = all)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational Betti numbers of unordered configuration spaces", "confspace"};
  app.require_subcommand(1);

  RunConfig cfg;
  BoundsArgs bounds;
  std::string preset_key;
  std::string output;
  std::string positional_path;

  auto* validate = app.add_subcommand("validate", "Check a ring description");
  add_source_options(validate, cfg);
  validate->add_option("path", positional_path, "Ring-description JSON file");

  auto* betti = app.add_subcommand("betti", "Betti numbers for one k or a range");
  add_source_options(betti, cfg);
  add_compute_options(betti, cfg, true, true);

  auto* table = app.add_subcommand("table", "k x degree Betti table up to --kmax");
  add_source_options(table, cfg);
  add_compute_options(table, cfg, false, true);

  auto* chdim_cmd = app.add_subcommand("chdim", "Rational cohomological dimension");
  add_source_options(chdim_cmd, cfg);
  add_compute_options(chdim_cmd, cfg, true, true);

  auto* verify = app.add_subcommand("verify", "Check the closed-form predictions");
  add_source_options(verify, cfg);
  add_compute_options(verify, cfg, false, true);

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the rank and Kallel bounds");
  bounds_cmd->add_option("--n", bounds.n, "dim H^(d-1)")->required();
  bounds_cmd->add_option("--k", bounds.k, "Number of points")->required();
  bounds_cmd->add_flag("--closed,!--open", bounds.closed, "Closed manifold (default open)");
  bounds_cmd->add_option("--d", bounds.d, "Manifold dimension");
  bounds_cmd->add_option("--r", bounds.r, "Connectivity for the Kallel bound");

  auto* dump = app.add_subcommand("dump-preset", "Print a built-in ring as JSON");
  std::string patterns;
  for (const auto& p : preset_patterns()) patterns += " " + p;
  dump->add_option("key", preset_key, "Preset key:" + patterns)->required();
  dump->add_option("-o,--output", output, "Write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (validate->parsed()) {
      if (!positional_path.empty()) {
        if (!cfg.file.empty()) throw CliError(kExitIo, "give the file either positionally or via --file");
        cfg.file = positional_path;
      }
      return cmd_validate(cfg, out);
    }
    if (betti->parsed()) return cmd_betti(cfg, out, err);
    if (table->parsed()) return cmd_table(cfg, out, err);
    if (chdim_cmd->parsed()) return cmd_chdim(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (bounds_cmd->parsed()) return cmd_bounds(bounds, out);
    if (dump->parsed()) return cmd_dump_preset(preset_key, output, out);
  } catch (const CliError& e) {
    err << "confspace: " << e.what() << '\n';
    return e.code;
  } catch (const BasisLimitError& e) {
    err << "confspace: " << e.what() << " (raise --max-basis to continue)\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "confspace: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitIo;
}

}  // namespace confspace
