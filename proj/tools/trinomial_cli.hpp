#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "trinomial/trinomial.hpp"

namespace trinomial::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kBadSpecFile = 3,
  kUnknownSource = 4,
};

inline constexpr std::size_t kMaxSize = 10000;

struct CliConfig {
  std::string subcommand;
  std::optional<std::string> source;
  std::optional<std::string> spec_file;
  std::size_t K = 9;
  std::size_t count = 10;
  std::size_t diag = 0;
  std::string format = "plain";
  bool sums = false;
  std::string suite = "all";
  std::string sequence = "transform";
  std::optional<std::string> output;
};

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Result of parsing argv: either a config or an exit code with the text
/// CLI11 produced (help, or a parse diagnostic).
struct ParseResult {
  std::optional<CliConfig> config;
  int exit_code = kOk;
  std::string message;
};

inline ParseResult parse_args(int argc, const char* const* argv) {
  CLI::App app{"Exact trinomial transforms, triangles and recurrences"};
  app.require_subcommand(1);
  CliConfig cfg;

  const auto add_source = [&cfg](CLI::App* sub) {
    auto* src = sub->add_option("--source", cfg.source, "catalog sequence name");
    auto* file = sub->add_option("--spec-file", cfg.spec_file, "JSON ternary spec (alpha, beta, gamma, a0, a1, a2)");
    src->excludes(file);
  };
  const auto add_format = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"plain", "csv", "bfile"}));
  };

  auto* triangle = app.add_subcommand("triangle", "render the transform triangle");
  add_source(triangle);
  add_format(triangle);
  triangle->add_option("--K", cfg.K, "last column")->check(CLI::Range(std::size_t{0}, kMaxSize));
  triangle->add_flag("--sums", cfg.sums, "append the s and s-bar rows");

  auto* transform = app.add_subcommand("transform", "trinomial transform (diagonal 0) or another diagonal");
  add_source(transform);
  add_format(transform);
  transform->add_option("--count", cfg.count, "number of terms")->check(CLI::Range(std::size_t{1}, kMaxSize));
  transform->add_option("--diag", cfg.diag, "diagonal offset")->check(CLI::Range(std::size_t{0}, kMaxSize));

  auto* coeffs = app.add_subcommand("coeffs", "derived recurrence coefficients");
  add_source(coeffs);
  add_format(coeffs);

  auto* sums = app.add_subcommand("sums", "column sums s and alternating column sums s-bar");
  add_source(sums);
  add_format(sums);
  sums->add_option("--count", cfg.count, "number of terms")->check(CLI::Range(std::size_t{1}, kMaxSize));

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of the transform");
  add_source(charpoly);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "suite to run")
      ->check(CLI::IsMember({"symbolic", "fuzz", "tables", "oeis", "explore", "all"}));
  verify->add_option("--source", cfg.source, "sequence for the explore suite");

  auto* exp = app.add_subcommand("export", "write a sequence as an OEIS b-file");
  add_source(exp);
  exp->add_option("--sequence", cfg.sequence, "which sequence")
      ->check(CLI::IsMember({"transform", "s", "sbar", "base"}));
  exp->add_option("--count", cfg.count, "number of terms")->check(CLI::Range(std::size_t{1}, kMaxSize));
  exp->add_option("--diag", cfg.diag, "diagonal offset for --sequence transform")
      ->check(CLI::Range(std::size_t{0}, kMaxSize));
  exp->add_option("--output", cfg.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, kOk, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, kOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, kUsage, std::string("error: ") + e.what()};
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.subcommand == "export") cfg.format = "bfile";
  return {cfg, kOk, {}};
}

namespace detail {

/// The base sequence a command works on, with its ternary spec when known.
struct Source {
  std::string label;
  SequenceGenerator<ExactInt> base;
  std::optional<TernarySpec> spec;
};

inline Source resolve_source(const CliConfig& cfg) {
  if (cfg.source && cfg.spec_file) throw usage_error("give exactly one of --source and --spec-file");
  if (cfg.spec_file) {
    TernarySpec spec = load_ternary_spec(*cfg.spec_file);
    return {*cfg.spec_file, ternary_sequence(spec), spec};
  }
  if (cfg.source) {
    const CatalogEntry& e = get(*cfg.source);
    return {e.name, e.generator(), e.ternary_embedding};
  }
  throw usage_error("a source is required: --source <name> or --spec-file <path>");
}

inline const TernarySpec& require_spec(const Source& src, const std::string& command) {
  if (!src.spec) throw usage_error(command + ": '" + src.label + "' has no ternary recurrence");
  return *src.spec;
}

inline void require_format(const CliConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw usage_error(cfg.subcommand + ": format '" + cfg.format + "' is not supported here");
}

/// Display width of a UTF-8 string, ignoring combining marks.
inline std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if ((c & 0xC0) == 0x80) continue;
    // U+0300..U+036F encode as CC 80..CD AF
    if ((c == 0xCC || c == 0xCD) && i + 1 < s.size()) {
      const auto next = static_cast<unsigned char>(s[i + 1]);
      if (c == 0xCC || next <= 0xAF) continue;
    }
    ++width;
  }
  return width;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return std::string(width > w ? width - w : 0, ' ') + s;
}

inline void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], display_width(row[j]));
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += "  ";
      line += pad_left(row[j], widths[j]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

inline void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j > 0 ? "," : "") << row[j];
    out << '\n';
  }
}

inline void print_bfile(std::ostream& out, const std::vector<ExactInt>& values) {
  for (std::size_t n = 0; n < values.size(); ++n) out << n << ' ' << values[n] << '\n';
}

inline void print_sequence(std::ostream& out, const std::string& format, const std::vector<ExactInt>& values) {
  if (format == "bfile") {
    print_bfile(out, values);
  } else if (format == "csv") {
    out << "n,value\n";
    for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << values[n] << '\n';
  } else {
    std::vector<std::vector<std::string>> cells{{"n", "value"}};
    for (std::size_t n = 0; n < values.size(); ++n) cells.push_back({std::to_string(n), values[n].str()});
    print_aligned(out, cells);
  }
}

inline int cmd_triangle(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"plain", "csv"});
  Source src = resolve_source(cfg);
  const auto t = TransformTriangle<ExactInt>::build(src.base, cfg.K);
  const bool csv = cfg.format == "csv";

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{csv ? "n" : ""};
  for (std::size_t k = 0; k <= cfg.K; ++k) header.push_back(std::to_string(k));
  cells.push_back(std::move(header));
  for (std::size_t n = 0; n <= cfg.K; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (std::size_t k = 0; k <= cfg.K; ++k) row.push_back(k < n ? "" : t.at(n, k).str());
    cells.push_back(std::move(row));
  }
  if (cfg.sums) {
    std::vector<std::string> s{"s"};
    std::vector<std::string> sb{csv ? "sbar" : "s̄"};
    for (std::size_t k = 0; k <= cfg.K; ++k) {
      s.push_back(column_sum(t, k).str());
      sb.push_back(alt_column_sum(t, k).str());
    }
    cells.push_back(std::move(s));
    cells.push_back(std::move(sb));
  }
  if (csv) {
    print_csv(out, cells);
  } else {
    print_aligned(out, cells);
  }
  return kOk;
}

inline std::vector<ExactInt> diagonal_terms(Source& src, std::size_t offset, std::size_t count) {
  if (src.spec) return diagonal_fast(*src.spec, offset, count);
  const auto t = TransformTriangle<ExactInt>::build(src.base, count - 1 + offset, count - 1);
  return diagonal(t, offset, count);
}

inline ColumnSums column_sums(Source& src, std::size_t count) {
  if (src.spec) return sums_fast(*src.spec, count);
  const auto t = TransformTriangle<ExactInt>::build(src.base, count - 1);
  ColumnSums out;
  for (std::size_t n = 0; n < count; ++n) {
    out.sums.push_back(column_sum(t, n));
    out.alt_sums.push_back(alt_column_sum(t, n));
  }
  return out;
}

inline int cmd_transform(const CliConfig& cfg, std::ostream& out) {
  Source src = resolve_source(cfg);
  print_sequence(out, cfg.format, diagonal_terms(src, cfg.diag, cfg.count));
  return kOk;
}

inline std::string join(const std::array<ExactInt, 6>& values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : ", ") + v.str();
  return s;
}

inline int cmd_coeffs(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"plain", "csv"});
  const Source src = resolve_source(cfg);
  const TernarySpec& spec = require_spec(src, "coeffs");
  const DerivedCoeffs d = derive(spec);
  if (cfg.format == "csv") {
    out << "name,value\n";
    out << "A," << d.A << "\nB," << d.B << "\nC," << d.C << "\nP," << d.P << "\nQ," << d.Q << '\n';
    for (std::size_t j = 0; j < 6; ++j) out << "sum6_" << j + 1 << ',' << d.sum6[j] << '\n';
    for (std::size_t j = 0; j < 6; ++j) out << "alt6_" << j + 1 << ',' << d.alt6[j] << '\n';
    return kOk;
  }
  out << "α=" << spec.alpha() << " β=" << spec.beta() << " γ=" << spec.gamma() << '\n';
  out << "𝒜=" << d.A << '\n';
  out << "ℬ=" << d.B << '\n';
  out << "𝒞=" << d.C << '\n';
  out << "𝒫=" << d.P << '\n';
  out << "𝒬=" << d.Q << '\n';
  out << "sum6=" << join(d.sum6) << '\n';
  out << "alt6=" << join(d.alt6) << '\n';
  return kOk;
}

inline int cmd_sums(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"plain", "csv"});
  Source src = resolve_source(cfg);
  const ColumnSums cs = column_sums(src, cfg.count);
  const bool csv = cfg.format == "csv";
  std::vector<std::vector<std::string>> cells{{"n", "s", csv ? "sbar" : "s̄"}};
  for (std::size_t n = 0; n < cfg.count; ++n) cells.push_back({std::to_string(n), cs.sums[n].str(), cs.alt_sums[n].str()});
  if (csv) {
    print_csv(out, cells);
  } else {
    print_aligned(out, cells);
  }
  return kOk;
}

inline int cmd_charpoly(const CliConfig& cfg, std::ostream& out) {
  const Source src = resolve_source(cfg);
  const TernarySpec& spec = require_spec(src, "charpoly");
  const IntPoly p = characteristic_polynomial(spec);
  const IntPoly q = char_poly_transform(p);
  out << "base:      " << to_string(p, "t") << '\n';
  out << "transform: " << to_string(q, "s") << '\n';
  std::string rec;
  for (const auto& c : recurrence_coefficients(q)) rec += (rec.empty() ? "" : ", ") + c.str();
  out << "recurrence: " << rec << '\n';
  return kOk;
}

inline int report(std::ostream& out, const std::string& suite, const std::vector<Check>& checks, bool exploratory) {
  std::size_t passed = 0;
  out << "== " << suite << " ==\n";
  for (const auto& c : checks) {
    if (exploratory) {
      out << (c.passed ? "agree   " : "differ  ") << c.name << "  [" << c.detail << "]\n";
    } else {
      out << (c.passed ? "ok    " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
    }
    if (c.passed) ++passed;
  }
  out << suite << ": " << passed << "/" << checks.size() << (exploratory ? " agree\n" : " passed\n");
  return (exploratory || passed == checks.size()) ? kOk : kVerifyFailed;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  if (cfg.spec_file) throw usage_error("verify: --spec-file is not used by the verification suites");
  const std::string& s = cfg.suite;
  const bool all = s == "all";
  int status = kOk;
  const auto merge = [&status](int code) {
    if (code != kOk) status = code;
  };
  if (all || s == "symbolic") {
    const SymbolicCoeffs c = symbolic_coefficients();
    out << "b(0) = x\n";
    const auto t = symbolic_triangle(2, 2);
    out << "b(1) = " << to_grouped_string(t.at(1, 1)) << '\n';
    out << "b(2) = " << to_grouped_string(t.at(2, 2)) << '\n';
    out << "𝒜 = " << to_string(c.A) << '\n';
    out << "ℬ = " << to_string(c.B) << '\n';
    out << "𝒞 = " << to_string(c.C) << '\n';
    out << "𝒫 = " << to_string(c.P) << '\n';
    out << "𝒬 = " << to_string(c.Q) << '\n';
    merge(report(out, "symbolic", symbolic_suite(), false));
  }
  if (all || s == "tables") merge(report(out, "tables", tables_suite(), false));
  if (all || s == "oeis") merge(report(out, "oeis", oeis_suite(), false));
  if (all || s == "fuzz") merge(report(out, "fuzz", fuzz_suite(), false));
  if (s == "explore") {
    const std::string source = cfg.source.value_or("tribonacci");
    get(source);
    report(out, "explore (" + source + ")", j_offset_exploration(source), true);
  }
  return status;
}

inline int cmd_export(const CliConfig& cfg, std::ostream& out) {
  Source src = resolve_source(cfg);
  std::vector<ExactInt> values;
  if (cfg.sequence == "transform") {
    values = diagonal_terms(src, cfg.diag, cfg.count);
  } else if (cfg.sequence == "base") {
    values = src.base.prefix(cfg.count);
  } else {
    ColumnSums cs = column_sums(src, cfg.count);
    values = cfg.sequence == "s" ? std::move(cs.sums) : std::move(cs.alt_sums);
  }
  if (!cfg.output) {
    print_bfile(out, values);
    return kOk;
  }
  std::ofstream file(*cfg.output, std::ios::binary);
  if (!file) throw usage_error("export: cannot write '" + *cfg.output + "'");
  print_bfile(file, values);
  return kOk;
}

}  // namespace detail

/// Runs one command. Output goes to `out`, diagnostics to `err`.
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.K > kMaxSize || cfg.count > kMaxSize || cfg.diag > kMaxSize) {
      throw usage_error("size parameters are limited to " + std::to_string(kMaxSize));
    }
    if (cfg.count == 0) throw usage_error("--count must be at least 1");
    std::ostringstream buffer;
    int status = kUsage;
    if (cfg.subcommand == "triangle") {
      status = detail::cmd_triangle(cfg, buffer);
    } else if (cfg.subcommand == "transform") {
      status = detail::cmd_transform(cfg, buffer);
    } else if (cfg.subcommand == "coeffs") {
      status = detail::cmd_coeffs(cfg, buffer);
    } else if (cfg.subcommand == "sums") {
      status = detail::cmd_sums(cfg, buffer);
    } else if (cfg.subcommand == "charpoly") {
      status = detail::cmd_charpoly(cfg, buffer);
    } else if (cfg.subcommand == "verify") {
      status = detail::cmd_verify(cfg, buffer);
    } else if (cfg.subcommand == "export") {
      status = detail::cmd_export(cfg, buffer);
    } else {
      throw usage_error("unknown command '" + cfg.subcommand + "'");
    }
    out << buffer.str();
    if (status == kVerifyFailed) err << "error: verification failed\n";
    return status;
  } catch (const spec_format_error& e) {
    err << "error: bad spec file: " << e.what() << '\n';
    return kBadSpecFile;
  } catch (const unknown_sequence_error& e) {
    err << "error: " << e.what() << '\n';
    return kUnknownSource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: out of range: " << e.what() << '\n';
    return kUsage;
  }
}

inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseResult parsed = parse_args(argc, argv);
  if (!parsed.config) {
    (parsed.exit_code == kOk ? out : err) << parsed.message << '\n';
    return parsed.exit_code;
  }
  return run(*parsed.config, out, err);
}

}  // namespace trinomial::cli
