#ifndef HORACIRC_CLI_HPP
#define HORACIRC_CLI_HPP

#include "horacirc/closed_forms.hpp"
#include "horacirc/horadam.hpp"
#include "horacirc/oracle.hpp"
#include "horacirc/rational.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace horacirc {

namespace cli_detail {

// Exit-code contract: success with an exact certificate, input error, numeric
// fallback only, or a published formula disagreeing with the reference value.
constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_numeric = 3;
constexpr int exit_disagreement = 4;

struct Options {
  std::string format = "plain";
  double tol = 1e-9;
  long long max_oracle_n = 512;
  bool debug_oracle = false;
};

inline std::string fmt_double(double value, const char* format = "%.12g") {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

inline std::string approx_string(const ApproxValue& approx) {
  return "~" + fmt_double(approx.value) + " ± " + fmt_double(approx.error_bound, "%.3g");
}

/// "-1+0i", "3+0i", "0.5-2i"; components within the error bound are shown as
/// exact zeros, which is display-only snapping.
inline std::string complex_string(ComplexApprox z, double snap_bound) {
  double re = std::abs(z.real()) <= snap_bound ? 0.0 : z.real();
  double im = std::abs(z.imag()) <= snap_bound ? 0.0 : z.imag();
  return fmt_double(re) + (std::signbit(im) ? "-" : "+") + fmt_double(std::abs(im)) + "i";
}

inline std::string join_rationals(const std::vector<Rat>& values, const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += separator;
    out += to_string(values[i]);
  }
  return out;
}

inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

inline std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  for (const char c : text) {
    if (c == separator) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

inline std::vector<Rat> parse_row(const std::string& text) {
  std::vector<Rat> row;
  for (const std::string& part : split(text, ',')) row.push_back(parse_rational(part));
  if (row.empty()) throw std::invalid_argument("empty vector");
  return row;
}

struct Disagreement {
  std::string formula;
  std::string formula_value;
  std::string reference_value;
};

/// One result row, shared by norm, compare, and batch.
struct OutputRecord {
  std::string input_plain;
  nlohmann::json input_json;
  std::string method;
  bool exact = false;
  std::string value;
  ConditionReport certificate;
  std::vector<Disagreement> disagreements;
};

inline std::string certificate_plain(const ConditionReport& cert) {
  std::string out = "nonnegative=";
  out += cert.nonnegative ? "true" : "false";
  out += " autocorrelation_ok=";
  out += cert.autocorrelation_ok ? "true" : "false";
  if (cert.failing_shift) out += " failing_shift=" + std::to_string(*cert.failing_shift);
  if (cert.equal_sums) out += " equal_sums=" + to_string(*cert.equal_sums);
  if (!cert.correlations.empty()) {
    constexpr std::size_t shown = 16;
    out += " correlations=(";
    for (std::size_t i = 0; i < cert.correlations.size() && i < shown; ++i) {
      if (i > 0) out += ',';
      out += to_string(cert.correlations[i]);
    }
    if (cert.correlations.size() > shown) out += ",...";
    out += ')';
  }
  return out;
}

inline nlohmann::json certificate_json(const ConditionReport& cert) {
  nlohmann::json j;
  j["nonnegative"] = cert.nonnegative;
  j["autocorrelation_ok"] = cert.autocorrelation_ok;
  j["failing_shift"] =
      cert.failing_shift ? nlohmann::json(*cert.failing_shift) : nlohmann::json(nullptr);
  nlohmann::json correlations = nlohmann::json::array();
  for (const Rat& c : cert.correlations) correlations.push_back(to_string(c));
  j["correlations"] = std::move(correlations);
  j["equal_sums"] =
      cert.equal_sums ? nlohmann::json(to_string(*cert.equal_sums)) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json record_json(const OutputRecord& record) {
  nlohmann::json j;
  j["input"] = record.input_json;
  j["method"] = record.method;
  j["exact"] = record.exact;
  j["value"] = record.value;
  j["certificate"] = certificate_json(record.certificate);
  nlohmann::json disagreements = nlohmann::json::array();
  for (const Disagreement& d : record.disagreements) {
    disagreements.push_back({{"formula", d.formula},
                             {"formula_value", d.formula_value},
                             {"reference_value", d.reference_value}});
  }
  j["disagreements"] = std::move(disagreements);
  return j;
}

inline void record_plain(std::ostream& out, const OutputRecord& record) {
  out << "input: " << record.input_plain << "\n"
      << "method: " << record.method << "\n"
      << "exact: " << (record.exact ? "true" : "false") << "\n"
      << "value: " << record.value << "\n"
      << "certificate: " << certificate_plain(record.certificate) << "\n";
}

inline std::string record_csv_header() {
  return "input,method,exact,value,nonnegative,autocorrelation_ok,failing_shift,disagreements";
}

inline std::string record_csv_line(const OutputRecord& record) {
  std::string disagreements;
  for (std::size_t i = 0; i < record.disagreements.size(); ++i) {
    if (i > 0) disagreements += ';';
    disagreements += record.disagreements[i].formula + "=" + record.disagreements[i].formula_value +
                     "|" + record.disagreements[i].reference_value;
  }
  std::string line = csv_field(record.input_plain);
  line += ',';
  line += record.method;
  line += ',';
  line += record.exact ? "true" : "false";
  line += ',';
  line += csv_field(record.value);
  line += ',';
  line += record.certificate.nonnegative ? "true" : "false";
  line += ',';
  line += record.certificate.autocorrelation_ok ? "true" : "false";
  line += ',';
  line += record.certificate.failing_shift ? std::to_string(*record.certificate.failing_shift) : "";
  line += ',';
  line += csv_field(disagreements);
  return line;
}

inline std::string record_one_line(const OutputRecord& record) {
  return record.input_plain + ": " + record.method + " " + record.value;
}

inline std::string params_plain(const RecurrenceParams& params, std::size_t n) {
  return "a=" + to_string(params.a) + " b=" + to_string(params.b) + " p=" + to_string(params.p) +
         " q=" + to_string(params.q) + " n=" + std::to_string(n);
}

inline nlohmann::json params_json(const RecurrenceParams& params, std::size_t n) {
  nlohmann::json j;
  j["a"] = to_string(params.a);
  j["b"] = to_string(params.b);
  j["p"] = to_string(params.p);
  j["q"] = to_string(params.q);
  j["n"] = n;
  return j;
}

inline nlohmann::json row_json(const std::vector<Rat>& row) {
  nlohmann::json j;
  nlohmann::json entries = nlohmann::json::array();
  for (const Rat& v : row) entries.push_back(to_string(v));
  j["row"] = std::move(entries);
  return j;
}

inline OutputRecord make_record(std::string input_plain, nlohmann::json input_json,
                                const NormResult& result) {
  OutputRecord record;
  record.input_plain = std::move(input_plain);
  record.input_json = std::move(input_json);
  record.method = method_name(result.method);
  record.exact = result.value_exact.has_value();
  record.value =
      record.exact ? to_string(*result.value_exact) : approx_string(*result.value_approx);
  record.certificate = result.certificate;
  return record;
}

inline double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

/// Re-derives an exact claim through the iterative oracle; disagreement is a
/// library bug and surfaces as an error, never as a quiet pass.
inline void debug_check_against_oracle(const std::vector<Rat>& row, const NormResult& result,
                                       const Options& opts) {
  if (!result.value_exact) return;
  if (static_cast<long long>(row.size()) > opts.max_oracle_n) return;
  if (!fits_float_exact(*result.value_exact)) return;
  OracleResult oracle;
  try {
    oracle = max_singular_value(CirculantSpec{row}, 1e-12, 200000);
  } catch (const std::domain_error&) {
    return;  // entries too large for the double-precision oracle
  }
  const double expected = result.value_exact->convert_to<double>();
  if (relative_gap(oracle.max_singular, expected) > std::max(opts.tol, 1e-9)) {
    throw std::logic_error("certified value " + to_string(*result.value_exact) +
                           " disagrees with the numeric oracle " +
                           fmt_double(oracle.max_singular));
  }
}

// --- subcommand bodies ------------------------------------------------------

inline int cmd_seq(const RecurrenceParams& params, std::size_t n, const Options& opts,
                   std::ostream& out) {
  const SequenceWindow window = generate(params, n);
  if (opts.format == "json") {
    nlohmann::json j;
    nlohmann::json terms = nlohmann::json::array();
    for (const Int& t : window.terms) terms.push_back(to_string(t));
    j["terms"] = std::move(terms);
    out << j.dump() << "\n";
  } else {
    const char* separator = opts.format == "csv" ? "," : " ";
    for (std::size_t i = 0; i < window.terms.size(); ++i) {
      if (i > 0) out << separator;
      out << window.terms[i];
    }
    out << "\n";
  }
  return exit_ok;
}

inline int cmd_sum(const RecurrenceParams& params, std::size_t n, const Options& opts,
                   std::ostream& out) {
  const Int sum = sum_closed_form(params, n);
  const char* branch = sum_branch_label(sum_branch(params));
  if (opts.format == "json") {
    nlohmann::json j;
    j["input"] = params_json(params, n);
    j["sum"] = to_string(sum);
    j["branch"] = branch;
    out << j.dump() << "\n";
  } else if (opts.format == "csv") {
    out << "sum,branch\n" << to_string(sum) << ',' << csv_field(branch) << "\n";
  } else {
    out << sum << " (branch: " << branch << ")\n";
  }
  return exit_ok;
}

inline int cmd_norm(const std::optional<std::pair<RecurrenceParams, std::size_t>>& params_input,
                    const std::optional<std::vector<Rat>>& row_input, const Options& opts,
                    std::ostream& out) {
  NormResult result;
  std::vector<Rat> row;
  std::string input_plain;
  nlohmann::json input_json;
  if (params_input) {
    result = norm_horadam(params_input->first, params_input->second);
    row = to_rationals(generate(params_input->first, params_input->second).terms);
    input_plain = params_plain(params_input->first, params_input->second);
    input_json = params_json(params_input->first, params_input->second);
  } else {
    row = *row_input;
    result = norm_exact(row);
    input_plain = "row=" + join_rationals(row, ",");
    input_json = row_json(row);
  }
  if (opts.debug_oracle) debug_check_against_oracle(row, result, opts);
  const OutputRecord record = make_record(std::move(input_plain), std::move(input_json), result);
  if (opts.format == "json") {
    out << record_json(record).dump() << "\n";
  } else if (opts.format == "csv") {
    out << record_csv_header() << "\n" << record_csv_line(record) << "\n";
  } else {
    record_plain(out, record);
  }
  return record.exact ? exit_ok : exit_numeric;
}

inline int cmd_eig(const std::vector<Rat>& row, const Options& opts, std::ostream& out) {
  const SpectrumApprox spectrum = spectral_norm_dft(CirculantSpec{row});
  if (opts.format == "json") {
    nlohmann::json j;
    j["input"] = row_json(row);
    nlohmann::json eigenvalues = nlohmann::json::array();
    for (const ComplexApprox& ev : spectrum.eigenvalues) {
      eigenvalues.push_back({{"re", ev.real()}, {"im", ev.imag()}});
    }
    j["eigenvalues"] = std::move(eigenvalues);
    j["singular_values"] = spectrum.singular_values;
    j["max_singular"] = spectrum.max_singular;
    j["error_bound"] = spectrum.error_bound;
    out << j.dump() << "\n";
  } else if (opts.format == "csv") {
    out << "re,im\n";
    for (const ComplexApprox& ev : spectrum.eigenvalues) {
      out << fmt_double(ev.real()) << ',' << fmt_double(ev.imag()) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
      if (i > 0) out << ", ";
      out << complex_string(spectrum.eigenvalues[i], spectrum.error_bound);
    }
    out << "\n";
    out << "max_singular: " << fmt_double(spectrum.max_singular) << " (error bound "
        << fmt_double(spectrum.error_bound, "%.3g") << ")\n";
  }
  return exit_ok;
}

inline int cmd_check(const std::vector<Rat>& row, const Options& opts, std::ostream& out) {
  const ConditionReport report = check_autocorrelation(row);
  if (opts.format == "json") {
    nlohmann::json j = row_json(row);
    nlohmann::json correlations = nlohmann::json::array();
    for (const Rat& c : report.correlations) correlations.push_back(to_string(c));
    j["correlations"] = std::move(correlations);
    j["nonnegative"] = report.nonnegative;
    j["autocorrelation_ok"] = report.autocorrelation_ok;
    j["failing_shift"] =
        report.failing_shift ? nlohmann::json(*report.failing_shift) : nlohmann::json(nullptr);
    out << j.dump() << "\n";
  } else if (opts.format == "csv") {
    out << "shift,correlation\n";
    for (std::size_t j = 0; j < report.correlations.size(); ++j) {
      out << (j + 1) << ',' << to_string(report.correlations[j]) << "\n";
    }
  } else {
    out << "correlations: " << join_rationals(report.correlations, " ") << "\n";
    out << "nonnegative: " << (report.nonnegative ? "true" : "false") << "\n";
    if (report.autocorrelation_ok) {
      out << "autocorrelation: holds for all shifts (j = 1.." << report.correlations.size()
          << ")\n";
    } else {
      out << "autocorrelation: fails at shift j=" << *report.failing_shift << " (sum = "
          << to_string(report.correlations[*report.failing_shift - 1]) << ")\n";
    }
  }
  return exit_ok;
}

inline int cmd_compare(const RecurrenceParams& params, std::size_t n, const Options& opts,
                       std::ostream& out) {
  const NormResult result = norm_horadam(params, n);
  const std::vector<Rat> row = to_rationals(generate(params, n).terms);

  std::optional<OracleResult> oracle;
  if (static_cast<long long>(n) <= opts.max_oracle_n) {
    try {
      oracle = max_singular_value(CirculantSpec{row}, 1e-12, 200000);
    } catch (const std::domain_error&) {
      oracle.reset();  // window too large for the double-precision oracle
    }
  }

  const std::optional<Rat>& reference_exact = result.value_exact;
  const double reference_numeric = reference_exact ? reference_exact->convert_to<double>()
                                   : oracle        ? oracle->max_singular
                                                   : result.value_approx->value;
  const std::string reference_string =
      reference_exact ? to_string(*reference_exact) : fmt_double(reference_numeric);

  struct Evaluation {
    FormulaId id;
    bool skipped = false;
    std::string skip_reason;
    std::string value_string;
    bool agrees = true;
  };
  std::vector<Evaluation> evaluations;
  OutputRecord record = make_record(params_plain(params, n), params_json(params, n), result);

  for (const FormulaId id : all_formulas) {
    Evaluation eval;
    eval.id = id;
    if (!formula_describes_input(id, params)) {
      eval.skipped = true;
      eval.skip_reason = formula_requirements(id);
      evaluations.push_back(std::move(eval));
      continue;
    }
    FormulaValue value;
    try {
      value = evaluate_published_formula(id, params, n);
    } catch (const std::domain_error& e) {
      eval.skipped = true;
      eval.skip_reason = e.what();
      evaluations.push_back(std::move(eval));
      continue;
    }
    if (const Rat* exact = std::get_if<Rat>(&value)) {
      eval.value_string = to_string(*exact);
      if (reference_exact) {
        const Rat diff = abs(*exact - *reference_exact);
        const Rat abs_formula = abs(*exact);
        const Rat abs_reference = abs(*reference_exact);
        const Rat scale = abs_formula > abs_reference ? abs_formula : abs_reference;
        eval.agrees = scale == 0 ? diff == 0 : diff <= Rat(opts.tol) * scale;
      } else {
        eval.agrees = relative_gap(exact->convert_to<double>(), reference_numeric) <= opts.tol;
      }
    } else {
      const double numeric = std::get<double>(value);
      eval.value_string = fmt_double(numeric);
      eval.agrees = relative_gap(numeric, reference_numeric) <= opts.tol;
    }
    if (!eval.agrees) {
      record.disagreements.push_back(
          Disagreement{formula_name(id), eval.value_string, reference_string});
    }
    evaluations.push_back(std::move(eval));
  }

  if (opts.format == "json") {
    out << record_json(record).dump() << "\n";
  } else if (opts.format == "csv") {
    out << record_csv_header() << "\n" << record_csv_line(record) << "\n";
  } else {
    record_plain(out, record);
    if (oracle) {
      out << "oracle: max_singular=" << fmt_double(oracle->max_singular)
          << " iterations=" << oracle->iterations
          << " converged=" << (oracle->converged ? "true" : "false")
          << " residual=" << fmt_double(oracle->residual, "%.3g") << "\n";
    } else {
      out << "oracle: skipped\n";
    }
    for (const Evaluation& eval : evaluations) {
      if (eval.skipped) {
        out << "skipped " << formula_name(eval.id) << " (" << eval.skip_reason << ")\n";
      } else if (eval.agrees) {
        out << "formula " << formula_name(eval.id) << ": " << eval.value_string << " (agrees)\n";
      } else {
        out << "formula " << formula_name(eval.id) << ": " << eval.value_string
            << " (DISAGREES with reference " << reference_string << ")\n";
      }
    }
  }
  if (!record.disagreements.empty()) return exit_disagreement;
  return record.exact ? exit_ok : exit_numeric;
}

struct BatchRow {
  std::size_t line_number = 0;
  RecurrenceParams params;
  std::size_t n = 0;
};

struct BatchOutcome {
  std::optional<OutputRecord> record;
  std::string error;  // diagnostic for a skipped row, keyed by line number
};

inline int cmd_batch(const std::string& path, const Options& opts, std::ostream& out,
                     std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    err << "cannot open '" << path << "'\n";
    return exit_input;
  }

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(file, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.empty() || detail::strip(lines[0]) != "a,b,p,q,n") {
    err << "line 1: expected header 'a,b,p,q,n'\n";
    return exit_input;
  }

  std::vector<BatchRow> rows;
  std::size_t skipped = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_number = i + 1;
    if (detail::strip(lines[i]).empty()) continue;
    const std::vector<std::string> fields = split(lines[i], ',');
    try {
      if (fields.size() != 5) throw std::invalid_argument("expected 5 fields 'a,b,p,q,n'");
      BatchRow row;
      row.line_number = line_number;
      row.params = RecurrenceParams{parse_integer(fields[0]), parse_integer(fields[1]),
                                    parse_integer(fields[2]), parse_integer(fields[3])};
      const Int n = parse_integer(fields[4]);
      if (n < 1) throw std::invalid_argument("n must be ≥ 1");
      if (n > Int((std::numeric_limits<std::size_t>::max)())) {
        throw std::invalid_argument("n does not fit in an addressable window");
      }
      row.n = n.convert_to<std::size_t>();
      rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      err << "line " << line_number << ": " << e.what() << "; skipped\n";
      ++skipped;
    }
  }

  // Rows are independent pure computations; farm them out and render in
  // input order afterwards so output is deterministic.
  std::vector<BatchOutcome> outcomes(rows.size());
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= rows.size()) break;
      const BatchRow& row = rows[index];
      try {
        const NormResult result = norm_horadam(row.params, row.n);
        if (opts.debug_oracle) {
          debug_check_against_oracle(to_rationals(generate(row.params, row.n).terms), result,
                                     opts);
        }
        outcomes[index].record = make_record(params_plain(row.params, row.n),
                                             params_json(row.params, row.n), result);
      } catch (const std::exception& e) {
        outcomes[index].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  bool any_numeric = false;
  bool csv_header_written = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BatchOutcome& outcome = outcomes[i];
    if (!outcome.record) {
      err << "line " << rows[i].line_number << ": " << outcome.error << "; skipped\n";
      ++skipped;
      continue;
    }
    if (!outcome.record->exact) any_numeric = true;
    if (opts.format == "json") {
      out << record_json(*outcome.record).dump() << "\n";
    } else if (opts.format == "csv") {
      if (!csv_header_written) {
        out << record_csv_header() << "\n";
        csv_header_written = true;
      }
      out << record_csv_line(*outcome.record) << "\n";
    } else {
      out << record_one_line(*outcome.record) << "\n";
    }
  }
  if (skipped > 0) return exit_input;
  return any_numeric ? exit_numeric : exit_ok;
}

}  // namespace cli_detail

/// Argument-vector front end (program name excluded), suitable for both
/// main() and in-process tests. Returns the documented exit codes only:
/// 0 exact success, 2 input error, 3 numeric-only answer, 4 formula
/// disagreement.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;

  CLI::App app{"Spectral norms of circulant matrices built from two-term integer recurrences"};
  app.name("horacirc");
  app.require_subcommand(1);

  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember(std::vector<std::string>{"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--tol", opts.tol, "Relative tolerance for numeric agreement checks")
      ->capture_default_str();
  app.add_option("--max-oracle-n", opts.max_oracle_n,
                 "Largest matrix order the iterative oracle will attempt")
      ->capture_default_str();
  app.add_flag("--debug-oracle", opts.debug_oracle,
               "Re-derive exact results through the iterative oracle");

  std::string a_text, b_text, p_text, q_text;
  long long n_value = 0;
  std::string row_text;
  std::string batch_path;

  auto add_params = [&](CLI::App* sub, bool required) {
    auto* a = sub->add_option("-a", a_text, "First initial term");
    auto* b = sub->add_option("-b", b_text, "Second initial term");
    auto* p = sub->add_option("-p", p_text, "Coefficient of the previous term");
    auto* q = sub->add_option("-q", q_text, "Coefficient of the term before that");
    auto* n = sub->add_option("-n", n_value, "Window length");
    if (required) {
      a->required();
      b->required();
      p->required();
      q->required();
      n->required();
    }
  };

  CLI::App* seq = app.add_subcommand("seq", "Print the first n terms of the recurrence");
  add_params(seq, true);
  CLI::App* sum = app.add_subcommand("sum", "Closed-form partial sum and the branch applied");
  add_params(sum, true);
  CLI::App* norm = app.add_subcommand(
      "norm", "Spectral norm of the circulant from a recurrence window or an explicit row");
  add_params(norm, false);
  norm->add_option("--row", row_text, "Comma-separated first row (integers, a/b, or decimals)");
  CLI::App* eig = app.add_subcommand("eig", "Eigenvalues of the circulant from an explicit row");
  eig->add_option("--row", row_text, "Comma-separated first row")->required();
  CLI::App* check =
      app.add_subcommand("check", "Cyclic autocorrelation certificate for an explicit row");
  check->add_option("--row", row_text, "Comma-separated first row")->required();
  CLI::App* compare = app.add_subcommand(
      "compare", "Certified norm, iterative oracle, and published formulas side by side");
  add_params(compare, true);
  CLI::App* batch =
      app.add_subcommand("batch", "Norms for every a,b,p,q,n row of a CSV file");
  batch->add_option("file", batch_path, "CSV file with header a,b,p,q,n")->required();
  for (CLI::App* sub : {seq, sum, norm, eig, check, compare, batch}) sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("horacirc");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    auto parse_params = [&]() -> std::pair<RecurrenceParams, std::size_t> {
      if (n_value < 1) throw std::invalid_argument("n must be ≥ 1");
      return {RecurrenceParams{parse_integer(a_text), parse_integer(b_text),
                               parse_integer(p_text), parse_integer(q_text)},
              static_cast<std::size_t>(n_value)};
    };
    if (app.got_subcommand(seq)) {
      const auto [params, n] = parse_params();
      return cmd_seq(params, n, opts, out);
    }
    if (app.got_subcommand(sum)) {
      const auto [params, n] = parse_params();
      return cmd_sum(params, n, opts, out);
    }
    if (app.got_subcommand(norm)) {
      const bool has_row = norm->count("--row") > 0;
      const bool has_params = norm->count("-a") + norm->count("-b") + norm->count("-p") +
                                  norm->count("-q") + norm->count("-n") >
                              0;
      if (has_row && has_params) {
        throw std::invalid_argument("give either -a/-b/-p/-q/-n or --row, not both");
      }
      if (has_row) {
        return cmd_norm(std::nullopt, parse_row(row_text), opts, out);
      }
      if (norm->count("-a") == 0 || norm->count("-b") == 0 || norm->count("-p") == 0 ||
          norm->count("-q") == 0 || norm->count("-n") == 0) {
        throw std::invalid_argument("norm needs all of -a, -b, -p, -q, -n, or --row");
      }
      return cmd_norm(parse_params(), std::nullopt, opts, out);
    }
    if (app.got_subcommand(eig)) {
      return cmd_eig(parse_row(row_text), opts, out);
    }
    if (app.got_subcommand(check)) {
      return cmd_check(parse_row(row_text), opts, out);
    }
    if (app.got_subcommand(compare)) {
      const auto [params, n] = parse_params();
      return cmd_compare(params, n, opts, out);
    }
    if (app.got_subcommand(batch)) {
      return cmd_batch(batch_path, opts, out, err);
    }
    throw std::invalid_argument("no subcommand given");
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return exit_input;
  }
}

}  // namespace horacirc

#endif  // HORACIRC_CLI_HPP
