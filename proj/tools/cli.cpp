#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <sstream>

#include "digspec/arc_list.hpp"
#include "digspec/closed_forms.hpp"
#include "digspec/determination.hpp"
#include "digspec/random.hpp"
#include "digspec/verification.hpp"

namespace digspec::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kFormulaTolerance = 1e-8;

// 12 significant digits; the JSON writer then emits the shortest form.
double sig12(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

std::string fmt12(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json values_json(const std::vector<double>& values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(sig12(v));
  return arr;
}

Json arcs_json(const Digraph& d) {
  Json arr = Json::array();
  for (const Arc& arc : d.arcs()) arr.push_back(Json::array({arc.tail, arc.head}));
  return arr;
}

struct Options {
  std::string matrix = "L";
  std::string family;
  std::string target;
  std::optional<int> n;
  std::optional<int> x;
  std::optional<int> y;
  std::string input;
  std::string out;
  std::string format = "json";
  std::string suite = "all";
  std::optional<int> n_max;
  int jobs = 1;
  bool unpruned = false;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Digraph family_digraph(Shape shape, const Options& opt) {
  if (shape == Shape::Star) {
    if (!opt.x || !opt.y) throw InputError("star needs --x and --y");
    if (opt.n && *opt.n != *opt.x + *opt.y + 1) throw InputError("--n must equal x + y + 1 for a star");
    return oriented_star(*opt.x, *opt.y);
  }
  if (!opt.n) throw InputError("--n is required");
  return shape == Shape::Path ? directed_path(*opt.n) : directed_cycle(*opt.n);
}

// --- spectrum ---------------------------------------------------------------

int cmd_spectrum(const Options& opt, std::ostream& out) {
  if (opt.input.empty()) throw InputError("--input is required");
  const Digraph d = read_arc_list(opt.input);
  const MatrixKind kind = parse_kind(opt.matrix);
  const auto spectrum = singular_values(d, kind);
  const std::int64_t arcs = static_cast<std::int64_t>(d.arc_count());
  const std::int64_t zg = zagreb_plus(d);
  const double expected = kind == MatrixKind::Adjacency ? static_cast<double>(arcs) : static_cast<double>(zg + arcs);
  const double residual = std::abs(spectrum.sum_of_squares() - expected);

  if (opt.format == "csv") {
    out << "matrix,index,singular_value\n";
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      out << kind_symbol(kind) << ',' << i + 1 << ',' << fmt12(spectrum.values[i]) << '\n';
    }
    out << kind_symbol(kind) << ",trace_norm," << fmt12(spectrum.sum()) << '\n';
    return kOk;
  }
  Json record;
  record["n"] = d.order();
  record["matrix"] = std::string(kind_symbol(kind));
  record["arcs"] = arcs;
  record["zagreb_plus"] = zg;
  record["singular_values"] = values_json(spectrum.values);
  record["trace_norm"] = sig12(spectrum.sum());
  record["trace_identity_residual"] = sig12(residual);
  out << record.dump(2) << '\n';
  return kOk;
}

// --- closed-form ------------------------------------------------------------

int cmd_closed_form(const Options& opt, std::ostream& out) {
  const Shape shape = parse_shape(opt.family);
  const MatrixKind kind = parse_kind(opt.matrix);
  const Digraph d = family_digraph(shape, opt);
  const int n = d.order();

  Json record;
  std::vector<double> values;
  double trace = 0.0;
  std::optional<double> single_root;
  if (kind == MatrixKind::Adjacency) {
    std::optional<StarParams> params;
    if (shape == Shape::Star) params = StarParams{*opt.x, *opt.y};
    const auto spectrum = adjacency_formula(shape, n, params);
    values = spectrum.values;
    trace = spectrum.sum();
    record["family"] = std::string(shape_name(shape)) + "-A";
  } else {
    FormulaResult formula;
    if (shape == Shape::Star) {
      formula = star_formula(*opt.x, *opt.y);
      if (*opt.y >= 1) single_root = star_single_root_trace_norm(*opt.x, *opt.y);
    } else if (shape == Shape::Cycle) {
      formula = kind == MatrixKind::Laplacian ? laplacian_cycle_formula(n) : signless_cycle_formula(n);
    } else {
      formula = kind == MatrixKind::Laplacian ? laplacian_path_formula(n) : signless_path_formula(n);
    }
    values = formula.spectrum.values;
    trace = formula.trace_norm;
    record["family"] = std::string(family_name(formula.family));
  }
  const auto numeric = singular_values<long double>(d, kind);
  double deviation = numeric.size() == values.size() ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < numeric.size() && i < values.size(); ++i) {
    deviation = std::max(deviation, static_cast<double>(std::abs(numeric.values[i] - values[i])));
  }

  record["matrix"] = std::string(kind_symbol(kind));
  record["n"] = n;
  if (shape == Shape::Star) {
    record["params"] = Json{{"x", *opt.x}, {"y", *opt.y}};
  } else {
    record["params"] = nullptr;
  }
  record["singular_values"] = values_json(values);
  record["trace_norm"] = sig12(trace);
  if (single_root) {
    record["single_root_trace_norm"] = sig12(*single_root);
    record["single_root_gap"] = sig12(trace - *single_root);
  }
  record["numeric_max_abs_diff"] = deviation;
  out << record.dump(2) << '\n';
  return deviation <= kFormulaTolerance ? kOk : kVerificationFailed;
}

// --- verify -----------------------------------------------------------------

void print_suite(const SuiteResult& suite, std::ostream& out) {
  out << "[" << suite.suite << "]\n";
  for (const auto& row : suite.rows) {
    out << (row.passed ? "  PASS  " : "  FAIL  ") << std::left << std::setw(64) << row.name << "  value "
        << fmt12(row.value) << "  limit " << fmt12(row.limit);
    if (!row.note.empty()) out << "  (" << row.note << ")";
    out << '\n';
  }
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = seed_from_env();
  const std::string& suite = opt.suite;
  const bool all = suite == "all";
  if (!all && suite != "identities" && suite != "fixtures" && suite != "bipartite" && suite != "interlacing") {
    throw InputError("unknown suite '" + suite + "'");
  }
  if (opt.n_max && *opt.n_max < 2) throw InputError("--n-max must be at least 2");
  if (opt.n_max && suite == "identities" && *opt.n_max > 1000) throw InputError("--n-max is at most 1000 for identities");
  if (opt.n_max && suite == "bipartite" && *opt.n_max > 12) throw InputError("--n-max is at most 12 for bipartite");

  std::vector<SuiteResult> results;
  if (all || suite == "identities") results.push_back(identities_suite(std::min(opt.n_max.value_or(1000), 1000), seed));
  if (all || suite == "fixtures") results.push_back(fixtures_suite());
  if (all || suite == "bipartite") results.push_back(bipartite_suite(std::min(opt.n_max.value_or(12), 12), 1000, seed));
  if (all || suite == "interlacing") results.push_back(interlacing_suite(1000, seed));

  out << "seed " << seed << '\n';
  const CheckRow* failure = nullptr;
  std::string failed_suite;
  for (const auto& r : results) {
    print_suite(r, out);
    if (!failure && r.first_failure()) {
      failure = r.first_failure();
      failed_suite = r.suite;
    }
  }
  if (failure) {
    err << "verification failed: [" << failed_suite << "] " << failure->name << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

// --- cospectral -------------------------------------------------------------

int cmd_cospectral(const Options& opt, std::ostream& out, std::ostream& err) {
  const MatrixKind kind = parse_kind(opt.matrix);
  Digraph target;
  std::optional<Shape> shape;
  if (opt.target == "file") {
    if (opt.input.empty()) throw InputError("--target file needs --input");
    target = read_arc_list(opt.input);
  } else {
    if (opt.target == "cycle") shape = Shape::Cycle;
    else if (opt.target == "path") shape = Shape::Path;
    else if (opt.target == "outstar") shape = Shape::Star;
    else throw InputError("unknown target '" + opt.target + "'");
    if (!opt.n) throw InputError("--n is required");
    target = named_target(*shape, *opt.n);
  }
  if (opt.jobs < 1) throw InputError("--jobs must be positive");

  SearchOptions search;
  search.prune = !opt.unpruned;
  search.jobs = opt.jobs;
  search.progress = [&err](const SearchProgress& p) {
    err << "progress: examined " << p.examined << " / " << p.total << ", spectrum matches " << p.survivors << '\n';
  };
  const CospectralReport report = cospectral_mates(target, kind, search);

  Json record;
  record["target"] = Json{{"n", target.order()}, {"arcs", arcs_json(target)}};
  record["kind"] = std::string(kind_symbol(kind));
  record["target_singular_values"] = values_json(report.target_spectrum.values);
  record["pruned"] = report.pruned;
  record["max_arcs"] = report.max_arcs;
  Json mates = Json::array();
  for (const Digraph& mate : report.mates) mates.push_back(Json{{"n", mate.order()}, {"arcs", arcs_json(mate)}});
  record["mates"] = std::move(mates);
  record["candidates_examined"] = report.candidates_examined;
  record["candidates_after_trace_filter"] = report.candidates_after_trace_filter;
  record["candidates_after_sigma1_filter"] = report.candidates_after_sigma1_filter;
  record["elapsed_seconds"] = sig12(report.elapsed.count());

  int status = kOk;
  if (shape) {
    const bool met = meets_expectation(*shape, target.order(), report);
    record["expectation"] = kind == MatrixKind::Adjacency && !expected_adjacency_mates(*shape, target.order()).empty()
                                ? "contains known mate"
                                : "no mates";
    record["expectation_met"] = met;
    if (!met) status = kVerificationFailed;
  }
  out << record.dump(2) << '\n';
  return status;
}

// --- generate ---------------------------------------------------------------

int cmd_generate(const Options& opt, std::ostream& out) {
  const Digraph d = family_digraph(parse_shape(opt.family), opt);
  if (opt.out.empty()) {
    write_arc_list(out, d);
  } else {
    write_arc_list(opt.out, d);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singular values and trace norms of digraph matrices", "digspec"};
  app.require_subcommand(1);
  Options opt;

  auto* spectrum = app.add_subcommand("spectrum", "Singular values of A, L or Q for an arc-list file");
  spectrum->add_option("--input", opt.input, "Arc-list file")->required();
  spectrum->add_option("--matrix", opt.matrix, "A, L or Q");
  spectrum->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* closed = app.add_subcommand("closed-form", "Closed-form spectrum with a numeric cross-check");
  closed->add_option("--family", opt.family, "path, cycle or star")->required();
  closed->add_option("--matrix", opt.matrix, "A, L or Q");
  closed->add_option("--n", opt.n, "Order");
  closed->add_option("--x", opt.x, "Star out-arcs");
  closed->add_option("--y", opt.y, "Star in-arcs");

  auto* verify = app.add_subcommand("verify", "Identity, fixture, bipartite and interlacing checks");
  verify->add_option("--suite", opt.suite, "identities, fixtures, bipartite, interlacing or all");
  verify->add_option("--n-max", opt.n_max, "Largest order for the sweeps");

  auto* cospectral = app.add_subcommand("cospectral", "Exhaustive cospectral-mate search");
  cospectral->add_option("--target", opt.target, "cycle, path, outstar or file")->required();
  cospectral->add_option("--matrix,--kind", opt.matrix, "A, L or Q");
  cospectral->add_option("--n", opt.n, "Order");
  cospectral->add_option("--input", opt.input, "Arc-list file for --target file");
  cospectral->add_option("--jobs", opt.jobs, "Worker threads");
  cospectral->add_flag("--unpruned", opt.unpruned, "Skip the arc, trace and sigma_1 filters");

  auto* generate = app.add_subcommand("generate", "Write a family member as an arc-list file");
  generate->add_option("--family", opt.family, "path, cycle or star")->required();
  generate->add_option("--n", opt.n, "Order");
  generate->add_option("--x", opt.x, "Star out-arcs");
  generate->add_option("--y", opt.y, "Star in-arcs");
  generate->add_option("--out", opt.out, "Output path (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(opt, out);
    if (closed->parsed()) return cmd_closed_form(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (cospectral->parsed()) return cmd_cospectral(opt, out, err);
    if (generate->parsed()) return cmd_generate(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Internal || e.code() == ErrorCode::NoConvergence ? kVerificationFailed : kInputError;
  }
  return kInputError;
}

}  // namespace digspec::cli
