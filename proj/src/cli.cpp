#include "framecurv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "framecurv/classify.hpp"
#include "framecurv/oracle.hpp"

namespace framecurv::cli {

namespace {

using Json = nlohmann::json;
using Report = nlohmann::ordered_json;

// Input parsing -------------------------------------------------------------

void expect_keys(const Json& obj, const std::string& where,
                 std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  for (std::string_view key : required) {
    if (!obj.contains(key)) throw InputError(where + ": missing field '" + std::string(key) + "'");
  }
  for (const auto& [key, _] : obj.items()) {
    const bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) throw InputError(where + ": unknown field '" + key + "'");
  }
}

double number_at(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(where + ": expected a finite number");
  return v;
}

std::array<std::string, 2> string_pair(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw InputError(where + ": expected an array of 2 expression strings");
  std::array<std::string, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    if (!j[i].is_string())
      throw InputError(where + "[" + std::to_string(i) + "]: expected an expression string");
    out[i] = j[i].get<std::string>();
  }
  return out;
}

Expr parse_component(const std::string& text, const Chart& chart, const std::string& where) {
  try {
    return parse_expr(text, chart.vars);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what() + " in \"" + text + "\"");
  }
}

// Command options -----------------------------------------------------------

struct Options {
  std::string input;
  std::string method;
  int grid = 21;
  int samples = 25;
  double tol = 1e-6;
  std::uint64_t seed = 42;
  std::string at;
};

const std::vector<std::string> kMethods = {"closed",     "pipeline",   "oracle",        "orthonormal",
                                           "orthogonal", "orthogonal-a11", "all"};

Point parse_at(const std::string& text, const Chart& chart) {
  std::map<std::string, double> bound;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--at: expected var=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw InputError("--at: bad value for '" + name + "'");
    }
    if (used != item.size() - eq - 1 || !std::isfinite(value))
      throw InputError("--at: bad value for '" + name + "'");
    if (std::find(chart.vars.begin(), chart.vars.end(), name) == chart.vars.end())
      throw InputError("--at: unknown variable '" + name + "'");
    if (!bound.emplace(name, value).second)
      throw InputError("--at: variable '" + name + "' given twice");
  }
  Point p{};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto it = bound.find(chart.vars[i]);
    if (it == bound.end()) throw InputError("--at: missing variable '" + chart.vars[i] + "'");
    p[i] = it->second;
  }
  return p;
}

bool is_orthonormal(const MetricConstants& m) { return m.a11 == -1.0 && m.a12 == 0.0 && m.a22 == 1.0; }

/// K at each point for one named method.
class Evaluator {
 public:
  Evaluator(const ManifoldInput& in, const SamplingOptions& sampling)
      : in_(in), sampling_(sampling) {}

  const StructuralFunctions& structure() {
    if (!structure_) structure_ = structural_functions(in_.frame, commutator(in_.frame), sampling_);
    return *structure_;
  }

  Expr expression(const std::string& method) {
    const auto& m = in_.metric;
    if (method == "closed") return k_closed_form(m, in_.frame, structure());
    if (method == "pipeline") return k_pipeline(m, in_.frame, sampling_);
    if (method == "orthonormal") {
      if (!is_orthonormal(m))
        throw InputError("--method orthonormal requires metric a11=-1, a12=0, a22=1");
      return k_orthonormal(in_.frame, structure());
    }
    if (method == "orthogonal" || method == "orthogonal-a11") {
      if (m.a12 != 0.0) throw InputError("--method " + method + " requires a12 = 0");
      return method == "orthogonal" ? k_orthogonal(m, in_.frame, structure())
                                    : k_orthogonal_a11(m, in_.frame, structure());
    }
    if (method == "oracle") {
      const CurvatureOracle oracle(in_.frame, m);
      return simplify(oracle.numerator() / oracle.metric().det_g);
    }
    throw InputError("unknown method '" + method + "'");
  }

  std::vector<double> values(const std::string& method, const std::vector<Point>& points) {
    std::vector<double> out;
    out.reserve(points.size());
    if (method == "oracle") {
      check_frame(in_.frame, sampling_);
      const CurvatureOracle oracle(in_.frame, in_.metric);
      for (const Point& p : points) out.push_back(oracle.at(p));
    } else {
      for (const Sample& s : eval_at(expression(method), points)) out.push_back(s.value);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!std::isfinite(out[i]))
        throw DomainError("method '" + method + "' produced a non-finite value",
                          {points[i][0], points[i][1]});
    }
    return out;
  }

 private:
  const ManifoldInput& in_;
  SamplingOptions sampling_;
  std::optional<StructuralFunctions> structure_;
};

std::vector<std::string> expand_methods(const std::string& method, const MetricConstants& m) {
  if (method != "all") return {method};
  std::vector<std::string> out{"closed", "pipeline", "oracle"};
  if (is_orthonormal(m)) out.push_back("orthonormal");
  if (m.a12 == 0.0 && m.a11 != 0.0 && m.a22 != 0.0) out.push_back("orthogonal");
  return out;
}

double relative_deviation(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double max_pairwise_deviation(const std::vector<std::vector<double>>& columns) {
  double worst = 0.0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      for (std::size_t p = 0; p < columns[i].size(); ++p)
        worst = std::max(worst, relative_deviation(columns[i][p], columns[j][p]));
    }
  }
  return worst;
}

Report summary(const std::vector<double>& values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  Report r;
  r["min"] = *lo;
  r["max"] = *hi;
  r["mean"] = sum / static_cast<double>(values.size());
  return r;
}

Report points_json(const std::vector<Point>& points) {
  Report arr = Report::array();
  for (const Point& p : points) arr.push_back({p[0], p[1]});
  return arr;
}

Report header(const std::string& command, const ManifoldInput& in) {
  Report r;
  r["command"] = command;
  r["vars"] = {in.frame.chart.vars[0], in.frame.chart.vars[1]};
  r["metric"] = {{"a11", in.metric.a11}, {"a12", in.metric.a12}, {"a22", in.metric.a22}};
  r["lorentzian"] = in.lorentzian();
  return r;
}

Report diagnostics_for(const std::vector<std::string>& methods) {
  Report d = Report::array();
  if (std::find(methods.begin(), methods.end(), "orthogonal-a11") != methods.end()) {
    d.push_back(
        "orthogonal-a11 divides by a11 only; it differs from the closed form by the factor a22 "
        "whenever a22 != 1");
  }
  return d;
}

std::vector<Point> sample_points(const Options& opt, const Chart& chart, bool random) {
  if (!opt.at.empty()) return {parse_at(opt.at, chart)};
  return random ? random_points(chart, opt.samples, opt.seed) : grid_points(chart, opt.grid);
}

int cmd_compute(const Options& opt, const ManifoldInput& in, std::ostream& out, std::ostream& err) {
  const auto methods = expand_methods(opt.method.empty() ? "closed" : opt.method, in.metric);
  Evaluator ev(in, {opt.grid, 20, opt.seed});
  const auto points = sample_points(opt, in.frame.chart, false);
  Report report = header("compute", in);
  report["grid"] = opt.at.empty() ? Report(opt.grid) : Report(nullptr);
  report["points"] = points_json(points);
  Report per_method;
  std::vector<std::vector<double>> columns;
  for (const auto& m : methods) {
    columns.push_back(ev.values(m, points));
    Report entry;
    entry["values"] = columns.back();
    entry["summary"] = summary(columns.back());
    per_method[m] = std::move(entry);
  }
  report["methods"] = std::move(per_method);
  report["agreement"] = max_pairwise_deviation(columns);
  report["diagnostics"] = diagnostics_for(methods);
  for (const auto& d : report["diagnostics"]) err << "framecurv: warning: " << d.get<std::string>() << '\n';
  out << report.dump(2) << '\n';
  return kOk;
}

int cmd_check(const Options& opt, const ManifoldInput& in, std::ostream& out, std::ostream& err) {
  const std::vector<std::string> methods{"closed", "pipeline", "oracle"};
  Evaluator ev(in, {opt.grid, 20, opt.seed});
  const auto points = sample_points(opt, in.frame.chart, true);
  std::vector<std::vector<double>> columns;
  for (const auto& m : methods) columns.push_back(ev.values(m, points));

  Report report = header("check", in);
  report["samples"] = points.size();
  report["seed"] = opt.seed;
  report["tol"] = opt.tol;
  Report pairs;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = i + 1; j < methods.size(); ++j)
      pairs[methods[i] + "/" + methods[j]] = max_pairwise_deviation({columns[i], columns[j]});
  }
  const double agreement = max_pairwise_deviation(columns);
  report["pairwise"] = std::move(pairs);
  report["agreement"] = agreement;
  const bool passed = agreement <= opt.tol;
  report["passed"] = passed;
  report["points"] = points_json(points);
  Report per_method;
  for (std::size_t i = 0; i < methods.size(); ++i) per_method[methods[i]] = columns[i];
  report["values"] = std::move(per_method);
  out << report.dump(2) << '\n';
  err << "framecurv: check " << (passed ? "passed" : "FAILED") << ": max relative deviation "
      << agreement << (passed ? " <= " : " > ") << opt.tol << '\n';
  return passed ? kOk : kCheckFailure;
}

int cmd_classify(const Options& opt, const ManifoldInput& in, std::ostream& out, std::ostream& err) {
  const std::string method = opt.method.empty() ? "closed" : opt.method;
  if (method == "all") throw InputError("classify takes a single --method");
  Evaluator ev(in, {opt.grid, 20, opt.seed});
  const auto points = sample_points(opt, in.frame.chart, false);
  const auto values = ev.values(method, points);
  const ClassificationVerdict v = classify(values, in.lorentzian(), opt.tol);

  Report report;
  report["command"] = "classify";
  report["kind"] = to_string(v.kind);
  report["kValue"] = v.k_value ? Report(*v.k_value) : Report(nullptr);
  report["spread"] = v.spread;
  report["constant"] = v.constant;
  report["lorentzian"] = in.lorentzian();
  report["method"] = method;
  report["samples"] = values.size();
  report["tol"] = opt.tol;
  out << report.dump(2) << '\n';
  err << "framecurv: " << to_string(v.kind) << '\n';
  return kOk;
}

int cmd_simplify(const Options& opt, const ManifoldInput& in, std::ostream& out, std::ostream&) {
  const std::string method = opt.method.empty() ? "closed" : opt.method;
  if (method == "all") throw InputError("simplify takes a single --method");
  Evaluator ev(in, {opt.grid, 20, opt.seed});
  const Expr k = simplify(ev.expression(method));
  Report report = header("simplify", in);
  report["method"] = method;
  report["K"] = to_string(k);
  report["nodes"] = node_count(k);
  out << report.dump(2) << '\n';
  return kOk;
}

std::string read_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (f == nullptr) throw InputError("cannot open '" + path + "'");
  std::string data;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) data.append(buf, n);
  std::fclose(f);
  return data;
}

Report point_json(const std::vector<double>& p, const ManifoldInput* in) {
  if (p.size() != 2 || in == nullptr) return p;
  Report r;
  r[in->frame.chart.vars[0]] = p[0];
  r[in->frame.chart.vars[1]] = p[1];
  return r;
}

void report_error(std::ostream& out, std::ostream& err, std::string_view type,
                  const std::string& message, const Report& extra = Report()) {
  Report r;
  r["error"] = {{"type", type}, {"message", message}};
  if (!extra.is_null()) r["error"]["point"] = extra;
  out << r.dump(2) << '\n';
  err << "framecurv: " << type << " error: " << message << '\n';
}

}  // namespace

ManifoldInput parse_input(std::string_view bytes) {
  Json doc;
  try {
    doc = Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  expect_keys(doc, "input", {"vars", "domain", "frame", "metric"});

  const Json& vars = doc["vars"];
  if (!vars.is_array() || vars.size() != 2 || !vars[0].is_string() || !vars[1].is_string())
    throw InputError("vars: expected an array of 2 identifiers");
  Chart chart;
  chart.vars = {vars[0].get<std::string>(), vars[1].get<std::string>()};
  try {
    // Reuse the expression parser's identifier rules.
    (void)parse_expr("0", chart.vars);
  } catch (const ParseError& e) {
    throw InputError(std::string("vars: ") + e.detail());
  }

  const Json& domain = doc["domain"];
  expect_keys(domain, "domain", {chart.vars[0], chart.vars[1]});
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string where = "domain." + chart.vars[i];
    const Json& iv = domain[chart.vars[i]];
    if (!iv.is_array() || iv.size() != 2) throw InputError(where + ": expected [lo, hi]");
    chart.domain[i] = {number_at(iv[0], where + "[0]"), number_at(iv[1], where + "[1]")};
    if (!(chart.domain[i].lo < chart.domain[i].hi)) throw InputError(where + ": need lo < hi");
  }

  const Json& frame = doc["frame"];
  expect_keys(frame, "frame", {"X1", "X2"});
  const auto x1 = string_pair(frame["X1"], "frame.X1");
  const auto x2 = string_pair(frame["X2"], "frame.X2");
  VectorField f1{{parse_component(x1[0], chart, "frame.X1[0]"),
                  parse_component(x1[1], chart, "frame.X1[1]")}};
  VectorField f2{{parse_component(x2[0], chart, "frame.X2[0]"),
                  parse_component(x2[1], chart, "frame.X2[1]")}};

  const Json& metric = doc["metric"];
  expect_keys(metric, "metric", {"a11", "a12", "a22"}, {"a21"});
  MetricConstants m{number_at(metric["a11"], "metric.a11"), number_at(metric["a12"], "metric.a12"),
                    number_at(metric["a22"], "metric.a22")};
  if (metric.contains("a21") && number_at(metric["a21"], "metric.a21") != m.a12)
    throw InputError("metric.a21: must equal a12 (the pairing is symmetric)");
  if (m.degenerate()) throw InputError("metric: degenerate constants, det = a11*a22 - a12^2 = 0");

  return ManifoldInput{ChartFrame{std::move(chart), std::move(f1), std::move(f2)}, m};
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sectional curvature of a surface from a frame with constant pairings", "framecurv"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_method) {
    sub->add_option("-i,--input", opt.input, "Manifold description (JSON)")->required();
    if (with_method)
      sub->add_option("--method", opt.method, "Curvature method")->check(CLI::IsMember(kMethods));
    sub->add_option("--grid", opt.grid, "Grid points per axis")->check(CLI::Range(2, 100000));
    sub->add_option("--tol", opt.tol, "Tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "Random-sample seed");
    sub->add_option("--at", opt.at, "Single point, e.g. \"phi=0,theta=0.5\"");
  };
  auto* compute = app.add_subcommand("compute", "Evaluate K per method on the grid");
  add_common(compute, true);
  auto* check = app.add_subcommand("check", "Closed form vs pipeline vs coordinate oracle");
  add_common(check, false);
  check->add_option("--samples", opt.samples, "Random interior points")->check(CLI::Range(1, 1000000));
  auto* classify_cmd = app.add_subcommand("classify", "Name the constant-curvature model space");
  add_common(classify_cmd, true);
  auto* simplify_cmd = app.add_subcommand("simplify", "Print the simplified K expression");
  add_common(simplify_cmd, true);

  std::vector<const char*> argv{"framecurv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::optional<ManifoldInput> parsed;
  try {
    parsed = parse_input(read_file(opt.input));
    const ManifoldInput& in = *parsed;
    if (compute->parsed()) return cmd_compute(opt, in, out, err);
    if (check->parsed()) return cmd_check(opt, in, out, err);
    if (classify_cmd->parsed()) return cmd_classify(opt, in, out, err);
    return cmd_simplify(opt, in, out, err);
  } catch (const DomainError& e) {
    report_error(out, err, "domain", e.what(), point_json(e.point(), parsed ? &*parsed : nullptr));
    return kDomainError;
  } catch (const Error& e) {
    report_error(out, err, "input", e.what());
    return kInputError;
  }
}

}  // namespace framecurv::cli
