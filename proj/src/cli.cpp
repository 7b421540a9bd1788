#include "fewnomial/cli.hpp"

#include "fewnomial/binomial.hpp"
#include "fewnomial/bounds.hpp"
#include "fewnomial/lattice.hpp"
#include "fewnomial/parse.hpp"
#include "fewnomial/polytope.hpp"
#include "fewnomial/roots1d.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace fewnomial::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input files that cannot be read are reported like malformed input.
std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json integer(const BigInt& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return z.convert_to<std::int64_t>();
  return z.str();
}

Json rational(const Rational& q) {
  return Json{{"num", integer(mp::numerator(q))}, {"den", integer(mp::denominator(q))}};
}

std::string decimal(const Real& x, int digits, char rounding = 'N') {
  const std::string fmt = std::string("%.*R") + rounding + "e";
  const int n = mpfr_snprintf(nullptr, 0, fmt.c_str(), digits - 1, x.backend().data());
  std::string buf(static_cast<std::size_t>(n) + 1, '\0');
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), digits - 1, x.backend().data());
  buf.resize(static_cast<std::size_t>(n));
  return buf;
}

// Value printed to `digits` significant digits, and a radius rounded up
// that also absorbs the decimal rounding of the value.
Json interval(const Real& value, const Real& radius, int digits) {
  const unsigned bits = std::max(precision_bits(value), precision_bits(radius)) + 64;
  Real slack = real_zero(bits);
  if (value != 0) {
    long e = 0;
    mpfr_get_d_2exp(&e, value.backend().data(), MPFR_RNDN);
    // Half a unit in the last printed decimal place, bounded above by a power of two.
    const long shift = e + 1 - static_cast<long>(std::floor((digits - 1) * 3.32192809488736));
    slack = to_real(1L, bits);
    mpfr_mul_2si(slack.backend().data(), slack.backend().data(), shift, MPFR_RNDU);
  }
  const Real r = with_precision(radius, bits) + slack;
  return Json{{"value", decimal(value, digits)}, {"radius", decimal(r, 6, 'U')}};
}

int digits_for(const Rational& R, const Rational& eps) {
  const double span = std::log10(std::max(R.convert_to<double>(), 1.0)) -
                      std::log10(eps.convert_to<double>());
  return std::max(20, static_cast<int>(std::ceil(span)) + 4);
}

Json bound_report(const BoundReport& r) {
  Json bounds = Json::object();
  for (const auto& e : r.entries)
    bounds[std::string(key(e.kind))] = Json{{"value", rational(e.value)},
                                            {"applicable", e.applicable},
                                            {"conditional", e.conditional},
                                            {"note", e.note}};
  return Json{{"n", r.n},         {"p", r.p},
              {"s", r.s},         {"k", r.k},
              {"degree", r.degree}, {"volume_q", rational(r.volume_q)},
              {"bounds", bounds}, {"smallest", std::string(key(r.smallest))}};
}

Json int_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(integer(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json envelope() { return Json{{"schema", "1"}}; }

struct Options {
  unsigned precision_bits = 0;

  std::vector<std::string> systems;
  std::vector<std::string> equations, inequalities;
  long num_vars = 0;

  std::string f, R, eps;
  bool budget_check = false;

  std::string input, inline_json;
  std::string matrix;
  std::string points;
};

SparseSystem inline_system(const Options& o) {
  Index n = o.num_vars;
  if (n == 0) {
    for (const auto& s : o.equations) n = std::max(n, parse_polynomial(s).num_vars());
    for (const auto& s : o.inequalities) n = std::max(n, parse_polynomial(s).num_vars());
  }
  SparseSystem sys{std::max<Index>(n, 1), {}, {}};
  for (const auto& s : o.equations) sys.equations.push_back(parse_polynomial(s, sys.num_vars));
  for (const auto& s : o.inequalities) sys.inequalities.push_back(parse_polynomial(s, sys.num_vars));
  return sys;
}

Json cmd_bound(const Options& o) {
  std::vector<std::pair<std::string, SparseSystem>> inputs;
  for (const auto& path : o.systems) inputs.push_back({path, parse_system_json(read_file(path))});
  if (!o.equations.empty() || !o.inequalities.empty()) inputs.push_back({"", inline_system(o)});
  if (inputs.empty()) throw Error(ErrorCode::ParseError, "bound needs --system or --equation/--inequality");

  std::vector<std::future<BoundReport>> jobs;
  for (const auto& in : inputs) {
    const SparseSystem* sys = &in.second;
    jobs.push_back(std::async(std::launch::async, [sys] { return compare_bounds(*sys); }));
  }
  std::vector<Json> reports;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Json r = Json::object();
    if (!inputs[i].first.empty()) r["system"] = inputs[i].first;
    r.update(bound_report(jobs[i].get()));
    reports.push_back(std::move(r));
  }
  Json out = envelope();
  if (reports.size() == 1) out.update(reports.front());
  else out["reports"] = reports;
  return out;
}

Json cmd_solve_ksum(const Options& o) {
  SolveRequest req;
  req.f = parse_ksum(o.f);
  req.R = parse_rational(o.R);
  req.epsilon = parse_rational(o.eps);
  req.budget_check = o.budget_check;
  req.precision_bits = o.precision_bits;

  Json out = envelope();
  out["f"] = format_ksum(req.f);
  out["terms"] = req.f.size();
  out["sign_alternations"] = sign_alternations(req.f);
  out["degree"] = rational(degree(req.f));
  out["R"] = rational(req.R);
  out["epsilon"] = rational(req.epsilon);
  const auto root = solve_one_alternation(req);
  out["root_count"] = root ? 1 : 0;
  if (!root) {
    out["root"] = nullptr;
    return out;
  }
  Json r = interval(root->value, root->radius, digits_for(req.R, req.epsilon));
  r["near_zero"] = root->near_zero;
  r["bisection_steps"] = root->bisection_steps;
  r["newton_steps"] = root->newton_steps;
  r["evaluations"] = root->evaluations;
  r["evaluation_budget"] = std::floor(evaluation_budget(req.f, req.R, req.epsilon));
  r["precision_bits"] = root->precision_bits;
  r["precision_restarts"] = root->precision_restarts;
  out["root"] = r;
  return out;
}

Json cmd_solve_binomial(const Options& o) {
  std::string text = o.inline_json;
  if (!o.input.empty()) text = read_file(o.input);
  if (text.empty()) throw Error(ErrorCode::ParseError, "solve-binomial needs --input or --json");
  BinomialSystem sys = parse_binomial_json(text);
  sys.precision_bits = o.precision_bits;
  sys.validate();

  Json out = envelope();
  out["n"] = sys.D.rows();
  out["complex_root_count"] = integer(complex_root_count(sys.D));
  const auto snf = smith_normal_form(sys.D);
  Json diag = Json::array();
  for (Index i = 0; i < snf.D.rows(); ++i) diag.push_back(integer(snf.D(i, i)));
  out["snf_diagonal"] = diag;

  const int digits = digits_for(sys.R, sys.epsilon);
  Json roots = Json::array();
  for (const auto& root : solve_wedge(sys)) {
    Json coords = Json::array();
    for (std::size_t j = 0; j < root.coords.size(); ++j)
      coords.push_back(interval(root.coords[j], root.radius[j], digits));
    roots.push_back(Json{{"coords", coords}, {"precision_bits", root.precision_bits}});
  }
  out["roots"] = roots;
  return out;
}

Json cmd_snf(const Options& o) {
  const std::string text = !o.input.empty() ? read_file(o.input) : o.matrix;
  if (text.empty()) throw Error(ErrorCode::ParseError, "snf needs --matrix or --input");
  const IntMatrix A = parse_matrix(text);
  const auto s = smith_normal_form(A);
  Json diag = Json::array();
  for (Index i = 0; i < s.D.rows(); ++i) diag.push_back(integer(s.D(i, i)));
  Json out = envelope();
  out["A"] = int_matrix(A);
  out["D"] = diag;
  out["U"] = int_matrix(s.U);
  out["V"] = int_matrix(s.V);
  out["det"] = integer(determinant(A));
  out["h_A"] = s.h_A;
  out["h_U"] = s.h_U;
  out["h_V"] = s.h_V;
  out["h_reference"] = s.h_reference;
  return out;
}

Json cmd_volume(const Options& o) {
  Polytope P = [&] {
    if (!o.points.empty()) {
      const RationalMatrix m = parse_rational_matrix(o.points);
      std::vector<Point> pts;
      for (Index i = 0; i < m.rows(); ++i) pts.push_back(m.row(i).transpose());
      return Polytope(pts, m.cols());
    }
    if (!o.systems.empty()) return support_hull(parse_system_json(read_file(o.systems.front())));
    throw Error(ErrorCode::ParseError, "volume needs --points or --system");
  }();
  Json verts = Json::array();
  for (const auto& v : P.vertices()) {
    Json row = Json::array();
    for (Index i = 0; i < v.size(); ++i) row.push_back(rational(v(i)));
    verts.push_back(row);
  }
  Json out = envelope();
  out["ambient_dim"] = P.ambient_dim();
  out["dimension"] = P.dimension();
  out["vertices"] = verts;
  out["normalized_volume"] = rational(P.normalized_volume());
  return out;
}

int report_error(std::ostream& err, const std::string& code, const std::string& message, int exit_code) {
  Json e = envelope();
  e["error"] = Json{{"code", code}, {"message", message}};
  err << e.dump() << "\n";
  return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fewnomial bounds, certified k-sum roots and binomial systems", "fewnomial"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--precision-bits", o.precision_bits, "Starting working precision for the solvers")
      ->check(CLI::Range(16u, 1u << 20));

  auto* bound = app.add_subcommand("bound", "Compare component bounds for a semi-algebraic system");
  bound->add_option("--system", o.systems, "System JSON file (repeat for a batch)");
  bound->add_option("--equation", o.equations, "Inline equation f = 0");
  bound->add_option("--inequality", o.inequalities, "Inline inequality f > 0");
  bound->add_option("--n", o.num_vars, "Variable count for inline polynomials")->check(CLI::PositiveNumber);

  auto* ksum = app.add_subcommand("solve-ksum", "Certified root of a one-alternation k-sum in (0, R)");
  ksum->add_option("--f", o.f, "k-sum, e.g. \"47*x^2.53 - 10.3*x^0.9 - 3\"")->required();
  ksum->add_option("--R", o.R, "Right end of the search interval")->required();
  ksum->add_option("--eps", o.eps, "Absolute accuracy")->required();
  ksum->add_flag("--budget-check", o.budget_check, "Fail if the evaluation budget is exceeded");

  auto* bin = app.add_subcommand("solve-binomial", "Binomial system root in the orthant wedge");
  bin->add_option("--input", o.input, "JSON file {D, c, R, epsilon}");
  bin->add_option("--json", o.inline_json, "Inline JSON {D, c, R, epsilon}");

  auto* snf = app.add_subcommand("snf", "Smith normal form with unimodular transforms");
  snf->add_option("--matrix", o.matrix, "Rows separated by ';', e.g. \"2 0; 0 3\"");
  snf->add_option("--input", o.input, "File with whitespace-separated rows");

  auto* vol = app.add_subcommand("volume", "Normalized volume of a convex hull");
  vol->add_option("--points", o.points, "Points as rows, e.g. \"0 0; 5 0; 0 3\"");
  vol->add_option("--system", o.systems, "System JSON file; uses the support hull")->expected(1);

  for (auto* sub : {bound, ksum, bin, snf, vol}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "UsageError", e.what(), kExitParse);
  }

  try {
    Json result;
    if (bound->parsed()) result = cmd_bound(o);
    else if (ksum->parsed()) result = cmd_solve_ksum(o);
    else if (bin->parsed()) result = cmd_solve_binomial(o);
    else if (snf->parsed()) result = cmd_snf(o);
    else result = cmd_volume(o);
    out << result.dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::ParseError ? kExitParse : kExitSolver;
    return report_error(err, std::string(to_string(e.code())), e.what(), code);
  }
}

}  // namespace fewnomial::cli
