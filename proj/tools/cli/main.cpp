#include <cctype>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "dimfree/dimfree.hpp"
#include "expr.hpp"
#include "sim_spec.hpp"

using namespace dimfree;
using nlohmann::json;

namespace {

// 0 ok, 1 check failure, 2 usage/parse/shape/file error, 3 numeric failure.
constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2, kNumeric = 3;

struct Globals {
  double tol = kDefaultTol;
  bool weighted = true;
  bool unweighted = false;
  std::uint64_t seed = 42;
  bool json = false;
};

json to_json(const Mat& A) {
  json rows = json::array();
  for (Index i = 0; i < A.rows(); ++i) {
    json r = json::array();
    for (Index j = 0; j < A.cols(); ++j) r.push_back(A(i, j));
    rows.push_back(std::move(r));
  }
  return {{"rows", A.rows()}, {"cols", A.cols()}, {"data", std::move(rows)}};
}

json to_json(const HVec& x) { return std::vector<double>(x.data(), x.data() + x.size()); }

void print_matrix(const std::string& label, const Mat& A) {
  std::cout << "# " << label << " (" << to_string(shape_of(A)) << ")\n" << format_matrix(A);
}

Mat load(const std::string& path) { return read_matrix(path); }

HVec load_vector(const std::string& path) {
  const MatrixFile f = read_matrix_file(path);
  if (!f.is_vector) throw ShapeError(path + ": expected a column vector, got " + to_string(shape_of(f.value)));
  return as_hvec(f.value);
}

// ---- eval ------------------------------------------------------------------

int cmd_eval(const Globals& g, const std::string& expr, const std::vector<std::string>& binds,
             const std::string& out) {
  cli::Bindings env;
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--bind expects name=path, got '" + b + "'", 0);
    env[b.substr(0, eq)] = load(b.substr(eq + 1));
  }
  const auto ast = cli::parse_expression(expr);
  const Mat R = cli::evaluate(*ast, env, {g.weighted});
  if (!out.empty()) write_matrix(out, R);
  if (g.json) {
    std::cout << json{{"expression", expr}, {"result", to_json(R)}}.dump(2) << '\n';
  } else {
    std::cout << format_matrix(R);
  }
  return kOk;
}

// ---- check -----------------------------------------------------------------

int cmd_check(const Globals& g, const std::string& suite, int trials) {
  if (trials < 1) throw DomainError("--trials must be positive");
  const auto results = cli::run_suite(suite, {g.seed, trials});
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  if (g.json) {
    json laws = json::array();
    for (const auto& r : results) {
      laws.push_back({{"suite", r.suite}, {"law", r.law}, {"max_residual", r.max_residual},
                      {"tol", r.tol}, {"samples", r.samples}, {"pass", r.pass}});
    }
    std::cout << json{{"seed", g.seed}, {"trials", trials}, {"laws", laws}, {"failed", failed}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::printf("%s  %-10s  %-48s  max_residual=%-11.3e tol=%-8.1e n=%ld\n", r.pass ? "PASS" : "FAIL",
                  r.suite.c_str(), r.law.c_str(), r.max_residual, r.tol, r.samples);
    }
    std::printf("%zu laws, %d failed (seed %llu, trials %d)\n", results.size(), failed,
                static_cast<unsigned long long>(g.seed), trials);
  }
  return failed ? kCheckFailed : kOk;
}

// ---- simulate ----------------------------------------------------------------

std::string dims_summary(const std::vector<Index>& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size();) {
    std::size_t j = i;
    while (j < dims.size() && dims[j] == dims[i]) ++j;
    os << (i ? " " : "") << dims[i];
    if (j - i > 1) os << "x" << (j - i);
    i = j;
  }
  return os.str();
}

int cmd_simulate(const Globals& g, const std::string& spec_path, const std::string& out_override) {
  cli::SimFile sim = cli::read_sim_spec(spec_path);
  if (!out_override.empty()) sim.output = out_override;
  const Trajectory tr = cli::run_simulation(sim);
  if (!sim.output.empty()) {
    std::ofstream os(sim.output);
    if (!os) throw DomainError("cannot write trajectory '" + sim.output + "'");
    write_trajectory(os, tr);
  }
  if (g.json) {
    json dims = tr.dims;
    std::cout << json{{"structure", structure_name(sim.system.structure)},
                      {"continuous", sim.continuous},
                      {"steps", tr.states.size() - 1},
                      {"dims", dims},
                      {"final_time", tr.times.back()},
                      {"final_state", to_json(tr.states.back())},
                      {"output", sim.output}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  if (sim.output.empty()) write_trajectory(std::cout, tr);
  std::ostream& info = sim.output.empty() ? std::cerr : std::cout;
  info << structure_name(sim.system.structure) << (sim.continuous ? " continuous" : " discrete") << ", "
       << tr.states.size() - 1 << " steps, dims: " << dims_summary(tr.dims) << '\n';
  if (!sim.output.empty()) info << "trajectory written to " << sim.output << '\n';
  return kOk;
}

// ---- spectrum ----------------------------------------------------------------

int cmd_spectrum(const Globals& g, const std::string& path) {
  const Mat A = load(path);
  const auto spec = s_spectrum(A);
  const Poly p = s_char_poly(A);
  if (g.json) {
    json vals = json::array();
    for (const auto& e : spec) vals.push_back({e.value.real(), e.value.imag()});
    std::cout << json{{"shape", to_string(shape_of(A))}, {"box_size", box(A).rows()},
                      {"char_poly", p.coeffs()}, {"eigenvalues", vals}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "# s-characteristic polynomial: " << p.to_string() << '\n';
  std::cout << "# s-eigenvalues of box(A), " << spec.size() << " values (real imag)\n";
  for (const auto& e : spec) std::cout << format_double(e.value.real()) << ' ' << format_double(e.value.imag()) << '\n';
  return kOk;
}

// ---- invert ------------------------------------------------------------------

int cmd_invert(const Globals& g, const std::string& path, double scalar, const std::string& method_name) {
  const Mat A0 = load(path);
  const InvertMethod method = method_name == "linear" ? InvertMethod::LinearSolve : InvertMethod::ClosedForm;
  const ExtMat X{scalar, A0};
  const InverseCoefficients ic = inverse_coefficients(scalar != 0.0 ? Mat(A0 / scalar) : A0, g.weighted);
  ExtMat inv;
  try {
    inv = ext_invert(X, method, g.weighted);
  } catch (const NotInvertible& e) {
    if (g.json) {
      std::cout << json{{"invertible", false}, {"criterion", e.criterion()}, {"message", e.what()}}.dump(2) << '\n';
    }
    std::cerr << "not invertible: criterion " << format_double(e.criterion()) << '\n';
    return kNumeric;
  }
  const ExtMat left = ext_mul(X, inv, g.weighted), right = ext_mul(inv, X, g.weighted);
  const double res = std::max({std::abs(left.scalar - 1.0), std::abs(right.scalar - 1.0),
                               left.body.cwiseAbs().maxCoeff(), right.body.cwiseAbs().maxCoeff()});
  if (g.json) {
    std::cout << json{{"invertible", true},
                      {"method", method == InvertMethod::LinearSolve ? "linear_solve" : "closed_form"},
                      {"char_poly", ic.poly.coeffs()},
                      {"criterion", ic.criterion},
                      {"x", ic.x},
                      {"scalar", inv.scalar},
                      {"body", to_json(inv.body)},
                      {"residual", res}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "# characteristic polynomial " << ic.poly.to_string() << '\n';
  std::cout << "# criterion " << format_double(ic.criterion) << '\n';
  for (std::size_t i = 0; i < ic.x.size(); ++i) std::cout << "# x" << i + 1 << " = " << format_double(ic.x[i]) << '\n';
  std::cout << "# inverse scalar " << format_double(inv.scalar) << '\n';
  std::cout << "# residual " << format_double(res) << '\n';
  print_matrix("inverse body", inv.body);
  return kOk;
}

// ---- reduce ------------------------------------------------------------------

int cmd_reduce(const Globals& g, const std::string& path, const std::string& weight) {
  const MatrixFile f = read_matrix_file(path);
  Mat rep;
  Index rf = 1, cf = 1;
  if (f.is_vector && (weight == "ones" || weight == "E" || weight == "auto")) {
    const auto r = reduce_vec(as_hvec(f.value), g.tol, weight == "E" ? VecWeight::E : VecWeight::Ones);
    rep = as_column(r.representative);
    rf = r.row_factor;
  } else {
    Reduction<Mat> r;
    if (weight == "I" || weight == "auto") r = reduce_mat(f.value, MatWeight::I, g.tol);
    else if (weight == "J") r = reduce_mat(f.value, MatWeight::J, g.tol);
    else if (weight == "E") r = reduce_mat(f.value, MatWeight::E, g.tol);
    else if (weight == "right_identity") r = reduce_mat_right_identity(f.value, g.tol);
    else throw DomainError("unknown weight '" + weight + "' (ones, E, I, J, right_identity)");
    rep = r.representative;
    rf = r.row_factor;
    cf = r.col_factor;
  }
  if (g.json) {
    std::cout << json{{"representative", to_json(rep)}, {"row_factor", rf}, {"col_factor", cf}}.dump(2) << '\n';
  } else {
    std::cout << "# factors " << rf << ' ' << cf << '\n';
    print_matrix("representative", rep);
  }
  return kOk;
}

// ---- project -----------------------------------------------------------------

int cmd_project(const Globals& g, const std::string& path, Index n) {
  const HVec xi = load_vector(path);
  const Projection p = project(xi, n);
  const double nx = norm(xi), n0 = norm(p.x0), nr = norm(p.residual);
  if (g.json) {
    std::cout << json{{"x0", to_json(p.x0)}, {"residual", to_json(p.residual)},
                      {"norm", nx}, {"norm_x0", n0}, {"norm_residual", nr}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "# |xi| " << format_double(nx) << "  |x0| " << format_double(n0) << "  |residual| "
            << format_double(nr) << '\n';
  print_matrix("projection x0", as_column(p.x0));
  print_matrix("residual", as_column(p.residual));
  return kOk;
}

// "-A a.mat" is shorthand for "--bind A=a.mat"; only single capitals, so
// the lowercase short flags stay available.
std::vector<std::string> expand_bindings(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (i > 0 && a.size() == 2 && a[0] == '-' && std::isupper(static_cast<unsigned char>(a[1])) &&
        i + 1 < args.size()) {
      out.push_back("--bind");
      out.push_back(a.substr(1) + "=" + args[++i]);
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimfree: cross-dimensional matrix algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "Tolerance for reductions and equivalence tests")->check(CLI::PositiveNumber);
  auto* wflag = app.add_flag("--weighted", g.weighted, "Use the E-weighted bridge (default)");
  app.add_flag("--unweighted", g.unweighted, "Use the all-ones bridge")->excludes(wflag);
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_flag("--json", g.json, "Machine-readable output");

  std::string expr, out, suite = "all", path, method = "closed", weight = "auto";
  std::vector<std::string> binds;
  int trials = 200;
  double scalar = 1.0;
  Index dim = 0;

  auto* eval = app.add_subcommand("eval", "Evaluate a matrix expression");
  eval->add_option("expr", expr, "Expression, e.g. \"(A hadd B) pstp C\"")->required();
  eval->add_option("--bind", binds, "name=path binding (repeatable)");
  eval->add_option("-o,--output", out, "Also write the result to this matrix file");
  eval->footer("Single-letter names can be bound as -A a.mat -B b.mat.");

  auto* check = app.add_subcommand("check", "Run a law-check suite");
  check->add_option("suite", suite, "stp_laws | hyper_ring | perm | geometry | lie | all")
      ->check(CLI::IsMember({"stp_laws", "hyper_ring", "perm", "geometry", "lie", "all"}));
  check->add_option("--trials", trials, "Random trials per law");

  auto* sim = app.add_subcommand("simulate", "Run a simulation spec file");
  sim->add_option("spec", path, "Simulation spec")->required();
  sim->add_option("-o,--output", out, "Trajectory output (overrides the spec)");

  auto* spectrum = app.add_subcommand("spectrum", "s-spectrum of a matrix");
  spectrum->add_option("file", path, "Matrix file")->required();

  auto* invert = app.add_subcommand("invert", "Invert scalar*I + A0 in GL(m x n)");
  invert->add_option("file", path, "Body A0")->required();
  invert->add_option("--scalar", scalar, "Scalar part (default 1)");
  invert->add_option("--method", method, "closed | linear")->check(CLI::IsMember({"closed", "linear"}));

  auto* reduce = app.add_subcommand("reduce", "Irreducible representative of a matrix or vector");
  reduce->add_option("file", path, "Matrix or vector file")->required();
  reduce->add_option("--weight", weight, "auto | ones | E | I | J | right_identity");

  auto* proj = app.add_subcommand("project", "Project a vector onto R^n");
  proj->add_option("file", path, "Vector file")->required();
  proj->add_option("-n,--dim", dim, "Target dimension")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> args = expand_bindings(argc, argv);
    std::vector<char*> ptrs;
    for (auto& a : args) ptrs.push_back(a.data());
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (g.unweighted) g.weighted = false;

  try {
    if (*eval) return cmd_eval(g, expr, binds, out);
    if (*check) return cmd_check(g, suite, trials);
    if (*sim) return cmd_simulate(g, path, out);
    if (*spectrum) return cmd_spectrum(g, path);
    if (*invert) return cmd_invert(g, path, scalar, method);
    if (*reduce) return cmd_reduce(g, path, weight);
    if (*proj) return cmd_project(g, path, dim);
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
