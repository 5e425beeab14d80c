#include "dimfree/dimvar.hpp"

#include <cmath>
#include <optional>
#include <ostream>

#include "dimfree/equivalence.hpp"
#include "dimfree/errors.hpp"
#include "dimfree/matrix_io.hpp"
#include "dimfree/stp.hpp"

namespace dimfree {

Structure parse_structure(const std::string& name) {
  static const char* names[] = {"aleph1", "aleph2", "aleph3", "aleph4", "aleph5", "aleph6"};
  for (int i = 0; i < 6; ++i)
    if (name == names[i]) return static_cast<Structure>(i);
  throw DomainError("unknown structure '" + name + "' (expected aleph1..aleph6)");
}

const char* structure_name(Structure s) {
  static const char* names[] = {"aleph1", "aleph2", "aleph3", "aleph4", "aleph5", "aleph6"};
  return names[static_cast<int>(s)];
}

HVec structure_product(Structure s, const Mat& M, const HVec& x, bool weighted) {
  switch (s) {
    case Structure::Aleph1:
      if (M.rows() != M.cols() || M.cols() != x.size()) {
        throw ShapeError("aleph1 needs a square matrix matching the state: M is " +
                         to_string(shape_of(M)) + ", x has dimension " +
                         std::to_string(x.size()));
      }
      return M * x;
    case Structure::Aleph3:
      return mv_stp(M, x, MvKind::Type1);
    case Structure::Aleph4:
      return mv_stp(M, x, MvKind::Type2);
    case Structure::Aleph2:
    case Structure::Aleph5:
    case Structure::Aleph6:
      return dk_stp_vec(M, x, weighted);
  }
  throw DomainError("unknown structure");
}

HVec structure_add(Structure s, const HVec& x, const HVec& y) {
  switch (s) {
    case Structure::Aleph1:
    case Structure::Aleph2:
      if (x.size() != y.size()) {
        throw ShapeError(std::string(structure_name(s)) + " adds vectors of equal dimension only, got " +
                         std::to_string(x.size()) + " and " + std::to_string(y.size()));
      }
      return x + y;
    case Structure::Aleph3:
    case Structure::Aleph4:
      return bar_add(x, y);
    case Structure::Aleph5:
    case Structure::Aleph6:
      return vec_hat_add(x, y);
  }
  throw DomainError("unknown structure");
}

namespace {

const Mat* pick(const std::vector<Mat>& seq, Index step) {
  if (seq.empty()) return nullptr;
  return &seq[static_cast<std::size_t>(step % static_cast<Index>(seq.size()))];
}

void check_finite(const HVec& x, Index step, double t) {
  if (!x.allFinite()) {
    throw NumericError("non-finite state at step " + std::to_string(step) + " (t = " +
                       format_double(t) + ")");
  }
}

}  // namespace

Trajectory simulate_discrete(const SystemSpec& spec, const DiscreteSignal& u,
                             const DiscreteSignal& eta) {
  if (spec.M.empty()) throw DomainError("system has no M matrix");
  if (spec.horizon < 0) throw DomainError("horizon must be non-negative");
  const Structure s = spec.structure;
  const bool reduce = s == Structure::Aleph5 || s == Structure::Aleph6;

  Trajectory traj;
  HVec x = spec.x0;
  if (reduce) x = reduce_vec(x, kDefaultTol, VecWeight::E).representative;
  traj.times.push_back(0.0);
  traj.states.push_back(x);
  traj.dims.push_back(x.size());

  for (Index k = 0; k < spec.horizon; ++k) {
    try {
      HVec next = structure_product(s, *pick(spec.M, k), x, spec.weighted);
      if (const Mat* B = pick(spec.B, k); B && u) {
        next = structure_add(s, next, structure_product(s, *B, u(k), spec.weighted));
      }
      if (const Mat* C = pick(spec.C, k); C && eta) {
        next = structure_add(s, next, structure_product(s, *C, eta(k), spec.weighted));
      }
      if (reduce) next = reduce_vec(next, kDefaultTol, VecWeight::E).representative;
      x = std::move(next);
    } catch (const ShapeError& e) {
      throw ShapeError("step " + std::to_string(k) + ": " + e.what());
    }
    check_finite(x, k + 1, static_cast<double>(k + 1));
    traj.times.push_back(static_cast<double>(k + 1));
    traj.states.push_back(x);
    traj.dims.push_back(x.size());
  }
  return traj;
}

Trajectory simulate_continuous(const SystemSpec& spec, const ContinuousSignal& u,
                               const ContinuousSignal& eta) {
  if (spec.M.empty() && !spec.M_of_t) throw DomainError("system has no M matrix");
  if (!(spec.dt > 0.0)) throw DomainError("dt must be positive");
  if (!(spec.T >= 0.0)) throw DomainError("final time must be non-negative");
  const Structure s = spec.structure;
  const Index n = spec.x0.size();

  auto matrix_at = [](const std::vector<Mat>& seq, const std::function<Mat(double)>& fn,
                      double t) -> std::optional<Mat> {
    if (fn) return fn(t);
    if (seq.empty()) return std::nullopt;
    return seq.front();
  };

  auto term = [&](const Mat& A, const HVec& v, double t, const char* what) {
    HVec y = structure_product(s, A, v, spec.weighted);
    if (y.size() != n) {
      throw DimensionNotInvariant(std::string(what) + " term has dimension " +
                                  std::to_string(y.size()) + " at t = " + format_double(t) +
                                  ", state dimension is " + std::to_string(n));
    }
    return y;
  };

  auto rhs = [&](double t, const HVec& x) {
    HVec dx = term(*matrix_at(spec.M, spec.M_of_t, t), x, t, "M x");
    if (u) {
      if (auto B = matrix_at(spec.B, spec.B_of_t, t)) dx += term(*B, u(t), t, "B u");
    }
    if (eta) {
      if (auto C = matrix_at(spec.C, spec.C_of_t, t)) dx += term(*C, eta(t), t, "C eta");
    }
    return dx;
  };

  const Index steps = static_cast<Index>(std::llround(spec.T / spec.dt));
  Trajectory traj;
  HVec x = spec.x0;
  rhs(0.0, x);  // dimension-invariance check before integrating
  traj.times.push_back(0.0);
  traj.states.push_back(x);
  traj.dims.push_back(n);
  const double h = spec.dt;
  for (Index k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * h;
    const HVec k1 = rhs(t, x);
    const HVec k2 = rhs(t + h / 2, x + h / 2 * k1);
    const HVec k3 = rhs(t + h / 2, x + h / 2 * k2);
    const HVec k4 = rhs(t + h, x + h * k3);
    x += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    check_finite(x, k + 1, t + h);
    traj.times.push_back(static_cast<double>(k + 1) * h);
    traj.states.push_back(x);
    traj.dims.push_back(n);
  }
  return traj;
}

void write_trajectory(std::ostream& os, const Trajectory& traj) {
  os << "# time,dim,state...\n";
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    os << format_double(traj.times[k]) << ',' << traj.dims[k];
    const HVec& x = traj.states[k];
    for (Index i = 0; i < x.size(); ++i) os << ',' << format_double(x(i));
    os << '\n';
  }
}

}  // namespace dimfree
