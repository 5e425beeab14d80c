#include "dimfree/geometry.hpp"

#include <cmath>
#include <limits>

#include "dimfree/errors.hpp"
#include "dimfree/lattice.hpp"
#include "dimfree/stp.hpp"
#include "dimfree/weights.hpp"

namespace dimfree {

double inner(const HVec& x, const HVec& y, InnerWeight weight) {
  const Index t = lcm(x.size(), y.size());
  const double v = vv_stp(x, y);
  if (weight == InnerWeight::Ones) return v / static_cast<double>(t);
  const double a = static_cast<double>(t / x.size()), b = static_cast<double>(t / y.size());
  return v / std::sqrt(a * b);
}

double norm(const HVec& x, InnerWeight weight) {
  return std::sqrt(std::max(0.0, inner(x, x, weight)));
}

double dist(const HVec& x, const HVec& y) { return norm(bar_sub(x, y)); }

Mat projection_matrix(Index m, Index n) {
  const Index t = lcm(m, n);
  Mat P = bridge(n, m, false);
  if (t != n) P /= static_cast<double>(t / n);
  return P;
}

Projection project(const HVec& xi, Index n) {
  HVec x0 = projection_matrix(xi.size(), n) * xi;
  HVec residual = bar_sub(x0, xi);
  return {std::move(x0), std::move(residual)};
}

std::optional<Sphere> sphere_slice(const HVec& c0, double r, Index n) {
  if (!(r > 0.0)) throw DomainError("sphere radius must be positive");
  HVec cn = project(c0, n).x0;
  const double h = dist(c0, cn);
  const double r2 = r * r, h2 = h * h;
  // Rounding in h must not turn a touching slice into a miss.
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() * r2;
  if (h2 > r2 + slack) return std::nullopt;
  const double rad = h2 >= r2 ? 0.0 : std::sqrt(r2 - h2);
  return Sphere{std::move(cn), rad};
}

double extend_function(const ScalarField& h, Index theta, const HVec& z) {
  const Index m = z.size();
  if (m % theta != 0) return 0.0;
  return h(projection_matrix(m, theta) * z);
}

HVec extend_vector_field(const VectorField& f, Index n, const HVec& z) {
  const Index m = z.size();
  if (m % n != 0) return HVec::Zero(m);
  const HVec fz = f(projection_matrix(m, n) * z);
  if (fz.size() != n) {
    throw ShapeError("vector field returned dimension " + std::to_string(fz.size()) +
                     ", expected " + std::to_string(n));
  }
  return projection_matrix(n, m) * fz;
}

}  // namespace dimfree
