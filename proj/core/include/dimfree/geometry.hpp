#pragma once

#include <functional>
#include <optional>

#include "dimfree/types.hpp"

namespace dimfree {

// Ones: (1/t)(x⊗1_{t/m})ᵀ(y⊗1_{t/n}), the normalized form used by norm/dist.
// E:    (x⊗E_{t/m})ᵀ(y⊗E_{t/n}), which equals √(mn)·<x,y>_V.
enum class InnerWeight { Ones, E };

double inner(const HVec& x, const HVec& y, InnerWeight weight = InnerWeight::Ones);
double norm(const HVec& x, InnerWeight weight = InnerWeight::Ones);
// ‖x −̄ y‖_V
double dist(const HVec& x, const HVec& y);

// Π^m_n, an n×m matrix.
Mat projection_matrix(Index m, Index n);

struct Projection {
  HVec x0;        // Π^m_n ξ
  HVec residual;  // x0 −̄ ξ
};
Projection project(const HVec& xi, Index n);

struct Sphere {
  HVec center;
  double radius;
};
// Slice of the sphere (c0, r) by R^n; nullopt when R^n misses it.
std::optional<Sphere> sphere_slice(const HVec& c0, double r, Index n);

using ScalarField = std::function<double(const HVec&)>;
using VectorField = std::function<HVec(const HVec&)>;

// h(Π^m_θ z) when θ | m, else 0.
double extend_function(const ScalarField& h, Index theta, const HVec& z);
// Π^n_m f(Π^m_n z) when n | m, else the zero vector of R^m.
HVec extend_vector_field(const VectorField& f, Index n, const HVec& z);

}  // namespace dimfree
