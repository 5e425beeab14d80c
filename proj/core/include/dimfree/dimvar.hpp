#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dimfree/types.hpp"

namespace dimfree {

// ℵ₁ classical, ℵ₂ DK-STP, ℵ₃/ℵ₄ type-1/type-2 MV-STP with bar addition,
// ℵ₅/ℵ₆ DK-STP with hat addition and E-reduction of the state after every
// step. Hat addition would break distributivity for the type-2 product.
enum class Structure { Aleph1, Aleph2, Aleph3, Aleph4, Aleph5, Aleph6 };

Structure parse_structure(const std::string& name);
const char* structure_name(Structure s);

struct SystemSpec {
  Structure structure = Structure::Aleph2;
  // Discrete systems use M[t mod size]; continuous ones use M[0] unless
  // the matching callback below is set. B and C may be empty.
  std::vector<Mat> M;
  std::vector<Mat> B;
  std::vector<Mat> C;
  std::function<Mat(double)> M_of_t;
  std::function<Mat(double)> B_of_t;
  std::function<Mat(double)> C_of_t;
  HVec x0;
  Index horizon = 0;
  double T = 0.0;
  double dt = 0.0;
  bool weighted = true;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<HVec> states;
  std::vector<Index> dims;
};

using DiscreteSignal = std::function<HVec(Index step)>;
using ContinuousSignal = std::function<HVec(double t)>;

// M ⊙ x for the structure's product.
HVec structure_product(Structure s, const Mat& M, const HVec& x, bool weighted = true);
// x ⊕ y for the structure's addition.
HVec structure_add(Structure s, const HVec& x, const HVec& y);

Trajectory simulate_discrete(const SystemSpec& spec, const DiscreteSignal& u = {},
                             const DiscreteSignal& eta = {});

// Fixed-step RK4 of ẋ = M⊙x + B⊙u + C⊙η. The state dimension must stay fixed.
Trajectory simulate_continuous(const SystemSpec& spec, const ContinuousSignal& u = {},
                               const ContinuousSignal& eta = {});

// One row per step: time, dim, entries (comma separated).
void write_trajectory(std::ostream& os, const Trajectory& traj);

}  // namespace dimfree
