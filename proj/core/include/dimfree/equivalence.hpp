#pragma once

#include "dimfree/types.hpp"

namespace dimfree {

enum class VecWeight { Ones, E };
enum class MatWeight { I, J, E };
enum class Relation { VecJ, VecE, SqI, SqJ, MatE, PermRight };

// original = representative ⊗ W with W of size row_factor × col_factor
// (col_factor is 1 for vectors).
template <class T>
struct Reduction {
  T representative;
  Index row_factor = 1;
  Index col_factor = 1;
};

Reduction<HVec> reduce_vec(const HVec& x, double tol = kDefaultTol,
                           VecWeight weight = VecWeight::Ones);
Reduction<Mat> reduce_mat(const Mat& A, MatWeight weight, double tol = kDefaultTol);
// Smallest C with A = I_k ⊗ C (block-diagonal repetition).
Reduction<Mat> reduce_mat_right_identity(const Mat& A, double tol = kDefaultTol);

// Inverse of the reductions above.
HVec inflate(const Reduction<HVec>& r, VecWeight weight = VecWeight::Ones);
Mat inflate(const Reduction<Mat>& r, MatWeight weight);

// Compare the stretched forms at the common lattice join.
bool equivalent(const HVec& x, const HVec& y, Relation relation, double tol = kDefaultTol);
bool equivalent(const Mat& A, const Mat& B, Relation relation, double tol = kDefaultTol);

// Compare irreducible representatives instead. Must agree with equivalent().
bool equivalent_by_reduction(const HVec& x, const HVec& y, Relation relation,
                             double tol = kDefaultTol);
bool equivalent_by_reduction(const Mat& A, const Mat& B, Relation relation,
                             double tol = kDefaultTol);

Relation parse_relation(const std::string& name);
const char* relation_name(Relation r);

}  // namespace dimfree
