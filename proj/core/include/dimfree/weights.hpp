#pragma once

#include <optional>

#include "dimfree/types.hpp"

namespace dimfree {

enum class WeightKind { OnesVec, EVec, EMat, JMat, Identity };

// Vector kinds come back as m x 1 matrices. n is required for EMat only.
Mat weight(WeightKind kind, Index m, std::optional<Index> n = std::nullopt);

HVec ones(Index k);
HVec e_vec(Index n);
Mat e_mat(Index m, Index n);
Mat j_mat(Index n);
Mat identity(Index n);

Mat kron(const Mat& A, const Mat& B);
HVec kron_vec(const HVec& x, const HVec& y);

// x ⊗ 1_k, or x ⊗ E_k when e_weighted.
HVec stretch(const HVec& x, Index k, bool e_weighted = false);
// A ⊗ I_k
Mat inflate_identity(const Mat& A, Index k);
// I_k ⊗ A
Mat inflate_identity_left(const Mat& A, Index k);
// A ⊗ J_k
Mat inflate_average(const Mat& A, Index k);
// A ⊗ E_{a×b}
Mat inflate_e(const Mat& A, Index a, Index b);

// Psi_{n×p} (weighted) or Psi'_{n×p} (all-ones variant).
Mat bridge(Index n, Index p, bool weighted = true);

inline Mat as_column(const HVec& x) { return Mat(x); }
HVec as_hvec(const Mat& A);

}  // namespace dimfree
