#pragma once

#include <string>
#include <vector>

#include "dimfree/types.hpp"

namespace dimfree {

// Stored 0-based: image()[i] = σ(i). One-based helpers exist for I/O.
class Perm {
 public:
  explicit Perm(std::vector<Index> image);
  static Perm identity(Index n);
  static Perm from_one_based(const std::vector<Index>& image);
  // "2,1,4,3"
  static Perm parse(const std::string& text);

  Index order() const { return static_cast<Index>(image_.size()); }
  Index operator()(Index i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<Index>& image() const { return image_; }
  std::vector<Index> one_based() const;
  std::string to_string() const;

  Perm inverse() const;
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<Index> image_;
};

enum class Side { Left, Right };

// (σ∘μ)(i) = σ(μ(i)); orders must match.
Perm compose(const Perm& sigma, const Perm& mu);

// Column i is δ^{σ(i)}.
Mat perm_matrix(const Perm& sigma);

// Left: matrix P_σ⊗I_k. Right: matrix I_k⊗P_σ. Requires order(σ) | n.
Perm embed(const Perm& sigma, Index n, Side side);

// Embed both to lcm order on the given side, then compose.
Perm perm_product(const Perm& sigma, const Perm& mu, Side side = Side::Left);

int perm_sign(const Perm& sigma);

// Left: P_σ⊗I_r = P_μ⊗I_s. Right: I_r⊗P_σ = I_s⊗P_μ.
bool perm_equivalent(const Perm& sigma, const Perm& mu, Side side);

}  // namespace dimfree
