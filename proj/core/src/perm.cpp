#include "dimfree/perm.hpp"

#include <cctype>
#include <sstream>

#include "dimfree/errors.hpp"
#include "dimfree/lattice.hpp"

namespace dimfree {

Perm::Perm(std::vector<Index> image) : image_(std::move(image)) {
  const Index n = order();
  if (n < 1) throw DomainError("permutation order must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Index v : image_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("image is not a bijection on {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(Index n) {
  std::vector<Index> img(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  return Perm(std::move(img));
}

Perm Perm::from_one_based(const std::vector<Index>& image) {
  std::vector<Index> img(image);
  for (auto& v : img) --v;
  return Perm(std::move(img));
}

Perm Perm::parse(const std::string& text) {
  std::vector<Index> img;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    Index v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad permutation entry '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw DomainError("bad permutation entry '" + item + "'");
    img.push_back(v);
  }
  return from_one_based(img);
}

std::vector<Index> Perm::one_based() const {
  std::vector<Index> img(image_);
  for (auto& v : img) ++v;
  return img;
}

std::string Perm::to_string() const {
  std::string s;
  for (Index v : one_based()) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

Perm Perm::inverse() const {
  std::vector<Index> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<Index>(i);
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<Index>(i)) return false;
  return true;
}

Perm compose(const Perm& sigma, const Perm& mu) {
  if (sigma.order() != mu.order()) {
    throw ShapeError("composition needs equal orders, got " + std::to_string(sigma.order()) +
                     " and " + std::to_string(mu.order()));
  }
  std::vector<Index> img(static_cast<std::size_t>(mu.order()));
  for (Index i = 0; i < mu.order(); ++i) img[static_cast<std::size_t>(i)] = sigma(mu(i));
  return Perm(std::move(img));
}

Mat perm_matrix(const Perm& sigma) {
  const Index n = sigma.order();
  Mat P = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) P(sigma(i), i) = 1.0;
  return P;
}

Perm embed(const Perm& sigma, Index n, Side side) {
  const Index m = sigma.order();
  if (n < 1 || n % m != 0) {
    throw ShapeError("cannot embed order " + std::to_string(m) + " into order " +
                     std::to_string(n));
  }
  const Index k = n / m;
  std::vector<Index> img(static_cast<std::size_t>(n));
  if (side == Side::Left) {
    // P_σ ⊗ I_k
    for (Index i = 0; i < m; ++i)
      for (Index s = 0; s < k; ++s) img[static_cast<std::size_t>(i * k + s)] = sigma(i) * k + s;
  } else {
    // I_k ⊗ P_σ
    for (Index s = 0; s < k; ++s)
      for (Index i = 0; i < m; ++i) img[static_cast<std::size_t>(s * m + i)] = s * m + sigma(i);
  }
  return Perm(std::move(img));
}

Perm perm_product(const Perm& sigma, const Perm& mu, Side side) {
  const Index t = lcm(sigma.order(), mu.order());
  return compose(embed(sigma, t, side), embed(mu, t, side));
}

int perm_sign(const Perm& sigma) {
  const Index n = sigma.order();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Index cycles = 0;
  for (Index i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (Index j = i; !seen[static_cast<std::size_t>(j)]; j = sigma(j)) seen[static_cast<std::size_t>(j)] = true;
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

bool perm_equivalent(const Perm& sigma, const Perm& mu, Side side) {
  const Index t = lcm(sigma.order(), mu.order());
  return embed(sigma, t, side) == embed(mu, t, side);
}

}  // namespace dimfree
