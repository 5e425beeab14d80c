#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "dimfree/dimfree.hpp"

namespace dimfree::cli {

namespace {

constexpr double kLawTol = 1e-9;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  Index dim(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(gen_); }
  Mat mat(Index m, Index n, double lo = -1.0, double hi = 1.0) {
    Mat A(m, n);
    for (Index i = 0; i < A.size(); ++i) A.data()[i] = uniform(lo, hi);
    return A;
  }
  Mat mat(Index hi) { return mat(dim(1, hi), dim(1, hi)); }
  HVec vec(Index n) {
    HVec x(n);
    for (Index i = 0; i < n; ++i) x(i) = uniform();
    return x;
  }
  Perm perm(Index n) {
    std::vector<Index> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), Index{0});
    std::shuffle(p.begin(), p.end(), gen_);
    return Perm(std::move(p));
  }

 private:
  std::mt19937_64 gen_;
};

double max_abs(const Mat& A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }

// max|L − R| scaled by the operands when they are large; infinity on a shape
// mismatch so that it always fails.
double residual(const Mat& L, const Mat& R) {
  if (L.rows() != R.rows() || L.cols() != R.cols()) return HUGE_VAL;
  return max_abs(L - R) / std::max({1.0, max_abs(L), max_abs(R)});
}
double residual(const HVec& L, const HVec& R) { return residual(as_column(L), as_column(R)); }

// Collects residuals per law, in insertion order.
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  void add(const std::string& law, double r, double tol = kLawTol) {
    auto it = index_.find(law);
    if (it == index_.end()) {
      it = index_.emplace(law, out_.size()).first;
      out_.push_back({suite_, law, 0.0, tol, 0, true});
    }
    LawResult& res = out_[it->second];
    ++res.samples;
    if (!(r <= res.max_residual)) res.max_residual = r;
    res.pass = res.max_residual <= res.tol;
  }
  void add_bool(const std::string& law, bool ok) { add(law, ok ? 0.0 : 1.0, 0.0); }

  std::vector<LawResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::map<std::string, std::size_t> index_;
  std::vector<LawResult> out_;
};

std::vector<Perm> all_perms(Index n) {
  std::vector<Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), Index{0});
  std::vector<Perm> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<LawResult> stp_laws(const CheckOptions& opt) {
  Report rep("stp_laws");
  Rng rng(opt.seed);
  const StpKind kinds[] = {StpKind::Type1Left, StpKind::Type1Right, StpKind::Type2Left, StpKind::Type2Right};
  const char* kind_names[] = {"ltimes", "rtimes", "circ", "circ_right"};
  for (int t = 0; t < opt.trials; ++t) {
    const Mat A = rng.mat(4), B = rng.mat(4), C = rng.mat(4);
    for (int k = 0; k < 4; ++k) {
      rep.add(std::string("associativity ") + kind_names[k],
              residual(mm_stp(mm_stp(A, B, kinds[k]), C, kinds[k]), mm_stp(A, mm_stp(B, C, kinds[k]), kinds[k])));
    }
    rep.add("transpose ltimes", residual(ltimes(A, B).transpose(), ltimes(Mat(B.transpose()), Mat(A.transpose()))));
    rep.add("transpose dk", residual(dk_stp(A, B).transpose(), dk_stp(Mat(B.transpose()), Mat(A.transpose()))));
    rep.add("transpose pstp",
            residual(pseudo_stp(A, B).transpose(), pseudo_stp(Mat(B.transpose()), Mat(A.transpose()))));
    rep.add("associativity pstp", residual(pseudo_stp(pseudo_stp(A, B), C), pseudo_stp(A, pseudo_stp(B, C))));

    const Index m = rng.dim(1, 4), n = rng.dim(1, 4);
    const Mat X = rng.mat(m, n), Y = rng.mat(m, n), Z = rng.mat(m, n);
    for (bool w : {true, false}) {
      rep.add(std::string("associativity dk ") + (w ? "weighted" : "unweighted"),
              residual(dk_stp(dk_stp(X, Y, w), Z, w), dk_stp(X, dk_stp(Y, Z, w), w)));
    }
    const HVec x = rng.vec(rng.dim(1, 4));
    rep.add("action (A ltimes B) x", residual(mv_stp(ltimes(A, B), x), mv_stp(A, mv_stp(B, x))));
    rep.add("action (A circ B) x", residual(mv_stp(circ(A, B), x, MvKind::Type2),
                                            mv_stp(A, mv_stp(B, x, MvKind::Type2), MvKind::Type2)));
    const Mat Bsame = rng.mat(A.cols(), rng.dim(1, 4));
    rep.add("degeneracy ltimes", residual(ltimes(A, Bsame), Mat(A * Bsame)), 0.0);
    rep.add("degeneracy dk", residual(dk_stp(A, Bsame), Mat(A * Bsame)), 0.0);

    // (A⊗E_{r×kp})(B⊗E_{kn×s}) = (A⊗E_{r×p})(B⊗E_{n×s})
    const Index kk = rng.dim(1, 3), r = rng.dim(1, 3), s = rng.dim(1, 3);
    const Index p = B.rows(), nn = A.cols();
    const Mat Bp = rng.mat(p, rng.dim(1, 4));
    const Mat Ap = rng.mat(rng.dim(1, 4), nn);
    rep.add("E simplification", residual(Mat(kron(Ap, e_mat(r, kk * p)) * kron(Bp, e_mat(kk * nn, s))),
                                         Mat(kron(Ap, e_mat(r, p)) * kron(Bp, e_mat(nn, s)))));
  }
  for (Index m = 1; m <= 8; ++m)
    for (Index n = 1; n <= 8; ++n) {
      rep.add("E weights: E_m ⊗ E_n = E_mn",
              residual(kron_vec(e_vec(m), e_vec(n)), e_vec(m * n)));
      rep.add("E weights: E_mxn ⊗ E_pxq = E_mpxnq", residual(kron(e_mat(m, n), e_mat(2, 3)), e_mat(2 * m, 3 * n)));
      rep.add("E weights: E_mxn' = E_nxm", residual(Mat(e_mat(m, n).transpose()), e_mat(n, m)));
    }
  Mat b32(3, 2);
  b32 << 2, 0, 1, 1, 0, 2;
  rep.add("bridge(3,2) unweighted constant", residual(bridge(3, 2, false), b32), 0.0);
  rep.add("bridge(3,2) weighted constant", residual(bridge(3, 2, true), Mat(std::sqrt(6.0) / 6.0 * b32)), 1e-14);
  return rep.take();
}

std::vector<LawResult> hyper_ring(const CheckOptions& opt) {
  Report rep("hyper_ring");
  Rng rng(opt.seed + 1);
  for (int t = 0; t < opt.trials; ++t) {
    const Mat A = rng.mat(4), B = rng.mat(4), C = rng.mat(4);
    rep.add("hadd commutative", residual(hat_add(A, B), hat_add(B, A)));
    rep.add("hadd associative", residual(hat_add(hat_add(A, B), C), hat_add(A, hat_add(B, C))));
    rep.add("right distributivity pstp/hadd",
            residual(pseudo_stp(hat_add(A, B), C), hat_add(pseudo_stp(A, C), pseudo_stp(B, C))));
    rep.add("left distributivity pstp/hadd",
            residual(pseudo_stp(C, hat_add(A, B)), hat_add(pseudo_stp(C, A), pseudo_stp(C, B))));
    rep.add("transpose hadd", residual(hat_add(A, B).transpose(), hat_add(Mat(A.transpose()), Mat(B.transpose()))));
    rep.add("box(A pstp B) = box(A) circ box(B)", residual(box(pseudo_stp(A, B)), circ(box(A), box(B))));
    rep.add("box(A hadd B) = box(A) hadd box(B)", residual(box(hat_add(A, B)), hat_add(box(A), box(B))));

    const Index m = rng.dim(1, 4), n = rng.dim(1, 4);
    const Mat X = rng.mat(m, n), Y = rng.mat(m, n);
    rep.add("box(A dk B) = box(A) box(B)", residual(box(dk_stp(X, Y)), Mat(box(X) * box(Y))));

    const Mat S = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat sum = hat_add(sym_alt(S, SymAltMode::Symmetrize), sym_alt(S, SymAltMode::Alternate));
    rep.add("sym + alt = box", residual(sum, box(S)));

    // Representatives of hat sums and pseudo products do not depend on the
    // E-inflation chosen for the operands.
    const Mat A1 = kron(X, e_mat(rng.dim(1, 3), rng.dim(1, 3)));
    const Mat A2 = kron(X, e_mat(rng.dim(1, 3), rng.dim(1, 3)));
    const Mat B1 = kron(A, e_mat(rng.dim(1, 3), rng.dim(1, 3)));
    const Mat B2 = kron(A, e_mat(rng.dim(1, 3), rng.dim(1, 3)));
    rep.add("hadd well defined on classes",
            residual(reduce_mat(hat_add(A1, B1), MatWeight::E).representative,
                     reduce_mat(hat_add(A2, B2), MatWeight::E).representative));
    rep.add("pstp well defined on classes",
            residual(reduce_mat(pseudo_stp(A1, B1), MatWeight::E).representative,
                     reduce_mat(pseudo_stp(A2, B2), MatWeight::E).representative));

    const HVec x = rng.vec(rng.dim(1, 4));
    const HVec xs = stretch(x, rng.dim(1, 4));
    rep.add("reduce/inflate round trip", residual(inflate(reduce_vec(xs)), xs), 1e-12);
    const Mat Ms = kron(X, e_mat(rng.dim(1, 3), rng.dim(1, 3)));
    rep.add("reduce/inflate round trip, E weight", residual(inflate(reduce_mat(Ms, MatWeight::E), MatWeight::E), Ms),
            1e-12);
  }
  return rep.take();
}

std::vector<LawResult> perm(const CheckOptions& opt) {
  Report rep("perm");
  Rng rng(opt.seed + 2);
  auto check_pair = [&](const Perm& s, const Perm& u) {
    rep.add_bool("matrix(s ⊙ u) = M_s ltimes M_u",
                 perm_matrix(perm_product(s, u, Side::Left)) == ltimes(perm_matrix(s), perm_matrix(u)));
    rep.add_bool("matrix(s ⊙r u) = M_s rtimes M_u",
                 perm_matrix(perm_product(s, u, Side::Right)) == rtimes(perm_matrix(s), perm_matrix(u)));
    const Index t = std::lcm(s.order(), u.order());
    for (auto side : {Side::Left, Side::Right}) {
      const int es = perm_sign(embed(s, t, side)), eu = perm_sign(embed(u, t, side));
      rep.add_bool("sign multiplicative in S_t", perm_sign(perm_product(s, u, side)) == es * eu);
      rep.add_bool("sign of embedding = sign^(t/m)", es == ((t / s.order()) % 2 == 0 ? 1 : perm_sign(s)));
    }
    if (s.order() == u.order())
      rep.add_bool("sign multiplicative, equal orders", perm_sign(perm_product(s, u)) == perm_sign(s) * perm_sign(u));
    if (perm_sign(s) == 1 && perm_sign(u) == 1)
      rep.add_bool("even permutations closed", perm_sign(perm_product(s, u)) == 1);
  };
  for (Index a = 1; a <= 4; ++a)
    for (Index b = 1; b <= 4; ++b)
      for (const Perm& s : all_perms(a))
        for (const Perm& u : all_perms(b)) check_pair(s, u);
  for (int t = 0; t < std::min(opt.trials, 100); ++t) check_pair(rng.perm(6), rng.perm(6));
  for (int t = 0; t < opt.trials; ++t) {
    const Perm a = rng.perm(rng.dim(1, 4)), b = rng.perm(rng.dim(1, 4)), c = rng.perm(rng.dim(1, 4));
    for (auto side : {Side::Left, Side::Right}) {
      rep.add_bool("associativity", perm_product(perm_product(a, b, side), c, side) ==
                                        perm_product(a, perm_product(b, c, side), side));
      rep.add_bool("inverse", perm_product(a, a.inverse(), side) == Perm::identity(a.order()));
    }
  }
  return rep.take();
}

std::vector<LawResult> geometry(const CheckOptions& opt) {
  Report rep("geometry");
  Rng rng(opt.seed + 3);
  Mat P(6, 4);
  P << 1, 0, 0, 0, .5, .5, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, .5, .5, 0, 0, 0, 1;
  rep.add("projection_matrix(4,6) constant", residual(projection_matrix(4, 6), P), 0.0);
  for (int t = 0; t < std::max(opt.trials, 1000); ++t) {
    const HVec xi = rng.vec(4);
    const Projection pr = project(xi, 6);
    const double s = xi.squaredNorm(), c = xi(0) * xi(1) + xi(2) * xi(3);
    const double n0 = norm(pr.x0), nr = norm(pr.residual), nx = norm(xi);
    rep.add("pythagoras R^4 -> R^6", std::abs(nx * nx - n0 * n0 - nr * nr), 1e-10);
    rep.add("|x0|^2 = (1.25 S + 0.5 C)/6", std::abs(n0 * n0 - (1.25 * s + 0.5 * c) / 6.0), 1e-12);
    rep.add("|res|^2 = (0.5 S - C)/12", std::abs(nr * nr - (0.5 * s - c) / 12.0), 1e-12);
    rep.add("|xi|^2 = S/4", std::abs(nx * nx - s / 4.0), 1e-12);
  }
  for (int t = 0; t < opt.trials; ++t) {
    const HVec xi = rng.vec(rng.dim(1, 8));
    const Index n = rng.dim(1, 8);
    const Projection pr = project(xi, n);
    rep.add("pythagoras", std::abs(inner(xi, xi) - inner(pr.x0, pr.x0) - inner(pr.residual, pr.residual)), 1e-10);
    rep.add("residual orthogonal to x0", std::abs(inner(pr.residual, pr.x0)), 1e-10);
    const HVec z = rng.vec(n);
    rep.add("third-point pythagoras",
            std::abs(std::pow(dist(xi, z), 2) - std::pow(dist(xi, pr.x0), 2) - std::pow(norm(HVec(z - pr.x0)), 2)),
            1e-9);

    const HVec base = rng.vec(rng.dim(1, 3));
    const bool same = t % 2 == 0;
    const HVec other = same ? base : HVec(base + 0.1 * rng.vec(base.size()));
    const HVec a = stretch(base, rng.dim(1, 4)), b = stretch(other, rng.dim(1, 4));
    rep.add_bool("d(x,y) = 0 iff vec_J equivalent", (dist(a, b) <= 1e-9) == equivalent(a, b, Relation::VecJ));

    const HVec y = rng.vec(rng.dim(1, 6)), w = rng.vec(rng.dim(1, 6));
    rep.add("triangle inequality", std::max(0.0, dist(xi, w) - dist(xi, y) - dist(y, w)), 1e-12);
  }
  for (Index u = 1; u <= 12; ++u)
    for (Index v = u; v <= 12; v += u)
      for (Index w = v; w <= 12; w += v) {
        const double s = static_cast<double>(v / u), t = static_cast<double>(w / v);
        rep.add("composition (st)P[w->u] = (sP[v->u])(tP[w->v])",
                residual(Mat(s * t * projection_matrix(w, u)),
                         Mat((s * projection_matrix(v, u)) * (t * projection_matrix(w, v)))),
                0.0);
      }
  return rep.take();
}

std::vector<LawResult> lie(const CheckOptions& opt) {
  Report rep("lie");
  Rng rng(opt.seed + 4);
  for (Index m = 1; m <= 4; ++m)
    for (Index n = 1; n <= 6; ++n)
      for (bool w : {true, false}) {
        const std::string law = "cayley_hamilton " + std::to_string(m) + "x" + std::to_string(n) +
                                (w ? " weighted" : " unweighted");
        for (int t = 0; t < std::max(1, opt.trials / 20); ++t) {
          const Mat A = rng.mat(m, n);
          const double scale = 1.0 + std::pow(restricted_form(A, w).norm(), static_cast<double>(m));
          rep.add(law, max_abs(ch_residual(A, char_poly(A, w), w)) / scale, 1e-7);
        }
      }
  for (int t = 0; t < opt.trials; ++t) {
    const Index m = rng.dim(1, 3), n = rng.dim(1, 4);
    const Mat A = rng.mat(m, n), B = rng.mat(m, n), C = rng.mat(m, n);
    auto br = [](const Mat& X, const Mat& Y) { return bracket(X, Y, BracketKind::Dk); };
    rep.add("jacobi", max_abs(br(A, br(B, C)) + br(B, br(C, A)) + br(C, br(A, B))));
    rep.add("bracket traceless under restricted form", std::abs(restricted_form(br(A, B)).trace()), 1e-10);

    const Mat A0 = rng.mat(2, 3);
    const InverseCoefficients ic = inverse_coefficients(A0, false);
    if (std::abs(ic.criterion) > 1e-6) {
      const double c2 = ic.poly[1], c1 = ic.poly[0];
      rep.add("inverse x2 = 1/(c1-c2+1)", std::abs(ic.x[1] - 1.0 / (c1 - c2 + 1)) / std::max(1.0, std::abs(ic.x[1])), 1e-10);
      rep.add("inverse x1 = (c2-1)/(c1-c2+1)",
              std::abs(ic.x[0] - (c2 - 1) / (c1 - c2 + 1)) / std::max(1.0, std::abs(ic.x[0])), 1e-10);
      const ExtMat cf = ext_invert({1.0, A0}, InvertMethod::ClosedForm, false);
      const ExtMat ls = ext_invert({1.0, A0}, InvertMethod::LinearSolve, false);
      rep.add("closed form = linear solve", residual(cf.body, ls.body), 1e-8);
      rep.add("A0 + B0 + A0 dk B0 = 0",
              max_abs(A0 + cf.body + dk_stp(A0, cf.body, false)) / std::max(1.0, max_abs(cf.body)), 1e-8);
    }

    Mat Bd = rng.mat(2, 3);
    Bd *= 0.3 / std::max(restricted_form(Bd).norm(), 1e-300);
    rep.add("log(exp(B)) = B", max_abs(ext_log(ext_exp(Bd)) - Bd), 1e-7);

    const Index k = rng.dim(1, 4);
    const Mat R1 = rng.mat(k, k), R2 = rng.mat(k, k);
    const Mat S1 = R1 - R1.transpose(), S2 = R2 - R2.transpose();
    const Mat I = Mat::Identity(k, k);
    const Mat Ab = hat_add(pseudo_stp(bracket(S1, S2, BracketKind::Pseudo), I),
                           pseudo_stp(I, Mat(bracket(S1, S2, BracketKind::Pseudo).transpose())));
    rep.add("G_I closed under pseudo bracket", max_abs(Ab), 1e-8);

    const Shape shapes[] = {{2, 2}, {2, 3}, {3, 2}};
    ExtMat X[3];
    for (auto& x : X) {
      const Shape sh = shapes[rng.dim(0, 2)];
      x = {1.0, rng.mat(sh.rows, sh.cols)};
    }
    rep.add("hyper GL associativity", residual(hyper_gl_mul(hyper_gl_mul(X[0], X[1]), X[2]).body,
                                               hyper_gl_mul(X[0], hyper_gl_mul(X[1], X[2])).body));
  }
  rep.add("exp(0) is the identity", max_abs(ext_exp(Mat::Zero(2, 3)).body), 0.0);
  return rep.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"stp_laws", "hyper_ring", "perm", "geometry", "lie"};
  return names;
}

std::vector<LawResult> run_suite(const std::string& suite, const CheckOptions& opt) {
  if (suite == "all") {
    std::vector<LawResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (suite == "stp_laws") return stp_laws(opt);
  if (suite == "hyper_ring") return hyper_ring(opt);
  if (suite == "perm") return perm(opt);
  if (suite == "geometry") return geometry(opt);
  if (suite == "lie") return lie(opt);
  throw DomainError("unknown check suite '" + suite + "'");
}

}  // namespace dimfree::cli
