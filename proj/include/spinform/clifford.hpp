#pragma once

#include "spinform/forms.hpp"
#include "spinform/matrix.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinform {

enum class Sign { Positive, Negative };
enum class Recipe { Split, DefiniteEven, DefiniteOdd, Tensor };

/// Pseudo-Euclidean signature (p, q): the metric is diag(+1 x p, -1 x q).
/// Generators are listed positives first. The global sign convention for the
/// Clifford relation is v.v = -<v,v>.1.
struct Signature {
  int p = 0;
  int q = 0;
  int n() const { return p + q; }
  int s() const { return p - q; }
  bool operator==(const Signature&) const = default;
};

/// One element of the admissible Schur basis attached to a module, together
/// with its fundamental invariants relative to the canonical form. For base
/// recipes the invariants are computed from the definitions at build time;
/// for tensor modules they are derived by the multiplicativity rules, and
/// the invariant-analysis layer re-derives them from definitions and checks
/// that the two agree.
struct OpInfo {
  std::string name;
  Mat op;
  FundamentalInvariants endoInv;
  FundamentalInvariants formInv;  // invariants of h o op
};

struct CliffordModule {
  Signature sig;
  int dimS = 0;
  std::vector<Mat> gammas;  // gammas[i] = rho(e_{i+1}), positives first
  std::optional<Mat> grading;
  std::string gradingLabel;
  std::optional<Mat> complexStructure;
  Recipe recipe = Recipe::Split;
  int splitM = 0;  // m for split modules and for the split factor of tensors

  Mat canonicalGram;              // Gram matrix of the canonical form h
  FundamentalInvariants hInv;     // invariants of h
  std::vector<OpInfo> ops;        // admissible Schur basis, "Id" first
  bool invariantsByRule = false;  // true when ops carry rule-derived values
};

namespace detail {

inline int popcount32(uint32_t x) { return std::popcount(x); }

/// Monomial basis e_A of a rank-m Clifford algebra (or of /\U), subsets of
/// {0..m-1} ordered by degree, then lexicographically on the element list.
struct Monomials {
  int m = 0;
  std::vector<uint32_t> masks;       // position -> subset
  std::vector<int> index;            // subset -> position
  explicit Monomials(int m_) : m(m_), masks(1u << m_), index(1u << m_) {
    for (uint32_t a = 0; a < masks.size(); ++a) masks[a] = a;
    std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
      int pa = popcount32(a), pb = popcount32(b);
      if (pa != pb) return pa < pb;
      if (a == b) return false;
      uint32_t diff = a ^ b;
      uint32_t low = diff & (~diff + 1);
      return (a & low) != 0;  // the one containing the lowest differing element
    });
    for (size_t i = 0; i < masks.size(); ++i) index[masks[i]] = static_cast<int>(i);
  }
  int dim() const { return static_cast<int>(masks.size()); }
};

inline int sign_below(uint32_t mask, int i) {
  return (popcount32(mask & ((1u << i) - 1)) & 1) ? -1 : 1;
}
inline int sign_above(uint32_t mask, int i) {
  return (popcount32(mask & ~((2u << i) - 1)) & 1) ? -1 : 1;
}

/// Left multiplication by the i-th generator; sq is the generator square
/// (-1 in Cl_{m,0}, +1 in Cl_{0,m} under v.v = -<v,v>).
inline Mat left_mult(const Monomials& mon, int i, int sq) {
  Mat L(mon.dim(), mon.dim());
  for (int col = 0; col < mon.dim(); ++col) {
    uint32_t A = mon.masks[col];
    int s = sign_below(A, i);
    if (A & (1u << i)) s *= sq;
    L.at(mon.index[A ^ (1u << i)], col) = s;
  }
  return L;
}

inline Mat right_mult(const Monomials& mon, int i, int sq) {
  Mat R(mon.dim(), mon.dim());
  for (int col = 0; col < mon.dim(); ++col) {
    uint32_t A = mon.masks[col];
    int s = sign_above(A, i);
    if (A & (1u << i)) s *= sq;
    R.at(mon.index[A ^ (1u << i)], col) = s;
  }
  return R;
}

/// Degree involution alpha (+1 on even, -1 on odd degree).
inline Mat degree_involution(const Monomials& mon) {
  Mat E(mon.dim(), mon.dim());
  for (int i = 0; i < mon.dim(); ++i) E.at(i, i) = (popcount32(mon.masks[i]) & 1) ? -1 : 1;
  return E;
}

inline Mat left_mult_volume(const Monomials& mon, int sq) {
  Mat L = Mat::identity(mon.dim());
  for (int i = mon.m - 1; i >= 0; --i) L = left_mult(mon, i, sq) * L;
  return L;
}

/// Exterior multiplication u_i /\ . on /\U (no square term).
inline Mat wedge(const Monomials& mon, int i) {
  Mat W(mon.dim(), mon.dim());
  for (int col = 0; col < mon.dim(); ++col) {
    uint32_t A = mon.masks[col];
    if (A & (1u << i)) continue;
    W.at(mon.index[A | (1u << i)], col) = sign_below(A, i);
  }
  return W;
}

/// Interior multiplication with the combinatorial pairing i_{u*_i} u_j = delta_ij.
inline Mat contraction(const Monomials& mon, int i) {
  Mat C(mon.dim(), mon.dim());
  for (int col = 0; col < mon.dim(); ++col) {
    uint32_t A = mon.masks[col];
    if (!(A & (1u << i))) continue;
    C.at(mon.index[A & ~(1u << i)], col) = sign_below(A, i);
  }
  return C;
}

// Realification of a complex model: real basis {b_A} then {i b_A}.
inline Mat complexify(const Mat& T) { return kronecker(Mat::identity(2), T); }
inline Mat mult_by_i(int dim) {
  return kronecker(Mat::of({{0, -1}, {1, 0}}), Mat::identity(dim));
}
inline Mat conjugation(int dim) {
  Mat c = Mat::identity(2);
  c.at(1, 1) = -1;
  return kronecker(c, Mat::identity(dim));
}

/// Gram matrix of the form f on /\U: f(s,t) vol = eps_i s /\ t.
inline Mat split_gram_f(const Monomials& mon) {
  int m = mon.m;
  uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
  Mat G(mon.dim(), mon.dim());
  for (int a = 0; a < mon.dim(); ++a) {
    uint32_t A = mon.masks[a];
    uint32_t B = full & ~A;
    int i = popcount32(A);
    // permutation sign of sorting (A ascending, B ascending) into 0..m-1
    int perm = 1;
    for (int b = 0; b < m; ++b) {
      if (!(B & (1u << b))) continue;
      if (popcount32(A & ~((2u << b) - 1)) & 1) perm = -perm;
    }
    int eps = ((i * (i + 1) / 2) & 1) ? -1 : 1;
    G.at(a, mon.index[B]) = eps * perm;
  }
  return G;
}

inline FundamentalInvariants id_invariants(bool graded) {
  return {1, 1, graded ? 1 : 0};
}

inline OpInfo make_op(std::string name, Mat op, const std::vector<Mat>& gammas,
                      const std::optional<Mat>& grading, const Mat& hGram) {
  OpInfo info;
  info.name = std::move(name);
  info.endoInv = endo_invariants_raw(gammas, grading, hGram, op);
  info.formInv = form_invariants_raw(gammas, grading, op.transpose() * hGram);
  info.op = std::move(op);
  return info;
}

}  // namespace detail

/// Irreducible Cl(m,m)-module on S = /\U with rho(u) = u /\ ., rho(u*) = -u* _| .
/// under the normalization u_i = (e_i + e_{m+i})/2, u*_i = (e_i - e_{m+i})/2.
/// The grading is the parity involution (S+ = /\^ev U), the canonical form
/// is f_E.
inline CliffordModule build_split(int m) {
  if (m < 1) throw std::invalid_argument("build_split: m must be >= 1");
  detail::Monomials mon(m);
  CliffordModule M;
  M.sig = {m, m};
  M.dimS = mon.dim();
  M.recipe = Recipe::Split;
  M.splitM = m;
  for (int i = 0; i < m; ++i) M.gammas.push_back(detail::wedge(mon, i) - detail::contraction(mon, i));
  for (int i = 0; i < m; ++i) M.gammas.push_back(detail::wedge(mon, i) + detail::contraction(mon, i));
  Mat E = detail::degree_involution(mon);
  M.grading = E;
  M.gradingLabel = "parity";
  Mat f = detail::split_gram_f(mon);
  M.canonicalGram = E.transpose() * f;  // f_E
  M.hInv = detail::form_invariants_raw(M.gammas, M.grading, M.canonicalGram);
  M.ops.push_back(detail::make_op("Id", Mat::identity(M.dimS), M.gammas, M.grading, M.canonicalGram));
  M.ops.push_back(detail::make_op("E", E, M.gammas, M.grading, M.canonicalGram));
  return M;
}

namespace detail {

struct DefiniteEvenModel {
  int m = 0;
  Sign sign = Sign::Positive;
  bool complexModel = false;
  int dim = 0;
  std::vector<Mat> gammas;
  // operators on the final (possibly realified) space
  Mat alphaOp;             // degree involution
  std::optional<Mat> I;    // multiplication by i (complex models)
  std::optional<Mat> conj; // complex conjugation (complex models)
  Mat LomegaReal;          // left multiplication by the volume element of Cl_{(0,)m},
                           // on the 2^m-dimensional real model space
};

inline DefiniteEvenModel make_definite_even(int m, Sign sign) {
  DefiniteEvenModel D;
  D.m = m;
  D.sign = sign;
  Monomials mon(m);
  int sq = (sign == Sign::Positive) ? -1 : 1;
  int r = m & 3;
  // real recipes: positive m = 0,3 mod 4; negative m = 0,1 mod 4
  bool realModel = (sign == Sign::Positive) ? (r == 0 || r == 3) : (r == 0 || r == 1);
  D.complexModel = !realModel;
  Mat Lom = left_mult_volume(mon, sq);
  D.LomegaReal = Lom;
  bool useAlpha = (sign == Sign::Positive) ? (r == 3) : (r == 1);
  if (realModel) {
    D.dim = mon.dim();
    D.alphaOp = degree_involution(mon);
    for (int i = 0; i < m; ++i) D.gammas.push_back(left_mult(mon, i, sq));
    for (int i = 0; i < m; ++i) {
      Mat g = Lom * right_mult(mon, i, sq);
      if (useAlpha) g = g * D.alphaOp;
      D.gammas.push_back(g);
    }
  } else {
    D.dim = 2 * mon.dim();
    D.alphaOp = complexify(degree_involution(mon));
    D.I = mult_by_i(mon.dim());
    D.conj = conjugation(mon.dim());
    for (int i = 0; i < m; ++i) D.gammas.push_back(complexify(left_mult(mon, i, sq)));
    for (int i = 0; i < m; ++i)
      D.gammas.push_back(*D.I * complexify(right_mult(mon, i, sq) * degree_involution(mon)));
  }
  return D;
}

inline CliffordModule assemble_definite(Signature sig, Recipe recipe, int splitHint,
                                        std::vector<Mat> gammas, std::optional<Mat> grading,
                                        std::string gradingLabel, std::optional<Mat> cx,
                                        std::vector<std::pair<std::string, Mat>> namedOps,
                                        int dim) {
  CliffordModule M;
  M.sig = sig;
  M.dimS = dim;
  M.recipe = recipe;
  M.splitM = splitHint;
  M.gammas = std::move(gammas);
  M.grading = std::move(grading);
  M.gradingLabel = std::move(gradingLabel);
  M.complexStructure = std::move(cx);
  M.canonicalGram = Mat::identity(dim);  // Pin-invariant scalar product in the recipe basis
  M.hInv = form_invariants_raw(M.gammas, M.grading, M.canonicalGram);
  for (auto& [name, op] : namedOps)
    M.ops.push_back(make_op(name, std::move(op), M.gammas, M.grading, M.canonicalGram));
  return M;
}

inline CliffordModule build_definite_even(int m, Sign sign) {
  DefiniteEvenModel D = make_definite_even(m, sign);
  int r = m & 3;
  bool graded = (sign == Sign::Positive) ? (r != 3) : (r != 1);
  std::optional<Mat> grading;
  std::string gradingLabel;
  if (graded) {
    grading = D.alphaOp;
    gradingLabel = "alpha";
  }
  std::vector<std::pair<std::string, Mat>> ops;
  ops.emplace_back("Id", Mat::identity(D.dim));
  if (!D.complexModel) {
    if (r == 0) {
      ops.emplace_back("E", D.alphaOp);
    } else {  // positive r = 3, negative r = 1
      ops.emplace_back("J", D.LomegaReal * D.alphaOp);
    }
  } else {
    Mat J = complexify(D.LomegaReal) * *D.conj;
    ops.emplace_back("I", *D.I);
    ops.emplace_back("J", J);
    ops.emplace_back("K", *D.I * J);
    ops.emplace_back("E", D.alphaOp);
    ops.emplace_back("EI", D.alphaOp * *D.I);
    ops.emplace_back("EJ", D.alphaOp * J);
    ops.emplace_back("EK", D.alphaOp * *D.I * J);
  }
  Signature sig = (sign == Sign::Positive) ? Signature{2 * m, 0} : Signature{0, 2 * m};
  return assemble_definite(sig, Recipe::DefiniteEven, 0, D.gammas, std::move(grading),
                           std::move(gradingLabel), D.I, std::move(ops), D.dim);
}

inline Mat product_of(const std::vector<Mat>& gs, int dim) {
  Mat P = Mat::identity(dim);
  for (const auto& g : gs) P = P * g;
  return P;
}

inline CliffordModule build_definite_odd(int m, Sign sign) {
  // orthogonal decomposition R e_0 + R^{2m} (resp. negative); the new gamma
  // for e_0 is appended after the 2m gammas of the even model
  DefiniteEvenModel D = make_definite_even(m, sign);
  int r = m & 3;
  Monomials mon(m);

  std::vector<Mat> gammas;
  std::optional<Mat> grading;
  std::string gradingLabel;
  std::optional<Mat> cx;
  std::vector<std::pair<std::string, Mat>> ops;
  int dim = D.dim;
  ops.emplace_back("Id", Mat::identity(1));  // placeholder, fixed below

  bool extend = (sign == Sign::Positive) ? (r == 0) : (r == 1);  // S (x) C needed
  if (!extend) {
    gammas = D.gammas;
    Mat vol = product_of(D.gammas, D.dim);
    bool composeI = (sign == Sign::Positive) ? (r == 2) : (r == 3);
    gammas.push_back(composeI ? (*D.I * vol) : vol);
    cx = D.I;
    if (sign == Sign::Positive) {
      if (r == 1 || r == 2) {
        Mat J = complexify(D.LomegaReal) * *D.conj;
        ops.emplace_back("I", *D.I);
        ops.emplace_back("J", J);
        ops.emplace_back("K", *D.I * J);
      }
      // r == 3: Schur algebra is R Id, no further ops
    } else {
      if (r == 2 || r == 3) {
        Mat Jhat = complexify(D.LomegaReal) * D.alphaOp * *D.conj;
        ops.emplace_back("I", *D.I);
        ops.emplace_back("Jhat", Jhat);
        ops.emplace_back("Khat", *D.I * Jhat);
        if (r == 3) {
          grading = Jhat;
          gradingLabel = "L_omega.alpha.conj";
        }
      }
      // r == 0: Schur algebra is R Id
    }
  } else {
    // complexify the real even model
    dim = 2 * D.dim;
    for (const auto& g : D.gammas) gammas.push_back(complexify(g));
    Mat I = mult_by_i(D.dim);
    Mat conj = conjugation(D.dim);
    Mat vol = product_of(gammas, dim);
    gammas.push_back(I * vol);
    cx = I;
    if (sign == Sign::Positive) {
      // m = 0 mod 4: J = alpha o conj; the grading c o alpha equals J
      Mat alphaC = complexify(degree_involution(mon));
      Mat J = alphaC * conj;
      ops.emplace_back("I", I);
      ops.emplace_back("J", J);
      ops.emplace_back("K", I * J);
      grading = conj * alphaC;
      gradingLabel = "conj.alpha";
      if (*grading != J) throw std::logic_error("definite odd: grading differs from J");
    } else {
      // m = 1 mod 4
      Mat Jhat = complexify(D.LomegaReal * degree_involution(mon)) * conj;
      ops.emplace_back("I", I);
      ops.emplace_back("Jhat", Jhat);
      ops.emplace_back("Khat", I * Jhat);
    }
  }
  ops[0] = {"Id", Mat::identity(dim)};
  Signature sig = (sign == Sign::Positive) ? Signature{2 * m + 1, 0} : Signature{0, 2 * m + 1};
  return assemble_definite(sig, Recipe::DefiniteOdd, 0, std::move(gammas), std::move(grading),
                           std::move(gradingLabel), std::move(cx), std::move(ops), dim);
}

}  // namespace detail

/// The module S_{k,0} (sign positive) or S_{0,k} (sign negative) in the
/// explicit model. Complex models are realified with an explicit complex
/// structure; all arithmetic stays rational.
inline CliffordModule build_definite(int k, Sign sign) {
  if (k < 1) throw std::invalid_argument("build_definite: k must be >= 1");
  if (k % 2 == 0) return detail::build_definite_even(k / 2, sign);
  return detail::build_definite_odd(k / 2, sign);
}

/// Z2-graded tensor product of Clifford modules: gammas of the first factor
/// act as rho1 (x) Id, gammas of the second as E1 (x) rho2 (the Koszul sign
/// realized through the grading operator). Generator order of the result:
/// positives of V1, positives of V2, negatives of V1, negatives of V2.
inline CliffordModule graded_tensor(const CliffordModule& M1, const CliffordModule& M2) {
  if (!M1.grading)
    throw std::invalid_argument("graded_tensor: first factor must carry a grading");
  const Mat& E1 = *M1.grading;
  Mat id2 = Mat::identity(M2.dimS);
  CliffordModule M;
  M.sig = {M1.sig.p + M2.sig.p, M1.sig.q + M2.sig.q};
  M.dimS = M1.dimS * M2.dimS;
  M.recipe = Recipe::Tensor;
  M.splitM = (M1.recipe == Recipe::Split) ? M1.splitM : 0;
  for (int i = 0; i < M1.sig.p; ++i) M.gammas.push_back(kronecker(M1.gammas[i], id2));
  for (int i = 0; i < M2.sig.p; ++i) M.gammas.push_back(kronecker(E1, M2.gammas[i]));
  for (int i = 0; i < M1.sig.q; ++i) M.gammas.push_back(kronecker(M1.gammas[M1.sig.p + i], id2));
  for (int i = 0; i < M2.sig.q; ++i) M.gammas.push_back(kronecker(E1, M2.gammas[M2.sig.p + i]));
  if (M2.grading) {
    M.grading = kronecker(E1, *M2.grading);
    M.gradingLabel = "E1(x)E2";
  }
  if (M2.complexStructure)
    M.complexStructure = kronecker(Mat::identity(M1.dimS), *M2.complexStructure);

  if (M1.recipe != Recipe::Split || M1.ops.size() != 2 || M2.ops.empty()) return M;

  // canonical form h = h1 (x) h2 with h1 in {f, f_E} the unique admissible
  // choice satisfying tau(h2) = iota(h1) tau(h1)
  const OpInfo& idOp1 = M1.ops[0];
  const OpInfo& eOp1 = M1.ops[1];
  Mat gramFE = M1.canonicalGram;
  Mat gramF = E1.transpose() * gramFE;
  auto pick1 = [&](int tau2) {
    // iota(f_E) tau(f_E) = iota(f_E); iota(f) tau(f) = -iota(f)
    int feProduct = idOp1.formInv.iota * idOp1.formInv.tau;
    return (tau2 == feProduct) ? std::pair<const Mat*, const FundamentalInvariants*>{&gramFE,
                                                                                     &idOp1.formInv}
                               : std::pair<const Mat*, const FundamentalInvariants*>{&gramF,
                                                                                     &eOp1.formInv};
  };
  auto [h1gram, h1inv] = pick1(M2.hInv.tau);
  if (h1inv->iota * h1inv->tau != M2.hInv.tau)
    throw std::logic_error("graded_tensor: canonical pairing rule failed");
  M.canonicalGram = kronecker(*h1gram, M2.canonicalGram);
  M.hInv = {h1inv->tau, h1inv->sigma * M2.hInv.sigma,
            M2.grading ? h1inv->iota * M2.hInv.iota : 0};
  M.invariantsByRule = true;

  for (const auto& op2 : M2.ops) {
    // A1 in {Id, E} with tau(A2) = iota(A1) tau(A1)
    const OpInfo& a1 = (op2.endoInv.tau == 1) ? idOp1 : eOp1;
    auto [b1gram, b1inv] = pick1(op2.formInv.tau);
    OpInfo t;
    t.name = op2.name;
    t.op = kronecker(a1.op, op2.op);
    t.endoInv = {a1.endoInv.tau, a1.endoInv.sigma * op2.endoInv.sigma,
                 M2.grading ? a1.endoInv.iota * op2.endoInv.iota : 0};
    t.formInv = {b1inv->tau, b1inv->sigma * op2.formInv.sigma,
                 M2.grading ? b1inv->iota * op2.formInv.iota : 0};
    M.ops.push_back(std::move(t));
  }
  return M;
}

/// Dispatch: split when p = q, definite when one side vanishes, otherwise
/// the graded tensor of the split part and the definite remainder.
inline CliffordModule build(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1)
    throw std::invalid_argument("build: need p, q >= 0 and p + q >= 1");
  if (p == q) return build_split(p);
  if (q == 0) return build_definite(p, Sign::Positive);
  if (p == 0) return build_definite(q, Sign::Negative);
  int m = std::min(p, q);
  return graded_tensor(build_split(m),
                       build_definite(p + q - 2 * m, p > q ? Sign::Positive : Sign::Negative));
}

/// omega = rho(e_1) ... rho(e_n) in index order. Checks omega^2 = +/- Id with
/// the sign (-1)^(n(n-1)/2 + p) the volume-element lemmas dictate.
inline Mat volume_element(const CliffordModule& M) {
  Mat w = detail::product_of(M.gammas, M.dimS);
  int n = M.sig.n();
  int expected = ((n * (n - 1) / 2 + M.sig.p) % 2 == 0) ? 1 : -1;
  if (w * w != Mat::identity(M.dimS) * Rational(expected))
    throw std::logic_error("volume_element: omega^2 has the wrong sign");
  return w;
}

/// Exact check of all Clifford relations and grading/complex-structure
/// invariants of a module; throws std::logic_error on any violation.
inline void check_module_invariants(const CliffordModule& M) {
  int n = M.sig.n();
  if (static_cast<int>(M.gammas.size()) != n) throw std::logic_error("gamma count");
  Mat id = Mat::identity(M.dimS);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat anti = M.gammas[i] * M.gammas[j] + M.gammas[j] * M.gammas[i];
      int metric = (i == j) ? (i < M.sig.p ? 1 : -1) : 0;
      if (anti != id * Rational(-2 * metric)) throw std::logic_error("Clifford relation fails");
    }
  if (M.grading) {
    const Mat& E = *M.grading;
    if (E * E != id) throw std::logic_error("grading does not square to Id");
    if (E == id || E == -id) throw std::logic_error("grading is trivial");
    for (const auto& g : M.gammas)
      if (E * g != -(g * E)) throw std::logic_error("grading does not anticommute with gammas");
  }
  if (M.complexStructure) {
    const Mat& I = *M.complexStructure;
    if (I * I != -id) throw std::logic_error("complex structure does not square to -Id");
  }
}

}  // namespace spinform
