#pragma once

#include "spinform/clifford.hpp"
#include "spinform/forms.hpp"
#include "spinform/matrix.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinform {

/// dim B as a function of s mod 8 (period-8 table).
inline int b_of_s(int s) {
  static constexpr std::array<int, 8> table = {2, 4, 8, 4, 8, 4, 2, 1};  // s = 0..7 mod 8
  return table[((s % 8) + 8) % 8];
}

/// Schur algebra isomorphism label as a function of s mod 8.
inline std::string schur_of_s(int s) {
  static const std::array<const char*, 8> table = {"R+R", "R(2)", "C(2)", "H",
                                                   "H+H", "H",    "C",    "R"};
  return table[((s % 8) + 8) % 8];
}

/// Generators of so(V) acting on S: Lambda_ij = 1/2 rho(e_i) rho(e_j), i < j.
inline std::vector<Mat> so_generators(const CliffordModule& M) {
  std::vector<Mat> gens;
  int n = M.sig.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      gens.push_back(M.gammas[i] * M.gammas[j] * Rational(1, 2));
  return gens;
}

namespace detail {

/// A signed permutation matrix described column-wise: column c has its only
/// nonzero at row `row[c]` with value `sgn[c]` (+/-1).
struct SignedPerm {
  std::vector<int> row;
  std::vector<int> sgn;
};

inline std::optional<SignedPerm> as_signed_perm(const Mat& P) {
  SignedPerm sp;
  sp.row.assign(P.cols(), -1);
  sp.sgn.assign(P.cols(), 0);
  for (int j = 0; j < P.cols(); ++j) {
    for (int i = 0; i < P.rows(); ++i) {
      const Rational& v = P.at(i, j);
      if (v == 0) continue;
      if (sp.row[j] >= 0) return std::nullopt;
      if (v != 1 && v != -1) return std::nullopt;
      sp.row[j] = i;
      sp.sgn[j] = (v == 1) ? 1 : -1;
    }
    if (sp.row[j] < 0) return std::nullopt;
  }
  return sp;
}

/// Feed the invariance constraints P^T G + G P = 0 for one generator product
/// P = rho(e_i) rho(e_j) into the online echelon (unknowns G, row-major).
inline void add_invariance_rows(OnlineEchelon& ech, const Mat& P, int d) {
  auto sp = as_signed_perm(P);
  if (sp) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        // (P^T G)[a,b] = sgn[a] G[row[a], b], (G P)[a,b] = sgn[b] G[a, row[b]]
        int v1 = sp->row[a] * d + b, v2 = a * d + sp->row[b];
        SparseRow r;
        if (v1 == v2) {
          if (sp->sgn[a] + sp->sgn[b] == 0) continue;
          r.t.emplace_back(v1, sp->sgn[a] + sp->sgn[b]);
        } else if (v1 < v2) {
          r.t.emplace_back(v1, sp->sgn[a]);
          r.t.emplace_back(v2, sp->sgn[b]);
        } else {
          r.t.emplace_back(v2, sp->sgn[b]);
          r.t.emplace_back(v1, sp->sgn[a]);
        }
        ech.insert(std::move(r));
      }
    return;
  }
  // generic fallback for non-signed-permutation generators
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      std::map<int, Rational> coeff;
      for (int u = 0; u < d; ++u) {
        if (P.at(u, a) != 0) coeff[u * d + b] += P.at(u, a);
        if (P.at(u, b) != 0) coeff[a * d + u] += P.at(u, b);
      }
      Integer l = 1;
      for (auto& [k, v] : coeff)
        if (v != 0) l = boost::multiprecision::lcm(l, den(v));
      SparseRow r;
      for (auto& [k, v] : coeff)
        if (v != 0) r.t.emplace_back(k, num(v) * (l / den(v)));
      ech.insert(std::move(r));
    }
}

/// Basis of so(V)-invariant bilinear forms for an explicit gamma family.
inline std::vector<Mat> invariant_gram_basis(const std::vector<Mat>& gammas, int d) {
  OnlineEchelon ech(d * d);
  int n = static_cast<int>(gammas.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) add_invariance_rows(ech, gammas[i] * gammas[j], d);
  std::vector<Mat> grams;
  for (const auto& v : ech.kernel()) grams.push_back(Mat::unvec(v, d, d));
  return grams;
}

Rational det_small(const Mat& A);

inline Rational det_small(const Mat& A) {
  int n = A.rows();
  if (n == 1) return A.at(0, 0);
  if (n == 2) return A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
  Rational d = 0;
  for (int j = 0; j < n; ++j) {
    if (A.at(0, j) == 0) continue;
    Mat minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = A.at(r, c);
      }
    }
    Rational term = A.at(0, j) * det_small(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

/// Is the real division-algebra quadratic form Q(x) = -scalar(x^2) on the
/// traceless part of a 4-dimensional algebra positive definite? Positive
/// definite means the quaternions; indefinite means R(2). The scalar-ness of
/// x^2 for traceless x holds in both and is asserted.
inline bool division_algebra_test(const std::vector<Mat>& basis) {
  int k = static_cast<int>(basis.size());
  Mat traces(1, k);
  for (int a = 0; a < k; ++a) traces.at(0, a) = basis[a].trace();
  auto traceless = kernel_basis(traces);
  if (traceless.size() != 3) throw std::logic_error("algebra identification: traceless part is not 3-dimensional");
  std::vector<Mat> t;
  int d = basis[0].rows();
  for (const auto& c : traceless) {
    Mat x(d, d);
    for (int a = 0; a < k; ++a)
      if (c.at(a, 0) != 0) x = x + basis[a] * c.at(a, 0);
    t.push_back(x);
  }
  Mat id = Mat::identity(d);
  Mat Q(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Mat prod = t[i] * t[j] + t[j] * t[i];
      auto coeff = solve_in_span({id}, prod);
      if (!coeff) throw std::logic_error("algebra identification: x^2 not scalar on traceless part");
      Q.at(i, j) = Q.at(j, i) = -(*coeff)[0] / 2;
    }
  for (int lead = 1; lead <= 3; ++lead) {
    Mat P(lead, lead);
    for (int i = 0; i < lead; ++i)
      for (int j = 0; j < lead; ++j) P.at(i, j) = Q.at(i, j);
    if (!(det_small(P) > 0)) return false;
  }
  return true;
}

/// Linear basis of the center of the algebra spanned by `basis` (which must
/// be closed under multiplication).
inline std::vector<Mat> center_of(const std::vector<Mat>& basis) {
  int k = static_cast<int>(basis.size());
  int d = basis[0].rows();
  Mat sys(static_cast<int>(basis.size()) * d * d, k);
  int rowBase = 0;
  for (const auto& g : basis) {
    for (int a = 0; a < k; ++a) {
      Mat c = basis[a] * g - g * basis[a];
      Mat v = c.vec();
      for (int r = 0; r < d * d; ++r) sys.at(rowBase + r, a) = v.at(r, 0);
    }
    rowBase += d * d;
  }
  auto coeffs = kernel_basis(sys);
  std::vector<Mat> out;
  for (const auto& c : coeffs) {
    Mat z(d, d);
    for (int a = 0; a < k; ++a)
      if (c.at(a, 0) != 0) z = z + basis[a] * c.at(a, 0);
    out.push_back(z);
  }
  return out;
}

/// Discriminant sign of the minimal polynomial of w over span{Id, w}:
/// w^2 = alpha Id + beta w, returns sign of beta^2 + 4 alpha.
inline int quadratic_disc_sign(const Mat& w) {
  Mat id = Mat::identity(w.rows());
  auto coeff = solve_in_span({id, w}, w * w);
  if (!coeff) throw std::logic_error("algebra identification: element has no quadratic minimal polynomial");
  Rational disc = (*coeff)[1] * (*coeff)[1] + 4 * (*coeff)[0];
  if (disc > 0) return 1;
  if (disc < 0) return -1;
  return 0;
}

inline const Mat& noncentral_scalar_complement(const std::vector<Mat>& c) {
  const Mat id = Mat::identity(c[0].rows());
  for (const auto& z : c)
    if (!in_span({id}, z)) return z;
  throw std::logic_error("algebra identification: center is scalar only");
}

}  // namespace detail

/// Identify the isomorphism type of a matrix algebra given by a linear basis
/// closed under multiplication. Labels: R, C, H, R+R, H+H, R(2), C(2).
/// Inconsistent structure data throws (it signals a construction bug).
inline std::string identify_matrix_algebra(const std::vector<Mat>& basis) {
  if (basis.empty()) throw std::invalid_argument("identify_matrix_algebra: empty basis");
  int k = static_cast<int>(basis.size());
  if (k == 1) return "R";
  auto center = detail::center_of(basis);
  int z = static_cast<int>(center.size());
  if (k == 2) {
    if (z != 2) throw std::logic_error("2-dimensional algebra with trivial center");
    int disc = detail::quadratic_disc_sign(detail::noncentral_scalar_complement(center));
    if (disc > 0) return "R+R";
    if (disc < 0) return "C";
    throw std::logic_error("degenerate 2-dimensional algebra");
  }
  if (k == 4) {
    if (z != 1) throw std::logic_error("4-dimensional Schur algebra with center of dimension " + std::to_string(z));
    return detail::division_algebra_test(basis) ? "H" : "R(2)";
  }
  if (k == 8) {
    if (z != 2) throw std::logic_error("8-dimensional Schur algebra with center of dimension " + std::to_string(z));
    int disc = detail::quadratic_disc_sign(detail::noncentral_scalar_complement(center));
    if (disc > 0) return "H+H";
    if (disc < 0) return "C(2)";
    throw std::logic_error("degenerate center in 8-dimensional algebra");
  }
  throw std::logic_error("unexpected Schur algebra dimension " + std::to_string(k));
}

struct SchurAlgebra {
  std::vector<Mat> basis;
  std::string isoType;
};

/// Commutant of the even Clifford action on S, with its identified type.
/// The result is required to match the period-8 table; a mismatch throws.
inline SchurAlgebra schur_algebra(const CliffordModule& M) {
  std::vector<Mat> gens;
  int n = M.sig.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) gens.push_back(M.gammas[i] * M.gammas[j]);
  SchurAlgebra sa;
  sa.basis = commutant_basis(gens, M.dimS);
  sa.isoType = identify_matrix_algebra(sa.basis);
  if (static_cast<int>(sa.basis.size()) != b_of_s(M.sig.s()))
    throw std::logic_error("schur_algebra: dimension disagrees with the period-8 table");
  if (sa.isoType != schur_of_s(M.sig.s()))
    throw std::logic_error("schur_algebra: identified type " + sa.isoType +
                           " disagrees with the period-8 table");
  return sa;
}

/// Basis of the space B of so(V)-invariant bilinear forms on S.
/// The dimension is checked against b(s mod 8).
inline std::vector<Mat> invariant_forms(const CliffordModule& M) {
  auto grams = detail::invariant_gram_basis(M.gammas, M.dimS);
  if (static_cast<int>(grams.size()) != b_of_s(M.sig.s()))
    throw std::logic_error("invariant_forms: dimension disagrees with b(s)");
  return grams;
}

inline FundamentalInvariants fundamental_invariants(const CliffordModule& M, const Mat& gram) {
  return detail::form_invariants_raw(M.gammas, M.grading, gram);
}

inline FundamentalInvariants endo_invariants(const CliffordModule& M, const Mat& hGram,
                                             const Mat& A) {
  return detail::endo_invariants_raw(M.gammas, M.grading, hGram, A);
}

/// The two admissible forms on the split module S_{m,m}: f and f_E = f(E., .).
inline std::pair<Mat, Mat> split_forms(int m) {
  if (m < 1) throw std::invalid_argument("split_forms: m must be >= 1");
  detail::Monomials mon(m);
  Mat f = detail::split_gram_f(mon);
  Mat fE = detail::degree_involution(mon).transpose() * f;
  return {f, fE};
}

/// The canonical form h of a module: the Pin-invariant scalar product in
/// definite signature, f_E in split signature, h1 (x) h2 for mixed builds.
/// Verifies invariance, and Pin-invariance under each rho(e_i) in the
/// definite case.
inline Mat canonical_form(const CliffordModule& M) {
  const Mat& G = M.canonicalGram;
  if (G.rows() != M.dimS) throw std::logic_error("canonical_form: module carries no model data");
  for (const auto& L : so_generators(M))
    if (!(L.transpose() * G + G * L).is_zero())
      throw std::logic_error("canonical_form: form is not so(V)-invariant");
  if (M.recipe == Recipe::DefiniteEven || M.recipe == Recipe::DefiniteOdd) {
    for (const auto& g : M.gammas)
      if (g.transpose() * G * g != G)
        throw std::logic_error("canonical_form: form is not Pin-invariant");
  }
  if (M.recipe == Recipe::Split && G != split_forms(M.splitM).second)
    throw std::logic_error("canonical_form: split canonical form is not f_E");
  if (detail::form_invariants_raw(M.gammas, M.grading, G) != M.hInv)
    throw std::logic_error("canonical_form: stored invariants are stale");
  return G;
}

/// so(V)-equivariant map V -> S* (x) S*, stored through its component Gram
/// matrices B_k = j(e_k); sigma/iota are the symmetry and isotropy classes
/// (0 when mixed or no grading).
struct EquivariantMap {
  std::vector<Mat> components;
  int sigma = 0;
  int iota = 0;
};

/// j_rho(beta): v -> beta(rho(v) . , .), componentwise B_k = rho(e_k)^T G.
inline EquivariantMap j_rho(const CliffordModule& M, const Mat& gram) {
  EquivariantMap j;
  bool allSym = true, allSkew = true, allOrth = true, allIso = true;
  for (const auto& g : M.gammas) {
    Mat B = g.transpose() * gram;
    allSym = allSym && B.is_symmetric();
    allSkew = allSkew && B.is_skew();
    if (M.grading) {
      Mat conj = M.grading->transpose() * B * *M.grading;
      allOrth = allOrth && (conj == B);
      allIso = allIso && (conj == -B);
    }
    j.components.push_back(std::move(B));
  }
  bool zero = gram.is_zero();
  j.sigma = zero ? 0 : (allSym ? 1 : (allSkew ? -1 : 0));
  j.iota = (!M.grading || zero) ? 0 : (allOrth ? 1 : (allIso ? -1 : 0));
  return j;
}

struct AdmissibleEntry {
  std::string name;
  Mat endo;
  Mat formGram;
  FundamentalInvariants formInv;
  FundamentalInvariants endoInv;
};

struct AdmissibleBasis {
  std::vector<AdmissibleEntry> entries;
};

/// The admissible basis of B: the model's named Schur endomorphisms paired
/// through the tensor construction, with forms h_A = h(A ., .). All
/// invariants are recomputed from the definitions and compared against the
/// values carried by the module (which, for tensor builds, were derived by
/// the multiplicativity rules); the forms are checked to span B. Any
/// disagreement throws, signalling a recipe bug.
inline AdmissibleBasis admissible_basis(const CliffordModule& M) {
  if (M.ops.empty())
    throw std::invalid_argument("admissible_basis: module carries no model data");
  AdmissibleBasis ab;
  for (const auto& op : M.ops) {
    AdmissibleEntry e;
    e.name = op.name;
    e.endo = op.op;
    e.formGram = op.op.transpose() * M.canonicalGram;
    e.endoInv = detail::endo_invariants_raw(M.gammas, M.grading, M.canonicalGram, op.op);
    e.formInv = detail::form_invariants_raw(M.gammas, M.grading, e.formGram);
    if (e.formInv.tau == 0 || e.formInv.sigma == 0 || e.endoInv.tau == 0 || e.endoInv.sigma == 0)
      throw std::logic_error("admissible_basis: entry " + e.name + " is not admissible");
    if (M.grading && (e.formInv.iota == 0 || e.endoInv.iota == 0))
      throw std::logic_error("admissible_basis: entry " + e.name + " has undefined isotropy");
    if (e.endoInv != op.endoInv || e.formInv != op.formInv)
      throw std::logic_error("admissible_basis: definition-derived invariants of " + e.name +
                             " disagree with the transported values");
    // multiplicativity of the fundamental invariants for h o A
    FundamentalInvariants expect{M.hInv.tau * e.endoInv.tau, M.hInv.sigma * e.endoInv.sigma,
                                 M.grading ? M.hInv.iota * e.endoInv.iota : 0};
    if (e.formInv != expect)
      throw std::logic_error("admissible_basis: multiplicativity fails for " + e.name);
    ab.entries.push_back(std::move(e));
  }
  // the forms must be independent and span B
  std::vector<Mat> grams;
  for (const auto& e : ab.entries) grams.push_back(e.formGram);
  auto forms = invariant_forms(M);
  if (span_rank(grams) != static_cast<int>(grams.size()))
    throw std::logic_error("admissible_basis: forms are linearly dependent");
  if (forms.size() != grams.size())
    throw std::logic_error("admissible_basis: entry count differs from dim B");
  std::vector<Mat> all = forms;
  all.insert(all.end(), grams.begin(), grams.end());
  if (span_rank(all) != static_cast<int>(forms.size()))
    throw std::logic_error("admissible_basis: forms do not span B");
  return ab;
}

}  // namespace spinform
