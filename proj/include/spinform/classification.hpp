#pragma once

#include "spinform/clifford.hpp"
#include "spinform/invariants.hpp"
#include "spinform/matrix.hpp"
#include "spinform/report.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace spinform {

/// Z2-graded type of the Clifford algebra as a function of s mod 8:
/// (type of Cl^0, type of Cl).
inline std::pair<std::string, std::string> t_of_s(int s) {
  switch (((s % 8) + 8) % 8) {
    case 1: return {"R", "C"};
    case 2: return {"C", "H"};
    case 3: return {"H", "2H"};
    case 4: return {"2H", "H"};
    case 5: return {"H", "C"};
    case 6: return {"C", "R"};
    case 7: return {"R", "2R"};
    default: return {"2R", "R"};
  }
}

/// The counts (L++, L+-, L-+, L--) / (L+, L-) for one signature: the atoms
/// of the classification tables.
struct ClassificationCell {
  Signature sig;
  int lplus = 0, lminus = 0;
  bool hasQuad = false;
  std::array<int, 4> quad{};  // L++, L+-, L-+, L--
  std::string schur;
  int b = 0;

  std::string countsString() const {
    std::ostringstream os;
    if (hasQuad)
      os << quad[0] << "," << quad[1] << "," << quad[2] << "," << quad[3];
    else
      os << lplus << "," << lminus;
    return os.str();
  }
  bool sameCounts(const ClassificationCell& o) const {
    return lplus == o.lplus && lminus == o.lminus && hasQuad == o.hasQuad &&
           (!hasQuad || quad == o.quad);
  }
};

/// Tally sigma(j_A) and iota(j_A) over the admissible basis, computing both
/// by the sign formulas sigma(j_A) = tau(h_A) sigma(h_A), iota(j_A) =
/// -iota(h_A) and directly on the constructed map; any disagreement throws.
inline ClassificationCell count_embeddings(const CliffordModule& M) {
  auto ab = admissible_basis(M);
  ClassificationCell cell;
  cell.sig = M.sig;
  cell.b = static_cast<int>(ab.entries.size());
  cell.hasQuad = M.grading.has_value();
  for (const auto& e : ab.entries) {
    int sigmaFormula = e.formInv.tau * e.formInv.sigma;
    int iotaFormula = M.grading ? -e.formInv.iota : 0;
    EquivariantMap j = j_rho(M, e.formGram);
    if (j.sigma != sigmaFormula || j.iota != iotaFormula)
      throw std::logic_error("count_embeddings: direct symmetry of j_" + e.name +
                             " disagrees with the formula");
    if (sigmaFormula > 0) ++cell.lplus;
    else ++cell.lminus;
    if (cell.hasQuad) {
      int k = (sigmaFormula > 0 ? 0 : 2) + (iotaFormula > 0 ? 0 : 1);
      ++cell.quad[k];
    }
  }
  if (cell.lplus + cell.lminus != cell.b)
    throw std::logic_error("count_embeddings: counts do not total dim B");
  cell.schur = schur_algebra(M).isoType;
  return cell;
}

// ---------------------------------------------------------------------------
// tables over the mod-8 residue lattice

enum class TableKind { Pairs, Quadruples, Complex };

inline std::string table_kind_name(TableKind k) {
  switch (k) {
    case TableKind::Pairs: return "pairs";
    case TableKind::Quadruples: return "quadruples";
    default: return "complex";
  }
}

struct TableCell {
  int nRes = 0, sRes = 0;  // residues mod 8
  bool absent = true;
  ClassificationCell cell;

  bool operator==(const TableCell& o) const {
    return nRes == o.nRes && sRes == o.sRes && absent == o.absent &&
           (absent || (cell.sig == o.cell.sig && cell.sameCounts(o.cell) &&
                       cell.schur == o.cell.schur && cell.b == o.cell.b));
  }
};

struct ComplexCell {
  int m = 0;
  bool hasQuad = false;
  int lplus = 0, lminus = 0;
  std::array<int, 4> quad{};

  std::string countsString() const {
    std::ostringstream os;
    if (hasQuad)
      os << quad[0] << "," << quad[1] << "," << quad[2] << "," << quad[3];
    else
      os << lplus << "," << lminus;
    return os.str();
  }
  bool operator==(const ComplexCell&) const = default;
};

struct TableDocument {
  TableKind kind = TableKind::Pairs;
  int maxN = 0;
  std::vector<TableCell> cells;          // pairs / quadruples kinds
  std::vector<ComplexCell> complexCells;  // complex kind

  const TableCell* find(int nRes, int sRes) const {
    for (const auto& c : cells)
      if (c.nRes == nRes && c.sRes == sRes) return &c;
    return nullptr;
  }
  bool operator==(const TableDocument& o) const {
    return kind == o.kind && maxN == o.maxN && cells == o.cells && complexCells == o.complexCells;
  }
};

/// Representative of a residue class (n mod 8, s mod 8) with n + s even:
/// minimal dimension n, then minimal |p - q|, then minimal p. Returns
/// nullopt when the class is unrealizable within maxN.
inline std::optional<Signature> residue_representative(int nRes, int sRes, int maxN) {
  if ((nRes + sRes) % 2 != 0) return std::nullopt;
  for (int n = (nRes == 0 ? 8 : nRes); n <= maxN; n += 8) {
    std::optional<int> best;
    for (int s = -n + ((sRes + n) % 8 + 8) % 8; s <= n; s += 8)
      if (!best || std::abs(s) < std::abs(*best) || (std::abs(s) == std::abs(*best) && s < *best))
        best = s;
    if (best) return Signature{(n + *best) / 2, (n - *best) / 2};
  }
  return std::nullopt;
}

ComplexCell classify_complex(int m);

/// One cell per realizable residue class (n mod 8, s mod 8), n + s even,
/// with a representative of minimal dimension <= maxN (minimal n, then
/// minimal p). Unrealizable classes are marked absent.
inline TableDocument emit_table(int maxN, TableKind kind) {
  if (maxN < 1) throw std::invalid_argument("emit_table: maxN must be >= 1");
  TableDocument doc;
  doc.kind = kind;
  doc.maxN = maxN;
  if (kind == TableKind::Complex) {
    for (int m = 1; m <= maxN; ++m) doc.complexCells.push_back(classify_complex(m));
    return doc;
  }
  for (int sRes = 0; sRes < 8; ++sRes)
    for (int nRes = 0; nRes < 8; ++nRes) {
      if ((nRes + sRes) % 2 != 0) continue;
      TableCell tc;
      tc.nRes = nRes;
      tc.sRes = sRes;
      if (auto rep = residue_representative(nRes, sRes, maxN)) {
        tc.absent = false;
        tc.cell = count_embeddings(build(rep->p, rep->q));
        if (kind == TableKind::Pairs) {
          tc.cell.hasQuad = false;  // present the pair (L+, L-)
          tc.cell.quad = {};
        }
      }
      doc.cells.push_back(tc);
    }
  return doc;
}

/// Gamma-reflection invariance on the residue lattice (about n = +/-2 and
/// s - 1 = +/-2, which agree mod 8 pairwise) and the supersymmetry
/// L^{+-}(n,s) = L^{-+}(-n mod 8, s). Absent cells are reported as skips.
inline Report check_symmetries(const TableDocument& T) {
  Report rep;
  rep.suite = "symmetries";
  if (T.kind == TableKind::Complex)
    throw std::invalid_argument("check_symmetries: expects a pairs/quadruples table");
  auto pairString = [](const ClassificationCell& c) {
    std::ostringstream os;
    os << c.lplus << "," << c.lminus;
    return os.str();
  };
  for (const auto& c : T.cells) {
    std::ostringstream cellid;
    cellid << "(" << c.nRes << "," << c.sRes << ")";
    auto compare_pairs = [&](int n2, int s2, const std::string& what) {
      const TableCell* other = T.find(((n2 % 8) + 8) % 8, ((s2 % 8) + 8) % 8);
      std::string id = what + cellid.str();
      if (c.absent || !other || other->absent) {
        rep.skip(id, what + " at " + cellid.str(), "cell pair not realizable in range");
        return;
      }
      rep.check(id, what + " at " + cellid.str(), pairString(c.cell), pairString(other->cell));
    };
    compare_pairs(4 - c.nRes, c.sRes, "reflect-n ");
    compare_pairs(c.nRes, -2 - c.sRes, "reflect-s ");
    // supersymmetry: swap L+ and L-, and the iota-refined halves
    {
      const TableCell* other = T.find(((-c.nRes % 8) + 8) % 8, c.sRes);
      std::string id = "supersym " + cellid.str();
      if (c.absent || !other || other->absent) {
        rep.skip(id, "supersymmetry at " + cellid.str(), "cell pair not realizable in range");
      } else {
        std::ostringstream want, got;
        want << c.cell.lplus << "," << c.cell.lminus;
        got << other->cell.lminus << "," << other->cell.lplus;
        rep.check(id, "supersymmetry pair swap at " + cellid.str(), want.str(), got.str());
        if (c.cell.hasQuad && other->cell.hasQuad) {
          std::ostringstream wq, gq;
          wq << c.cell.quad[0] << "," << c.cell.quad[1] << "," << c.cell.quad[2] << ","
             << c.cell.quad[3];
          gq << other->cell.quad[2] << "," << other->cell.quad[3] << "," << other->cell.quad[0]
             << "," << other->cell.quad[1];
          rep.check(id + " quad", "supersymmetry quadruple swap at " + cellid.str(), wq.str(),
                    gq.str());
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Z2-graded type of the Clifford algebra

namespace detail {

/// "R" / "C" / "H" from the commutant of an irreducible action; the
/// dimension decides, with exact division/discriminant assertions.
inline std::string division_label(const std::vector<Mat>& comm) {
  switch (comm.size()) {
    case 1: return "R";
    case 2: {
      if (quadratic_disc_sign(noncentral_scalar_complement(comm)) >= 0)
        throw std::logic_error("algebra type: 2-dimensional commutant of an irreducible action is not C");
      return "C";
    }
    case 4: {
      if (!division_algebra_test(comm))
        throw std::logic_error("algebra type: 4-dimensional commutant of an irreducible action is not H");
      return "H";
    }
    default:
      throw std::logic_error("algebra type: commutant dimension " + std::to_string(comm.size()));
  }
}

inline int dim_of_label(const std::string& k) { return k == "R" ? 1 : (k == "C" ? 2 : 4); }

}  // namespace detail

/// Z2-graded type (t0, t1) = (type of Cl^0, type of Cl), identified from the
/// matrix model: the span of all 2^n subset products of gammas, its even
/// half, and commutant structure on S. The result is required to match the
/// period-8 table.
inline std::pair<std::string, std::string> algebra_type(const CliffordModule& M) {
  int n = M.sig.n();
  if (n > 10) throw std::invalid_argument("algebra_type: enumeration bound is n <= 10");
  int d = M.dimS;
  std::vector<Mat> prod(1u << n);
  prod[0] = Mat::identity(d);
  for (uint32_t mask = 1; mask < prod.size(); ++mask) {
    int i = std::countr_zero(mask);
    prod[mask] = M.gammas[i] * prod[mask ^ (1u << i)];
  }
  std::vector<Mat> all, evens;
  for (uint32_t mask = 0; mask < prod.size(); ++mask) {
    all.push_back(prod[mask]);
    if (std::popcount(mask) % 2 == 0) evens.push_back(prod[mask]);
  }
  int d1 = span_rank(all), d0 = span_rank(evens);
  if (d0 != (1 << (n - 1)))
    throw std::logic_error("algebra_type: even part is not faithfully represented");
  int r1;
  if (d1 == (1 << n)) r1 = 1;
  else if (d1 == (1 << (n - 1))) r1 = 2;
  else throw std::logic_error("algebra_type: unexpected rank of the full subset-product span");

  std::string K1 = detail::division_label(commutant_basis(M.gammas, d));
  int dk1 = detail::dim_of_label(K1);
  if (d % dk1 != 0 || d1 != dk1 * (d / dk1) * (d / dk1))
    throw std::logic_error("algebra_type: full type is inconsistent with dim S");
  std::string t1 = (r1 == 2 ? "2" : "") + K1;

  // even part through the Schur algebra (its commutant on S)
  std::vector<Mat> evenGens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) evenGens.push_back(M.gammas[i] * M.gammas[j]);
  auto schur = commutant_basis(evenGens, d);
  std::string c = identify_matrix_algebra(schur);
  int r0;
  std::string K0;
  bool twoCopies;  // S = two copies of the irreducible Cl^0-module
  if (c == "R" || c == "C" || c == "H") {
    r0 = 1;
    K0 = c;
    twoCopies = false;
  } else if (c == "R(2)" || c == "C(2)") {
    r0 = 1;
    K0 = (c == "R(2)") ? "R" : "C";
    twoCopies = true;
  } else {  // R+R or H+H
    r0 = 2;
    K0 = (c == "R+R") ? "R" : "H";
    twoCopies = true;
  }
  int dk0 = detail::dim_of_label(K0);
  int copies = twoCopies ? 2 : 1;
  if (d % (dk0 * copies) != 0)
    throw std::logic_error("algebra_type: even type is inconsistent with dim S");
  int l0 = d / (dk0 * copies);
  if (d0 != r0 * dk0 * l0 * l0)
    throw std::logic_error("algebra_type: even span rank disagrees with the identified type");
  // the center of the even image must match: dim 2 iff K0 = C or r0 = 2
  std::vector<Mat> unionSpan = evens;
  unionSpan.insert(unionSpan.end(), schur.begin(), schur.end());
  int z0 = d0 + static_cast<int>(schur.size()) - span_rank(unionSpan);
  int z0Expected = (K0 == "C" || r0 == 2) ? 2 : 1;
  if (z0 != z0Expected)
    throw std::logic_error("algebra_type: center of the even part has unexpected dimension");
  std::string t0 = (r0 == 2 ? "2" : "") + K0;

  auto expected = t_of_s(M.sig.s());
  if (std::pair{t0, t1} != expected)
    throw std::logic_error("algebra_type: identified (" + t0 + "," + t1 +
                           ") disagrees with the period-8 table");
  return {t0, t1};
}

// ---------------------------------------------------------------------------
// extended Poincare algebras and the graded Jacobi identity

/// g = so(V) + V + S with odd-odd bracket pi(s,t) = sum_k (s^T Pi_k t) e_k;
/// epsilon = +1 for a super algebra (Pi_k symmetric), -1 for a Z2-graded Lie
/// algebra (Pi_k skew).
struct ExtendedPoincareAlgebra {
  Signature sig;
  int epsilon = 1;
  std::vector<Mat> Pi;
};

namespace detail {

/// so(V) action on V obtained by pulling the Clifford commutator
/// [1/2 e_i e_j, e_k] back through the (linearly independent) gammas.
inline std::vector<Mat> so_vector_action(const CliffordModule& M, const std::vector<Mat>& spin) {
  int n = M.sig.n();
  std::vector<Mat> out;
  for (const auto& L : spin) {
    Mat R(n, n);
    for (int k = 0; k < n; ++k) {
      auto coeffs = solve_in_span(M.gammas, L * M.gammas[k] - M.gammas[k] * L);
      if (!coeffs) throw std::logic_error("so action did not preserve the span of V");
      for (int l = 0; l < n; ++l) R.at(l, k) = (*coeffs)[l];
    }
    out.push_back(std::move(R));
  }
  return out;
}

/// Pairwise bracket table of g over the combined basis
/// (so_0.., e_0.., s_0..); odd indices are the S block.
class JacobiContext {
 public:
  JacobiContext(const std::vector<Mat>& spin, const std::vector<Mat>& vect,
                const std::vector<Mat>& lam, const std::vector<Mat>& Pi, int epsilon)
      : eps_(epsilon) {
    nSo_ = static_cast<int>(spin.size());
    nV_ = vect.empty() ? (Pi.empty() ? 0 : static_cast<int>(Pi.size())) : vect[0].rows();
    nS_ = lam.empty() ? (Pi.empty() ? 0 : Pi[0].rows()) : lam[0].rows();
    if (!Pi.empty()) {
      nV_ = static_cast<int>(Pi.size());
      nS_ = Pi[0].rows();
    }
    N_ = nSo_ + nV_ + nS_;
    table_.assign(N_, std::vector<Entry>(N_));
    // [so_a, so_b]: commutators of the vector action resolved in its span
    std::vector<Mat> rBasis = vect;
    for (int a = 0; a < nSo_; ++a)
      for (int b = 0; b < nSo_; ++b) {
        if (a == b) continue;
        Mat comm = vect[a] * vect[b] - vect[b] * vect[a];
        auto coeffs = solve_in_span(rBasis, comm);
        if (!coeffs) throw std::logic_error("so(V) is not closed under commutators");
        for (int cix = 0; cix < nSo_; ++cix)
          if ((*coeffs)[cix] != 0) table_[a][b].emplace_back(cix, (*coeffs)[cix]);
      }
    for (int a = 0; a < nSo_; ++a) {
      for (int k = 0; k < nV_; ++k)
        for (int l = 0; l < nV_; ++l)
          if (vect[a].at(l, k) != 0) {
            table_[a][nSo_ + k].emplace_back(nSo_ + l, vect[a].at(l, k));
            table_[nSo_ + k][a].emplace_back(nSo_ + l, -vect[a].at(l, k));
          }
      for (int i = 0; i < nS_; ++i)
        for (int j = 0; j < nS_; ++j)
          if (lam[a].at(j, i) != 0) {
            table_[a][nSo_ + nV_ + i].emplace_back(nSo_ + nV_ + j, lam[a].at(j, i));
            table_[nSo_ + nV_ + i][a].emplace_back(nSo_ + nV_ + j, -lam[a].at(j, i));
          }
    }
    for (int i = 0; i < nS_; ++i)
      for (int j = 0; j < nS_; ++j)
        for (int k = 0; k < nV_; ++k)
          if (Pi[k].at(i, j) != 0)
            table_[nSo_ + nV_ + i][nSo_ + nV_ + j].emplace_back(nSo_ + k, Pi[k].at(i, j));
    scratch_.assign(N_, Rational(0));
  }

  int size() const { return N_; }
  bool odd(int x) const { return x >= nSo_ + nV_; }

  /// Graded Leibniz defect [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]]
  /// (the sign only for epsilon = +1).
  bool defect_is_zero(int x, int y, int z) {
    touched_.clear();
    expand_left(1, x, table_[y][z]);
    for (const auto& [e, c] : table_[x][y]) accumulate(-c, table_[e][z]);
    Rational sgn = (eps_ > 0 && odd(x) && odd(y)) ? -1 : 1;
    expand_left(-sgn, y, table_[x][z]);
    bool zero = true;
    for (int t : touched_) {
      if (scratch_[t] != 0) zero = false;
      scratch_[t] = 0;
    }
    return zero;
  }

 private:
  using Entry = std::vector<std::pair<int, Rational>>;

  void accumulate(const Rational& c, const Entry& w) {
    for (const auto& [f, v] : w) {
      if (scratch_[f] == 0) touched_.push_back(f);
      scratch_[f] += c * v;
    }
  }
  void expand_left(const Rational& sign, int x, const Entry& w) {
    for (const auto& [e, c] : w) accumulate(sign * c, table_[x][e]);
  }

  int nSo_ = 0, nV_ = 0, nS_ = 0, N_ = 0, eps_ = 1;
  std::vector<std::vector<Entry>> table_;
  std::vector<Rational> scratch_;
  std::vector<int> touched_;
};

}  // namespace detail

/// Exact verification of the full graded Jacobi identity of
/// g = so(V) + V + (S tensor R^r) over all ordered basis triples.
/// The rFactor > 1 case is used by the N-extension construction.
inline bool graded_jacobi_holds(const CliffordModule& M, const std::vector<Mat>& Pi, int epsilon,
                                int rFactor = 1, std::string* failure = nullptr) {
  auto spin = so_generators(M);
  auto vect = detail::so_vector_action(M, spin);
  std::vector<Mat> lam = spin;
  if (rFactor > 1) {
    Mat idr = Mat::identity(rFactor);
    for (auto& L : lam) L = kronecker(L, idr);
  }
  detail::JacobiContext ctx(spin, vect, lam, Pi, epsilon);
  int N = ctx.size();
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      for (int z = 0; z < N; ++z)
        if (!ctx.defect_is_zero(x, y, z)) {
          if (failure) {
            std::ostringstream os;
            os << "Jacobi defect at basis triple (" << x << "," << y << "," << z << ")";
            *failure = os.str();
          }
          return false;
        }
  return true;
}

/// Builds the epsilon-extension bracket from coefficients over the
/// sigma-filtered admissible basis (entries with sigma(j_A) = epsilon, in
/// basis order), dualizing with the metric: Pi_k = <e_k,e_k> sum_a c_a B_k^a.
/// Throws when an entry of the wrong symmetry class is selected, when the
/// component symmetry does not match epsilon, or when the graded Jacobi
/// identity fails.
inline ExtendedPoincareAlgebra build_bracket(const CliffordModule& M,
                                             const std::vector<Rational>& coeffs, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  auto ab = admissible_basis(M);
  std::vector<const AdmissibleEntry*> filtered;
  for (const auto& e : ab.entries) {
    int sigmaFormula = e.formInv.tau * e.formInv.sigma;
    EquivariantMap j = j_rho(M, e.formGram);
    if (j.sigma != sigmaFormula)
      throw std::logic_error("build_bracket: sigma(j) formula/direct mismatch at " + e.name);
    if (sigmaFormula == epsilon) filtered.push_back(&e);
  }
  if (coeffs.size() != filtered.size())
    throw std::invalid_argument("build_bracket: expected " + std::to_string(filtered.size()) +
                                " coefficients over the sigma-filtered basis");
  int n = M.sig.n(), d = M.dimS;
  ExtendedPoincareAlgebra A;
  A.sig = M.sig;
  A.epsilon = epsilon;
  for (int k = 0; k < n; ++k) {
    Mat B(d, d);
    for (size_t a = 0; a < filtered.size(); ++a)
      if (coeffs[a] != 0) B = B + M.gammas[k].transpose() * filtered[a]->formGram * coeffs[a];
    Rational eta = (k < M.sig.p) ? 1 : -1;
    A.Pi.push_back(B * eta);
  }
  for (const auto& P : A.Pi) {
    bool ok = (epsilon == 1) ? P.is_symmetric() : P.is_skew();
    if (!ok) throw std::logic_error("build_bracket: component symmetry does not match epsilon");
  }
  std::string why;
  if (!graded_jacobi_holds(M, A.Pi, epsilon, 1, &why))
    throw std::logic_error("build_bracket: " + why);
  return A;
}

// ---------------------------------------------------------------------------
// N-extension with internal symmetries

enum class ExtKind { Orthogonal, Symplectic };

struct NExtendedAlgebra {
  Signature sig;
  int l = 1;
  ExtKind kind = ExtKind::Orthogonal;
  int epsilon = 1;   // resulting epsilon (flipped for symplectic)
  int innerDim = 1;  // l or 2l
  std::vector<Mat> Pi;  // bracket on W = S (x) R^innerDim
};

namespace detail {

inline Mat standard_symplectic(int l) {
  Mat w(2 * l, 2 * l);
  for (int i = 0; i < l; ++i) {
    w.at(i, l + i) = 1;
    w.at(l + i, i) = -1;
  }
  return w;
}

inline std::vector<Mat> orthogonal_lie_generators(int l) {
  std::vector<Mat> gens;
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) {
      Mat X(l, l);
      X.at(a, b) = 1;
      X.at(b, a) = -1;
      gens.push_back(X);
    }
  return gens;
}

inline std::vector<Mat> symplectic_lie_generators(int l) {
  // basis of sp(2l): kernel of X -> X^T w + w X
  int m = 2 * l;
  Mat w = standard_symplectic(l);
  Mat sys(m * m, m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int u = 0; u < m; ++u) {
        // (X^T w + w X)[a,b] = sum_u X[u,a] w[u,b] + w[a,u] X[u,b]
        if (w.at(u, b) != 0) sys.at(a * m + b, u * m + a) += w.at(u, b);
        if (w.at(a, u) != 0) sys.at(a * m + b, u * m + b) += w.at(a, u);
      }
  std::vector<Mat> gens;
  for (const auto& v : kernel_basis(sys)) gens.push_back(Mat::unvec(v, m, m));
  return gens;
}

inline std::vector<Mat> orthogonal_group_generators(int l) {
  std::vector<Mat> gens;
  Mat refl = Mat::identity(l);
  refl.at(0, 0) = -1;
  gens.push_back(refl);
  if (l >= 2) {
    Mat rot = Mat::identity(l);
    rot.at(0, 0) = 0;
    rot.at(0, 1) = -1;
    rot.at(1, 0) = 1;
    rot.at(1, 1) = 0;
    gens.push_back(rot);
    for (int a = 0; a + 1 < l; ++a) {
      Mat swp = Mat::identity(l);
      swp.at(a, a) = swp.at(a + 1, a + 1) = 0;
      swp.at(a, a + 1) = swp.at(a + 1, a) = 1;
      gens.push_back(swp);
    }
  }
  return gens;
}

inline std::vector<Mat> symplectic_group_generators(int l) {
  // per-plane transvections in coordinates (x_1..x_l, y_1..y_l)
  std::vector<Mat> gens;
  for (int i = 0; i < l; ++i) {
    Mat t1 = Mat::identity(2 * l);
    t1.at(i, l + i) = 1;  // x_i += y_i
    Mat t2 = Mat::identity(2 * l);
    t2.at(l + i, i) = 1;  // y_i += x_i
    gens.push_back(t1);
    gens.push_back(t2);
  }
  return gens;
}

}  // namespace detail

/// g^{(+l)} (orthogonal) or g^{(-2l)} (symplectic) on W = S (x) R^{l or 2l}:
/// pi_ext(s (x) u, t (x) v) = pi(s,t) <u,v> resp. pi(s,t) omega(u,v).
/// Verifies the epsilon flip, exact invariance under the internal symmetry
/// generators (Lie level and finite), and the full graded Jacobi identity
/// on the extended space.
inline NExtendedAlgebra extend_N(const CliffordModule& M, const ExtendedPoincareAlgebra& A, int l,
                                 ExtKind kind) {
  if (l < 1) throw std::invalid_argument("extend_N: l must be >= 1");
  NExtendedAlgebra ext;
  ext.sig = A.sig;
  ext.l = l;
  ext.kind = kind;
  bool symplectic = (kind == ExtKind::Symplectic);
  ext.epsilon = symplectic ? -A.epsilon : A.epsilon;
  ext.innerDim = symplectic ? 2 * l : l;
  Mat Q = symplectic ? detail::standard_symplectic(l) : Mat::identity(l);
  for (const auto& P : A.Pi) ext.Pi.push_back(kronecker(P, Q));
  for (const auto& P : ext.Pi) {
    bool ok = (ext.epsilon == 1) ? P.is_symmetric() : P.is_skew();
    if (!ok) throw std::logic_error("extend_N: component symmetry does not match epsilon");
  }
  int dS = A.Pi.empty() ? 0 : A.Pi[0].rows();
  Mat idS = Mat::identity(dS);
  auto lieGens = symplectic ? detail::symplectic_lie_generators(l)
                            : detail::orthogonal_lie_generators(l);
  for (const auto& X : lieGens) {
    Mat XW = kronecker(idS, X);
    for (const auto& P : ext.Pi)
      if (!(XW.transpose() * P + P * XW).is_zero())
        throw std::logic_error("extend_N: internal symmetry generator does not annihilate the bracket");
  }
  auto grpGens = symplectic ? detail::symplectic_group_generators(l)
                            : detail::orthogonal_group_generators(l);
  for (const auto& g : grpGens) {
    if (symplectic && g.transpose() * Q * g != Q)
      throw std::logic_error("extend_N: symplectic generator does not preserve omega");
    Mat gW = kronecker(idS, g);
    for (const auto& P : ext.Pi)
      if (gW.transpose() * P * gW != P)
        throw std::logic_error("extend_N: bracket is not invariant under an internal symmetry generator");
  }
  std::string why;
  if (!graded_jacobi_holds(M, ext.Pi, ext.epsilon, ext.innerDim, &why))
    throw std::logic_error("extend_N: " + why);
  return ext;
}

// ---------------------------------------------------------------------------
// complex classification

/// Complex counts for so(m, C): even m complexifies the split module of
/// signature (m/2, m/2), odd m the module of signature ((m-1)/2, (m+1)/2).
/// Invariant forms of the realified module are restricted to the
/// complex-bilinear ones (G I = I^T G) and the sigma/iota class dimensions
/// are computed by rank arithmetic, then halved to complex dimensions.
inline ComplexCell classify_complex(int m) {
  if (m < 1) throw std::invalid_argument("classify_complex: m must be >= 1");
  CliffordModule base = (m % 2 == 0) ? build_split(m / 2) : build(m / 2, m / 2 + 1);
  int d = base.dimS, D = 2 * d;
  std::vector<Mat> gam;
  for (const auto& g : base.gammas) gam.push_back(detail::complexify(g));
  std::optional<Mat> grading;
  if (base.grading) grading = detail::complexify(*base.grading);
  Mat I = detail::mult_by_i(d);

  auto grams = detail::invariant_gram_basis(gam, D);
  int B = static_cast<int>(grams.size());
  // complex-bilinear subspace: G I = I^T G
  Mat sys(D * D, B);
  for (int b = 0; b < B; ++b) {
    Mat defect = grams[b] * I - I.transpose() * grams[b];
    Mat v = defect.vec();
    for (int r = 0; r < D * D; ++r) sys.at(r, b) = v.at(r, 0);
  }
  std::vector<Mat> cb;
  for (const auto& c : kernel_basis(sys)) {
    Mat G(D, D);
    for (int b = 0; b < B; ++b)
      if (c.at(b, 0) != 0) G = G + grams[b] * c.at(b, 0);
    cb.push_back(std::move(G));
  }
  int realDim = static_cast<int>(cb.size());
  int expectedComplexDim = (m % 2 == 0) ? 2 : 1;
  if (realDim != 2 * expectedComplexDim)
    throw std::logic_error("classify_complex: complex-bilinear subspace has unexpected dimension");

  // class dimensions via rank arithmetic over the complex-bilinear basis
  auto dim_killed = [&](int sigma0, int iota0) {
    int rowsPer = D * D * (iota0 == 0 ? 1 : 2);
    Mat s(static_cast<int>(gam.size()) * rowsPer, realDim);
    for (int b = 0; b < realDim; ++b) {
      int row = 0;
      for (const auto& g : gam) {
        Mat Bk = g.transpose() * cb[b];
        Mat d1 = Bk - Bk.transpose() * Rational(sigma0);
        Mat v1 = d1.vec();
        for (int r = 0; r < D * D; ++r) s.at(row + r, b) = v1.at(r, 0);
        row += D * D;
        if (iota0 != 0) {
          Mat d2 = grading->transpose() * Bk * *grading - Bk * Rational(iota0);
          Mat v2 = d2.vec();
          for (int r = 0; r < D * D; ++r) s.at(row + r, b) = v2.at(r, 0);
          row += D * D;
        }
      }
    }
    return static_cast<int>(kernel_basis(s).size());
  };

  ComplexCell cell;
  cell.m = m;
  cell.hasQuad = grading.has_value();
  int dplus = dim_killed(1, 0), dminus = dim_killed(-1, 0);
  if (dplus % 2 || dminus % 2 || dplus + dminus != realDim)
    throw std::logic_error("classify_complex: sigma classes do not decompose the space");
  cell.lplus = dplus / 2;
  cell.lminus = dminus / 2;
  if (cell.hasQuad) {
    std::array<int, 4> q{dim_killed(1, 1), dim_killed(1, -1), dim_killed(-1, 1),
                         dim_killed(-1, -1)};
    for (int k = 0; k < 4; ++k) {
      if (q[k] % 2) throw std::logic_error("classify_complex: odd real class dimension");
      cell.quad[k] = q[k] / 2;
    }
    if (cell.quad[0] + cell.quad[1] != cell.lplus || cell.quad[2] + cell.quad[3] != cell.lminus)
      throw std::logic_error("classify_complex: iota classes do not decompose the sigma classes");
  }
  return cell;
}

// ---------------------------------------------------------------------------
// periodicity

/// (8,0)/(0,8) invariance of counts, dim B and Schur type, and
/// (4,4)-periodicity of counts and of the invariant triples of
/// corresponding admissible basis entries. Runs over all p+q <= maxN - 8.
inline Report check_periodicity(int maxN) {
  Report rep;
  rep.suite = "periodicity";
  for (int n = 1; n + 8 <= maxN; ++n)
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      CliffordModule M = build(p, q);
      ClassificationCell base = count_embeddings(M);
      auto compare_counts = [&](int p2, int q2, const std::string& what) {
        std::ostringstream id;
        id << what << " (" << p << "," << q << ")->(" << p2 << "," << q2 << ")";
        ClassificationCell other = count_embeddings(build(p2, q2));
        rep.check(id.str() + " counts", "counts equal under " + what, base.countsString(),
                  other.countsString());
        rep.check(id.str() + " b", "dim B equal under " + what, std::to_string(base.b),
                  std::to_string(other.b));
        rep.check(id.str() + " schur", "Schur type equal under " + what, base.schur, other.schur);
        return other;
      };
      compare_counts(p + 8, q, "(8,0)-shift");
      compare_counts(p, q + 8, "(0,8)-shift");
      if (n <= 4) {
        compare_counts(p + 4, q + 4, "(4,4)-shift");
        // invariant triples of corresponding admissible entries, by name
        auto abA = admissible_basis(M);
        auto abB = admissible_basis(build(p + 4, q + 4));
        std::ostringstream id;
        id << "(4,4)-triples (" << p << "," << q << ")";
        bool ok = abA.entries.size() == abB.entries.size();
        std::string detail = "all entries match";
        if (ok) {
          for (size_t i = 0; i < abA.entries.size(); ++i) {
            const auto& ea = abA.entries[i];
            const auto& eb = abB.entries[i];
            if (ea.name != eb.name || ea.formInv != eb.formInv || ea.endoInv != eb.endoInv) {
              ok = false;
              detail = "entry " + ea.name + ": " + invariants_to_string(ea.formInv) + " vs " +
                       eb.name + ": " + invariants_to_string(eb.formInv);
              break;
            }
          }
        } else {
          detail = "entry counts differ";
        }
        rep.check(id.str(), "admissible invariant triples preserved by the (4,4)-shift",
                  "all entries match", detail);
      }
    }
  // complex periodicity: classify_complex(m) = classify_complex(m+8)
  for (int m = 1; m + 8 <= maxN; ++m) {
    ComplexCell a = classify_complex(m);
    ComplexCell b = classify_complex(m + 8);
    rep.check("complex m=" + std::to_string(m), "complex counts period 8", a.countsString(),
              b.countsString());
  }
  return rep;
}

}  // namespace spinform
