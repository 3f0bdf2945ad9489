#pragma once

#include "spinform/classification.hpp"
#include "spinform/invariants.hpp"
#include "spinform/oracle.hpp"
#include "spinform/report.hpp"

#include <map>
#include <random>
#include <sstream>
#include <string>

namespace spinform {

// Frozen classification tables, used as the golden values of the
// verification suites. Keys are residues mod 8.

namespace golden {

/// (L+, L-) by (n mod 8, s mod 8), n + s even.
inline std::string pairs(int nRes, int sRes) {
  static const std::map<std::pair<int, int>, std::string> t = {
      {{0, 0}, "1,1"}, {{2, 0}, "2,0"}, {{4, 0}, "1,1"}, {{6, 0}, "0,2"},
      {{1, 1}, "3,1"}, {{3, 1}, "3,1"}, {{5, 1}, "1,3"}, {{7, 1}, "1,3"},
      {{0, 2}, "4,4"}, {{2, 2}, "6,2"}, {{4, 2}, "4,4"}, {{6, 2}, "2,6"},
      {{1, 3}, "3,1"}, {{3, 3}, "3,1"}, {{5, 3}, "1,3"}, {{7, 3}, "1,3"},
      {{0, 4}, "4,4"}, {{2, 4}, "6,2"}, {{4, 4}, "4,4"}, {{6, 4}, "2,6"},
      {{1, 5}, "3,1"}, {{3, 5}, "3,1"}, {{5, 5}, "1,3"}, {{7, 5}, "1,3"},
      {{0, 6}, "1,1"}, {{2, 6}, "2,0"}, {{4, 6}, "1,1"}, {{6, 6}, "0,2"},
      {{1, 7}, "1,0"}, {{3, 7}, "1,0"}, {{5, 7}, "0,1"}, {{7, 7}, "0,1"},
  };
  return t.at({((nRes % 8) + 8) % 8, ((sRes % 8) + 8) % 8});
}

/// (L++, L+-, L-+, L--) where the spinor module is reducible
/// (s = 0, 1, 2, 4 mod 8), (L+, L-) where it is irreducible.
inline std::string quadruples(int nRes, int sRes) {
  static const std::map<std::pair<int, int>, std::string> t = {
      {{6, 4}, "2,0,6,0"}, {{0, 4}, "0,4,0,4"}, {{2, 4}, "6,0,2,0"}, {{4, 4}, "0,4,0,4"},
      {{5, 3}, "1,3"},     {{7, 3}, "1,3"},     {{1, 3}, "3,1"},     {{3, 3}, "3,1"},
      {{6, 2}, "0,2,4,2"}, {{0, 2}, "2,2,2,2"}, {{2, 2}, "4,2,0,2"}, {{4, 2}, "2,2,2,2"},
      {{5, 1}, "0,1,2,1"}, {{7, 1}, "0,1,2,1"}, {{1, 1}, "2,1,0,1"}, {{3, 1}, "2,1,0,1"},
      {{6, 0}, "0,0,2,0"}, {{0, 0}, "0,1,0,1"}, {{2, 0}, "2,0,0,0"}, {{4, 0}, "0,1,0,1"},
      {{5, 7}, "0,1"},     {{7, 7}, "0,1"},     {{1, 7}, "1,0"},     {{3, 7}, "1,0"},
      {{6, 6}, "0,2"},     {{0, 6}, "1,1"},     {{2, 6}, "2,0"},     {{4, 6}, "1,1"},
      {{5, 5}, "1,3"},     {{7, 5}, "1,3"},     {{1, 5}, "3,1"},     {{3, 5}, "3,1"},
  };
  return t.at({((nRes % 8) + 8) % 8, ((sRes % 8) + 8) % 8});
}

/// Complex counts by m mod 8.
inline std::string complex_counts(int m) {
  static const std::map<int, std::string> t = {
      {1, "1,0"}, {2, "2,0,0,0"}, {3, "1,0"}, {4, "0,1,0,1"},
      {5, "0,1"}, {6, "0,0,2,0"}, {7, "0,1"}, {0, "0,1,0,1"},
  };
  return t.at(((m % 8) + 8) % 8);
}

/// Invariants (tau, sigma, iota) of the split forms f and f_E, and of the
/// endomorphism E, by m mod 4 ('?' = undefined).
inline std::string split_f(int m) {
  static const std::array<const char*, 4> t = {"-++", "---", "--+", "-+-"};
  return t[((m % 4) + 4) % 4];
}
inline std::string split_fE(int m) {
  static const std::array<const char*, 4> t = {"+++", "++-", "+-+", "+--"};
  return t[((m % 4) + 4) % 4];
}
inline std::string split_E(int m) {
  return (m % 2 == 0) ? "-++" : "--+";
}

/// Admissible endomorphism / form invariant rows for the definite models,
/// keyed by entry name; m is the half-dimension, reduced mod 4.
struct DefiniteRows {
  std::map<std::string, std::string> endo;
  std::map<std::string, std::string> form;
};

inline DefiniteRows positive_even(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0:
      return {{{"Id", "+++"}, {"E", "-++"}}, {{"Id", "-++"}, {"E", "+++"}}};
    case 3:
      return {{{"Id", "++?"}, {"J", "--?"}}, {{"Id", "-+?"}, {"J", "+-?"}}};
    case 1:
      return {{{"Id", "+++"},
               {"I", "+-+"},
               {"J", "+--"},
               {"K", "+--"},
               {"E", "-++"},
               {"EI", "--+"},
               {"EJ", "-+-"},
               {"EK", "-+-"}},
              {{"Id", "-++"},
               {"I", "--+"},
               {"J", "---"},
               {"K", "---"},
               {"E", "+++"},
               {"EI", "+-+"},
               {"EJ", "++-"},
               {"EK", "++-"}}};
    default:  // m = 2 mod 4
      return {{{"Id", "+++"},
               {"I", "+-+"},
               {"J", "--+"},
               {"K", "--+"},
               {"E", "-++"},
               {"EI", "--+"},
               {"EJ", "+-+"},
               {"EK", "+-+"}},
              {{"Id", "-++"},
               {"I", "--+"},
               {"J", "+-+"},
               {"K", "+-+"},
               {"E", "+++"},
               {"EI", "+-+"},
               {"EJ", "--+"},
               {"EK", "--+"}}};
  }
}

inline DefiniteRows negative_even(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0:
      return {{{"Id", "+++"}, {"E", "-++"}}, {{"Id", "+++"}, {"E", "-++"}}};
    case 1:
      return {{{"Id", "++?"}, {"J", "--?"}}, {{"Id", "++?"}, {"J", "--?"}}};
    case 2: {
      std::map<std::string, std::string> rows = {{"Id", "+++"}, {"I", "+-+"}, {"J", "--+"},
                                                 {"K", "--+"},  {"E", "-++"}, {"EI", "--+"},
                                                 {"EJ", "+-+"}, {"EK", "+-+"}};
      return {rows, rows};
    }
    default: {  // m = 3 mod 4
      std::map<std::string, std::string> rows = {{"Id", "+++"}, {"I", "+-+"}, {"J", "+--"},
                                                 {"K", "+--"},  {"E", "-++"}, {"EI", "--+"},
                                                 {"EJ", "-+-"}, {"EK", "-+-"}};
      return {rows, rows};
    }
  }
}

/// Positive odd dimensions are tabulated through the classes of the
/// embeddings j_A: first char sigma(j), second iota(j) ('?' when S is
/// irreducible).
inline std::map<std::string, std::string> positive_odd_j(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {{"Id", "--"}, {"I", "++"}, {"J", "+-"}, {"K", "++"}};
    case 1: return {{"Id", "-?"}, {"I", "+?"}, {"J", "+?"}, {"K", "+?"}};
    case 2: return {{"Id", "-?"}, {"I", "+?"}, {"J", "-?"}, {"K", "-?"}};
    default: return {{"Id", "-?"}};  // m = 3 mod 4: B = R h
  }
}

/// Negative odd dimensions: invariant rows of the endomorphisms (the form
/// rows coincide because h has invariants (+,+,+)).
inline std::map<std::string, std::string> negative_odd(int m) {
  switch (((m % 4) + 4) % 4) {
    case 1: return {{"Id", "++?"}, {"I", "+-?"}, {"Jhat", "--?"}, {"Khat", "--?"}};
    case 2: return {{"Id", "++?"}, {"I", "+-?"}, {"Jhat", "+-?"}, {"Khat", "+-?"}};
    case 3: return {{"Id", "+++"}, {"I", "+--"}, {"Jhat", "-++"}, {"Khat", "-+-"}};
    default: return {{"Id", "++?"}};  // m = 0 mod 4: C = R Id
  }
}

}  // namespace golden

namespace detail {

inline std::string sig_label(const Signature& s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

template <typename F>
void guarded(Report& rep, const std::string& id, const std::string& desc, const std::string& expected,
             F&& f) {
  try {
    rep.check(id, desc, expected, f());
  } catch (const std::exception& e) {
    rep.check(id, desc, expected, std::string("exception: ") + e.what());
  }
}

}  // namespace detail

/// Module construction sanity and the structure tables: dim B = b(s), Schur
/// algebra type, Z2-graded type, for all p+q <= maxN.
inline Report verify_structure_tables(int maxN) {
  Report rep;
  rep.suite = "structure";
  for (int n = 1; n <= maxN; ++n)
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      std::string at = detail::sig_label({p, q});
      CliffordModule M;
      try {
        M = build(p, q);
        check_module_invariants(M);
        volume_element(M);
        rep.result("module " + at, "Clifford relations, grading and volume element", true);
      } catch (const std::exception& e) {
        rep.check("module " + at, "Clifford relations, grading and volume element", "pass",
                  std::string("exception: ") + e.what());
        continue;
      }
      detail::guarded(rep, "b " + at, "dim B = b(s)", std::to_string(b_of_s(p - q)),
                      [&] { return std::to_string(invariant_forms(M).size()); });
      detail::guarded(rep, "schur " + at, "Schur algebra type", schur_of_s(p - q),
                      [&] { return schur_algebra(M).isoType; });
      detail::guarded(rep, "type " + at, "Z2-graded Clifford type",
                      t_of_s(p - q).first + "," + t_of_s(p - q).second, [&] {
                        auto t = algebra_type(M);
                        return t.first + "," + t.second;
                      });
    }
  return rep;
}

/// The printed invariant tables of the basic models: split f/f_E/E rows and
/// the admissible rows of the definite recipes, for all p+q <= maxN.
inline Report verify_invariant_tables(int maxN) {
  Report rep;
  rep.suite = "invariant-tables";
  for (int n = 1; n <= maxN; ++n)
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      std::string at = detail::sig_label({p, q});
      try {
        CliffordModule M = build(p, q);
        if (M.recipe == Recipe::Tensor) continue;  // no printed table; covered by counts
        auto ab = admissible_basis(M);
        auto row = [&](const std::string& name, bool form) -> std::string {
          for (const auto& e : ab.entries)
            if (e.name == name) return invariants_to_string(form ? e.formInv : e.endoInv);
          return "missing";
        };
        if (M.recipe == Recipe::Split) {
          int m = M.splitM;
          rep.check("split f " + at, "invariants of f", golden::split_f(m), row("E", true));
          rep.check("split fE " + at, "invariants of f_E", golden::split_fE(m), row("Id", true));
          rep.check("split E " + at, "invariants of the endomorphism E", golden::split_E(m),
                    row("E", false));
        } else if (M.recipe == Recipe::DefiniteEven) {
          int m = (p + q) / 2;
          auto rows = (q == 0) ? golden::positive_even(m) : golden::negative_even(m);
          for (const auto& [name, want] : rows.endo)
            rep.check("endo " + name + " " + at, "endomorphism invariants", want,
                      row(name, false));
          for (const auto& [name, want] : rows.form)
            rep.check("form " + name + " " + at, "form invariants", want, row(name, true));
        } else if (M.recipe == Recipe::DefiniteOdd) {
          int m = (p + q) / 2;
          if (q == 0) {
            for (const auto& [name, want] : golden::positive_odd_j(m)) {
              std::string got = "missing";
              for (const auto& e : ab.entries)
                if (e.name == name) {
                  int sj = e.formInv.tau * e.formInv.sigma;
                  int ij = M.grading ? -e.formInv.iota : 0;
                  got = sign_char(sj) + sign_char(ij);
                }
              rep.check("jclass " + name + " " + at, "embedding class of j_" + name, want, got);
            }
          } else {
            for (const auto& [name, want] : golden::negative_odd(m)) {
              rep.check("endo " + name + " " + at, "endomorphism invariants", want,
                        row(name, false));
              rep.check("form " + name + " " + at, "form invariants", want, row(name, true));
            }
          }
        }
      } catch (const std::exception& e) {
        rep.check("tables " + at, "admissible basis tables", "pass",
                  std::string("exception: ") + e.what());
      }
    }
  return rep;
}

/// Classification counts of every signature with p+q <= maxN against the
/// published (n,s) residue tables, and the complex counts for m <= maxN.
inline Report verify_counts_tables(int maxN) {
  Report rep;
  rep.suite = "counts";
  for (int n = 1; n <= maxN; ++n)
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      std::string at = detail::sig_label({p, q});
      detail::guarded(rep, "table1 " + at, "pair counts (L+,L-)", golden::pairs(n, p - q), [&] {
        ClassificationCell c = count_embeddings(build(p, q));
        return std::to_string(c.lplus) + "," + std::to_string(c.lminus);
      });
      detail::guarded(rep, "table5 " + at, "refined counts", golden::quadruples(n, p - q),
                      [&] { return count_embeddings(build(p, q)).countsString(); });
    }
  for (int m = 1; m <= maxN; ++m)
    detail::guarded(rep, "complex m=" + std::to_string(m), "complex counts",
                    golden::complex_counts(m),
                    [&] { return classify_complex(m).countsString(); });
  return rep;
}

/// Golden-table suite: structure tables, printed invariant tables and
/// classification counts, over p+q <= min(maxN, 8).
inline Report verify_paper(int maxN) {
  Report rep;
  rep.suite = "paper";
  int bound = std::min(maxN, 8);
  rep.merge(verify_structure_tables(bound));
  rep.merge(verify_invariant_tables(bound));
  rep.merge(verify_counts_tables(bound));
  return rep;
}

/// Brute-force cross-validation: dim J = dim B = dim M, span equality of
/// j_rho(B) with the oracle basis, and agreement of the rank-arithmetic
/// symmetry decomposition with the admissible counts.
inline Report verify_oracle(int maxN) {
  Report rep;
  rep.suite = "oracle";
  int bound = std::min(maxN, oracle::kDefaultMaxDim);
  for (int n = 1; n <= bound; ++n)
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      std::string at = detail::sig_label({p, q});
      try {
        CliffordModule M = build(p, q);
        int bExpected = b_of_s(p - q);
        auto J = oracle::equivariant_map_space(M, bound);
        rep.check("dimJ " + at, "dim J = b(s)", std::to_string(bExpected),
                  std::to_string(J.size()));
        auto forms = invariant_forms(M);
        rep.check("dimB " + at, "dim B = b(s)", std::to_string(bExpected),
                  std::to_string(forms.size()));
        rep.check("dimM " + at, "dim M = b(s)", std::to_string(bExpected),
                  std::to_string(oracle::multiplication_space_dim(M, bound)));
        // mutual span: flatten components and compare ranks
        std::vector<Mat> jb, both;
        for (const auto& j : J) {
          Mat flat(M.sig.n() * M.dimS * M.dimS, 1);
          int off = 0;
          for (const auto& c : j.components) {
            Mat v = c.vec();
            for (int r = 0; r < v.rows(); ++r) flat.at(off + r, 0) = v.at(r, 0);
            off += v.rows();
          }
          jb.push_back(flat);
        }
        both = jb;
        for (const auto& g : forms) {
          EquivariantMap j = j_rho(M, g);
          Mat flat(M.sig.n() * M.dimS * M.dimS, 1);
          int off = 0;
          for (const auto& c : j.components) {
            Mat v = c.vec();
            for (int r = 0; r < v.rows(); ++r) flat.at(off + r, 0) = v.at(r, 0);
            off += v.rows();
          }
          both.push_back(flat);
        }
        rep.check("span " + at, "span j_rho(B) = span oracle", std::to_string(bExpected),
                  std::to_string(span_rank(both)));
        auto counts = oracle::symmetry_decompose(J, M.grading);
        ClassificationCell cell = count_embeddings(M);
        std::ostringstream oracleCounts;
        if (counts.hasQuad)
          oracleCounts << counts.quad[0] << "," << counts.quad[1] << "," << counts.quad[2] << ","
                       << counts.quad[3];
        else
          oracleCounts << counts.dplus << "," << counts.dminus;
        rep.check("decompose " + at, "symmetry decomposition = admissible counts",
                  cell.countsString(), oracleCounts.str());
        rep.check("totals " + at, "decomposition totals = dim J",
                  std::to_string(J.size()),
                  std::to_string(counts.dplus + counts.dminus));
      } catch (const std::exception& e) {
        rep.check("oracle " + at, "oracle suite", "pass", std::string("exception: ") + e.what());
      }
    }
  return rep;
}

/// Periodicity of counts and invariants, plus the reflection/supersymmetry
/// structure of the emitted tables.
inline Report verify_periodicity(int maxN) {
  Report rep;
  rep.suite = "periodicity";
  try {
    rep.merge(check_periodicity(maxN));
  } catch (const std::exception& e) {
    rep.check("periodicity", "check_periodicity", "pass", std::string("exception: ") + e.what());
  }
  try {
    int tableN = std::min(maxN, 8);
    rep.merge(check_symmetries(emit_table(tableN, TableKind::Pairs)));
    rep.merge(check_symmetries(emit_table(tableN, TableKind::Quadruples)));
  } catch (const std::exception& e) {
    rep.check("symmetries", "check_symmetries", "pass", std::string("exception: ") + e.what());
  }
  return rep;
}

/// Jacobi suite: every sigma-homogeneous admissible entry and two seeded
/// pseudo-random combinations per (signature, epsilon) yield brackets whose
/// full graded Jacobi identity holds exactly.
inline Report verify_jacobi_brackets(int maxN) {
  Report rep;
  rep.suite = "jacobi";
  int bound = std::min(maxN, oracle::kDefaultMaxDim);
  for (int n = 1; n <= bound; ++n)
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      std::string at = detail::sig_label({p, q});
      try {
        CliffordModule M = build(p, q);
        auto ab = admissible_basis(M);
        for (int eps : {1, -1}) {
          std::vector<size_t> filtered;
          for (size_t i = 0; i < ab.entries.size(); ++i)
            if (ab.entries[i].formInv.tau * ab.entries[i].formInv.sigma == eps)
              filtered.push_back(i);
          std::string epsLabel = (eps > 0 ? "+1" : "-1");
          for (size_t fi = 0; fi < filtered.size(); ++fi) {
            std::vector<Rational> coeffs(filtered.size(), Rational(0));
            coeffs[fi] = 1;
            detail::guarded(rep,
                            "jacobi " + at + " eps=" + epsLabel + " " +
                                ab.entries[filtered[fi]].name,
                            "graded Jacobi for a basis bracket", "ok", [&] {
                              build_bracket(M, coeffs, eps);
                              return std::string("ok");
                            });
          }
          if (!filtered.empty()) {
            std::mt19937 rng(static_cast<uint32_t>(10007 * p + 101 * q + (eps > 0 ? 1 : 2)));
            std::uniform_int_distribution<int> numDist(-4, 4);
            std::uniform_int_distribution<int> denDist(1, 3);
            for (int trial = 0; trial < 2; ++trial) {
              std::vector<Rational> coeffs;
              for (size_t i = 0; i < filtered.size(); ++i)
                coeffs.emplace_back(numDist(rng), denDist(rng));
              detail::guarded(rep,
                              "jacobi " + at + " eps=" + epsLabel + " random#" +
                                  std::to_string(trial),
                              "graded Jacobi for a random bracket", "ok", [&] {
                                build_bracket(M, coeffs, eps);
                                return std::string("ok");
                              });
            }
          }
        }
      } catch (const std::exception& e) {
        rep.check("jacobi " + at, "jacobi suite", "pass", std::string("exception: ") + e.what());
      }
    }
  return rep;
}

/// Extension constructions on the (0,1) and (1,1) super brackets: g^{(+l)}
/// preserves epsilon with exact O(l)-generator invariance, g^{(-2l)} flips
/// it with exact Sp(2l,R)-generator invariance, and both satisfy the graded
/// Jacobi identity.
inline Report verify_extensions() {
  Report rep;
  rep.suite = "extensions";
  for (auto [p, q] : {std::pair{0, 1}, std::pair{1, 1}}) {
    std::string at = detail::sig_label({p, q});
    try {
      CliffordModule M = build(p, q);
      auto ab = admissible_basis(M);
      std::vector<Rational> ones;
      for (const auto& e : ab.entries)
        if (e.formInv.tau * e.formInv.sigma == 1) ones.emplace_back(1);
      ExtendedPoincareAlgebra A = build_bracket(M, ones, 1);
      NExtendedAlgebra triv = extend_N(M, A, 1, ExtKind::Orthogonal);
      bool same = triv.Pi.size() == A.Pi.size();
      for (size_t k = 0; same && k < A.Pi.size(); ++k) same = (triv.Pi[k] == A.Pi[k]);
      rep.result("ext l=1 " + at, "orthogonal l=1 extension is the identity", same);
      NExtendedAlgebra o2 = extend_N(M, A, 2, ExtKind::Orthogonal);
      rep.check("ext +2 eps " + at, "g^(+2) preserves epsilon", std::to_string(A.epsilon),
                std::to_string(o2.epsilon));
      NExtendedAlgebra s2 = extend_N(M, A, 1, ExtKind::Symplectic);
      rep.check("ext -2 eps " + at, "g^(-2) flips epsilon", std::to_string(-A.epsilon),
                std::to_string(s2.epsilon));
      rep.result("ext checks " + at,
                 "internal symmetry invariance and Jacobi verified by extend_N", true);
    } catch (const std::exception& e) {
      rep.check("extension " + at, "extension constructions", "pass",
                std::string("exception: ") + e.what());
    }
  }
  return rep;
}

inline Report verify_jacobi(int maxN) {
  Report rep;
  rep.suite = "jacobi";
  rep.merge(verify_jacobi_brackets(maxN));
  rep.merge(verify_extensions());
  return rep;
}

inline Report verify_all(int maxN, int oracleMaxN, int periodicityMaxN) {
  Report rep;
  rep.suite = "all";
  rep.merge(verify_paper(maxN));
  rep.merge(verify_oracle(oracleMaxN));
  rep.merge(verify_periodicity(periodicityMaxN));
  rep.merge(verify_jacobi(oracleMaxN));
  return rep;
}

}  // namespace spinform
