#pragma once

#include "spinform/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinform {

/// A fundamental invariant value: +1, -1, or 0 meaning "undefined"
/// (the defining property genuinely fails, or no grading is present).
struct FundamentalInvariants {
  int tau = 0;
  int sigma = 0;
  int iota = 0;

  bool operator==(const FundamentalInvariants&) const = default;
};

inline std::string sign_char(int v) { return v > 0 ? "+" : (v < 0 ? "-" : "?"); }
inline std::string invariants_to_string(const FundamentalInvariants& fi) {
  return sign_char(fi.tau) + sign_char(fi.sigma) + sign_char(fi.iota);
}

namespace detail {

/// +1 if A == B, -1 if A == -B, 0 otherwise.
inline int compare_sign(const Mat& A, const Mat& B) {
  if (A == B) return 1;
  if (A == -B) return -1;
  return 0;
}

/// tau of a bilinear form: +1 if beta(rho(e_i) s, t) = beta(s, rho(e_i) t)
/// for every generator, -1 if it anti-holds for every generator, else 0.
inline int form_tau(const std::vector<Mat>& gammas, const Mat& gram) {
  int result = 2;  // unset
  for (const auto& g : gammas) {
    int c = compare_sign(g.transpose() * gram, gram * g);
    if (c == 0) return 0;
    if (result == 2) result = c;
    else if (result != c) return 0;
  }
  return result == 2 ? 0 : result;
}

inline int form_sigma(const Mat& gram) {
  if (gram.is_symmetric()) return 1;
  if (gram.is_skew()) return -1;
  return 0;
}

/// iota: +1 when the semi-spinor summands are mutually orthogonal
/// (E^T G E = G), -1 when both are isotropic (E^T G E = -G).
inline int form_iota(const std::optional<Mat>& grading, const Mat& gram) {
  if (!grading) return 0;
  return compare_sign(grading->transpose() * gram * *grading, gram);
}

/// tau of an endomorphism: commutes (+1) or anticommutes (-1) with every
/// Clifford generator.
inline int endo_tau(const std::vector<Mat>& gammas, const Mat& A) {
  int result = 2;
  for (const auto& g : gammas) {
    int c = compare_sign(A * g, g * A);
    if (c == 0) return 0;
    if (result == 2) result = c;
    else if (result != c) return 0;
  }
  return result == 2 ? 0 : result;
}

/// h-symmetry of an endomorphism: h(A s, t) = +/- h(s, A t).
inline int endo_sigma(const Mat& hGram, const Mat& A) {
  return compare_sign(A.transpose() * hGram, hGram * A);
}

/// iota of an endomorphism: preserves (+1) or swaps (-1) the semi-spinor
/// summands, i.e. commutes or anticommutes with the grading.
inline int endo_iota(const std::optional<Mat>& grading, const Mat& A) {
  if (!grading) return 0;
  return compare_sign(A * *grading, *grading * A);
}

inline FundamentalInvariants form_invariants_raw(const std::vector<Mat>& gammas,
                                                 const std::optional<Mat>& grading,
                                                 const Mat& gram) {
  return {form_tau(gammas, gram), form_sigma(gram), form_iota(grading, gram)};
}

inline FundamentalInvariants endo_invariants_raw(const std::vector<Mat>& gammas,
                                                 const std::optional<Mat>& grading,
                                                 const Mat& hGram, const Mat& A) {
  return {endo_tau(gammas, A), endo_sigma(hGram, A), endo_iota(grading, A)};
}

}  // namespace detail
}  // namespace spinform
