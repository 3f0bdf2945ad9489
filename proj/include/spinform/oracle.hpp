#pragma once

#include "spinform/clifford.hpp"
#include "spinform/invariants.hpp"
#include "spinform/matrix.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

// Brute-force solver for the equivariant-map spaces J and M. It deliberately
// shares only the gamma matrices with the rest of the library: the so(V)
// actions are rebuilt here from scratch and the spaces are computed as raw
// kernels, with no admissible forms and no canonical form, so that agreement
// with the admissible-basis pipeline is a genuine cross-check.

namespace spinform::oracle {

/// Default performance bound on p+q. A configuration value, not a hard
/// constant; the largest system at the bound has about 6*16^2 unknowns.
inline constexpr int kDefaultMaxDim = 6;

namespace detail {

/// so(V) generators acting on S, rebuilt from the gammas: 1/2 rho_i rho_j.
inline std::vector<Mat> spin_action(const CliffordModule& M) {
  std::vector<Mat> gens;
  int n = M.sig.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      gens.push_back(M.gammas[i] * M.gammas[j] * Rational(1, 2));
  return gens;
}

/// so(V) generators acting on V, computed as the Clifford commutator of
/// 1/2 e_i e_j with each e_k inside the representation and pulled back
/// through the linearly independent gammas. Column k of the result is the
/// coefficient vector of [Lambda, rho(e_k)] over the gammas.
inline std::vector<Mat> vector_action(const CliffordModule& M, const std::vector<Mat>& spin) {
  int n = M.sig.n();
  std::vector<Mat> actions;
  actions.reserve(spin.size());
  for (const auto& L : spin) {
    Mat R(n, n);
    for (int k = 0; k < n; ++k) {
      Mat comm = L * M.gammas[k] - M.gammas[k] * L;
      auto coeffs = solve_in_span(M.gammas, comm);
      if (!coeffs)
        throw std::logic_error("oracle: commutator of a spin generator left the span of V");
      for (int l = 0; l < n; ++l) R.at(l, k) = (*coeffs)[l];
    }
    actions.push_back(std::move(R));
  }
  return actions;
}

inline void require_within_bound(const CliffordModule& M, int maxDim) {
  if (M.sig.n() > maxDim)
    throw std::invalid_argument("oracle: p+q exceeds the configured bound");
}

}  // namespace detail

/// Basis of the space J of so(V)-equivariant maps V -> S* (x) S*, solved as
/// one linear system over the n * dimS^2 component unknowns.
inline std::vector<EquivariantMap> equivariant_map_space(const CliffordModule& M,
                                                         int maxDim = kDefaultMaxDim) {
  detail::require_within_bound(M, maxDim);
  int n = M.sig.n(), d = M.dimS;
  auto spin = detail::spin_action(M);
  auto vect = detail::vector_action(M, spin);
  // unknowns: B_k[a,b] at index k*d*d + a*d + b
  spinform::detail::OnlineEchelon ech(n * d * d);
  for (size_t g = 0; g < spin.size(); ++g) {
    Mat L2 = spin[g] * 2;  // integral
    const Mat& R = vect[g];
    for (int k = 0; k < n; ++k) {
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          // (L^T B_k + B_k L)[a,b] + sum_l R[l,k] B_l[a,b] = 0, scaled by 2
          std::map<int, Rational> coeff;
          for (int u = 0; u < d; ++u) {
            if (L2.at(u, a) != 0) coeff[k * d * d + u * d + b] += L2.at(u, a);
            if (L2.at(u, b) != 0) coeff[k * d * d + a * d + u] += L2.at(u, b);
          }
          for (int l = 0; l < n; ++l)
            if (R.at(l, k) != 0) coeff[l * d * d + a * d + b] += 2 * R.at(l, k);
          Integer lcm = 1;
          for (auto& [key, v] : coeff)
            if (v != 0) lcm = boost::multiprecision::lcm(lcm, den(v));
          spinform::detail::SparseRow row;
          for (auto& [key, v] : coeff)
            if (v != 0) row.t.emplace_back(key, num(v) * (lcm / den(v)));
          ech.insert(std::move(row));
        }
    }
  }
  std::vector<EquivariantMap> basis;
  for (const auto& v : ech.kernel()) {
    EquivariantMap j;
    for (int k = 0; k < n; ++k) {
      Mat B(d, d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) B.at(a, b) = v.at(k * d * d + a * d + b, 0);
      j.components.push_back(std::move(B));
    }
    basis.push_back(std::move(j));
  }
  return basis;
}

/// Dimension of the space M of so(V)-equivariant multiplications
/// V* (x) S -> S: solutions of [Lambda, M_k] = sum_l R[l,k] M_l.
inline int multiplication_space_dim(const CliffordModule& M, int maxDim = kDefaultMaxDim) {
  detail::require_within_bound(M, maxDim);
  int n = M.sig.n(), d = M.dimS;
  auto spin = detail::spin_action(M);
  auto vect = detail::vector_action(M, spin);
  spinform::detail::OnlineEchelon ech(n * d * d);
  for (size_t g = 0; g < spin.size(); ++g) {
    Mat L2 = spin[g] * 2;
    const Mat& R = vect[g];
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          // ([L, M_k] - sum_l R[l,k] M_l)[a,b] = 0, scaled by 2
          std::map<int, Rational> coeff;
          for (int u = 0; u < d; ++u) {
            if (L2.at(a, u) != 0) coeff[k * d * d + u * d + b] += L2.at(a, u);
            if (L2.at(u, b) != 0) coeff[k * d * d + a * d + u] -= L2.at(u, b);
          }
          for (int l = 0; l < n; ++l)
            if (R.at(l, k) != 0) coeff[l * d * d + a * d + b] -= 2 * R.at(l, k);
          Integer lcm = 1;
          for (auto& [key, v] : coeff)
            if (v != 0) lcm = boost::multiprecision::lcm(lcm, den(v));
          spinform::detail::SparseRow row;
          for (auto& [key, v] : coeff)
            if (v != 0) row.t.emplace_back(key, num(v) * (lcm / den(v)));
          ech.insert(std::move(row));
        }
  }
  return n * d * d - ech.rank();
}

/// Symmetry decomposition of span(basis) by rank arithmetic: dimensions of
/// the intersections with the all-components-symmetric / all-skew subspaces,
/// refined by orthogonal/isotropic class when a grading is given. Returns
/// (dpp, dpm, dmp, dmm) as quad, or (dplus, dminus) without grading.
struct SymmetryCounts {
  int dplus = 0, dminus = 0;
  bool hasQuad = false;
  std::array<int, 4> quad{};
};

inline SymmetryCounts symmetry_decompose(const std::vector<EquivariantMap>& basis,
                                         const std::optional<Mat>& grading) {
  SymmetryCounts out;
  if (basis.empty()) return out;
  int n = static_cast<int>(basis[0].components.size());
  int B = static_cast<int>(basis.size());

  // dim of the subspace of span(basis) killed by a componentwise linear map
  auto dim_killed = [&](auto&& phi) {
    Mat probe = phi(basis[0].components[0]);
    int ir = probe.rows(), ic = probe.cols();
    Mat sys(n * ir * ic, B);
    for (int bIdx = 0; bIdx < B; ++bIdx) {
      for (int k = 0; k < n; ++k) {
        Mat img = phi(basis[bIdx].components[k]);
        for (int a = 0; a < ir; ++a)
          for (int c = 0; c < ic; ++c) sys.at(k * ir * ic + a * ic + c, bIdx) = img.at(a, c);
      }
    }
    return static_cast<int>(kernel_basis(sys).size());
  };

  auto sym = [](const Mat& m) { return m - m.transpose(); };
  auto skw = [](const Mat& m) { return m + m.transpose(); };
  out.dplus = dim_killed(sym);
  out.dminus = dim_killed(skw);
  if (grading) {
    Mat E = *grading;
    auto orth = [E](const Mat& m) { return E.transpose() * m * E - m; };
    auto iso = [E](const Mat& m) { return E.transpose() * m * E + m; };
    // combine two componentwise constraints by stacking their images
    auto both = [](auto f, auto g) {
      return [f, g](const Mat& m) {
        Mat a = f(m), b = g(m);
        Mat stacked(a.rows() * 2, a.cols());
        for (int i = 0; i < a.rows(); ++i)
          for (int j = 0; j < a.cols(); ++j) {
            stacked.at(i, j) = a.at(i, j);
            stacked.at(a.rows() + i, j) = b.at(i, j);
          }
        return stacked;
      };
    };
    out.hasQuad = true;
    out.quad[0] = dim_killed(both(sym, orth));
    out.quad[1] = dim_killed(both(sym, iso));
    out.quad[2] = dim_killed(both(skw, orth));
    out.quad[3] = dim_killed(both(skw, iso));
  }
  return out;
}

}  // namespace spinform::oracle
