#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "osc/dense.hpp"
#include "osc/fft.hpp"
#include "osc/field.hpp"
#include "osc/tori.hpp"
#include "osc/weil.hpp"

namespace osc {

// Orthogonal projector onto the chi_k character space of the torus:
//
//   P_k = (1/#T) sum_{g in T} conj(chi_k(g)) rho(g).
//
// Hermitian and idempotent; the projectors over all k resolve the identity.
inline OperatorMatrix character_projector(const FieldContext& F,
                                          const MaximalTorus& T,
                                          std::size_t k) {
  const std::size_t p = F.p();
  const std::size_t n = T.order();
  OperatorMatrix acc = OperatorMatrix::Zero(p, p);
  for (std::size_t j = 0; j < n; ++j) {
    acc += std::conj(T.character(k, j)) * weil_operator(F, T.element(j));
  }
  return acc / static_cast<double>(n);
}

namespace detail {

inline int round_gated(cplx value, const char* what) {
  const double r = std::round(value.real());
  if (std::abs(value - cplx{r, 0.0}) >= 1e-6)
    throw std::runtime_error(std::string(what) +
                             ": trace failed the integrality gate");
  return static_cast<int>(r);
}

}  // namespace detail

// dim H_chi for every character, via numeric projector traces:
// Tr(P_k) = (1/#T) sum_j conj(chi_k(g^j)) Tr(rho(g^j)), with the operator
// traces taken from the materialized matrices.  Each trace sum must round to
// an integer within 1e-6 or the call fails.
inline std::vector<int> character_space_dims(const FieldContext& F,
                                             const MaximalTorus& T) {
  const std::size_t n = T.order();
  std::vector<cplx> traces(n);
  traces[0] = static_cast<double>(F.p());
  for (std::size_t j = 1; j < n; ++j)
    traces[j] = weil_operator(F, T.element(j)).trace();
  std::vector<int> dims(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx s{};
    for (std::size_t j = 0; j < n; ++j)
      s += std::conj(T.character(k, j)) * traces[j];
    dims[k] = detail::round_gated(s / static_cast<double>(n),
                                  "character_space_dims");
  }
  return dims;
}

// The same dimensions from the closed form
//
//   dim H_chi = (1/#T) (sigma(-1) sigma_T(-1) sum_{g != 1} conj(chi(g))
//               sigma_T(g) + p),
//
// which involves only the quadratic character of the torus, no operators.
inline std::vector<int> character_space_dims_closed_form(
    const FieldContext& F, const MaximalTorus& T) {
  const std::size_t n = T.order();
  const SpMatrix minus_identity{F.neg(1), 0, 0, F.neg(1)};
  const double pref =
      F.legendre(F.p() - 1) * T.quadratic_sign(minus_identity);
  std::vector<int> dims(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx s{};
    for (std::size_t j = 1; j < n; ++j) {
      s += std::conj(T.character(k, j)) *
           static_cast<double>(T.quadratic_sign_power(j));
    }
    const cplx value =
        (pref * s + cplx{static_cast<double>(F.p()), 0.0}) /
        static_cast<double>(n);
    dims[k] = detail::round_gated(value, "character_space_dims_closed_form");
  }
  return dims;
}

struct SpectralEntry {
  std::size_t k;                     // character index
  std::vector<StateVector> vectors;  // orthonormal basis of H_chi
};

// The canonical basis of C(F_p) adapted to a maximal torus: for each
// character in the spectral support, an orthonormal basis of H_chi.  All p
// vectors together are orthonormal, and for the centralizer of the Weyl
// element they are eigenvectors of the DFT.
class SpectralBasis {
 public:
  SpectralBasis(MaximalTorus torus, std::vector<SpectralEntry> entries,
                std::size_t dimension)
      : torus_(std::move(torus)),
        entries_(std::move(entries)),
        dimension_(dimension) {}

  const MaximalTorus& torus() const { return torus_; }
  const std::vector<SpectralEntry>& entries() const { return entries_; }
  std::size_t dimension() const { return dimension_; }  // always p

 private:
  MaximalTorus torus_;
  std::vector<SpectralEntry> entries_;
  std::size_t dimension_;
};

namespace detail {

inline void fix_phase(StateVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-8) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      return;
    }
  }
}

}  // namespace detail

// Builds the canonical basis.  For each character chi in the support the
// projector is applied to the delta vectors delta_0, delta_1, ... in index
// order; images of norm > 1e-8 are orthonormalized (two-pass Gram-Schmidt)
// until dim H_chi vectors are collected, and each vector's phase is fixed so
// that its first coordinate of magnitude > 1e-8 is real positive.
//
// The projector images for all characters at once are the discrete Fourier
// coefficients, along the generator power m, of the orbit rho(t^m) delta_j;
// the orbit is produced by iterated matrix-vector products, which keeps the
// construction at O(#T p^2) instead of O(#T^2 p^2).
inline SpectralBasis eigenbasis(const FieldContext& F, const MaximalTorus& T) {
  const std::size_t p = F.p();
  const std::size_t n = T.order();
  const std::vector<int> dims = character_space_dims_closed_form(F, T);

  std::vector<SpectralEntry> entries;
  for (std::size_t k = 0; k < n; ++k) {
    if (dims[k] > 0) entries.push_back({k, {}});
  }

  const OperatorMatrix gen_op = weil_operator(F, T.generator());
  const CztPlan plan(n, -1);
  std::size_t remaining = p;

  Eigen::MatrixXcd orbit(p, n);
  Eigen::MatrixXcd projections(p, n);
  std::vector<cplx> row(n), out(n);

  for (std::size_t j = 0; j < p && remaining > 0; ++j) {
    StateVector u = StateVector::Zero(p);
    u[j] = 1.0;
    for (std::size_t m = 0; m + 1 < n; ++m) {
      orbit.col(m) = u;
      u = gen_op * u;
    }
    orbit.col(n - 1) = u;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t x = 0; x < p; ++x) {
      for (std::size_t m = 0; m < n; ++m) row[m] = orbit(x, m);
      plan.execute(row.data(), out.data());
      for (std::size_t k = 0; k < n; ++k) projections(x, k) = out[k] * inv_n;
    }
    for (SpectralEntry& entry : entries) {
      if (entry.vectors.size() == static_cast<std::size_t>(dims[entry.k]))
        continue;
      StateVector v = projections.col(entry.k);
      if (v.norm() <= 1e-8) continue;
      for (int pass = 0; pass < 2; ++pass) {
        for (const StateVector& e : entry.vectors) v -= e.dot(v) * e;
      }
      const double nv = v.norm();
      if (nv <= 1e-8) continue;
      v /= nv;
      detail::fix_phase(v);
      entry.vectors.push_back(std::move(v));
      --remaining;
    }
  }
  if (remaining != 0)
    throw std::runtime_error("eigenbasis: projected deltas did not span");
  return SpectralBasis(T, std::move(entries), p);
}

// Multiplicities of the four possible eigenvalues i^e, e = 0..3, i.e. the
// values {1, i, -1, -i}.  count[e] is the multiplicity of i^e.
struct MultiplicityTable {
  std::array<int, 4> count{0, 0, 0, 0};

  int plus_one() const { return count[0]; }
  int plus_i() const { return count[1]; }
  int minus_one() const { return count[2]; }
  int minus_i() const { return count[3]; }
  int total() const { return count[0] + count[1] + count[2] + count[3]; }

  friend bool operator==(const MultiplicityTable&,
                         const MultiplicityTable&) = default;
};

// Eigenvalue multiplicities of the Weil operator of the Weyl element,
// computed representation-theoretically: the multiplicity of lambda is the
// sum of dim H_chi over the characters of the centralizer torus with
// chi(w) = lambda.
inline MultiplicityTable weyl_element_multiplicities(const FieldContext& F) {
  const MaximalTorus T = MaximalTorus::weyl_centralizer(F);
  const std::vector<int> dims = character_space_dims_closed_form(F, T);
  const std::size_t n = T.order();
  const std::size_t jw = T.dlog(weyl_element(F));
  const std::size_t quarter = n / 4;  // 4 divides #T for every odd p
  MultiplicityTable table;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t val = k * jw % n;
    if (val % quarter != 0)
      throw std::runtime_error("character value at w is not a 4th root");
    table.count[val / quarter] += dims[k];
  }
  return table;
}

// DFT multiplicities, obtained from the Weil-operator table by the exact
// eigenvalue relabeling mu = dft_constant * lambda.
inline MultiplicityTable dft_multiplicities(const FieldContext& F) {
  const MultiplicityTable m = weyl_element_multiplicities(F);
  const std::size_t c = ((F.p() - 1) / 2) % 4;
  MultiplicityTable out;
  for (std::size_t e = 0; e < 4; ++e) out.count[(e + c) % 4] = m.count[e];
  return out;
}

// Numeric eigenvalue counts of a unitary operator of order 4: every
// eigenvalue is snapped to the nearest of {1, i, -1, -i} and must lie within
// snap_tol of it.
inline MultiplicityTable eigenvalue_histogram(const OperatorMatrix& op,
                                              double snap_tol = 1e-6) {
  static const std::array<cplx, 4> targets{cplx{1, 0}, cplx{0, 1}, cplx{-1, 0},
                                           cplx{0, -1}};
  Eigen::ComplexEigenSolver<OperatorMatrix> solver(op, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue_histogram: solver failed");
  MultiplicityTable table;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const cplx ev = solver.eigenvalues()[i];
    std::size_t best = 0;
    double best_d = std::abs(ev - targets[0]);
    for (std::size_t e = 1; e < 4; ++e) {
      const double d = std::abs(ev - targets[e]);
      if (d < best_d) {
        best_d = d;
        best = e;
      }
    }
    if (best_d >= snap_tol)
      throw std::runtime_error(
          "eigenvalue_histogram: eigenvalue too far from a 4th root of unity");
    table.count[best] += 1;
  }
  return table;
}

}  // namespace osc
