#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "osc/dense.hpp"
#include "osc/fft.hpp"
#include "osc/field.hpp"

namespace osc {

// Element (t, w, z) of the Heisenberg group H = V x F_p, where V = F_p x F_p
// carries the standard symplectic form and z is the central coordinate.
struct HeisenbergElement {
  Residue t{0};
  Residue w{0};
  Residue z{0};

  friend bool operator==(const HeisenbergElement&,
                         const HeisenbergElement&) = default;
};

// Standard symplectic form omega((t, w), (t2, w2)) = t*w2 - w*t2.
inline Residue symplectic_form(const FieldContext& F, Residue t, Residue w,
                               Residue t2, Residue w2) {
  return F.sub(F.mul(t, w2), F.mul(w, t2));
}

// Group law (v, z)(v', z') = (v + v', z + z' + (1/2) omega(v, v')).
inline HeisenbergElement heis_mul(const FieldContext& F, HeisenbergElement a,
                                  HeisenbergElement b) {
  const Residue twist =
      F.mul(F.half(), symplectic_form(F, a.t, a.w, b.t, b.w));
  return {F.add(a.t, b.t), F.add(a.w, b.w), F.add(F.add(a.z, b.z), twist)};
}

inline HeisenbergElement heis_inverse(const FieldContext& F,
                                      HeisenbergElement a) {
  return {F.neg(a.t), F.neg(a.w), F.neg(a.z)};
}

// Matrix of the irreducible representation of H on C(F_p) in the delta basis.
// Factoring (t, w, z) = (t, 0, 0)(0, w, 0)(0, 0, z - tw/2) through the group
// law composes the translation, modulation and central-scalar actions into
//
//   (pi(t, w, z) f)(x) = psi(z + w x + w t / 2) f(x + t),
//
// a unitary permutation-with-phases matrix.
inline OperatorMatrix heisenberg_operator(const FieldContext& F,
                                          HeisenbergElement h) {
  const std::size_t p = F.p();
  OperatorMatrix m = OperatorMatrix::Zero(p, p);
  const Residue wt_half = F.mul(F.mul(h.w, h.t), F.half());
  for (std::size_t x = 0; x < p; ++x) {
    const Residue e = F.add(F.add(h.z, F.mul(h.w, x)), wt_half);
    m(x, (x + h.t) % p) = F.psi(e);
  }
  return m;
}

// Kernel of an operator A on the z = 0 section:
//
//   K_A(v, 0) = (1/p) Tr(A pi((v, 0)^{-1})).
//
// Row t of the table is computed with one length-p Fourier sum, so the whole
// transform costs O(p^2 log p).
inline KernelTable weyl_transform(const FieldContext& F,
                                  const OperatorMatrix& a) {
  const std::size_t p = F.p();
  if (a.rows() != static_cast<Eigen::Index>(p) || a.rows() != a.cols())
    throw std::invalid_argument("weyl_transform: operator must be p x p");
  KernelTable k(p, p);
  const CztPlan plan(p, -1);
  std::vector<cplx> diag(p), sums(p);
  const double inv_p = 1.0 / static_cast<double>(p);
  for (std::size_t t = 0; t < p; ++t) {
    // Tr(A pi((-t, -w, 0))) = sum_y A((y - t) mod p, y) psi(-w y + w t / 2)
    for (std::size_t y = 0; y < p; ++y) diag[y] = a((y + p - t) % p, y);
    plan.execute(diag.data(), sums.data());
    for (std::size_t w = 0; w < p; ++w) {
      const Residue e = F.mul(F.mul(w, t), F.half());
      k(t, w) = inv_p * F.psi(e) * sums[w];
    }
  }
  return k;
}

// Inverse of the Weyl transform: A = sum_{v in V} K(v, 0) pi(v, 0).
// Diagonal stripe t of A is one length-p Fourier sum of row t of K.
inline OperatorMatrix kernel_to_operator(const FieldContext& F,
                                         const KernelTable& k) {
  const std::size_t p = F.p();
  if (k.rows() != static_cast<Eigen::Index>(p) || k.rows() != k.cols())
    throw std::invalid_argument("kernel_to_operator: table must be p x p");
  OperatorMatrix a = OperatorMatrix::Zero(p, p);
  const CztPlan plan(p, +1);
  std::vector<cplx> row(p), sums(p);
  for (std::size_t t = 0; t < p; ++t) {
    for (std::size_t w = 0; w < p; ++w) row[w] = k(t, w);
    plan.execute(row.data(), sums.data());
    // A(x, x + t) = sum_w K(t, w) psi(w (x + t/2))
    const Residue t_half = F.mul(t, F.half());
    for (std::size_t x = 0; x < p; ++x) {
      a(x, (x + t) % p) = sums[F.add(x, t_half)];
    }
  }
  return a;
}

}  // namespace osc
