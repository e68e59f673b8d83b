#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "osc/dense.hpp"
#include "osc/field.hpp"
#include "osc/heisenberg.hpp"

namespace osc {

// 2 x 2 matrix over F_p, row-major.  SpMatrix values are expected to be
// unimodular (det = 1); use make_sp to construct with validation.  The
// Cayley transform below returns general (not necessarily det-1) matrices.
struct Mat2 {
  Residue a{0};
  Residue b{0};
  Residue c{0};
  Residue d{0};

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

using SpMatrix = Mat2;

inline Residue mat2_det(const FieldContext& F, Mat2 m) {
  return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

inline Mat2 mat2_mul(const FieldContext& F, Mat2 x, Mat2 y) {
  return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)),
          F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
          F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)),
          F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

inline Mat2 mat2_inverse(const FieldContext& F, Mat2 m) {
  const Residue det = mat2_det(F, m);
  if (det == 0) throw std::domain_error("singular 2x2 matrix");
  const Residue s = F.inverse(det);
  return {F.mul(s, m.d), F.mul(s, F.neg(m.b)), F.mul(s, F.neg(m.c)),
          F.mul(s, m.a)};
}

inline SpMatrix sp_identity() { return {1, 0, 0, 1}; }

inline bool is_unimodular(const FieldContext& F, Mat2 m) {
  return mat2_det(F, m) == 1;
}

inline SpMatrix make_sp(const FieldContext& F, Residue a, Residue b, Residue c,
                        Residue d) {
  SpMatrix m{a % F.p(), b % F.p(), c % F.p(), d % F.p()};
  if (!is_unimodular(F, m))
    throw std::domain_error("matrix is not unimodular (det != 1)");
  return m;
}

inline SpMatrix sp_inverse(const FieldContext& F, SpMatrix g) {
  return {g.d, F.neg(g.b), F.neg(g.c), g.a};
}

// The order-4 element (0, 1; -1, 0) whose operator is proportional to the DFT.
inline SpMatrix weyl_element(const FieldContext& F) {
  return {0, 1, F.neg(1), 0};
}

// Cayley transform (g + I)(g - I)^{-1}; defined iff g - I is invertible.
inline Mat2 cayley(const FieldContext& F, Mat2 g) {
  const Mat2 gm{F.sub(g.a, 1), g.b, g.c, F.sub(g.d, 1)};
  if (mat2_det(F, gm) == 0)
    throw std::domain_error("Cayley undefined: g - I is singular");
  const Mat2 gp{F.add(g.a, 1), g.b, g.c, F.add(g.d, 1)};
  return mat2_mul(F, gp, mat2_inverse(F, gm));
}

// Kernel of the Weil operator of g on the z = 0 section, for g with g - I
// invertible:
//
//   K_g(v, 0) = (1/p) sigma(-det(kappa + I)) psi((1/4) omega(kappa v, v)),
//
// where kappa is the Cayley transform of g and sigma the Legendre character.
inline KernelTable weil_kernel(const FieldContext& F, SpMatrix g) {
  const std::size_t p = F.p();
  const Mat2 k = cayley(F, g);
  const Mat2 kp{F.add(k.a, 1), k.b, k.c, F.add(k.d, 1)};
  // det(kappa + I) = 4 / det(g - I), never zero here.
  const int sgn = F.legendre(F.neg(mat2_det(F, kp)));
  const double scale = static_cast<double>(sgn) / static_cast<double>(p);
  const Residue quarter = F.inverse(4 % p);
  const std::vector<cplx> roots = unit_roots(F);
  KernelTable table(p, p);
  for (std::size_t t = 0; t < p; ++t) {
    for (std::size_t w = 0; w < p; ++w) {
      const Residue ut = F.add(F.mul(k.a, t), F.mul(k.b, w));
      const Residue uw = F.add(F.mul(k.c, t), F.mul(k.d, w));
      const Residue form = symplectic_form(F, ut, uw, t, w);
      table(t, w) = scale * roots[F.mul(quarter, form)];
    }
  }
  return table;
}

// Weil operator from the kernel formula; requires g - I invertible.
inline OperatorMatrix weil_from_kernel(const FieldContext& F, SpMatrix g) {
  return kernel_to_operator(F, weil_kernel(F, g));
}

// Weil operator of an arbitrary g in SL_2(F_p).  On the dense subset
// {det(g - I) != 0} the kernel formula applies directly; elsewhere the
// operator is completed multiplicatively as rho(g g0) rho(g0)^{-1} with a
// deterministic auxiliary g0 (first valid matrix in lexicographic order).
// The result is an exactly multiplicative unitary lift: no projective scalar.
inline OperatorMatrix weil_operator(const FieldContext& F, SpMatrix g) {
  const std::size_t p = F.p();
  if (!is_unimodular(F, g))
    throw std::invalid_argument("weil_operator: matrix is not in SL2");
  if (g == sp_identity()) return OperatorMatrix::Identity(p, p);
  const auto shifted_det = [&](SpMatrix m) {
    return mat2_det(F, Mat2{F.sub(m.a, 1), m.b, m.c, F.sub(m.d, 1)});
  };
  if (shifted_det(g) != 0) return weil_from_kernel(F, g);
  for (Residue a = 0; a < p; ++a) {
    for (Residue b = 0; b < p; ++b) {
      for (Residue c = 0; c < p; ++c) {
        // ad - bc = 1 determines d when a != 0; a = 0 forces bc = -1.
        if (a == 0) {
          if (b == 0) continue;
          const Residue c0 = F.neg(F.inverse(b));
          if (c != c0) continue;
          for (Residue d = 0; d < p; ++d) {
            const SpMatrix g0{a, b, c, d};
            if (shifted_det(g0) == 0) continue;
            if (shifted_det(mat2_mul(F, g, g0)) == 0) continue;
            return weil_from_kernel(F, mat2_mul(F, g, g0)) *
                   weil_from_kernel(F, g0).adjoint();
          }
          continue;
        }
        const Residue d = F.mul(F.inverse(a), F.add(1, F.mul(b, c)));
        const SpMatrix g0{a, b, c, d};
        if (shifted_det(g0) == 0) continue;
        if (shifted_det(mat2_mul(F, g, g0)) == 0) continue;
        return weil_from_kernel(F, mat2_mul(F, g, g0)) *
               weil_from_kernel(F, g0).adjoint();
      }
    }
  }
  throw std::runtime_error("weil_operator: no auxiliary element found");
}

// Normalized scaling S_a f(x) = sigma(a) f(a^{-1} x); the Weil action of the
// diagonal element diag(a, a^{-1}) up to a unitary scalar.
inline OperatorMatrix scaling_operator(const FieldContext& F, Residue a) {
  a %= F.p();
  if (a == 0) throw std::domain_error("scaling_operator: a must be nonzero");
  const std::size_t p = F.p();
  const double sgn = static_cast<double>(F.legendre(a));
  const Residue ainv = F.inverse(a);
  OperatorMatrix m = OperatorMatrix::Zero(p, p);
  for (std::size_t x = 0; x < p; ++x) m(x, F.mul(ainv, x)) = sgn;
  return m;
}

// Chirp M_b f(x) = psi(-(b/2) x^2) f(x); the Weil action of the lower
// unipotent (1, 0; b, 1) up to a unitary scalar.
inline OperatorMatrix chirp_operator(const FieldContext& F, Residue b) {
  const std::size_t p = F.p();
  const Residue coeff = F.neg(F.mul(b, F.half()));
  OperatorMatrix m = OperatorMatrix::Zero(p, p);
  for (std::size_t x = 0; x < p; ++x)
    m(x, x) = F.psi(F.mul(coeff, F.mul(x, x)));
  return m;
}

// Unitary DFT matrix F(y, x) = psi(y x) / sqrt(p).
inline OperatorMatrix dft_matrix(const FieldContext& F) {
  const std::size_t p = F.p();
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  const std::vector<cplx> roots = unit_roots(F);
  OperatorMatrix m(p, p);
  for (std::size_t y = 0; y < p; ++y)
    for (std::size_t x = 0; x < p; ++x) m(y, x) = scale * roots[F.mul(y, x)];
  return m;
}

// The unit scalar i^{(p-1)/2} relating the DFT to the Weil operator of the
// Weyl element: dft_matrix = dft_constant * weil_operator(weyl_element).
inline cplx dft_constant(const FieldContext& F) {
  switch (((F.p() - 1) / 2) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Bruhat factorization of g: either g = U(shear1) A(scale) (lower-triangular
// cell) or g = U(shear2) w U(shear1) A(scale) (big cell, b != 0), with
// U(b) = (1, 0; b, 1) and A(a) = diag(a, a^{-1}).  The induced operator
// composition (chirps, scalings, DFT) equals the Weil operator of g up to a
// unit scalar.
struct BruhatFactorization {
  enum class Cell { kTorusUnipotent, kBigCell };

  Cell cell{Cell::kTorusUnipotent};
  Residue shear1{0};
  Residue shear2{0};
  Residue scale{1};
};

inline BruhatFactorization bruhat_decompose(const FieldContext& F,
                                            SpMatrix g) {
  BruhatFactorization bf;
  if (g.b == 0) {
    bf.cell = BruhatFactorization::Cell::kTorusUnipotent;
    bf.scale = g.a;  // nonzero: det = a d = 1
    bf.shear1 = F.mul(g.c, F.inverse(g.a));
  } else {
    bf.cell = BruhatFactorization::Cell::kBigCell;
    bf.scale = F.inverse(g.b);
    bf.shear1 = F.mul(g.a, g.b);
    bf.shear2 = F.mul(g.d, F.inverse(g.b));
  }
  return bf;
}

inline SpMatrix bruhat_recompose(const FieldContext& F,
                                 const BruhatFactorization& bf) {
  const SpMatrix diag{bf.scale, 0, 0, F.inverse(bf.scale)};
  const SpMatrix u1{1, 0, bf.shear1, 1};
  SpMatrix m = mat2_mul(F, u1, diag);
  if (bf.cell == BruhatFactorization::Cell::kBigCell) {
    m = mat2_mul(F, weyl_element(F), m);
    const SpMatrix u2{1, 0, bf.shear2, 1};
    m = mat2_mul(F, u2, m);
  }
  return m;
}

// Dense operator realization of a Bruhat factorization (test/reference path;
// the fast transform applies the same factors without materializing them).
inline OperatorMatrix bruhat_operator(const FieldContext& F,
                                      const BruhatFactorization& bf) {
  OperatorMatrix m = chirp_operator(F, bf.shear1) *
                     scaling_operator(F, bf.scale);
  if (bf.cell == BruhatFactorization::Cell::kBigCell) {
    m = chirp_operator(F, bf.shear2) * dft_matrix(F) * m;
  }
  return m;
}

}  // namespace osc
