#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "osc/dense.hpp"
#include "osc/fft.hpp"
#include "osc/field.hpp"
#include "osc/heisenberg.hpp"
#include "osc/spectral.hpp"
#include "osc/tori.hpp"
#include "osc/weil.hpp"

namespace osc {

// Transform output: one complex value per character label.  For the plain
// oscillator transform the labels are the character indices of the spectral
// support; the full analysis transform appends index + #T for the second
// vector of a two-dimensional character space, so labels stay distinct.
struct CoefficientVector {
  std::vector<std::size_t> labels;
  Eigen::VectorXcd values;
};

// Function on a torus, indexed by generator power j = 0..#T-1.
struct TorusFunction {
  std::size_t order{0};
  Eigen::VectorXcd values;
};

// Oscillator transform: the inner products <f, phi_chi> against the first
// basis vector of each character space in the spectral support.  In the split
// case this drops the second vector of the sigma_T space (the transform has a
// kernel); full_analysis below is the invertible completion.
inline CoefficientVector dot_transform(const SpectralBasis& basis,
                                       const StateVector& f) {
  if (f.size() != static_cast<Eigen::Index>(basis.dimension()))
    throw std::invalid_argument("dot_transform: dimension mismatch");
  CoefficientVector out;
  out.labels.reserve(basis.entries().size());
  out.values.resize(basis.entries().size());
  Eigen::Index i = 0;
  for (const SpectralEntry& entry : basis.entries()) {
    out.labels.push_back(entry.k);
    out.values[i++] = entry.vectors.front().dot(f);
  }
  return out;
}

// Coefficients of f in the full orthonormal basis (all p vectors).
inline CoefficientVector full_analysis(const SpectralBasis& basis,
                                       const StateVector& f) {
  if (f.size() != static_cast<Eigen::Index>(basis.dimension()))
    throw std::invalid_argument("full_analysis: dimension mismatch");
  const std::size_t n = basis.torus().order();
  CoefficientVector out;
  out.labels.reserve(basis.dimension());
  out.values.resize(basis.dimension());
  Eigen::Index i = 0;
  for (const SpectralEntry& entry : basis.entries()) {
    for (std::size_t v = 0; v < entry.vectors.size(); ++v) {
      out.labels.push_back(entry.k + v * n);
      out.values[i++] = entry.vectors[v].dot(f);
    }
  }
  return out;
}

inline StateVector full_synthesis(const SpectralBasis& basis,
                                  const CoefficientVector& coeffs) {
  const std::size_t n = basis.torus().order();
  std::size_t expected = 0;
  for (const SpectralEntry& entry : basis.entries())
    expected += entry.vectors.size();
  if (coeffs.labels.size() != expected ||
      coeffs.values.size() != static_cast<Eigen::Index>(expected))
    throw std::invalid_argument("full_synthesis: label set mismatch");
  StateVector f = StateVector::Zero(basis.dimension());
  Eigen::Index i = 0;
  for (const SpectralEntry& entry : basis.entries()) {
    for (std::size_t v = 0; v < entry.vectors.size(); ++v, ++i) {
      if (coeffs.labels[i] != entry.k + v * n)
        throw std::invalid_argument("full_synthesis: label set mismatch");
      f += coeffs.values[i] * entry.vectors[v];
    }
  }
  return f;
}

// Mellin transform on the torus: M[k] = (1/#T) sum_j conj(chi_k(t^j)) F(j).
inline Eigen::VectorXcd mellin_transform(const MaximalTorus& T,
                                         const TorusFunction& fn) {
  const std::size_t n = T.order();
  if (fn.order != n || fn.values.size() != static_cast<Eigen::Index>(n))
    throw std::invalid_argument("mellin_transform: length mismatch");
  const CztPlan plan(n, -1);
  std::vector<cplx> in(n), out(n);
  for (std::size_t j = 0; j < n; ++j) in[j] = fn.values[j];
  plan.execute(in.data(), out.data());
  Eigen::VectorXcd result(n);
  for (std::size_t k = 0; k < n; ++k)
    result[k] = out[k] / static_cast<double>(n);
  return result;
}

// Matrix coefficient m[j] = <f, rho(t^{-j}) phi>, via iterated products with
// the adjoint of the generator operator (rho is unitary).
inline TorusFunction matrix_coefficient(const FieldContext& F,
                                        const MaximalTorus& T,
                                        const StateVector& phi,
                                        const StateVector& f) {
  const std::size_t n = T.order();
  const OperatorMatrix gen_adj = weil_operator(F, T.generator()).adjoint();
  TorusFunction fn{n, Eigen::VectorXcd(n)};
  StateVector cur = phi;
  for (std::size_t j = 0; j < n; ++j) {
    fn.values[j] = cur.dot(f);
    if (j + 1 < n) cur = gen_adj * cur;
  }
  return fn;
}

// Integral form of the oscillator transform: Mellin transform of the matrix
// coefficient against the test vector phi = sum of the canonical unit
// vectors over the spectral support.  Agrees with dot_transform.
inline CoefficientVector dot_integral_form(const FieldContext& F,
                                           const MaximalTorus& T,
                                           const SpectralBasis& basis,
                                           const StateVector& f) {
  StateVector phi = StateVector::Zero(basis.dimension());
  for (const SpectralEntry& entry : basis.entries())
    phi += entry.vectors.front();
  const Eigen::VectorXcd mellin =
      mellin_transform(T, matrix_coefficient(F, T, phi, f));
  CoefficientVector out;
  out.labels.reserve(basis.entries().size());
  out.values.resize(basis.entries().size());
  Eigen::Index i = 0;
  for (const SpectralEntry& entry : basis.entries()) {
    out.labels.push_back(entry.k);
    out.values[i++] = mellin[entry.k];
  }
  return out;
}

// The element s = (1/2, eps/2; eps, 1), eps^2 = -1, conjugating the
// centralizer of the Weyl element onto the diagonal torus.
inline SpMatrix torus_conjugator(const FieldContext& F) {
  if (!F.has_sqrt_neg_one())
    throw std::domain_error(
        "torus_conjugator requires p = 1 mod 4 (-1 must be a square)");
  const Residue eps = F.sqrt_neg_one();
  return make_sp(F, F.half(), F.mul(eps, F.half()), eps, 1);
}

// Generator of the centralizer torus of the Weyl element, computed in O(p)
// for p = 1 mod 4 through the eigenvalue parametrization: the matrix
// (a, b; -b, a) with a^2 + b^2 = 1 has eigenvalue u = a + eps*b in F_p^x and
// g -> u is an isomorphism onto F_p^x.  The generator is the lexicographically
// first (a, b) among the elements of full order, i.e. among u = r^j with
// gcd(j, p - 1) = 1.  Matches the brute-scan torus construction.
inline SpMatrix dft_torus_generator(const FieldContext& F) {
  if (!F.has_sqrt_neg_one())
    throw std::domain_error("dft_torus_generator requires p = 1 mod 4");
  const Residue eps = F.sqrt_neg_one();
  const Residue r = F.primitive_root();
  const Residue rinv = F.inverse(r);
  const Residue inv_2eps = F.inverse(F.mul(2, eps));
  Residue u = 1, uinv = 1;
  bool have = false;
  Residue best_a = 0, best_b = 0;
  for (std::uint64_t j = 1; j < F.p() - 1; ++j) {
    u = F.mul(u, r);
    uinv = F.mul(uinv, rinv);
    if (std::gcd(j, F.p() - 1) != 1) continue;
    const Residue a = F.mul(F.add(u, uinv), F.half());
    const Residue b = F.mul(F.sub(u, uinv), inv_2eps);
    if (!have || a < best_a || (a == best_a && b < best_b)) {
      have = true;
      best_a = a;
      best_b = b;
    }
  }
  return {best_a, best_b, F.neg(best_b), best_a};
}

// Fast DFT F[f](y) = (1/sqrt p) sum_x psi(yx) f(x) in O(p log p).  For
// repeated use at the same p prefer FastOscillator, which keeps the plan.
inline StateVector fast_dft(const FieldContext& F, const StateVector& f) {
  const std::size_t p = F.p();
  if (f.size() != static_cast<Eigen::Index>(p))
    throw std::invalid_argument("fast_dft: dimension mismatch");
  const CztPlan plan(p, +1);
  std::vector<cplx> in(p), out(p);
  for (std::size_t x = 0; x < p; ++x) in[x] = f[x];
  plan.execute(in.data(), out.data());
  StateVector result(p);
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  for (std::size_t y = 0; y < p; ++y) result[y] = out[y] * scale;
  return result;
}

// Fast oscillator transform with respect to the centralizer torus of the
// Weyl element, for p = 1 mod 4.  The conjugator operator is applied as
// chirp . DFT . chirp . scaling from its Bruhat factorization, and the
// remaining multiplicative character sum is a length p-1 Fourier transform
// after reindexing F_p^x by primitive-root powers.  Everything is O(p log p)
// time and O(p) space.
//
// The factored conjugator action equals the Weil operator of s up to one
// global unit scalar, measured at construction against the dense operator
// column at delta_0 when p is within the dense cap.  Above the cap the
// scalar is fixed to 1 and the transform is defined up to a global phase.
class FastOscillator {
 public:
  explicit FastOscillator(const FieldContext& F,
                          std::size_t dense_cap = kDefaultDenseCap)
      : F_(F),
        dft_plan_(F.p(), +1),
        // Bin orientation of the character sum, pinned against the dense
        // transform (see the fast-path tests): coefficient k is
        // (1/(p-1)) sum_j (-1)^j v(r^j) e^{+2 pi i jk/(p-1)}.
        mellin_plan_(F.p() - 1, +1) {
    if (!F_.has_sqrt_neg_one())
      throw std::domain_error(
          "fast oscillator transform requires p = 1 mod 4; no fast algorithm "
          "is known for the non-split case (use the dense transform)");
    const Residue eps = F_.sqrt_neg_one();
    scale_a_ = F_.mul(2, F_.inverse(eps));          // 2/eps
    chirp1_b_ = F_.mul(eps, F_.inverse(4 % F_.p()));  // eps/4
    chirp2_b_ = scale_a_;                           // 2/eps
    const Residue r = F_.primitive_root();
    root_pow_.resize(F_.p() - 1);
    Residue cur = 1;
    for (std::size_t j = 0; j < F_.p() - 1; ++j) {
      root_pow_[j] = static_cast<std::uint32_t>(cur);
      cur = F_.mul(cur, r);
    }
    // Label pull-back: the A-side character k corresponds to the centralizer
    // character k * ad_step, with ad_step the A-discrete-log of s t s^{-1}.
    const SpMatrix s = torus_conjugator(F_);
    const SpMatrix t = dft_torus_generator(F_);
    const SpMatrix conj =
        mat2_mul(F_, s, mat2_mul(F_, t, sp_inverse(F_, s)));
    if (conj.b != 0 || conj.c != 0)
      throw std::runtime_error("conjugated torus generator is not diagonal");
    ad_step_ = discrete_log(F_, r, conj.a);
    scalar_ = cplx{1.0, 0.0};
    if (F_.p() <= dense_cap) {
      StateVector delta0 = StateVector::Zero(F_.p());
      delta0[0] = 1.0;
      const StateVector ref = weil_operator(F_, s).col(0);
      const StateVector probe = apply_conjugator(delta0);
      for (Eigen::Index i = 0; i < ref.size(); ++i) {
        if (std::abs(ref[i]) > 1e-8) {
          scalar_ = ref[i] / probe[i];
          break;
        }
      }
      if (std::abs(std::abs(scalar_) - 1.0) > 1e-6)
        throw std::runtime_error(
            "conjugator scalar calibration is not unimodular");
    }
  }

  const FieldContext& field() const { return F_; }
  cplx conjugator_scalar() const { return scalar_; }
  std::size_t label_step() const { return ad_step_; }

  // The Weil operator of the conjugator s applied to f (exactly, below the
  // dense cap; up to a global phase above it).
  StateVector apply_conjugator(const StateVector& f) const {
    const std::size_t p = F_.p();
    if (f.size() != static_cast<Eigen::Index>(p))
      throw std::invalid_argument("apply_conjugator: dimension mismatch");
    std::vector<cplx> buf(p), out(p);
    // scaling S_a: x -> sigma(a) f(a^{-1} x)
    const double sgn = static_cast<double>(F_.legendre(scale_a_));
    const Residue ainv = F_.inverse(scale_a_);
    for (std::size_t x = 0; x < p; ++x) buf[x] = sgn * f[F_.mul(ainv, x)];
    // chirp M_{eps/4}
    const Residue c1 = F_.neg(F_.mul(chirp1_b_, F_.half()));
    for (std::size_t x = 0; x < p; ++x)
      buf[x] *= F_.psi(F_.mul(c1, F_.mul(x, x)));
    // DFT
    dft_plan_.execute(buf.data(), out.data());
    const double root_scale = 1.0 / std::sqrt(static_cast<double>(p));
    // chirp M_{2/eps} and the calibrated scalar
    const Residue c2 = F_.neg(F_.mul(chirp2_b_, F_.half()));
    StateVector result(p);
    for (std::size_t x = 0; x < p; ++x) {
      result[x] =
          scalar_ * root_scale * out[x] * F_.psi(F_.mul(c2, F_.mul(x, x)));
    }
    return result;
  }

  // The fast oscillator transform, labeled by the characters of the
  // centralizer torus (A-side characters pulled back through the conjugation),
  // sorted by label.
  CoefficientVector transform(const StateVector& f) const {
    const std::size_t p = F_.p();
    const std::size_t n = p - 1;
    const StateVector v = apply_conjugator(f);
    std::vector<cplx> g(n), bins(n);
    for (std::size_t j = 0; j < n; ++j) {
      const cplx val = v[root_pow_[j]];
      g[j] = (j % 2 == 0) ? val : -val;
    }
    mellin_plan_.execute(g.data(), bins.data());
    // k -> k * ad_step is a bijection mod n (the conjugated generator
    // generates the diagonal torus), so the labels are exactly 0..n-1.
    CoefficientVector out;
    out.labels.resize(n);
    out.values.resize(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
      out.labels[k] = k;
      out.values[k * ad_step_ % n] = bins[k] * inv_n;
    }
    return out;
  }

 private:
  FieldContext F_;
  Residue scale_a_{1};
  Residue chirp1_b_{0};
  Residue chirp2_b_{0};
  std::vector<std::uint32_t> root_pow_;
  CztPlan dft_plan_;
  CztPlan mellin_plan_;
  cplx scalar_{1.0, 0.0};
  std::size_t ad_step_{1};
};

}  // namespace osc
