#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "osc/dense.hpp"
#include "osc/field.hpp"
#include "osc/heisenberg.hpp"
#include "osc/oscillator.hpp"
#include "osc/spectral.hpp"
#include "osc/tori.hpp"
#include "osc/weil.hpp"

namespace osc {

struct CheckResult {
  std::string name;
  double max_err{0.0};
  double tolerance{0.0};
  bool pass{true};
};

struct VerifyOptions {
  std::uint64_t pmin{3};
  std::uint64_t pmax{31};
  std::vector<std::string> suites{"all"};
  std::uint64_t seed{1};
  std::size_t dense_cap{kDefaultDenseCap};
  // Test hook: added to entry (0,0) of the Weil operator of the Weyl element
  // before the DFT-relation check, to prove the check can fail.
  double perturb_dft_relation{0.0};
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace verify_detail {

class Check {
 public:
  Check(std::string name, double tol) : result_{std::move(name), 0.0, tol} {}

  void update(double err) { result_.max_err = std::max(result_.max_err, err); }
  void require(bool ok) { update(ok ? 0.0 : 1.0); }

  CheckResult finish() const {
    CheckResult r = result_;
    r.pass = r.max_err <= r.tolerance;
    return r;
  }

 private:
  CheckResult result_;
};

inline SpMatrix random_sp(const FieldContext& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> U(0, F.p() - 1);
  while (true) {
    const Residue a = U(rng), b = U(rng), c = U(rng);
    if (a != 0) {
      const Residue d = F.mul(F.inverse(a), F.add(1, F.mul(b, c)));
      return SpMatrix{a, b, c, d};
    }
    if (b == 0) continue;
    return SpMatrix{0, b, F.neg(F.inverse(b)), U(rng)};
  }
}

inline StateVector random_state(std::size_t p, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  StateVector f(p);
  for (std::size_t i = 0; i < p; ++i) f[i] = cplx{N(rng), N(rng)};
  return f;
}

inline HeisenbergElement random_heis(const FieldContext& F,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> U(0, F.p() - 1);
  return {U(rng), U(rng), U(rng)};
}

// rho(t^j) for every j; the projector loops reuse this family.
inline std::vector<OperatorMatrix> torus_operator_family(
    const FieldContext& F, const MaximalTorus& T) {
  std::vector<OperatorMatrix> ops;
  ops.reserve(T.order());
  ops.push_back(OperatorMatrix::Identity(F.p(), F.p()));
  for (std::size_t j = 1; j < T.order(); ++j)
    ops.push_back(weil_operator(F, T.element(j)));
  return ops;
}

inline OperatorMatrix projector_from_family(
    const MaximalTorus& T, std::size_t k,
    const std::vector<OperatorMatrix>& family) {
  OperatorMatrix acc = OperatorMatrix::Zero(family[0].rows(), family[0].cols());
  for (std::size_t j = 0; j < T.order(); ++j)
    acc += std::conj(T.character(k, j)) * family[j];
  return acc / static_cast<double>(T.order());
}

inline bool wants(const VerifyOptions& opt, const char* suite) {
  for (const std::string& s : opt.suites)
    if (s == "all" || s == suite) return true;
  return false;
}

inline std::vector<std::uint64_t> primes_in(std::uint64_t lo,
                                            std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 3); p <= hi; ++p)
    if (p % 2 == 1 && detail::is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace verify_detail

inline VerifyReport run_verification(const VerifyOptions& opt) {
  using namespace verify_detail;
  VerifyReport report;
  const auto primes = primes_in(opt.pmin, opt.pmax);
  std::mt19937_64 rng(opt.seed);

  if (wants(opt, "field")) {
    Check mult("field: legendre character is multiplicative", 0);
    Check minus("field: legendre(-1) sign matches p mod 4", 0);
    Check psi_add("field: psi is an additive character", 1e-12);
    Check eps("field: sqrt(-1) squares to -1", 0);
    Check norm("field: quadratic extension norm is multiplicative", 0);
    for (std::uint64_t p : primes) {
      FieldContext F(p);
      if (p <= 101) {
        for (Residue a = 1; a < p; ++a)
          for (Residue b = 1; b < p; ++b)
            mult.require(F.legendre(a) * F.legendre(b) ==
                         F.legendre(F.mul(a, b)));
        for (Residue a = 0; a < p; ++a)
          for (Residue b = 0; b < p; ++b)
            psi_add.update(std::abs(F.psi(a) * F.psi(b) - F.psi(F.add(a, b))));
      } else {
        std::uniform_int_distribution<Residue> U(1, p - 1);
        for (int it = 0; it < 2000; ++it) {
          const Residue a = U(rng), b = U(rng);
          mult.require(F.legendre(a) * F.legendre(b) ==
                       F.legendre(F.mul(a, b)));
          psi_add.update(std::abs(F.psi(a) * F.psi(b) - F.psi(F.add(a, b))));
        }
      }
      minus.require(F.legendre(p - 1) == (p % 4 == 1 ? 1 : -1));
      if (F.has_sqrt_neg_one()) {
        const Residue e = F.sqrt_neg_one();
        eps.require(F.mul(e, e) == p - 1);
      }
      std::uniform_int_distribution<Residue> U(0, p - 1);
      for (int it = 0; it < 500; ++it) {
        const QuadExt u{U(rng), U(rng)}, v{U(rng), U(rng)};
        norm.require(quad_norm(F, quad_mul(F, u, v)) ==
                     F.mul(quad_norm(F, u), quad_norm(F, v)));
        const QuadExt w{U(rng), U(rng)};
        norm.require(quad_mul(F, u, v) == quad_mul(F, v, u));
        norm.require(quad_mul(F, quad_mul(F, u, v), w) ==
                     quad_mul(F, u, quad_mul(F, v, w)));
      }
    }
    for (const Check& c : {mult, minus, psi_add, eps, norm})
      report.checks.push_back(c.finish());
  }

  if (wants(opt, "heisenberg")) {
    Check assoc("heisenberg: group law is associative", 0);
    Check center("heisenberg: center commutes with everything", 0);
    Check inv("heisenberg: inverse round trip", 0);
    Check hom("heisenberg: representation is a homomorphism", 1e-10);
    Check unit("heisenberg: representation operators are unitary", 1e-10);
    Check weyl_rt("heisenberg: operator/kernel round trips", 1e-10);
    for (std::uint64_t p : primes) {
      FieldContext F(p);
      std::uniform_int_distribution<Residue> U(0, p - 1);
      const std::size_t triples = p == 3 ? 0 : 400;
      if (p == 3) {
        for (Residue i = 0; i < 27; ++i)
          for (Residue j = 0; j < 27; ++j)
            for (Residue k = 0; k < 27; ++k) {
              const HeisenbergElement a{i / 9, i / 3 % 3, i % 3};
              const HeisenbergElement b{j / 9, j / 3 % 3, j % 3};
              const HeisenbergElement c{k / 9, k / 3 % 3, k % 3};
              assoc.require(heis_mul(F, heis_mul(F, a, b), c) ==
                            heis_mul(F, a, heis_mul(F, b, c)));
            }
      }
      for (std::size_t it = 0; it < triples; ++it) {
        const auto a = random_heis(F, rng), b = random_heis(F, rng),
                   c = random_heis(F, rng);
        assoc.require(heis_mul(F, heis_mul(F, a, b), c) ==
                      heis_mul(F, a, heis_mul(F, b, c)));
      }
      for (int it = 0; it < 100; ++it) {
        const auto a = random_heis(F, rng);
        const HeisenbergElement z{0, 0, U(rng)};
        center.require(heis_mul(F, a, z) == heis_mul(F, z, a));
        inv.require(heis_mul(F, a, heis_inverse(F, a)) ==
                    HeisenbergElement{0, 0, 0});
        inv.require(heis_inverse(F, heis_inverse(F, a)) == a);
      }
      if (p <= 31) {
        for (int it = 0; it < 20; ++it) {
          const auto a = random_heis(F, rng), b = random_heis(F, rng);
          const OperatorMatrix lhs =
              heisenberg_operator(F, a) * heisenberg_operator(F, b);
          const OperatorMatrix rhs =
              heisenberg_operator(F, heis_mul(F, a, b));
          hom.update((lhs - rhs).cwiseAbs().maxCoeff());
          const OperatorMatrix op = heisenberg_operator(F, a);
          const StateVector f = random_state(p, rng);
          unit.update(std::abs((op * f).norm() - f.norm()));
        }
        OperatorMatrix a(p, p);
        for (std::size_t i = 0; i < p; ++i)
          for (std::size_t j = 0; j < p; ++j) {
            std::normal_distribution<double> N(0.0, 1.0);
            a(i, j) = cplx{N(rng), N(rng)};
          }
        const OperatorMatrix round =
            kernel_to_operator(F, weyl_transform(F, a));
        weyl_rt.update((a - round).cwiseAbs().maxCoeff());
        const KernelTable k = weyl_transform(F, a);
        const KernelTable k2 = weyl_transform(F, kernel_to_operator(F, k));
        weyl_rt.update((k - k2).cwiseAbs().maxCoeff());
      }
    }
    for (const Check& c : {assoc, center, inv, hom, unit, weyl_rt})
      report.checks.push_back(c.finish());
  }

  if (wants(opt, "weil")) {
    Check intw("weil: conjugation intertwines the Heisenberg action", 1e-9);
    Check mult("weil: operator lift is exactly multiplicative", 1e-9);
    Check conv("weil: kernels convolve under composition", 1e-9);
    Check detw("weil: det of the Weyl-element operator is 1", 1e-8);
    Check detg("weil: det of a random operator is 1 (p != 3)", 1e-8);
    Check dft("weil: dft matrix equals constant times Weyl operator", 1e-9);
    Check bru("weil: bruhat factors recompose and match up to a unit scalar",
              1e-9);
    for (std::uint64_t p : primes) {
      FieldContext F(p);
      if (p <= 31) {
        for (int it = 0; it < 60; ++it) {
          const SpMatrix g = random_sp(F, rng);
          const HeisenbergElement h = random_heis(F, rng);
          const OperatorMatrix rg = weil_operator(F, g);
          const OperatorMatrix lhs =
              rg * heisenberg_operator(F, h) * rg.adjoint();
          const HeisenbergElement gh{
              F.add(F.mul(g.a, h.t), F.mul(g.b, h.w)),
              F.add(F.mul(g.c, h.t), F.mul(g.d, h.w)), h.z};
          intw.update(
              (lhs - heisenberg_operator(F, gh)).cwiseAbs().maxCoeff());
        }
        for (int it = 0; it < 60; ++it) {
          const SpMatrix g1 = random_sp(F, rng), g2 = random_sp(F, rng);
          const OperatorMatrix lhs =
              weil_operator(F, g1) * weil_operator(F, g2);
          const OperatorMatrix rhs =
              weil_operator(F, mat2_mul(F, g1, g2));
          mult.update((lhs - rhs).cwiseAbs().maxCoeff());
        }
        for (int it = 0; it < 20; ++it) {
          const SpMatrix g = random_sp(F, rng);
          const BruhatFactorization bf = bruhat_decompose(F, g);
          bru.require(bruhat_recompose(F, bf) == g);
          const OperatorMatrix bop = bruhat_operator(F, bf);
          const OperatorMatrix rop = weil_operator(F, g);
          Eigen::Index mi, mj;
          rop.cwiseAbs().maxCoeff(&mi, &mj);
          const cplx scal = bop(mi, mj) / rop(mi, mj);
          bru.update(std::abs(std::abs(scal) - 1.0));
          bru.update((bop - scal * rop).cwiseAbs().maxCoeff());
        }
      }
      if (p <= 13) {
        // section convolution (K1 * K2)(v) =
        //   sum_{v'} psi(omega(v', v)/2) K1(v') K2(v - v')
        for (int it = 0; it < 4; ++it) {
          SpMatrix g1 = random_sp(F, rng), g2 = random_sp(F, rng);
          const auto ok = [&](SpMatrix g) {
            return mat2_det(F, Mat2{F.sub(g.a, 1), g.b, g.c,
                                    F.sub(g.d, 1)}) != 0;
          };
          if (!ok(g1) || !ok(g2) || !ok(mat2_mul(F, g1, g2))) continue;
          const KernelTable k1 = weil_kernel(F, g1);
          const KernelTable k2 = weil_kernel(F, g2);
          KernelTable conv_k(p, p);
          for (Residue t = 0; t < p; ++t)
            for (Residue w = 0; w < p; ++w) {
              cplx acc{};
              for (Residue t2 = 0; t2 < p; ++t2)
                for (Residue w2 = 0; w2 < p; ++w2) {
                  const Residue tw =
                      F.mul(F.half(), symplectic_form(F, t2, w2, t, w));
                  acc += F.psi(tw) * k1(t2, w2) *
                         k2(F.sub(t, t2), F.sub(w, w2));
                }
              conv_k(t, w) = acc;
            }
          const KernelTable prod = weyl_transform(
              F, weil_operator(F, g1) * weil_operator(F, g2));
          conv.update((conv_k - prod).cwiseAbs().maxCoeff());
        }
      }
      OperatorMatrix rw = weil_operator(F, weyl_element(F));
      detw.update(std::abs(rw.determinant() - cplx{1.0, 0.0}));
      if (p != 3 && p <= 61) {
        const SpMatrix g = random_sp(F, rng);
        detg.update(
            std::abs(weil_operator(F, g).determinant() - cplx{1.0, 0.0}));
      }
      rw(0, 0) += opt.perturb_dft_relation;
      dft.update(
          (dft_matrix(F) - dft_constant(F) * rw).cwiseAbs().maxCoeff());
    }
    for (const Check& c : {intw, mult, conv, detw, detg, dft, bru})
      report.checks.push_back(c.finish());
  }

  if (wants(opt, "tori")) {
    Check group("tori: closed commutative subgroups of the right order", 0);
    Check cent("tori: centralizer matches brute scan over SL2", 0);
    Check lemma("tori: quadratic character identity for the Cayley sign", 0);
    Check conj("tori: conjugator maps the centralizer onto the diagonal torus",
               0);
    Check splitf("tori: split test agrees with construction", 0);
    for (std::uint64_t p : primes) {
      FieldContext F(p);
      const MaximalTorus tori[3] = {MaximalTorus::standard(F),
                                    MaximalTorus::weyl_centralizer(F),
                                    MaximalTorus::nonsplit(F)};
      for (const MaximalTorus& T : tori) {
        group.require(T.order() == (T.split() ? p - 1 : p + 1));
        for (const SpMatrix& g : T.elements())
          group.require(is_unimodular(F, g));
        std::uniform_int_distribution<std::size_t> U(0, T.order() - 1);
        for (int it = 0; it < 50; ++it) {
          const SpMatrix a = T.element(U(rng)), b = T.element(U(rng));
          group.require(mat2_mul(F, a, b) == mat2_mul(F, b, a));
          group.require(T.contains(mat2_mul(F, a, b)));
          group.require(T.contains(sp_inverse(F, a)));
        }
        splitf.require(is_split(F, T) == T.split());
        const SpMatrix minus_identity{F.neg(1), 0, 0, F.neg(1)};
        const int sig_m = T.quadratic_sign(minus_identity);
        for (std::size_t j = 1; j < T.order(); ++j) {
          const SpMatrix g = T.element(j);
          const Mat2 kp = [&] {
            Mat2 k = cayley(F, g);
            return Mat2{F.add(k.a, 1), k.b, k.c, F.add(k.d, 1)};
          }();
          lemma.require(F.legendre(mat2_det(F, kp)) ==
                        sig_m * T.quadratic_sign_power(j));
        }
      }
      if (p <= 13) {
        const MaximalTorus& Tw = tori[1];
        const SpMatrix w = weyl_element(F);
        std::size_t count = 0;
        for (Residue a = 0; a < p; ++a)
          for (Residue b = 0; b < p; ++b)
            for (Residue c = 0; c < p; ++c)
              for (Residue d = 0; d < p; ++d) {
                const SpMatrix g{a, b, c, d};
                if (mat2_det(F, g) != 1) continue;
                if (!(mat2_mul(F, g, w) == mat2_mul(F, w, g))) continue;
                cent.require(Tw.contains(g));
                ++count;
              }
        cent.require(count == Tw.order());
      }
      if (p % 4 == 1) {
        const MaximalTorus& Tw = tori[1];
        const MaximalTorus& A = tori[0];
        const SpMatrix s = torus_conjugator(F);
        const SpMatrix sinv = sp_inverse(F, s);
        for (const SpMatrix& g : Tw.elements()) {
          const SpMatrix c = mat2_mul(F, s, mat2_mul(F, g, sinv));
          conj.require(A.contains(c));
        }
      }
    }
    for (const Check& c : {group, cent, lemma, conj, splitf})
      report.checks.push_back(c.finish());
  }

  if (wants(opt, "spectral")) {
    Check alg("spectral: projector algebra (hermitian idempotent complete)",
              1e-10);
    Check dims("spectral: projector traces equal the closed-form dims", 0);
    Check gram("spectral: eigenbasis is orthonormal", 1e-9);
    Check eig("spectral: eigenbasis vectors carry their character", 1e-9);
    Check feig("spectral: centralizer basis diagonalizes the dft", 1e-9);
    Check stab("spectral: character spaces are dft stable", 1e-9);
    Check mcount("spectral: multiplicity tables equal numeric spectra", 0);
    for (std::uint64_t p : primes) {
      if (p > opt.dense_cap) continue;
      FieldContext F(p);
      const MaximalTorus tori[3] = {MaximalTorus::standard(F),
                                    MaximalTorus::weyl_centralizer(F),
                                    MaximalTorus::nonsplit(F)};
      for (const MaximalTorus& T : tori) {
        dims.require(character_space_dims(F, T) ==
                     character_space_dims_closed_form(F, T));
        const SpectralBasis basis = eigenbasis(F, T);
        const OperatorMatrix gen_op = weil_operator(F, T.generator());
        std::vector<const StateVector*> all;
        for (const SpectralEntry& e : basis.entries()) {
          for (const StateVector& v : e.vectors) {
            all.push_back(&v);
            eig.update((gen_op * v - T.character(e.k, 1) * v).norm());
          }
        }
        for (std::size_t i = 0; i < all.size(); ++i)
          for (std::size_t j = i; j < all.size(); ++j)
            gram.update(std::abs(all[i]->dot(*all[j]) -
                                 (i == j ? cplx{1, 0} : cplx{0, 0})));
        if (p <= 31) {
          const auto family = verify_detail::torus_operator_family(F, T);
          OperatorMatrix sum =
              OperatorMatrix::Zero(p, p);
          for (std::size_t k = 0; k < T.order(); ++k) {
            const OperatorMatrix pk = projector_from_family(T, k, family);
            sum += pk;
            alg.update((pk * pk - pk).cwiseAbs().maxCoeff());
            alg.update((pk - pk.adjoint()).cwiseAbs().maxCoeff());
            const OperatorMatrix pk2 = projector_from_family(
                T, (k + 1) % T.order(), family);
            alg.update((pk * pk2).cwiseAbs().maxCoeff());
          }
          alg.update(
              (sum - OperatorMatrix::Identity(p, p)).cwiseAbs().maxCoeff());
        }
      }
      const MaximalTorus& Tw = tori[1];
      const OperatorMatrix dft = dft_matrix(F);
      const SpectralBasis basis = eigenbasis(F, Tw);
      const std::size_t jw = Tw.dlog(weyl_element(F));
      const cplx C = dft_constant(F);
      for (const SpectralEntry& e : basis.entries())
        for (const StateVector& v : e.vectors)
          feig.update((dft * v - C * Tw.character(e.k, jw) * v).norm());
      if (p <= 31) {
        const auto family = verify_detail::torus_operator_family(F, Tw);
        for (std::size_t k = 0; k < Tw.order(); ++k) {
          const OperatorMatrix pk = projector_from_family(Tw, k, family);
          const OperatorMatrix leak =
              (OperatorMatrix::Identity(p, p) - pk) * dft * pk;
          stab.update(leak.norm());
        }
      }
      mcount.require(weyl_element_multiplicities(F) ==
                     eigenvalue_histogram(weil_operator(F, weyl_element(F))));
      mcount.require(dft_multiplicities(F) == eigenvalue_histogram(dft));
    }
    for (const Check& c : {alg, dims, gram, eig, feig, stab, mcount})
      report.checks.push_back(c.finish());
  }

  if (wants(opt, "oscillator")) {
    Check integral("oscillator: integral form equals the direct transform",
                   1e-9);
    Check conj_id("oscillator: conjugation identity between torus transforms",
                  1e-9);
    Check fastconj("oscillator: fast conjugator action matches the dense "
                   "operator",
                   1e-9);
    Check fastdot("oscillator: fast transform matches dense character sums",
                  1e-8);
    Check fastdft("oscillator: fast dft matches the dense dft", 1e-9);
    Check norm("oscillator: fast pipeline preserves norm", 1e-9);
    Check round("oscillator: analysis/synthesis round trip", 1e-10);
    for (std::uint64_t p : primes) {
      if (p > opt.dense_cap) continue;
      FieldContext F(p);
      const MaximalTorus tori[3] = {MaximalTorus::standard(F),
                                    MaximalTorus::weyl_centralizer(F),
                                    MaximalTorus::nonsplit(F)};
      for (const MaximalTorus& T : tori) {
        const SpectralBasis basis = eigenbasis(F, T);
        for (int it = 0; it < 5; ++it) {
          const StateVector f = random_state(p, rng);
          const CoefficientVector direct = dot_transform(basis, f);
          const CoefficientVector viaint = dot_integral_form(F, T, basis, f);
          integral.update(
              (direct.values - viaint.values).cwiseAbs().maxCoeff());
          const CoefficientVector full = full_analysis(basis, f);
          round.update((full_synthesis(basis, full) - f).norm());
        }
      }
      {
        const StateVector f = random_state(p, rng);
        fastdft.update(
            (fast_dft(F, f) - dft_matrix(F) * f).cwiseAbs().maxCoeff());
      }
      if (p % 4 == 1) {
        const FastOscillator fot(F, opt.dense_cap);
        const SpMatrix s = torus_conjugator(F);
        const OperatorMatrix rho_s = weil_operator(F, s);
        const MaximalTorus& Tw = tori[1];
        const MaximalTorus& A = tori[0];
        const auto family = verify_detail::torus_operator_family(F, Tw);
        const auto family_a = verify_detail::torus_operator_family(F, A);
        // label pull-back step: A-dlog of s t s^{-1}
        const SpMatrix conj_gen = mat2_mul(
            F, s, mat2_mul(F, Tw.generator(), sp_inverse(F, s)));
        const std::size_t step = A.dlog(conj_gen);
        StateVector delta1 = StateVector::Zero(p);
        delta1[1] = 1.0;
        const StateVector phi = rho_s.adjoint() * delta1;
        for (int it = 0; it < 3; ++it) {
          const StateVector f = random_state(p, rng);
          const StateVector fast = fot.apply_conjugator(f);
          fastconj.update((fast - rho_s * f).cwiseAbs().maxCoeff());
          norm.update(std::abs(fast.norm() - f.norm()));
          const CoefficientVector out = fot.transform(f);
          for (std::size_t i = 0; i < out.labels.size(); ++i) {
            const OperatorMatrix pk =
                projector_from_family(Tw, out.labels[i], family);
            const StateVector pphi = pk * phi;
            fastdot.update(std::abs(out.values[i] - cplx(pphi.dot(f))));
          }
          // conjugation identity: the centralizer-side transform of f equals
          // the diagonal-side transform of rho(s) f under the label map.
          const StateVector sf = rho_s * f;
          const StateVector sphi = rho_s * phi;
          for (std::size_t k = 0; k < A.order(); ++k) {
            const OperatorMatrix pa = projector_from_family(A, k, family_a);
            const StateVector rhs_vec = pa * sphi;
            const OperatorMatrix ptw =
                projector_from_family(Tw, k * step % Tw.order(), family);
            const StateVector lhs_vec = ptw * phi;
            conj_id.update(std::abs(cplx(lhs_vec.dot(f)) -
                                    cplx(rhs_vec.dot(sf))));
          }
        }
      }
    }
    for (const Check& c :
         {integral, conj_id, fastconj, fastdot, fastdft, norm, round})
      report.checks.push_back(c.finish());
  }

  return report;
}

}  // namespace osc
