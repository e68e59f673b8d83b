#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace osc {

using cplx = std::complex<double>;

namespace detail {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// In-place iterative radix-2 FFT of power-of-two length.
// sign = +1 computes sum_j a_j e^{+2 pi i jk/m}, sign = -1 the conjugate.
// Twiddles are generated incrementally and resynchronized from std::polar
// every 64 steps to keep the phase error at machine-epsilon scale.
inline void fft_pow2(std::vector<cplx>& a, int sign) {
  const std::size_t m = a.size();
  if (m <= 1) return;
  if ((m & (m - 1)) != 0)
    throw std::invalid_argument("fft_pow2: length must be a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < m; ++i) {
    std::size_t bit = m >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= m; len <<= 1) {
    const double ang = sign * 2.0 * kPi / static_cast<double>(len);
    const cplx wstep = std::polar(1.0, ang);
    for (std::size_t i = 0; i < m; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        if ((k & 63u) == 0)
          w = std::polar(1.0, ang * static_cast<double>(k));
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wstep;
      }
    }
  }
}

}  // namespace detail

// Discrete Fourier sum of arbitrary length n via the Bluestein chirp-z
// reduction to a power-of-two FFT of length m >= 2n-1:
//
//   out[k] = sum_j in[j] e^{sign * 2 pi i jk / n}.
//
// The quadratic chirp and the transformed convolution kernel are precomputed,
// so a plan can be reused across many executions of the same length.
class CztPlan {
 public:
  CztPlan(std::size_t n, int sign) : n_(n), sign_(sign) {
    if (n_ == 0) throw std::invalid_argument("CztPlan: empty length");
    m_ = detail::next_pow2(2 * n_ - 1);
    chirp_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      // j^2 mod 2n keeps the argument of e^{i pi j^2 / n} small and exact.
      const std::uint64_t j2 = static_cast<std::uint64_t>(j) * j % (2 * n_);
      chirp_[j] = std::polar(
          1.0, sign_ * detail::kPi * static_cast<double>(j2) /
                   static_cast<double>(n_));
    }
    kernel_fft_.assign(m_, cplx{});
    kernel_fft_[0] = std::conj(chirp_[0]);
    for (std::size_t j = 1; j < n_; ++j) {
      kernel_fft_[j] = std::conj(chirp_[j]);
      kernel_fft_[m_ - j] = std::conj(chirp_[j]);
    }
    detail::fft_pow2(kernel_fft_, +1);
  }

  std::size_t size() const { return n_; }
  int sign() const { return sign_; }

  void execute(const cplx* in, cplx* out) const {
    std::vector<cplx> work(m_, cplx{});
    for (std::size_t j = 0; j < n_; ++j) work[j] = in[j] * chirp_[j];
    detail::fft_pow2(work, +1);
    for (std::size_t j = 0; j < m_; ++j) work[j] *= kernel_fft_[j];
    detail::fft_pow2(work, -1);
    const double scale = 1.0 / static_cast<double>(m_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = work[k] * chirp_[k] * scale;
  }

  std::vector<cplx> execute(const std::vector<cplx>& in) const {
    if (in.size() != n_) throw std::invalid_argument("CztPlan: length mismatch");
    std::vector<cplx> out(n_);
    execute(in.data(), out.data());
    return out;
  }

 private:
  std::size_t n_;
  std::size_t m_;
  int sign_;
  std::vector<cplx> chirp_;
  std::vector<cplx> kernel_fft_;
};

}  // namespace osc
