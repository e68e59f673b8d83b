#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace osc {

using cplx = std::complex<double>;

inline constexpr double kTau = 6.283185307179586476925286766559;  // 2*pi

// Canonical residue mod p, always kept in [0, p).
using Residue = std::uint64_t;

namespace detail {

// Requires m < 2^31 so a*b fits into 64 bits.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a * b % m;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin, valid for n < 3'215'031'751 (bases 2,3,5,7).
inline bool is_prime(std::uint64_t n) {
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (n % q == 0) return n == q;
  }
  if (n < 2) return false;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

// Arithmetic context of the prime field F_p.  All residues handled through a
// context are canonical, i.e. in [0, p).  Everything is computed eagerly at
// construction so a context is immutable afterwards and safe to share.
class FieldContext {
 public:
  explicit FieldContext(std::uint64_t p) : p_(p) {
    if (p_ >= (1ull << 31))
      throw std::domain_error("modulus too large: p must be < 2^31");
    if (p_ < 3 || p_ % 2 == 0 || !detail::is_prime(p_))
      throw std::domain_error("p must be an odd prime");
    half_ = inverse(2);
    for (Residue d = 2; d < p_; ++d) {
      if (legendre(d) == -1) {
        nonresidue_ = d;
        break;
      }
    }
    root_ = find_primitive_root();
    if (p_ % 4 == 1) {
      // The two square roots of -1 are +/- r^((p-1)/4); keep the smaller.
      Residue e = pow(root_, (p_ - 1) / 4);
      eps_ = std::min(e, p_ - e);
    }
  }

  std::uint64_t p() const { return p_; }

  // Maps an arbitrary signed integer to its canonical residue.
  Residue reduce(std::int64_t x) const {
    std::int64_t m = x % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<Residue>(m);
  }

  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const { return (a + p_ - b % p_) % p_; }
  Residue neg(Residue a) const { return (p_ - a % p_) % p_; }
  Residue mul(Residue a, Residue b) const { return a % p_ * (b % p_) % p_; }
  Residue pow(Residue a, std::uint64_t e) const {
    return detail::powmod(a, e, p_);
  }

  Residue inverse(Residue a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("no inverse of zero");
    return pow(a, p_ - 2);
  }

  // Quadratic (Legendre) character: 0 on zero, +1 on nonzero squares,
  // -1 on non-squares.
  int legendre(Residue a) const {
    a %= p_;
    if (a == 0) return 0;
    Residue e = pow(a, (p_ - 1) / 2);
    return e == 1 ? 1 : -1;
  }

  // The additive character e^{2 pi i z / p}.
  cplx psi(Residue z) const {
    return std::polar(1.0, kTau * static_cast<double>(z % p_) /
                               static_cast<double>(p_));
  }

  Residue half() const { return half_; }  // inverse of 2

  // Smallest non-residue delta >= 2 (used to model F_{p^2} = F_p(sqrt(delta))).
  Residue nonresidue() const { return nonresidue_; }

  // Smallest primitive root of F_p^x.
  Residue primitive_root() const { return root_; }

  bool has_sqrt_neg_one() const { return p_ % 4 == 1; }

  // Smallest eps in [1, p) with eps^2 = -1.  Exists iff p = 1 mod 4.
  Residue sqrt_neg_one() const {
    if (!has_sqrt_neg_one()) throw std::domain_error("-1 is a non-residue");
    return eps_;
  }

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.p_ == b.p_;
  }

 private:
  Residue find_primitive_root() const {
    const auto factors = detail::prime_factors(p_ - 1);
    for (Residue r = 2; r < p_; ++r) {
      bool generates = true;
      for (std::uint64_t q : factors) {
        if (pow(r, (p_ - 1) / q) == 1) {
          generates = false;
          break;
        }
      }
      if (generates) return r;
    }
    return p_ - 1;  // unreachable for prime p >= 3
  }

  std::uint64_t p_;
  Residue half_{0};
  Residue nonresidue_{0};
  Residue root_{0};
  Residue eps_{0};
};

// Element x + y*sqrt(delta) of the quadratic extension F_{p^2}, with delta
// the context's fixed non-residue.
struct QuadExt {
  Residue x{0};
  Residue y{0};

  friend bool operator==(const QuadExt&, const QuadExt&) = default;
};

inline QuadExt quad_mul(const FieldContext& F, QuadExt u, QuadExt v) {
  const Residue delta = F.nonresidue();
  return {F.add(F.mul(u.x, v.x), F.mul(delta, F.mul(u.y, v.y))),
          F.add(F.mul(u.x, v.y), F.mul(u.y, v.x))};
}

// Norm map x^2 - delta*y^2 of F_{p^2}/F_p; multiplicative.
inline Residue quad_norm(const FieldContext& F, QuadExt u) {
  return F.sub(F.mul(u.x, u.x), F.mul(F.nonresidue(), F.mul(u.y, u.y)));
}

// Baby-step giant-step discrete log: smallest x >= 0 with base^x = a.
// base must generate a subgroup containing a.
inline std::uint64_t discrete_log(const FieldContext& F, Residue base,
                                  Residue a) {
  a %= F.p();
  if (a == 0) throw std::domain_error("discrete log of zero");
  std::uint64_t n = 1;
  while (n * n < F.p()) ++n;
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(n);
  Residue cur = 1;
  for (std::uint64_t j = 0; j < n; ++j) {
    baby.emplace(cur, j);
    cur = F.mul(cur, base);
  }
  const Residue giant = F.inverse(F.pow(base, n));
  cur = a;
  for (std::uint64_t i = 0; i * n < F.p(); ++i) {
    auto it = baby.find(cur);
    if (it != baby.end()) return i * n + it->second;
    cur = F.mul(cur, giant);
  }
  throw std::domain_error("element not in the subgroup generated by base");
}

// Table of the p-th roots of unity: entry r is e^{2 pi i r / p}.  Heavy loops
// use this instead of per-entry std::polar calls.
inline std::vector<cplx> unit_roots(const FieldContext& F) {
  std::vector<cplx> roots(F.p());
  for (std::uint64_t r = 0; r < F.p(); ++r) {
    roots[r] = std::polar(1.0, kTau * static_cast<double>(r) /
                                   static_cast<double>(F.p()));
  }
  return roots;
}

}  // namespace osc
