#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "osc/field.hpp"
#include "osc/weil.hpp"

namespace osc {

class MaximalTorus;

// Character chi_k of a maximal torus, evaluated against the torus's stored
// generator enumeration: chi_k(generator^j) = e^{2 pi i k j / #T}.
struct TorusCharacter {
  const MaximalTorus* torus{nullptr};
  std::size_t index{0};

  cplx operator()(const SpMatrix& g) const;
  cplx at_power(std::size_t j) const;
};

// A maximal commutative subgroup of SL_2(F_p), cyclic of order p - 1 (split)
// or p + 1 (non-split).  Elements are enumerated as generator powers:
// elements()[j] = generator^j.  The generator is the first element of maximal
// order in the torus's natural construction order, which makes every
// downstream object (characters, eigenbasis, labels) reproducible.
class MaximalTorus {
 public:
  enum class Kind { kStandard, kWeylCentralizer, kNonsplit };

  // Diagonal torus {diag(a, a^{-1})}, generated by diag(r, r^{-1}) with r the
  // smallest primitive root.  Split, order p - 1.
  static MaximalTorus standard(const FieldContext& F) {
    const Residue r = F.primitive_root();
    const SpMatrix gen{r, 0, 0, F.inverse(r)};
    return MaximalTorus(F, Kind::kStandard, gen, F.p() - 1, true);
  }

  // Centralizer of the Weyl element: all (a, b; -b, a) with a^2 + b^2 = 1,
  // found by brute scan in lexicographic (a, b) order.  Split iff p = 1 mod 4.
  static MaximalTorus weyl_centralizer(const FieldContext& F) {
    std::vector<SpMatrix> found;
    for (Residue a = 0; a < F.p(); ++a) {
      for (Residue b = 0; b < F.p(); ++b) {
        if (F.add(F.mul(a, a), F.mul(b, b)) == 1)
          found.push_back({a, b, F.neg(b), a});
      }
    }
    const SpMatrix gen = first_of_maximal_order(F, found);
    return MaximalTorus(F, Kind::kWeylCentralizer, gen, found.size(),
                        F.p() % 4 == 1);
  }

  // Norm-one elements of F_{p^2} = F_p(sqrt(delta)) acting on V: the element
  // x + y sqrt(delta) corresponds to the matrix (x, delta y; y, x).  Scanned
  // in lexicographic (x, y) order.  Non-split, order p + 1.
  static MaximalTorus nonsplit(const FieldContext& F) {
    const Residue delta = F.nonresidue();
    std::vector<SpMatrix> found;
    for (Residue x = 0; x < F.p(); ++x) {
      for (Residue y = 0; y < F.p(); ++y) {
        if (quad_norm(F, {x, y}) == 1)
          found.push_back({x, F.mul(delta, y), y, x});
      }
    }
    const SpMatrix gen = first_of_maximal_order(F, found);
    return MaximalTorus(F, Kind::kNonsplit, gen, found.size(), false);
  }

  Kind kind() const { return kind_; }
  std::uint64_t p() const { return p_; }
  std::size_t order() const { return elements_.size(); }
  bool split() const { return split_; }
  const SpMatrix& generator() const { return elements_[1]; }
  const std::vector<SpMatrix>& elements() const { return elements_; }
  const SpMatrix& element(std::size_t j) const {
    return elements_[j % order()];
  }

  bool contains(const SpMatrix& g) const {
    return dlog_.find(key(g)) != dlog_.end();
  }

  // Index j with generator^j = g.
  std::size_t dlog(const SpMatrix& g) const {
    auto it = dlog_.find(key(g));
    if (it == dlog_.end())
      throw std::domain_error("element does not belong to the torus");
    return it->second;
  }

  // chi_k(generator^j)
  cplx character(std::size_t k, std::size_t j) const {
    const std::size_t n = order();
    const std::uint64_t e = static_cast<std::uint64_t>(k % n) * (j % n) % n;
    return std::polar(1.0, kTau * static_cast<double>(e) /
                               static_cast<double>(n));
  }

  cplx character_at(std::size_t k, const SpMatrix& g) const {
    return character(k, dlog(g));
  }

  TorusCharacter character_object(std::size_t k) const {
    return {this, k % order()};
  }

  std::vector<TorusCharacter> character_set() const {
    std::vector<TorusCharacter> out;
    out.reserve(order());
    for (std::size_t k = 0; k < order(); ++k) out.push_back({this, k});
    return out;
  }

  // The unique quadratic character sigma_T = chi_{#T/2}; #T is always even.
  std::size_t quadratic_index() const { return order() / 2; }
  TorusCharacter quadratic_character() const {
    return {this, quadratic_index()};
  }

  // sigma_T(generator^j) as an exact integer.
  int quadratic_sign_power(std::size_t j) const { return j % 2 == 0 ? 1 : -1; }
  int quadratic_sign(const SpMatrix& g) const {
    return quadratic_sign_power(dlog(g));
  }

 private:
  MaximalTorus(const FieldContext& F, Kind kind, SpMatrix gen,
               std::size_t expected_order, bool split)
      : p_(F.p()), kind_(kind), split_(split) {
    elements_.reserve(expected_order);
    SpMatrix cur = sp_identity();
    std::size_t j = 0;
    do {
      elements_.push_back(cur);
      dlog_.emplace(key(cur), j);
      cur = mat2_mul(F, cur, gen);
      ++j;
    } while (!(cur == sp_identity()));
    if (elements_.size() != expected_order)
      throw std::runtime_error("torus generator does not have full order");
  }

  static std::array<Residue, 4> key(const SpMatrix& g) {
    return {g.a, g.b, g.c, g.d};
  }

  // First element of maximal (= group) order in construction order.
  static SpMatrix first_of_maximal_order(const FieldContext& F,
                                         const std::vector<SpMatrix>& all) {
    const std::size_t n = all.size();
    for (const SpMatrix& cand : all) {
      std::size_t ord = 1;
      SpMatrix cur = cand;
      while (!(cur == sp_identity())) {
        cur = mat2_mul(F, cur, cand);
        ++ord;
        if (ord > n) throw std::runtime_error("order scan overflow");
      }
      if (ord == n) return cand;
    }
    throw std::runtime_error("torus has no generator");
  }

  std::uint64_t p_;
  Kind kind_;
  bool split_;
  std::vector<SpMatrix> elements_;
  std::map<std::array<Residue, 4>, std::size_t> dlog_;
};

inline cplx TorusCharacter::operator()(const SpMatrix& g) const {
  return torus->character_at(index, g);
}

inline cplx TorusCharacter::at_power(std::size_t j) const {
  return torus->character(index, j);
}

// Split test from the characteristic polynomial of the stored generator:
// t^2 - tr(g) t + 1 has a root in F_p iff tr^2 - 4 is a square.  A zero
// discriminant means the generator is +/-I (only possible for the order-2
// torus at p = 3); such a torus is classified by its order instead.
inline bool is_split(const FieldContext& F, const MaximalTorus& T) {
  const SpMatrix& g = T.generator();
  const Residue tr = F.add(g.a, g.d);
  const Residue disc = F.sub(F.mul(tr, tr), 4 % F.p());
  if (disc == 0) return T.order() == F.p() - 1;
  return F.legendre(disc) == 1;
}

}  // namespace osc
