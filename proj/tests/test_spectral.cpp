#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "osc/spectral.hpp"

using namespace osc;

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p <= n; p += 2)
    if (detail::is_prime(p)) out.push_back(p);
  return out;
}

// Expected dimension pattern: split tori have dim 1 everywhere except 2 at
// the quadratic character; non-split have dim 1 except 0 there.
std::vector<int> expected_dims(const MaximalTorus& T) {
  std::vector<int> dims(T.order(), 1);
  dims[T.quadratic_index()] = T.split() ? 2 : 0;
  return dims;
}

// Closed-form multiplicity rows for the Weil operator of the Weyl element,
// by p mod 8, in the order (+1, +i, -1, -i).  The +/-1 entries follow from
// the quadratic character sign at w and the trace identity
// Tr = sigma(-2) = (+1 if p = 1,3 mod 8, -1 if p = 5,7 mod 8).
MultiplicityTable expected_weyl_multiplicities(std::uint64_t p) {
  const int k = static_cast<int>(p / 8);
  MultiplicityTable t;
  switch (p % 8) {
    case 1: t.count = {2 * k + 1, 2 * k, 2 * k, 2 * k}; break;
    case 3: t.count = {2 * k + 1, 2 * k + 1, 2 * k, 2 * k + 1}; break;
    case 5: t.count = {2 * k + 1, 2 * k + 1, 2 * k + 2, 2 * k + 1}; break;
    default: t.count = {2 * k + 1, 2 * k + 2, 2 * k + 2, 2 * k + 2}; break;
  }
  return t;
}

// DFT multiplicity rows by p mod 4, order (+1, +i, -1, -i).
MultiplicityTable expected_dft_multiplicities(std::uint64_t p) {
  const int l = static_cast<int>(p / 4);
  MultiplicityTable t;
  if (p % 4 == 1)
    t.count = {l + 1, l, l, l};
  else
    t.count = {l + 1, l + 1, l + 1, l};
  return t;
}

}  // namespace

TEST_CASE("projector algebra") {
  FieldContext F(5);
  const MaximalTorus T = MaximalTorus::weyl_centralizer(F);
  OperatorMatrix sum = OperatorMatrix::Zero(5, 5);
  for (std::size_t k = 0; k < T.order(); ++k) {
    const OperatorMatrix pk = character_projector(F, T, k);
    sum += pk;
    CHECK((pk * pk - pk).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((pk - pk.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  }
  CHECK((sum - OperatorMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-10);

  FieldContext F7(7);
  const MaximalTorus T7 = MaximalTorus::weyl_centralizer(F7);
  const OperatorMatrix ps =
      character_projector(F7, T7, T7.quadratic_index());
  CHECK((ps * ps - ps).cwiseAbs().maxCoeff() < 1e-10);
  // rank 0 at the quadratic character in the non-split case
  CHECK(ps.cwiseAbs().maxCoeff() < 1e-10);

  for (std::size_t k = 0; k < T7.order(); ++k) {
    const OperatorMatrix a = character_projector(F7, T7, k);
    const OperatorMatrix b =
        character_projector(F7, T7, (k + 3) % T7.order());
    CHECK((a * b).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("projector algebra across tori up to p = 61") {
  // idempotence, hermiticity and completeness for every character;
  // cross-products on a stride sample (the full pairwise grid runs at
  // small p in the verification suite, and range-orthogonality is pinned
  // through the basis Gram matrix)
  for (std::uint64_t p : {37ull, 53ull, 61ull}) {
    FieldContext F(p);
    for (const MaximalTorus& T :
         {MaximalTorus::standard(F), MaximalTorus::weyl_centralizer(F),
          MaximalTorus::nonsplit(F)}) {
      std::vector<OperatorMatrix> ops;
      ops.push_back(OperatorMatrix::Identity(p, p));
      for (std::size_t j = 1; j < T.order(); ++j)
        ops.push_back(weil_operator(F, T.element(j)));
      std::vector<OperatorMatrix> projs;
      for (std::size_t k = 0; k < T.order(); ++k) {
        OperatorMatrix acc = OperatorMatrix::Zero(p, p);
        for (std::size_t j = 0; j < T.order(); ++j)
          acc += std::conj(T.character(k, j)) * ops[j];
        projs.push_back(acc / static_cast<double>(T.order()));
      }
      OperatorMatrix sum = OperatorMatrix::Zero(p, p);
      for (std::size_t k = 0; k < T.order(); ++k) {
        sum += projs[k];
        REQUIRE((projs[k] * projs[k] - projs[k]).cwiseAbs().maxCoeff() <
                1e-10);
        REQUIRE((projs[k] - projs[k].adjoint()).cwiseAbs().maxCoeff() <
                1e-10);
        for (std::size_t d : {std::size_t{1}, std::size_t{5},
                              T.quadratic_index()}) {
          const std::size_t k2 = (k + d) % T.order();
          if (k2 == k) continue;
          REQUIRE((projs[k] * projs[k2]).cwiseAbs().maxCoeff() < 1e-10);
        }
      }
      REQUIRE((sum - OperatorMatrix::Identity(p, p)).cwiseAbs().maxCoeff() <
              1e-10);
    }
  }
}

TEST_CASE("character space dimensions") {
  FieldContext F5(5);
  const MaximalTorus A = MaximalTorus::standard(F5);
  CHECK(character_space_dims(F5, A) == std::vector<int>{1, 1, 2, 1});

  FieldContext F7(7);
  const MaximalTorus T7 = MaximalTorus::weyl_centralizer(F7);
  const auto d7 = character_space_dims(F7, T7);
  for (std::size_t k = 0; k < d7.size(); ++k)
    CHECK(d7[k] == (k == T7.quadratic_index() ? 0 : 1));

  for (std::uint64_t p : primes_up_to(31)) {
    FieldContext F(p);
    for (const MaximalTorus& T :
         {MaximalTorus::standard(F), MaximalTorus::weyl_centralizer(F),
          MaximalTorus::nonsplit(F)}) {
      const auto dims = character_space_dims(F, T);
      REQUIRE(dims == character_space_dims_closed_form(F, T));
      REQUIRE(dims == expected_dims(T));
      int total = 0;
      for (int d : dims) total += d;
      REQUIRE(total == static_cast<int>(p));
    }
  }
}

TEST_CASE("eigenbasis structure and properties") {
  FieldContext F(5);
  const MaximalTorus T = MaximalTorus::weyl_centralizer(F);
  const SpectralBasis basis = eigenbasis(F, T);
  CHECK(basis.entries().size() == 4);  // all characters in the split support
  std::size_t total = 0;
  for (const SpectralEntry& e : basis.entries()) {
    total += e.vectors.size();
    const std::size_t want = e.k == T.quadratic_index() ? 2 : 1;
    CHECK(e.vectors.size() == want);
  }
  CHECK(total == 5);

  std::mt19937_64 rng(50);
  for (std::uint64_t p : primes_up_to(31)) {
    FieldContext Fp(p);
    for (const MaximalTorus& Tp :
         {MaximalTorus::standard(Fp), MaximalTorus::weyl_centralizer(Fp),
          MaximalTorus::nonsplit(Fp)}) {
      const SpectralBasis b = eigenbasis(Fp, Tp);
      const OperatorMatrix gen_op = weil_operator(Fp, Tp.generator());
      std::vector<const StateVector*> all;
      for (const SpectralEntry& e : b.entries())
        for (const StateVector& v : e.vectors) {
          all.push_back(&v);
          REQUIRE((gen_op * v - Tp.character(e.k, 1) * v).norm() < 1e-9);
        }
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          const cplx want = i == j ? cplx{1, 0} : cplx{0, 0};
          REQUIRE(std::abs(all[i]->dot(*all[j]) - want) < 1e-9);
        }
      // full torus action: every element acts on each vector by its
      // character value
      std::uniform_int_distribution<std::size_t> U(0, Tp.order() - 1);
      const std::size_t j = U(rng);
      const OperatorMatrix rj = weil_operator(Fp, Tp.element(j));
      for (const SpectralEntry& e : b.entries())
        for (const StateVector& v : e.vectors)
          REQUIRE((rj * v - Tp.character(e.k, j) * v).norm() < 1e-9);
    }
  }
}

TEST_CASE("eigenbasis vectors have the canonical phase") {
  for (std::uint64_t p : {5ull, 13ull, 17ull}) {
    FieldContext F(p);
    const SpectralBasis b = eigenbasis(F, MaximalTorus::weyl_centralizer(F));
    for (const SpectralEntry& e : b.entries())
      for (const StateVector& v : e.vectors) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
          if (std::abs(v[i]) > 1e-8) {
            REQUIRE(v[i].real() > 0);
            REQUIRE(std::abs(v[i].imag()) < 1e-9 * std::abs(v[i].real()));
            break;
          }
        }
      }
  }
}

TEST_CASE("centralizer eigenbasis diagonalizes the dft") {
  for (std::uint64_t p : primes_up_to(61)) {
    FieldContext F(p);
    const MaximalTorus T = MaximalTorus::weyl_centralizer(F);
    const SpectralBasis b = eigenbasis(F, T);
    const OperatorMatrix dft = dft_matrix(F);
    const cplx C = dft_constant(F);
    const std::size_t jw = T.dlog(weyl_element(F));
    for (const SpectralEntry& e : b.entries()) {
      const cplx lambda = C * T.character(e.k, jw);
      for (const StateVector& v : e.vectors)
        REQUIRE((dft * v - lambda * v).norm() < 1e-9);
    }
  }
}

TEST_CASE("character spaces are dft stable") {
  for (std::uint64_t p : {5ull, 7ull, 13ull, 17ull}) {
    FieldContext F(p);
    const MaximalTorus T = MaximalTorus::weyl_centralizer(F);
    const OperatorMatrix dft = dft_matrix(F);
    for (std::size_t k = 0; k < T.order(); ++k) {
      const OperatorMatrix pk = character_projector(F, T, k);
      const OperatorMatrix leak =
          (OperatorMatrix::Identity(p, p) - pk) * dft * pk;
      REQUIRE(leak.norm() < 1e-9);
    }
  }
}

TEST_CASE("multiplicity tables") {
  // frozen rows, cross-checked against numeric spectra below
  {
    FieldContext F(13);
    const MultiplicityTable m = weyl_element_multiplicities(F);
    CHECK(m.plus_one() == 3);
    CHECK(m.minus_one() == 4);
    CHECK(m.plus_i() == 3);
    CHECK(m.minus_i() == 3);
  }
  {
    FieldContext F(17);
    const MultiplicityTable m = weyl_element_multiplicities(F);
    CHECK(m.plus_one() == 5);
    CHECK(m.minus_one() == 4);
    CHECK(m.plus_i() == 4);
    CHECK(m.minus_i() == 4);
  }
  {
    // pinned by the numeric spectrum and by the trace identity
    // Tr = sigma(-2), which is -1 at p = 7
    FieldContext F(7);
    const MultiplicityTable m = weyl_element_multiplicities(F);
    CHECK(m.plus_one() == 1);
    CHECK(m.minus_one() == 2);
    CHECK(m.plus_i() == 2);
    CHECK(m.minus_i() == 2);
    REQUIRE(m == eigenvalue_histogram(
                     weil_operator(F, weyl_element(F))));
  }
  {
    FieldContext F(5);
    const MultiplicityTable n = dft_multiplicities(F);
    CHECK(n.plus_one() == 2);
    CHECK(n.minus_one() == 1);
    CHECK(n.plus_i() == 1);
    CHECK(n.minus_i() == 1);
  }
  {
    FieldContext F(7);
    const MultiplicityTable n = dft_multiplicities(F);
    CHECK(n.plus_one() == 2);
    CHECK(n.minus_one() == 2);
    CHECK(n.plus_i() == 2);
    CHECK(n.minus_i() == 1);
  }
  {
    FieldContext F(3);
    const MultiplicityTable n = dft_multiplicities(F);
    CHECK(n.plus_one() == 1);
    CHECK(n.minus_one() == 1);
    CHECK(n.plus_i() == 1);
    CHECK(n.minus_i() == 0);
  }
}

TEST_CASE("multiplicities match closed forms and numeric spectra") {
  for (std::uint64_t p : primes_up_to(61)) {
    FieldContext F(p);
    const MultiplicityTable m = weyl_element_multiplicities(F);
    const MultiplicityTable n = dft_multiplicities(F);
    REQUIRE(m == expected_weyl_multiplicities(p));
    REQUIRE(n == expected_dft_multiplicities(p));
    REQUIRE(m.total() == static_cast<int>(p));
    REQUIRE(n.total() == static_cast<int>(p));
    REQUIRE(m == eigenvalue_histogram(weil_operator(F, weyl_element(F))));
    REQUIRE(n == eigenvalue_histogram(dft_matrix(F)));
  }
}

TEST_CASE("eigenvalue snapping rejects operators that are not of order 4") {
  OperatorMatrix bad = OperatorMatrix::Identity(4, 4);
  bad(0, 0) = cplx{0.6, 0.0};
  CHECK_THROWS_AS(eigenvalue_histogram(bad), std::runtime_error);
}
