#ifndef MCS_TESTS_PROPERTIES_HPP
#define MCS_TESTS_PROPERTIES_HPP

// Randomised algebraic property suites shared by the unit tests and the
// acceptance runner. Every suite is deterministic for a given seed.

#include <random>
#include <string>

#include "mcs/error.hpp"
#include "mcs/series.hpp"
#include "oracles.hpp"

namespace props {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0)
      first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

inline mcs::KRing property_ring() { return mcs::KRingSpec::standard({"a"}); }

inline mcs::KElement random_kelement(std::mt19937_64& rng, const mcs::KRing& ring) {
  std::uniform_int_distribution<int> nterms(0, 4), coeff(-5, 5), el(0, 3), ee(0, 3), ea(0, 2);
  mcs::KElement::Terms terms;
  const auto iL = *ring->index_of("L"), iE = *ring->index_of("eps"), iA = *ring->index_of("a");
  for (int k = nterms(rng); k > 0; --k) {
    mcs::KElement::Exponents e(ring->size(), 0);
    e[iL] = static_cast<std::uint32_t>(el(rng));
    e[iE] = static_cast<std::uint32_t>(ee(rng));
    e[iA] = static_cast<std::uint32_t>(ea(rng));
    terms[e] += coeff(rng);
  }
  return mcs::KElement(ring, std::move(terms));
}

/// Associativity, commutativity, distributivity, units and inverses.
inline Outcome ring_axioms(std::size_t cases, std::uint64_t seed = 1) {
  Outcome out;
  std::mt19937_64 rng(seed);
  auto ring = property_ring();
  const mcs::KElement zero(ring, 0), one(ring, 1);
  for (std::size_t i = 0; i < cases; ++i, ++out.cases) {
    auto a = random_kelement(rng, ring), b = random_kelement(rng, ring), c = random_kelement(rng, ring);
    auto tag = " for a=" + a.to_string() + ", b=" + b.to_string() + ", c=" + c.to_string();
    if (!((a + b) + c == a + (b + c)))
      out.fail("additive associativity" + tag);
    else if (!(a + b == b + a))
      out.fail("additive commutativity" + tag);
    else if (!((a * b) * c == a * (b * c)))
      out.fail("multiplicative associativity" + tag);
    else if (!(a * b == b * a))
      out.fail("multiplicative commutativity" + tag);
    else if (!(a * (b + c) == a * b + a * c))
      out.fail("distributivity" + tag);
    else if (!(a + zero == a && a * one == a && (a - a).is_zero()))
      out.fail("units" + tag);
  }
  return out;
}

inline mcs::MonoidPtr plane_monoid() { return mcs::free_commutative_monoid({"x", "y"}); }

inline mcs::MonoidElement random_class(std::mt19937_64& rng, const mcs::GradedMonoid& m, bool nonzero) {
  std::uniform_int_distribution<std::int64_t> e(0, 2);
  for (;;) {
    std::vector<std::int64_t> w{e(rng), e(rng)};
    auto s = m.canonicalize(w);
    if (!nonzero || !s.is_zero())
      return s;
  }
}

inline mcs::KElement random_small_coeff(std::mt19937_64& rng, const mcs::KRing& ring) {
  std::uniform_int_distribution<int> pick(0, 4);
  switch (pick(rng)) {
  case 0:
    return mcs::KElement::generator(ring, "L");
  case 1:
    return mcs::KElement(ring, -1);
  case 2:
    return mcs::KElement(ring, 2);
  default:
    return mcs::KElement(ring, 1);
  }
}

inline mcs::RationalSeries random_rational(std::mt19937_64& rng, const mcs::MonoidPtr& m, const mcs::KRing& ring) {
  std::uniform_int_distribution<int> nterms(0, 3), nfac(0, 3), pw(1, 2);
  auto num = mcs::MonoidPolynomial::one(m, ring);
  for (int k = nterms(rng); k > 0; --k)
    num = num + mcs::MonoidPolynomial::monomial(m, ring, random_class(rng, *m, true), random_kelement(rng, ring));
  std::vector<mcs::DenominatorFactor> den;
  for (int k = nfac(rng); k > 0; --k)
    den.push_back({random_small_coeff(rng, ring), random_class(rng, *m, true), static_cast<unsigned>(pw(rng))});
  return mcs::RationalSeries(num, den);
}

/// rational_expand(R1*R2, N) == truncated_mul(rational_expand(R1, N), rational_expand(R2, N)).
inline Outcome expand_mul_homomorphism(std::size_t cases, std::uint64_t seed = 2, std::int64_t n = 5) {
  Outcome out;
  std::mt19937_64 rng(seed);
  auto ring = property_ring();
  auto m = plane_monoid();
  for (std::size_t i = 0; i < cases; ++i, ++out.cases) {
    auto r1 = random_rational(rng, m, ring), r2 = random_rational(rng, m, ring);
    auto lhs = mcs::rational_expand(r1 * r2, n);
    auto rhs = mcs::truncated_mul(mcs::rational_expand(r1, n), mcs::rational_expand(r2, n));
    if (!(lhs == rhs))
      out.fail("expand/mul mismatch at case " + std::to_string(i));
  }
  return out;
}

inline bool is_unimodular(const mcs::IntMatrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m(i, j);
  auto d = oracle::cofactor_det(a);
  return d == 1 || d == -1;
}

/// U*A*V = D, U and V unimodular, D diagonal with a divisibility chain, and
/// invariants equal to the determinantal-divisor oracle.
inline Outcome snf_contract(std::size_t cases, std::uint64_t seed = 3, std::size_t rows = 4, std::size_t cols = 4) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  for (std::size_t i = 0; i < cases; ++i, ++out.cases) {
    std::vector<oracle::Row> a(rows, oracle::Row(cols));
    for (auto& r : a)
      for (auto& x : r)
        x = entry(rng);
    auto m = mcs::IntMatrix::from_rows(a, cols);
    auto s = mcs::smith_normal_form(m);
    bool ok = s.U * m * s.V == s.D && is_unimodular(s.U) && is_unimodular(s.V);
    for (std::size_t r = 0; r < rows && ok; ++r)
      for (std::size_t c = 0; c < cols && ok; ++c) {
        const auto& d = s.D(r, c);
        if (r != c)
          ok = d == 0;
        else if (r < s.rank())
          ok = d == s.invariants[r] && d > 0 && (r == 0 || d % s.invariants[r - 1] == 0);
        else
          ok = d == 0;
      }
    if (ok)
      ok = s.invariants == oracle::determinantal_invariants(a);
    if (!ok)
      out.fail("SNF contract broken at case " + std::to_string(i));
  }
  return out;
}

/// phi_*(f*g) == phi_*(f) * phi_*(g) and phi_*(f+g) == phi_*(f) + phi_*(g)
/// for random effective homomorphisms Z_{>=0}^2 -> Z_{>=0}^2.
inline Outcome pushforward_homomorphism(std::size_t cases, std::uint64_t seed = 4, std::int64_t n = 4) {
  Outcome out;
  std::mt19937_64 rng(seed);
  auto ring = property_ring();
  auto src = plane_monoid();
  auto dst = mcs::free_commutative_monoid({"u", "v"});
  std::uniform_int_distribution<std::int64_t> img(0, 2);
  std::uniform_int_distribution<int> nterms(0, 6);
  auto random_series = [&](const mcs::MonoidPtr& m) {
    mcs::SeriesTerms terms;
    for (int k = nterms(rng); k > 0; --k) {
      auto s = random_class(rng, *m, false);
      if (m->degree(s) > n)
        continue;
      auto c = random_kelement(rng, ring);
      if (auto [it, fresh] = terms.emplace(s, c); !fresh)
        it->second += c;
    }
    std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
    return mcs::TruncatedSeries(m, ring, n, terms);
  };
  for (std::size_t i = 0; i < cases; ++i, ++out.cases) {
    std::vector<mcs::MonoidElement> images;
    for (int g = 0; g < 2; ++g) {
      std::vector<std::int64_t> w{img(rng), img(rng)};
      if (w[0] == 0 && w[1] == 0)
        w[0] = 1;
      images.push_back(dst->canonicalize(w));
    }
    mcs::MonoidHom phi(src, dst, images);
    auto f = random_series(src), g = random_series(src);
    auto lhs = mcs::pushforward(mcs::truncated_mul(f, g), phi);
    auto rhs = mcs::truncated_mul(mcs::pushforward(f, phi), mcs::pushforward(g, phi));
    if (!(lhs == rhs))
      out.fail("pushforward not multiplicative at case " + std::to_string(i));
    else if (!(mcs::pushforward(f + g, phi) == mcs::pushforward(f, phi) + mcs::pushforward(g, phi)))
      out.fail("pushforward not additive at case " + std::to_string(i));
  }
  return out;
}

} // namespace props

#endif
