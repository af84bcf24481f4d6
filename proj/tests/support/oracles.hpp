#ifndef MCS_TESTS_ORACLES_HPP
#define MCS_TESTS_ORACLES_HPP

// Reference computations that share no code with the engine: cofactor
// determinants, determinantal divisors, Fourier-Motzkin elimination, brute
// force word enumeration and dense univariate series.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "mcs/monoid.hpp"

namespace oracle {

using Row = std::vector<std::int64_t>;

inline mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& a) {
  const std::size_t n = a.size();
  if (n == 0)
    return 1;
  if (n == 1)
    return a[0][0];
  mpz_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c)
          row.push_back(a[r][k]);
      minor.push_back(row);
    }
    mpz_class term = a[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

/// Smith invariants from determinantal divisors: d_k = D_k / D_{k-1} where
/// D_k is the gcd of all k x k minors.
inline std::vector<mpz_class> determinantal_invariants(const std::vector<Row>& a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    mpz_class g = 0;
    subsets(m, k, [&](const std::vector<std::size_t>& rows) {
      subsets(n, k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            sub[i][j] = static_cast<long>(a[rows[i]][cols[j]]);
        g = gcd(g, cofactor_det(sub));
      });
    });
    if (g == 0)
      break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Is there w with <w, v_i> >= 1 for every i? Decided by Fourier-Motzkin
/// elimination over Q.
inline bool fm_strictly_positive_functional_exists(const std::vector<std::vector<mpq_class>>& vs, std::size_t dim) {
  struct Ineq {
    std::vector<mpq_class> a;  // a . w >= b
    mpq_class b;
  };
  std::vector<Ineq> sys;
  for (const auto& v : vs)
    sys.push_back({v, 1});
  for (std::size_t x = 0; x < dim; ++x) {
    std::vector<Ineq> pos, neg, next;
    for (auto& q : sys) {
      if (q.a[x] > 0)
        pos.push_back(q);
      else if (q.a[x] < 0)
        neg.push_back(q);
      else
        next.push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // (-n.a[x]) * p + p.a[x] * n eliminates x
        mpq_class cp = -n.a[x], cn = p.a[x];
        Ineq r{std::vector<mpq_class>(dim), cp * p.b + cn * n.b};
        for (std::size_t k = 0; k < dim; ++k)
          r.a[k] = cp * p.a[k] + cn * n.a[k];
        next.push_back(r);
      }
    sys = std::move(next);
  }
  return std::all_of(sys.begin(), sys.end(), [](const Ineq& q) { return q.b <= 0; });
}

/// Every exponent vector with weighted degree <= bound.
inline void for_each_word(const std::vector<std::int64_t>& weights, std::int64_t bound,
                          const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> w(weights.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == weights.size()) {
      f(w);
      return;
    }
    for (std::int64_t e = 0; e * weights[i] <= left; ++e) {
      w[i] = e;
      rec(i + 1, left - e * weights[i]);
    }
    w[i] = 0;
  };
  rec(0, bound);
}

inline std::vector<std::int64_t> generator_degrees(const mcs::GradedMonoid& m) {
  std::vector<std::int64_t> d;
  for (const auto& g : m.generators())
    d.push_back(m.degree(g));
  return d;
}

/// Distinct classes of words of degree <= bound.
inline std::set<mcs::MonoidElement> brute_force_elements(const mcs::GradedMonoid& m, std::int64_t bound) {
  std::set<mcs::MonoidElement> out;
  for_each_word(generator_degrees(m), bound, [&](const std::vector<std::int64_t>& w) {
    out.insert(m.group().element_of(w));
  });
  return out;
}

/// Number of words over the generators whose class is `target`; this is the
/// coefficient of t^target in prod_g 1/(1 - t^g).
inline std::int64_t factorization_count(const mcs::GradedMonoid& m, const mcs::MonoidElement& target) {
  std::int64_t count = 0;
  for_each_word(generator_degrees(m), m.degree(target), [&](const std::vector<std::int64_t>& w) {
    if (m.group().element_of(w) == target)
      ++count;
  });
  return count;
}

/// Dense univariate series over Z, truncated at degree n.
using Dense = std::vector<mpz_class>;

inline Dense dense_mul(const Dense& a, const Dense& b, std::size_t n) {
  Dense c(n + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

/// 1/(1-t)^k up to degree n by repeated convolution with 1 + t + t^2 + ...
inline Dense dense_geometric_power(unsigned k, std::size_t n) {
  Dense out(n + 1, 0);
  out[0] = 1;
  Dense geo(n + 1, 1);
  for (unsigned i = 0; i < k; ++i)
    out = dense_mul(out, geo, n);
  return out;
}

/// (1-t)^k expanded.
inline Dense dense_one_minus_t_power(unsigned k) {
  Dense out{1};
  for (unsigned i = 0; i < k; ++i)
    out = dense_mul(out, Dense{1, -1}, out.size());
  while (out.size() > 1 && out.back() == 0)
    out.pop_back();
  return out;
}

} // namespace oracle

#endif
