#include "mcs/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mcs/error.hpp"

namespace mcs {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw PresentationError("row " + std::to_string(r) + " has length " +
                              std::to_string(rows[r].size()) + ", expected " +
                              std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        r(i, j) += x * b(k, j);
    }
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) = -(*this)(r, c);
}

namespace {

// Smallest |entry| in the submatrix starting at (t, t); ties go to the lowest
// row, then the lowest column.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const mpz_class& x = d(i, j);
      if (x == 0)
        continue;
      mpz_class ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pr = i;
        pc = j;
      }
    }
  return found;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), {}};
  IntMatrix& D = s.D;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(D, t, pr, pc))
      break;
    D.swap_rows(t, pr);
    s.U.swap_rows(t, pr);
    D.swap_cols(t, pc);
    s.V.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0)
          continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (D(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0)
          continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (D(t, j) != 0)
          clean = false;
      }
      if (!clean) {
        find_pivot(D, t, pr, pc);
        D.swap_rows(t, pr);
        s.U.swap_rows(t, pr);
        D.swap_cols(t, pc);
        s.V.swap_cols(t, pc);
        continue;
      }
      // Row and column t are clear; the pivot must divide the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) != 0 && !mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            D.add_row(t, i, 1);
            s.U.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
    s.invariants.push_back(D(t, t));
  }
  return s;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0)
        ++r;
      if (r == n)
        return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n)
    throw std::invalid_argument("inverse of non-square matrix");
  std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = a(i, j);
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw std::invalid_argument("matrix is singular");
    std::swap(aug[piv], aug[col]);
    mpq_class inv = 1 / aug[col][col];
    for (auto& x : aug[col])
      x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0)
        continue;
      mpq_class f = aug[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j)
        aug[r][j] -= f * aug[col][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& x = aug[i][n + j];
      if (x.get_den() != 1)
        throw std::invalid_argument("matrix is not unimodular");
      inv(i, j) = x.get_num();
    }
  return inv;
}

std::vector<std::vector<mpz_class>> integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t j = s.rank(); j < a.cols(); ++j) {
    std::vector<mpz_class> v(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
      v[i] = s.V(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rational_rank(const IntMatrix& a) {
  std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m[i][j] = a(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < a.rows() && m[piv][col] == 0)
      ++piv;
    if (piv == a.rows())
      continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (m[r][col] == 0)
        continue;
      mpq_class f = m[r][col] / m[rank][col];
      for (std::size_t j = col; j < a.cols(); ++j)
        m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<mpq_class>> solve_left(const IntMatrix& b, const std::vector<mpz_class>& v) {
  const std::size_t n = b.rows();
  if (b.cols() != n || v.size() != n)
    throw std::invalid_argument("solve_left dimension mismatch");
  // Solve B^T x = v.
  std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = b(j, i);
    aug[i][n] = v[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0)
      ++piv;
    if (piv == n)
      return std::nullopt;
    std::swap(aug[piv], aug[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0)
        continue;
      mpq_class f = aug[r][col] / aug[col][col];
      for (std::size_t j = col; j <= n; ++j)
        aug[r][j] -= f * aug[col][j];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = aug[i][n] / aug[i][i];
  return x;
}

// ---------------------------------------------------------------------------
// Exact simplex.

namespace {

/// Dense tableau for min c.x subject to A x = b, x >= 0, b >= 0.
class Tableau {
public:
  Tableau(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b)
      : a_(std::move(a)), b_(std::move(b)), basis_(a_.size(), 0) {}

  std::vector<std::vector<mpq_class>>& rows() { return a_; }
  std::vector<mpq_class>& rhs() { return b_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    mpq_class inv = 1 / a_[row][col];
    for (auto& x : a_[row])
      x *= inv;
    b_[row] *= inv;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (r == row || a_[r][col] == 0)
        continue;
      mpq_class f = a_[r][col];
      for (std::size_t j = 0; j < a_[r].size(); ++j)
        if (a_[row][j] != 0)
          a_[r][j] -= f * a_[row][j];
      b_[r] -= f * b_[row];
    }
    basis_[row] = col;
  }

  /// Runs Bland's rule on cost vector c over the first `active` columns.
  /// Returns false when unbounded.
  bool optimise(const std::vector<mpq_class>& c, std::size_t active) {
    for (;;) {
      // reduced cost_j = c_j - c_B . column_j
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < active; ++j) {
        if (std::find(basis_.begin(), basis_.end(), j) != basis_.end())
          continue;
        mpq_class rc = c[j];
        for (std::size_t r = 0; r < a_.size(); ++r)
          if (a_[r][j] != 0)
            rc -= c[basis_[r]] * a_[r][j];
        if (rc < 0) {
          entering = j;
          break;
        }
      }
      if (!entering)
        return true;
      std::optional<std::size_t> leave;
      mpq_class best;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        if (a_[r][*entering] <= 0)
          continue;
        mpq_class ratio = b_[r] / a_[r][*entering];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave)
        return false;
      pivot(*leave, *entering);
    }
  }

private:
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> b_;
  std::vector<std::size_t> basis_;
};

} // namespace

std::optional<std::vector<mpq_class>> minimal_positive_functional(
    const std::vector<std::vector<mpq_class>>& vectors, std::size_t dim) {
  const std::size_t k = vectors.size();
  if (k == 0)
    return std::vector<mpq_class>(dim, 0);
  for (const auto& v : vectors)
    if (v.size() != dim)
      throw std::invalid_argument("vector length mismatch in positive functional search");

  // Columns: w+ (dim), w- (dim), slack (k), artificial (k).
  const std::size_t n_struct = 2 * dim + k;
  const std::size_t n_total = n_struct + k;
  std::vector<std::vector<mpq_class>> a(k, std::vector<mpq_class>(n_total, 0));
  std::vector<mpq_class> b(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      a[i][j] = vectors[i][j];
      a[i][dim + j] = -vectors[i][j];
    }
    a[i][2 * dim + i] = -1;
    a[i][n_struct + i] = 1;
  }
  Tableau tab(std::move(a), std::move(b));
  for (std::size_t i = 0; i < k; ++i)
    tab.basis()[i] = n_struct + i;

  std::vector<mpq_class> phase1(n_total, 0);
  for (std::size_t i = 0; i < k; ++i)
    phase1[n_struct + i] = 1;
  tab.optimise(phase1, n_total);
  mpq_class infeasibility = 0;
  for (std::size_t r = 0; r < k; ++r)
    if (tab.basis()[r] >= n_struct)
      infeasibility += tab.rhs()[r];
  if (infeasibility > 0)
    return std::nullopt;

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < tab.rows().size();) {
    if (tab.basis()[r] < n_struct) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n_struct; ++j)
      if (tab.rows()[r][j] != 0) {
        col = j;
        break;
      }
    if (col) {
      tab.pivot(r, *col);
      ++r;
    } else {
      tab.rows().erase(tab.rows().begin() + static_cast<std::ptrdiff_t>(r));
      tab.rhs().erase(tab.rhs().begin() + static_cast<std::ptrdiff_t>(r));
      tab.basis().erase(tab.basis().begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  std::vector<mpq_class> cost(n_total, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    mpq_class s = 0;
    for (const auto& v : vectors)
      s += v[j];
    cost[j] = s;
    cost[dim + j] = -s;
  }
  if (!tab.optimise(cost, n_struct))
    throw std::logic_error("positive functional LP reported unbounded");

  std::vector<mpq_class> x(n_struct, 0);
  for (std::size_t r = 0; r < tab.rows().size(); ++r)
    x[tab.basis()[r]] = tab.rhs()[r];
  std::vector<mpq_class> w(dim);
  for (std::size_t j = 0; j < dim; ++j)
    w[j] = x[j] - x[dim + j];
  return w;
}

std::vector<mpz_class> primitive_integer_multiple(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& x : v)
    l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> z(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpq_class s = v[i] * l;
    z[i] = s.get_num();
    g = gcd(g, z[i]);
  }
  if (g > 1)
    for (auto& x : z)
      x /= g;
  return z;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p())
    throw OverflowError("integer " + z.get_str() + " does not fit in 64 bits");
  return z.get_si();
}

} // namespace mcs
