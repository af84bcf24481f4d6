#ifndef MCS_LINALG_HPP
#define MCS_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace mcs {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const mpz_class& k);
  void add_col(std::size_t dst, std::size_t src, const mpz_class& k);
  void negate_row(std::size_t r);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Non-zero diagonal entries, in order.
  std::vector<mpz_class> invariants;
  std::size_t rank() const { return invariants.size(); }
};

/// Pivot choice: smallest absolute value, ties broken by lowest row then
/// lowest column, so U and V are reproducible.
SmithForm smith_normal_form(const IntMatrix& a);

mpz_class determinant(const IntMatrix& a);

/// Inverse of a unimodular matrix (exact; throws if not unimodular).
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Z-basis of {x in Z^n : A x = 0}, one vector per entry.
std::vector<std::vector<mpz_class>> integer_kernel(const IntMatrix& a);

/// Rank over Q.
std::size_t rational_rank(const IntMatrix& a);

/// Solves x * B = v over Q for square invertible B; nullopt when singular.
std::optional<std::vector<mpq_class>> solve_left(const IntMatrix& b, const std::vector<mpz_class>& v);

/// Finds w minimising sum_i <w, v_i> subject to <w, v_i> >= 1 for all i, by
/// exact two-phase simplex with Bland's rule. nullopt when infeasible, i.e.
/// when no linear functional is strictly positive on every v_i.
std::optional<std::vector<mpq_class>> minimal_positive_functional(
    const std::vector<std::vector<mpq_class>>& vectors, std::size_t dim);

/// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<mpz_class> primitive_integer_multiple(const std::vector<mpq_class>& v);

std::int64_t to_int64(const mpz_class& z);

} // namespace mcs

#endif
