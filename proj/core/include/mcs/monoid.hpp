#ifndef MCS_MONOID_HPP
#define MCS_MONOID_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcs/linalg.hpp"

namespace mcs {

/// Process-wide cap on enumeration and expansion sizes (default 10^6).
/// Exceeding it raises TermLimitExceeded.
std::size_t max_terms();
void set_max_terms(std::size_t n);

/// Element of a finitely generated abelian group in canonical coordinates:
/// the free part, followed by torsion residues in [0, d_i).
struct MonoidElement {
  std::vector<std::int64_t> free;
  std::vector<std::int64_t> torsion;

  bool is_zero() const;
  auto operator<=>(const MonoidElement&) const = default;
  bool operator==(const MonoidElement&) const = default;
};

/// Z^m modulo the row span of a relation matrix, coordinatised through its
/// Smith normal form: for a word x (row vector), y = x V and the canonical
/// coordinates are the entries of y past the rank (free) together with the
/// entries at invariants d_i > 1 reduced mod d_i (torsion).
class AbelianGroupPresentation {
public:
  AbelianGroupPresentation(std::size_t num_generators, IntMatrix relations);
  static AbelianGroupPresentation from_relations(
      std::size_t num_generators, const std::vector<std::vector<std::int64_t>>& relations);

  std::size_t num_generators() const { return m_; }
  const IntMatrix& relations() const { return relations_; }
  const SmithForm& snf() const { return snf_; }
  std::size_t free_rank() const { return m_ - snf_.rank(); }
  const std::vector<std::int64_t>& torsion_invariants() const { return torsion_; }

  /// Image of an arbitrary integer vector over the generators.
  MonoidElement element_of(std::span<const std::int64_t> word) const;
  MonoidElement element_of(const std::vector<mpz_class>& word) const;
  /// Some integer vector over the generators mapping to e.
  std::vector<mpz_class> lift(const MonoidElement& e) const;

  MonoidElement zero() const;
  MonoidElement add(const MonoidElement& a, const MonoidElement& b) const;
  MonoidElement subtract(const MonoidElement& a, const MonoidElement& b) const;
  MonoidElement scale(const MonoidElement& a, std::int64_t k) const;
  void check(const MonoidElement& e) const;

  friend bool operator==(const AbelianGroupPresentation& a, const AbelianGroupPresentation& b) {
    return a.m_ == b.m_ && a.relations_ == b.relations_;
  }

private:
  MonoidElement from_coordinates(const std::vector<mpz_class>& y) const;

  std::size_t m_;
  IntMatrix relations_;
  SmithForm snf_;
  IntMatrix v_inverse_;
  std::vector<std::int64_t> torsion_;
  std::vector<std::size_t> torsion_columns_;
};

/// Integer functional on the free part that is strictly positive on every
/// generator, chosen to minimise the sum of generator degrees. Throws
/// FiniteFiberError when none exists.
std::vector<std::int64_t> positive_grading(const AbelianGroupPresentation& group,
                                           const std::vector<MonoidElement>& generators);

/// Named Laurent-monomial variable used when printing classes.
struct BasisVariable {
  std::string name;
  MonoidElement element;
};

/// Commutative monoid generated by the (named) presentation generators, with
/// a positive grading certifying the finite-fiber property.
class GradedMonoid {
public:
  /// Computes a grading with positive_grading when none is supplied.
  GradedMonoid(AbelianGroupPresentation group, std::vector<std::string> names,
               std::optional<std::vector<std::int64_t>> grading = std::nullopt);

  const AbelianGroupPresentation& group() const { return group_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t generator_count() const { return generators_.size(); }
  const MonoidElement& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<MonoidElement>& generators() const { return generators_; }
  const std::vector<std::int64_t>& grading() const { return grading_; }

  std::int64_t degree(const MonoidElement& e) const;
  /// Index of the first generator equal to e.
  std::optional<std::size_t> generator_index(const MonoidElement& e) const;

  MonoidElement zero() const { return group_.zero(); }
  MonoidElement add(const MonoidElement& a, const MonoidElement& b) const { return group_.add(a, b); }
  MonoidElement scale(const MonoidElement& a, std::int64_t k) const { return group_.scale(a, k); }

  /// Image of a non-negative word over the generators.
  MonoidElement canonicalize(std::span<const std::int64_t> exponents) const;

  /// Whether e is a sum of generators.
  bool contains(const MonoidElement& e) const;

  /// Every element of degree <= bound, once each, ordered by (degree, element).
  std::vector<std::pair<MonoidElement, std::int64_t>> enumerate(std::int64_t bound) const;

  /// Optional printing basis (Laurent monomials). Must be a Z-basis of a
  /// torsion-free group; validated on set.
  const std::vector<BasisVariable>& display_basis() const { return display_basis_; }
  void set_display_basis(std::vector<BasisVariable> basis);

  friend bool operator==(const GradedMonoid& a, const GradedMonoid& b) {
    return a.group_ == b.group_ && a.names_ == b.names_ && a.grading_ == b.grading_;
  }

private:
  AbelianGroupPresentation group_;
  std::vector<std::string> names_;
  std::vector<MonoidElement> generators_;
  std::vector<std::int64_t> grading_;
  std::vector<BasisVariable> display_basis_;
};

using MonoidPtr = std::shared_ptr<const GradedMonoid>;

bool same_monoid(const MonoidPtr& a, const MonoidPtr& b);

/// Z_{>=0} on one generator.
MonoidPtr natural_numbers(const std::string& name = "t");

/// Z_{>=0}^k, one named generator per coordinate.
MonoidPtr free_commutative_monoid(const std::vector<std::string>& names);

/// Exponent vector of e in the display basis; nullopt if no basis is set or
/// e is not an integral combination.
std::optional<std::vector<std::int64_t>> basis_coordinates(const GradedMonoid& monoid,
                                                           const MonoidElement& e);
std::optional<std::vector<std::int64_t>> basis_coordinates(const GradedMonoid& monoid,
                                                           const std::vector<BasisVariable>& basis,
                                                           const MonoidElement& e);

/// Homomorphism of graded monoids given by generator images.
class MonoidHom {
public:
  /// Checks that relations map to zero and that each image is effective.
  MonoidHom(MonoidPtr source, MonoidPtr target, std::vector<MonoidElement> generator_images);

  static MonoidHom identity(const MonoidPtr& m);

  const MonoidPtr& source() const { return source_; }
  const MonoidPtr& target() const { return target_; }
  const std::vector<MonoidElement>& generator_images() const { return images_; }

  MonoidElement operator()(const MonoidElement& e) const;

  /// Largest c with deg_target(phi(g)) >= c * deg_source(g) for every
  /// generator g, as a fraction (num, den).
  std::pair<std::int64_t, std::int64_t> degree_ratio() const;

  /// phi(g) has positive target degree for every generator g.
  bool grading_compatible() const;

private:
  MonoidPtr source_;
  MonoidPtr target_;
  std::vector<MonoidElement> images_;
};

struct DirectSum {
  MonoidPtr monoid;
  MonoidHom first;
  MonoidHom second;
};

/// S1 (+) S2 with generators of S1 followed by those of S2. Colliding
/// generator names get the summand index appended.
DirectSum direct_sum(const MonoidPtr& a, const MonoidPtr& b);

} // namespace mcs

#endif
