#ifndef MCS_SERIES_HPP
#define MCS_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcs/kring.hpp"
#include "mcs/monoid.hpp"

namespace mcs {

using SeriesTerms = std::map<MonoidElement, KElement>;

/// Finite sum of c_s t^s in R[S].
class MonoidPolynomial {
public:
  MonoidPolynomial(MonoidPtr monoid, KRing ring, SeriesTerms terms = {});

  static MonoidPolynomial one(const MonoidPtr& monoid, const KRing& ring);
  static MonoidPolynomial monomial(const MonoidPtr& monoid, const KRing& ring,
                                   const MonoidElement& s, const KElement& c);
  /// 1 - c t^alpha
  static MonoidPolynomial binomial(const MonoidPtr& monoid, const KRing& ring,
                                   const MonoidElement& alpha, const KElement& c);

  const MonoidPtr& monoid() const { return monoid_; }
  const KRing& ring() const { return ring_; }
  const SeriesTerms& terms() const { return terms_; }
  KElement coefficient(const MonoidElement& s) const;

  /// Coefficient of the zero class equals 1.
  bool is_monic() const;
  bool is_one() const;
  /// Largest degree among the terms (0 for the zero polynomial).
  std::int64_t max_degree() const;

  MonoidPolynomial& operator+=(const MonoidPolynomial& o);
  MonoidPolynomial& operator-=(const MonoidPolynomial& o);
  friend MonoidPolynomial operator+(MonoidPolynomial a, const MonoidPolynomial& b) { return a += b; }
  friend MonoidPolynomial operator-(MonoidPolynomial a, const MonoidPolynomial& b) { return a -= b; }
  friend MonoidPolynomial operator*(const MonoidPolynomial& a, const MonoidPolynomial& b);
  MonoidPolynomial pow(unsigned k) const;

  friend bool operator==(const MonoidPolynomial& a, const MonoidPolynomial& b);

private:
  void check_compatible(const MonoidPolynomial& o) const;

  MonoidPtr monoid_;
  KRing ring_;
  SeriesTerms terms_;
};

/// Element of R[[S]] known up to (and including) grading degree N.
class TruncatedSeries {
public:
  TruncatedSeries(MonoidPtr monoid, KRing ring, std::int64_t truncation, SeriesTerms terms = {});

  /// Drops terms above the truncation.
  static TruncatedSeries from_polynomial(const MonoidPolynomial& p, std::int64_t truncation);

  const MonoidPtr& monoid() const { return monoid_; }
  const KRing& ring() const { return ring_; }
  std::int64_t truncation() const { return truncation_; }
  const SeriesTerms& terms() const { return terms_; }
  KElement coefficient(const MonoidElement& s) const;

  /// Terms grouped by degree: result[d] lists (class, coeff) of degree d.
  std::vector<std::vector<std::pair<MonoidElement, KElement>>> by_degree() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
  void check_compatible(const TruncatedSeries& o) const;

  MonoidPtr monoid_;
  KRing ring_;
  std::int64_t truncation_;
  SeriesTerms terms_;
};

/// Exact convolution up to the common truncation.
TruncatedSeries truncated_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Multiplicative inverse of a monic series, to the same truncation.
TruncatedSeries truncated_inverse(const TruncatedSeries& f);

/// One factor (1 - c t^alpha)^power of a rational denominator.
struct DenominatorFactor {
  KElement coeff;
  MonoidElement cls;
  unsigned power = 1;

  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

/// numerator / prod (1 - c t^alpha)^e, stored with identical factors merged and
/// sorted by (degree, generator index, class, coefficient).
class RationalSeries {
public:
  RationalSeries(MonoidPolynomial numerator, std::vector<DenominatorFactor> factors = {});

  /// 1 / (1 - c t^alpha)^power
  static RationalSeries geometric(const MonoidPtr& monoid, const KRing& ring,
                                  const MonoidElement& alpha, unsigned power = 1);
  static RationalSeries geometric(const MonoidPtr& monoid, const KElement& c,
                                  const MonoidElement& alpha, unsigned power = 1);

  const MonoidPtr& monoid() const { return numerator_.monoid(); }
  const KRing& ring() const { return numerator_.ring(); }
  const MonoidPolynomial& numerator() const { return numerator_; }
  const std::vector<DenominatorFactor>& factors() const { return factors_; }

  /// Expanded product of the denominator factors.
  MonoidPolynomial denominator() const;
  bool is_monic() const { return numerator_.is_monic(); }

  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);

  /// Structural equality of canonical forms.
  friend bool operator==(const RationalSeries& a, const RationalSeries& b);

private:
  MonoidPolynomial numerator_;
  std::vector<DenominatorFactor> factors_;
};

/// Equality as rational functions: num_a * den_b == num_b * den_a.
bool rational_equal(const RationalSeries& a, const RationalSeries& b);

TruncatedSeries rational_expand(const RationalSeries& r, std::int64_t truncation);

struct Certificate {
  bool consistent = false;
  std::int64_t truncation = 0;
  /// Degree bound assumed for the numerator f*g.
  std::int64_t numerator_bound = 0;
  std::optional<std::int64_t> witness_degree;
  std::optional<MonoidElement> witness_class;
  std::optional<KElement> witness_coeff;
};

/// Checks whether f * g is a polynomial of degree <= numerator_bound up to the
/// truncation of f (default bound: the degree of g). Consistency is only a
/// statement up to the truncation; a refutation is conclusive.
Certificate certify_rational(const TruncatedSeries& f, const MonoidPolynomial& g,
                             std::optional<std::int64_t> numerator_bound = std::nullopt);

/// Pushforward along a monoid homomorphism. The target truncation defaults to
/// the largest bound fully determined by the source truncation; asking for
/// more is a PushforwardError.
TruncatedSeries pushforward(const TruncatedSeries& f, const MonoidHom& phi,
                            std::optional<std::int64_t> target_truncation = std::nullopt);
MonoidPolynomial pushforward(const MonoidPolynomial& p, const MonoidHom& phi);
RationalSeries pushforward(const RationalSeries& r, const MonoidHom& phi);

/// f(t) g(u) over S1 (+) S2; the result's monoid is a fresh direct sum.
TruncatedSeries external_product(const TruncatedSeries& f, const TruncatedSeries& g);
RationalSeries external_product(const RationalSeries& f, const RationalSeries& g);
/// Variants placing the result in an existing direct sum.
TruncatedSeries external_product(const TruncatedSeries& f, const TruncatedSeries& g, const DirectSum& sum);
RationalSeries external_product(const RationalSeries& f, const RationalSeries& g, const DirectSum& sum);

/// Q with Q * y = x, cancelling denominator factors and dividing numerators.
RationalSeries localize_quotient(const RationalSeries& x, const RationalSeries& y);

MonoidPolynomial specialize(const MonoidPolynomial& p, const Specialization& s);
TruncatedSeries specialize(const TruncatedSeries& f, const Specialization& s);
RationalSeries specialize(const RationalSeries& r, const Specialization& s);

/// Standard ring for genus-g curve zetas: Z[L, eps, a1..a_2g]/(eps^2-1).
KRing curve_ring(unsigned genus, bool a1_homotopy = false);

/// Motivic zeta of a smooth projective genus-g curve over Z_{>=0}:
/// g = 0 gives 1/((1-t)(1-Lt)); g >= 1 gives (1 + a1 t + ... + a_2g t^2g)/((1-t)(1-Lt))
/// with the a_i free symbols of `ring` (named by `symbols`, default a1..a_2g).
RationalSeries curve_zeta(unsigned genus, const KRing& ring,
                          std::vector<std::string> symbols = {});

/// Zeta of P^1 minus r points relative to P^1, in the A^1-homotopy quotient:
/// (1-t)^(r-2) as a rational form (a polynomial once r >= 2).
RationalSeries punctured_p1_zeta(unsigned r, const KRing& ring);
/// Polynomial form; r must be at least 2.
MonoidPolynomial punctured_p1_polynomial(unsigned r, const KRing& ring);

} // namespace mcs

#endif
