#ifndef MCS_KRING_HPP
#define MCS_KRING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mcs {

/// Rewrite rule x^power -> value(x), where value is a polynomial in the same
/// generator of degree < power. Each rule only ever lowers the exponent of its
/// own generator, so reduction terminates and is confluent.
struct ReductionRule {
  std::string generator;
  unsigned power = 0;
  /// Coefficients of x^0, x^1, ..., x^(power-1).
  std::vector<mpz_class> value;

  friend bool operator==(const ReductionRule&, const ReductionRule&) = default;
};

/// A computable quotient of a K-ring: Z[generators] / (reduction rules),
/// optionally with the A^1-homotopy relation L = 1 applied eagerly.
class KRingSpec {
public:
  static constexpr const char* kLefschetz = "L";
  static constexpr const char* kEpsilon = "eps";

  static std::shared_ptr<const KRingSpec> make(std::vector<std::string> generators,
                                               std::vector<ReductionRule> rules = {},
                                               bool a1_homotopy = false);

  /// Z[L, eps]/(eps^2 - 1) plus the given free symbols.
  static std::shared_ptr<const KRingSpec> standard(const std::vector<std::string>& symbols = {},
                                                   bool a1_homotopy = false);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<ReductionRule>& rules() const { return rules_; }
  bool a1_homotopy() const { return a1_homotopy_; }
  std::size_t size() const { return generators_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same generators and rules with the A^1-homotopy flag set.
  std::shared_ptr<const KRingSpec> with_a1_homotopy() const;

  friend bool operator==(const KRingSpec& a, const KRingSpec& b) {
    return a.generators_ == b.generators_ && a.rules_ == b.rules_ &&
           a.a1_homotopy_ == b.a1_homotopy_;
  }

private:
  KRingSpec() = default;

  std::vector<std::string> generators_;
  std::vector<ReductionRule> rules_;
  // rule_for_[i] indexes rules_ for generator i, or -1.
  std::vector<int> rule_for_;
  std::optional<std::size_t> lefschetz_;
  bool a1_homotopy_ = false;

  friend class KElement;
};

using KRing = std::shared_ptr<const KRingSpec>;

bool same_ring(const KRing& a, const KRing& b);

/// Element of a KRingSpec: a sparse integer polynomial kept in canonical
/// (fully reduced, zero-free, lexicographically ordered) form.
class KElement {
public:
  using Exponents = std::vector<std::uint32_t>;
  using Terms = std::map<Exponents, mpz_class>;

  explicit KElement(KRing ring);
  KElement(KRing ring, const mpz_class& constant);
  KElement(KRing ring, long constant) : KElement(std::move(ring), mpz_class(constant)) {}
  /// Builds from arbitrary terms; reduces and drops zeros.
  KElement(KRing ring, Terms terms);

  static KElement generator(const KRing& ring, const std::string& name);

  const KRing& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term when the element is a constant.
  std::optional<mpz_class> as_integer() const;

  KElement operator-() const;
  KElement& operator+=(const KElement& other);
  KElement& operator-=(const KElement& other);
  KElement& operator*=(const KElement& other);
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend KElement operator*(const KElement& a, const KElement& b);

  KElement pow(unsigned k) const;

  friend bool operator==(const KElement& a, const KElement& b);
  /// Total order on canonical forms (for use as a sort key only).
  friend bool operator<(const KElement& a, const KElement& b);

  /// "1 + 2*L + L^2"
  std::string to_string() const;

private:
  void check_ring(const KElement& other) const;
  void normalize();

  KRing ring_;
  Terms terms_;
};

/// Ring homomorphism between two KRingSpecs given by generator images.
/// Generators without an explicit image are carried over to the target
/// generator of the same name when the target has one.
class Specialization {
public:
  Specialization(KRing source, KRing target, std::map<std::string, KElement> images);

  /// Integer assignments into the source ring itself (e.g. L -> 1).
  static Specialization evaluate(const KRing& ring, const std::map<std::string, long>& values);

  const KRing& source() const { return source_; }
  const KRing& target() const { return target_; }

  KElement operator()(const KElement& a) const;

  /// this followed by next.
  Specialization then(const Specialization& next) const;

private:
  KRing source_;
  KRing target_;
  // image per source generator; nullopt when the generator is neither
  // assigned nor present in the target.
  std::vector<std::optional<KElement>> images_;
};

/// Maps every element of `ring` into ring->with_a1_homotopy() (L -> 1).
Specialization a1_quotient(const KRing& ring);

/// [P^n] = 1 + L + ... + L^n.
KElement class_projective_space(const KRing& ring, unsigned n);

/// [G_m^k] = (L - 1)^k.
KElement class_torus(const KRing& ring, unsigned k);

} // namespace mcs

#endif
