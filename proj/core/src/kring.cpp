#include "mcs/kring.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "mcs/error.hpp"

namespace mcs {

std::shared_ptr<const KRingSpec> KRingSpec::make(std::vector<std::string> generators,
                                                 std::vector<ReductionRule> rules,
                                                 bool a1_homotopy) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty())
      throw RingSpecError("empty generator name");
    if (!seen.insert(g).second)
      throw RingSpecError("duplicate generator '" + g + "'");
  }

  auto spec = std::shared_ptr<KRingSpec>(new KRingSpec());
  spec->generators_ = std::move(generators);
  spec->a1_homotopy_ = a1_homotopy;
  spec->rule_for_.assign(spec->generators_.size(), -1);
  spec->lefschetz_ = spec->index_of(kLefschetz);

  for (auto& rule : rules) {
    auto idx = spec->index_of(rule.generator);
    if (!idx)
      throw RingSpecError("rule for unknown generator '" + rule.generator + "'");
    if (rule.power == 0)
      throw RingSpecError("rule power must be positive");
    if (rule.value.size() > rule.power)
      throw RingSpecError("rule value for '" + rule.generator + "' has degree >= power");
    rule.value.resize(rule.power, 0);
    if (spec->rule_for_[*idx] != -1)
      throw RingSpecError("two rules for generator '" + rule.generator + "'");
    if (a1_homotopy && spec->lefschetz_ == idx)
      throw RingSpecError("L is eliminated by the A1-homotopy quotient and cannot carry a rule");
    spec->rule_for_[*idx] = static_cast<int>(spec->rules_.size());
    spec->rules_.push_back(std::move(rule));
  }
  return spec;
}

std::shared_ptr<const KRingSpec> KRingSpec::standard(const std::vector<std::string>& symbols,
                                                     bool a1_homotopy) {
  std::vector<std::string> gens{kLefschetz, kEpsilon};
  gens.insert(gens.end(), symbols.begin(), symbols.end());
  ReductionRule eps_squared{kEpsilon, 2, {1, 0}};
  return make(std::move(gens), {eps_squared}, a1_homotopy);
}

std::optional<std::size_t> KRingSpec::index_of(const std::string& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

std::shared_ptr<const KRingSpec> KRingSpec::with_a1_homotopy() const {
  if (a1_homotopy_)
    return make(generators_, rules_, true);
  std::vector<ReductionRule> rules;
  for (const auto& r : rules_)
    if (r.generator != kLefschetz)
      rules.push_back(r);
  return make(generators_, std::move(rules), true);
}

bool same_ring(const KRing& a, const KRing& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::uint32_t>::max() - b)
    throw OverflowError("exponent overflow");
  return a + b;
}

// x^e reduced modulo x^k - P(x), as coefficients of x^0..x^(k-1).
std::vector<mpz_class> reduce_power(const ReductionRule& rule, std::uint32_t e) {
  const unsigned k = rule.power;
  std::vector<mpz_class> r(k, 0);
  if (e < k) {
    r[e] = 1;
    return r;
  }
  // Start from x^(k-1) and multiply by x (e - k + 1) times.
  r[k - 1] = 1;
  for (std::uint32_t step = k - 1; step < e; ++step) {
    mpz_class top = r[k - 1];
    for (unsigned j = k - 1; j > 0; --j)
      r[j] = r[j - 1];
    r[0] = 0;
    if (top != 0)
      for (unsigned j = 0; j < k; ++j)
        r[j] += top * rule.value[j];
  }
  return r;
}

} // namespace

KElement::KElement(KRing ring) : ring_(std::move(ring)) {
  if (!ring_)
    throw RingSpecError("null ring");
}

KElement::KElement(KRing ring, const mpz_class& constant) : KElement(std::move(ring)) {
  if (constant != 0)
    terms_.emplace(Exponents(ring_->size(), 0), constant);
}

KElement::KElement(KRing ring, Terms terms) : KElement(std::move(ring)) {
  for (const auto& [e, c] : terms)
    if (e.size() != ring_->size())
      throw RingSpecError("exponent vector length does not match generator count");
  terms_ = std::move(terms);
  normalize();
}

KElement KElement::generator(const KRing& ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx)
    throw RingSpecError("unknown generator '" + name + "'");
  Exponents e(ring->size(), 0);
  e[*idx] = 1;
  return KElement(ring, Terms{{e, 1}});
}

void KElement::normalize() {
  const auto& spec = *ring_;
  bool needs_work = false;
  for (const auto& [e, c] : terms_) {
    if (c == 0)
      needs_work = true;
    if (spec.a1_homotopy_ && spec.lefschetz_ && e[*spec.lefschetz_] != 0)
      needs_work = true;
    for (std::size_t i = 0; i < e.size() && !needs_work; ++i)
      if (spec.rule_for_[i] >= 0 && e[i] >= spec.rules_[spec.rule_for_[i]].power)
        needs_work = true;
    if (needs_work)
      break;
  }
  if (!needs_work)
    return;

  Terms out;
  std::vector<std::pair<Exponents, mpz_class>> items;
  for (auto& [e0, c0] : terms_) {
    if (c0 == 0)
      continue;
    items.clear();
    Exponents base = e0;
    if (spec.a1_homotopy_ && spec.lefschetz_)
      base[*spec.lefschetz_] = 0;
    items.emplace_back(base, c0);
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (spec.rule_for_[i] < 0)
        continue;
      const auto& rule = spec.rules_[spec.rule_for_[i]];
      if (base[i] < rule.power)
        continue;
      auto rem = reduce_power(rule, base[i]);
      std::vector<std::pair<Exponents, mpz_class>> next;
      for (const auto& [e, c] : items)
        for (unsigned j = 0; j < rem.size(); ++j) {
          if (rem[j] == 0)
            continue;
          Exponents e2 = e;
          e2[i] = j;
          next.emplace_back(std::move(e2), c * rem[j]);
        }
      items = std::move(next);
    }
    for (auto& [e, c] : items)
      out[e] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(out);
}

bool KElement::is_constant() const {
  if (terms_.empty())
    return true;
  if (terms_.size() != 1)
    return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

std::optional<mpz_class> KElement::as_integer() const {
  if (!is_constant())
    return std::nullopt;
  if (terms_.empty())
    return mpz_class(0);
  return terms_.begin()->second;
}

void KElement::check_ring(const KElement& other) const {
  if (!same_ring(ring_, other.ring_))
    throw SpecMismatch("operands belong to different K-ring specifications");
}

KElement KElement::operator-() const {
  KElement r = *this;
  for (auto& [e, c] : r.terms_)
    c = -c;
  return r;
}

KElement& KElement::operator+=(const KElement& other) {
  check_ring(other);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

KElement& KElement::operator-=(const KElement& other) {
  check_ring(other);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

KElement operator*(const KElement& a, const KElement& b) {
  a.check_ring(b);
  KElement r(a.ring_);
  if (a.is_zero() || b.is_zero())
    return r;
  const std::size_t n = a.ring_->size();
  KElement::Exponents e(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i)
        e[i] = checked_add(ea[i], eb[i]);
      r.terms_[e] += ca * cb;
    }
  r.normalize();
  return r;
}

KElement& KElement::operator*=(const KElement& other) {
  *this = *this * other;
  return *this;
}

KElement KElement::pow(unsigned k) const {
  KElement result(ring_, 1);
  KElement base = *this;
  while (k > 0) {
    if (k & 1u)
      result *= base;
    k >>= 1;
    if (k > 0)
      base *= base;
  }
  return result;
}

bool operator==(const KElement& a, const KElement& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

bool operator<(const KElement& a, const KElement& b) {
  return a.terms_ < b.terms_;
}

std::string KElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0)
        out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      mono += ring_->generators()[i];
      if (e[i] > 1)
        mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out << mag.get_str();
    else if (mag == 1)
      out << mono;
    else
      out << mag.get_str() << "*" << mono;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Specialization::Specialization(KRing source, KRing target,
                               std::map<std::string, KElement> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_)
    throw InvalidSpecialization("null ring");
  for (const auto& [name, img] : images) {
    if (!source_->index_of(name))
      throw InvalidSpecialization("'" + name + "' is not a generator of the source ring");
    if (!same_ring(img.ring(), target_))
      throw InvalidSpecialization("image of '" + name + "' is not in the target ring");
  }

  images_.resize(source_->size());
  for (std::size_t i = 0; i < source_->size(); ++i) {
    const auto& name = source_->generators()[i];
    if (auto it = images.find(name); it != images.end())
      images_[i] = it->second;
    else if (target_->index_of(name))
      images_[i] = KElement::generator(target_, name);
  }

  // Relations of the source must hold for the images.
  for (const auto& rule : source_->rules()) {
    const auto& img = images_[*source_->index_of(rule.generator)];
    if (!img)
      continue;
    KElement rhs(target_);
    KElement power(target_, 1);
    for (const auto& coeff : rule.value) {
      rhs += KElement(target_, coeff) * power;
      power *= *img;
    }
    if (img->pow(rule.power) != rhs)
      throw InvalidSpecialization("image of '" + rule.generator + "' violates " +
                                  rule.generator + "^" + std::to_string(rule.power) +
                                  " relation");
  }
  if (source_->a1_homotopy()) {
    if (auto l = source_->index_of(KRingSpec::kLefschetz); l && images_[*l] &&
                                                           *images_[*l] != KElement(target_, 1))
      throw InvalidSpecialization("source has L = 1, so L must map to 1");
  }
}

Specialization Specialization::evaluate(const KRing& ring,
                                        const std::map<std::string, long>& values) {
  std::map<std::string, KElement> images;
  for (const auto& [name, v] : values)
    images.emplace(name, KElement(ring, v));
  return Specialization(ring, ring, std::move(images));
}

KElement Specialization::operator()(const KElement& a) const {
  if (!same_ring(a.ring(), source_))
    throw SpecMismatch("element is not in the source ring of the specialization");
  KElement result(target_);
  for (const auto& [e, c] : a.terms()) {
    KElement term(target_, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (!images_[i])
        throw MissingAssignment("no value for generator '" + source_->generators()[i] + "'");
      term *= images_[i]->pow(e[i]);
    }
    result += term;
  }
  return result;
}

Specialization Specialization::then(const Specialization& next) const {
  if (!same_ring(target_, next.source_))
    throw SpecMismatch("specializations do not compose");
  std::map<std::string, KElement> images;
  for (std::size_t i = 0; i < source_->size(); ++i) {
    const auto& name = source_->generators()[i];
    if (images_[i])
      images.emplace(name, next(*images_[i]));
    else if (!next.target_->index_of(name))
      continue;
    else
      images.emplace(name, KElement::generator(next.target_, name));
  }
  return Specialization(source_, next.target_, std::move(images));
}

Specialization a1_quotient(const KRing& ring) {
  return Specialization(ring, ring->with_a1_homotopy(), {});
}

KElement class_projective_space(const KRing& ring, unsigned n) {
  KElement result(ring, 1);
  if (!ring->index_of(KRingSpec::kLefschetz))
    throw RingSpecError("ring has no generator L");
  KElement L = KElement::generator(ring, KRingSpec::kLefschetz);
  KElement power = L;
  for (unsigned i = 1; i <= n; ++i) {
    result += power;
    power *= L;
  }
  return result;
}

KElement class_torus(const KRing& ring, unsigned k) {
  if (!ring->index_of(KRingSpec::kLefschetz))
    throw RingSpecError("ring has no generator L");
  return (KElement::generator(ring, KRingSpec::kLefschetz) - KElement(ring, 1)).pow(k);
}

} // namespace mcs
