#include "mcs/series.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "mcs/error.hpp"

namespace mcs {

namespace {

void check_ring_match(const KRing& a, const KRing& b) {
  if (!same_ring(a, b))
    throw SeriesMismatch("coefficient rings differ");
}

void check_monoid_match(const MonoidPtr& a, const MonoidPtr& b) {
  if (!same_monoid(a, b))
    throw SeriesMismatch("monoids differ");
}

void add_term(SeriesTerms& terms, const MonoidElement& s, const KElement& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms.erase(it);
  }
}

struct DegreeTerm {
  std::int64_t degree;
  const MonoidElement* cls;
  const KElement* coeff;
};

std::vector<DegreeTerm> sorted_by_degree(const GradedMonoid& m, const SeriesTerms& terms) {
  std::vector<DegreeTerm> v;
  v.reserve(terms.size());
  for (const auto& [s, c] : terms)
    v.push_back({m.degree(s), &s, &c});
  std::stable_sort(v.begin(), v.end(),
                   [](const DegreeTerm& a, const DegreeTerm& b) { return a.degree < b.degree; });
  return v;
}

// sum_{s1 + s2 = s, deg s <= bound} a_s1 b_s2
SeriesTerms convolve(const GradedMonoid& m, const SeriesTerms& a, const SeriesTerms& b,
                     std::optional<std::int64_t> bound) {
  SeriesTerms out;
  auto va = sorted_by_degree(m, a);
  auto vb = sorted_by_degree(m, b);
  for (const auto& x : va) {
    if (bound && x.degree + (vb.empty() ? 0 : vb.front().degree) > *bound)
      break;
    for (const auto& y : vb) {
      if (bound && x.degree + y.degree > *bound)
        break;
      add_term(out, m.add(*x.cls, *y.cls), *x.coeff * *y.coeff);
    }
    if (out.size() > max_terms())
      throw TermLimitExceeded("series product exceeded " + std::to_string(max_terms()) + " terms");
  }
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

} // namespace

// ---------------------------------------------------------------------------
// MonoidPolynomial

MonoidPolynomial::MonoidPolynomial(MonoidPtr monoid, KRing ring, SeriesTerms terms)
    : monoid_(std::move(monoid)), ring_(std::move(ring)) {
  if (!monoid_ || !ring_)
    throw SeriesMismatch("null monoid or ring");
  for (auto& [s, c] : terms) {
    monoid_->group().check(s);
    check_ring_match(c.ring(), ring_);
    if (!c.is_zero())
      terms_.emplace(s, std::move(c));
  }
}

MonoidPolynomial MonoidPolynomial::one(const MonoidPtr& monoid, const KRing& ring) {
  return monomial(monoid, ring, monoid->zero(), KElement(ring, 1));
}

MonoidPolynomial MonoidPolynomial::monomial(const MonoidPtr& monoid, const KRing& ring,
                                            const MonoidElement& s, const KElement& c) {
  return MonoidPolynomial(monoid, ring, SeriesTerms{{s, c}});
}

MonoidPolynomial MonoidPolynomial::binomial(const MonoidPtr& monoid, const KRing& ring,
                                            const MonoidElement& alpha, const KElement& c) {
  return one(monoid, ring) - monomial(monoid, ring, alpha, c);
}

KElement MonoidPolynomial::coefficient(const MonoidElement& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? KElement(ring_) : it->second;
}

bool MonoidPolynomial::is_monic() const {
  return coefficient(monoid_->zero()) == KElement(ring_, 1);
}

bool MonoidPolynomial::is_one() const {
  return terms_.size() == 1 && is_monic();
}

std::int64_t MonoidPolynomial::max_degree() const {
  std::int64_t d = 0;
  for (const auto& [s, c] : terms_)
    d = std::max(d, monoid_->degree(s));
  return d;
}

void MonoidPolynomial::check_compatible(const MonoidPolynomial& o) const {
  check_monoid_match(monoid_, o.monoid_);
  check_ring_match(ring_, o.ring_);
}

MonoidPolynomial& MonoidPolynomial::operator+=(const MonoidPolynomial& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_)
    add_term(terms_, s, c);
  return *this;
}

MonoidPolynomial& MonoidPolynomial::operator-=(const MonoidPolynomial& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_)
    add_term(terms_, s, -c);
  return *this;
}

MonoidPolynomial operator*(const MonoidPolynomial& a, const MonoidPolynomial& b) {
  a.check_compatible(b);
  MonoidPolynomial r(a.monoid_, a.ring_);
  r.terms_ = convolve(*a.monoid_, a.terms_, b.terms_, std::nullopt);
  return r;
}

MonoidPolynomial MonoidPolynomial::pow(unsigned k) const {
  MonoidPolynomial r = one(monoid_, ring_);
  for (unsigned i = 0; i < k; ++i)
    r = r * *this;
  return r;
}

bool operator==(const MonoidPolynomial& a, const MonoidPolynomial& b) {
  return same_monoid(a.monoid_, b.monoid_) && same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(MonoidPtr monoid, KRing ring, std::int64_t truncation,
                                 SeriesTerms terms)
    : monoid_(std::move(monoid)), ring_(std::move(ring)), truncation_(truncation) {
  if (!monoid_ || !ring_)
    throw SeriesMismatch("null monoid or ring");
  if (truncation_ < 0)
    throw SeriesMismatch("truncation must be non-negative");
  for (auto& [s, c] : terms) {
    monoid_->group().check(s);
    check_ring_match(c.ring(), ring_);
    std::int64_t d = monoid_->degree(s);
    if (d > truncation_)
      throw SeriesMismatch("term of degree " + std::to_string(d) + " beyond truncation " +
                           std::to_string(truncation_));
    if (d < 0 || (d == 0 && !s.is_zero()))
      throw SeriesMismatch("term class is not in the monoid");
    if (!c.is_zero())
      terms_.emplace(s, std::move(c));
  }
}

TruncatedSeries TruncatedSeries::from_polynomial(const MonoidPolynomial& p, std::int64_t truncation) {
  SeriesTerms t;
  for (const auto& [s, c] : p.terms())
    if (p.monoid()->degree(s) <= truncation)
      t.emplace(s, c);
  return TruncatedSeries(p.monoid(), p.ring(), truncation, std::move(t));
}

KElement TruncatedSeries::coefficient(const MonoidElement& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? KElement(ring_) : it->second;
}

std::vector<std::vector<std::pair<MonoidElement, KElement>>> TruncatedSeries::by_degree() const {
  std::vector<std::vector<std::pair<MonoidElement, KElement>>> out(
      static_cast<std::size_t>(truncation_) + 1);
  for (const auto& [s, c] : terms_)
    out[static_cast<std::size_t>(monoid_->degree(s))].emplace_back(s, c);
  return out;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  check_monoid_match(monoid_, o.monoid_);
  check_ring_match(ring_, o.ring_);
  if (truncation_ != o.truncation_)
    throw SeriesMismatch("truncations differ (" + std::to_string(truncation_) + " vs " +
                         std::to_string(o.truncation_) + ")");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_)
    add_term(terms_, s, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_)
    add_term(terms_, s, -c);
  return *this;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return same_monoid(a.monoid_, b.monoid_) && same_ring(a.ring_, b.ring_) &&
         a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
}

TruncatedSeries truncated_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  check_monoid_match(f.monoid(), g.monoid());
  check_ring_match(f.ring(), g.ring());
  if (f.truncation() != g.truncation())
    throw SeriesMismatch("truncations differ (" + std::to_string(f.truncation()) + " vs " +
                         std::to_string(g.truncation()) + ")");
  return TruncatedSeries(f.monoid(), f.ring(), f.truncation(),
                         convolve(*f.monoid(), f.terms(), g.terms(), f.truncation()));
}

TruncatedSeries truncated_inverse(const TruncatedSeries& f) {
  const auto& m = *f.monoid();
  if (f.coefficient(m.zero()) != KElement(f.ring(), 1))
    throw NotMonic("only monic series are inverted");
  auto elements = m.enumerate(f.truncation());
  auto fterms = sorted_by_degree(m, f.terms());
  SeriesTerms inv;
  inv.emplace(m.zero(), KElement(f.ring(), 1));
  for (const auto& [s, ds] : elements) {
    if (s.is_zero())
      continue;
    KElement acc(f.ring());
    for (const auto& t : fterms) {
      if (t.degree == 0)
        continue;
      if (t.degree > ds)
        break;
      auto it = inv.find(m.group().subtract(s, *t.cls));
      if (it != inv.end())
        acc -= *t.coeff * it->second;
    }
    if (!acc.is_zero())
      inv.emplace(s, std::move(acc));
  }
  return TruncatedSeries(f.monoid(), f.ring(), f.truncation(), std::move(inv));
}

// ---------------------------------------------------------------------------
// RationalSeries

RationalSeries::RationalSeries(MonoidPolynomial numerator, std::vector<DenominatorFactor> factors)
    : numerator_(std::move(numerator)) {
  const auto& m = *numerator_.monoid();
  using Key = std::tuple<std::int64_t, std::size_t, MonoidElement, KElement::Terms>;
  std::map<Key, DenominatorFactor> merged;
  for (auto& f : factors) {
    check_ring_match(f.coeff.ring(), numerator_.ring());
    m.group().check(f.cls);
    if (f.cls.is_zero())
      throw ZeroClassFactor("denominator factor with the zero class is not invertible");
    if (m.degree(f.cls) <= 0)
      throw ZeroClassFactor("denominator factor class has non-positive degree");
    if (f.power == 0 || f.coeff.is_zero())
      continue;
    Key key{m.degree(f.cls), m.generator_index(f.cls).value_or(std::numeric_limits<std::size_t>::max()),
            f.cls, f.coeff.terms()};
    auto [it, inserted] = merged.try_emplace(key, f);
    if (!inserted)
      it->second.power += f.power;
  }
  for (auto& [k, f] : merged)
    factors_.push_back(std::move(f));
}

RationalSeries RationalSeries::geometric(const MonoidPtr& monoid, const KRing& ring,
                                         const MonoidElement& alpha, unsigned power) {
  return geometric(monoid, KElement(ring, 1), alpha, power);
}

RationalSeries RationalSeries::geometric(const MonoidPtr& monoid, const KElement& c,
                                         const MonoidElement& alpha, unsigned power) {
  return RationalSeries(MonoidPolynomial::one(monoid, c.ring()), {{c, alpha, power}});
}

MonoidPolynomial RationalSeries::denominator() const {
  MonoidPolynomial d = MonoidPolynomial::one(monoid(), ring());
  for (const auto& f : factors_)
    d = d * MonoidPolynomial::binomial(monoid(), ring(), f.cls, f.coeff).pow(f.power);
  return d;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  std::vector<DenominatorFactor> fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return RationalSeries(a.numerator_ * b.numerator_, std::move(fs));
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
  return a.numerator_ == b.numerator_ && a.factors_ == b.factors_;
}

bool rational_equal(const RationalSeries& a, const RationalSeries& b) {
  check_monoid_match(a.monoid(), b.monoid());
  check_ring_match(a.ring(), b.ring());
  if (a == b)
    return true;
  // Cancel common factors first so the cross products stay small.
  std::map<std::pair<MonoidElement, KElement::Terms>, std::pair<unsigned, unsigned>> powers;
  std::map<std::pair<MonoidElement, KElement::Terms>, KElement> coeffs;
  for (const auto& f : a.factors()) {
    powers[{f.cls, f.coeff.terms()}].first += f.power;
    coeffs.emplace(std::make_pair(f.cls, f.coeff.terms()), f.coeff);
  }
  for (const auto& f : b.factors()) {
    powers[{f.cls, f.coeff.terms()}].second += f.power;
    coeffs.emplace(std::make_pair(f.cls, f.coeff.terms()), f.coeff);
  }
  MonoidPolynomial lhs = a.numerator();
  MonoidPolynomial rhs = b.numerator();
  for (const auto& [key, pw] : powers) {
    auto bin = MonoidPolynomial::binomial(a.monoid(), a.ring(), key.first, coeffs.at(key));
    unsigned common = std::min(pw.first, pw.second);
    if (pw.second > common)
      lhs = lhs * bin.pow(pw.second - common);
    if (pw.first > common)
      rhs = rhs * bin.pow(pw.first - common);
  }
  return lhs == rhs;
}

TruncatedSeries rational_expand(const RationalSeries& r, std::int64_t truncation) {
  const auto& monoid = r.monoid();
  const auto& ring = r.ring();
  TruncatedSeries acc = TruncatedSeries::from_polynomial(r.numerator(), truncation);
  for (const auto& f : r.factors()) {
    const std::int64_t d = monoid->degree(f.cls);
    if (f.cls.is_zero() || d <= 0)
      throw ZeroClassFactor("cannot expand a factor whose class has degree 0");
    // (1 - c t^a)^(-e) = sum_k binom(k+e-1, k) c^k t^(k a)
    SeriesTerms geo;
    KElement ck(ring, 1);
    for (std::int64_t k = 0; k * d <= truncation; ++k) {
      geo.emplace(monoid->scale(f.cls, k),
                  KElement(ring, binomial(static_cast<unsigned long>(k) + f.power - 1,
                                          static_cast<unsigned long>(k))) * ck);
      ck *= f.coeff;
    }
    acc = truncated_mul(acc, TruncatedSeries(monoid, ring, truncation, std::move(geo)));
  }
  return acc;
}

Certificate certify_rational(const TruncatedSeries& f, const MonoidPolynomial& g,
                             std::optional<std::int64_t> numerator_bound) {
  check_monoid_match(f.monoid(), g.monoid());
  check_ring_match(f.ring(), g.ring());
  if (!g.is_monic())
    throw NotMonic("candidate denominator must have constant term 1");
  const std::int64_t dg = g.max_degree();
  if (dg >= f.truncation())
    throw SeriesMismatch("candidate denominator degree " + std::to_string(dg) +
                         " must be below the truncation " + std::to_string(f.truncation()));
  Certificate cert;
  cert.truncation = f.truncation();
  cert.numerator_bound = numerator_bound.value_or(dg);
  auto h = truncated_mul(f, TruncatedSeries::from_polynomial(g, f.truncation()));
  const auto& m = *f.monoid();
  for (const auto& [s, c] : h.terms()) {
    std::int64_t d = m.degree(s);
    if (d <= cert.numerator_bound)
      continue;
    if (!cert.witness_degree || d < *cert.witness_degree) {
      cert.witness_degree = d;
      cert.witness_class = s;
      cert.witness_coeff = c;
    }
  }
  cert.consistent = !cert.witness_degree.has_value();
  return cert;
}

// ---------------------------------------------------------------------------
// Pushforward and external products

TruncatedSeries pushforward(const TruncatedSeries& f, const MonoidHom& phi,
                            std::optional<std::int64_t> target_truncation) {
  check_monoid_match(f.monoid(), phi.source());
  if (!phi.grading_compatible())
    throw PushforwardError("some generator maps to a class of non-positive degree");
  auto [num, den] = phi.degree_ratio();
  // Largest N' with every source element of degree > N mapping above N'.
  mpz_class q = mpz_class(num) * (f.truncation() + 1) - 1;
  mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), mpz_class(den).get_mpz_t());
  const std::int64_t limit = to_int64(q);
  const std::int64_t n = target_truncation.value_or(limit);
  if (n > limit)
    throw PushforwardError("target truncation " + std::to_string(n) +
                           " exceeds what the source truncation determines (" +
                           std::to_string(limit) + ")");
  if (n < 0)
    throw PushforwardError("negative target truncation");
  SeriesTerms out;
  const auto& target = *phi.target();
  for (const auto& [s, c] : f.terms()) {
    MonoidElement img = phi(s);
    if (target.degree(img) <= n)
      add_term(out, img, c);
  }
  return TruncatedSeries(phi.target(), f.ring(), n, std::move(out));
}

MonoidPolynomial pushforward(const MonoidPolynomial& p, const MonoidHom& phi) {
  check_monoid_match(p.monoid(), phi.source());
  SeriesTerms out;
  for (const auto& [s, c] : p.terms())
    add_term(out, phi(s), c);
  return MonoidPolynomial(phi.target(), p.ring(), std::move(out));
}

RationalSeries pushforward(const RationalSeries& r, const MonoidHom& phi) {
  check_monoid_match(r.monoid(), phi.source());
  std::vector<DenominatorFactor> fs;
  for (const auto& f : r.factors()) {
    MonoidElement img = phi(f.cls);
    if (img.is_zero() || phi.target()->degree(img) <= 0)
      throw PushforwardError("denominator class maps to a class of non-positive degree");
    fs.push_back({f.coeff, std::move(img), f.power});
  }
  return RationalSeries(pushforward(r.numerator(), phi), std::move(fs));
}

namespace {

SeriesTerms external_terms(const SeriesTerms& a, const SeriesTerms& b, const DirectSum& sum,
                           std::optional<std::int64_t> bound) {
  const auto& m = *sum.monoid;
  SeriesTerms out;
  std::vector<std::pair<MonoidElement, const KElement*>> ib;
  for (const auto& [s, c] : b)
    ib.emplace_back(sum.second(s), &c);
  for (const auto& [s1, c1] : a) {
    MonoidElement x = sum.first(s1);
    const std::int64_t dx = m.degree(x);
    for (const auto& [y, c2] : ib) {
      MonoidElement z = m.add(x, y);
      if (bound && dx + m.degree(y) > *bound)
        continue;
      add_term(out, z, c1 * *c2);
    }
  }
  return out;
}

} // namespace

TruncatedSeries external_product(const TruncatedSeries& f, const TruncatedSeries& g, const DirectSum& sum) {
  check_ring_match(f.ring(), g.ring());
  check_monoid_match(f.monoid(), sum.first.source());
  check_monoid_match(g.monoid(), sum.second.source());
  if (f.truncation() != g.truncation())
    throw SeriesMismatch("external product needs equal truncations");
  return TruncatedSeries(sum.monoid, f.ring(), f.truncation(),
                         external_terms(f.terms(), g.terms(), sum, f.truncation()));
}

TruncatedSeries external_product(const TruncatedSeries& f, const TruncatedSeries& g) {
  return external_product(f, g, direct_sum(f.monoid(), g.monoid()));
}

RationalSeries external_product(const RationalSeries& f, const RationalSeries& g, const DirectSum& sum) {
  check_ring_match(f.ring(), g.ring());
  check_monoid_match(f.monoid(), sum.first.source());
  check_monoid_match(g.monoid(), sum.second.source());
  MonoidPolynomial num(sum.monoid, f.ring(),
                       external_terms(f.numerator().terms(), g.numerator().terms(), sum, std::nullopt));
  std::vector<DenominatorFactor> fs;
  for (const auto& x : f.factors())
    fs.push_back({x.coeff, sum.first(x.cls), x.power});
  for (const auto& x : g.factors())
    fs.push_back({x.coeff, sum.second(x.cls), x.power});
  return RationalSeries(std::move(num), std::move(fs));
}

RationalSeries external_product(const RationalSeries& f, const RationalSeries& g) {
  return external_product(f, g, direct_sum(f.monoid(), g.monoid()));
}

// ---------------------------------------------------------------------------

RationalSeries localize_quotient(const RationalSeries& x, const RationalSeries& y) {
  check_monoid_match(x.monoid(), y.monoid());
  check_ring_match(x.ring(), y.ring());
  const auto& monoid = x.monoid();
  const auto& ring = x.ring();

  using Key = std::pair<MonoidElement, KElement::Terms>;
  std::map<Key, DenominatorFactor> remaining;
  for (const auto& f : x.factors())
    remaining.emplace(Key{f.cls, f.coeff.terms()}, f);

  MonoidPolynomial num = x.numerator();
  for (const auto& f : y.factors()) {
    auto it = remaining.find(Key{f.cls, f.coeff.terms()});
    unsigned have = it == remaining.end() ? 0 : it->second.power;
    if (have >= f.power) {
      it->second.power -= f.power;
      if (it->second.power == 0)
        remaining.erase(it);
    } else {
      if (it != remaining.end())
        remaining.erase(it);
      num = num * MonoidPolynomial::binomial(monoid, ring, f.cls, f.coeff).pow(f.power - have);
    }
  }

  const auto& divisor = y.numerator();
  if (!divisor.is_one()) {
    if (!divisor.is_monic())
      throw LocalizationMismatch("numerator of the divisor is not monic");
    const std::int64_t bound = num.max_degree();
    auto inv = truncated_inverse(TruncatedSeries::from_polynomial(divisor, bound));
    auto q = truncated_mul(TruncatedSeries::from_polynomial(num, bound), inv);
    MonoidPolynomial quotient(monoid, ring, q.terms());
    if (quotient * divisor != num)
      throw LocalizationMismatch("numerator division leaves a remainder");
    num = quotient;
  }

  std::vector<DenominatorFactor> fs;
  for (auto& [k, f] : remaining)
    fs.push_back(f);
  RationalSeries q(std::move(num), std::move(fs));
  if (x.is_monic() && y.is_monic() && !q.is_monic())
    throw LocalizationMismatch("quotient of monic series is not monic");
  return q;
}

// ---------------------------------------------------------------------------

MonoidPolynomial specialize(const MonoidPolynomial& p, const Specialization& s) {
  SeriesTerms out;
  for (const auto& [cls, c] : p.terms())
    add_term(out, cls, s(c));
  return MonoidPolynomial(p.monoid(), s.target(), std::move(out));
}

TruncatedSeries specialize(const TruncatedSeries& f, const Specialization& s) {
  SeriesTerms out;
  for (const auto& [cls, c] : f.terms())
    add_term(out, cls, s(c));
  return TruncatedSeries(f.monoid(), s.target(), f.truncation(), std::move(out));
}

RationalSeries specialize(const RationalSeries& r, const Specialization& s) {
  std::vector<DenominatorFactor> fs;
  for (const auto& f : r.factors())
    fs.push_back({s(f.coeff), f.cls, f.power});
  return RationalSeries(specialize(r.numerator(), s), std::move(fs));
}

// ---------------------------------------------------------------------------
// Catalogued curve zetas

KRing curve_ring(unsigned genus, bool a1_homotopy) {
  std::vector<std::string> symbols;
  for (unsigned i = 1; i <= 2 * genus; ++i)
    symbols.push_back("a" + std::to_string(i));
  return KRingSpec::standard(symbols, a1_homotopy);
}

RationalSeries curve_zeta(unsigned genus, const KRing& ring, std::vector<std::string> symbols) {
  if (symbols.empty())
    for (unsigned i = 1; i <= 2 * genus; ++i)
      symbols.push_back("a" + std::to_string(i));
  if (symbols.size() != 2 * genus)
    throw RingSpecError("genus " + std::to_string(genus) + " needs " + std::to_string(2 * genus) +
                        " numerator symbols");
  auto monoid = natural_numbers("t");
  const MonoidElement t = monoid->generator(0);
  SeriesTerms num;
  num.emplace(monoid->zero(), KElement(ring, 1));
  for (unsigned i = 0; i < symbols.size(); ++i)
    num.emplace(monoid->scale(t, i + 1), KElement::generator(ring, symbols[i]));
  KElement L = KElement::generator(ring, KRingSpec::kLefschetz);
  return RationalSeries(MonoidPolynomial(monoid, ring, std::move(num)),
                        {{KElement(ring, 1), t, 1}, {L, t, 1}});
}

RationalSeries punctured_p1_zeta(unsigned r, const KRing& ring) {
  if (!ring->a1_homotopy())
    throw SpecMismatch("punctured P1 zeta is only closed-form in the A1-homotopy quotient");
  auto monoid = natural_numbers("t");
  const MonoidElement t = monoid->generator(0);
  if (r >= 2)
    return RationalSeries(punctured_p1_polynomial(r, ring));
  return RationalSeries::geometric(monoid, ring, t, 2 - r);
}

MonoidPolynomial punctured_p1_polynomial(unsigned r, const KRing& ring) {
  if (!ring->a1_homotopy())
    throw SpecMismatch("punctured P1 zeta is only closed-form in the A1-homotopy quotient");
  if (r < 2)
    throw UnsupportedStratum("P1 minus " + std::to_string(r) + " points has a non-polynomial zeta");
  auto monoid = natural_numbers("t");
  return MonoidPolynomial::binomial(monoid, ring, monoid->generator(0), KElement(ring, 1)).pow(r - 2);
}

} // namespace mcs
