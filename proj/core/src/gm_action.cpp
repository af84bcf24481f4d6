#include "mcs/gm_action.hpp"

#include "mcs/error.hpp"

namespace mcs {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

void check_class(const GradedMonoid& m, const MonoidElement& e, const std::string& label) {
  m.group().check(e);
  if (e.is_zero())
    throw UnsupportedStratum("stratum " + label + " has the zero class");
}

} // namespace

void GmDecomposition::check() const {
  if (!monoid || !ring)
    throw UnsupportedStratum("decomposition needs a monoid and a ring");
  for (const auto& s : strata) {
    std::visit(overloaded{
                   [&](const FixedComponent& f) {
                     if (!same_monoid(f.series.monoid(), monoid))
                       throw UnsupportedStratum("stratum " + s.label + " uses another monoid");
                     if (!same_ring(f.series.ring(), ring))
                       throw UnsupportedStratum("stratum " + s.label + " uses another ring");
                     if (!f.series.is_monic())
                       throw UnsupportedStratum("stratum " + s.label + " has a non-monic series");
                   },
                   [&](const OrbitFamilyOverPoint& o) { check_class(*monoid, o.beta, s.label); },
                   [&](const OrbitFamilyOverPuncturedP1& o) {
                     check_class(*monoid, o.fiber_class, s.label);
                     if (o.punctures == 0)
                       throw UnsupportedStratum("stratum " + s.label + " needs at least one puncture");
                   }},
               s.kind);
  }
}

RationalSeries stratum_factor(const GmDecomposition& d, const GmStratum& s, std::size_t p) {
  auto one = MonoidPolynomial::one(d.monoid, d.ring);
  if (s.cycle_dimension != p)
    return RationalSeries(one);
  return std::visit(
      overloaded{
          [&](const FixedComponent& f) { return f.series; },
          [&](const OrbitFamilyOverPoint& o) { return RationalSeries::geometric(d.monoid, d.ring, o.beta); },
          [&](const OrbitFamilyOverPuncturedP1& o) {
            if (o.punctures < 2)
              throw UnsupportedStratum("stratum " + s.label + ": family over P1 minus " +
                                       std::to_string(o.punctures) + " point(s) has no closed factor");
            auto b = MonoidPolynomial::binomial(d.monoid, d.ring, o.fiber_class, KElement(d.ring, 1));
            return RationalSeries(b.pow(o.punctures - 2));
          }},
      s.kind);
}

RationalSeries assemble_mc(const GmDecomposition& decomp, std::size_t p) {
  decomp.check();
  RationalSeries out(MonoidPolynomial::one(decomp.monoid, decomp.ring));
  for (const auto& s : decomp.strata)
    out = out * stratum_factor(decomp, s, p);
  return out;
}

MonoidPtr colinear_monoid(unsigned r) {
  std::vector<std::string> names{"t0"};
  for (unsigned i = 1; i <= r; ++i)
    names.push_back("s" + std::to_string(i));
  return free_commutative_monoid(names);
}

MonoidElement colinear_class(const GradedMonoid& monoid, std::int64_t a, const std::vector<std::int64_t>& c) {
  if (c.size() + 1 != monoid.generator_count())
    throw DimensionError("expected " + std::to_string(monoid.generator_count() - 1) +
                         " exceptional coefficients");
  std::vector<std::int64_t> word{a};
  for (auto ci : c)
    word.push_back(a + ci);
  return monoid.group().element_of(word);
}

GmDecomposition colinear_blowup_data(unsigned r, const KRing& ring) {
  if (r < 2)
    throw UnsupportedStratum("colinear blow-up needs at least 2 points, got " + std::to_string(r));
  GmDecomposition d{colinear_monoid(r), ring, {}};
  const auto& m = *d.monoid;
  d.strata.push_back({"L", 1, FixedComponent{RationalSeries::geometric(d.monoid, ring, m.generator(0))}});
  for (unsigned i = 0; i < r; ++i) {
    std::vector<std::int64_t> c(r, 0);
    c[i] = -1;
    d.strata.push_back({"X" + std::to_string(i + 1), 1, OrbitFamilyOverPoint{colinear_class(m, 1, c)}});
  }
  for (unsigned i = 0; i < r; ++i)
    d.strata.push_back({"E" + std::to_string(i + 1), 1, OrbitFamilyOverPoint{m.generator(i + 1)}});
  d.strata.push_back({"X0", 1, OrbitFamilyOverPuncturedP1{r, colinear_class(m, 1, std::vector<std::int64_t>(r, 0))}});
  return d;
}

} // namespace mcs
