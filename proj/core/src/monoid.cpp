#include "mcs/monoid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>

#include "mcs/error.hpp"

namespace mcs {

namespace {
std::atomic<std::size_t> g_max_terms{1'000'000};

std::int64_t floor_mod(const mpz_class& y, std::int64_t d) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), y.get_mpz_t(), mpz_class(static_cast<long>(d)).get_mpz_t());
  return r.get_si();
}
} // namespace

std::size_t max_terms() { return g_max_terms.load(); }
void set_max_terms(std::size_t n) { g_max_terms.store(n); }

bool MonoidElement::is_zero() const {
  return std::all_of(free.begin(), free.end(), [](auto x) { return x == 0; }) &&
         std::all_of(torsion.begin(), torsion.end(), [](auto x) { return x == 0; });
}

// ---------------------------------------------------------------------------

AbelianGroupPresentation::AbelianGroupPresentation(std::size_t num_generators, IntMatrix relations)
    : m_(num_generators), relations_(std::move(relations)) {
  if (relations_.rows() > 0 && relations_.cols() != m_)
    throw PresentationError("relation length does not match generator count");
  if (relations_.rows() == 0)
    relations_ = IntMatrix(0, m_);
  snf_ = smith_normal_form(relations_);
  v_inverse_ = unimodular_inverse(snf_.V);
  for (std::size_t j = 0; j < snf_.rank(); ++j)
    if (snf_.invariants[j] > 1) {
      torsion_.push_back(to_int64(snf_.invariants[j]));
      torsion_columns_.push_back(j);
    }
}

AbelianGroupPresentation AbelianGroupPresentation::from_relations(
    std::size_t num_generators, const std::vector<std::vector<std::int64_t>>& relations) {
  return AbelianGroupPresentation(num_generators, IntMatrix::from_rows(relations, num_generators));
}

MonoidElement AbelianGroupPresentation::from_coordinates(const std::vector<mpz_class>& y) const {
  MonoidElement e;
  e.free.reserve(free_rank());
  for (std::size_t j = snf_.rank(); j < m_; ++j)
    e.free.push_back(to_int64(y[j]));
  for (std::size_t t = 0; t < torsion_.size(); ++t)
    e.torsion.push_back(floor_mod(y[torsion_columns_[t]], torsion_[t]));
  return e;
}

MonoidElement AbelianGroupPresentation::element_of(std::span<const std::int64_t> word) const {
  std::vector<mpz_class> w(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    w[i] = static_cast<long>(word[i]);
  return element_of(w);
}

MonoidElement AbelianGroupPresentation::element_of(const std::vector<mpz_class>& word) const {
  if (word.size() != m_)
    throw PresentationError("word length " + std::to_string(word.size()) +
                            " does not match generator count " + std::to_string(m_));
  std::vector<mpz_class> y(m_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    if (word[i] == 0)
      continue;
    for (std::size_t j = 0; j < m_; ++j)
      y[j] += word[i] * snf_.V(i, j);
  }
  return from_coordinates(y);
}

std::vector<mpz_class> AbelianGroupPresentation::lift(const MonoidElement& e) const {
  check(e);
  std::vector<mpz_class> y(m_, 0);
  for (std::size_t j = 0; j < e.free.size(); ++j)
    y[snf_.rank() + j] = static_cast<long>(e.free[j]);
  for (std::size_t t = 0; t < e.torsion.size(); ++t)
    y[torsion_columns_[t]] = static_cast<long>(e.torsion[t]);
  std::vector<mpz_class> x(m_, 0);
  for (std::size_t j = 0; j < m_; ++j) {
    if (y[j] == 0)
      continue;
    for (std::size_t i = 0; i < m_; ++i)
      x[i] += y[j] * v_inverse_(j, i);
  }
  return x;
}

MonoidElement AbelianGroupPresentation::zero() const {
  return MonoidElement{std::vector<std::int64_t>(free_rank(), 0),
                       std::vector<std::int64_t>(torsion_.size(), 0)};
}

void AbelianGroupPresentation::check(const MonoidElement& e) const {
  if (e.free.size() != free_rank() || e.torsion.size() != torsion_.size())
    throw PresentationError("element coordinates do not match the group shape");
  for (std::size_t t = 0; t < torsion_.size(); ++t)
    if (e.torsion[t] < 0 || e.torsion[t] >= torsion_[t])
      throw PresentationError("torsion residue out of range");
}

namespace {
std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("monoid coordinate overflow");
  return r;
}
std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("monoid coordinate overflow");
  return r;
}
} // namespace

MonoidElement AbelianGroupPresentation::add(const MonoidElement& a, const MonoidElement& b) const {
  MonoidElement r = a;
  for (std::size_t i = 0; i < r.free.size(); ++i)
    r.free[i] = add_checked(r.free[i], b.free[i]);
  for (std::size_t t = 0; t < r.torsion.size(); ++t)
    r.torsion[t] = (r.torsion[t] + b.torsion[t]) % torsion_[t];
  return r;
}

MonoidElement AbelianGroupPresentation::scale(const MonoidElement& a, std::int64_t k) const {
  MonoidElement r = a;
  for (auto& x : r.free)
    x = mul_checked(x, k);
  for (std::size_t t = 0; t < r.torsion.size(); ++t) {
    mpz_class v = mpz_class(static_cast<long>(r.torsion[t])) * static_cast<long>(k);
    mpz_class d = static_cast<long>(torsion_[t]);
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    r.torsion[t] = v.get_si();
  }
  return r;
}

MonoidElement AbelianGroupPresentation::subtract(const MonoidElement& a, const MonoidElement& b) const {
  return add(a, scale(b, -1));
}

// ---------------------------------------------------------------------------

std::vector<std::int64_t> positive_grading(const AbelianGroupPresentation& group,
                                           const std::vector<MonoidElement>& generators) {
  const std::size_t r = group.free_rank();
  std::vector<std::vector<mpq_class>> vectors;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (std::all_of(g.free.begin(), g.free.end(), [](auto x) { return x == 0; }))
      throw FiniteFiberError("generator " + std::to_string(i) +
                             " has zero free part; no grading can be positive on it");
    std::vector<mpq_class> v(r);
    for (std::size_t j = 0; j < r; ++j)
      v[j] = static_cast<long>(g.free[j]);
    vectors.push_back(std::move(v));
  }
  auto w = minimal_positive_functional(vectors, r);
  if (!w)
    throw FiniteFiberError("no linear functional is positive on every generator");
  auto z = primitive_integer_multiple(*w);
  std::vector<std::int64_t> grading(r);
  for (std::size_t j = 0; j < r; ++j)
    grading[j] = to_int64(z[j]);
  return grading;
}

namespace {

// Default printing basis: a single variable for rank-1 torsion-free groups,
// otherwise the first generators that form a Z-basis (if any).
std::vector<BasisVariable> default_basis(const AbelianGroupPresentation& group,
                                         const std::vector<std::string>& names,
                                         const std::vector<MonoidElement>& gens,
                                         const std::vector<std::int64_t>& grading) {
  const std::size_t r = group.free_rank();
  if (!group.torsion_invariants().empty() || r == 0)
    return {};
  if (r == 1) {
    MonoidElement unit{{grading[0] >= 0 ? 1 : -1}, {}};
    return {{gens.size() == 1 ? names[0] : std::string("t"), unit}};
  }
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < gens.size() && chosen.size() < r; ++i) {
    IntMatrix m(chosen.size() + 1, r);
    for (std::size_t a = 0; a < chosen.size(); ++a)
      for (std::size_t j = 0; j < r; ++j)
        m(a, j) = static_cast<long>(gens[chosen[a]].free[j]);
    for (std::size_t j = 0; j < r; ++j)
      m(chosen.size(), j) = static_cast<long>(gens[i].free[j]);
    auto s = smith_normal_form(m);
    bool saturated = s.rank() == chosen.size() + 1 &&
                     std::all_of(s.invariants.begin(), s.invariants.end(),
                                 [](const mpz_class& d) { return d == 1; });
    if (saturated)
      chosen.push_back(i);
  }
  if (chosen.size() != r)
    return {};
  std::vector<BasisVariable> basis;
  for (auto i : chosen)
    basis.push_back({names[i], gens[i]});
  return basis;
}

} // namespace

GradedMonoid::GradedMonoid(AbelianGroupPresentation group, std::vector<std::string> names,
                           std::optional<std::vector<std::int64_t>> grading)
    : group_(std::move(group)), names_(std::move(names)) {
  if (names_.size() != group_.num_generators())
    throw PresentationError("expected " + std::to_string(group_.num_generators()) +
                            " generator names, got " + std::to_string(names_.size()));
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size())
    throw PresentationError("duplicate generator names");

  const std::size_t m = group_.num_generators();
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::int64_t> word(m, 0);
    word[i] = 1;
    generators_.push_back(group_.element_of(word));
  }

  if (grading) {
    if (grading->size() != group_.free_rank())
      throw PresentationError("grading length does not match free rank");
    grading_ = *grading;
    for (std::size_t i = 0; i < m; ++i)
      if (degree(generators_[i]) <= 0)
        throw FiniteFiberError("grading is not positive on generator '" + names_[i] + "'");
  } else {
    grading_ = positive_grading(group_, generators_);
  }
  display_basis_ = default_basis(group_, names_, generators_, grading_);
}

std::int64_t GradedMonoid::degree(const MonoidElement& e) const {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < grading_.size(); ++j)
    d = add_checked(d, mul_checked(grading_[j], e.free[j]));
  return d;
}

std::optional<std::size_t> GradedMonoid::generator_index(const MonoidElement& e) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == e)
      return i;
  return std::nullopt;
}

MonoidElement GradedMonoid::canonicalize(std::span<const std::int64_t> exponents) const {
  if (exponents.size() != generators_.size())
    throw PresentationError("exponent vector length does not match generator count");
  for (auto x : exponents)
    if (x < 0)
      throw PresentationError("exponents of a word must be non-negative");
  return group_.element_of(exponents);
}

bool GradedMonoid::contains(const MonoidElement& e) const {
  group_.check(e);
  std::map<MonoidElement, bool> memo;
  auto rec = [&](auto&& self, const MonoidElement& x) -> bool {
    if (x.is_zero())
      return true;
    if (degree(x) <= 0)
      return false;
    if (auto it = memo.find(x); it != memo.end())
      return it->second;
    bool found = false;
    for (const auto& g : generators_)
      if (self(self, group_.subtract(x, g))) {
        found = true;
        break;
      }
    memo.emplace(x, found);
    if (memo.size() > max_terms())
      throw TermLimitExceeded("membership search exceeded " + std::to_string(max_terms()) +
                              " states");
    return found;
  };
  return rec(rec, e);
}

std::vector<std::pair<MonoidElement, std::int64_t>> GradedMonoid::enumerate(std::int64_t bound) const {
  std::set<MonoidElement> seen;
  std::vector<MonoidElement> frontier;
  if (bound >= 0) {
    seen.insert(zero());
    frontier.push_back(zero());
  }
  while (!frontier.empty()) {
    std::vector<MonoidElement> next;
    for (const auto& x : frontier) {
      const std::int64_t dx = degree(x);
      for (const auto& g : generators_) {
        if (dx + degree(g) > bound)
          continue;
        MonoidElement y = add(x, g);
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
          if (seen.size() > max_terms())
            throw TermLimitExceeded("enumeration exceeded " + std::to_string(max_terms()) +
                                    " elements");
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<MonoidElement, std::int64_t>> out;
  out.reserve(seen.size());
  for (const auto& x : seen)
    out.emplace_back(x, degree(x));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

void GradedMonoid::set_display_basis(std::vector<BasisVariable> basis) {
  const std::size_t r = group_.free_rank();
  if (!group_.torsion_invariants().empty())
    throw PresentationError("display basis requires a torsion-free group");
  if (basis.size() != r)
    throw PresentationError("display basis must have " + std::to_string(r) + " variables");
  IntMatrix b(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    group_.check(basis[i].element);
    for (std::size_t j = 0; j < r; ++j)
      b(i, j) = static_cast<long>(basis[i].element.free[j]);
  }
  mpz_class det = determinant(b);
  if (det != 1 && det != -1)
    throw PresentationError("display basis is not a Z-basis");
  display_basis_ = std::move(basis);
}

bool same_monoid(const MonoidPtr& a, const MonoidPtr& b) {
  return a == b || (a && b && *a == *b);
}

MonoidPtr natural_numbers(const std::string& name) {
  return std::make_shared<const GradedMonoid>(AbelianGroupPresentation(1, IntMatrix(0, 1)),
                                              std::vector<std::string>{name},
                                              std::vector<std::int64_t>{1});
}

MonoidPtr free_commutative_monoid(const std::vector<std::string>& names) {
  return std::make_shared<const GradedMonoid>(AbelianGroupPresentation(names.size(), IntMatrix(0, names.size())),
                                              names);
}

std::optional<std::vector<std::int64_t>> basis_coordinates(const GradedMonoid& monoid,
                                                           const std::vector<BasisVariable>& basis,
                                                           const MonoidElement& e) {
  const std::size_t r = monoid.group().free_rank();
  if (basis.size() != r || !monoid.group().torsion_invariants().empty())
    return std::nullopt;
  IntMatrix b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      b(i, j) = static_cast<long>(basis[i].element.free[j]);
  std::vector<mpz_class> v(r);
  for (std::size_t j = 0; j < r; ++j)
    v[j] = static_cast<long>(e.free[j]);
  auto x = solve_left(b, v);
  if (!x)
    return std::nullopt;
  std::vector<std::int64_t> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    if ((*x)[i].get_den() != 1)
      return std::nullopt;
    out[i] = to_int64((*x)[i].get_num());
  }
  return out;
}

std::optional<std::vector<std::int64_t>> basis_coordinates(const GradedMonoid& monoid,
                                                           const MonoidElement& e) {
  if (monoid.display_basis().empty() && monoid.group().free_rank() > 0)
    return std::nullopt;
  return basis_coordinates(monoid, monoid.display_basis(), e);
}

// ---------------------------------------------------------------------------

MonoidHom::MonoidHom(MonoidPtr source, MonoidPtr target, std::vector<MonoidElement> generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
  if (images_.size() != source_->generator_count())
    throw MonoidHomError("expected " + std::to_string(source_->generator_count()) +
                         " generator images, got " + std::to_string(images_.size()));
  for (const auto& img : images_)
    target_->group().check(img);

  const auto& rel = source_->group().relations();
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    MonoidElement sum = target_->zero();
    for (std::size_t j = 0; j < rel.cols(); ++j)
      if (rel(r, j) != 0)
        sum = target_->add(sum, target_->scale(images_[j], to_int64(rel(r, j))));
    if (!sum.is_zero())
      throw MonoidHomError("relation " + std::to_string(r) + " of the source does not map to zero");
  }
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!target_->contains(images_[i]))
      throw MonoidHomError("image of generator '" + source_->names()[i] +
                           "' is not a sum of target generators");
}

MonoidHom MonoidHom::identity(const MonoidPtr& m) {
  return MonoidHom(m, m, m->generators());
}

MonoidElement MonoidHom::operator()(const MonoidElement& e) const {
  auto word = source_->group().lift(e);
  MonoidElement r = target_->zero();
  for (std::size_t j = 0; j < word.size(); ++j)
    if (word[j] != 0)
      r = target_->add(r, target_->scale(images_[j], to_int64(word[j])));
  return r;
}

std::pair<std::int64_t, std::int64_t> MonoidHom::degree_ratio() const {
  std::pair<std::int64_t, std::int64_t> best{0, 1};
  bool first = true;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    std::int64_t num = target_->degree(images_[i]);
    std::int64_t den = source_->degree(source_->generator(i));
    if (first || mpz_class(num) * best.second < mpz_class(best.first) * den) {
      best = {num, den};
      first = false;
    }
  }
  if (first)
    return {1, 1};
  std::int64_t g = std::gcd(best.first, best.second);
  if (g > 1)
    best = {best.first / g, best.second / g};
  return best;
}

bool MonoidHom::grading_compatible() const {
  return std::all_of(images_.begin(), images_.end(),
                     [&](const MonoidElement& e) { return target_->degree(e) > 0; });
}

namespace {

// Free-part functional of `group` agreeing with the given per-generator
// weights; the weights must vanish on every relation.
std::vector<std::int64_t> grading_from_weights(const AbelianGroupPresentation& group,
                                               const std::vector<mpz_class>& weights) {
  const auto& snf = group.snf();
  const IntMatrix vinv = unimodular_inverse(snf.V);
  const std::size_t m = group.num_generators();
  std::vector<std::int64_t> w;
  for (std::size_t j = snf.rank(); j < m; ++j) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < m; ++i)
      s += vinv(j, i) * weights[i];
    w.push_back(to_int64(s));
  }
  return w;
}

} // namespace

DirectSum direct_sum(const MonoidPtr& a, const MonoidPtr& b) {
  const std::size_t ma = a->generator_count();
  const std::size_t mb = b->generator_count();
  const auto& ra = a->group().relations();
  const auto& rb = b->group().relations();
  IntMatrix rel(ra.rows() + rb.rows(), ma + mb);
  for (std::size_t r = 0; r < ra.rows(); ++r)
    for (std::size_t c = 0; c < ma; ++c)
      rel(r, c) = ra(r, c);
  for (std::size_t r = 0; r < rb.rows(); ++r)
    for (std::size_t c = 0; c < mb; ++c)
      rel(ra.rows() + r, ma + c) = rb(r, c);
  AbelianGroupPresentation group(ma + mb, std::move(rel));

  std::set<std::string> na(a->names().begin(), a->names().end());
  std::set<std::string> nb(b->names().begin(), b->names().end());
  std::vector<std::string> names;
  for (const auto& n : a->names())
    names.push_back(nb.count(n) ? n + "1" : n);
  for (const auto& n : b->names())
    names.push_back(na.count(n) ? n + "2" : n);

  std::vector<mpz_class> weights;
  for (const auto& g : a->generators())
    weights.emplace_back(static_cast<long>(a->degree(g)));
  for (const auto& g : b->generators())
    weights.emplace_back(static_cast<long>(b->degree(g)));

  auto sum = std::make_shared<GradedMonoid>(group, names, grading_from_weights(group, weights));

  std::vector<MonoidElement> ia(sum->generators().begin(), sum->generators().begin() + static_cast<std::ptrdiff_t>(ma));
  std::vector<MonoidElement> ib(sum->generators().begin() + static_cast<std::ptrdiff_t>(ma), sum->generators().end());
  MonoidPtr s = sum;
  MonoidHom first(a, s, ia);
  MonoidHom second(b, s, ib);

  // Combined printing basis when both summands have one.
  const auto& ba = a->display_basis();
  const auto& bb = b->display_basis();
  if (sum->group().torsion_invariants().empty() && ba.size() == a->group().free_rank() &&
      bb.size() == b->group().free_rank() && (!ba.empty() || !bb.empty())) {
    std::set<std::string> sa, sb;
    for (const auto& v : ba)
      sa.insert(v.name);
    for (const auto& v : bb)
      sb.insert(v.name);
    std::vector<BasisVariable> basis;
    for (const auto& v : ba)
      basis.push_back({sb.count(v.name) ? v.name + "1" : v.name, first(v.element)});
    for (const auto& v : bb)
      basis.push_back({sa.count(v.name) ? v.name + "2" : v.name, second(v.element)});
    sum->set_display_basis(std::move(basis));
  }
  return DirectSum{s, std::move(first), std::move(second)};
}

} // namespace mcs
