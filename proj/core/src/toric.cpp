#include "mcs/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mcs/error.hpp"

namespace mcs {

namespace {

std::string cone_str(const Cone& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i)
    s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

IntMatrix ray_matrix(const std::vector<std::vector<std::int64_t>>& rays, const Cone& c, std::size_t n) {
  IntMatrix m(c.size(), n);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = static_cast<long>(rays[c[i]][j]);
  return m;
}

// Z-basis of the integer vectors orthogonal to every ray in c.
std::vector<std::vector<mpz_class>> orthogonal_basis(const std::vector<std::vector<std::int64_t>>& rays,
                                                     const Cone& c, std::size_t n) {
  if (c.empty()) {
    std::vector<std::vector<mpz_class>> id(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      id[i][i] = 1;
    return id;
  }
  return integer_kernel(ray_matrix(rays, c, n));
}

// Is there u vanishing on `zero` rays with <u,v> >= 1 on `positive` rays and
// <u,v> <= -1 on `negative` rays?
bool separable(const std::vector<std::vector<std::int64_t>>& rays, std::size_t n, const Cone& zero,
               const std::vector<std::size_t>& positive, const std::vector<std::size_t>& negative) {
  if (positive.empty() && negative.empty())
    return true;
  auto basis = orthogonal_basis(rays, zero, n);
  std::vector<std::vector<mpq_class>> vectors;
  auto push = [&](std::size_t ray, int sign) {
    std::vector<mpq_class> v(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      mpz_class s = 0;
      for (std::size_t k = 0; k < n; ++k)
        s += basis[j][k] * static_cast<long>(rays[ray][k]);
      v[j] = sign * s;
    }
    vectors.push_back(std::move(v));
  };
  for (auto r : positive)
    push(r, 1);
  for (auto r : negative)
    push(r, -1);
  return minimal_positive_functional(vectors, basis.size()).has_value();
}

std::vector<std::size_t> set_minus(const Cone& a, const Cone& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const Cone& small, const Cone& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

Fan Fan::validate(std::vector<std::vector<std::int64_t>> rays, std::vector<Cone> maximal_cones,
                  std::vector<std::string> ray_names) {
  if (rays.empty())
    throw FanError("fan has no rays");
  Fan fan;
  fan.dim_ = rays.front().size();
  const std::size_t n = fan.dim_;
  if (n == 0)
    throw FanError("fan dimension must be positive");

  std::set<std::vector<std::int64_t>> distinct;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& v = rays[i];
    if (v.size() != n)
      throw FanError("ray " + std::to_string(i) + " has the wrong dimension");
    std::int64_t g = 0;
    for (auto x : v)
      g = std::gcd(g, x);
    if (g == 0)
      throw FanError("ray " + std::to_string(i) + " is zero");
    if (g != 1)
      throw FanError("ray " + std::to_string(i) + " is not primitive");
    if (!distinct.insert(v).second)
      throw FanError("ray " + std::to_string(i) + " is repeated");
  }
  if (!ray_names.empty() && ray_names.size() != rays.size())
    throw FanError("ray_names must name every ray");

  std::set<Cone> seen;
  std::vector<bool> used(rays.size(), false);
  for (auto& c : maximal_cones) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw FanError("cone " + cone_str(c) + " repeats a ray");
    for (auto r : c) {
      if (r >= rays.size())
        throw FanError("cone " + cone_str(c) + " references a missing ray");
      used[r] = true;
    }
    if (c.size() > 16)
      throw FanError("cone " + cone_str(c) + " has too many rays");
    if (!seen.insert(c).second)
      throw FanError("cone " + cone_str(c) + " is listed twice");
    if (rational_rank(ray_matrix(rays, c, n)) != n)
      throw FanError("maximal cone " + cone_str(c) + " is not full-dimensional");
    if (!separable(rays, n, {}, c, {}))
      throw FanError("cone " + cone_str(c) + " is not strongly convex");
  }
  if (maximal_cones.empty())
    throw FanError("fan has no maximal cones");
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!used[i])
      throw FanError("ray " + std::to_string(i) + " lies in no maximal cone");

  for (std::size_t i = 0; i < maximal_cones.size(); ++i)
    for (std::size_t j = i + 1; j < maximal_cones.size(); ++j) {
      const auto& a = maximal_cones[i];
      const auto& b = maximal_cones[j];
      Cone common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!separable(rays, n, common, set_minus(a, common), set_minus(b, common)))
        throw FanError("cones " + cone_str(a) + " and " + cone_str(b) +
                       " do not meet in a common face");
    }

  fan.rays_ = std::move(rays);
  fan.maximal_ = std::move(maximal_cones);
  fan.names_ = std::move(ray_names);

  // Faces of each maximal cone: subsets F admitting u = 0 on F, u > 0 off F.
  std::vector<std::set<Cone>> by_dim(n + 1);
  for (const auto& c : fan.maximal_) {
    const std::size_t k = c.size();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      Cone f;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (1u << b))
          f.push_back(c[b]);
      if (!separable(fan.rays_, n, f, set_minus(c, f), {}))
        continue;
      by_dim[fan.cone_dim(f)].insert(f);
    }
  }
  fan.cones_by_dim_.resize(n + 1);
  for (std::size_t d = 0; d <= n; ++d)
    fan.cones_by_dim_[d].assign(by_dim[d].begin(), by_dim[d].end());

  // Completeness: every facet in exactly two maximal cones, adjacency connected.
  const auto& facets = fan.cones_by_dim_[n - 1];
  std::vector<std::size_t> parent(fan.maximal_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : facets) {
    std::vector<std::size_t> owners;
    for (std::size_t i = 0; i < fan.maximal_.size(); ++i)
      if (is_subset(f, fan.maximal_[i]))
        owners.push_back(i);
    if (owners.size() != 2)
      throw FanError("incomplete: facet " + cone_str(f) + " lies in " +
                     std::to_string(owners.size()) + " maximal cone(s)");
    parent[find(owners[0])] = find(owners[1]);
  }
  for (std::size_t i = 1; i < fan.maximal_.size(); ++i)
    if (find(i) != find(0))
      throw FanError("incomplete: maximal cones are not connected");
  return fan;
}

const std::vector<Cone>& Fan::cones_of_dim(std::size_t k) const {
  if (k > dim_)
    throw DimensionError("cone dimension " + std::to_string(k) + " exceeds fan dimension");
  return cones_by_dim_[k];
}

std::size_t Fan::cone_dim(const Cone& c) const {
  if (c.empty())
    return 0;
  return rational_rank(ray_matrix(rays_, c, dim_));
}

bool Fan::is_smooth(const Cone& c) const {
  if (c.size() != cone_dim(c))
    return false;
  // Rays extend to a Z-basis iff the Smith invariants are all 1.
  auto s = smith_normal_form(ray_matrix(rays_, c, dim_));
  return std::all_of(s.invariants.begin(), s.invariants.end(),
                     [](const mpz_class& d) { return d == 1; });
}

// ---------------------------------------------------------------------------

OrbitClassMonoid chow_presentation(const Fan& fan, std::size_t p) {
  const std::size_t n = fan.dim();
  if (p > n)
    throw DimensionError("cycle dimension " + std::to_string(p) + " exceeds " + std::to_string(n));
  const std::size_t c = n - p;
  OrbitClassMonoid out;
  out.p = p;
  out.orbit_cones = fan.cones_of_dim(c);
  const auto& gens = out.orbit_cones;

  std::vector<std::vector<std::int64_t>> relations;
  if (c >= 1) {
    for (const auto& tau : fan.cones_of_dim(c - 1)) {
      auto basis = orthogonal_basis(fan.rays(), tau, n);
      std::vector<std::vector<std::int64_t>> rows(basis.size(), std::vector<std::int64_t>(gens.size(), 0));
      bool any = false;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto& sigma = gens[g];
        if (!is_subset(tau, sigma))
          continue;
        // Image of a ray of sigma outside tau in N / N_tau; its primitive
        // multiple generates N_sigma / N_tau.
        std::size_t v = set_minus(sigma, tau).front();
        std::vector<mpz_class> img(basis.size());
        mpz_class gcd_all = 0;
        for (std::size_t j = 0; j < basis.size(); ++j) {
          for (std::size_t k = 0; k < n; ++k)
            img[j] += basis[j][k] * static_cast<long>(fan.rays()[v][k]);
          gcd_all = gcd(gcd_all, img[j]);
        }
        for (std::size_t j = 0; j < basis.size(); ++j)
          rows[j][g] = to_int64(img[j] / gcd_all);
        any = true;
      }
      if (!any)
        continue;
      for (auto& r : rows)
        if (std::any_of(r.begin(), r.end(), [](auto x) { return x != 0; }))
          relations.push_back(std::move(r));
    }
  }

  std::vector<std::string> names;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (c == 1 && !fan.ray_names().empty())
      names.push_back(fan.ray_names()[gens[g].front()]);
    else if (c == 1)
      names.push_back("D" + std::to_string(gens[g].front() + 1));
    else if (c == n)
      names.push_back("P" + std::to_string(g + 1));
    else
      names.push_back("V" + std::to_string(g + 1));
  }

  auto group = AbelianGroupPresentation::from_relations(gens.size(), relations);
  out.monoid = std::make_shared<const GradedMonoid>(std::move(group), std::move(names));
  for (std::size_t g = 0; g < gens.size(); ++g)
    out.class_of_orbit.emplace(gens[g], out.monoid->generator(g));
  return out;
}

MonoidElement degree_class(const Fan& fan, const Cone& cone, std::size_t p) {
  if (p > fan.dim())
    throw DimensionError("cycle dimension exceeds fan dimension");
  Cone sorted = cone;
  std::sort(sorted.begin(), sorted.end());
  if (fan.cone_dim(sorted) != fan.dim() - p)
    throw DimensionError("orbit of cone " + cone_str(sorted) + " does not have dimension " +
                         std::to_string(p));
  auto classes = chow_presentation(fan, p);
  auto it = classes.class_of_orbit.find(sorted);
  if (it == classes.class_of_orbit.end())
    throw DimensionError("cone " + cone_str(sorted) + " is not a cone of the fan");
  return it->second;
}

RationalSeries mc_series_toric(const OrbitClassMonoid& classes, const KRing& ring) {
  std::vector<DenominatorFactor> factors;
  for (const auto& cone : classes.orbit_cones)
    factors.push_back({KElement(ring, 1), classes.class_of_orbit.at(cone), 1});
  return RationalSeries(MonoidPolynomial::one(classes.monoid, ring), std::move(factors));
}

RationalSeries mc_series_toric(const Fan& fan, std::size_t p, const KRing& ring) {
  return mc_series_toric(chow_presentation(fan, p), ring);
}

// ---------------------------------------------------------------------------
// Builders

Fan projective_space_fan(std::size_t n) {
  if (n == 0)
    throw FanError("projective space dimension must be positive");
  std::vector<std::vector<std::int64_t>> rays;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.emplace_back(n, -1);
  std::vector<Cone> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip)
        c.push_back(i);
    cones.push_back(c);
  }
  return Fan::validate(std::move(rays), std::move(cones));
}

Fan product_fan(const Fan& a, const Fan& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::vector<std::int64_t>> rays;
  for (const auto& r : a.rays()) {
    auto v = r;
    v.resize(na + nb, 0);
    rays.push_back(v);
  }
  for (const auto& r : b.rays()) {
    std::vector<std::int64_t> v(na, 0);
    v.insert(v.end(), r.begin(), r.end());
    rays.push_back(v);
  }
  const std::size_t offset = a.rays().size();
  std::vector<Cone> cones;
  for (const auto& ca : a.maximal_cones())
    for (const auto& cb : b.maximal_cones()) {
      Cone c = ca;
      for (auto i : cb)
        c.push_back(i + offset);
      cones.push_back(c);
    }
  std::vector<std::string> names;
  if (!a.ray_names().empty() && !b.ray_names().empty()) {
    names = a.ray_names();
    names.insert(names.end(), b.ray_names().begin(), b.ray_names().end());
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size())
      names.clear();
  }
  return Fan::validate(std::move(rays), std::move(cones), std::move(names));
}

Fan blowup_at_fixed_point(const Fan& fan, const Cone& maximal_cone, const std::string& new_ray_name) {
  Cone sigma = maximal_cone;
  std::sort(sigma.begin(), sigma.end());
  auto it = std::find(fan.maximal_cones().begin(), fan.maximal_cones().end(), sigma);
  if (it == fan.maximal_cones().end())
    throw BlowupError("cone " + cone_str(sigma) + " is not a maximal cone");
  if (!fan.is_smooth(sigma))
    throw BlowupError("cone " + cone_str(sigma) + " is not smooth");

  auto rays = fan.rays();
  std::vector<std::int64_t> sum(fan.dim(), 0);
  for (auto r : sigma)
    for (std::size_t j = 0; j < fan.dim(); ++j)
      sum[j] += rays[r][j];
  const std::size_t new_index = rays.size();
  rays.push_back(sum);

  std::vector<Cone> cones;
  for (const auto& c : fan.maximal_cones()) {
    if (c != sigma) {
      cones.push_back(c);
      continue;
    }
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      Cone sub = sigma;
      sub[k] = new_index;
      std::sort(sub.begin(), sub.end());
      cones.push_back(sub);
    }
  }
  std::vector<std::string> names = fan.ray_names();
  if (!names.empty())
    names.push_back(new_ray_name.empty() ? "D" + std::to_string(new_index + 1) : new_ray_name);
  return Fan::validate(std::move(rays), std::move(cones), std::move(names));
}

Fan hirzebruch_fan(std::int64_t a) {
  return Fan::validate({{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

Fan three_point_blowup_fan() {
  Fan f = projective_space_fan(2);
  // P^2 rays: 0 = (1,0), 1 = (0,1), 2 = (-1,-1).
  f = blowup_at_fixed_point(f, {0, 1});
  f = blowup_at_fixed_point(f, {1, 2});
  f = blowup_at_fixed_point(f, {0, 2});
  const std::vector<std::pair<std::vector<std::int64_t>, std::string>> order{
      {{-1, -1}, "t1"}, {{1, 0}, "t2"}, {{0, 1}, "t3"},
      {{1, 1}, "s1"},   {{-1, 0}, "s2"}, {{0, -1}, "s3"}};
  std::vector<std::size_t> new_index(f.rays().size());
  std::vector<std::vector<std::int64_t>> rays;
  std::vector<std::string> names;
  for (const auto& [v, name] : order) {
    auto it = std::find(f.rays().begin(), f.rays().end(), v);
    new_index[static_cast<std::size_t>(it - f.rays().begin())] = rays.size();
    rays.push_back(v);
    names.push_back(name);
  }
  std::vector<Cone> cones;
  for (const auto& c : f.maximal_cones()) {
    Cone d;
    for (auto r : c)
      d.push_back(new_index[r]);
    cones.push_back(d);
  }
  return Fan::validate(std::move(rays), std::move(cones), std::move(names));
}

TruncatedSeries pn_divisor_series(unsigned n, std::int64_t truncation, const KRing& ring) {
  if (n == 0)
    throw DimensionError("projective space dimension must be positive");
  auto monoid = natural_numbers("t");
  SeriesTerms terms;
  for (std::int64_t d = 0; d <= truncation; ++d) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n + static_cast<unsigned long>(d), static_cast<unsigned long>(d));
    if (b > mpz_class(static_cast<unsigned long>(max_terms())))
      throw TermLimitExceeded("coefficient of t^" + std::to_string(d) + " has too many terms");
    terms.emplace(monoid->scale(monoid->generator(0), d),
                  class_projective_space(ring, static_cast<unsigned>(b.get_ui() - 1)));
  }
  return TruncatedSeries(monoid, ring, truncation, std::move(terms));
}

} // namespace mcs
