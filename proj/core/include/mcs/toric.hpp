#ifndef MCS_TORIC_HPP
#define MCS_TORIC_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcs/monoid.hpp"
#include "mcs/series.hpp"

namespace mcs {

/// Cone of a fan as the sorted list of its ray indices.
using Cone = std::vector<std::size_t>;

/// Complete rational polyhedral fan. Instances only come out of
/// Fan::validate, so every Fan satisfies:
///   - rays are primitive, non-zero and pairwise distinct;
///   - maximal cones are full-dimensional and strongly convex;
///   - two maximal cones meet in a common face;
///   - every codimension-one face lies in exactly two maximal cones and the
///     maximal cones are connected through such faces (completeness).
class Fan {
public:
  static Fan validate(std::vector<std::vector<std::int64_t>> rays, std::vector<Cone> maximal_cones,
                      std::vector<std::string> ray_names = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<std::int64_t>>& rays() const { return rays_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  /// Empty when no names were supplied.
  const std::vector<std::string>& ray_names() const { return names_; }

  /// All k-dimensional cones, each once, in lexicographic order of ray sets.
  const std::vector<Cone>& cones_of_dim(std::size_t k) const;
  std::size_t cone_dim(const Cone& c) const;
  bool is_smooth(const Cone& c) const;

private:
  Fan() = default;

  std::size_t dim_ = 0;
  std::vector<std::vector<std::int64_t>> rays_;
  std::vector<Cone> maximal_;
  std::vector<std::string> names_;
  std::vector<std::vector<Cone>> cones_by_dim_;
};

/// Monoid of p-cycle classes generated by torus-orbit closures.
struct OrbitClassMonoid {
  std::size_t p = 0;
  MonoidPtr monoid;
  /// Cones of dimension n - p, in generator order.
  std::vector<Cone> orbit_cones;
  std::map<Cone, MonoidElement> class_of_orbit;
};

/// Presentation of A_p: generators [V(sigma)] for dim sigma = n - p, relations
/// sum_sigma <u, n_{sigma,tau}> [V(sigma)] = 0 for every (n-p-1)-cone tau and
/// u in a basis of tau-perp. Throws FiniteFiberError if no positive grading.
OrbitClassMonoid chow_presentation(const Fan& fan, std::size_t p);

/// Class of the orbit closure V(cone) in A_p.
MonoidElement degree_class(const Fan& fan, const Cone& cone, std::size_t p);

/// prod over p-dimensional orbits V of 1/(1 - t^{deg V}).
RationalSeries mc_series_toric(const OrbitClassMonoid& classes, const KRing& ring);
RationalSeries mc_series_toric(const Fan& fan, std::size_t p, const KRing& ring);

Fan projective_space_fan(std::size_t n);
Fan product_fan(const Fan& a, const Fan& b);
/// Star subdivision at a smooth maximal cone, adding the sum of its rays.
Fan blowup_at_fixed_point(const Fan& fan, const Cone& maximal_cone,
                          const std::string& new_ray_name = {});
/// Rays (1,0), (0,1), (-1,a), (0,-1).
Fan hirzebruch_fan(std::int64_t a);

/// P^2 blown up at its three torus-fixed points, with the rays named after
/// the strict transforms of the coordinate lines (t1, t2, t3) and the
/// exceptional divisors (s1, s2, s3).
Fan three_point_blowup_fan();

/// sum_d [P^{binom(n+d,d) - 1}] t^d up to degree N over Z_{>=0}.
TruncatedSeries pn_divisor_series(unsigned n, std::int64_t truncation, const KRing& ring);

} // namespace mcs

#endif
