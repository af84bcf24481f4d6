#ifndef MCS_GM_ACTION_HPP
#define MCS_GM_ACTION_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "mcs/series.hpp"

namespace mcs {

/// Component of the fixed locus, contributing its own series.
struct FixedComponent {
  RationalSeries series;
};

/// Family of orbit closures of class beta over a point: factor 1/(1 - t^beta).
struct OrbitFamilyOverPoint {
  MonoidElement beta;
};

/// Family of orbit closures of class beta over P^1 minus r points:
/// factor (1 - t^beta)^(r-2).
struct OrbitFamilyOverPuncturedP1 {
  unsigned punctures = 0;
  MonoidElement fiber_class;
};

struct GmStratum {
  std::string label;
  /// Dimension of the cycles the stratum contributes to.
  std::size_t cycle_dimension = 0;
  std::variant<FixedComponent, OrbitFamilyOverPoint, OrbitFamilyOverPuncturedP1> kind;
};

struct GmDecomposition {
  MonoidPtr monoid;
  KRing ring;
  std::vector<GmStratum> strata;

  /// Checks classes live in `monoid` and are non-zero, punctures >= 1,
  /// fixed series monic. Throws UnsupportedStratum otherwise.
  void check() const;
};

/// Factor contributed by one stratum to MC_p.
RationalSeries stratum_factor(const GmDecomposition& decomp, const GmStratum& s, std::size_t p);

/// Product of the stratum factors.
RationalSeries assemble_mc(const GmDecomposition& decomp, std::size_t p);

/// Free monoid on t0 = H - sum E_i and s_i = E_i (i = 1..r).
MonoidPtr colinear_monoid(unsigned r);

/// Class a*H + sum c_i E_i in colinear_monoid(r).
MonoidElement colinear_class(const GradedMonoid& monoid, std::int64_t a, const std::vector<std::int64_t>& c);

/// P^2 blown up at r colinear points, decomposed along the G_m-action fixing
/// the line L through them: the fixed line, the orbit families X_i and E_i
/// over isolated fixed points, and the family X_0 over L minus the r points.
GmDecomposition colinear_blowup_data(unsigned r, const KRing& ring);

} // namespace mcs

#endif
