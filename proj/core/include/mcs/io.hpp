#ifndef MCS_IO_HPP
#define MCS_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcs/gm_action.hpp"
#include "mcs/series.hpp"
#include "mcs/toric.hpp"

namespace mcs {

using Json = nlohmann::json;

// ---------------------------------------------------------------- printing

struct PrintOptions {
  /// Print a class as the name of the generator it equals, when exactly one
  /// generator has that class; otherwise use the display basis.
  bool prefer_generator_names = true;
};

std::string format_class(const GradedMonoid& m, const MonoidElement& e, const PrintOptions& opt = {});
std::string format_polynomial(const MonoidPolynomial& p, const PrintOptions& opt = {});
/// "1/(1-t)^3", "1/((1-t1)(1-t2))", "(1 + a1*t)/((1-t)(1-L*t))"
std::string format_rational(const RationalSeries& r, const PrintOptions& opt = {});
/// "1 + 3*t + 6*t^2 + O(t^3)"; the O-term names the first omitted degree.
std::string format_truncated(const TruncatedSeries& f, const PrintOptions& opt = {});

// ---------------------------------------------------------------- JSON

Json to_json(const KRing& ring);
KRing kring_from_json(const Json& j);

Json to_json(const KElement& a);
/// Accepts {"terms":[{"exp":{...},"coeff":c}]} or a bare integer.
KElement kelement_from_json(const KRing& ring, const Json& j);

Json to_json(const MonoidElement& e);
MonoidElement element_from_json(const Json& j);

Json to_json(const AbelianGroupPresentation& g, const std::vector<std::string>& names);
/// {"generators":[...], "relations":[[...]], "grading":[...], "basis":[...]}
Json to_json(const GradedMonoid& m);
MonoidPtr monoid_from_json(const Json& j);

Json to_json(const MonoidPolynomial& p);
Json to_json(const TruncatedSeries& f);
Json to_json(const RationalSeries& r);

using SeriesDocument = std::variant<TruncatedSeries, RationalSeries>;
/// A truncated series when "truncation" is present, otherwise a rational form.
SeriesDocument series_from_json(const Json& j);

Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json to_json(const GmDecomposition& d);
GmDecomposition decomposition_from_json(const Json& j);

// ---------------------------------------------------------------- parsing

struct ParsedExpression {
  MonoidPtr monoid;
  KRing ring;
  RationalSeries value;
};

/// Parses expressions such as "1/((1-t)(1-L*t))", "1/(1-t)(1-L t)" or
/// "(1-t)^4". Identifiers that are ring generators become coefficients; all
/// others name monoid variables. Juxtaposition multiplies; juxtaposed factors
/// after '/' all belong to the divisor, so "1/(1-t)(1-u)" divides by both.
/// Divisors must be products of binomials 1 - c*t^a.
ParsedExpression parse_expression(const std::string& text, const KRing& ring,
                                  const MonoidPtr& monoid);
/// Same, with the monoid built from the variables: Z_{>=0} on "t" when there
/// are none, otherwise the free monoid on them in order of appearance.
ParsedExpression parse_expression(const std::string& text, const KRing& ring);

} // namespace mcs

#endif
