#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mcs/error.hpp"
#include "mcs/io.hpp"

namespace mcs::cli {

namespace {

constexpr const char* kEquivalenceNote =
    "cycle classes are computed modulo rational equivalence, taken to agree with algebraic "
    "equivalence for complete toric varieties";

enum class Format { Pretty, Json };

struct Report {
  Json json = Json::object();
  std::ostringstream text;
  int code = kOk;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::map<std::string, long> parse_assignments(const std::vector<std::string>& items) {
  std::map<std::string, long> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError("assignment must look like NAME=INTEGER, got '" + item + "'");
    std::string name = item.substr(0, eq), value = item.substr(eq + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size())
      throw ParseError("assignment value for " + name + " must be an integer, got '" + value + "'");
    if (!out.emplace(name, v).second)
      throw ParseError("generator " + name + " assigned twice");
  }
  return out;
}

// Specialization of `ring` at integer values into Z[kept generators].
Specialization make_specialization(const KRing& ring, const std::vector<std::string>& sets,
                                   const std::vector<std::string>& keep) {
  auto values = parse_assignments(sets);
  for (const auto& [name, v] : values)
    if (!ring->index_of(name))
      throw MissingAssignment("ring has no generator '" + name + "'");
  std::vector<ReductionRule> rules;
  for (const auto& k : keep) {
    if (!ring->index_of(k))
      throw SpecMismatch("ring has no generator '" + k + "' to keep");
    if (values.count(k))
      throw ParseError("generator " + k + " is both assigned and kept");
    for (const auto& r : ring->rules())
      if (r.generator == k)
        rules.push_back(r);
  }
  auto target = KRingSpec::make(keep, rules);
  std::map<std::string, KElement> images;
  for (const auto& [name, v] : values)
    images.emplace(name, KElement(target, v));
  return Specialization(ring, target, std::move(images));
}

std::string describe_group(const GradedMonoid& m) {
  std::string s = "Z^" + std::to_string(m.group().free_rank());
  for (auto d : m.group().torsion_invariants())
    s += " + Z/" + std::to_string(d);
  return s;
}

// First class (by degree, then canonical order) where two expansions differ.
std::optional<MonoidElement> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::optional<std::pair<std::int64_t, MonoidElement>> best;
  auto consider = [&](const MonoidElement& s) {
    if (a.coefficient(s) == b.coefficient(s))
      return;
    std::pair<std::int64_t, MonoidElement> key{a.monoid()->degree(s), s};
    if (!best || key < *best)
      best = key;
  };
  for (const auto& [s, c] : a.terms())
    consider(s);
  for (const auto& [s, c] : b.terms())
    consider(s);
  if (!best)
    return std::nullopt;
  return best->second;
}

void verdict(Report& rep, bool pass, const std::string& what) {
  rep.code = pass ? kOk : kFail;
  rep.json["result"] = pass ? "PASS" : "FAIL";
  rep.text << (pass ? "PASS " : "FAIL ") << what << "\n";
}

// ------------------------------------------------------------------ commands

struct ToricArgs {
  std::string fan;
  std::size_t p = 0;
  std::optional<std::int64_t> truncate;
};

void cmd_toric(const ToricArgs& a, Report& rep) {
  auto fan = fan_from_json(load_json(a.fan));
  auto classes = chow_presentation(fan, a.p);
  auto r = mc_series_toric(classes, KRingSpec::standard());
  rep.json["command"] = "toric";
  rep.json["p"] = a.p;
  rep.json["class_group"] = describe_group(*classes.monoid);
  rep.json["rational"] = to_json(r);
  rep.json["text"] = format_rational(r);
  rep.json["metadata"] = {{"equivalence", kEquivalenceNote}};
  rep.text << "class group: " << describe_group(*classes.monoid) << "\n";
  rep.text << "MC_" << a.p << " = " << format_rational(r) << "\n";
  if (a.truncate && *a.truncate > 0) {
    auto f = rational_expand(r, *a.truncate);
    rep.json["expansion"] = to_json(f);
    rep.json["expansion_text"] = format_truncated(f);
    rep.text << "expansion: " << format_truncated(f) << "\n";
  }
  rep.text << "note: " << kEquivalenceNote << "\n";
}

struct ColinearArgs {
  unsigned r = 0;
  std::optional<std::int64_t> truncate;
  std::string compare;
};

std::string stratum_text(const GradedMonoid& m, const GmStratum& s) {
  if (auto* f = std::get_if<FixedComponent>(&s.kind))
    return "fixed component, series " + format_rational(f->series);
  if (auto* o = std::get_if<OrbitFamilyOverPoint>(&s.kind))
    return "orbit family over a point, class " + format_class(m, o->beta);
  const auto& p = std::get<OrbitFamilyOverPuncturedP1>(s.kind);
  return "orbit family over P1 minus " + std::to_string(p.punctures) + " points, fiber class " +
         format_class(m, p.fiber_class);
}

void cmd_colinear(const ColinearArgs& a, Report& rep) {
  auto ring = KRingSpec::standard();
  auto decomp = colinear_blowup_data(a.r, ring);
  auto s = assemble_mc(decomp, 1);
  const auto& m = *decomp.monoid;
  rep.json["command"] = "colinear";
  rep.json["r"] = a.r;
  rep.json["decomposition"] = to_json(decomp);
  rep.json["rational"] = to_json(s);
  rep.json["text"] = format_rational(s);
  rep.text << "strata:\n";
  for (const auto& st : decomp.strata)
    rep.text << "  " << st.label << ": " << stratum_text(m, st) << "\n";
  rep.text << "MC_1 = " << format_rational(s) << "\n";
  if (a.truncate && *a.truncate > 0) {
    auto f = rational_expand(s, *a.truncate);
    rep.json["expansion"] = to_json(f);
    rep.text << "expansion: " << format_truncated(f) << "\n";
  }
  if (a.compare.empty())
    return;

  auto doc = load_json(a.compare);
  auto fan = fan_from_json(doc);
  if (fan.dim() != 2)
    throw DimensionError("comparison fan must be two-dimensional");
  if (!doc.contains("ray_classes"))
    throw ParseError(a.compare + ": missing \"ray_classes\" (coefficients of H, E1..Er per ray)");
  auto classes = chow_presentation(fan, 1);
  std::vector<MonoidElement> images;
  const auto& rc = doc.at("ray_classes");
  if (rc.size() != fan.rays().size())
    throw ParseError("ray_classes must list one class per ray");
  for (const auto& cone : classes.orbit_cones) {
    auto coeffs = rc.at(cone.front()).get<std::vector<std::int64_t>>();
    if (coeffs.size() != a.r + 1)
      throw ParseError("each ray class needs " + std::to_string(a.r + 1) + " coefficients");
    images.push_back(colinear_class(m, coeffs[0], {coeffs.begin() + 1, coeffs.end()}));
  }
  MonoidHom phi(classes.monoid, decomp.monoid, images);
  auto other = pushforward(mc_series_toric(classes, ring), phi);
  const std::int64_t n = a.truncate.value_or(3);
  auto fa = rational_expand(s, n);
  auto fb = rational_expand(other, n);
  const bool equal = rational_equal(s, other);
  Json cmp{{"file", a.compare}, {"truncation", n}, {"rational_equal", equal},
           {"other", format_rational(other)}};
  rep.text << "compare " << a.compare << ": " << format_rational(other) << "\n";
  if (auto diff = first_difference(fa, fb)) {
    cmp["first_difference"] = {{"class", to_json(*diff)},
                               {"class_text", format_class(m, *diff)},
                               {"degree", m.degree(*diff)},
                               {"colinear", fa.coefficient(*diff).to_string()},
                               {"other", fb.coefficient(*diff).to_string()}};
    rep.text << "first difference at " << format_class(m, *diff) << " (degree " << m.degree(*diff)
             << "): colinear " << fa.coefficient(*diff).to_string() << ", other "
             << fb.coefficient(*diff).to_string() << "\n";
  } else {
    rep.text << (equal ? "series agree as rational forms" : "expansions agree")
             << " up to degree " << n << "\n";
  }
  rep.json["compare"] = cmp;
  rep.json["metadata"] = {{"equivalence", kEquivalenceNote}};
}

struct VerifyArgs {
  std::string curve = "p1";
  unsigned remove = 0;
  std::string fan_a, fan_b, fan;
  unsigned n = 2;
  std::string denominator;
  std::vector<std::string> specialize;
  std::optional<std::int64_t> truncate;
};

void verify_localization(const VerifyArgs& a, Report& rep) {
  if (a.curve != "p1")
    throw ParseError("only --curve p1 is supported");
  const std::int64_t n = a.truncate.value_or(10);
  auto ring = KRingSpec::standard();
  auto spec = a1_quotient(ring);
  auto zeta = specialize(curve_zeta(0, ring), spec);
  auto removed = RationalSeries::geometric(zeta.monoid(), spec.target(), zeta.monoid()->generator(0), a.remove);
  auto quotient = localize_quotient(zeta, removed);
  auto family = punctured_p1_zeta(a.remove, spec.target());
  bool rational = rational_equal(quotient, family);
  bool expanded = rational_expand(quotient, n) == rational_expand(family, n);
  rep.json["command"] = "verify localization";
  rep.json["quotient"] = format_rational(quotient);
  rep.json["family"] = format_rational(family);
  rep.json["truncation"] = n;
  rep.text << "quotient path: " << format_rational(quotient) << "\n";
  rep.text << "family path:   " << format_rational(family) << "\n";
  verdict(rep, rational && expanded,
          "localization, P1 minus " + std::to_string(a.remove) + " points, to degree " + std::to_string(n));
}

void verify_product(const VerifyArgs& a, Report& rep) {
  const std::int64_t n = a.truncate.value_or(6);
  auto fa = fan_from_json(load_json(a.fan_a));
  auto fb = fan_from_json(load_json(a.fan_b));
  auto ring = KRingSpec::standard();
  auto ca = chow_presentation(fa, fa.dim() - 1);
  auto cb = chow_presentation(fb, fb.dim() - 1);
  auto sum = direct_sum(ca.monoid, cb.monoid);
  auto ext = external_product(mc_series_toric(ca, ring), mc_series_toric(cb, ring), sum);

  auto prod = product_fan(fa, fb);
  auto cp = chow_presentation(prod, prod.dim() - 1);
  std::vector<MonoidElement> images;
  const std::size_t offset = fa.rays().size();
  for (const auto& cone : cp.orbit_cones) {
    auto ray = cone.front();
    images.push_back(ray < offset ? sum.first(ca.class_of_orbit.at({ray}))
                                  : sum.second(cb.class_of_orbit.at({ray - offset})));
  }
  MonoidHom phi(cp.monoid, sum.monoid, images);
  auto direct = pushforward(mc_series_toric(cp, ring), phi);
  bool rational = rational_equal(ext, direct);
  auto ea = rational_expand(ext, n);
  auto eb = rational_expand(direct, n);
  rep.json["command"] = "verify product";
  rep.json["external_product"] = format_rational(ext);
  rep.json["product_fan"] = format_rational(direct);
  rep.json["truncation"] = n;
  rep.json["metadata"] = {{"equivalence", kEquivalenceNote}};
  rep.text << "external product: " << format_rational(ext) << "\n";
  rep.text << "product fan:      " << format_rational(direct) << "\n";
  if (auto d = first_difference(ea, eb)) {
    rep.json["witness"] = to_json(*d);
    rep.text << "witness class: " << format_class(*sum.monoid, *d) << "\n";
  }
  verdict(rep, rational && ea == eb, "product identity to degree " + std::to_string(n));
}

void verify_eq1(const VerifyArgs& a, Report& rep) {
  const std::int64_t n = a.truncate.value_or(8);
  if (a.denominator.empty())
    throw ParseError("--denominator is required");
  auto ring = KRingSpec::standard();
  auto f = pn_divisor_series(a.n, n, ring);
  if (!a.specialize.empty()) {
    auto keep = std::vector<std::string>{};
    for (const auto& g : ring->generators())
      if (!parse_assignments(a.specialize).count(g))
        keep.push_back(g);
    f = specialize(f, make_specialization(ring, a.specialize, keep));
  }
  auto parsed = parse_expression(a.denominator, f.ring(), f.monoid());
  if (!parsed.value.factors().empty())
    throw ParseError("candidate denominator must be a polynomial");
  auto cert = certify_rational(f, parsed.value.numerator());
  rep.json["command"] = "verify eq1";
  rep.json["n"] = a.n;
  rep.json["denominator"] = a.denominator;
  rep.json["truncation"] = cert.truncation;
  rep.json["numerator_bound"] = cert.numerator_bound;
  rep.text << "series: " << format_truncated(f) << "\n";
  rep.text << "candidate denominator: " << format_polynomial(parsed.value.numerator()) << "\n";
  if (cert.consistent) {
    verdict(rep, true, "consistent up to degree " + std::to_string(cert.truncation) +
                           " (numerator degree <= " + std::to_string(cert.numerator_bound) + ")");
    return;
  }
  rep.json["witness_degree"] = *cert.witness_degree;
  rep.json["witness_coeff"] = cert.witness_coeff->to_string();
  verdict(rep, false, "refuted: degree " + std::to_string(*cert.witness_degree) +
                          " coefficient of series*denominator is " + cert.witness_coeff->to_string() +
                          ", numerator degree bound " + std::to_string(cert.numerator_bound));
}

void verify_macdonald(const VerifyArgs& a, Report& rep) {
  const std::int64_t n = a.truncate.value_or(8);
  auto fan = fan_from_json(load_json(a.fan));
  auto ring = KRingSpec::standard();
  auto classes = chow_presentation(fan, 0);
  auto r = mc_series_toric(classes, ring);
  const auto chi = static_cast<unsigned>(fan.maximal_cones().size());
  const auto& m = classes.monoid;
  auto expected = RationalSeries::geometric(m, ring, m->generator(0), chi);
  bool ok = rational_equal(r, expected);
  auto f = rational_expand(r, n);
  std::optional<std::int64_t> bad;
  for (std::int64_t d = 0; d <= n && !bad; ++d) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), chi + static_cast<unsigned long>(d) - 1, static_cast<unsigned long>(d));
    if (f.coefficient(m->scale(m->generator(0), d)) != KElement(ring, b))
      bad = d;
  }
  rep.json["command"] = "verify macdonald";
  rep.json["chi"] = chi;
  rep.json["text"] = format_rational(r);
  rep.json["truncation"] = n;
  rep.text << "MC_0 = " << format_rational(r) << ", fixed points = " << chi << "\n";
  if (bad) {
    rep.json["witness_degree"] = *bad;
    rep.text << "coefficient mismatch at degree " << *bad << "\n";
  }
  verdict(rep, ok && !bad, "Macdonald check with chi = " + std::to_string(chi) + " to degree " + std::to_string(n));
}

struct SeriesArgs {
  std::string input, expr;
  std::vector<std::string> symbols, set, keep;
  std::optional<std::int64_t> truncate;
};

SeriesDocument load_series(const SeriesArgs& a) {
  if (a.input.empty() == a.expr.empty())
    throw ParseError("give exactly one of --input or --expr");
  if (!a.input.empty())
    return series_from_json(load_json(a.input));
  return parse_expression(a.expr, KRingSpec::standard(a.symbols)).value;
}

void emit_series(Report& rep, const SeriesDocument& doc) {
  if (auto* t = std::get_if<TruncatedSeries>(&doc)) {
    rep.json["series"] = to_json(*t);
    rep.json["text"] = format_truncated(*t);
    rep.text << format_truncated(*t) << "\n";
  } else {
    const auto& r = std::get<RationalSeries>(doc);
    rep.json["series"] = to_json(r);
    rep.json["text"] = format_rational(r);
    rep.text << format_rational(r) << "\n";
  }
}

TruncatedSeries retruncate(const TruncatedSeries& f, std::int64_t n) {
  if (n > f.truncation())
    throw SeriesMismatch("series is only known to degree " + std::to_string(f.truncation()));
  SeriesTerms terms;
  for (const auto& [s, c] : f.terms())
    if (f.monoid()->degree(s) <= n)
      terms.emplace(s, c);
  return TruncatedSeries(f.monoid(), f.ring(), n, std::move(terms));
}

void cmd_expand(const SeriesArgs& a, Report& rep) {
  auto doc = load_series(a);
  TruncatedSeries f = std::visit(
      [&](const auto& s) -> TruncatedSeries {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RationalSeries>) {
          if (!a.truncate)
            throw ParseError("--truncate is required to expand a rational form");
          return rational_expand(s, *a.truncate);
        } else {
          return a.truncate ? retruncate(s, *a.truncate) : s;
        }
      },
      doc);
  if (!a.set.empty())
    f = specialize(f, make_specialization(f.ring(), a.set, a.keep));
  rep.json["command"] = "expand";
  emit_series(rep, f);
}

void cmd_specialize(const SeriesArgs& a, Report& rep) {
  if (a.set.empty())
    throw ParseError("--set is required");
  auto doc = load_series(a);
  rep.json["command"] = "specialize";
  std::visit(
      [&](const auto& s) {
        auto sp = make_specialization(s.ring(), a.set, a.keep);
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RationalSeries>) {
          if (a.truncate)
            emit_series(rep, specialize(rational_expand(s, *a.truncate), sp));
          else
            emit_series(rep, specialize(s, sp));
        } else {
          emit_series(rep, specialize(a.truncate ? retruncate(s, *a.truncate) : s, sp));
        }
      },
      doc);
}

void add_truncate(CLI::App* app, std::optional<std::int64_t>& target) {
  app->add_option("--truncate,-N", target, "Expansion degree bound")->check(CLI::NonNegativeNumber);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motivic Chow series calculator", "mcs"};
  app.require_subcommand(1);
  std::string format = "pretty";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "json"}));

  ToricArgs toric;
  auto* t = app.add_subcommand("toric", "MC_p of a complete toric variety from its fan");
  t->add_option("--fan", toric.fan, "Fan JSON file")->required();
  t->add_option("--p", toric.p, "Cycle dimension")->required();
  add_truncate(t, toric.truncate);

  ColinearArgs colinear;
  auto* c = app.add_subcommand("colinear", "P^2 blown up at r colinear points");
  c->add_option("--r", colinear.r, "Number of points")->required();
  add_truncate(c, colinear.truncate);
  c->add_option("--compare", colinear.compare, "Fan JSON with ray_classes to compare against");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check an identity at a truncation");
  v->require_subcommand(1);
  auto* vl = v->add_subcommand("localization", "Localization quotient against the family factor");
  vl->add_option("--curve", verify.curve, "Curve (p1)");
  vl->add_option("--remove", verify.remove, "Number of removed points")->required();
  add_truncate(vl, verify.truncate);
  auto* vp = v->add_subcommand("product", "External product against the product fan");
  vp->add_option("--fanA", verify.fan_a, "First fan")->required();
  vp->add_option("--fanB", verify.fan_b, "Second fan")->required();
  add_truncate(vp, verify.truncate);
  auto* ve = v->add_subcommand("eq1", "Candidate denominator for the P^n divisor series");
  ve->add_option("--n", verify.n, "Projective dimension")->required()->check(CLI::PositiveNumber);
  ve->add_option("--denominator", verify.denominator, "Candidate denominator, e.g. (1-t)^3")->required();
  ve->add_option("--specialize", verify.specialize, "Assignments such as L=1");
  add_truncate(ve, verify.truncate);
  auto* vm = v->add_subcommand("macdonald", "MC_0 against 1/(1-t)^chi");
  vm->add_option("--fan", verify.fan, "Fan JSON file")->required();
  add_truncate(vm, verify.truncate);

  SeriesArgs expand;
  auto* e = app.add_subcommand("expand", "Expand a series to a degree bound");
  SeriesArgs spec;
  auto* s = app.add_subcommand("specialize", "Specialize series coefficients");
  for (auto [cmd, a] : {std::pair{e, &expand}, std::pair{s, &spec}}) {
    cmd->add_option("--input", a->input, "Series JSON file");
    cmd->add_option("--expr", a->expr, "Series expression, e.g. \"1/((1-t)(1-L*t))\"");
    cmd->add_option("--symbols", a->symbols, "Extra coefficient symbols for --expr")->delimiter(',');
    cmd->add_option("--set", a->set, "Assignments such as L=1 eps=-1");
    cmd->add_option("--keep", a->keep, "Generators left symbolic by --set")->delimiter(',');
    add_truncate(cmd, a->truncate);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Report rep;
  try {
    if (t->parsed())
      cmd_toric(toric, rep);
    else if (c->parsed())
      cmd_colinear(colinear, rep);
    else if (vl->parsed())
      verify_localization(verify, rep);
    else if (vp->parsed())
      verify_product(verify, rep);
    else if (ve->parsed())
      verify_eq1(verify, rep);
    else if (vm->parsed())
      verify_macdonald(verify, rep);
    else if (e->parsed())
      cmd_expand(expand, rep);
    else if (s->parsed())
      cmd_specialize(spec, rep);
  } catch (const mcs::Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const Json::exception& ex) {
    err << "error: malformed input: " << ex.what() << "\n";
    return kInputError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  }

  if (format == "json")
    out << rep.json.dump(2) << "\n";
  else
    out << rep.text.str();
  return rep.code;
}

} // namespace mcs::cli
