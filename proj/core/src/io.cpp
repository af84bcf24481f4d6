#include "mcs/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mcs/error.hpp"

namespace mcs {

namespace {

// ------------------------------------------------------------------ printing

std::string strip_leading_minus(const std::string& s) { return s.substr(1); }

std::string format_term(const GradedMonoid& m, const MonoidElement& s, const KElement& c,
                        const PrintOptions& opt) {
  if (s.is_zero())
    return c.to_string();
  const std::string mono = format_class(m, s, opt);
  if (auto k = c.as_integer()) {
    if (*k == 1)
      return mono;
    if (*k == -1)
      return "-" + mono;
    return k->get_str() + "*" + mono;
  }
  std::string cs = c.to_string();
  if (cs.find(' ') == std::string::npos)
    return cs + "*" + mono;
  return "(" + cs + ")*" + mono;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty())
    return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].starts_with("-"))
      out += " - " + strip_leading_minus(terms[i]);
    else
      out += " + " + terms[i];
  }
  return out;
}

std::vector<std::pair<const MonoidElement*, const KElement*>> degree_order(const GradedMonoid& m,
                                                                           const SeriesTerms& terms) {
  std::vector<std::pair<const MonoidElement*, const KElement*>> v;
  for (const auto& [s, c] : terms)
    v.emplace_back(&s, &c);
  // Within a degree, larger canonical coordinates first: t0 + s1 + ... rather than s3 + s2 + ...
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    auto da = m.degree(*a.first), db = m.degree(*b.first);
    return da != db ? da < db : *b.first < *a.first;
  });
  return v;
}

std::string format_factor(const GradedMonoid& m, const DenominatorFactor& f, const PrintOptions& opt) {
  std::string t = format_term(m, f.cls, f.coeff, opt);
  std::string s = t.starts_with("-") ? "(1+" + strip_leading_minus(t) + ")" : "(1-" + t + ")";
  if (f.power != 1)
    s += "^" + std::to_string(f.power);
  return s;
}

// ------------------------------------------------------------------ JSON helpers

Json to_json(const mpz_class& z) {
  if (z.fits_slong_p())
    return z.get_si();
  return z.get_str();
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer())
    return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw ParseError("not an integer: " + j.get<std::string>());
    return z;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::int64_t> int_vector(const Json& j) {
  if (!j.is_array())
    throw ParseError("expected an integer array, got " + j.dump());
  std::vector<std::int64_t> v;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw ParseError("expected an integer, got " + x.dump());
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

// A class given as {"free":..,"torsion":..} or as {"word":[...]} over the generators.
MonoidElement class_from_json(const GradedMonoid& m, const Json& j) {
  if (j.is_object() && j.contains("word"))
    return m.group().element_of(int_vector(j.at("word")));
  auto e = element_from_json(j);
  m.group().check(e);
  return e;
}

SeriesTerms terms_from_json(const GradedMonoid& m, const KRing& ring, const Json& j) {
  if (!j.is_array())
    throw ParseError("terms must be an array");
  SeriesTerms out;
  for (const auto& t : j) {
    auto s = class_from_json(m, require(t, "class"));
    auto c = kelement_from_json(ring, require(t, "coeff"));
    if (c.is_zero())
      continue;
    auto [it, inserted] = out.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        out.erase(it);
    }
  }
  return out;
}

Json terms_to_json(const GradedMonoid& m, const SeriesTerms& terms) {
  Json arr = Json::array();
  for (const auto& [s, c] : degree_order(m, terms))
    arr.push_back({{"class", to_json(*s)}, {"coeff", to_json(*c)}});
  return arr;
}

RationalSeries rational_from_json(const MonoidPtr& m, const KRing& ring, const Json& j) {
  MonoidPolynomial num = j.contains("numerator")
                             ? MonoidPolynomial(m, ring, terms_from_json(*m, ring, j.at("numerator")))
                             : MonoidPolynomial::one(m, ring);
  std::vector<DenominatorFactor> den;
  for (const auto& f : require(j, "denominator")) {
    long power = f.contains("power") ? f.at("power").get<long>() : 1;
    if (power < 1)
      throw ParseError("denominator power must be positive");
    den.push_back({f.contains("coeff") ? kelement_from_json(ring, f.at("coeff")) : KElement(ring, 1),
                   class_from_json(*m, require(f, "class")), static_cast<unsigned>(power)});
  }
  return RationalSeries(std::move(num), std::move(den));
}

KRing ring_of(const Json& j) { return j.contains("ring") ? kring_from_json(j.at("ring")) : KRingSpec::standard(); }
MonoidPtr monoid_of(const Json& j) { return j.contains("monoid") ? monoid_from_json(j.at("monoid")) : natural_numbers(); }

// ------------------------------------------------------------------ parser

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Token::Number, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at " + std::to_string(i));
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

struct Value {
  MonoidPolynomial num;
  std::vector<DenominatorFactor> den;
  // num as a product of binomials 1 - c t^a, when known.
  std::optional<std::vector<DenominatorFactor>> product;
};

std::optional<std::vector<DenominatorFactor>> as_binomials(const MonoidPolynomial& p) {
  if (p.is_one())
    return std::vector<DenominatorFactor>{};
  if (p.terms().size() != 2 || !p.is_monic())
    return std::nullopt;
  for (const auto& [s, c] : p.terms())
    if (!s.is_zero())
      return std::vector<DenominatorFactor>{{-c, s, 1}};
  return std::nullopt;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, MonoidPtr monoid, KRing ring)
      : toks_(std::move(tokens)), m_(std::move(monoid)), ring_(std::move(ring)) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Token::End)
      fail("unexpected '" + peek().text + "'");
    return v;
  }

private:
  const Token& peek() const { return toks_[i_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(peek().pos));
  }
  bool starts_factor() const {
    return peek().kind == Token::Number || peek().kind == Token::Ident || is_op("(");
  }

  Value constant(const KElement& c) const {
    auto p = MonoidPolynomial::monomial(m_, ring_, m_->zero(), c);
    return {p, {}, as_binomials(p)};
  }

  Value expr() {
    bool negate = false;
    if (is_op("-")) {
      negate = true;
      ++i_;
    } else if (is_op("+")) {
      ++i_;
    }
    Value v = term();
    if (negate)
      v = add(constant(KElement(ring_, 0)), v, -1);
    while (is_op("+") || is_op("-")) {
      int sign = is_op("+") ? 1 : -1;
      ++i_;
      v = add(v, term(), sign);
    }
    return v;
  }

  Value term() {
    Value v = power();
    for (;;) {
      if (is_op("*")) {
        ++i_;
        v = mul(v, power());
      } else if (is_op("/")) {
        ++i_;
        Value d = power();
        while (starts_factor())
          d = mul(d, power());
        v = div(v, d);
      } else if (starts_factor()) {
        v = mul(v, power());
      } else {
        return v;
      }
    }
  }

  Value power() {
    Value v = atom();
    if (!is_op("^"))
      return v;
    ++i_;
    bool negative = false;
    if (is_op("-")) {
      negative = true;
      ++i_;
    }
    if (peek().kind != Token::Number)
      fail("expected an exponent");
    unsigned long k = std::stoul(peek().text);
    ++i_;
    return negative ? reciprocal_power(v, k) : pow(v, k);
  }

  Value atom() {
    const Token t = peek();
    if (t.kind == Token::Number) {
      ++i_;
      return constant(KElement(ring_, mpz_class(t.text)));
    }
    if (t.kind == Token::Ident) {
      ++i_;
      if (ring_->index_of(t.text))
        return constant(KElement::generator(ring_, t.text));
      if (auto e = variable(t.text)) {
        auto p = MonoidPolynomial::monomial(m_, ring_, *e, KElement(ring_, 1));
        return {p, {}, as_binomials(p)};
      }
      throw ParseError("unknown symbol '" + t.text + "' at position " + std::to_string(t.pos));
    }
    if (is_op("(")) {
      ++i_;
      Value v = expr();
      if (!is_op(")"))
        fail("expected ')'");
      ++i_;
      return v;
    }
    fail("unexpected '" + t.text + "'");
  }

  std::optional<MonoidElement> variable(const std::string& name) const {
    const auto& names = m_->names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name)
        return m_->generator(i);
    for (const auto& b : m_->display_basis())
      if (b.name == name)
        return b.element;
    return std::nullopt;
  }

  Value add(const Value& a, const Value& b, int sign) {
    if (a.den != b.den)
      fail("sums of fractions with different denominators are not supported");
    auto num = sign > 0 ? a.num + b.num : a.num - b.num;
    return {num, a.den, as_binomials(num)};
  }

  static Value mul(const Value& a, const Value& b) {
    Value out{a.num * b.num, a.den, std::nullopt};
    out.den.insert(out.den.end(), b.den.begin(), b.den.end());
    if (a.product && b.product) {
      out.product = *a.product;
      out.product->insert(out.product->end(), b.product->begin(), b.product->end());
    } else {
      out.product = as_binomials(out.num);
    }
    return out;
  }

  Value div(const Value& a, const Value& b) {
    if (!b.product)
      fail("divisor is not a product of factors 1 - c*t^a");
    Value out = a;
    out.den.insert(out.den.end(), b.product->begin(), b.product->end());
    for (const auto& f : b.den)
      out.num = out.num * MonoidPolynomial::binomial(m_, ring_, f.cls, f.coeff).pow(f.power);
    out.product = b.den.empty() ? a.product : as_binomials(out.num);
    return out;
  }

  static Value pow(const Value& v, unsigned long k) {
    Value out{v.num.pow(static_cast<unsigned>(k)), {}, std::nullopt};
    for (auto f : v.den) {
      f.power *= static_cast<unsigned>(k);
      if (f.power)
        out.den.push_back(f);
    }
    if (v.product) {
      out.product.emplace();
      for (auto f : *v.product) {
        f.power *= static_cast<unsigned>(k);
        if (f.power)
          out.product->push_back(f);
      }
    }
    return out;
  }

  Value reciprocal_power(const Value& v, unsigned long k) {
    // Laurent monomial in a display variable.
    if (v.den.empty() && v.num.terms().size() == 1) {
      const auto& [s, c] = *v.num.terms().begin();
      if (c == KElement(ring_, 1)) {
        auto p = MonoidPolynomial::monomial(m_, ring_, m_->scale(s, -static_cast<std::int64_t>(k)), c);
        return {p, {}, as_binomials(p)};
      }
    }
    return pow(div(constant(KElement(ring_, 1)), v), k);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  MonoidPtr m_;
  KRing ring_;
};

} // namespace

// ---------------------------------------------------------------- printing

std::string format_class(const GradedMonoid& m, const MonoidElement& e, const PrintOptions& opt) {
  if (e.is_zero())
    return "1";
  if (opt.prefer_generator_names && m.display_basis().size() != 1) {
    auto count = std::count(m.generators().begin(), m.generators().end(), e);
    if (count == 1)
      return m.names()[*m.generator_index(e)];
  }
  if (auto coords = basis_coordinates(m, e)) {
    std::string out;
    for (std::size_t i = 0; i < coords->size(); ++i) {
      auto k = (*coords)[i];
      if (k == 0)
        continue;
      if (!out.empty())
        out += "*";
      out += m.display_basis()[i].name;
      if (k != 1)
        out += "^" + std::to_string(k);
    }
    return out;
  }
  std::string out = "t^[";
  for (std::size_t i = 0; i < e.free.size(); ++i)
    out += (i ? "," : "") + std::to_string(e.free[i]);
  if (!e.torsion.empty()) {
    out += ";";
    for (std::size_t i = 0; i < e.torsion.size(); ++i)
      out += (i ? "," : "") + std::to_string(e.torsion[i]);
  }
  return out + "]";
}

std::string format_polynomial(const MonoidPolynomial& p, const PrintOptions& opt) {
  std::vector<std::string> terms;
  for (const auto& [s, c] : degree_order(*p.monoid(), p.terms()))
    terms.push_back(format_term(*p.monoid(), *s, *c, opt));
  return join_terms(terms);
}

std::string format_rational(const RationalSeries& r, const PrintOptions& opt) {
  const auto& m = *r.monoid();
  if (r.factors().empty())
    return format_polynomial(r.numerator(), opt);
  std::string num = format_polynomial(r.numerator(), opt);
  if (r.numerator().terms().size() > 1)
    num = "(" + num + ")";
  std::string den;
  for (const auto& f : r.factors())
    den += format_factor(m, f, opt);
  if (r.factors().size() > 1)
    den = "(" + den + ")";
  return num + "/" + den;
}

std::string format_truncated(const TruncatedSeries& f, const PrintOptions& opt) {
  const auto& m = *f.monoid();
  std::vector<std::string> terms;
  for (const auto& [s, c] : degree_order(m, f.terms()))
    terms.push_back(format_term(m, *s, *c, opt));
  std::string tail;
  const auto next = f.truncation() + 1;
  if (m.display_basis().size() == 1 && m.grading().size() == 1 && m.grading()[0] == 1)
    tail = "O(" + m.display_basis()[0].name + (next == 1 ? "" : "^" + std::to_string(next)) + ")";
  else
    tail = "O(deg " + std::to_string(next) + ")";
  if (terms.empty())
    return tail;
  return join_terms(terms) + " + " + tail;
}

// ---------------------------------------------------------------- JSON

Json to_json(const KRing& ring) {
  Json rules = Json::array();
  for (const auto& r : ring->rules()) {
    Json value = Json::array();
    for (const auto& c : r.value)
      value.push_back(to_json(c));
    rules.push_back({{"generator", r.generator}, {"power", r.power}, {"value", value}});
  }
  return {{"generators", ring->generators()}, {"rules", rules}, {"a1_homotopy", ring->a1_homotopy()}};
}

KRing kring_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "standard")
    return KRingSpec::standard();
  std::vector<std::string> gens;
  for (const auto& g : require(j, "generators"))
    gens.push_back(g.get<std::string>());
  std::vector<ReductionRule> rules;
  if (j.contains("rules"))
    for (const auto& r : j.at("rules")) {
      ReductionRule rule{require(r, "generator").get<std::string>(), require(r, "power").get<unsigned>(), {}};
      for (const auto& c : require(r, "value"))
        rule.value.push_back(mpz_from_json(c));
      rules.push_back(std::move(rule));
    }
  return KRingSpec::make(std::move(gens), std::move(rules), j.value("a1_homotopy", false));
}

Json to_json(const KElement& a) {
  Json terms = Json::array();
  const auto& gens = a.ring()->generators();
  for (const auto& [exp, c] : a.terms()) {
    Json e = Json::object();
    for (std::size_t i = 0; i < exp.size(); ++i)
      if (exp[i])
        e[gens[i]] = exp[i];
    terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  }
  return {{"terms", terms}};
}

KElement kelement_from_json(const KRing& ring, const Json& j) {
  if (j.is_number_integer() || j.is_string())
    return KElement(ring, mpz_from_json(j));
  KElement::Terms terms;
  for (const auto& t : require(j, "terms")) {
    KElement::Exponents exp(ring->size(), 0);
    if (t.contains("exp"))
      for (const auto& [name, k] : t.at("exp").items()) {
        auto idx = ring->index_of(name);
        if (!idx)
          throw SpecMismatch("unknown ring generator '" + name + "'");
        if (!k.is_number_unsigned() && !(k.is_number_integer() && k.get<long>() >= 0))
          throw ParseError("exponent of " + name + " must be a non-negative integer");
        exp[*idx] = k.get<std::uint32_t>();
      }
    auto c = mpz_from_json(require(t, "coeff"));
    auto [it, inserted] = terms.try_emplace(exp, c);
    if (!inserted)
      it->second += c;
  }
  return KElement(ring, std::move(terms));
}

Json to_json(const MonoidElement& e) { return {{"free", e.free}, {"torsion", e.torsion}}; }

MonoidElement element_from_json(const Json& j) {
  MonoidElement e;
  e.free = int_vector(require(j, "free"));
  if (j.contains("torsion"))
    e.torsion = int_vector(j.at("torsion"));
  return e;
}

Json to_json(const AbelianGroupPresentation& g, const std::vector<std::string>& names) {
  Json rel = Json::array();
  const auto& a = g.relations();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.cols(); ++k)
      row.push_back(to_int64(a(i, k)));
    rel.push_back(row);
  }
  return {{"generators", names}, {"relations", rel}};
}

Json to_json(const GradedMonoid& m) {
  Json j = to_json(m.group(), m.names());
  j["grading"] = m.grading();
  Json basis = Json::array();
  for (const auto& b : m.display_basis())
    basis.push_back({{"name", b.name}, {"class", to_json(b.element)}});
  j["basis"] = basis;
  return j;
}

MonoidPtr monoid_from_json(const Json& j) {
  std::vector<std::string> names;
  for (const auto& g : require(j, "generators"))
    names.push_back(g.get<std::string>());
  std::vector<std::vector<std::int64_t>> rels;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      rels.push_back(int_vector(r));
      if (rels.back().size() != names.size())
        throw PresentationError("relation length " + std::to_string(rels.back().size()) +
                                " does not match " + std::to_string(names.size()) + " generators");
    }
  auto group = AbelianGroupPresentation::from_relations(names.size(), rels);
  std::optional<std::vector<std::int64_t>> grading;
  if (j.contains("grading"))
    grading = int_vector(j.at("grading"));
  auto m = std::make_shared<GradedMonoid>(std::move(group), std::move(names), grading);
  if (j.contains("basis") && !j.at("basis").empty()) {
    std::vector<BasisVariable> basis;
    for (const auto& b : j.at("basis"))
      basis.push_back({require(b, "name").get<std::string>(), class_from_json(*m, require(b, "class"))});
    m->set_display_basis(std::move(basis));
  }
  return m;
}

Json to_json(const MonoidPolynomial& p) { return terms_to_json(*p.monoid(), p.terms()); }

Json to_json(const TruncatedSeries& f) {
  return {{"monoid", to_json(*f.monoid())},
          {"ring", to_json(f.ring())},
          {"truncation", f.truncation()},
          {"terms", terms_to_json(*f.monoid(), f.terms())}};
}

Json to_json(const RationalSeries& r) {
  Json den = Json::array();
  for (const auto& f : r.factors())
    den.push_back({{"class", to_json(f.cls)}, {"coeff", to_json(f.coeff)}, {"power", f.power}});
  return {{"monoid", to_json(*r.monoid())},
          {"ring", to_json(r.ring())},
          {"numerator", to_json(r.numerator())},
          {"denominator", den}};
}

SeriesDocument series_from_json(const Json& j) {
  auto ring = ring_of(j);
  auto m = monoid_of(j);
  if (j.contains("truncation")) {
    auto n = require(j, "truncation").get<std::int64_t>();
    if (n < 0)
      throw ParseError("truncation must be non-negative");
    auto terms = terms_from_json(*m, ring, require(j, "terms"));
    for (const auto& [s, c] : terms)
      if (!m->contains(s))
        throw SeriesMismatch("term class is not in the monoid");
    return TruncatedSeries(m, ring, n, std::move(terms));
  }
  return rational_from_json(m, ring, j);
}

Json to_json(const Fan& fan) {
  Json j{{"dim", fan.dim()}, {"rays", fan.rays()}, {"maximal_cones", fan.maximal_cones()}};
  if (!fan.ray_names().empty())
    j["ray_names"] = fan.ray_names();
  return j;
}

Fan fan_from_json(const Json& j) {
  std::vector<std::vector<std::int64_t>> rays;
  for (const auto& r : require(j, "rays"))
    rays.push_back(int_vector(r));
  std::vector<Cone> cones;
  for (const auto& c : require(j, "maximal_cones")) {
    Cone cone;
    for (auto x : int_vector(c)) {
      if (x < 0)
        throw FanError("negative ray index in cone");
      cone.push_back(static_cast<std::size_t>(x));
    }
    cones.push_back(std::move(cone));
  }
  if (j.contains("dim"))
    for (const auto& r : rays)
      if (r.size() != j.at("dim").get<std::size_t>())
        throw FanError("ray length does not match \"dim\"");
  std::vector<std::string> names;
  if (j.contains("ray_names"))
    names = j.at("ray_names").get<std::vector<std::string>>();
  return Fan::validate(std::move(rays), std::move(cones), std::move(names));
}

Json to_json(const GmDecomposition& d) {
  Json strata = Json::array();
  for (const auto& s : d.strata) {
    Json j{{"label", s.label}, {"cycle_dimension", s.cycle_dimension}};
    if (auto* f = std::get_if<FixedComponent>(&s.kind)) {
      j["kind"] = "fixed_component";
      j["series"] = to_json(f->series);
      j["series"].erase("monoid");
      j["series"].erase("ring");
    } else if (auto* o = std::get_if<OrbitFamilyOverPoint>(&s.kind)) {
      j["kind"] = "orbit_family_over_point";
      j["class"] = to_json(o->beta);
    } else if (auto* p = std::get_if<OrbitFamilyOverPuncturedP1>(&s.kind)) {
      j["kind"] = "orbit_family_over_punctured_p1";
      j["punctures"] = p->punctures;
      j["fiber_class"] = to_json(p->fiber_class);
    }
    strata.push_back(j);
  }
  return {{"monoid", to_json(*d.monoid)}, {"ring", to_json(d.ring)}, {"strata", strata}};
}

GmDecomposition decomposition_from_json(const Json& j) {
  GmDecomposition d{monoid_of(j), ring_of(j), {}};
  for (const auto& s : require(j, "strata")) {
    GmStratum st{s.value("label", std::string()), require(s, "cycle_dimension").get<std::size_t>(),
                 FixedComponent{RationalSeries(MonoidPolynomial::one(d.monoid, d.ring))}};
    auto kind = require(s, "kind").get<std::string>();
    if (kind == "fixed_component")
      st.kind = FixedComponent{rational_from_json(d.monoid, d.ring, require(s, "series"))};
    else if (kind == "orbit_family_over_point")
      st.kind = OrbitFamilyOverPoint{class_from_json(*d.monoid, require(s, "class"))};
    else if (kind == "orbit_family_over_punctured_p1")
      st.kind = OrbitFamilyOverPuncturedP1{require(s, "punctures").get<unsigned>(),
                                           class_from_json(*d.monoid, require(s, "fiber_class"))};
    else
      throw ParseError("unknown stratum kind '" + kind + "'");
    d.strata.push_back(std::move(st));
  }
  d.check();
  return d;
}

// ---------------------------------------------------------------- parsing

ParsedExpression parse_expression(const std::string& text, const KRing& ring, const MonoidPtr& monoid) {
  Parser p(tokenize(text), monoid, ring);
  Value v = p.parse();
  return {monoid, ring, RationalSeries(std::move(v.num), std::move(v.den))};
}

ParsedExpression parse_expression(const std::string& text, const KRing& ring) {
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto& t : tokenize(text))
    if (t.kind == Token::Ident && !ring->index_of(t.text) && seen.insert(t.text).second)
      vars.push_back(t.text);
  return parse_expression(text, ring, vars.empty() ? natural_numbers("t") : free_commutative_monoid(vars));
}

} // namespace mcs
