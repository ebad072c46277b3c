#include "legh/family.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "legh/error.hpp"

namespace legh {

namespace {

const std::vector<std::string>& t_vars() {
  static const std::vector<std::string> vars{"t"};
  return vars;
}

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  throw Error(ErrorCode::InvalidInput, "cannot parse rational function '" + text + "': " + why);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// Removes one pair of parentheses enclosing the whole string.
std::string strip_parens(std::string s, const std::string& full) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        encloses = false;
        break;
      }
    }
    if (!encloses) break;
    s = s.substr(1, s.size() - 2);
  }
  if (s.find_first_of("()") != std::string::npos) bad(full, "unexpected parenthesis");
  return s;
}

IntPolynomial parse_poly(const std::string& raw, const std::string& full) {
  const std::string s = strip_parens(raw, full);
  if (s.empty()) bad(full, "empty polynomial");
  IntPolynomial p = IntPolynomial::zero(t_vars());
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      bad(full, "expected '+' or '-'");
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    bool has_t = false;
    std::uint32_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) bad(full, "'*' without a coefficient");
      ++i;
      if (i >= s.size() || s[i] != 't') bad(full, "expected 't' after '*'");
    }
    if (i < s.size() && s[i] == 't') {
      has_t = true;
      power = 1;
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
        if (e.empty() || e.size() > 6) bad(full, "bad exponent");
        power = static_cast<std::uint32_t>(std::stoul(e));
      }
    }
    if (digits.empty() && !has_t) bad(full, "expected a term");
    BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
    if (sign < 0) c = -c;
    const std::array<std::uint32_t, 1> e{power};
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

RationalFunction::RationalFunction()
    : num_(IntPolynomial::zero(t_vars())), den_(IntPolynomial::constant(t_vars(), BigInt(1))) {}

RationalFunction::RationalFunction(IntPolynomial numerator, IntPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.variables() != t_vars() || den_.variables() != t_vars()) {
    throw Error(ErrorCode::InvalidInput, "rational functions are in the single variable t");
  }
  if (den_.is_zero()) throw Error(ErrorCode::InvalidInput, "zero denominator");
}

RationalFunction RationalFunction::constant(long c) {
  return RationalFunction(IntPolynomial::constant(t_vars(), BigInt(c)), IntPolynomial::constant(t_vars(), BigInt(1)));
}

RationalFunction RationalFunction::parse(const std::string& text) {
  const std::string s = strip_spaces(text);
  int depth = 0;
  std::vector<std::size_t> slashes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) bad(text, "unbalanced parentheses");
    if (s[i] == '/' && depth == 0) slashes.push_back(i);
  }
  if (depth != 0) bad(text, "unbalanced parentheses");
  if (slashes.size() > 1) bad(text, "more than one '/'");
  if (slashes.empty()) return RationalFunction(parse_poly(s, text), IntPolynomial::constant(t_vars(), BigInt(1)));
  auto den = parse_poly(s.substr(slashes[0] + 1), text);
  if (den.is_zero()) bad(text, "zero denominator");
  return RationalFunction(parse_poly(s.substr(0, slashes[0]), text), std::move(den));
}

std::optional<BigRational> RationalFunction::eval(const BigRational& t) const {
  const std::array<BigRational, 1> arg{t};
  const BigRational d = den_.eval(std::span<const BigRational>(arg));
  if (d == 0) return std::nullopt;
  BigRational v = num_.eval(std::span<const BigRational>(arg)) / d;
  v.canonicalize();
  return v;
}

namespace {

std::complex<double> eval_complex(const IntPolynomial& p, std::complex<double> t) {
  std::complex<double> v = 0;
  for (const auto& term : p.raw_terms()) {
    std::complex<double> power = 1;
    for (std::uint32_t e = p.exponents(term.key)[0]; e > 0; --e) power *= t;
    v += term.coeff.get_d() * power;
  }
  return v;
}

}  // namespace

std::optional<std::complex<double>> RationalFunction::eval(std::complex<double> t) const {
  const auto d = eval_complex(den_, t);
  if (std::abs(d) == 0.0) return std::nullopt;
  return eval_complex(num_, t) / d;
}

std::string RationalFunction::to_string() const {
  if (den_ == IntPolynomial::constant(t_vars(), BigInt(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::optional<BigRational> FamilySpec::lambda_at(const BigRational& t) const { return lambda.eval(t); }

ProductFiberPoint FamilySpec::point_at(const BigRational& t) const {
  const auto lam = lambda.eval(t);
  if (!lam) throw Error(ErrorCode::InvalidInput, "lambda undefined at t = " + t.get_str());
  require_valid_lambda(*lam);
  std::vector<LegendreFiberPoint> pts;
  pts.reserve(components.size());
  for (const auto& c : components) {
    const auto x = c.x.eval(t), y = c.y.eval(t), z = c.z.eval(t);
    if (!x || !y || !z) throw Error(ErrorCode::InvalidInput, "coordinate undefined at t = " + t.get_str());
    const std::array<BigRational, 3> coords{*x, *y, *z};
    pts.emplace_back(normalize_projective(coords), *lam);
  }
  return ProductFiberPoint(std::move(pts));
}

std::optional<std::complex<double>> FamilySpec::complex_lambda_at(std::complex<double> t) const {
  return lambda.eval(t);
}

std::optional<analytic::ComplexProductPoint<double>> FamilySpec::complex_point_at(std::complex<double> t) const {
  const auto lam = lambda.eval(t);
  if (!lam) return std::nullopt;
  analytic::ComplexProductPoint<double> out;
  for (const auto& c : components) {
    const auto x = c.x.eval(t), y = c.y.eval(t), z = c.z.eval(t);
    if (!x || !y || !z) return std::nullopt;
    out.push_back({{*x, *y, *z}, *lam});
  }
  return out;
}

namespace {

FamilySpec over_x2_base(std::string name, const char* x, const char* y, const char* z) {
  FamilySpec f;
  f.name = std::move(name);
  f.components.push_back({RationalFunction::parse(x), RationalFunction::parse(y), RationalFunction::parse(z)});
  f.lambda = RationalFunction::parse("2 - 2t^2");
  return f;
}

}  // namespace

FamilySpec builtin_family_x2() { return over_x2_base("x2", "2", "2t", "1"); }
FamilySpec builtin_family_zero() { return over_x2_base("zero", "0", "1", "0"); }
FamilySpec builtin_family_two_torsion() { return over_x2_base("two-torsion", "0", "0", "1"); }

FamilySpec parse_family_json(const std::string& text, const std::string& name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("family file is not valid JSON: ") + e.what());
  }
  try {
    FamilySpec f;
    f.name = doc.value("name", name);
    const auto& comps = doc.at("components");
    if (!comps.is_array() || comps.empty()) throw Error(ErrorCode::InvalidInput, "components must be a non-empty array");
    for (const auto& c : comps) {
      FamilyComponent fc;
      fc.x = RationalFunction::parse(c.at("x").get<std::string>());
      fc.y = RationalFunction::parse(c.at("y").get<std::string>());
      if (c.contains("z")) fc.z = RationalFunction::parse(c.at("z").get<std::string>());
      f.components.push_back(std::move(fc));
    }
    f.lambda = RationalFunction::parse(doc.at("lambda").get<std::string>());
    if (doc.contains("g") && doc.at("g").get<long>() != static_cast<long>(f.components.size())) {
      throw Error(ErrorCode::InvalidInput, "g does not match the number of components");
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed family file: ") + e.what());
  }
}

std::string family_to_json(const FamilySpec& f) {
  nlohmann::json doc;
  doc["name"] = f.name;
  doc["g"] = f.genus();
  doc["components"] = nlohmann::json::array();
  for (const auto& c : f.components) {
    doc["components"].push_back({{"x", c.x.to_string()}, {"y", c.y.to_string()}, {"z", c.z.to_string()}});
  }
  doc["lambda"] = f.lambda.to_string();
  return doc.dump();
}

FamilySpec load_family(const std::string& ref) {
  static constexpr std::string_view prefix = "builtin:";
  if (ref.starts_with(prefix)) {
    const auto name = ref.substr(prefix.size());
    if (name == "x2") return builtin_family_x2();
    if (name == "zero") return builtin_family_zero();
    if (name == "two-torsion") return builtin_family_two_torsion();
    throw Error(ErrorCode::InvalidInput, "unknown builtin family '" + name + "'");
  }
  std::ifstream in(ref);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read family file " + ref);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family_json(ss.str(), ref);
}

}  // namespace legh
