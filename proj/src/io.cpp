#include "resurgo/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace resurgo {

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error: " + msg, 1, pos_ + 1);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFunc expr() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    RatFunc acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      if (eat('*')) acc *= factor();
      else if (eat('/')) {
        RatFunc d = factor();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        // Implicit multiplication: "4z", "2(1-z)", "3i z".
        char c = peek();
        if (c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == 'i')
          acc *= factor();
        else
          break;
      }
    }
    return acc;
  }

  RatFunc factor() {
    RatFunc b = base();
    if (eat('^')) {
      skip_ws();
      size_t start = pos_;
      bool neg = eat('-');
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      if (digits.empty()) {
        pos_ = start;
        fail("expected integer exponent after '^'");
      }
      long e = std::stol(digits);
      RatFunc acc(GaussianRational(1));
      for (long k = 0; k < e; ++k) acc *= b;
      if (neg) acc = RatFunc(GaussianRational(1)) / acc;
      return acc;
    }
    return b;
  }

  RatFunc base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'z') {
      ++pos_;
      return RatFunc::variable();
    }
    if (c == 'i') {
      ++pos_;
      return RatFunc(GaussianRational::i());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      mpq_class num(digits);
      // "p/q" literal: only when a digit follows immediately, so that
      // rational literals bind tighter than general division but "3//4" is
      // still rejected downstream.
      size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        size_t slash = pos_;
        ++pos_;
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          std::string den;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            den += text_[pos_++];
          if (mpz_class(den) == 0) {
            pos_ = slash + 1;
            fail("zero denominator in rational literal");
          }
          num /= mpq_class(den);
          num.canonicalize();
        } else if (pos_ < text_.size() && text_[pos_] == '/') {
          ++pos_;
          fail("malformed rational (doubled '/')");
        } else {
          pos_ = save;  // plain division of expressions
        }
      } else {
        pos_ = save;
      }
      GaussianRational value{num, mpq_class(0)};
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'i') {
        ++pos_;
        value = GaussianRational(mpq_class(0), num);
      }
      return RatFunc(value);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return ExprParser(text).parse(); }

GaussianRational parse_rational_literal(const std::string& text) {
  RatFunc f = parse_ratfunc(text);
  if (!f.is_poly() || f.num().degree() > 0)
    throw ParseError("expected a rational literal", 1, 1);
  return f.num().is_zero() ? GaussianRational(0) : f.num()[0];
}

namespace {

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_ratfunc(j.get<std::string>());
  if (j.is_number_integer()) return RatFunc(GaussianRational(j.get<long>()));
  if (j.is_array()) {
    // Coefficient list, ascending powers of z.
    std::vector<GaussianRational> coeffs;
    for (const auto& e : j) {
      if (e.is_string())
        coeffs.push_back(parse_rational_literal(e.get<std::string>()));
      else if (e.is_number_integer())
        coeffs.push_back(GaussianRational(e.get<long>()));
      else
        throw ParseError("coefficient entries must be strings or integers", 1, 1);
    }
    return RatFunc(Poly(std::move(coeffs)));
  }
  throw ParseError("expected string, integer, or coefficient list", 1, 1);
}

}  // namespace

SpecFile parse_spec_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what(), 1, e.byte);
  }
  SpecFile out;
  if (j.contains("precision_bits")) out.precision_bits = j["precision_bits"].get<long>();
  if (j.contains("series_order")) out.series_order = j["series_order"].get<int>();
  if (j.contains("singulants")) {
    for (const auto& s : j["singulants"]) out.explicit_singulants.push_back(ratfunc_from_json(s));
  }
  if (!j.contains("order") && !out.explicit_singulants.empty()) {
    out.has_ode = false;
    return out;
  }
  if (!j.contains("order") || !j.contains("coeffs"))
    throw ParseError("spec needs \"order\" and \"coeffs\"", 1, 1);
  out.ode.order = j["order"].get<int>();
  for (const auto& c : j["coeffs"]) out.ode.coeffs.push_back(ratfunc_from_json(c));
  if (out.ode.coeffs.size() != static_cast<size_t>(out.ode.order) + 1)
    throw ParseError("coeffs must list P_0..P_N", 1, 1);
  if (j.contains("forcing"))
    for (const auto& f : j["forcing"]) out.ode.forcing.push_back(ratfunc_from_json(f));
  return out;
}

SpecFile load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_json(ss.str());
}

std::string spec_to_json(const SpecFile& spec) {
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  if (spec.has_ode) {
    j["order"] = spec.ode.order;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : spec.ode.coeffs) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    nlohmann::json forcing = nlohmann::json::array();
    for (const auto& f : spec.ode.forcing) forcing.push_back(f.str());
    j["forcing"] = forcing;
  }
  if (!spec.explicit_singulants.empty()) {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& chi : spec.explicit_singulants) s.push_back(chi.str());
    j["singulants"] = s;
  }
  j["precision_bits"] = static_cast<long>(spec.precision_bits);
  j["series_order"] = spec.series_order;
  return j.dump(2);
}

std::string json_complex(const BigComplex& v, size_t digits) {
  return std::string("{\"re\": \"") + v.real().str(digits) + "\", \"im\": \"" +
         v.imag().str(digits) + "\"}";
}

}  // namespace resurgo
