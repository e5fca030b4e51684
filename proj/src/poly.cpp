#include "ftq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ftq/errors.hpp"

namespace ftq {

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message + " at offset " + std::to_string(pos_) + " in polynomial '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Polynomial::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint32_t mod_reduce(const Integer& value, std::uint32_t prime) {
  Integer r = value % prime;
  if (r < 0) r += prime;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Polynomial Polynomial::constant(const Integer& value) {
  Polynomial p;
  p.add_term({}, value);
  return p;
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.add_term({{name, 1}}, 1);
  return p;
}

Polynomial Polynomial::parse(std::string_view text) { return PolynomialParser(text).parse(); }

std::vector<std::string> Polynomial::variables() const {
  std::set<std::string> names;
  for (const auto& [monomial, _] : terms_)
    for (const auto& [name, _e] : monomial) names.insert(name);
  return {names.begin(), names.end()};
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void Polynomial::add_term(const Monomial& monomial, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : rhs.terms_) {
      Monomial m = m1;
      for (const auto& [name, e] : m2) m[name] += e;
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first.
  std::vector<std::pair<Monomial, Integer>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (const auto& [_, e] : a.first) da += e;
    for (const auto& [_, e] : b.first) db += e;
    return da > db;
  });
  for (const auto& [monomial, coefficient] : ordered) {
    Integer c = coefficient;
    if (c < 0) {
      out << "-";
      c = -c;
    } else if (!first) {
      out << "+";
    }
    first = false;
    const bool unit = (c == 1) && !monomial.empty();
    if (!unit) out << c.get_str();
    bool need_star = !unit;
    for (const auto& [name, e] : monomial) {
      if (need_star) out << "*";
      out << name;
      if (e != 1) out << "^" << e;
      need_star = true;
    }
  }
  return out.str();
}

ModularPolynomial::ModularPolynomial(const Polynomial& poly, std::span<const std::string> order, std::uint32_t prime)
    : prime_(prime) {
  for (const auto& [monomial, coefficient] : poly.terms()) {
    Term term{mod_reduce(coefficient, prime), {}};
    for (const auto& [name, e] : monomial) {
      auto it = std::find(order.begin(), order.end(), name);
      if (it == order.end()) throw InvalidInput("unknown variable '" + name + "'");
      term.factors.emplace_back(static_cast<std::size_t>(it - order.begin()), e);
    }
    if (term.coefficient != 0) terms_.push_back(std::move(term));
  }
}

std::uint32_t ModularPolynomial::evaluate(std::span<const std::uint32_t> values) const {
  std::uint64_t acc = 0;
  for (const auto& term : terms_) {
    std::uint64_t t = term.coefficient;
    for (const auto& [index, e] : term.factors) {
      for (unsigned i = 0; i < e; ++i) t = t * values[index] % prime_;
    }
    acc = (acc + t) % prime_;
  }
  return static_cast<std::uint32_t>(acc);
}

PolyQ::PolyQ(const Integer& value) {
  if (value != 0) coefficients_.push_back(value);
}

PolyQ::PolyQ(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) { normalize(); }

PolyQ PolyQ::q() { return PolyQ(std::vector<Integer>{0, 1}); }

PolyQ PolyQ::parse(std::string_view text) {
  const Polynomial p = Polynomial::parse(text);
  std::vector<Integer> coefficients;
  for (const auto& [monomial, c] : p.terms()) {
    unsigned degree = 0;
    for (const auto& [name, e] : monomial) {
      if (name != "q") throw InvalidInput("polynomial in q expected, found variable '" + name + "'");
      degree = e;
    }
    if (coefficients.size() <= degree) coefficients.resize(degree + 1);
    coefficients[degree] += c;
  }
  return PolyQ(std::move(coefficients));
}

void PolyQ::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer PolyQ::evaluate(const Integer& q) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

Rational PolyQ::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * q + Rational(*it);
  return acc;
}

std::string PolyQ::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    Integer c = coefficients_[d];
    if (c == 0) continue;
    if (c < 0) {
      out << "-";
      c = -c;
    } else if (!first) {
      out << "+";
    }
    first = false;
    if (d == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    out << "q";
    if (d > 1) out << "^" << d;
  }
  return out.str();
}

PolyQ PolyQ::operator+(const PolyQ& rhs) const {
  std::vector<Integer> c(std::max(coefficients_.size(), rhs.coefficients_.size()));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) c[i] += coefficients_[i];
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) c[i] += rhs.coefficients_[i];
  return PolyQ(std::move(c));
}

PolyQ PolyQ::operator-(const PolyQ& rhs) const { return *this + (-rhs); }

PolyQ PolyQ::operator-() const {
  std::vector<Integer> c = coefficients_;
  for (auto& x : c) x = -x;
  return PolyQ(std::move(c));
}

PolyQ PolyQ::operator*(const PolyQ& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> c(coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) c[i + j] += coefficients_[i] * rhs.coefficients_[j];
  return PolyQ(std::move(c));
}

}  // namespace ftq
