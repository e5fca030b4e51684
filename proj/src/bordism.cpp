#include "ftq/bordism.hpp"

#include <cctype>
#include <cmath>

#include "ftq/errors.hpp"

namespace ftq::bordism {

namespace {

struct Arity {
  unsigned in, out;
};

Arity atom_arity(AtomKind kind) {
  switch (kind) {
    case AtomKind::Unit: return {0, 1};
    case AtomKind::Counit: return {1, 0};
    case AtomKind::Mult: return {2, 1};
    case AtomKind::Comult: return {1, 2};
    case AtomKind::Twist: return {2, 2};
    case AtomKind::Id: return {1, 1};
    case AtomKind::Genus: return {1, 1};
    case AtomKind::Sigma: return {0, 0};
    case AtomKind::Pair: return {2, 0};
    case AtomKind::Copair: return {0, 2};
  }
  return {0, 0};
}

const char* atom_name(AtomKind kind) {
  switch (kind) {
    case AtomKind::Unit: return "unit";
    case AtomKind::Counit: return "counit";
    case AtomKind::Mult: return "mult";
    case AtomKind::Comult: return "comult";
    case AtomKind::Twist: return "twist";
    case AtomKind::Id: return "id";
    case AtomKind::Genus: return "genus";
    case AtomKind::Sigma: return "sigma";
    case AtomKind::Pair: return "pair";
    case AtomKind::Copair: return "copair";
  }
  return "?";
}

std::string arity_text(const Expr& e) { return std::to_string(e.inputs) + "→" + std::to_string(e.outputs); }

}  // namespace

ExprPtr atom(AtomKind kind, unsigned genus, SourceSpan span) {
  const auto a = atom_arity(kind);
  return std::make_shared<const Expr>(Expr{Atom{kind, kind == AtomKind::Sigma ? genus : 0}, a.in, a.out, span});
}

ExprPtr compose(ExprPtr after, ExprPtr before, SourceSpan span) {
  if (after->inputs != before->outputs)
    throw TypeError("cannot compose: the left factor takes " + std::to_string(after->inputs) +
                    " circles but the right factor produces " + std::to_string(before->outputs) + " (at offset " +
                    std::to_string(span.begin) + ")");
  const unsigned in = before->inputs, out = after->outputs;
  return std::make_shared<const Expr>(Expr{Composition{std::move(after), std::move(before)}, in, out, span});
}

ExprPtr tensor(ExprPtr left, ExprPtr right, SourceSpan span) {
  const unsigned in = left->inputs + right->inputs, out = left->outputs + right->outputs;
  return std::make_shared<const Expr>(Expr{Tensor{std::move(left), std::move(right)}, in, out, span});
}

ExprPtr power(ExprPtr base, unsigned exponent, SourceSpan span) {
  if (base->inputs != base->outputs)
    throw TypeError("cannot take a power of a bordism of type " + arity_text(*base) + ": inputs " +
                    std::to_string(base->inputs) + " vs outputs " + std::to_string(base->outputs));
  const unsigned n = base->inputs;
  return std::make_shared<const Expr>(Expr{Power{std::move(base), exponent}, n, n, span});
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    auto e = expr();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  unsigned integer() {
    skip();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    if (pos_ - start > 6) error("integer too large");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  ExprPtr expr() {
    skip();
    const auto start = pos_;
    auto e = term();
    while (accept('.')) {
      auto rhs = term();
      e = compose(std::move(e), std::move(rhs), {start, pos_});
    }
    return e;
  }

  ExprPtr term() {
    skip();
    const auto start = pos_;
    auto e = factor();
    while (accept('*')) {
      auto rhs = factor();
      e = tensor(std::move(e), std::move(rhs), {start, pos_});
    }
    return e;
  }

  ExprPtr factor() {
    skip();
    const auto start = pos_;
    ExprPtr e;
    if (accept('(')) {
      e = expr();
      expect(')');
    } else {
      e = primary();
    }
    if (accept('^')) e = power(std::move(e), integer(), {start, pos_});
    return e;
  }

  ExprPtr primary() {
    skip();
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) {
      if (pos_ == text_.size()) error("unexpected end of input");
      error("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    const auto word = text_.substr(start, pos_ - start);
    static constexpr AtomKind kinds[] = {AtomKind::Unit,  AtomKind::Counit, AtomKind::Mult, AtomKind::Comult,
                                         AtomKind::Twist, AtomKind::Id,     AtomKind::Genus, AtomKind::Pair,
                                         AtomKind::Copair};
    for (auto kind : kinds)
      if (word == atom_name(kind)) return atom(kind, 0, {start, pos_});
    if (word == "sigma") {
      expect('(');
      const auto g = integer();
      expect(')');
      return atom(AtomKind::Sigma, g, {start, pos_});
    }
    pos_ = start;
    error("unknown atom '" + std::string(word) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Precedence: 0 composition, 1 tensor, 2 factor.
void print_to(const Expr& e, int context, std::string& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Atom>) {
          out += atom_name(node.kind);
          if (node.kind == AtomKind::Sigma) out += "(" + std::to_string(node.genus) + ")";
        } else if constexpr (std::is_same_v<T, Composition>) {
          if (context > 0) out += "(";
          print_to(*node.after, 0, out);
          out += " . ";
          print_to(*node.before, 1, out);
          if (context > 0) out += ")";
        } else if constexpr (std::is_same_v<T, Tensor>) {
          if (context > 1) out += "(";
          print_to(*node.left, 1, out);
          out += " * ";
          print_to(*node.right, 2, out);
          if (context > 1) out += ")";
        } else {
          const bool bare = std::holds_alternative<Atom>(node.base->node);
          if (!bare) out += "(";
          print_to(*node.base, 0, out);
          if (!bare) out += ")";
          out += "^" + std::to_string(node.exponent);
        }
      },
      e.node);
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Expr& expr) {
  std::string out;
  print_to(expr, 0, out);
  return out;
}

bool same_structure(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index() || a.inputs != b.inputs || a.outputs != b.outputs) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Atom>)
          return x.kind == y.kind && x.genus == y.genus;
        else if constexpr (std::is_same_v<T, Composition>)
          return same_structure(*x.after, *y.after) && same_structure(*x.before, *y.before);
        else if constexpr (std::is_same_v<T, Tensor>)
          return same_structure(*x.left, *y.left) && same_structure(*x.right, *y.right);
        else
          return x.exponent == y.exponent && same_structure(*x.base, *y.base);
      },
      a.node);
}

const Rational& TensorLinearMap::scalar() const {
  if (inputs != 0 || outputs != 0) throw TypeError("bordism of type " + std::to_string(inputs) + "→" +
                                                   std::to_string(outputs) + " has no scalar value");
  return matrix(0, 0);
}

namespace {

class Evaluator {
 public:
  Evaluator(const ClassAlgebra& algebra, const EvaluationLimits& limits)
      : algebra_(algebra), limits_(limits), k_(algebra.dimension()) {}

  TensorLinearMap run(const Expr& e) {
    check(e.inputs, e.outputs);
    return std::visit([&](const auto& node) { return eval(node, e); }, e.node);
  }

 private:
  void check(unsigned in, unsigned out) const {
    const double entries = std::pow(double(k_), double(in) + double(out));
    if (entries > double(limits_.max_entries))
      throw MemoryCap("a " + std::to_string(in) + "→" + std::to_string(out) + " map over " + std::to_string(k_) +
                      " classes needs " + std::to_string(static_cast<unsigned long long>(entries)) +
                      " entries, above the cap of " + std::to_string(limits_.max_entries));
  }

  std::size_t dim(unsigned n) const {
    std::size_t d = 1;
    for (unsigned i = 0; i < n; ++i) d *= k_;
    return d;
  }

  TensorLinearMap eval(const Atom& a, const Expr& e) {
    const auto k = k_;
    const Rational inv_order(1, static_cast<unsigned long>(algebra_.g().order()));
    RationalMatrix m;
    switch (a.kind) {
      case AtomKind::Unit:
        m = RationalMatrix(k, 1);
        m(0, 0) = 1;
        break;
      case AtomKind::Counit:
        m = RationalMatrix(1, k);
        m(0, 0) = inv_order;
        break;
      case AtomKind::Mult:
        m = RationalMatrix(k, k * k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < k; ++c)
              m(c, i * k + j) = static_cast<unsigned long>(algebra_.structure_constants()(i, j, c));
        break;
      case AtomKind::Comult:
        m = RationalMatrix(k * k, k);
        for (std::size_t j = 0; j < k; ++j) {
          const auto t = algebra_.comultiply(algebra_.indicator(j));
          for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y) m(x * k + y, j) = t(x, y);
        }
        break;
      case AtomKind::Twist:
        m = RationalMatrix(k * k, k * k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(j * k + i, i * k + j) = 1;
        break;
      case AtomKind::Id:
        m = RationalMatrix::identity(k);
        break;
      case AtomKind::Genus:
        m = algebra_.genus_matrix();
        break;
      case AtomKind::Sigma: {
        auto v = algebra_.unit();
        for (unsigned i = 0; i < a.genus; ++i) v = algebra_.convolve(v, algebra_.genus_element());
        m = RationalMatrix(1, 1);
        m(0, 0) = algebra_.counit(v);
        break;
      }
      case AtomKind::Pair:
        m = RationalMatrix(1, k * k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(0, i * k + j) = algebra_.pair(algebra_.indicator(i), algebra_.indicator(j));
        break;
      case AtomKind::Copair: {
        m = RationalMatrix(k * k, 1);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i * k + j, 0) = algebra_.gamma(i, j);
        break;
      }
    }
    return {e.inputs, e.outputs, std::move(m)};
  }

  TensorLinearMap eval(const Composition& c, const Expr& e) {
    auto after = run(*c.after);
    auto before = run(*c.before);
    return {e.inputs, e.outputs, after.matrix * before.matrix};
  }

  TensorLinearMap eval(const Tensor& t, const Expr& e) {
    auto left = run(*t.left);
    auto right = run(*t.right);
    return {e.inputs, e.outputs, kronecker(left.matrix, right.matrix)};
  }

  TensorLinearMap eval(const Power& p, const Expr& e) {
    auto result = RationalMatrix::identity(dim(e.inputs));
    if (p.exponent == 0) return {e.inputs, e.outputs, std::move(result)};
    const auto base = run(*p.base);
    for (unsigned i = 0; i < p.exponent; ++i) result = base.matrix * result;
    return {e.inputs, e.outputs, std::move(result)};
  }

  const ClassAlgebra& algebra_;
  const EvaluationLimits& limits_;
  std::size_t k_;
};

}  // namespace

TensorLinearMap evaluate(const Expr& expr, const ClassAlgebra& algebra, const EvaluationLimits& limits) {
  return Evaluator(algebra, limits).run(expr);
}

}  // namespace ftq::bordism
