#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "ftq/class_algebra.hpp"
#include "ftq/linalg.hpp"

namespace ftq::bordism {

enum class AtomKind { Unit, Counit, Mult, Comult, Twist, Id, Genus, Sigma, Pair, Copair };

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Atom {
  AtomKind kind;
  unsigned genus = 0;  // sigma(g) only
};
/// `after . before`, i.e. after ∘ before.
struct Composition {
  ExprPtr after;
  ExprPtr before;
};
struct Tensor {
  ExprPtr left;
  ExprPtr right;
};
struct Power {
  ExprPtr base;
  unsigned exponent;
};

/// Well-typed bordism word; `inputs`/`outputs` count boundary circles.
struct Expr {
  std::variant<Atom, Composition, Tensor, Power> node;
  unsigned inputs = 0;
  unsigned outputs = 0;
  SourceSpan span;
};

/// Smart constructors; each checks arities and throws TypeError.
ExprPtr atom(AtomKind kind, unsigned genus = 0, SourceSpan span = {});
ExprPtr compose(ExprPtr after, ExprPtr before, SourceSpan span = {});
ExprPtr tensor(ExprPtr left, ExprPtr right, SourceSpan span = {});
ExprPtr power(ExprPtr base, unsigned exponent, SourceSpan span = {});

/// EXPR   := TERM { "." TERM }
/// TERM   := FACTOR { "*" FACTOR }
/// FACTOR := (ATOM | "(" EXPR ")") [ "^" INT ]
/// ATOM   := unit | counit | mult | comult | twist | id | genus | pair | copair | sigma "(" INT ")"
/// Throws SyntaxError (with offset) or TypeError (with both arities).
ExprPtr parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(print(e)) is structurally equal to e.
std::string print(const Expr& expr);

/// Structural equality ignoring source spans.
bool same_structure(const Expr& a, const Expr& b);

/// Linear map Z(S¹)^{⊗n} → Z(S¹)^{⊗m} as a k^m × k^n matrix over the
/// class-indicator basis; tensor factor 1 is the most significant digit.
struct TensorLinearMap {
  unsigned inputs = 0;
  unsigned outputs = 0;
  RationalMatrix matrix;

  /// The scalar of a 0 → 0 map.
  const Rational& scalar() const;
  friend bool operator==(const TensorLinearMap&, const TensorLinearMap&) = default;
};

struct EvaluationLimits {
  /// Largest number of dense matrix entries k^(m+n) any intermediate may have.
  std::size_t max_entries = 1'000'000;
};

/// Frobenius TQFT: unit ↦ η, counit ↦ ε, mult ↦ μ, comult ↦ δ, twist ↦ swap;
/// genus = mult . comult, sigma(g) = counit . genus^g . unit,
/// pair = counit . mult, copair = comult . unit. Throws MemoryCap.
TensorLinearMap evaluate(const Expr& expr, const ClassAlgebra& algebra, const EvaluationLimits& limits = {});

}  // namespace ftq::bordism
