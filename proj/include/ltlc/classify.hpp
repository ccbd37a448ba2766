// Syntactic classes: boxed, positive, negative, untied, Sahlqvist. The
// classifiers produce derivation trees (UntiedShape) that the correspondence
// engine consumes, or point at the offending subformula when they fail.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltlc/formula.hpp"

namespace ltlc {

enum class ShapeKind { Boxed, Negative, Until, Conj, Fx, XWrap, GhatWrap };

// Derivation tree for the untied grammar. Until keeps its guard as a leaf
// shape (boxed or negative). XWrap/GhatWrap are never produced by the
// classifiers; they exist so the minimal-assignment clauses for X and bounded-G
// wrappers are representable and testable on hand-built shapes.
template <typename Ptr>
struct UntiedShape {
  using ShapePtr = std::shared_ptr<const UntiedShape<Ptr>>;

  ShapeKind kind;
  Ptr formula;          // Boxed / Negative leaf payload
  ShapePtr guard;       // Until
  ShapePtr child;       // Until tail, Fx, XWrap, GhatWrap
  ShapePtr left, right; // Conj
  std::string var;      // Fx
  TermPtr lo, hi;       // GhatWrap

  static ShapePtr boxed(Ptr f) {
    return std::make_shared<UntiedShape>(UntiedShape{ShapeKind::Boxed, std::move(f), nullptr,
                                                     nullptr, nullptr, nullptr, "", nullptr,
                                                     nullptr});
  }
  static ShapePtr negative(Ptr f) {
    return std::make_shared<UntiedShape>(UntiedShape{ShapeKind::Negative, std::move(f), nullptr,
                                                     nullptr, nullptr, nullptr, "", nullptr,
                                                     nullptr});
  }
  static ShapePtr until(ShapePtr g, ShapePtr tail) {
    if (!g || (g->kind != ShapeKind::Boxed && g->kind != ShapeKind::Negative))
      throw std::invalid_argument("until guard shape must be a boxed or negative leaf");
    return std::make_shared<UntiedShape>(UntiedShape{ShapeKind::Until, nullptr, std::move(g),
                                                     std::move(tail), nullptr, nullptr, "",
                                                     nullptr, nullptr});
  }
  static ShapePtr conj(ShapePtr l, ShapePtr r) {
    return std::make_shared<UntiedShape>(UntiedShape{ShapeKind::Conj, nullptr, nullptr, nullptr,
                                                     std::move(l), std::move(r), "", nullptr,
                                                     nullptr});
  }
  static ShapePtr fx(std::string v, ShapePtr c) {
    return std::make_shared<UntiedShape>(UntiedShape{ShapeKind::Fx, nullptr, nullptr,
                                                     std::move(c), nullptr, nullptr, std::move(v),
                                                     nullptr, nullptr});
  }
  static ShapePtr x_wrap(ShapePtr c) {
    return std::make_shared<UntiedShape>(UntiedShape{ShapeKind::XWrap, nullptr, nullptr,
                                                     std::move(c), nullptr, nullptr, "", nullptr,
                                                     nullptr});
  }
  static ShapePtr ghat_wrap(TermPtr lo, TermPtr hi, ShapePtr c) {
    if (equal(lo, hi)) throw std::invalid_argument("Ghat bounds must be syntactically distinct");
    return std::make_shared<UntiedShape>(UntiedShape{ShapeKind::GhatWrap, nullptr, nullptr,
                                                     std::move(c), nullptr, nullptr, "",
                                                     std::move(lo), std::move(hi)});
  }
};

using LtlShape = UntiedShape<LtlPtr>;
using LtlShapePtr = LtlShape::ShapePtr;
using PrimeShape = UntiedShape<PrimePtr>;
using PrimeShapePtr = PrimeShape::ShapePtr;

// Either a derivation or the offending subformula with a reason.
template <typename Ptr>
struct ClassifyOutcome {
  typename UntiedShape<Ptr>::ShapePtr shape;
  Ptr offender;
  std::string reason;

  bool untied() const { return shape != nullptr; }
};

// --- LTL side (formulas must be desugared) ---

// A chain of G/X applied to an atom.
bool is_ltl_boxed(const LtlPtr& f);
// Built without negation (and without sugar).
bool is_ltl_positive(const LtlPtr& f);
// The negation of a positive formula; `true` counts via true = !false.
bool is_ltl_negative(const LtlPtr& f);
// Untied grammar: boxed | negative | guard U untied | untied & untied, with
// F t read as true U t.
ClassifyOutcome<LtlPtr> classify_ltl_untied(const LtlPtr& f);

// --- LTL' side ---

// A chain of G/Ghat/X applied to an atom.
bool is_ltlprime_boxed(const PrimePtr& f);
bool is_ltlprime_positive(const PrimePtr& f);
// !positive, or G/Ghat applied to a negative formula; `true` counts.
bool is_ltlprime_negative(const PrimePtr& f);
// Untied grammar: boxed | negative | untied & untied | Fx[x] untied.
ClassifyOutcome<PrimePtr> classify_ltlprime_untied(const PrimePtr& f);

// --- Sahlqvist decomposition ---

class NotSahlqvistError : public std::runtime_error {
public:
  LtlPtr offender;
  NotSahlqvistError(const std::string& message, LtlPtr off)
      : std::runtime_error(message), offender(std::move(off)) {}
};

struct SahlqvistDecomposition {
  std::vector<LtlPtr> untied_parts;     // E_i, where the input is /\ !E_i
  std::vector<LtlShapePtr> shapes;      // derivations of the E_i
};

// Conjunction (flattened modulo associativity) of conjuncts in syntactic order.
std::vector<LtlPtr> flatten_conjuncts(const LtlPtr& f);
// Desugars, then requires every conjunct to be the negation of an untied
// formula. Throws NotSahlqvistError otherwise.
SahlqvistDecomposition decompose_sahlqvist(const LtlPtr& f);
bool is_ltl_sahlqvist(const LtlPtr& f);

// Rebuild the classified formula from its derivation. An F node is derived in
// its "true U" reading, so it rebuilds as an Until.
LtlPtr shape_to_formula(const LtlShapePtr& s);
PrimePtr shape_to_formula(const PrimeShapePtr& s);

} // namespace ltlc
