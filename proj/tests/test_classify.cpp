#include "doctest.h"

#include <random>

#include "ltlc/classify.hpp"
#include "ltlc/generate.hpp"
#include "ltlc/parser.hpp"
#include "ltlc/printer.hpp"
#include "ltlc/translate.hpp"

using namespace ltlc;

TEST_SUITE("classify") {

TEST_CASE("boxed formulas are G/X chains over an atom") {
  CHECK(is_ltl_boxed(parse_ltl("G X q")));
  CHECK(is_ltl_boxed(parse_ltl("q")));
  CHECK_FALSE(is_ltl_boxed(parse_ltl("F q")));
  CHECK_FALSE(is_ltl_boxed(parse_ltl("G (p & q)")));
  CHECK_FALSE(is_ltl_boxed(parse_ltl("true")));
}

TEST_CASE("plain-language positive and negative formulas") {
  CHECK(is_ltl_positive(parse_ltl("p & (q | G p)")));
  CHECK_FALSE(is_ltl_positive(parse_ltl("!p")));
  CHECK(is_ltl_negative(parse_ltl("true")));
  CHECK(is_ltl_negative(parse_ltl("!(p U q)")));
  CHECK_FALSE(is_ltl_negative(parse_ltl("!(p -> q)"))); // sugar is not positive
  CHECK_FALSE(is_ltl_negative(parse_ltl("!!p")));
}

TEST_CASE("extended-language positive formulas") {
  CHECK(is_ltlprime_positive(parse_ltlprime("G Fx[x] q")));
  CHECK_FALSE(is_ltlprime_positive(parse_ltlprime("Fx[x] (Gh[@,x] p & !q)")));
  CHECK(is_ltlprime_positive(parse_ltlprime("false")));
  CHECK(is_ltlprime_positive(parse_ltlprime("true")));
}

TEST_CASE("extended-language negative formulas") {
  CHECK(is_ltlprime_negative(parse_ltlprime("Gh[@,S(@)] !(p & q)")));
  CHECK_FALSE(is_ltlprime_negative(parse_ltlprime("!X !X q")));
  CHECK(is_ltlprime_negative(parse_ltlprime("G !q")));
  CHECK(is_ltlprime_negative(parse_ltlprime("true")));
  CHECK(is_ltlprime_negative(parse_ltlprime("G Gh[@,S(@)] !q")));
  CHECK_FALSE(is_ltlprime_negative(parse_ltlprime("X !q")));
}

TEST_CASE("plain-language untied derivations") {
  auto o1 = classify_ltl_untied(parse_ltl("!q U q"));
  REQUIRE(o1.untied());
  REQUIRE(o1.shape->kind == ShapeKind::Until);
  CHECK(o1.shape->guard->kind == ShapeKind::Negative);
  CHECK(o1.shape->child->kind == ShapeKind::Boxed);

  auto o2 = classify_ltl_untied(desugar(parse_ltl("G q & F !q")));
  REQUIRE(o2.untied());
  REQUIRE(o2.shape->kind == ShapeKind::Conj);
  CHECK(o2.shape->left->kind == ShapeKind::Boxed);
  REQUIRE(o2.shape->right->kind == ShapeKind::Until);
  CHECK(o2.shape->right->guard->kind == ShapeKind::Negative);
  CHECK(equal(o2.shape->right->guard->formula, LtlFormula::True()));
  CHECK(o2.shape->right->child->kind == ShapeKind::Negative);

  auto o3 = classify_ltl_untied(parse_ltl("(F q) U q"));
  CHECK_FALSE(o3.untied());
  CHECK(print_ltl(o3.offender) == "F q");
  CHECK_FALSE(o3.reason.empty());
}

namespace {

// The classifier derives F t in its "true U t" reading, so a rebuilt formula
// matches the input only up to that expansion.
LtlPtr expand_f(const LtlPtr& f) {
  if (!f) return f;
  switch (f->kind) {
    case LtlKind::Atom:
    case LtlKind::True:
    case LtlKind::False:
      return f;
    case LtlKind::Not:
      return LtlFormula::Not(expand_f(f->lhs));
    case LtlKind::And:
      return LtlFormula::And(expand_f(f->lhs), expand_f(f->rhs));
    case LtlKind::Or:
      return LtlFormula::Or(expand_f(f->lhs), expand_f(f->rhs));
    case LtlKind::Implies:
      return LtlFormula::Implies(expand_f(f->lhs), expand_f(f->rhs));
    case LtlKind::Iff:
      return LtlFormula::Iff(expand_f(f->lhs), expand_f(f->rhs));
    case LtlKind::G:
      return LtlFormula::G(expand_f(f->lhs));
    case LtlKind::F:
      return LtlFormula::U(LtlFormula::True(), expand_f(f->lhs));
    case LtlKind::X:
      return LtlFormula::X(expand_f(f->lhs));
    case LtlKind::Until:
      return LtlFormula::U(expand_f(f->lhs), expand_f(f->rhs));
  }
  return f;
}

} // namespace

TEST_CASE("derivations rebuild the classified formula up to the F = true U reading") {
  for (const char* text : {"!q U q", "G q & F !q", "q", "!p", "(G p) U (q U r)"}) {
    LtlPtr f = desugar(parse_ltl(text));
    auto outcome = classify_ltl_untied(f);
    REQUIRE(outcome.untied());
    CHECK(equal(shape_to_formula(outcome.shape), expand_f(f)));
  }
}

TEST_CASE("component decomposition accepts and rejects per the grammar") {
  auto d1 = decompose_sahlqvist(parse_ltl("!((!q) U q)"));
  REQUIRE(d1.untied_parts.size() == 1);
  CHECK(print_ltl(d1.untied_parts[0]) == "!q U q");

  auto d2 = decompose_sahlqvist(parse_ltl("!(G q & F !q) & !(X q & !q)"));
  CHECK(d2.untied_parts.size() == 2);
  CHECK(d2.shapes.size() == 2);

  CHECK(is_ltl_sahlqvist(parse_ltl("!((!q) U q)")));
  CHECK_FALSE(is_ltl_sahlqvist(parse_ltl("!((F q) U q)")));
  CHECK_FALSE(is_ltl_sahlqvist(parse_ltl("G q"))); // not a negation

  try {
    decompose_sahlqvist(parse_ltl("!((F q) U q)"));
    FAIL("expected rejection");
  } catch (const NotSahlqvistError& e) {
    CHECK(print_ltl(e.offender) == "F q");
  }
}

TEST_CASE("re-conjoining the negated parts reproduces the input") {
  for (const char* text :
       {"!((!q) U q)", "!(G q & F !q) & !(X q & !q)", "!(p U q) & !q & !(G p)"}) {
    LtlPtr f = desugar(parse_ltl(text));
    auto dec = decompose_sahlqvist(f);
    LtlPtr rebuilt;
    for (const LtlPtr& part : dec.untied_parts) {
      LtlPtr neg = LtlFormula::Not(part);
      rebuilt = rebuilt ? LtlFormula::And(rebuilt, neg) : neg;
    }
    CHECK(equal(rebuilt, f));
  }
}

TEST_CASE("extended-language untied derivations") {
  auto o1 = classify_ltlprime_untied(parse_ltlprime("Fx[x] (q & Gh[@,x] !q)"));
  REQUIRE(o1.untied());
  REQUIRE(o1.shape->kind == ShapeKind::Fx);
  CHECK(o1.shape->var == "x");
  REQUIRE(o1.shape->child->kind == ShapeKind::Conj);
  CHECK(o1.shape->child->left->kind == ShapeKind::Boxed);
  CHECK(o1.shape->child->right->kind == ShapeKind::Negative);

  auto o2 = classify_ltlprime_untied(parse_ltlprime("Fx[x] Gh[@,x] G q"));
  REQUIRE(o2.untied());
  CHECK(o2.shape->child->kind == ShapeKind::Boxed);

  auto o3 = classify_ltlprime_untied(parse_ltlprime("Fx[x] !G !q"));
  CHECK_FALSE(o3.untied());
  CHECK(print_ltlprime(o3.offender) == "!G !q");
}

TEST_CASE("boxed and negative leaves never overlap") {
  for (const PrimePtr& boxed : enumerate_boxed_prime(2)) {
    CHECK(is_ltlprime_boxed(boxed));
    CHECK_FALSE(is_ltlprime_negative(boxed));
    CHECK(is_ltlprime_positive(boxed));
  }
  std::mt19937_64 rng(31);
  GenOptions opts;
  for (int i = 0; i < 200; ++i) {
    PrimePtr neg = random_negative_prime(rng, opts);
    CHECK(is_ltlprime_negative(neg));
    CHECK_FALSE(is_ltlprime_boxed(neg));
  }
}

TEST_CASE("translation preserves untiedness") {
  std::mt19937_64 rng(17);
  GenOptions opts;
  for (int i = 0; i < 200; ++i) {
    LtlPtr untied = random_untied_ltl(rng, opts);
    REQUIRE(classify_ltl_untied(desugar(untied)).untied());
    auto image = classify_ltlprime_untied(tau(untied));
    if (!image.untied()) {
      CAPTURE(print_ltl(untied));
      CAPTURE(print_ltlprime(tau(untied)));
      FAIL_CHECK("translated image not untied: " << image.reason);
    }
  }
}

TEST_CASE("image shapes use only leaf, conjunction, and witness nodes") {
  std::mt19937_64 rng(23);
  GenOptions opts;
  auto scan = [](const PrimeShapePtr& shape, auto&& self) -> bool {
    switch (shape->kind) {
      case ShapeKind::Boxed:
      case ShapeKind::Negative:
        return true;
      case ShapeKind::Conj:
        return self(shape->left, self) && self(shape->right, self);
      case ShapeKind::Fx:
        return self(shape->child, self);
      default:
        return false;
    }
  };
  for (int i = 0; i < 200; ++i) {
    auto image = classify_ltlprime_untied(tau(random_untied_ltl(rng, opts)));
    REQUIRE(image.untied());
    CHECK(scan(image.shape, scan));
  }
}

} // TEST_SUITE
