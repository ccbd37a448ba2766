#include "doctest.h"

#include <random>

#include "ltlc/classify.hpp"
#include "ltlc/generate.hpp"
#include "ltlc/oracle.hpp"
#include "ltlc/parser.hpp"
#include "ltlc/printer.hpp"
#include "ltlc/translate.hpp"

using namespace ltlc;

namespace {

// Homomorphic embedding of the U-free, F-free fragment.
PrimePtr embed(const LtlPtr& f) {
  switch (f->kind) {
    case LtlKind::Atom: return LtlPrimeFormula::Atom(f->name);
    case LtlKind::True: return LtlPrimeFormula::True();
    case LtlKind::False: return LtlPrimeFormula::False();
    case LtlKind::Not: return LtlPrimeFormula::Not(embed(f->lhs));
    case LtlKind::And: return LtlPrimeFormula::And(embed(f->lhs), embed(f->rhs));
    case LtlKind::Or: return LtlPrimeFormula::Or(embed(f->lhs), embed(f->rhs));
    case LtlKind::G: return LtlPrimeFormula::G(embed(f->lhs));
    case LtlKind::X: return LtlPrimeFormula::X(embed(f->lhs));
    default: throw std::invalid_argument("not in the embeddable fragment");
  }
}

} // namespace

TEST_SUITE("translate") {

TEST_CASE("until becomes a witnessed window") {
  CHECK(print_ltlprime(tau(parse_ltl("p U q"))) == "Fx[x] (q & Gh[@,x] p)");
  CHECK(print_ltlprime(tau(parse_ltl("F q"))) == "Fx[x] q");
}

TEST_CASE("repeated eventualities get distinct witnesses") {
  PrimePtr image = tau(parse_ltl("F q & F q"));
  REQUIRE(image->kind == PrimeKind::And);
  REQUIRE(image->lhs->kind == PrimeKind::Fx);
  REQUIRE(image->rhs->kind == PrimeKind::Fx);
  CHECK(image->lhs->name != image->rhs->name);
  CHECK(print_ltlprime(image) == "Fx[x] q & Fx[x1] q");
}

TEST_CASE("nested untils nest their windows") {
  CHECK(print_ltlprime(tau(parse_ltl("(p U q) U r"))) ==
        "Fx[x] (r & Gh[@,x] Fx[x1] (q & Gh[@,x1] p))");
  CHECK(print_ltlprime(tau(parse_ltl("p U (q U r)"))) ==
        "Fx[x] (Fx[x1] (r & Gh[x,x1] q) & Gh[@,x] p)");
}

TEST_CASE("identity on the eventuality-free fragment") {
  std::mt19937_64 rng(5);
  GenOptions opts;
  int checked = 0;
  for (int i = 0; i < 400 && checked < 100; ++i) {
    LtlPtr f = desugar(random_ltl(rng, opts));
    PrimePtr expected;
    try {
      expected = embed(f);
    } catch (const std::invalid_argument&) {
      continue; // draw again: the sample used U or F
    }
    ++checked;
    CHECK(equal(tau(f), expected));
  }
  CHECK(checked >= 50);
}

TEST_CASE("images are always well-scoped") {
  std::mt19937_64 rng(11);
  GenOptions opts;
  opts.max_depth = 5;
  for (int i = 0; i < 300; ++i) {
    LtlPtr f = desugar(random_ltl(rng, opts));
    auto reason = well_scoped(tau(f));
    if (reason.has_value()) {
      CAPTURE(print_ltl(f));
      FAIL_CHECK("image out of scope: " << *reason);
    }
  }
}

TEST_CASE("desugaring is required") {
  VarSupply supply;
  CHECK_THROWS_AS(tau(parse_ltl("p -> q"), PathTerm::eval_point(), supply),
                  std::invalid_argument);
}

TEST_CASE("translation preserves meaning on small structures") {
  CHECK(check_tau_equivalence(parse_ltl("p U q"), 3).ok());
  CHECK(check_tau_equivalence(parse_ltl("q"), 3).ok());
  CHECK(check_tau_equivalence(parse_ltl("G F q"), 3).ok());
  CHECK(check_tau_equivalence(parse_ltl("X (p U q) & (q U p)"), 3).ok());
  CHECK(check_tau_equivalence(parse_ltl("(p U q) U (q U p)"), 3).ok());
  CHECK(check_tau_equivalence(parse_ltl("G (p U q)"), 3).ok());
  CHECK(check_tau_equivalence(parse_ltl("p <-> X !p"), 3).ok());
}

} // TEST_SUITE
