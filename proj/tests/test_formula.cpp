#include "doctest.h"

#include "ltlc/formula.hpp"
#include "ltlc/printer.hpp"

using namespace ltlc;

TEST_SUITE("formula") {

TEST_CASE("fresh names skip reserved and issued ones") {
  VarSupply supply;
  supply.reserve("x");
  CHECK(supply.fresh("x") == "x1");
  CHECK(supply.fresh("x") == "x2");

  VarSupply empty;
  CHECK(empty.fresh("v") == "v");
  CHECK(empty.taken("v"));
  CHECK_FALSE(empty.taken("u"));
}

TEST_CASE("path term equality and ordering") {
  TermPtr w = PathTerm::eval_point();
  TermPtr x = PathTerm::var("x");
  CHECK(equal(w, PathTerm::eval_point()));
  CHECK(equal(PathTerm::succ(x), PathTerm::succ(PathTerm::var("x"))));
  CHECK_FALSE(equal(w, x));
  CHECK(term_compare(w, x) < 0);
  CHECK(term_compare(x, PathTerm::succ(x)) < 0);
  CHECK(term_compare(x, x) == 0);
}

TEST_CASE("replace_in_term substitutes whole subterms") {
  TermPtr x = PathTerm::var("x");
  TermPtr sx = PathTerm::succ(x);
  TermPtr w = PathTerm::eval_point();
  CHECK(equal(replace_in_term(sx, x, w), PathTerm::succ(w)));
  CHECK(equal(replace_in_term(sx, PathTerm::var("y"), w), sx));
  CHECK(equal(replace_in_term(sx, sx, w), w));
}

TEST_CASE("term substitution in atomic first-order formulas") {
  TermPtr w = PathTerm::eval_point();
  TermPtr x = PathTerm::var("x");
  FoPtr le = FoFormula::Le(w, x);
  FoPtr replaced = subst_path_term(le, x, PathTerm::succ(w));
  CHECK(print_fo(replaced) == "w <= S(w)");

  FoPtr untouched = subst_path_term(le, PathTerm::var("z"), PathTerm::succ(w));
  CHECK(equal(untouched, le));

  FoPtr body = FoFormula::Le(PathTerm::var("v"), PathTerm::var("y"));
  CHECK(print_fo(subst_path_term(body, PathTerm::var("v"), x)) == "x <= y");
}

TEST_CASE("substitute then reverse with a fresh term is the identity") {
  TermPtr x = PathTerm::var("x");
  TermPtr z = PathTerm::var("z");
  FoPtr f = FoFormula::And(FoFormula::Le(PathTerm::eval_point(), x),
                           FoFormula::Eq(x, PathTerm::succ(x)));
  FoPtr there = subst_path_term(f, x, z);
  FoPtr back = subst_path_term(there, z, x);
  CHECK(equal(back, f));
}

TEST_CASE("variable substitution avoids capture by renaming binders") {
  // exists x. (x <= y), then y := x: the binder must be renamed away.
  FoPtr f = FoFormula::Exists(
      "x", FoFormula::Le(PathTerm::var("x"), PathTerm::var("y")));
  FoPtr g = subst_var(f, "y", PathTerm::var("x"));
  CHECK(g->kind == FoKind::Exists);
  CHECK(g->name != "x");
  CHECK(print_fo(g->lhs) == g->name + " <= x");
}

TEST_CASE("beta reduction replaces predicate applications") {
  PredicateSymbol q = PredicateSymbol::for_atom("q");
  TermPtr w = PathTerm::eval_point();

  // One application site: Q(S(w)) with Q0(y) = (y = x).
  PredicateDef def{"y", FoFormula::Eq(PathTerm::var("y"), PathTerm::var("x"))};
  FoPtr app = FoFormula::Pred(q, PathTerm::succ(w));
  CHECK(print_fo(beta_reduce_predicate(app, q, def)) == "S(w) = x");

  // Quantified site: forall v. (w <= v -> Q(v)) with Q0(y) = (w <= y).
  PredicateDef refl{"y", FoFormula::Le(w, PathTerm::var("y"))};
  FoPtr guarded = FoFormula::Forall(
      "v", FoFormula::Implies(FoFormula::Le(w, PathTerm::var("v")),
                              FoFormula::Pred(q, PathTerm::var("v"))));
  FoPtr reduced = beta_reduce_predicate(guarded, q, refl);
  CHECK(print_fo(reduced) == "forall v. (w <= v -> w <= v)");

  // Identity on formulas without the symbol, and full elimination otherwise.
  FoPtr other = FoFormula::Pred(PredicateSymbol::for_atom("p"), w);
  CHECK(equal(beta_reduce_predicate(other, q, def), other));
  for (const PredicateSymbol& sym : predicates_of(reduced)) CHECK(sym.name != "Q");
}

TEST_CASE("predicate symbols map to and from atoms") {
  CHECK(PredicateSymbol::for_atom("q").name == "Q");
  CHECK(PredicateSymbol::for_atom("foo").name == "Foo");
  CHECK(PredicateSymbol::for_atom("q1").name == "Q1");
  CHECK(PredicateSymbol{"Foo"}.atom() == "foo");
  CHECK(PredicateSymbol::for_atom(PredicateSymbol{"Q2"}.atom()).name == "Q2");
}

TEST_CASE("desugaring removes implication and equivalence") {
  LtlPtr p = LtlFormula::Atom("p");
  LtlPtr q = LtlFormula::Atom("q");
  LtlPtr imp = LtlFormula::Implies(p, q);
  CHECK_FALSE(is_desugared(imp));
  CHECK(print_ltl(desugar(imp)) == "!p | q");

  LtlPtr iff = LtlFormula::Iff(p, q);
  CHECK(print_ltl(desugar(iff)) == "(!p | q) & (!q | p)");
  CHECK(is_desugared(desugar(iff)));

  LtlPtr plain = LtlFormula::U(LtlFormula::Not(q), q);
  CHECK(is_desugared(plain));
  CHECK(equal(desugar(plain), plain));
}

TEST_CASE("atom collection covers both languages") {
  LtlPtr f = LtlFormula::And(LtlFormula::G(LtlFormula::Atom("q")),
                             LtlFormula::F(LtlFormula::Atom("p")));
  CHECK(atoms_of(f) == std::set<std::string>{"p", "q"});

  PrimePtr g = LtlPrimeFormula::Fx(
      "x", LtlPrimeFormula::And(LtlPrimeFormula::Atom("q"),
                                LtlPrimeFormula::Not(LtlPrimeFormula::Atom("r"))));
  CHECK(atoms_of(g) == std::set<std::string>{"q", "r"});
}

TEST_CASE("window bounds must differ syntactically") {
  TermPtr w = PathTerm::eval_point();
  CHECK_THROWS_AS(LtlPrimeFormula::Ghat(w, PathTerm::eval_point(),
                                        LtlPrimeFormula::Atom("q")),
                  std::invalid_argument);
  CHECK_NOTHROW(LtlPrimeFormula::Ghat(w, PathTerm::succ(w), LtlPrimeFormula::Atom("q")));
}

TEST_CASE("scope validation of the extended language") {
  TermPtr w = PathTerm::eval_point();
  TermPtr x = PathTerm::var("x");
  PrimePtr q = LtlPrimeFormula::Atom("q");

  PrimePtr good = LtlPrimeFormula::Fx(
      "x", LtlPrimeFormula::And(q, LtlPrimeFormula::Ghat(w, x, q)));
  CHECK_FALSE(well_scoped(good).has_value());
  CHECK(free_path_vars(good).empty());

  PrimePtr unbound = LtlPrimeFormula::Ghat(w, x, q);
  CHECK(well_scoped(unbound).has_value());
  CHECK(free_path_vars(unbound) == std::set<std::string>{"x"});

  PrimePtr shadowed = LtlPrimeFormula::Fx("x", LtlPrimeFormula::Fx("x", q));
  CHECK(well_scoped(shadowed).has_value());
}

TEST_CASE("first-order metadata helpers") {
  TermPtr w = PathTerm::eval_point();
  FoPtr f = FoFormula::Exists(
      "x", FoFormula::And(FoFormula::Le(w, PathTerm::var("x")),
                          FoFormula::Pred(PredicateSymbol::for_atom("q"),
                                          PathTerm::var("y"))));
  CHECK(mentions_eval_point(f));
  CHECK(free_term_vars(f) == std::set<std::string>{"y"});

  FoPtr two = FoFormula::And(FoFormula::Pred(PredicateSymbol::for_atom("q"), w),
                             FoFormula::Pred(PredicateSymbol::for_atom("p"), w));
  std::vector<PredicateSymbol> preds = predicates_of(two);
  REQUIRE(preds.size() == 2);
  CHECK(preds[0].name == "Q"); // first-occurrence order, not alphabetical
  CHECK(preds[1].name == "P");
}

} // TEST_SUITE
