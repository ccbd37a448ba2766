#include "doctest.h"

#include <random>

#include "ltlc/generate.hpp"
#include "ltlc/oracle.hpp"
#include "ltlc/parser.hpp"
#include "ltlc/printer.hpp"
#include "ltlc/standard_translation.hpp"
#include "ltlc/translate.hpp"

using namespace ltlc;

namespace {

FoPtr st_of(const std::string& prime_text) {
  PrimePtr f = parse_ltlprime(prime_text);
  VarSupply supply;
  for (const std::string& atom : atoms_of(f)) supply.reserve(atom);
  supply.reserve("w");
  return st_ltlprime(f, PathTerm::var("w"), supply);
}

FoPtr st_of_ltl(const std::string& text) {
  LtlPtr f = desugar(parse_ltl(text));
  VarSupply supply;
  for (const std::string& atom : atoms_of(f)) supply.reserve(atom);
  supply.reserve("w");
  return st_ltl(f, PathTerm::var("w"), supply);
}

PredInterp interp_of(const Valuation& val) {
  PredInterp preds;
  for (const auto& [atom, mask] : val) preds[PredicateSymbol::for_atom(atom).name] = mask;
  return preds;
}

} // namespace

TEST_SUITE("st") {

TEST_CASE("clause shapes of the extended-language translation") {
  CHECK(print_fo(st_of("G q")) == "forall v. (w <= v -> Q(v))");
  CHECK(print_fo(st_of("X q")) == "Q(S(w))");
  CHECK(print_fo(st_of("Fx[x] q")) == "exists x. (w <= x & Q(x))");
  CHECK(print_fo(st_of("Gh[@,S(@)] q")) == "forall v. (w <= v & v < S(w) -> Q(v))");
  CHECK(print_fo(st_of("Fx[x] (q & Gh[@,x] p)")) ==
        "exists x. (w <= x & Q(x) & (forall v. (w <= v & v < x -> P(v))))");
  CHECK(print_fo(st_of("true")) == "true");
  CHECK(print_fo(st_of("!q | q")) == "!Q(w) | Q(w)");
}

TEST_CASE("window bounds resolve to the innermost universal point") {
  // Under G the evaluation point recenters; under Fx and X it does not.
  CHECK(print_fo(st_of("G Gh[@,S(@)] q")) ==
        "forall v. (w <= v -> (forall v1. (v <= v1 & v1 < S(v) -> Q(v1))))");
  CHECK(print_fo(st_of("Fx[x] Gh[@,x] q")) ==
        "exists x. (w <= x & (forall v. (w <= v & v < x -> Q(v))))");
  CHECK(print_fo(st_of("X G q")) == "forall v. (S(w) <= v -> Q(v))");
}

TEST_CASE("scope violations are rejected") {
  PrimePtr open_window = parse_ltlprime("Gh[@,x] q");
  VarSupply supply;
  CHECK_THROWS_AS(st_ltlprime(open_window, PathTerm::var("w"), supply),
                  std::invalid_argument);
}

TEST_CASE("plain-language translation handles until directly") {
  CHECK(print_fo(st_of_ltl("q U p")) ==
        "exists u. (w <= u & P(u) & (forall v. (w <= v & v < u -> Q(v))))");
  CHECK(print_fo(st_of_ltl("q")) == "Q(w)");
  CHECK(print_fo(st_of_ltl("F q")) == "exists x. (w <= x & Q(x))");
}

TEST_CASE("predicate closure lists symbols in first-occurrence order") {
  FoPtr fo = st_of_ltl("q U p");
  SoFormula all = so_closure(fo, SoQuant::Forall);
  REQUIRE(all.prefix.size() == 2);
  CHECK(all.prefix[0].name == "P"); // the witness conjunct comes first
  CHECK(all.prefix[1].name == "Q");
  CHECK(print_so(all) == "forall P. forall Q. " + print_fo(fo));

  SoFormula some = so_closure(FoFormula::True(), SoQuant::Exists);
  CHECK(some.prefix.empty());
  CHECK(print_so(some) == "true");

  SoFormula one = so_closure(st_of("G q"), SoQuant::Forall);
  CHECK(print_so(one) == "forall Q. forall v. (w <= v -> Q(v))");
}

TEST_CASE("translation agrees with direct satisfaction") {
  std::mt19937_64 rng(13);
  GenOptions opts;
  std::vector<LassoFrame> frames = enumerate_lasso_frames(3);
  for (int i = 0; i < 60; ++i) {
    PrimePtr f = i % 2 == 0 ? random_untied_prime(rng, opts)
                            : random_positive_prime(rng, opts);
    VarSupply supply;
    for (const std::string& atom : atoms_of(f)) supply.reserve(atom);
    supply.reserve("w");
    FoPtr fo = st_ltlprime(f, PathTerm::var("w"), supply);
    for (const LassoFrame& frame : frames) {
      PathStructure ps(frame);
      for (const Valuation& val : all_valuations(atoms_of(f), frame.n)) {
        PredInterp preds = interp_of(val);
        for (uint32_t s = 0; s < frame.n; ++s) {
          bool direct = ltlprime_holds(f, ps, val, s);
          bool translated = fo_eval(fo, ps, preds, {{"w", s}});
          if (direct != translated) {
            CAPTURE(print_ltlprime(f));
            CAPTURE(frame.n);
            CAPTURE(s);
            REQUIRE(direct == translated);
          }
        }
      }
    }
  }
}

TEST_CASE("the two translation routes agree semantically") {
  std::mt19937_64 rng(29);
  GenOptions opts;
  std::vector<LassoFrame> frames = enumerate_lasso_frames(3);
  for (int i = 0; i < 60; ++i) {
    LtlPtr f = desugar(random_ltl(rng, opts));
    VarSupply s1, s2;
    for (const std::string& atom : atoms_of(f)) {
      s1.reserve(atom);
      s2.reserve(atom);
    }
    s1.reserve("w");
    s2.reserve("w");
    FoPtr direct = st_ltl(f, PathTerm::var("w"), s1);
    FoPtr via_image = st_ltlprime(tau(f), PathTerm::var("w"), s2);
    for (const LassoFrame& frame : frames) {
      PathStructure ps(frame);
      for (const Valuation& val : all_valuations(atoms_of(f), frame.n)) {
        PredInterp preds = interp_of(val);
        for (uint32_t s = 0; s < frame.n; ++s) {
          bool a = fo_eval(direct, ps, preds, {{"w", s}});
          bool b = fo_eval(via_image, ps, preds, {{"w", s}});
          if (a != b) {
            CAPTURE(print_ltl(f));
            REQUIRE(a == b);
          }
        }
      }
    }
  }
}

} // TEST_SUITE
