// End-to-end acceptance gate: one line per criterion, nonzero exit on any
// failure. Time budgets are pinned here as constants.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ltlc/classify.hpp"
#include "ltlc/correspondence.hpp"
#include "ltlc/generate.hpp"
#include "ltlc/oracle.hpp"
#include "ltlc/parser.hpp"
#include "ltlc/printer.hpp"

using namespace ltlc;

namespace {

constexpr double kBudgetWorkedExample = 1.0;  // seconds, criterion 1
constexpr double kBudgetTheoremSweep = 300.0; // seconds, criterion 2
constexpr double kBudgetTranslation = 120.0;  // seconds, criterion 3

int failures = 0;

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void report(int number, bool ok, double secs, const std::string& what,
            const std::string& detail = "") {
  std::printf("criterion %d: %s (%.2f s) - %s%s%s\n", number, ok ? "pass" : "FAIL", secs,
              what.c_str(), detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// 1. The worked example identifies the empty class of structures.
void criterion_1() {
  Timer timer;
  LtlPtr f = parse_ltl("!((!q) U q)");
  CorrespondenceResult r = correspondent(f, PathTerm::var("w"));
  bool ok = equal(r.simplified, FoFormula::False());
  std::string detail;
  for (const LassoFrame& frame : enumerate_lasso_frames(4)) {
    PathStructure ps(frame);
    for (uint32_t s = 0; s < frame.n && ok; ++s) {
      if (fo_eval(r.correspondent, ps, {}, {{"w", s}})) {
        ok = false;
        detail = "correspondent not everywhere false";
      }
      if (frame_valid(f, ps, s, {"q"})) {
        ok = false;
        detail = "formula frame-valid somewhere";
      }
    }
    if (!ok) break;
  }
  CheckReport check = check_correspondence(f, 4);
  if (ok && !check.ok()) {
    ok = false;
    detail = check.counterexample->detail;
  }
  double secs = timer.seconds();
  if (ok && secs >= kBudgetWorkedExample) {
    ok = false;
    detail = "budget of 1 s exceeded";
  }
  report(1, ok, secs, "worked example reduces to false and is nowhere frame-valid", detail);
}

// 2. 500 random conjunctions of negated untied formulas satisfy the
// correspondence equivalence on all frames with up to 3 states.
void criterion_2() {
  Timer timer;
  std::mt19937_64 rng(20240817);
  GenOptions opts;
  opts.max_depth = 4;
  opts.atoms = 2;
  bool ok = true;
  std::string detail;
  uint64_t cases = 0;
  for (int i = 0; i < 500 && ok; ++i) {
    LtlPtr f = random_sahlqvist(rng, opts);
    CheckReport check = check_correspondence(f, 3);
    cases += check.cases;
    if (!check.ok()) {
      ok = false;
      detail = print_ltl(f) + " - " + check.counterexample->detail;
    }
  }
  double secs = timer.seconds();
  if (ok && secs >= kBudgetTheoremSweep) {
    ok = false;
    detail = "budget of 300 s exceeded";
  }
  report(2, ok, secs,
         "500 random formulas match their correspondents (" + std::to_string(cases) +
             " frame/state cases)",
         detail);
}

// 3. 200 random formulas agree with their images on all frames up to 4 states.
void criterion_3() {
  Timer timer;
  std::mt19937_64 rng(20240818);
  GenOptions opts;
  opts.max_depth = 4;
  opts.atoms = 2;
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 200 && ok; ++i) {
    LtlPtr f = random_ltl(rng, opts);
    CheckReport check = check_tau_equivalence(f, 4);
    if (!check.ok()) {
      ok = false;
      detail = print_ltl(f) + " - state " + std::to_string(check.counterexample->state);
    }
  }
  double secs = timer.seconds();
  if (ok && secs >= kBudgetTranslation) {
    ok = false;
    detail = "budget of 120 s exceeded";
  }
  report(3, ok, secs, "200 random formulas are equivalent to their translations", detail);
}

// 4. Every boxed formula with at most 3 operators agrees with its
// accessibility-relation reading on all frames up to 4 states.
void criterion_4() {
  Timer timer;
  bool ok = true;
  std::string detail;
  std::vector<PrimePtr> chains = enumerate_boxed_prime(3);
  for (const PrimePtr& boxed : chains) {
    CheckReport check = check_boxed_lemma(boxed, 4);
    if (!check.ok()) {
      ok = false;
      detail = print_ltlprime(boxed);
      break;
    }
  }
  report(4, ok, timer.seconds(),
         "all " + std::to_string(chains.size()) +
             " boxed chains match their accessibility relations",
         detail);
}

// 5. Truth of positive formulas survives growing the valuation; truth of
// negative formulas survives shrinking it.
void criterion_5() {
  Timer timer;
  std::mt19937_64 rng(20240819);
  GenOptions opts;
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 200 && ok; ++i) {
    PrimePtr pos = random_positive_prime(rng, opts);
    CheckReport check = check_monotonicity(pos, 4, rng);
    if (!check.ok()) {
      ok = false;
      detail = "positive " + print_ltlprime(pos);
    }
  }
  for (int i = 0; i < 200 && ok; ++i) {
    PrimePtr neg = random_negative_prime(rng, opts);
    CheckReport check = check_antitonicity(neg, 4, rng);
    if (!check.ok()) {
      ok = false;
      detail = "negative " + print_ltlprime(neg);
    }
  }
  report(5, ok, timer.seconds(), "200 positive and 200 negative formulas are tone-correct",
         detail);
}

// 6. Minimal-witness coverage coincides with the positive skeleton.
void criterion_6() {
  Timer timer;
  std::mt19937_64 rng(20240820);
  GenOptions opts;
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 100 && ok; ++i) {
    PrimePtr untied = random_untied_prime(rng, opts);
    CheckReport check = check_main_lemma(untied, 3);
    if (!check.ok()) {
      ok = false;
      detail = print_ltlprime(untied) + " - " + check.counterexample->detail;
    }
  }
  report(6, ok, timer.seconds(), "100 random untied formulas satisfy the coverage equivalence",
         detail);
}

// 7. The two derived correspondents, checked exactly.
void criterion_7() {
  Timer timer;
  bool ok = true;
  std::string detail;

  CorrespondenceResult selfloop = correspondent(parse_ltl("!(X q & !q)"), PathTerm::var("w"));
  if (print_fo(selfloop.simplified) != "w = S(w)") {
    ok = false;
    detail = "expected w = S(w), got " + print_fo(selfloop.simplified);
  }
  CorrespondenceResult taut = correspondent(parse_ltl("!(G q & F !q)"), PathTerm::var("w"));
  if (ok && !equal(taut.simplified, FoFormula::True())) {
    ok = false;
    detail = "expected true, got " + print_fo(taut.simplified);
  }
  if (ok) {
    CheckReport c1 = check_correspondence(parse_ltl("!(X q & !q)"), 4);
    CheckReport c2 = check_correspondence(parse_ltl("!(G q & F !q)"), 4);
    if (!c1.ok() || !c2.ok()) {
      ok = false;
      detail = "exhaustive check failed";
    }
  }
  report(7, ok, timer.seconds(), "derived correspondents are exact", detail);
}

// 8. Printing round-trips through the parser; simplification preserves truth.
void criterion_8() {
  Timer timer;
  std::mt19937_64 rng(20240821);
  GenOptions opts;
  opts.max_depth = 5;
  opts.atoms = 3;
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 1000 && ok; ++i) {
    LtlPtr f = random_ltl(rng, opts);
    LtlPtr back;
    try {
      back = parse_ltl(print_ltl(f));
    } catch (const ParseError& e) {
      ok = false;
      detail = "unparseable print: " + print_ltl(f);
      break;
    }
    if (!equal(back, f)) {
      ok = false;
      detail = "round-trip mismatch: " + print_ltl(f);
    }
  }
  std::mt19937_64 fo_rng(20240822);
  GenOptions fo_opts;
  for (int i = 0; i < 200 && ok; ++i) {
    FoPtr f = random_fo(fo_rng, fo_opts);
    CheckReport check = check_simplifier_equivalence(f, 4);
    if (!check.ok()) {
      ok = false;
      detail = "simplifier changed " + print_fo(f);
    }
  }
  report(8, ok, timer.seconds(), "1000 round-trips exact, 200 simplifications sound", detail);
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0) {
    std::printf("acceptance: all 8 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
