#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"

#include "ltlc/classify.hpp"
#include "ltlc/correspondence.hpp"
#include "ltlc/formula.hpp"
#include "ltlc/generate.hpp"
#include "ltlc/json_io.hpp"
#include "ltlc/oracle.hpp"
#include "ltlc/parser.hpp"
#include "ltlc/printer.hpp"
#include "ltlc/standard_translation.hpp"
#include "ltlc/translate.hpp"

namespace {

using namespace ltlc;
using nlohmann::json;

bool color_enabled() {
  if (const char* v = std::getenv("LTLC_COLOR")) return std::string(v) != "0";
  return isatty(STDOUT_FILENO) != 0;
}

std::string paint(const std::string& s, const char* code) {
  if (!color_enabled()) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

std::string good(const std::string& s) { return paint(s, "32"); }
std::string bad(const std::string& s) { return paint(s, "31"); }

// Positional formula, falling back to stdin. Empty result is a usage error.
std::string formula_text(const std::string& positional) {
  if (!positional.empty()) return positional;
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  std::string text = buf.str();
  size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

std::string leaf_text(const LtlPtr& f) { return print_ltl(f); }
std::string leaf_text(const PrimePtr& f) { return print_ltlprime(f); }

template <typename ShapePtr>
void print_shape_tree(const ShapePtr& s, const std::string& indent, std::ostream& os) {
  switch (s->kind) {
    case ShapeKind::Boxed:
      os << indent << "boxed " << leaf_text(s->formula) << "\n";
      return;
    case ShapeKind::Negative:
      os << indent << "negative " << leaf_text(s->formula) << "\n";
      return;
    case ShapeKind::Until:
      os << indent << "until\n";
      os << indent << "  guard: "
         << (s->guard->kind == ShapeKind::Boxed ? "boxed " : "negative ")
         << leaf_text(s->guard->formula) << "\n";
      print_shape_tree(s->child, indent + "  ", os);
      return;
    case ShapeKind::Conj:
      os << indent << "conj\n";
      print_shape_tree(s->left, indent + "  ", os);
      print_shape_tree(s->right, indent + "  ", os);
      return;
    case ShapeKind::Fx:
      os << indent << "exists " << s->var << "\n";
      print_shape_tree(s->child, indent + "  ", os);
      return;
    case ShapeKind::XWrap:
      os << indent << "next\n";
      print_shape_tree(s->child, indent + "  ", os);
      return;
    case ShapeKind::GhatWrap:
      os << indent << "window [" << print_term(s->lo, "@") << ", " << print_term(s->hi, "@")
         << ")\n";
      print_shape_tree(s->child, indent + "  ", os);
      return;
  }
}

int run_classify(const std::string& text, bool as_json) {
  LtlPtr f = parse_ltl(text);
  try {
    SahlqvistDecomposition dec = decompose_sahlqvist(f);
    if (as_json) {
      json conjuncts = json::array();
      for (size_t i = 0; i < dec.untied_parts.size(); ++i)
        conjuncts.push_back(json{{"untied", print_ltl(dec.untied_parts[i])},
                                 {"shape", shape_json(dec.shapes[i])}});
      std::cout << json{{"sahlqvist", true}, {"conjuncts", conjuncts}}.dump(2) << "\n";
    } else {
      std::cout << "Sahlqvist: " << good("yes") << "\n";
      for (size_t i = 0; i < dec.untied_parts.size(); ++i) {
        std::cout << "conjunct " << i + 1 << ": " << print_ltl(dec.untied_parts[i]) << "\n";
        print_shape_tree(dec.shapes[i], "  ", std::cout);
      }
    }
    return 0;
  } catch (const NotSahlqvistError& e) {
    if (as_json) {
      std::cout << json{{"sahlqvist", false},
                        {"offender", print_ltl(e.offender)},
                        {"reason", e.what()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "Sahlqvist: " << bad("no") << "\n";
      std::cout << "offender: " << print_ltl(e.offender) << "\n";
      std::cout << "reason: " << e.what() << "\n";
    }
    return 1;
  }
}

int run_translate(const std::string& text, bool as_json) {
  LtlPtr f = desugar(parse_ltl(text));
  PrimePtr image = tau(f);
  if (as_json)
    std::cout << json{{"input", print_ltl(f)}, {"translated", print_ltlprime(image)}}.dump(2)
              << "\n";
  else
    std::cout << print_ltlprime(image) << "\n";
  return 0;
}

int run_st(const std::string& text, bool second_order, bool as_json) {
  LtlPtr f = desugar(parse_ltl(text));
  VarSupply supply;
  supply.reserve("w");
  for (const std::string& atom : atoms_of(f)) supply.reserve(atom);
  FoPtr fo = st_ltl(f, PathTerm::var("w"), supply);
  json out{{"input", print_ltl(f)}, {"st", print_fo(fo)}};
  std::string shown = print_fo(fo);
  if (second_order) {
    SoFormula so = so_closure(fo, SoQuant::Forall);
    shown = print_so(so);
    out["so"] = shown;
  }
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << shown << "\n";
  return 0;
}

int run_correspond(const std::string& text, bool simplify, bool trace, bool as_json) {
  LtlPtr f = parse_ltl(text);
  CorrespondenceResult result;
  try {
    result = correspondent(f, PathTerm::var("w"));
  } catch (const NotSahlqvistError& e) {
    std::cerr << "not in the correspondence class\n"
              << "offender: " << print_ltl(e.offender) << "\n"
              << "reason: " << e.what() << "\n";
    return 1;
  }
  if (as_json) {
    std::cout << correspondence_json(result).dump(2) << "\n";
    return 0;
  }
  if (trace) {
    for (size_t i = 0; i < result.conjuncts.size(); ++i) {
      const ConjunctReport& c = result.conjuncts[i];
      std::cout << "conjunct " << i + 1 << ": " << print_ltl(c.untied) << "\n";
      std::cout << "  translated: " << print_ltlprime(c.translated) << "\n";
      std::cout << "  standard translation: " << print_fo(c.st) << "\n";
      std::cout << "  minimal assignment:\n";
      if (c.assignment.defs.empty()) std::cout << "    (no boxed leaves: every atom maps to the empty predicate)\n";
      for (const auto& [atom, def] : c.assignment.defs)
        std::cout << "    " << PredicateSymbol::for_atom(atom).name << "0(" << def.param
                  << ") = " << print_fo(def.body) << "\n";
      std::cout << "  substituted: " << print_fo(c.substituted) << "\n";
    }
    std::cout << "correspondent: " << print_fo(result.correspondent) << "\n";
  }
  std::cout << print_fo(simplify ? result.simplified : result.correspondent) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string formula;
  std::string suite = "correspondence";
  uint32_t max_states = 3;
  uint32_t atoms = 2;
  uint32_t random = 0;
  bool random_given = false;
  bool depth_given = false;
  uint64_t seed = 0;
  uint32_t depth = 4;
  bool as_json = false;
  bool trace = false;
};

int report_verify(const VerifyArgs& args, const CheckReport& report, uint64_t checked,
                  uint64_t total, const std::string& failing) {
  if (args.as_json) {
    json out{{"suite", args.suite}, {"ok", report.ok()},   {"cases", report.cases},
             {"checked", checked},  {"total", total},      {"seed", args.seed},
             {"max_states", args.max_states}};
    out["formula"] = failing.empty() ? json(nullptr) : json(failing);
    out["counterexample"] =
        report.counterexample ? counterexample_json(*report.counterexample) : json(nullptr);
    std::cout << out.dump(2) << "\n";
    return report.ok() ? 0 : 1;
  }
  if (report.ok()) {
    if (total > 1)
      std::cout << good("pass") << ", " << checked << "/" << total << " (cases: "
                << report.cases << ")\n";
    else
      std::cout << good("pass") << " (cases: " << report.cases << ")\n";
    return 0;
  }
  if (total > 1)
    std::cout << bad("fail") << ", " << checked << "/" << total << "\n";
  else
    std::cout << bad("fail") << "\n";
  if (!failing.empty()) std::cout << "formula: " << failing << "\n";
  std::cout << "counterexample: " << counterexample_json(*report.counterexample).dump() << "\n";
  return 1;
}

// Runs `check` over `total` generated inputs, accumulating case counts and
// stopping at the first counterexample.
template <typename Gen, typename Check, typename Print>
int run_random_suite(const VerifyArgs& args, uint64_t total, Gen gen, Check check, Print show) {
  std::mt19937_64 rng(args.seed);
  CheckReport combined;
  uint64_t checked = 0;
  std::string failing;
  for (uint64_t i = 0; i < total; ++i) {
    auto f = gen(rng);
    if (args.trace) std::cout << "[" << i + 1 << "/" << total << "] " << show(f) << "\n";
    CheckReport one = check(f, rng);
    combined.cases += one.cases;
    ++checked;
    if (!one.ok()) {
      combined.counterexample = one.counterexample;
      failing = show(f);
      break;
    }
  }
  return report_verify(args, combined, checked, total, failing);
}

int run_verify(const VerifyArgs& args) {
  GenOptions opts{args.depth, args.atoms};
  uint64_t n = args.random_given ? args.random : 0;

  if (args.suite == "correspondence") {
    if (!args.random_given) {
      std::string text = formula_text(args.formula);
      if (text.empty()) {
        std::cerr << "error: a formula or --random N is required\n";
        return 2;
      }
      LtlPtr f = parse_ltl(text);
      CheckReport report = check_correspondence(f, args.max_states);
      return report_verify(args, report, 1, 1, report.ok() ? "" : print_ltl(f));
    }
    return run_random_suite(
        args, n, [&](std::mt19937_64& rng) { return random_sahlqvist(rng, opts); },
        [&](const LtlPtr& f, std::mt19937_64&) { return check_correspondence(f, args.max_states); },
        [](const LtlPtr& f) { return print_ltl(f); });
  }

  if (args.suite == "tau") {
    if (!args.random_given) {
      std::string text = formula_text(args.formula);
      if (text.empty()) {
        std::cerr << "error: a formula or --random N is required\n";
        return 2;
      }
      LtlPtr f = parse_ltl(text);
      CheckReport report = check_tau_equivalence(f, args.max_states);
      return report_verify(args, report, 1, 1, report.ok() ? "" : print_ltl(f));
    }
    return run_random_suite(
        args, n, [&](std::mt19937_64& rng) { return random_ltl(rng, opts); },
        [&](const LtlPtr& f, std::mt19937_64&) { return check_tau_equivalence(f, args.max_states); },
        [](const LtlPtr& f) { return print_ltl(f); });
  }

  if (args.suite == "boxed") {
    std::vector<PrimePtr> corpus;
    if (!args.formula.empty()) {
      corpus.push_back(parse_ltlprime(formula_text(args.formula)));
    } else {
      corpus = enumerate_boxed_prime(args.depth_given ? args.depth : 3);
    }
    CheckReport combined;
    uint64_t checked = 0;
    std::string failing;
    for (const PrimePtr& f : corpus) {
      if (args.trace)
        std::cout << "[" << checked + 1 << "/" << corpus.size() << "] " << print_ltlprime(f)
                  << "\n";
      CheckReport one = check_boxed_lemma(f, args.max_states);
      combined.cases += one.cases;
      ++checked;
      if (!one.ok()) {
        combined.counterexample = one.counterexample;
        failing = print_ltlprime(f);
        break;
      }
    }
    return report_verify(args, combined, checked, corpus.size(), failing);
  }

  if (args.suite == "monotonicity" || args.suite == "antitonicity") {
    bool monotone = args.suite == "monotonicity";
    if (!args.random_given) {
      std::string text = formula_text(args.formula);
      if (text.empty()) {
        std::cerr << "error: a formula or --random N is required\n";
        return 2;
      }
      PrimePtr f = parse_ltlprime(text);
      if (monotone && !is_ltlprime_positive(f)) {
        std::cerr << "error: the monotonicity suite needs a positive formula\n";
        return 2;
      }
      if (!monotone && !is_ltlprime_negative(f)) {
        std::cerr << "error: the antitonicity suite needs a negative formula\n";
        return 2;
      }
      std::mt19937_64 rng(args.seed);
      CheckReport report = monotone ? check_monotonicity(f, args.max_states, rng)
                                    : check_antitonicity(f, args.max_states, rng);
      return report_verify(args, report, 1, 1, report.ok() ? "" : print_ltlprime(f));
    }
    return run_random_suite(
        args, n,
        [&](std::mt19937_64& rng) {
          return monotone ? random_positive_prime(rng, opts) : random_negative_prime(rng, opts);
        },
        [&](const PrimePtr& f, std::mt19937_64& rng) {
          return monotone ? check_monotonicity(f, args.max_states, rng)
                          : check_antitonicity(f, args.max_states, rng);
        },
        [](const PrimePtr& f) { return print_ltlprime(f); });
  }

  if (args.suite == "mainlemma") {
    if (!args.random_given) {
      std::string text = formula_text(args.formula);
      if (text.empty()) {
        std::cerr << "error: a formula or --random N is required\n";
        return 2;
      }
      PrimePtr f = parse_ltlprime(text);
      CheckReport report = check_main_lemma(f, args.max_states);
      return report_verify(args, report, 1, 1, report.ok() ? "" : print_ltlprime(f));
    }
    return run_random_suite(
        args, n, [&](std::mt19937_64& rng) { return random_untied_prime(rng, opts); },
        [&](const PrimePtr& f, std::mt19937_64&) { return check_main_lemma(f, args.max_states); },
        [](const PrimePtr& f) { return print_ltlprime(f); });
  }

  if (args.suite == "simplifier") {
    if (!args.random_given) {
      std::cerr << "error: the simplifier suite is driven by --random\n";
      return 2;
    }
    return run_random_suite(
        args, n, [&](std::mt19937_64& rng) { return random_fo(rng, opts); },
        [&](const FoPtr& f, std::mt19937_64&) {
          return check_simplifier_equivalence(f, args.max_states);
        },
        [](const FoPtr& f) { return print_fo(f); });
  }

  std::cerr << "error: unknown suite '" << args.suite
            << "' (use correspondence, tau, boxed, monotonicity, antitonicity, mainlemma, or "
               "simplifier)\n";
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frame correspondence toolkit for linear temporal logic"};
  app.require_subcommand(1);

  std::string c_formula;
  bool c_json = false;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Decide membership in the correspondence class");
  classify_cmd->add_option("formula", c_formula, "formula (read from stdin when omitted)");
  classify_cmd->add_flag("--json", c_json, "machine-readable output");

  std::string t_formula;
  bool t_json = false;
  CLI::App* translate_cmd =
      app.add_subcommand("translate", "Translate into the extended language");
  translate_cmd->add_option("formula", t_formula, "formula (read from stdin when omitted)");
  translate_cmd->add_flag("--json", t_json, "machine-readable output");

  std::string s_formula;
  bool s_json = false;
  bool s_so = false;
  CLI::App* st_cmd = app.add_subcommand("st", "First-order standard translation at w");
  st_cmd->add_option("formula", s_formula, "formula (read from stdin when omitted)");
  st_cmd->add_flag("--so", s_so, "universally close the predicates");
  st_cmd->add_flag("--json", s_json, "machine-readable output");

  std::string k_formula;
  bool k_json = false;
  bool k_trace = false;
  bool k_simplify = true;
  CLI::App* correspond_cmd =
      app.add_subcommand("correspond", "Compute the first-order frame correspondent");
  correspond_cmd->add_option("formula", k_formula, "formula (read from stdin when omitted)");
  correspond_cmd->add_flag("--trace", k_trace, "print every pipeline stage");
  correspond_cmd->add_flag("--simplify,!--no-simplify", k_simplify,
                           "reduce the result (default on)");
  correspond_cmd->add_flag("--json", k_json, "machine-readable output");

  VerifyArgs v;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a correspondence or lemma suite by brute force");
  verify_cmd->add_option("formula", v.formula, "formula (suites over the extended language "
                                               "use its debug syntax)");
  verify_cmd->add_option("--suite", v.suite,
                         "correspondence | tau | boxed | monotonicity | antitonicity | "
                         "mainlemma | simplifier");
  verify_cmd->add_option("--max-states", v.max_states, "largest frame size (1..6)");
  verify_cmd->add_option("--atoms", v.atoms, "atoms drawn by generators (1..3)");
  verify_cmd->add_option("--random", v.random, "number of random inputs");
  verify_cmd->add_option("--seed", v.seed, "generator seed");
  verify_cmd->add_option("--depth", v.depth, "generator depth bound (0..8)");
  verify_cmd->add_flag("--trace", v.trace, "print each checked input");
  verify_cmd->add_flag("--json", v.as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) {
      std::string text = formula_text(c_formula);
      if (text.empty()) {
        std::cerr << "error: no formula given\n";
        return 2;
      }
      return run_classify(text, c_json);
    }
    if (translate_cmd->parsed()) {
      std::string text = formula_text(t_formula);
      if (text.empty()) {
        std::cerr << "error: no formula given\n";
        return 2;
      }
      return run_translate(text, t_json);
    }
    if (st_cmd->parsed()) {
      std::string text = formula_text(s_formula);
      if (text.empty()) {
        std::cerr << "error: no formula given\n";
        return 2;
      }
      return run_st(text, s_so, s_json);
    }
    if (correspond_cmd->parsed()) {
      std::string text = formula_text(k_formula);
      if (text.empty()) {
        std::cerr << "error: no formula given\n";
        return 2;
      }
      return run_correspond(text, k_simplify, k_trace, k_json);
    }
    if (verify_cmd->parsed()) {
      if (v.max_states < 1 || v.max_states > 6) {
        std::cerr << "error: --max-states must be between 1 and 6\n";
        return 2;
      }
      if (v.atoms < 1 || v.atoms > 3) {
        std::cerr << "error: --atoms must be between 1 and 3\n";
        return 2;
      }
      if (v.depth > 8) {
        std::cerr << "error: --depth must be between 0 and 8\n";
        return 2;
      }
      v.random_given = verify_cmd->count("--random") > 0;
      v.depth_given = verify_cmd->count("--depth") > 0;
      return run_verify(v);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
