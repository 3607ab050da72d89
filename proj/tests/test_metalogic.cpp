#include <doctest.h>

#include "qhc/calculi.hpp"
#include "qhc/metalogic.hpp"
#include "qhc/parser.hpp"

using namespace qhc;

namespace {
const DerivationSystem& S() { return builtin_system("QHC-simplified"); }
FormulaPtr P(const std::string& s) { return parse_formula(s, S().sig); }

Verdict run(const std::string& text, const DerivationSystem& sys) {
  ProofScript sc = parse_script(text, sys.sig);
  return check_proof(sc, sys);
}
} // namespace

TEST_CASE("instance_of_law") {
  Substitution s;
  s.preds["p"] = Abstraction{{}, P("?alpha")};
  CHECK(instance_of_law(P("?!(?alpha) -> ?alpha"), P("?!p -> p"), s, S().sig));
  Substitution id;
  CHECK(instance_of_law(P("~~alpha -> alpha"), P("~~alpha -> alpha"), id, S().sig));
  // alpha | ~alpha is not an instance of ~~alpha -> alpha under any stated s.
  CHECK_FALSE(instance_of_law(P("alpha | ~alpha"), P("~~alpha -> alpha"), s, S().sig));
}

TEST_CASE("single law citation in theorem mode") {
  Verdict v = run(
      "system QHC-simplified\n"
      "mode theorem\n"
      "goal ?!p -> p\n"
      "1. ?!p -> p by law L-eval with {p := p}\n"
      "qed 1\n",
      S());
  CHECK(v.accepted);
  CHECK(v.judgment == "|- ?!p -> p");
}

TEST_CASE("law citation with wrong instance is BAD_INSTANCE") {
  Verdict v = run(
      "system QHC-simplified\n"
      "mode theorem\n"
      "goal ?!p -> q\n"
      "1. ?!p -> q by law L-eval with {p := p}\n"
      "qed 1\n",
      S());
  CHECK_FALSE(v.accepted);
  CHECK(v.code == FailCode::BAD_INSTANCE);
  CHECK(v.failing_line == 1);
}

TEST_CASE("unknown law is WRONG_SYSTEM") {
  Verdict v = run(
      "system QHC-simplified\n"
      "mode theorem\n"
      "goal Top\n"
      "1. Top by law no-such-law\n"
      "qed 1\n",
      S());
  CHECK_FALSE(v.accepted);
  CHECK(v.code == FailCode::WRONG_SYSTEM);
}

TEST_CASE("mp and dependency propagation in hypotheses mode") {
  Verdict v = run(
      "system QHC-simplified\n"
      "mode hypotheses\n"
      "hyp 1: alpha\n"
      "hyp 2: alpha -> beta\n"
      "goal beta\n"
      "1. alpha by hyp 1\n"
      "2. alpha -> beta by hyp 2\n"
      "3. beta by mp 2 1\n"
      "qed 3\n",
      S());
  CHECK(v.accepted);
  CHECK(v.judgment == "alpha, alpha -> beta |- beta");
}

TEST_CASE("hypotheses are verbatim: substitution instances rejected") {
  // The cheating script from the discrimination pair: substituting ~beta for
  // alpha into the hypothesis.
  Verdict v = run(
      "system QHC-simplified\n"
      "mode hypotheses\n"
      "hyp 1: ~~alpha -> alpha\n"
      "goal alpha | ~alpha\n"
      "1. ~~~beta -> ~beta by hyp 1\n"
      "2. alpha | ~alpha by law or-il with {alpha := alpha; beta := ~alpha}\n"
      "qed 2\n",
      S());
  CHECK_FALSE(v.accepted);
  CHECK(v.code == FailCode::BAD_INSTANCE);
  CHECK(v.failing_line == 1);
}

TEST_CASE("rules cannot fire on hypothesis-dependent lines") {
  // Necessitation applied to a hypothesis is forbidden.
  Verdict v = run(
      "system QHC-simplified\n"
      "mode hypotheses\n"
      "hyp 1: p\n"
      "goal !p\n"
      "1. p by hyp 1\n"
      "2. !p by rule nec-bang from 1\n"
      "qed 2\n",
      S());
  CHECK_FALSE(v.accepted);
  CHECK(v.code == FailCode::RULE_ON_HYP);
  CHECK(v.failing_line == 2);
}

TEST_CASE("gen is blocked on variables free in used hypotheses") {
  Verdict v = run(
      "system QHC-simplified\n"
      "mode hypotheses\n"
      "hyp 1: theta(x)\n"
      "goal forall x. theta(x)\n"
      "1. theta(x) by hyp 1\n"
      "2. forall x. theta(x) by gen x from 1\n"
      "qed 2\n",
      S());
  CHECK_FALSE(v.accepted);
  CHECK(v.code == FailCode::GEN_ON_HYP_VAR);

  // ...but allowed on variables not free in the used hypotheses.
  Verdict w = run(
      "system QHC-simplified\n"
      "mode theorem\n"
      "goal forall x. (theta(x) -> theta(x))\n"
      "1. forall y. theta(y) -> theta(x) by law all-e with {x := y; y := x}\n"
      "2. theta(x) -> exists y. theta(y) by law ex-i with {x := y; y := x}\n"
      "5. theta(x) -> ((theta(x) -> theta(x)) -> theta(x)) by law ax-k with {alpha := theta(x); beta := theta(x) -> theta(x)}\n"
      "6. (theta(x) -> ((theta(x) -> theta(x)) -> theta(x))) -> ((theta(x) -> (theta(x) -> theta(x))) -> (theta(x) -> theta(x))) by law ax-s with {alpha := theta(x); beta := theta(x) -> theta(x); gamma := theta(x)}\n"
      "7. (theta(x) -> (theta(x) -> theta(x))) -> (theta(x) -> theta(x)) by mp 6 5\n"
      "8. theta(x) -> (theta(x) -> theta(x)) by law ax-k with {alpha := theta(x); beta := theta(x)}\n"
      "9. theta(x) -> theta(x) by mp 7 8\n"
      "10. forall x. (theta(x) -> theta(x)) by gen x from 9\n"
      "qed 10\n",
      S());
  CHECK(w.accepted);
}

TEST_CASE("rule-derivation: premise rules admit substitution instances") {
  // From the principle ?!p -> p derive its instance principle ?!(?alpha) -> ?alpha.
  Verdict v = run(
      "system QHC-simplified\n"
      "mode rule-derivation\n"
      "premise-rule ev: / ?!p -> p\n"
      "eigen: alpha\n"
      "goal ?!(?alpha) -> ?alpha\n"
      "1. ?!(?alpha) -> ?alpha by rule ev with {p := ?alpha}\n"
      "qed 1\n",
      S());
  CHECK(v.accepted);
}

TEST_CASE("rule-derivation: goal rules with premises give Shoenfield-style use") {
  // Derive the rule p / ?!p.
  Verdict v = run(
      "system QHC-simplified\n"
      "mode rule-derivation\n"
      "eigen: p\n"
      "goal p / ?!p\n"
      "1. p by hyp 1\n"
      "2. !p by rule nec-bang from 1\n"
      "3. ?!p by rule nec-query from 2\n"
      "qed 3\n",
      S());
  CHECK(v.accepted);
}

TEST_CASE("rule-derivation: eigen declaration must cover the goal") {
  Verdict v = run(
      "system QHC-simplified\n"
      "mode rule-derivation\n"
      "premise-rule ev: / ?!p -> p\n"
      "eigen: \n"
      "goal ?!(?alpha) -> ?alpha\n"
      "1. ?!(?alpha) -> ?alpha by rule ev with {p := ?alpha}\n"
      "qed 1\n",
      S());
  CHECK_FALSE(v.accepted);
  CHECK(v.code == FailCode::EIGEN_NOT_FRESH);
}

TEST_CASE("goal mismatch and theorem-mode dependency check") {
  Verdict v = run(
      "system QHC-simplified\n"
      "mode theorem\n"
      "goal ?!p -> p\n"
      "1. alpha -> !?alpha by law L-unit\n"
      "qed 1\n",
      S());
  CHECK_FALSE(v.accepted);
  CHECK(v.code == FailCode::GOAL_MISMATCH);
}

TEST_CASE("wrong system name is rejected") {
  Verdict v = run(
      "system QH\n"
      "mode theorem\n"
      "goal Triv\n"
      "1. Triv by law triv\n"
      "qed 1\n",
      S());
  CHECK_FALSE(v.accepted);
  CHECK(v.code == FailCode::WRONG_SYSTEM);
}

TEST_CASE("check_principle_from_principles: instance route") {
  ProofScript sc;
  sc.system_name = "QHC-simplified";
  sc.lines.push_back(
      {1, P("?!(?alpha) -> ?alpha"),
       [] {
         Justification j;
         j.kind = Justification::Kind::Rule;
         j.name = "premise-1";
         Substitution s;
         s.preds["p"] = Abstraction{{}, parse_formula("?alpha", builtin_system("QHC-simplified").sig)};
         j.subst = s;
         j.has_subst = true;
         return j;
       }()});
  sc.qed_line = 1;
  Verdict v = check_principle_from_principles({P("?!p -> p")}, P("?!(?alpha) -> ?alpha"),
                                              sc, S());
  CHECK(v.accepted);

  // Self-implication: one-line identity instance.
  ProofScript sc2;
  sc2.system_name = "QHC-simplified";
  Justification j2;
  j2.kind = Justification::Kind::Rule;
  j2.name = "premise-1";
  sc2.lines.push_back({1, P("alpha | ~alpha"), j2});
  sc2.qed_line = 1;
  Verdict v2 = check_principle_from_principles({P("alpha | ~alpha")},
                                               P("alpha | ~alpha"), sc2, S());
  CHECK(v2.accepted);
}

TEST_CASE("monotonicity: unused hypotheses and laws do not break acceptance") {
  Verdict v = run(
      "system QHC-simplified\n"
      "mode hypotheses\n"
      "hyp 1: alpha\n"
      "hyp 2: gamma & delta\n"
      "goal alpha\n"
      "1. alpha by hyp 1\n"
      "qed 1\n",
      S());
  CHECK(v.accepted);
}

TEST_CASE("S4pr: star rule fires by matching") {
  const DerivationSystem& s4 = builtin_system("S4pr");
  Verdict v = run(
      "system S4pr\n"
      "mode theorem\n"
      "goal *{p -> p}::(p -> p)\n"
      "1. p -> p by law ax-k-c with {p := p; q := p}\n"
      "qed 1\n",
      s4);
  // wrong: line 1 is not the identity proof; this asserts rejection paths work
  CHECK_FALSE(v.accepted);
}
