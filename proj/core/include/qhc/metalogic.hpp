#ifndef QHC_METALOGIC_HPP
#define QHC_METALOGIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "qhc/syntax.hpp"

namespace qhc {

// A rule F1,...,Fm / G. Rules with no premises are principles.
struct Rule {
  std::string name;
  std::vector<FormulaPtr> premises;
  FormulaPtr conclusion;
  bool is_mp = false; // tagged modus ponens (target of the `mp` shorthand)
};

struct Law {
  std::string name;
  FormulaPtr formula;
};

// A named set of laws (formulas closed under meta-quantifiers) and rules.
class DerivationSystem {
 public:
  std::string name;
  Signature sig;

  void add_law(const std::string& name, const std::string& text);
  void add_rule(const std::string& name, const std::vector<std::string>& premises,
                const std::string& conclusion, bool is_mp = false);

  const Law* find_law(const std::string& name) const;
  const Rule* find_rule(const std::string& name) const;

  const std::vector<Law>& laws() const { return laws_; }
  const std::vector<Rule>& rules() const { return rules_; }

 private:
  std::vector<Law> laws_;
  std::vector<Rule> rules_;
};

enum class ScriptMode { Theorem, Hypotheses, RuleDerivation };

struct Justification {
  enum class Kind { Law, Hyp, Rule, Mp, Gen } kind;
  std::string name;        // Law / Rule
  Substitution subst;      // Law / Rule (optional for rules with premises)
  bool has_subst = false;
  std::vector<int> lines;  // cited line numbers (1-based)
  std::string gen_var;     // Gen
};

struct ScriptLine {
  int number = 0;
  FormulaPtr formula;
  Justification just;
};

// A checkable Hilbert-style derivation against a target system.
struct ProofScript {
  std::string system_name;
  ScriptMode mode = ScriptMode::Theorem;
  std::vector<FormulaPtr> hypotheses;      // Hypotheses mode
  std::vector<Rule> premise_rules;         // RuleDerivation mode
  std::vector<std::string> eigen;          // RuleDerivation mode
  std::vector<FormulaPtr> goal_premises;   // RuleDerivation: goal is a rule
  FormulaPtr goal;
  std::vector<ScriptLine> lines;
  int qed_line = 0;
};

// Machine-readable rejection codes.
enum class FailCode {
  None,
  BAD_INSTANCE,
  CAPTURE,
  GEN_ON_HYP_VAR,
  EIGEN_NOT_FRESH,
  WRONG_SYSTEM,
  GOAL_MISMATCH,
  RULE_ON_HYP,
  BAD_REFERENCE
};

const char* fail_code_name(FailCode c);

struct Verdict {
  bool accepted = false;
  int failing_line = 0; // 0 = header-level failure
  FailCode code = FailCode::None;
  std::string message;
  std::string judgment; // established judgment on acceptance
};

// Returns true iff apply_substitution(law, s) alpha-equals candidate.
bool instance_of_law(const FormulaPtr& candidate, const FormulaPtr& law,
                     const Substitution& s, const Signature& sig);

Verdict check_proof(const ProofScript& script, const DerivationSystem& sys);

// Rule-derivation-mode checking where the premises are principles
// (substitution instances allowed, unlike hypotheses).
Verdict check_principle_from_principles(const std::vector<FormulaPtr>& premises,
                                        const FormulaPtr& goal,
                                        const ProofScript& script,
                                        const DerivationSystem& sys);

// ---------------------------------------------------------------------------
// Script text format

ProofScript parse_script(const std::string& text, const Signature& sig);
ProofScript load_script_file(const std::string& path, const Signature& sig);

} // namespace qhc

#endif
