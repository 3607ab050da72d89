#ifndef QHC_SYNTAX_HPP
#define QHC_SYNTAX_HPP

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhc {

// The two sorts of the joint language: c-formulas denote propositions,
// i-formulas denote problems.
enum class Sort { C, I };

inline const char* sort_name(Sort s) { return s == Sort::C ? "c" : "i"; }

struct SortError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Signature

enum class PredSort { Problem, Proper };

struct PredDecl {
  std::string name;
  unsigned arity = 0;
  PredSort psort = PredSort::Proper;
  Sort formula_sort() const { return psort == PredSort::Problem ? Sort::I : Sort::C; }
};

// Declares the predicate variables of a language together with the language
// flags (which operators are admitted).
class Signature {
 public:
  Signature() = default;

  void declare(const std::string& name, unsigned arity, PredSort psort);
  bool declared(const std::string& name) const { return preds_.count(name) != 0; }
  const PredDecl& lookup(const std::string& name) const;
  const std::map<std::string, PredDecl>& decls() const { return preds_; }

  bool allow_query_bang = true;   // mixing operators ? and !
  bool allow_proof_terms = false; // S4pr term formers ', [.], *{.} and ::
  bool allow_i = true;
  bool allow_c = true;
  bool allow_box = false;   // primitive box (QS4 language)
  bool allow_nabla = false; // primitive nabla (QH4 language)

 private:
  std::map<std::string, PredDecl> preds_;
};

// ---------------------------------------------------------------------------
// Terms (individual variables; proof terms only in the S4pr language)

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class TermKind { Var, Prime, App, Star };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  TermKind kind;
  std::string var;      // Var
  TermPtr sub, arg;     // Prime (sub), App (sub[arg])
  FormulaPtr star_body; // Star

  static TermPtr mk_var(std::string name);
  static TermPtr mk_prime(TermPtr t);
  static TermPtr mk_app(TermPtr s, TermPtr t);
  static TermPtr mk_star(FormulaPtr f);
};

bool term_equal(const TermPtr& a, const TermPtr& b);

// ---------------------------------------------------------------------------
// Formulas

enum class Kind {
  TopC,
  BotC,
  Triv,
  Absurd,
  Atom,
  And,
  Or,
  Imp,
  Forall,
  Exists,
  Query,   // ? : i -> c
  Bang,    // ! : c -> i
  ProofOf, // t :: F (S4pr)
  BoxPrim, // primitive box (QS4)
  NablaPrim // primitive nabla (QH4)
};

// Remembered surface form so the printer can resugar ~, <->, box, nabla, dia.
enum class Sugar { None, Neg, Iff, Box, Nabla, Dia };

class Formula : public std::enable_shared_from_this<Formula> {
 public:
  Kind kind;
  Sort sort;
  Sugar sugar = Sugar::None;

  std::string pred;          // Atom
  std::vector<TermPtr> args; // Atom
  std::string var;           // Forall / Exists
  FormulaPtr lhs, rhs;       // binary nodes; unary nodes use lhs
  TermPtr term;              // ProofOf

  // Constructors sort-check; ill-sorted trees are unconstructible.
  static FormulaPtr top();
  static FormulaPtr bot();
  static FormulaPtr triv();
  static FormulaPtr absurd();
  static FormulaPtr atom(const Signature& sig, const std::string& pred,
                         std::vector<TermPtr> args);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b, Sugar sugar = Sugar::None);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr imp(FormulaPtr a, FormulaPtr b, Sugar sugar = Sugar::None);
  static FormulaPtr forall(std::string v, FormulaPtr body);
  static FormulaPtr exists(std::string v, FormulaPtr body);
  static FormulaPtr query(FormulaPtr body, Sugar sugar = Sugar::None);
  static FormulaPtr bang(FormulaPtr body, Sugar sugar = Sugar::None);
  static FormulaPtr proof_of(TermPtr t, FormulaPtr body);
  static FormulaPtr box_prim(FormulaPtr body);
  static FormulaPtr nabla_prim(FormulaPtr body);

  // Derived surface operators.
  static FormulaPtr neg(FormulaPtr a);   // a -> Bot/Abs by sort
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr box(FormulaPtr a);   // ?!a
  static FormulaPtr nabla(FormulaPtr a); // !?a
  static FormulaPtr dia(FormulaPtr a);   // ~?!~a
};

Sort sort_of(const FormulaPtr& f);

// Free individual variables and free predicate variables.
struct FreeVars {
  std::set<std::string> indiv;
  std::set<std::string> preds;
};
FreeVars free_vars(const FormulaPtr& f);
void collect_free_term_vars(const TermPtr& t, std::set<std::string>& out);

// Equality up to renaming of bound individual variables (sugar tags ignored).
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

// Strict structural equality (also ignores sugar tags).
bool struct_equal(const FormulaPtr& a, const FormulaPtr& b);

// ---------------------------------------------------------------------------
// Substitution (simultaneous, capture-avoiding)

struct Abstraction {
  std::vector<std::string> params; // distinct individual variables
  FormulaPtr body;                 // sort matches the predicate variable
};

struct Substitution {
  std::map<std::string, TermPtr> indiv;
  std::map<std::string, Abstraction> preds;
  bool empty() const { return indiv.empty() && preds.empty(); }
};

// Applies `s` to `f`. Bound variables are renamed whenever a substituted body
// or term would be captured. Throws SortError on a sort-incorrect abstraction
// and std::runtime_error on arity mismatch.
FormulaPtr apply_substitution(const FormulaPtr& f, const Substitution& s,
                              const Signature& sig);

// Composite s1;s2 (apply s1 first): f[s1][s2] alpha-equals f[compose(s1,s2)].
Substitution compose(const Substitution& s1, const Substitution& s2,
                     const Signature& sig);

} // namespace qhc

#endif
