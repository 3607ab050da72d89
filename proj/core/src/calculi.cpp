#include "qhc/calculi.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "qhc/parser.hpp"

namespace qhc {

namespace {

Signature make_qhc_sig() {
  Signature sig;
  sig.declare("alpha", 0, PredSort::Problem);
  sig.declare("beta", 0, PredSort::Problem);
  sig.declare("gamma", 0, PredSort::Problem);
  sig.declare("delta", 0, PredSort::Problem);
  sig.declare("pi", 0, PredSort::Problem);
  sig.declare("theta", 1, PredSort::Problem);
  sig.declare("xi", 2, PredSort::Problem);
  sig.declare("p", 0, PredSort::Proper);
  sig.declare("q", 0, PredSort::Proper);
  sig.declare("r", 0, PredSort::Proper);
  sig.declare("P", 1, PredSort::Proper);
  return sig;
}

void add_qh_laws(DerivationSystem& s) {
  s.add_law("ax-k", "alpha -> (beta -> alpha)");
  s.add_law("ax-s", "(alpha -> (beta -> gamma)) -> ((alpha -> beta) -> (alpha -> gamma))");
  s.add_law("and-el", "alpha & beta -> alpha");
  s.add_law("and-er", "alpha & beta -> beta");
  s.add_law("and-i", "alpha -> (beta -> alpha & beta)");
  s.add_law("or-il", "alpha -> alpha | beta");
  s.add_law("or-ir", "beta -> alpha | beta");
  s.add_law("or-e", "(alpha -> gamma) -> ((beta -> gamma) -> (alpha | beta -> gamma))");
  s.add_law("efq", "Abs -> alpha");
  s.add_law("triv", "Triv");
  s.add_law("all-e", "forall x. theta(x) -> theta(y)");
  s.add_law("ex-i", "theta(y) -> exists x. theta(x)");
  s.add_law("all-shift", "forall x. (pi -> theta(x)) -> (pi -> forall x. theta(x))");
  s.add_law("ex-shift", "forall x. (theta(x) -> pi) -> (exists x. theta(x) -> pi)");
  s.add_rule("mp-i", {"alpha -> beta", "alpha"}, "beta", /*is_mp=*/true);
}

void add_qc_laws(DerivationSystem& s) {
  s.add_law("ax-k-c", "p -> (q -> p)");
  s.add_law("ax-s-c", "(p -> (q -> r)) -> ((p -> q) -> (p -> r))");
  s.add_law("and-el-c", "p & q -> p");
  s.add_law("and-er-c", "p & q -> q");
  s.add_law("and-i-c", "p -> (q -> p & q)");
  s.add_law("or-il-c", "p -> p | q");
  s.add_law("or-ir-c", "q -> p | q");
  s.add_law("or-e-c", "(p -> r) -> ((q -> r) -> (p | q -> r))");
  s.add_law("efq-c", "Bot -> p");
  s.add_law("triv-c", "Top");
  s.add_law("dne", "~~p -> p");
  s.add_law("all-e-c", "forall x. P(x) -> P(y)");
  s.add_law("ex-i-c", "P(y) -> exists x. P(x)");
  s.add_law("all-shift-c", "forall x. (q -> P(x)) -> (q -> forall x. P(x))");
  s.add_law("ex-shift-c", "forall x. (P(x) -> q) -> (exists x. P(x) -> q)");
  s.add_rule("mp-c", {"p -> q", "p"}, "q", /*is_mp=*/true);
}

std::map<std::string, DerivationSystem> make_systems() {
  std::map<std::string, DerivationSystem> out;

  Signature qhc_sig = make_qhc_sig();

  {
    DerivationSystem s;
    s.name = "QH";
    s.sig = qhc_sig;
    s.sig.allow_query_bang = false;
    s.sig.allow_c = false;
    add_qh_laws(s);
    out[s.name] = std::move(s);
  }
  {
    DerivationSystem s;
    s.name = "QC";
    s.sig = qhc_sig;
    s.sig.allow_query_bang = false;
    s.sig.allow_i = false;
    add_qc_laws(s);
    out[s.name] = std::move(s);
  }
  {
    DerivationSystem s;
    s.name = "QHC-simplified";
    s.sig = qhc_sig;
    add_qh_laws(s);
    add_qc_laws(s);
    s.add_rule("nec-bang", {"p"}, "!p");
    s.add_rule("nec-query", {"alpha"}, "?alpha");
    s.add_law("L-eval", "?!p -> p");
    s.add_law("L-unit", "alpha -> !?alpha");
    s.add_law("L-bang-dist", "!(p -> q) -> (!p -> !q)");
    s.add_law("L-query-dist", "?(alpha -> beta) -> (?alpha -> ?beta)");
    s.add_law("L-consist", "~!Bot");
    out[s.name] = std::move(s);
  }
  {
    DerivationSystem s;
    s.name = "QHC-full";
    s.sig = qhc_sig;
    add_qh_laws(s);
    add_qc_laws(s);
    s.add_law("1a", "?(gamma & delta) <-> ?gamma & ?delta");
    s.add_law("1b", "?(gamma | delta) <-> ?gamma | ?delta");
    s.add_law("1c", "?(gamma -> delta) -> (?gamma -> ?delta)");
    s.add_law("1d", "~?Abs");
    s.add_law("1e", "?(exists x. theta(x)) <-> (exists x. ?theta(x))");
    s.add_law("1f", "?(forall x. theta(x)) -> forall x. ?theta(x)");
    s.add_law("1g", "gamma -> !?gamma");
    s.add_law("2a", "~!Bot");
    s.add_law("2b", "?!p -> p");
    s.add_rule("2c", {"!p"}, "p");
    s.add_law("2d", "!p -> !?!p");
    s.add_law("2e", "!(p -> q) -> (!p -> !q)");
    s.add_rule("2f", {"p"}, "!p");
    out[s.name] = std::move(s);
  }
  {
    DerivationSystem s;
    s.name = "QS4";
    s.sig = qhc_sig;
    s.sig.allow_query_bang = false;
    s.sig.allow_i = false;
    s.sig.allow_box = true;
    add_qc_laws(s);
    s.add_law("s4-t", "box p -> p");
    s.add_law("s4-4", "box p -> box box p");
    s.add_law("s4-k", "box (p -> q) -> (box p -> box q)");
    s.add_rule("nec-box", {"p"}, "box p");
    out[s.name] = std::move(s);
  }
  {
    DerivationSystem s;
    s.name = "QH4";
    s.sig = qhc_sig;
    s.sig.allow_query_bang = false;
    s.sig.allow_c = false;
    s.sig.allow_nabla = true;
    add_qh_laws(s);
    s.add_law("h4-unit", "alpha -> nabla alpha");
    s.add_law("h4-join", "nabla nabla alpha -> nabla alpha");
    s.add_law("h4-k", "nabla (alpha -> beta) -> (nabla alpha -> nabla beta)");
    s.add_law("h4-consist", "nabla Abs -> Abs");
    out[s.name] = std::move(s);
  }
  {
    DerivationSystem s;
    s.name = "S4pr";
    s.sig = qhc_sig;
    s.sig.allow_query_bang = false;
    s.sig.allow_i = false;
    s.sig.allow_proof_terms = true;
    add_qc_laws(s);
    s.add_law("s4pr-1", "t::p -> p");
    s.add_law("s4pr-2", "t::p -> t'::(t::p)");
    s.add_law("s4pr-3", "s::(p -> q) -> (t::p -> s[t]::q)");
    s.add_rule("s4pr-star", {"p"}, "*{p}::p");
    out[s.name] = std::move(s);
  }
  return out;
}

const std::map<std::string, DerivationSystem>& systems() {
  static const std::map<std::string, DerivationSystem> sys = make_systems();
  return sys;
}

} // namespace

const Signature& qhc_signature() {
  static const Signature sig = make_qhc_sig();
  return sig;
}

const DerivationSystem& builtin_system(const std::string& name) {
  auto it = systems().find(name);
  if (it == systems().end()) throw std::runtime_error("unknown system: " + name);
  return it->second;
}

std::vector<std::string> builtin_system_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : systems()) out.push_back(k);
  return out;
}

namespace {

CorpusEntry principle(const std::string& name, const std::string& system,
                      const std::string& text, bool scripted) {
  CorpusEntry e;
  e.name = name;
  e.system = system;
  e.statement = parse_formula(text, builtin_system(system).sig);
  e.scripted = scripted;
  if (scripted) e.script_path = "scripts/" + name + ".qp";
  return e;
}

CorpusEntry rule_entry(const std::string& name, const std::string& system,
                       const std::vector<std::string>& premises,
                       const std::string& concl, bool scripted) {
  CorpusEntry e;
  e.name = name;
  e.system = system;
  const Signature& sig = builtin_system(system).sig;
  for (const auto& p : premises) e.premises.push_back(parse_formula(p, sig));
  e.statement = parse_formula(concl, sig);
  e.scripted = scripted;
  if (scripted) e.script_path = "scripts/" + name + ".qp";
  return e;
}

} // namespace

std::vector<CorpusEntry> theorem_corpus() {
  std::vector<CorpusEntry> v;
  const char* S = "QHC-simplified";

  // System-equivalence bundle (the executable content of the simplification).
  v.push_back(principle("bundle-2d", S, "!p -> !?!p", true));
  v.push_back(principle("bundle-1d", S, "~?Abs", true));
  v.push_back(principle("bundle-1a-fwd", S, "?(gamma & delta) -> ?gamma & ?delta", true));
  v.push_back(principle("bundle-1a-bwd", S, "?gamma & ?delta -> ?(gamma & delta)", true));
  v.push_back(principle("bundle-1c", S, "?(gamma -> delta) -> (?gamma -> ?delta)", true));
  v.push_back(principle("bundle-2a", S, "~!Bot", true));
  v.push_back(principle("bundle-full-eval", "QHC-full", "?!p -> p", true));
  v.push_back(principle("bundle-full-unit", "QHC-full", "alpha -> !?alpha", true));
  v.push_back(principle("bundle-full-bang-dist", "QHC-full", "!(p -> q) -> (!p -> !q)", true));
  v.push_back(principle("bundle-full-query-dist", "QHC-full", "?(alpha -> beta) -> (?alpha -> ?beta)", true));
  v.push_back(principle("bundle-full-consist", "QHC-full", "~!Bot", true));
  v.push_back(rule_entry("bundle-full-nec-query", "QHC-full", {"alpha"}, "?alpha", true));
  v.push_back(rule_entry("bundle-simpl-co-nec", S, {"!p"}, "p", true));

  // Basic properties (3.4).
  v.push_back(principle("th-3.4-1", S, "!Bot <-> Abs", true));
  v.push_back(principle("th-3.4-2", S, "?Abs <-> Bot", true));
  v.push_back(principle("th-3.4-3", S, "!p & !q <-> !(p & q)", true));
  v.push_back(principle("th-3.4-4", S, "!p | !q -> !(p | q)", false));
  v.push_back(principle("th-3.4-5", S, "(forall x. !P(x)) <-> !forall x. P(x)", false));
  v.push_back(principle("th-3.4-6", S, "(exists x. !P(x)) -> !exists x. P(x)", false));
  v.push_back(principle("th-3.4-7", S, "~alpha <-> !~?alpha", false));
  v.push_back(principle("th-3.4-8", S, "(!?alpha -> !?beta) <-> !(?alpha -> ?beta)", false));

  // Galois connection, both directions (rule form).
  v.push_back(rule_entry("galois-fwd", S, {"?alpha -> p"}, "alpha -> !p", true));
  v.push_back(rule_entry("galois-bwd", S, {"alpha -> !p"}, "?alpha -> p", true));

  // Box fragment (3.6), with box = ?! unfolded.
  v.push_back(principle("box-1", S, "?!p -> p", true));
  v.push_back(principle("box-2", S, "?!p -> ?!?!p", true));
  v.push_back(principle("box-3", S, "?!(p -> q) -> (?!p -> ?!q)", true));
  v.push_back(rule_entry("box-4", S, {"p"}, "?!p", true));

  // Nabla fragment (3.7), with nabla = !? unfolded.
  v.push_back(principle("nabla-1", S, "alpha -> !?alpha", true));
  v.push_back(principle("nabla-2", S, "!?!?alpha -> !?alpha", true));
  v.push_back(principle("nabla-3", S, "!?(alpha -> beta) -> (!?alpha -> !?beta)", true));
  v.push_back(principle("nabla-4", S, "!?Abs -> Abs", true));

  // Further derivables (3.8).
  v.push_back(principle("th-3.8-1", S, "!?alpha -> ~~alpha", false));
  v.push_back(principle("th-3.8-2", S, "~!?alpha <-> ~alpha", false));
  v.push_back(principle("th-3.8-3", S, "~alpha <-> !?~alpha", false));
  v.push_back(principle("th-3.8-4", S, "?!(p & q) <-> ?!p & ?!q", false));
  v.push_back(principle("th-3.8-5", S, "!?(alpha & beta) <-> !?alpha & !?beta", false));

  // S4pr (2.2).
  v.push_back(principle("s4pr-neg-bot", "S4pr", "~(t::Bot)", true));
  v.push_back(principle("s4pr-exists-eval", "S4pr", "(exists t. t::p) -> p", true));
  v.push_back(rule_entry("s4pr-co-nec", "S4pr", {"t::p"}, "p", true));
  v.push_back(principle("s4pr-intro",
                        "S4pr",
                        "t::p -> *{t::p -> exists u. u::p}[t']::(exists u. u::p)",
                        true));
  return v;
}

std::string corpus_manifest(const std::vector<CorpusEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << e.name << " ; " << e.system << " ; ";
    if (!e.premises.empty()) {
      for (size_t i = 0; i < e.premises.size(); ++i) {
        if (i) out << ", ";
        out << print_formula(e.premises[i]);
      }
      out << " / ";
    }
    out << print_formula(e.statement) << " ; "
        << (e.scripted ? "scripted" : "semantic-only");
    if (!e.script_path.empty()) out << " ; " << e.script_path;
    out << "\n";
  }
  return out.str();
}

} // namespace qhc
