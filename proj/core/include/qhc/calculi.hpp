#ifndef QHC_CALCULI_HPP
#define QHC_CALCULI_HPP

#include <string>
#include <vector>

#include "qhc/metalogic.hpp"

namespace qhc {

// Builtin derivation systems: QC, QH, QHC-full, QHC-simplified, QS4, QH4, S4pr.
const DerivationSystem& builtin_system(const std::string& name);
std::vector<std::string> builtin_system_names();

// The shared signature of the QHC-family systems (both sorts):
//   problem: alpha beta gamma delta pi (0-ary), theta (unary), xi (binary)
//   proper:  p q r (0-ary), P (unary)
const Signature& qhc_signature();

struct CorpusEntry {
  std::string name;
  std::string system;
  // Statement: a principle (formula, no premises) or a rule.
  std::vector<FormulaPtr> premises;
  FormulaPtr statement;
  bool scripted = false;
  std::string script_path; // relative to the data directory
};

// Named theorems of the paper-facing corpus, including the system-equivalence
// bundle entries. Parsed against each entry's system signature.
std::vector<CorpusEntry> theorem_corpus();

// Corpus manifest serialization:
//   NAME ; SYSTEM ; PRINCIPLE-or-RULE ; scripted|semantic-only ; script-path?
std::string corpus_manifest(const std::vector<CorpusEntry>& entries);

} // namespace qhc

#endif
