#ifndef QHC_PARSER_HPP
#define QHC_PARSER_HPP

#include <string>

#include "qhc/syntax.hpp"

namespace qhc {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        pos(pos) {}
};

// Parses a formula in the concrete grammar. Both ASCII and Unicode operator
// spellings are accepted; identifiers must be declared in `sig` when used as
// predicates, otherwise they are read as individual variables.
FormulaPtr parse_formula(const std::string& text, const Signature& sig);

TermPtr parse_term(const std::string& text, const Signature& sig);

// Signature file: one declaration per line, `problem NAME ARITY` or
// `pred NAME ARITY`; `#` starts a comment.
Signature parse_signature(const std::string& text);
Signature load_signature_file(const std::string& path);

// ASCII printing; resugars ~, <->, box, nabla, dia where recorded.
std::string print_formula(const FormulaPtr& f);
std::string print_term(const TermPtr& t);

} // namespace qhc

#endif
