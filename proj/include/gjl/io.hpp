#ifndef GJL_IO_HPP
#define GJL_IO_HPP

#include <optional>
#include <string>
#include <variant>

#include "gjl/models.hpp"

namespace gjl {

// Model files (.gm), UTF-8, line-oriented:
//   default_e = <rational>
//   e(p<k>) = <rational>
//   default_E = <rational>
//   E(<term>, "<formula>") = <rational>
//   evidence = all_ones
//   evidence = x_rooted <rational> <GJ45_TCS|GLP_TCS>
//   evidence = crisp_shifted <to_zero|to_one> <GJ45_TCS|GLP_TCS>
//   oracle = <path>            (optional; certificates for oracle-backed evidence)
// '#' starts a comment. Oracle-backed evidence is returned with a null oracle;
// the caller attaches one (from the given path or a standard stock oracle).
struct ParsedModel {
  Model model;
  std::optional<std::string> oracle_path;
};

ParsedModel read_model_text(const std::string& text); // throws std::runtime_error
ParsedModel read_model_file(const std::string& path);
std::string write_model_text(const Model& m);

// Proof files (.gjp justification / .gmp modal):
//   calculus <id> [cs <path|total>]
//   <n>. <formula> ; assume <k> | axiom <name> | mp <i> <j> | cs | nbox <i>
// Line references are 1-based. A justification header without a cs clause
// gets the empty finite specification.
using AnyProof = std::variant<JProof, MProof>;

AnyProof read_proof_text(const std::string& text); // throws std::runtime_error
AnyProof read_proof_file(const std::string& path);
std::string write_proof_text(const JProof& p);
std::string write_proof_text(const MProof& p);

// Constant specification files (.cs):
//   base <calculus>
//   <member formula>          (one per line)
ConstantSpec read_cs_text(const std::string& text); // throws std::runtime_error
ConstantSpec read_cs_file(const std::string& path);
std::string write_cs_text(const ConstantSpec& cs);

// Oracle certificate files (.orc), JSON: theorem proofs and refutation
// witnesses embedded as proof/model text.
OraclePtr read_oracle_text(const std::string& text); // throws std::runtime_error
OraclePtr read_oracle_file(const std::string& path);
std::string write_oracle_text(const TheoremhoodOracle& oracle);

std::string read_file(const std::string& path); // throws std::runtime_error
void write_file(const std::string& path, const std::string& content);

} // namespace gjl

#endif
