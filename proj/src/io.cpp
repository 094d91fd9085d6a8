#include "gjl/io.hpp"

#include <fstream>
#include <sstream>

#include "gjl/parse.hpp"
#include "json.hpp"

namespace gjl {

namespace {

using nlohmann::json;

[[noreturn]] void ioerr(const std::string& message) { throw std::runtime_error(message); }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

TruthValue parse_truth(const std::string& text, const std::string& context) {
  auto v = TruthValue::parse(trim(text));
  if (!v) ioerr(context + ": not a rational in [0,1]: '" + text + "'");
  return *v;
}

} // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ioerr("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) ioerr("cannot write " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// Model files

ParsedModel read_model_text(const std::string& text) {
  ParsedModel out{Model{FiniteEvidence{TruthValue::one(), {}}, Valuation{TruthValue::one()}},
                  std::nullopt};
  bool evidence_fixed = false;
  bool valuation_given = false;
  FiniteEvidence finite{TruthValue::one(), {}};
  bool finite_used = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto ctx = [&] { return "model line " + std::to_string(lineno); };
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) ioerr(ctx() + ": missing '='");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "default_e") {
      Valuation v{parse_truth(value, ctx())};
      for (const auto& [atom, tv] : out.model.valuation.overrides()) v.set(atom, tv);
      out.model.valuation = std::move(v);
      valuation_given = true;
    } else if (key.rfind("e(", 0) == 0 && key.back() == ')') {
      const std::string inner = key.substr(2, key.size() - 3);
      if (inner.size() < 2 || inner[0] != 'p') ioerr(ctx() + ": expected e(p<k>)");
      const unsigned atom = static_cast<unsigned>(std::stoul(inner.substr(1)));
      out.model.valuation.set(atom, parse_truth(value, ctx()));
      valuation_given = true;
    } else if (key == "default_E") {
      finite.default_value = parse_truth(value, ctx());
      finite_used = true;
    } else if (key.rfind("E(", 0) == 0 && key.back() == ')') {
      const std::string inner = key.substr(2, key.size() - 3);
      const std::size_t comma = inner.find(',');
      if (comma == std::string::npos) ioerr(ctx() + ": expected E(<term>, \"<formula>\")");
      const std::string term_text = trim(inner.substr(0, comma));
      std::string formula_text = trim(inner.substr(comma + 1));
      if (formula_text.size() < 2 || formula_text.front() != '"' || formula_text.back() != '"')
        ioerr(ctx() + ": formula must be quoted");
      formula_text = formula_text.substr(1, formula_text.size() - 2);
      try {
        finite.overrides.emplace(
            EvidenceKey{parse_term(term_text), parse_jformula(formula_text)},
            parse_truth(value, ctx()));
      } catch (const ParseError& e) {
        ioerr(ctx() + ": " + e.what());
      }
      finite_used = true;
    } else if (key == "evidence") {
      if (evidence_fixed) ioerr(ctx() + ": evidence declared twice");
      const auto words = split_ws(value);
      if (words.size() == 1 && words[0] == "all_ones") {
        out.model.evidence = AllOnesEvidence{};
      } else if (words.size() == 3 && words[0] == "x_rooted") {
        const TruthValue x = parse_truth(words[1], ctx());
        const auto logic = parse_xlogic(words[2]);
        if (!logic) ioerr(ctx() + ": unknown logic '" + words[2] + "'");
        if (x.is_zero() || x.is_one())
          ioerr(ctx() + ": x-rooted models need 0 < x < 1");
        out.model.evidence = XRootedEvidence{x, *logic, nullptr};
      } else if (words.size() == 3 && words[0] == "crisp_shifted") {
        const auto logic = parse_xlogic(words[2]);
        if (!logic) ioerr(ctx() + ": unknown logic '" + words[2] + "'");
        if (words[1] != "to_zero" && words[1] != "to_one")
          ioerr(ctx() + ": expected to_zero or to_one");
        out.model.evidence = CrispShiftedEvidence{words[1] == "to_one", *logic, nullptr};
      } else {
        ioerr(ctx() + ": unknown evidence form");
      }
      evidence_fixed = true;
    } else if (key == "oracle") {
      out.oracle_path = value;
    } else {
      ioerr(ctx() + ": unknown key '" + key + "'");
    }
  }
  if (finite_used && evidence_fixed)
    ioerr("model mixes finite evidence lines with an evidence declaration");
  if (finite_used || !evidence_fixed) out.model.evidence = std::move(finite);
  // x-rooted and crisp-shifted models come with a matching constant
  // valuation unless the file says otherwise.
  if (!valuation_given) {
    if (const auto* xr = std::get_if<XRootedEvidence>(&out.model.evidence)) {
      out.model.valuation = Valuation{xr->x};
    } else if (const auto* cs = std::get_if<CrispShiftedEvidence>(&out.model.evidence)) {
      out.model.valuation =
          Valuation{cs->to_one ? TruthValue::one() : TruthValue::zero()};
    }
  }
  return out;
}

ParsedModel read_model_file(const std::string& path) { return read_model_text(read_file(path)); }

std::string write_model_text(const Model& m) {
  std::string out;
  out += "default_e = " + m.valuation.default_value().to_string() + "\n";
  for (const auto& [atom, v] : m.valuation.overrides()) {
    out += "e(p" + std::to_string(atom) + ") = " + v.to_string() + "\n";
  }
  if (const auto* fin = std::get_if<FiniteEvidence>(&m.evidence)) {
    out += "default_E = " + fin->default_value.to_string() + "\n";
    for (const auto& [key, v] : fin->overrides) {
      out += "E(" + key.term.to_string() + ", \"" + key.formula.to_string() +
             "\") = " + v.to_string() + "\n";
    }
  } else if (std::holds_alternative<AllOnesEvidence>(m.evidence)) {
    out += "evidence = all_ones\n";
  } else if (const auto* xr = std::get_if<XRootedEvidence>(&m.evidence)) {
    out += "evidence = x_rooted " + xr->x.to_string() + " " + to_string(xr->logic) + "\n";
  } else {
    const auto& cs = std::get<CrispShiftedEvidence>(m.evidence);
    out += "evidence = crisp_shifted " + std::string(cs.to_one ? "to_one" : "to_zero") +
           " " + to_string(cs.logic) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Proof files

namespace {

struct RawStep {
  std::string formula;
  std::string rule;
};

struct RawProof {
  std::string calc;
  std::optional<std::string> cs_clause;
  std::vector<RawStep> steps;
};

RawProof read_raw_proof(const std::string& text) {
  RawProof out;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!have_header) {
      auto words = split_ws(line);
      if (words.size() != 2 && !(words.size() == 4 && words[2] == "cs"))
        ioerr("proof header must be 'calculus <id> [cs <path|total>]'");
      if (words[0] != "calculus") ioerr("proof file must start with a calculus header");
      out.calc = words[1];
      if (words.size() == 4) out.cs_clause = words[3];
      have_header = true;
      continue;
    }
    const std::size_t dot = line.find('.');
    const std::size_t semi = line.rfind(';');
    if (dot == std::string::npos || semi == std::string::npos || semi < dot)
      ioerr("proof line " + std::to_string(lineno) + ": expected '<n>. <formula> ; <rule>'");
    const std::string num = trim(line.substr(0, dot));
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        ioerr("proof line " + std::to_string(lineno) + ": bad line number '" + num + "'");
    if (std::stoul(num) != out.steps.size() + 1)
      ioerr("proof line " + std::to_string(lineno) + ": lines must be numbered consecutively");
    out.steps.push_back(
        {trim(line.substr(dot + 1, semi - dot - 1)), trim(line.substr(semi + 1))});
  }
  if (!have_header) ioerr("proof file is empty");
  return out;
}

template <typename Step>
void parse_rule_into(Step& step, const std::string& rule, std::size_t lineno,
                     std::size_t line_count, bool modal) {
  const auto words = split_ws(rule);
  if (words.empty()) ioerr("proof line " + std::to_string(lineno) + ": missing rule");
  const auto line_ref = [&](const std::string& w) -> std::size_t {
    const std::size_t v = std::stoul(w);
    if (v == 0 || v > line_count)
      ioerr("proof line " + std::to_string(lineno) + ": premise " + w + " out of range");
    return v - 1;
  };
  if (words[0] == "assume" && words.size() == 2) {
    step.rule = StepRule::Assume;
    step.assume_index = static_cast<unsigned>(std::stoul(words[1]));
  } else if (words[0] == "axiom" && words.size() == 2) {
    const auto s = parse_scheme_name(words[1]);
    if (!s) ioerr("proof line " + std::to_string(lineno) + ": unknown scheme " + words[1]);
    step.rule = StepRule::Axiom;
    step.scheme = *s;
  } else if (words[0] == "mp" && words.size() == 3) {
    step.rule = StepRule::MP;
    step.premise_i = line_ref(words[1]);
    step.premise_j = line_ref(words[2]);
  } else if (words[0] == "cs" && words.size() == 1 && !modal) {
    step.rule = StepRule::CS;
  } else if (words[0] == "nbox" && words.size() == 2 && modal) {
    step.rule = StepRule::NBox;
    step.premise_i = line_ref(words[1]);
  } else {
    ioerr("proof line " + std::to_string(lineno) + ": unknown rule '" + rule + "'");
  }
}

} // namespace

AnyProof read_proof_text(const std::string& text) {
  const RawProof raw = read_raw_proof(text);
  if (auto jc = parse_jcalc(raw.calc)) {
    ConstantSpec cs = ConstantSpec::finite(*jc, {}).cs.value();
    if (raw.cs_clause) {
      if (*raw.cs_clause == "total") {
        cs = ConstantSpec::total(*jc);
      } else {
        cs = read_cs_file(*raw.cs_clause);
        if (cs.base() != *jc) ioerr("constant specification base does not match the calculus");
      }
    }
    JProof proof{*jc, cs, {}};
    for (std::size_t i = 0; i < raw.steps.size(); ++i) {
      JStep step{JFormula::bottom(), StepRule::Axiom};
      try {
        step.formula = parse_jformula(raw.steps[i].formula);
      } catch (const ParseError& e) {
        ioerr("proof line " + std::to_string(i + 1) + ": " + e.what());
      }
      parse_rule_into(step, raw.steps[i].rule, i + 1, i, false);
      proof.steps.push_back(std::move(step));
    }
    return proof;
  }
  if (auto mc = parse_mcalc(raw.calc)) {
    if (raw.cs_clause) ioerr("modal calculi carry no constant specification");
    MProof proof{*mc, {}};
    for (std::size_t i = 0; i < raw.steps.size(); ++i) {
      MStep step{MFormula::bottom(), StepRule::Axiom};
      try {
        step.formula = parse_mformula(raw.steps[i].formula);
      } catch (const ParseError& e) {
        ioerr("proof line " + std::to_string(i + 1) + ": " + e.what());
      }
      parse_rule_into(step, raw.steps[i].rule, i + 1, i, true);
      proof.steps.push_back(std::move(step));
    }
    return proof;
  }
  ioerr("unknown calculus '" + raw.calc + "'");
}

AnyProof read_proof_file(const std::string& path) { return read_proof_text(read_file(path)); }

namespace {

template <typename Step>
std::string rule_text(const Step& st) {
  switch (st.rule) {
    case StepRule::Assume: return "assume " + std::to_string(st.assume_index);
    case StepRule::Axiom: return "axiom " + to_string(st.scheme);
    case StepRule::MP:
      return "mp " + std::to_string(st.premise_i + 1) + " " + std::to_string(st.premise_j + 1);
    case StepRule::CS: return "cs";
    case StepRule::NBox: return "nbox " + std::to_string(st.premise_i + 1);
  }
  return "?";
}

template <typename Proof>
std::string proof_body(const Proof& p) {
  std::string out;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    out += std::to_string(i + 1) + ". " + p.steps[i].formula.to_string() + " ; " +
           rule_text(p.steps[i]) + "\n";
  }
  return out;
}

} // namespace

std::string write_proof_text(const JProof& p) {
  std::string out = "calculus " + to_string(p.calculus);
  if (p.cs.is_total()) {
    out += " cs total";
  }
  // A finite specification is written as the empty/default clause; standalone
  // member files travel separately as .cs files.
  out += "\n" + proof_body(p);
  return out;
}

std::string write_proof_text(const MProof& p) {
  return "calculus " + to_string(p.calculus) + "\n" + proof_body(p);
}

// ---------------------------------------------------------------------------
// Constant specification files

ConstantSpec read_cs_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::optional<JCalc> base;
  std::vector<JFormula> members;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!base) {
      const auto words = split_ws(line);
      if (words.size() != 2 || words[0] != "base")
        ioerr("constant specification must start with 'base <calculus>'");
      base = parse_jcalc(words[1]);
      if (!base) ioerr("unknown calculus '" + words[1] + "'");
      continue;
    }
    try {
      members.push_back(parse_jformula(line));
    } catch (const ParseError& e) {
      ioerr("cs line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!base) ioerr("constant specification file is empty");
  auto result = ConstantSpec::finite(*base, std::move(members));
  if (!result.cs) ioerr("invalid constant specification: " + result.error);
  return *result.cs;
}

ConstantSpec read_cs_file(const std::string& path) { return read_cs_text(read_file(path)); }

std::string write_cs_text(const ConstantSpec& cs) {
  std::string out = "base " + to_string(cs.base()) + "\n";
  for (const JFormula& m : cs.members()) out += m.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Oracle certificate files

OraclePtr read_oracle_text(const std::string& text) {
  json j = json::parse(text);
  const auto logic = parse_xlogic(j.at("logic").get<std::string>());
  if (!logic) ioerr("oracle file: unknown logic");
  auto oracle = std::make_shared<TheoremhoodOracle>(*logic);
  // Proof and model payloads are either inline text or a path reference.
  const auto payload = [](const json& entry, const char* inline_key,
                          const char* path_key) -> std::string {
    if (entry.contains(inline_key)) return entry.at(inline_key).get<std::string>();
    if (entry.contains(path_key)) return read_file(entry.at(path_key).get<std::string>());
    ioerr(std::string("oracle entry needs ") + inline_key + " or " + path_key);
  };
  for (const auto& entry : j.value("theorems", json::array())) {
    const JFormula f = parse_jformula(entry.at("formula").get<std::string>());
    AnyProof proof = read_proof_text(payload(entry, "proof", "proof_path"));
    if (!std::holds_alternative<JProof>(proof)) ioerr("oracle theorem proof must be justification");
    if (std::string err = oracle->add_theorem(f, std::get<JProof>(std::move(proof)));
        !err.empty())
      ioerr("oracle theorem rejected: " + err);
  }
  for (const auto& entry : j.value("nontheorems", json::array())) {
    const JFormula f = parse_jformula(entry.at("formula").get<std::string>());
    const auto cls = parse_model_class(entry.at("class").get<std::string>());
    if (!cls) ioerr("oracle file: unknown model class");
    RefutationWitness w{read_model_text(payload(entry, "model", "model_path")).model, *cls,
                        entry.value("star", false)};
    if (std::string err = oracle->add_nontheorem(f, std::move(w)); !err.empty())
      ioerr("oracle refutation rejected: " + err);
  }
  return oracle;
}

OraclePtr read_oracle_file(const std::string& path) { return read_oracle_text(read_file(path)); }

std::string write_oracle_text(const TheoremhoodOracle& oracle) {
  json j;
  j["logic"] = to_string(oracle.logic());
  j["theorems"] = json::array();
  j["nontheorems"] = json::array();
  for (const JFormula& f : oracle.decided_formulas()) {
    if (const JProof* proof = oracle.theorem_proof(f)) {
      j["theorems"].push_back(
          {{"formula", f.to_string()}, {"proof", write_proof_text(*proof)}});
    } else if (const RefutationWitness* w = oracle.refutation(f)) {
      j["nontheorems"].push_back({{"formula", f.to_string()},
                                  {"model", write_model_text(w->model)},
                                  {"class", to_string(w->cls)},
                                  {"star", w->star}});
    }
  }
  return j.dump(2) + "\n";
}

} // namespace gjl
