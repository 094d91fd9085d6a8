#include "gjl/calculus.hpp"

#include <algorithm>
#include <set>

namespace gjl {

std::string to_string(JCalc c) {
  switch (c) {
    case JCalc::GJ: return "GJ";
    case JCalc::GJT: return "GJT";
    case JCalc::GJ4: return "GJ4";
    case JCalc::GLP: return "GLP";
    case JCalc::GJ45: return "GJ45";
    case JCalc::GJT45: return "GJT45";
  }
  return "?";
}

std::string to_string(MCalc c) {
  switch (c) {
    case MCalc::GK: return "GK";
    case MCalc::GT: return "GT";
    case MCalc::GK4: return "GK4";
    case MCalc::GS4: return "GS4";
    case MCalc::GK45: return "GK45";
  }
  return "?";
}

std::optional<JCalc> parse_jcalc(std::string_view s) {
  if (s == "GJ") return JCalc::GJ;
  if (s == "GJT") return JCalc::GJT;
  if (s == "GJ4") return JCalc::GJ4;
  if (s == "GLP") return JCalc::GLP;
  if (s == "GJ45") return JCalc::GJ45;
  if (s == "GJT45") return JCalc::GJT45;
  return std::nullopt;
}

std::optional<MCalc> parse_mcalc(std::string_view s) {
  if (s == "GK") return MCalc::GK;
  if (s == "GT") return MCalc::GT;
  if (s == "GK4") return MCalc::GK4;
  if (s == "GS4") return MCalc::GS4;
  if (s == "GK45") return MCalc::GK45;
  return std::nullopt;
}

std::optional<MCalc> modal_counterpart(JCalc c) {
  switch (c) {
    case JCalc::GJ: return MCalc::GK;
    case JCalc::GJT: return MCalc::GT;
    case JCalc::GJ4: return MCalc::GK4;
    case JCalc::GLP: return MCalc::GS4;
    case JCalc::GJ45: return MCalc::GK45;
    case JCalc::GJT45: return std::nullopt;
  }
  return std::nullopt;
}

std::string to_string(SchemeName s) {
  switch (s) {
    case SchemeName::A1: return "A1";
    case SchemeName::A2: return "A2";
    case SchemeName::A3: return "A3";
    case SchemeName::A5a: return "A5a";
    case SchemeName::A5b: return "A5b";
    case SchemeName::A6: return "A6";
    case SchemeName::A7: return "A7";
    case SchemeName::G4: return "G4";
    case SchemeName::J: return "J";
    case SchemeName::Plus1: return "Plus1";
    case SchemeName::Plus2: return "Plus2";
    case SchemeName::F: return "F";
    case SchemeName::Bang: return "Bang";
    case SchemeName::Query: return "Query";
    case SchemeName::K: return "K";
    case SchemeName::Z: return "Z";
    case SchemeName::T: return "T";
    case SchemeName::Four: return "Four";
    case SchemeName::NegIntro: return "NegIntro";
  }
  return "?";
}

std::optional<SchemeName> parse_scheme_name(std::string_view s) {
  static const std::map<std::string, SchemeName, std::less<>> names = {
      {"A1", SchemeName::A1},       {"A2", SchemeName::A2},
      {"A3", SchemeName::A3},       {"A5a", SchemeName::A5a},
      {"A5b", SchemeName::A5b},     {"A6", SchemeName::A6},
      {"A7", SchemeName::A7},       {"G4", SchemeName::G4},
      {"J", SchemeName::J},         {"Plus1", SchemeName::Plus1},
      {"Plus2", SchemeName::Plus2}, {"F", SchemeName::F},
      {"Bang", SchemeName::Bang},   {"Query", SchemeName::Query},
      {"K", SchemeName::K},         {"Z", SchemeName::Z},
      {"T", SchemeName::T},         {"Four", SchemeName::Four},
      {"NegIntro", SchemeName::NegIntro},
  };
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

namespace {

const std::vector<SchemeName> kCore = {
    SchemeName::A1, SchemeName::A2,  SchemeName::A3, SchemeName::A5a,
    SchemeName::A5b, SchemeName::A6, SchemeName::A7, SchemeName::G4,
};

std::vector<SchemeName> with_core(std::initializer_list<SchemeName> extra) {
  std::vector<SchemeName> out = kCore;
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

} // namespace

const std::vector<SchemeName>& schemes_of(JCalc c) {
  using S = SchemeName;
  static const std::vector<SchemeName> gj = with_core({S::J, S::Plus1, S::Plus2});
  static const std::vector<SchemeName> gjt = with_core({S::J, S::Plus1, S::Plus2, S::F});
  static const std::vector<SchemeName> gj4 = with_core({S::J, S::Plus1, S::Plus2, S::Bang});
  static const std::vector<SchemeName> glp =
      with_core({S::J, S::Plus1, S::Plus2, S::F, S::Bang});
  static const std::vector<SchemeName> gj45 =
      with_core({S::J, S::Plus1, S::Plus2, S::Bang, S::Query});
  static const std::vector<SchemeName> gjt45 =
      with_core({S::J, S::Plus1, S::Plus2, S::F, S::Bang, S::Query});
  switch (c) {
    case JCalc::GJ: return gj;
    case JCalc::GJT: return gjt;
    case JCalc::GJ4: return gj4;
    case JCalc::GLP: return glp;
    case JCalc::GJ45: return gj45;
    case JCalc::GJT45: return gjt45;
  }
  return gj;
}

const std::vector<SchemeName>& schemes_of(MCalc c) {
  using S = SchemeName;
  static const std::vector<SchemeName> gk = with_core({S::K, S::Z});
  static const std::vector<SchemeName> gt = with_core({S::K, S::Z, S::T});
  static const std::vector<SchemeName> gk4 = with_core({S::K, S::Z, S::Four});
  static const std::vector<SchemeName> gs4 = with_core({S::K, S::Z, S::T, S::Four});
  static const std::vector<SchemeName> gk45 =
      with_core({S::K, S::Z, S::Four, S::NegIntro});
  switch (c) {
    case MCalc::GK: return gk;
    case MCalc::GT: return gt;
    case MCalc::GK4: return gk4;
    case MCalc::GS4: return gs4;
    case MCalc::GK45: return gk45;
  }
  return gk;
}

// ---------------------------------------------------------------------------
// Scheme templates and one-sided matching.

namespace {

struct TPat;
using TPatPtr = std::shared_ptr<const TPat>;
struct TPat {
  enum Kind { Meta, Sum, App, Bang, Query } kind;
  int id = 0;
  TPatPtr a, b;
};

TPatPtr tmeta(int id) { return std::make_shared<TPat>(TPat{TPat::Meta, id, nullptr, nullptr}); }
TPatPtr tsum(TPatPtr a, TPatPtr b) {
  return std::make_shared<TPat>(TPat{TPat::Sum, 0, std::move(a), std::move(b)});
}
TPatPtr tapp(TPatPtr a, TPatPtr b) {
  return std::make_shared<TPat>(TPat{TPat::App, 0, std::move(a), std::move(b)});
}
TPatPtr tbang(TPatPtr a) {
  return std::make_shared<TPat>(TPat{TPat::Bang, 0, std::move(a), nullptr});
}
TPatPtr tquery(TPatPtr a) {
  return std::make_shared<TPat>(TPat{TPat::Query, 0, std::move(a), nullptr});
}

struct FPat;
using FPatPtr = std::shared_ptr<const FPat>;
struct FPat {
  enum Kind { Meta, Bottom, Implies, And, Holds, Box } kind;
  int id = 0;
  TPatPtr term;
  FPatPtr a, b;
};

FPatPtr fmeta(int id) {
  return std::make_shared<FPat>(FPat{FPat::Meta, id, nullptr, nullptr, nullptr});
}
FPatPtr fbot() {
  return std::make_shared<FPat>(FPat{FPat::Bottom, 0, nullptr, nullptr, nullptr});
}
FPatPtr fimp(FPatPtr a, FPatPtr b) {
  return std::make_shared<FPat>(FPat{FPat::Implies, 0, nullptr, std::move(a), std::move(b)});
}
FPatPtr fand(FPatPtr a, FPatPtr b) {
  return std::make_shared<FPat>(FPat{FPat::And, 0, nullptr, std::move(a), std::move(b)});
}
FPatPtr fholds(TPatPtr t, FPatPtr a) {
  return std::make_shared<FPat>(FPat{FPat::Holds, 0, std::move(t), std::move(a), nullptr});
}
FPatPtr fbox(FPatPtr a) {
  return std::make_shared<FPat>(FPat{FPat::Box, 0, nullptr, std::move(a), nullptr});
}
FPatPtr fneg(FPatPtr a) { return fimp(std::move(a), fbot()); }

// Scheme templates quoted from the calculi definitions; metavariable ids are
// positional (formulas 0..2, terms 0..1).
const FPatPtr& scheme_pattern(SchemeName s) {
  using S = SchemeName;
  static const std::map<SchemeName, FPatPtr> table = [] {
    std::map<SchemeName, FPatPtr> m;
    const FPatPtr f0 = fmeta(0), f1 = fmeta(1), f2 = fmeta(2);
    const TPatPtr t0 = tmeta(0), t1 = tmeta(1);
    m[S::A1] = fimp(fimp(f0, f1), fimp(fimp(f1, f2), fimp(f0, f2)));
    m[S::A2] = fimp(fand(f0, f1), f0);
    m[S::A3] = fimp(fand(f0, f1), fand(f1, f0));
    m[S::A5a] = fimp(fimp(f0, fimp(f1, f2)), fimp(fand(f0, f1), f2));
    m[S::A5b] = fimp(fimp(fand(f0, f1), f2), fimp(f0, fimp(f1, f2)));
    m[S::A6] = fimp(fimp(fimp(f0, f1), f2), fimp(fimp(fimp(f1, f0), f2), f2));
    m[S::A7] = fimp(fbot(), f0);
    m[S::G4] = fimp(f0, fand(f0, f0));
    m[S::J] = fimp(fholds(t0, fimp(f0, f1)),
                   fimp(fholds(t1, f0), fholds(tapp(t0, t1), f1)));
    m[S::Plus1] = fimp(fholds(t0, f0), fholds(tsum(t0, t1), f0));
    m[S::Plus2] = fimp(fholds(t1, f0), fholds(tsum(t0, t1), f0));
    m[S::F] = fimp(fholds(t0, f0), f0);
    m[S::Bang] = fimp(fholds(t0, f0), fholds(tbang(t0), fholds(t0, f0)));
    m[S::Query] = fimp(fneg(fholds(t0, f0)), fholds(tquery(t0), fneg(fholds(t0, f0))));
    m[S::K] = fimp(fbox(fimp(f0, f1)), fimp(fbox(f0), fbox(f1)));
    m[S::Z] = fimp(fneg(fneg(fbox(f0))), fbox(fneg(fneg(f0))));
    m[S::T] = fimp(fbox(f0), f0);
    m[S::Four] = fimp(fbox(f0), fbox(fbox(f0)));
    m[S::NegIntro] = fimp(fneg(fbox(f0)), fbox(fneg(fbox(f0))));
    return m;
  }();
  return table.at(s);
}

bool match_term(const TPatPtr& pat, const Term& t, JBindings& b) {
  switch (pat->kind) {
    case TPat::Meta: {
      auto [it, inserted] = b.terms.emplace(pat->id, t);
      return inserted || it->second == t;
    }
    case TPat::Sum:
      return t.kind() == TermKind::Sum && match_term(pat->a, t.left(), b) &&
             match_term(pat->b, t.right(), b);
    case TPat::App:
      return t.kind() == TermKind::App && match_term(pat->a, t.left(), b) &&
             match_term(pat->b, t.right(), b);
    case TPat::Bang:
      return t.kind() == TermKind::Bang && match_term(pat->a, t.inner(), b);
    case TPat::Query:
      return t.kind() == TermKind::Query && match_term(pat->a, t.inner(), b);
  }
  return false;
}

bool match_j(const FPatPtr& pat, const JFormula& f, JBindings& b) {
  switch (pat->kind) {
    case FPat::Meta: {
      auto [it, inserted] = b.formulas.emplace(pat->id, f);
      return inserted || it->second == f;
    }
    case FPat::Bottom:
      return f.kind() == JKind::Bottom;
    case FPat::Implies:
      return f.kind() == JKind::Implies && match_j(pat->a, f.left(), b) &&
             match_j(pat->b, f.right(), b);
    case FPat::And:
      return f.kind() == JKind::And && match_j(pat->a, f.left(), b) &&
             match_j(pat->b, f.right(), b);
    case FPat::Holds:
      return f.kind() == JKind::Holds && match_term(pat->term, f.term(), b) &&
             match_j(pat->a, f.left(), b);
    case FPat::Box:
      return false; // modal-only scheme against a justification formula
  }
  return false;
}

bool match_m(const FPatPtr& pat, const MFormula& f, MBindings& b) {
  switch (pat->kind) {
    case FPat::Meta: {
      auto [it, inserted] = b.formulas.emplace(pat->id, f);
      return inserted || it->second == f;
    }
    case FPat::Bottom:
      return f.kind() == MKind::Bottom;
    case FPat::Implies:
      return f.kind() == MKind::Implies && match_m(pat->a, f.left(), b) &&
             match_m(pat->b, f.right(), b);
    case FPat::And:
      return f.kind() == MKind::And && match_m(pat->a, f.left(), b) &&
             match_m(pat->b, f.right(), b);
    case FPat::Box:
      return f.kind() == MKind::Box && match_m(pat->a, f.left(), b);
    case FPat::Holds:
      return false;
  }
  return false;
}

} // namespace

std::optional<JBindings> match_scheme(SchemeName s, const JFormula& phi) {
  JBindings b;
  if (match_j(scheme_pattern(s), phi, b)) return b;
  return std::nullopt;
}

std::optional<MBindings> match_scheme(SchemeName s, const MFormula& phi) {
  MBindings b;
  if (match_m(scheme_pattern(s), phi, b)) return b;
  return std::nullopt;
}

bool is_axiom_instance(JCalc c, const JFormula& phi) {
  return matching_scheme(c, phi).has_value();
}

std::optional<SchemeName> matching_scheme(JCalc c, const JFormula& phi) {
  for (SchemeName s : schemes_of(c)) {
    if (match_scheme(s, phi)) return s;
  }
  return std::nullopt;
}

bool is_axiom_instance(MCalc c, const MFormula& phi) {
  for (SchemeName s : schemes_of(c)) {
    if (match_scheme(s, phi)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Constant specifications

ConstantSpec ConstantSpec::total(JCalc base) { return ConstantSpec{base}; }

std::optional<std::size_t> ConstantSpec::chain_length(const JFormula& phi) const {
  // Axiom instances are implications, so the maximal constant prefix is
  // unambiguous.
  std::size_t n = 0;
  JFormula cur = phi;
  while (cur.kind() == JKind::Holds && cur.term().kind() == TermKind::Constant) {
    ++n;
    cur = cur.left();
  }
  if (n == 0) return std::nullopt;
  if (!is_axiom_instance(base_, cur)) return std::nullopt;
  return n;
}

ConstantSpec::FiniteResult ConstantSpec::finite(JCalc base, std::vector<JFormula> members) {
  ConstantSpec probe{base};
  std::set<JFormula> set(members.begin(), members.end());
  for (const JFormula& m : members) {
    if (!probe.chain_length(m)) {
      return {std::nullopt,
              "not a constant-chain over an axiom instance: " + m.to_string()};
    }
    // Downward closure: dropping the outermost constant must stay inside,
    // down to the bare axiom instance.
    JFormula rest = m.left();
    if (probe.chain_length(rest) && set.find(rest) == set.end()) {
      return {std::nullopt, "downward closure violated: missing " + rest.to_string()};
    }
  }
  return {ConstantSpec{base, std::move(members)}, ""};
}

bool ConstantSpec::contains(const JFormula& phi) const {
  if (total_) return chain_length(phi).has_value();
  return std::find(members_.begin(), members_.end(), phi) != members_.end();
}

std::optional<unsigned> ConstantSpec::constant_for_axiom(const JFormula& axiom_instance) const {
  if (total_) {
    if (!is_axiom_instance(base_, axiom_instance)) return std::nullopt;
    return 1u;
  }
  std::optional<unsigned> best;
  for (const JFormula& m : members_) {
    if (m.kind() == JKind::Holds && m.term().kind() == TermKind::Constant &&
        m.left() == axiom_instance) {
      if (!best || m.term().index() < *best) best = m.term().index();
    }
  }
  return best;
}

std::optional<unsigned> ConstantSpec::chain_constant(const JFormula& member) const {
  if (total_) {
    auto n = chain_length(member);
    if (!n) return std::nullopt;
    return static_cast<unsigned>(*n + 1);
  }
  std::optional<unsigned> best;
  for (const JFormula& m : members_) {
    if (m.kind() == JKind::Holds && m.term().kind() == TermKind::Constant &&
        m.left() == member) {
      if (!best || m.term().index() < *best) best = m.term().index();
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Proof checking

namespace {

std::vector<unsigned> merge_sets(const std::vector<unsigned>& a,
                                 const std::vector<unsigned>& b) {
  std::vector<unsigned> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ProofVerdict reject(std::size_t line0, std::string reason) {
  ProofVerdict v;
  v.ok = false;
  v.line = line0 + 1;
  v.reason = std::move(reason);
  return v;
}

} // namespace

ProofVerdict check_proof(const JProof& proof) {
  ProofVerdict v;
  if (proof.steps.empty()) return reject(0, "empty proof");
  const auto& schemes = schemes_of(proof.calculus);
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const JStep& st = proof.steps[i];
    switch (st.rule) {
      case StepRule::Assume: {
        if (st.assume_index == 0) return reject(i, "assumption index must be >= 1");
        auto [it, inserted] = v.j_assumptions.emplace(st.assume_index, st.formula);
        if (!inserted && !(it->second == st.formula))
          return reject(i, "assumption " + std::to_string(st.assume_index) +
                               " already introduced with a different formula");
        v.assumption_sets.push_back({st.assume_index});
        break;
      }
      case StepRule::Axiom: {
        if (std::find(schemes.begin(), schemes.end(), st.scheme) == schemes.end())
          return reject(i, "scheme " + to_string(st.scheme) + " not in calculus " +
                               to_string(proof.calculus));
        if (!match_scheme(st.scheme, st.formula))
          return reject(i, "formula is not an instance of scheme " + to_string(st.scheme));
        v.assumption_sets.push_back({});
        break;
      }
      case StepRule::MP: {
        if (st.premise_i >= i || st.premise_j >= i)
          return reject(i, "modus ponens premise refers to a later line");
        const JFormula& maj = proof.steps[st.premise_i].formula;
        const JFormula& min = proof.steps[st.premise_j].formula;
        if (maj.kind() != JKind::Implies || !(maj.left() == min) ||
            !(maj.right() == st.formula))
          return reject(i, "modus ponens premises do not fit");
        v.assumption_sets.push_back(
            merge_sets(v.assumption_sets[st.premise_i], v.assumption_sets[st.premise_j]));
        break;
      }
      case StepRule::CS: {
        if (!proof.cs.contains(st.formula))
          return reject(i, "formula is not in the constant specification");
        v.assumption_sets.push_back({});
        break;
      }
      case StepRule::NBox:
        return reject(i, "rule N[] is not available in justification calculi");
    }
  }
  v.ok = true;
  return v;
}

ProofVerdict check_proof(const MProof& proof) {
  ProofVerdict v;
  if (proof.steps.empty()) return reject(0, "empty proof");
  const auto& schemes = schemes_of(proof.calculus);
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const MStep& st = proof.steps[i];
    switch (st.rule) {
      case StepRule::Assume: {
        if (st.assume_index == 0) return reject(i, "assumption index must be >= 1");
        auto [it, inserted] = v.m_assumptions.emplace(st.assume_index, st.formula);
        if (!inserted && !(it->second == st.formula))
          return reject(i, "assumption " + std::to_string(st.assume_index) +
                               " already introduced with a different formula");
        v.assumption_sets.push_back({st.assume_index});
        break;
      }
      case StepRule::Axiom: {
        if (std::find(schemes.begin(), schemes.end(), st.scheme) == schemes.end())
          return reject(i, "scheme " + to_string(st.scheme) + " not in calculus " +
                               to_string(proof.calculus));
        if (!match_scheme(st.scheme, st.formula))
          return reject(i, "formula is not an instance of scheme " + to_string(st.scheme));
        v.assumption_sets.push_back({});
        break;
      }
      case StepRule::MP: {
        if (st.premise_i >= i || st.premise_j >= i)
          return reject(i, "modus ponens premise refers to a later line");
        const MFormula& maj = proof.steps[st.premise_i].formula;
        const MFormula& min = proof.steps[st.premise_j].formula;
        if (maj.kind() != MKind::Implies || !(maj.left() == min) ||
            !(maj.right() == st.formula))
          return reject(i, "modus ponens premises do not fit");
        v.assumption_sets.push_back(
            merge_sets(v.assumption_sets[st.premise_i], v.assumption_sets[st.premise_j]));
        break;
      }
      case StepRule::CS:
        return reject(i, "rule CS is not available in modal calculi");
      case StepRule::NBox: {
        if (st.premise_i >= i) return reject(i, "N[] premise refers to a later line");
        if (!v.assumption_sets[st.premise_i].empty())
          return reject(i, "N[] may only be applied to pure theorems");
        if (!(st.formula == MFormula::box(proof.steps[st.premise_i].formula)))
          return reject(i, "N[] conclusion is not the boxed premise");
        v.assumption_sets.push_back({});
        break;
      }
    }
  }
  v.ok = true;
  return v;
}

// ---------------------------------------------------------------------------
// Lifting

LiftResult lift(const JProof& input, const std::vector<Term>& terms) {
  LiftResult out{Term::constant(1), JProof{input.calculus, input.cs, {}}, ""};
  const ProofVerdict verdict = check_proof(input);
  if (!verdict) {
    out.error = "input proof does not check (line " + std::to_string(verdict.line) +
                ": " + verdict.reason + ")";
    return out;
  }
  for (const auto& [idx, formula] : verdict.j_assumptions) {
    if (idx > terms.size()) {
      out.error = "assumption index " + std::to_string(idx) +
                  " has no accompanying justification term";
      return out;
    }
  }

  JProof& proof = out.proof;
  std::vector<Term> lifted_term;
  std::vector<std::size_t> lifted_line;
  lifted_term.reserve(input.steps.size());
  lifted_line.reserve(input.steps.size());

  for (std::size_t i = 0; i < input.steps.size(); ++i) {
    const JStep& st = input.steps[i];
    switch (st.rule) {
      case StepRule::Assume: {
        const Term& t = terms[st.assume_index - 1];
        proof.steps.push_back(
            {JFormula::holds(t, st.formula), StepRule::Assume, st.assume_index});
        lifted_term.push_back(t);
        lifted_line.push_back(proof.steps.size() - 1);
        break;
      }
      case StepRule::Axiom: {
        auto c = input.cs.constant_for_axiom(st.formula);
        if (!c) {
          out.error = "constant specification provides no constant for axiom instance " +
                      st.formula.to_string();
          return out;
        }
        const Term t = Term::constant(*c);
        proof.steps.push_back({JFormula::holds(t, st.formula), StepRule::CS});
        lifted_term.push_back(t);
        lifted_line.push_back(proof.steps.size() - 1);
        break;
      }
      case StepRule::CS: {
        auto c = input.cs.chain_constant(st.formula);
        if (!c) {
          out.error = "constant specification provides no chain constant for " +
                      st.formula.to_string();
          return out;
        }
        const Term t = Term::constant(*c);
        proof.steps.push_back({JFormula::holds(t, st.formula), StepRule::CS});
        lifted_term.push_back(t);
        lifted_line.push_back(proof.steps.size() - 1);
        break;
      }
      case StepRule::MP: {
        const Term& u = lifted_term[st.premise_i];
        const Term& w = lifted_term[st.premise_j];
        const JFormula& minor = input.steps[st.premise_j].formula;
        const Term applied = Term::app(u, w);
        const JFormula u_maj = JFormula::holds(u, input.steps[st.premise_i].formula);
        const JFormula w_min = JFormula::holds(w, minor);
        const JFormula goal = JFormula::holds(applied, st.formula);
        // (J) u:(minor -> phi) -> (w:minor -> [u*w]:phi), then two MPs.
        proof.steps.push_back(
            {JFormula::implies(u_maj, JFormula::implies(w_min, goal)), StepRule::Axiom, 0,
             SchemeName::J});
        const std::size_t j_line = proof.steps.size() - 1;
        proof.steps.push_back({JFormula::implies(w_min, goal), StepRule::MP, 0,
                               SchemeName::A1, j_line, lifted_line[st.premise_i]});
        const std::size_t mid_line = proof.steps.size() - 1;
        proof.steps.push_back(
            {goal, StepRule::MP, 0, SchemeName::A1, mid_line, lifted_line[st.premise_j]});
        lifted_term.push_back(applied);
        lifted_line.push_back(proof.steps.size() - 1);
        break;
      }
      case StepRule::NBox:
        out.error = "unexpected N[] line in a justification proof";
        return out;
    }
  }
  out.term = lifted_term.back();
  return out;
}

LiftResult internalize(const JProof& input) {
  for (const JStep& st : input.steps) {
    if (st.rule == StepRule::Assume) {
      LiftResult out{Term::constant(1), JProof{input.calculus, input.cs, {}}, ""};
      out.error = "internalization requires a proof without assumptions";
      return out;
    }
  }
  return lift(input, {});
}

// ---------------------------------------------------------------------------
// Identity template and double negation introduction

namespace {

template <typename Proof, typename Formula>
std::size_t append_identity(Proof& proof, const Formula& theta) {
  const Formula theta_and = Formula::conj(theta, theta);
  // G4, A2, A1, MP, MP concluding theta -> theta.
  proof.steps.push_back({Formula::implies(theta, theta_and), StepRule::Axiom, 0,
                         SchemeName::G4});
  const std::size_t g4 = proof.steps.size() - 1;
  proof.steps.push_back({Formula::implies(theta_and, theta), StepRule::Axiom, 0,
                         SchemeName::A2});
  const std::size_t a2 = proof.steps.size() - 1;
  const Formula identity = Formula::implies(theta, theta);
  proof.steps.push_back(
      {Formula::implies(Formula::implies(theta, theta_and),
                        Formula::implies(Formula::implies(theta_and, theta), identity)),
       StepRule::Axiom, 0, SchemeName::A1});
  const std::size_t a1 = proof.steps.size() - 1;
  proof.steps.push_back(
      {Formula::implies(Formula::implies(theta_and, theta), identity), StepRule::MP, 0,
       SchemeName::A1, a1, g4});
  const std::size_t mid = proof.steps.size() - 1;
  proof.steps.push_back({identity, StepRule::MP, 0, SchemeName::A1, mid, a2});
  return proof.steps.size() - 1;
}

} // namespace

std::size_t append_identity_derivation(MProof& proof, const MFormula& theta) {
  return append_identity(proof, theta);
}

std::size_t append_identity_derivation(JProof& proof, const JFormula& theta) {
  return append_identity(proof, theta);
}

JProof derive_double_negation_intro(JCalc calculus, const ConstantSpec& cs,
                                    const JFormula& phi) {
  JProof proof{calculus, cs, {}};
  const JFormula bot = JFormula::bottom();
  const JFormula not_phi = JFormula::negation(phi);
  const JFormula not_not_phi = JFormula::negation(not_phi);

  // not_phi -> not_phi, spelled not_phi -> (phi -> bot).
  const std::size_t id = append_identity_derivation(proof, not_phi);

  // A5a at (not_phi, phi, bot): (not_phi -> (phi -> bot)) -> ((not_phi & phi) -> bot)
  const JFormula np_and_p = JFormula::conj(not_phi, phi);
  const JFormula np_p_bot = JFormula::implies(np_and_p, bot);
  proof.steps.push_back({JFormula::implies(JFormula::implies(not_phi, not_phi), np_p_bot),
                         StepRule::Axiom, 0, SchemeName::A5a});
  const std::size_t a5a = proof.steps.size() - 1;
  proof.steps.push_back({np_p_bot, StepRule::MP, 0, SchemeName::A1, a5a, id});
  const std::size_t swapped = proof.steps.size() - 1;

  // A3 at (phi, not_phi): (phi & not_phi) -> (not_phi & phi)
  const JFormula p_and_np = JFormula::conj(phi, not_phi);
  const JFormula commute = JFormula::implies(p_and_np, np_and_p);
  proof.steps.push_back({commute, StepRule::Axiom, 0, SchemeName::A3});
  const std::size_t a3 = proof.steps.size() - 1;

  // A1 composes the two into (phi & not_phi) -> bot.
  const JFormula p_np_bot = JFormula::implies(p_and_np, bot);
  proof.steps.push_back(
      {JFormula::implies(commute, JFormula::implies(np_p_bot, p_np_bot)), StepRule::Axiom,
       0, SchemeName::A1});
  const std::size_t a1 = proof.steps.size() - 1;
  proof.steps.push_back({JFormula::implies(np_p_bot, p_np_bot), StepRule::MP, 0,
                         SchemeName::A1, a1, a3});
  const std::size_t mid = proof.steps.size() - 1;
  proof.steps.push_back({p_np_bot, StepRule::MP, 0, SchemeName::A1, mid, swapped});
  const std::size_t conj_bot = proof.steps.size() - 1;

  // A5b at (phi, not_phi, bot): ((phi & not_phi) -> bot) -> (phi -> not_not_phi)
  proof.steps.push_back(
      {JFormula::implies(p_np_bot, JFormula::implies(phi, not_not_phi)), StepRule::Axiom,
       0, SchemeName::A5b});
  const std::size_t a5b = proof.steps.size() - 1;
  proof.steps.push_back({JFormula::implies(phi, not_not_phi), StepRule::MP, 0,
                         SchemeName::A1, a5b, conj_bot});
  return proof;
}

// ---------------------------------------------------------------------------
// Proof projection

ProjectionResult project_proof(const JProof& input) {
  const auto mc = modal_counterpart(input.calculus);
  if (!mc) {
    return {std::nullopt,
            to_string(input.calculus) + " has no corresponding modal calculus"};
  }
  const ProofVerdict verdict = check_proof(input);
  if (!verdict) {
    return {std::nullopt, "input proof does not check (line " +
                              std::to_string(verdict.line) + ": " + verdict.reason + ")"};
  }

  MProof out{*mc, {}};
  std::vector<std::size_t> line_map(input.steps.size());

  auto project_axiom_line = [&](SchemeName s, const MFormula& projected) -> std::size_t {
    switch (s) {
      case SchemeName::J:
        out.steps.push_back({projected, StepRule::Axiom, 0, SchemeName::K});
        break;
      case SchemeName::F:
        out.steps.push_back({projected, StepRule::Axiom, 0, SchemeName::T});
        break;
      case SchemeName::Bang:
        out.steps.push_back({projected, StepRule::Axiom, 0, SchemeName::Four});
        break;
      case SchemeName::Query:
        out.steps.push_back({projected, StepRule::Axiom, 0, SchemeName::NegIntro});
        break;
      case SchemeName::Plus1:
      case SchemeName::Plus2:
        // []phi -> []phi: a propositional instance derived inline.
        return append_identity_derivation(out, projected.left());
      default:
        out.steps.push_back({projected, StepRule::Axiom, 0, s});
        break;
    }
    return out.steps.size() - 1;
  };

  for (std::size_t i = 0; i < input.steps.size(); ++i) {
    const JStep& st = input.steps[i];
    const MFormula projected = forgetful_projection(st.formula);
    switch (st.rule) {
      case StepRule::Assume:
        out.steps.push_back({projected, StepRule::Assume, st.assume_index});
        line_map[i] = out.steps.size() - 1;
        break;
      case StepRule::Axiom:
        line_map[i] = project_axiom_line(st.scheme, projected);
        break;
      case StepRule::MP:
        out.steps.push_back({projected, StepRule::MP, 0, SchemeName::A1,
                             line_map[st.premise_i], line_map[st.premise_j]});
        line_map[i] = out.steps.size() - 1;
        break;
      case StepRule::CS: {
        // c_{i_n}:...:c_{i_1}:chi projects to []^n chi°; derive chi° and box it n times.
        std::size_t chain = 0;
        JFormula core = st.formula;
        while (core.kind() == JKind::Holds && core.term().kind() == TermKind::Constant) {
          ++chain;
          core = core.left();
        }
        const auto scheme = matching_scheme(input.calculus, core);
        if (!scheme) {
          return {std::nullopt, "constant specification member core " + core.to_string() +
                                    " is not an axiom instance"};
        }
        MFormula cur = forgetful_projection(core);
        std::size_t line = project_axiom_line(*scheme, cur);
        for (std::size_t k = 0; k < chain; ++k) {
          cur = MFormula::box(cur);
          out.steps.push_back({cur, StepRule::NBox, 0, SchemeName::A1, line});
          line = out.steps.size() - 1;
        }
        line_map[i] = line;
        break;
      }
      case StepRule::NBox:
        return {std::nullopt, "unexpected N[] line in a justification proof"};
    }
  }
  return {std::move(out), ""};
}

} // namespace gjl
