// gjl: evaluation, proof checking, internalization, projection and
// countermodel demonstrations for Goedel justification and modal logics.

#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "gjl/demos.hpp"
#include "gjl/generate.hpp"
#include "gjl/io.hpp"
#include "gjl/models.hpp"
#include "gjl/parse.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;
constexpr int kUndecided = 3;

struct CliError {
  int code;
  std::string message;
};

gjl::Model model_from_flags(const std::string& x_text, const std::string& logic_name,
                            const std::string& oracle_flag) {
  const auto x = gjl::TruthValue::parse(x_text);
  if (!x) throw CliError{kUsage, "--x must be a rational in [0,1]"};
  const auto logic = gjl::parse_xlogic(logic_name);
  if (!logic) throw CliError{kUsage, "unknown logic " + logic_name};
  gjl::OraclePtr oracle = oracle_flag.empty()
                              ? gjl::TheoremhoodOracle::with_standard_stock(*logic)
                              : gjl::read_oracle_file(oracle_flag);
  return gjl::make_x_rooted(*x, *logic, std::move(oracle));
}

gjl::Model load_model(const std::string& path, const std::string& oracle_flag) {
  gjl::ParsedModel parsed = gjl::read_model_file(path);
  gjl::OraclePtr oracle;
  std::optional<gjl::XLogic> logic;
  if (const auto* xr = std::get_if<gjl::XRootedEvidence>(&parsed.model.evidence))
    logic = xr->logic;
  if (const auto* cs = std::get_if<gjl::CrispShiftedEvidence>(&parsed.model.evidence))
    logic = cs->logic;
  if (logic) {
    std::string orc = oracle_flag.empty() ? parsed.oracle_path.value_or("") : oracle_flag;
    oracle = orc.empty() ? gjl::TheoremhoodOracle::with_standard_stock(*logic)
                         : gjl::read_oracle_file(orc);
    if (oracle->logic() != *logic) throw CliError{kUsage, "oracle logic does not match model"};
    if (auto* xr = std::get_if<gjl::XRootedEvidence>(&parsed.model.evidence))
      xr->oracle = oracle;
    if (auto* cs = std::get_if<gjl::CrispShiftedEvidence>(&parsed.model.evidence))
      cs->oracle = oracle;
  }
  return parsed.model;
}

std::string read_formula_arg(const std::string& inline_text, const std::string& file) {
  if (!inline_text.empty()) return inline_text;
  if (!file.empty()) return gjl::read_file(file);
  throw CliError{kUsage, "a formula is required (--formula or --formula-file)"};
}

gjl::JProof load_jproof(const std::string& path) {
  gjl::AnyProof proof = gjl::read_proof_file(path);
  if (auto* jp = std::get_if<gjl::JProof>(&proof)) return std::move(*jp);
  throw CliError{kUsage, "expected a justification proof"};
}

std::vector<gjl::Term> parse_term_list(const std::string& text) {
  std::vector<gjl::Term> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t comma = text.find(',', begin);
    if (comma == std::string::npos) comma = text.size();
    const std::string piece = text.substr(begin, comma - begin);
    if (!piece.empty()) out.push_back(gjl::parse_term(piece));
    begin = comma + 1;
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goedel justification logic toolkit"};
  app.require_subcommand(1);

  std::string formula, formula_file, modal_formula, model_path, proof_path, cs_path;
  std::string class_name, x_text = "1/2", logic_name = "GJ45_TCS", format = "text";
  std::string oracle_path, terms_text, demo_name, direction = "to_one", pair_name = "GJ";
  std::string recheck_path, out_path;
  std::uint64_t seed = 1;
  std::size_t universe_size = 48;
  std::size_t enum_term_depth = 1, enum_max = 0;
  bool normal = false;
  bool modal_lang = false;
  bool star_eval = false;
  std::string s_text;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "seed for sampled universes");
    cmd->add_option("--universe-size", universe_size, "sampling universe size");
    cmd->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));
  };

  auto* cmd_parse = app.add_subcommand("parse", "parse and reprint a formula");
  cmd_parse->add_option("--formula", formula);
  cmd_parse->add_option("--formula-file", formula_file);
  cmd_parse->add_flag("--modal", modal_lang, "parse in the modal language");

  // --model names a file; --x with --logic builds the x-rooted model directly.
  auto add_model_source = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_path);
    cmd->add_option("--x", x_text);
    cmd->add_option("--logic", logic_name)->check(CLI::IsMember({"GJ45_TCS", "GLP_TCS"}));
    cmd->add_option("--oracle", oracle_path);
  };

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula in a model");
  add_model_source(cmd_eval);
  cmd_eval->add_option("--formula", formula);
  cmd_eval->add_option("--formula-file", formula_file);

  auto* cmd_eval_star = app.add_subcommand("eval-star", "evaluate under |.|*");
  add_model_source(cmd_eval_star);
  cmd_eval_star->add_option("--formula", formula);
  cmd_eval_star->add_option("--formula-file", formula_file);

  auto* cmd_check_model = app.add_subcommand("check-model", "class membership check");
  add_model_source(cmd_check_model);
  cmd_check_model->add_option("--class", class_name)->required();
  cmd_check_model->add_option("--cs", cs_path, "also check respect of this finite specification");
  add_common(cmd_check_model);

  auto* cmd_check_proof = app.add_subcommand("check-proof", "check a Hilbert proof");
  cmd_check_proof->add_option("proof", proof_path)->required();

  auto* cmd_lift = app.add_subcommand("lift", "lifting: assumptions to justified assumptions");
  cmd_lift->add_option("--proof", proof_path)->required();
  cmd_lift->add_option("--terms", terms_text, "comma-separated terms for the assumptions");

  auto* cmd_internalize = app.add_subcommand("internalize", "internalize a theorem proof");
  cmd_internalize->add_option("--proof", proof_path)->required();

  auto* cmd_project = app.add_subcommand("project", "forgetful projection of a formula");
  cmd_project->add_option("--formula", formula);
  cmd_project->add_option("--formula-file", formula_file);

  auto* cmd_project_proof = app.add_subcommand("project-proof", "proof-level projection");
  cmd_project_proof->add_option("--proof", proof_path)->required();

  auto* cmd_check_real = app.add_subcommand("check-realization",
                                            "does the justification formula realize the modal one");
  cmd_check_real->add_option("--formula", formula)->required();
  cmd_check_real->add_option("--modal-formula", modal_formula)->required();
  cmd_check_real->add_flag("--normal", normal, "require variables on negative occurrences");

  auto* cmd_demo = app.add_subcommand("demo", "countermodel demonstrations and gap reports");
  cmd_demo->add_option("--name", demo_name,
                       "z-no-factivity | z-with-factivity | crisp | gap | recheck");
  cmd_demo->add_option("--x", x_text);
  cmd_demo->add_option("--t", terms_text, "term t (default x1)");
  cmd_demo->add_option("--s", s_text, "term s (default x2)");
  cmd_demo->add_option("--direction", direction)->check(CLI::IsMember({"to_zero", "to_one"}));
  cmd_demo->add_option("--pair", pair_name, "justification calculus of the gap pair");
  cmd_demo->add_option("--recheck", recheck_path, "structured report file to re-check");
  add_common(cmd_demo);

  auto* cmd_enum = app.add_subcommand("enumerate", "bounded realization enumeration");
  cmd_enum->add_option("--modal-formula", modal_formula)->required();
  cmd_enum->add_option("--term-depth", enum_term_depth);
  cmd_enum->add_option("--max", enum_max, "stop after this many realizations (0: all)");
  cmd_enum->add_flag("--normal", normal);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_parse->parsed()) {
      const std::string text = read_formula_arg(formula, formula_file);
      if (modal_lang) {
        std::cout << gjl::parse_mformula(text).to_string() << "\n";
      } else {
        std::cout << gjl::parse_jformula(text).to_string() << "\n";
      }
      return kOk;
    }

    const auto current_model = [&](const CLI::App* cmd) -> gjl::Model {
      if (!model_path.empty()) return load_model(model_path, oracle_path);
      if (cmd->count("--x") == 0)
        throw CliError{kUsage, "a model source is required: --model <file>, or --x "
                               "<rational> with --logic"};
      return model_from_flags(x_text, logic_name, oracle_path);
    };

    if (cmd_eval->parsed() || cmd_eval_star->parsed()) {
      star_eval = cmd_eval_star->parsed();
      const gjl::Model model = current_model(star_eval ? cmd_eval_star : cmd_eval);
      const gjl::JFormula phi = gjl::parse_jformula(read_formula_arg(formula, formula_file));
      const gjl::TruthValue v = star_eval ? gjl::eval_star(model, phi) : gjl::eval(model, phi);
      std::cout << v.to_string() << "\n";
      return kOk;
    }

    if (cmd_check_model->parsed()) {
      const auto cls = gjl::parse_model_class(class_name);
      if (!cls) throw CliError{kUsage, "unknown model class " + class_name};
      gjl::Model model = current_model(cmd_check_model);
      std::vector<gjl::EvidenceKey> universe;
      const std::vector<gjl::EvidenceKey>* universe_ptr = nullptr;
      gjl::OraclePtr oracle;
      if (auto* xr = std::get_if<gjl::XRootedEvidence>(&model.evidence)) oracle = xr->oracle;
      if (auto* cse = std::get_if<gjl::CrispShiftedEvidence>(&model.evidence))
        oracle = cse->oracle;
      if (oracle) {
        gjl::Rng rng(seed);
        gjl::UniverseBuild build =
            gjl::build_provability_universe(*oracle, rng, universe_size, {});
        if (!build) throw CliError{kUndecided, build.error};
        universe = std::move(build.pairs);
        universe_ptr = &universe;
      }
      const gjl::ClassVerdict verdict = gjl::check_model_class(model, *cls, universe_ptr);
      if (!verdict.error.empty()) throw CliError{kUsage, verdict.error};
      if (verdict.ok) {
        std::cout << "accept: " << gjl::to_string(*cls) << " ("
                  << verdict.checked_instances << " instances"
                  << (verdict.sampled ? ", sampled" : ", exact") << ")\n";
      } else {
        std::cout << "reject: " << verdict.violation->to_string() << "\n";
      }
      if (!cs_path.empty()) {
        const gjl::ConstantSpec cs = gjl::read_cs_file(cs_path);
        const gjl::CSRespectVerdict r = gjl::check_cs_respect(model, cs, {});
        std::cout << (r.ok ? "accept" : "reject") << ": constant specification respect\n";
        if (!r.ok) return kRejected;
      }
      return verdict.ok ? kOk : kRejected;
    }

    if (cmd_check_proof->parsed()) {
      const gjl::AnyProof proof = gjl::read_proof_file(proof_path);
      const gjl::ProofVerdict verdict = std::holds_alternative<gjl::JProof>(proof)
                                            ? gjl::check_proof(std::get<gjl::JProof>(proof))
                                            : gjl::check_proof(std::get<gjl::MProof>(proof));
      if (verdict.ok) {
        std::cout << "accept\n";
        return kOk;
      }
      std::cout << "reject at line " << verdict.line << ": " << verdict.reason << "\n";
      return kRejected;
    }

    if (cmd_lift->parsed() || cmd_internalize->parsed()) {
      const gjl::JProof input = load_jproof(proof_path);
      const gjl::LiftResult result = cmd_internalize->parsed()
                                         ? gjl::internalize(input)
                                         : gjl::lift(input, parse_term_list(terms_text));
      if (!result) throw CliError{kRejected, result.error};
      std::cout << "term: " << result.term.to_string() << "\n";
      std::cout << gjl::write_proof_text(result.proof);
      return kOk;
    }

    if (cmd_project->parsed()) {
      const gjl::JFormula phi = gjl::parse_jformula(read_formula_arg(formula, formula_file));
      std::cout << gjl::forgetful_projection(phi).to_string() << "\n";
      return kOk;
    }

    if (cmd_project_proof->parsed()) {
      const gjl::ProjectionResult result = gjl::project_proof(load_jproof(proof_path));
      if (!result) throw CliError{kRejected, result.error};
      std::cout << gjl::write_proof_text(*result.proof);
      return kOk;
    }

    if (cmd_check_real->parsed()) {
      const gjl::JFormula phi = gjl::parse_jformula(formula);
      const gjl::MFormula psi = gjl::parse_mformula(modal_formula);
      const gjl::RealizationVerdict verdict = gjl::check_realization(phi, psi, normal);
      std::cout << (verdict.ok ? "accept" : "reject: " + verdict.reason) << "\n";
      return verdict.ok ? kOk : kRejected;
    }

    if (cmd_demo->parsed()) {
      gjl::DemoOptions opt;
      opt.seed = seed;
      opt.universe_size = universe_size;
      if (!recheck_path.empty() || demo_name == "recheck") {
        if (recheck_path.empty()) throw CliError{kUsage, "--recheck <report.json> required"};
        const gjl::RecheckResult r = gjl::recheck_structured_report(gjl::read_file(recheck_path));
        for (const std::string& line : r.checks) std::cout << line << "\n";
        std::cout << (r.ok ? "re-check passed" : "re-check FAILED") << "\n";
        return r.ok ? kOk : kRejected;
      }
      const auto x = gjl::TruthValue::parse(x_text);
      if (!x) throw CliError{kUsage, "--x must be a rational in [0,1]"};
      const gjl::Term t = terms_text.empty() ? gjl::Term::variable(1)
                                             : gjl::parse_term(terms_text);
      const gjl::Term s = s_text.empty() ? gjl::Term::variable(2)
                                         : gjl::parse_term(s_text);
      if (demo_name == "z-no-factivity") {
        const gjl::Demonstration d = gjl::demo_z_failure_no_factivity(*x, t, s, 1, opt);
        std::cout << (format == "structured" ? d.to_structured() : d.to_text());
        return kOk;
      }
      if (demo_name == "z-with-factivity") {
        const gjl::Demonstration d = gjl::demo_z_failure_with_factivity(*x, t, s, 1, opt);
        std::cout << (format == "structured" ? d.to_structured() : d.to_text());
        return kOk;
      }
      if (demo_name == "crisp") {
        const gjl::Demonstration d = gjl::demo_crisp_recovery(
            direction == "to_one" ? gjl::CrispDirection::ToOne : gjl::CrispDirection::ToZero,
            opt);
        std::cout << (format == "structured" ? d.to_structured() : d.to_text());
        return kOk;
      }
      if (demo_name == "gap") {
        const auto jc = gjl::parse_jcalc(pair_name);
        if (!jc) throw CliError{kUsage, "unknown justification calculus " + pair_name};
        const gjl::GapReport report = gjl::demo_theorem_gap(*jc, opt);
        std::cout << (format == "structured" ? report.to_structured() : report.to_text());
        return kOk;
      }
      throw CliError{kUsage, "unknown demo '" + demo_name + "'"};
    }

    if (cmd_enum->parsed()) {
      const gjl::MFormula psi = gjl::parse_mformula(modal_formula);
      // Decorate every Box with every term of bounded depth over c1, x1, x2;
      // each candidate is then validated through the realization check.
      std::vector<gjl::Term> pool;
      const std::vector<gjl::Term> leaves = {gjl::Term::constant(1), gjl::Term::variable(1),
                                             gjl::Term::variable(2)};
      pool = leaves;
      for (std::size_t d = 1; d < enum_term_depth; ++d) {
        std::vector<gjl::Term> next = pool;
        for (const gjl::Term& a : pool) {
          next.push_back(gjl::Term::bang(a));
          for (const gjl::Term& b : leaves) {
            next.push_back(gjl::Term::sum(a, b));
            next.push_back(gjl::Term::app(a, b));
          }
        }
        pool = std::move(next);
      }
      const std::size_t boxes = psi.count_boxes();
      std::size_t emitted = 0;
      std::vector<std::size_t> pick(boxes, 0);
      const auto realize =
          [&](const gjl::MFormula& f, auto&& self, std::size_t& next_box) -> gjl::JFormula {
        switch (f.kind()) {
          case gjl::MKind::Bottom:
            return gjl::JFormula::bottom();
          case gjl::MKind::Atom:
            return gjl::JFormula::atom(f.index());
          case gjl::MKind::Implies:
            return gjl::JFormula::implies(self(f.left(), self, next_box),
                                          self(f.right(), self, next_box));
          case gjl::MKind::And:
            return gjl::JFormula::conj(self(f.left(), self, next_box),
                                       self(f.right(), self, next_box));
          case gjl::MKind::Box: {
            const gjl::Term& term = pool[pick[next_box]];
            ++next_box;
            return gjl::JFormula::holds(term, self(f.left(), self, next_box));
          }
        }
        return gjl::JFormula::bottom();
      };
      bool done = boxes > 64; // refuse absurd widths
      while (!done) {
        std::size_t next_box = 0;
        const gjl::JFormula candidate = realize(psi, realize, next_box);
        if (gjl::check_realization(candidate, psi, normal).ok) {
          std::cout << candidate.to_string() << "\n";
          if (++emitted == enum_max && enum_max != 0) break;
        }
        // advance the odometer
        std::size_t i = 0;
        for (; i < boxes; ++i) {
          if (++pick[i] < pool.size()) break;
          pick[i] = 0;
        }
        done = i == boxes;
      }
      std::cout << "# " << emitted << " realization(s)\n";
      return kOk;
    }

    throw CliError{kUsage, "no subcommand"};
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const gjl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gjl::UndecidedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
