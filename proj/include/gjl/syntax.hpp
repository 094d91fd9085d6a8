#ifndef GJL_SYNTAX_HPP
#define GJL_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gjl {

// Immutable structurally-shared trees. Indices for constants, variables and
// atoms are >= 1 and render as "c1", "x1", "p1".

enum class TermKind { Constant, Variable, Sum, App, Bang, Query };

class Term {
public:
  static Term constant(unsigned index);
  static Term variable(unsigned index);
  static Term sum(Term left, Term right);
  static Term app(Term left, Term right);
  static Term bang(Term inner);
  static Term query(Term inner);

  TermKind kind() const { return n_->kind; }
  unsigned index() const { return n_->index; } // Constant/Variable only
  Term left() const { return Term{n_->left}; }
  Term right() const { return Term{n_->right}; }
  Term inner() const { return Term{n_->left}; } // Bang/Query

  bool is_variable() const { return kind() == TermKind::Variable; }

  std::strong_ordering operator<=>(const Term& rhs) const;
  bool operator==(const Term& rhs) const { return (*this <=> rhs) == 0; }

  std::string to_string() const;
  std::size_t depth() const;
  unsigned max_symbol_index() const;

private:
  struct Node {
    TermKind kind;
    unsigned index;
    std::shared_ptr<const Node> left, right;
  };
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

enum class JKind { Bottom, Atom, Implies, And, Holds };

class JFormula {
public:
  static JFormula bottom();
  static JFormula atom(unsigned index);
  static JFormula implies(JFormula antecedent, JFormula consequent);
  static JFormula conj(JFormula left, JFormula right);
  static JFormula holds(Term term, JFormula body);
  // ~phi abbreviates phi -> bot; never a distinct node.
  static JFormula negation(JFormula phi);
  static JFormula top(); // bot -> bot

  JKind kind() const { return n_->kind; }
  unsigned index() const { return n_->index; }
  JFormula left() const { return JFormula{n_->left}; }  // antecedent / left / body
  JFormula right() const { return JFormula{n_->right}; }
  const Term& term() const { return *n_->term; }

  bool is_negation() const {
    return kind() == JKind::Implies && right().kind() == JKind::Bottom;
  }

  std::strong_ordering operator<=>(const JFormula& rhs) const;
  bool operator==(const JFormula& rhs) const { return (*this <=> rhs) == 0; }

  std::string to_string() const;
  std::size_t depth() const;
  unsigned max_atom_index() const;
  unsigned max_term_symbol_index() const;
  std::size_t count_holds() const;
  /// Every (t, body) of a Holds occurrence, outermost first, including nested ones.
  void collect_holds(std::vector<std::pair<Term, JFormula>>& out) const;

private:
  struct Node {
    JKind kind;
    unsigned index;
    std::optional<Term> term;
    std::shared_ptr<const Node> left, right;
  };
  explicit JFormula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

enum class MKind { Bottom, Atom, Implies, And, Box };

class MFormula {
public:
  static MFormula bottom();
  static MFormula atom(unsigned index);
  static MFormula implies(MFormula antecedent, MFormula consequent);
  static MFormula conj(MFormula left, MFormula right);
  static MFormula box(MFormula body);
  static MFormula negation(MFormula phi);
  static MFormula top();

  MKind kind() const { return n_->kind; }
  unsigned index() const { return n_->index; }
  MFormula left() const { return MFormula{n_->left}; }
  MFormula right() const { return MFormula{n_->right}; }

  bool is_negation() const {
    return kind() == MKind::Implies && right().kind() == MKind::Bottom;
  }

  std::strong_ordering operator<=>(const MFormula& rhs) const;
  bool operator==(const MFormula& rhs) const { return (*this <=> rhs) == 0; }

  std::string to_string() const;
  std::size_t depth() const;
  std::size_t count_boxes() const;

private:
  struct Node {
    MKind kind;
    unsigned index;
    std::shared_ptr<const Node> left, right;
  };
  explicit MFormula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Child steps from the root: 0 = antecedent/left/body, 1 = consequent/right.
using OccurrencePath = std::vector<unsigned>;

std::string path_to_string(const OccurrencePath& path);

enum class Polarity { Positive, Negative };

struct BoxOccurrence {
  OccurrencePath path;
  Polarity polarity;
};

/// Replaces every t:psi with []psi, recursively. Atoms, bot, /\ and -> are kept.
MFormula forgetful_projection(const JFormula& phi);

/// One entry per Box, in left-to-right traversal order. Polarity flips on each
/// descent into an implication antecedent.
std::vector<BoxOccurrence> modal_polarities(const MFormula& phi);

struct RealizationVerdict {
  bool ok = false;
  std::string reason;
  OccurrencePath path;
};

/// Accepts iff forgetful_projection(phi) == psi; with `normal` set, every
/// negative Box occurrence must be realized by a justification variable.
RealizationVerdict check_realization(const JFormula& phi, const MFormula& psi, bool normal);

} // namespace gjl

#endif
