#include "gjl/syntax.hpp"

#include <algorithm>
#include <stdexcept>

namespace gjl {

namespace {

unsigned checked_index(unsigned index) {
  if (index == 0) throw std::invalid_argument("symbol indices start at 1");
  return index;
}

} // namespace

// ---------------------------------------------------------------------------
// Term

Term Term::constant(unsigned index) {
  return Term{
      std::make_shared<Node>(Node{TermKind::Constant, checked_index(index), nullptr, nullptr})};
}
Term Term::variable(unsigned index) {
  return Term{
      std::make_shared<Node>(Node{TermKind::Variable, checked_index(index), nullptr, nullptr})};
}
Term Term::sum(Term left, Term right) {
  return Term{std::make_shared<Node>(Node{TermKind::Sum, 0, left.n_, right.n_})};
}
Term Term::app(Term left, Term right) {
  return Term{std::make_shared<Node>(Node{TermKind::App, 0, left.n_, right.n_})};
}
Term Term::bang(Term inner) {
  return Term{std::make_shared<Node>(Node{TermKind::Bang, 0, inner.n_, nullptr})};
}
Term Term::query(Term inner) {
  return Term{std::make_shared<Node>(Node{TermKind::Query, 0, inner.n_, nullptr})};
}

std::strong_ordering Term::operator<=>(const Term& rhs) const {
  if (n_ == rhs.n_) return std::strong_ordering::equal;
  if (auto c = n_->kind <=> rhs.n_->kind; c != 0) return c;
  switch (n_->kind) {
    case TermKind::Constant:
    case TermKind::Variable:
      return n_->index <=> rhs.n_->index;
    case TermKind::Bang:
    case TermKind::Query:
      return inner() <=> rhs.inner();
    case TermKind::Sum:
    case TermKind::App:
      if (auto c = left() <=> rhs.left(); c != 0) return c;
      return right() <=> rhs.right();
  }
  return std::strong_ordering::equal;
}

namespace {

// Term precedence: sum 1, app 2, unary 3, leaves 4.
void print_term(const Term& t, int min_prec, std::string& out) {
  switch (t.kind()) {
    case TermKind::Constant:
      out += "c" + std::to_string(t.index());
      return;
    case TermKind::Variable:
      out += "x" + std::to_string(t.index());
      return;
    case TermKind::Sum: {
      const bool paren = min_prec > 1;
      if (paren) out += "(";
      print_term(t.left(), 1, out);
      out += " + ";
      print_term(t.right(), 2, out);
      if (paren) out += ")";
      return;
    }
    case TermKind::App: {
      const bool paren = min_prec > 2;
      if (paren) out += "(";
      print_term(t.left(), 2, out);
      out += " * ";
      print_term(t.right(), 3, out);
      if (paren) out += ")";
      return;
    }
    case TermKind::Bang:
      out += "!";
      print_term(t.inner(), 3, out);
      return;
    case TermKind::Query:
      out += "?";
      print_term(t.inner(), 3, out);
      return;
  }
}

} // namespace

std::string Term::to_string() const {
  std::string out;
  print_term(*this, 0, out);
  return out;
}

std::size_t Term::depth() const {
  switch (kind()) {
    case TermKind::Constant:
    case TermKind::Variable:
      return 1;
    case TermKind::Bang:
    case TermKind::Query:
      return 1 + inner().depth();
    case TermKind::Sum:
    case TermKind::App:
      return 1 + std::max(left().depth(), right().depth());
  }
  return 1;
}

unsigned Term::max_symbol_index() const {
  switch (kind()) {
    case TermKind::Constant:
    case TermKind::Variable:
      return index();
    case TermKind::Bang:
    case TermKind::Query:
      return inner().max_symbol_index();
    case TermKind::Sum:
    case TermKind::App:
      return std::max(left().max_symbol_index(), right().max_symbol_index());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// JFormula

JFormula JFormula::bottom() {
  return JFormula{std::make_shared<Node>(Node{JKind::Bottom, 0, std::nullopt, nullptr, nullptr})};
}
JFormula JFormula::atom(unsigned index) {
  return JFormula{std::make_shared<Node>(
      Node{JKind::Atom, checked_index(index), std::nullopt, nullptr, nullptr})};
}
JFormula JFormula::implies(JFormula a, JFormula b) {
  return JFormula{std::make_shared<Node>(Node{JKind::Implies, 0, std::nullopt, a.n_, b.n_})};
}
JFormula JFormula::conj(JFormula a, JFormula b) {
  return JFormula{std::make_shared<Node>(Node{JKind::And, 0, std::nullopt, a.n_, b.n_})};
}
JFormula JFormula::holds(Term term, JFormula body) {
  return JFormula{
      std::make_shared<Node>(Node{JKind::Holds, 0, std::move(term), body.n_, nullptr})};
}
JFormula JFormula::negation(JFormula phi) { return implies(std::move(phi), bottom()); }
JFormula JFormula::top() { return implies(bottom(), bottom()); }

std::strong_ordering JFormula::operator<=>(const JFormula& rhs) const {
  if (n_ == rhs.n_) return std::strong_ordering::equal;
  if (auto c = n_->kind <=> rhs.n_->kind; c != 0) return c;
  switch (n_->kind) {
    case JKind::Bottom:
      return std::strong_ordering::equal;
    case JKind::Atom:
      return n_->index <=> rhs.n_->index;
    case JKind::Implies:
    case JKind::And:
      if (auto c = left() <=> rhs.left(); c != 0) return c;
      return right() <=> rhs.right();
    case JKind::Holds:
      if (auto c = term() <=> rhs.term(); c != 0) return c;
      return left() <=> rhs.left();
  }
  return std::strong_ordering::equal;
}

namespace {

// Formula precedence: -> 1 (right assoc), & 2 (left assoc), unary 3, leaves 4.
void print_jformula(const JFormula& f, int min_prec, std::string& out) {
  switch (f.kind()) {
    case JKind::Bottom:
      out += "bot";
      return;
    case JKind::Atom:
      out += "p" + std::to_string(f.index());
      return;
    case JKind::Implies: {
      if (f.is_negation()) {
        out += "~";
        print_jformula(f.left(), 3, out);
        return;
      }
      const bool paren = min_prec > 1;
      if (paren) out += "(";
      print_jformula(f.left(), 2, out);
      out += " -> ";
      print_jformula(f.right(), 1, out);
      if (paren) out += ")";
      return;
    }
    case JKind::And: {
      const bool paren = min_prec > 2;
      if (paren) out += "(";
      print_jformula(f.left(), 2, out);
      out += " & ";
      print_jformula(f.right(), 3, out);
      if (paren) out += ")";
      return;
    }
    case JKind::Holds:
      out += f.term().to_string();
      out += ":";
      print_jformula(f.left(), 3, out);
      return;
  }
}

} // namespace

std::string JFormula::to_string() const {
  std::string out;
  print_jformula(*this, 0, out);
  return out;
}

std::size_t JFormula::depth() const {
  switch (kind()) {
    case JKind::Bottom:
    case JKind::Atom:
      return 1;
    case JKind::Holds:
      return 1 + left().depth();
    case JKind::Implies:
    case JKind::And:
      return 1 + std::max(left().depth(), right().depth());
  }
  return 1;
}

unsigned JFormula::max_atom_index() const {
  switch (kind()) {
    case JKind::Bottom:
      return 0;
    case JKind::Atom:
      return index();
    case JKind::Holds:
      return left().max_atom_index();
    case JKind::Implies:
    case JKind::And:
      return std::max(left().max_atom_index(), right().max_atom_index());
  }
  return 0;
}

unsigned JFormula::max_term_symbol_index() const {
  switch (kind()) {
    case JKind::Bottom:
    case JKind::Atom:
      return 0;
    case JKind::Holds:
      return std::max(term().max_symbol_index(), left().max_term_symbol_index());
    case JKind::Implies:
    case JKind::And:
      return std::max(left().max_term_symbol_index(), right().max_term_symbol_index());
  }
  return 0;
}

std::size_t JFormula::count_holds() const {
  switch (kind()) {
    case JKind::Bottom:
    case JKind::Atom:
      return 0;
    case JKind::Holds:
      return 1 + left().count_holds();
    case JKind::Implies:
    case JKind::And:
      return left().count_holds() + right().count_holds();
  }
  return 0;
}

void JFormula::collect_holds(std::vector<std::pair<Term, JFormula>>& out) const {
  switch (kind()) {
    case JKind::Bottom:
    case JKind::Atom:
      return;
    case JKind::Holds:
      out.emplace_back(term(), left());
      left().collect_holds(out);
      return;
    case JKind::Implies:
    case JKind::And:
      left().collect_holds(out);
      right().collect_holds(out);
      return;
  }
}

// ---------------------------------------------------------------------------
// MFormula

MFormula MFormula::bottom() {
  return MFormula{std::make_shared<Node>(Node{MKind::Bottom, 0, nullptr, nullptr})};
}
MFormula MFormula::atom(unsigned index) {
  return MFormula{
      std::make_shared<Node>(Node{MKind::Atom, checked_index(index), nullptr, nullptr})};
}
MFormula MFormula::implies(MFormula a, MFormula b) {
  return MFormula{std::make_shared<Node>(Node{MKind::Implies, 0, a.n_, b.n_})};
}
MFormula MFormula::conj(MFormula a, MFormula b) {
  return MFormula{std::make_shared<Node>(Node{MKind::And, 0, a.n_, b.n_})};
}
MFormula MFormula::box(MFormula body) {
  return MFormula{std::make_shared<Node>(Node{MKind::Box, 0, body.n_, nullptr})};
}
MFormula MFormula::negation(MFormula phi) { return implies(std::move(phi), bottom()); }
MFormula MFormula::top() { return implies(bottom(), bottom()); }

std::strong_ordering MFormula::operator<=>(const MFormula& rhs) const {
  if (n_ == rhs.n_) return std::strong_ordering::equal;
  if (auto c = n_->kind <=> rhs.n_->kind; c != 0) return c;
  switch (n_->kind) {
    case MKind::Bottom:
      return std::strong_ordering::equal;
    case MKind::Atom:
      return n_->index <=> rhs.n_->index;
    case MKind::Implies:
    case MKind::And:
      if (auto c = left() <=> rhs.left(); c != 0) return c;
      return right() <=> rhs.right();
    case MKind::Box:
      return left() <=> rhs.left();
  }
  return std::strong_ordering::equal;
}

namespace {

void print_mformula(const MFormula& f, int min_prec, std::string& out) {
  switch (f.kind()) {
    case MKind::Bottom:
      out += "bot";
      return;
    case MKind::Atom:
      out += "p" + std::to_string(f.index());
      return;
    case MKind::Implies: {
      if (f.is_negation()) {
        out += "~";
        print_mformula(f.left(), 3, out);
        return;
      }
      const bool paren = min_prec > 1;
      if (paren) out += "(";
      print_mformula(f.left(), 2, out);
      out += " -> ";
      print_mformula(f.right(), 1, out);
      if (paren) out += ")";
      return;
    }
    case MKind::And: {
      const bool paren = min_prec > 2;
      if (paren) out += "(";
      print_mformula(f.left(), 2, out);
      out += " & ";
      print_mformula(f.right(), 3, out);
      if (paren) out += ")";
      return;
    }
    case MKind::Box:
      out += "[]";
      print_mformula(f.left(), 3, out);
      return;
  }
}

} // namespace

std::string MFormula::to_string() const {
  std::string out;
  print_mformula(*this, 0, out);
  return out;
}

std::size_t MFormula::depth() const {
  switch (kind()) {
    case MKind::Bottom:
    case MKind::Atom:
      return 1;
    case MKind::Box:
      return 1 + left().depth();
    case MKind::Implies:
    case MKind::And:
      return 1 + std::max(left().depth(), right().depth());
  }
  return 1;
}

std::size_t MFormula::count_boxes() const {
  switch (kind()) {
    case MKind::Bottom:
    case MKind::Atom:
      return 0;
    case MKind::Box:
      return 1 + left().count_boxes();
    case MKind::Implies:
    case MKind::And:
      return left().count_boxes() + right().count_boxes();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Projection, polarity, realization

std::string path_to_string(const OccurrencePath& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(path[i]);
  }
  return out + "]";
}

MFormula forgetful_projection(const JFormula& phi) {
  switch (phi.kind()) {
    case JKind::Bottom:
      return MFormula::bottom();
    case JKind::Atom:
      return MFormula::atom(phi.index());
    case JKind::Implies:
      return MFormula::implies(forgetful_projection(phi.left()),
                               forgetful_projection(phi.right()));
    case JKind::And:
      return MFormula::conj(forgetful_projection(phi.left()),
                            forgetful_projection(phi.right()));
    case JKind::Holds:
      return MFormula::box(forgetful_projection(phi.left()));
  }
  return MFormula::bottom();
}

namespace {

void walk_polarities(const MFormula& f, Polarity pol, OccurrencePath& path,
                     std::vector<BoxOccurrence>& out) {
  switch (f.kind()) {
    case MKind::Bottom:
    case MKind::Atom:
      return;
    case MKind::Implies: {
      path.push_back(0);
      walk_polarities(f.left(),
                      pol == Polarity::Positive ? Polarity::Negative : Polarity::Positive,
                      path, out);
      path.back() = 1;
      walk_polarities(f.right(), pol, path, out);
      path.pop_back();
      return;
    }
    case MKind::And: {
      path.push_back(0);
      walk_polarities(f.left(), pol, path, out);
      path.back() = 1;
      walk_polarities(f.right(), pol, path, out);
      path.pop_back();
      return;
    }
    case MKind::Box: {
      out.push_back({path, pol});
      path.push_back(0);
      walk_polarities(f.left(), pol, path, out);
      path.pop_back();
      return;
    }
  }
}

std::optional<OccurrencePath> first_mismatch(const MFormula& a, const MFormula& b,
                                             OccurrencePath& path) {
  if (a.kind() != b.kind()) return path;
  switch (a.kind()) {
    case MKind::Bottom:
      return std::nullopt;
    case MKind::Atom:
      if (a.index() != b.index()) return path;
      return std::nullopt;
    case MKind::Implies:
    case MKind::And: {
      path.push_back(0);
      if (auto m = first_mismatch(a.left(), b.left(), path)) return m;
      path.back() = 1;
      if (auto m = first_mismatch(a.right(), b.right(), path)) return m;
      path.pop_back();
      return std::nullopt;
    }
    case MKind::Box: {
      path.push_back(0);
      if (auto m = first_mismatch(a.left(), b.left(), path)) return m;
      path.pop_back();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// phi's projection equals the formula under scrutiny, so Holds and Box
// occurrences are in bijection; walk phi with polarities directly.
bool find_nonvariable_negative(const JFormula& phi, Polarity pol, OccurrencePath& path,
                               OccurrencePath& bad) {
  switch (phi.kind()) {
    case JKind::Bottom:
    case JKind::Atom:
      return false;
    case JKind::Implies: {
      path.push_back(0);
      const Polarity flipped =
          pol == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
      if (find_nonvariable_negative(phi.left(), flipped, path, bad)) return true;
      path.back() = 1;
      if (find_nonvariable_negative(phi.right(), pol, path, bad)) return true;
      path.pop_back();
      return false;
    }
    case JKind::And: {
      path.push_back(0);
      if (find_nonvariable_negative(phi.left(), pol, path, bad)) return true;
      path.back() = 1;
      if (find_nonvariable_negative(phi.right(), pol, path, bad)) return true;
      path.pop_back();
      return false;
    }
    case JKind::Holds: {
      if (pol == Polarity::Negative && !phi.term().is_variable()) {
        bad = path;
        return true;
      }
      path.push_back(0);
      if (find_nonvariable_negative(phi.left(), pol, path, bad)) return true;
      path.pop_back();
      return false;
    }
  }
  return false;
}

} // namespace

std::vector<BoxOccurrence> modal_polarities(const MFormula& phi) {
  std::vector<BoxOccurrence> out;
  OccurrencePath path;
  walk_polarities(phi, Polarity::Positive, path, out);
  return out;
}

RealizationVerdict check_realization(const JFormula& phi, const MFormula& psi, bool normal) {
  const MFormula projected = forgetful_projection(phi);
  OccurrencePath path;
  if (auto mismatch = first_mismatch(projected, psi, path)) {
    return {false, "projection mismatch at " + path_to_string(*mismatch), *mismatch};
  }
  if (normal) {
    OccurrencePath walk, bad;
    if (find_nonvariable_negative(phi, Polarity::Positive, walk, bad)) {
      return {false, "negative occurrence realized by non-variable term at " + path_to_string(bad),
              bad};
    }
  }
  return {true, "realization accepted", {}};
}

} // namespace gjl
