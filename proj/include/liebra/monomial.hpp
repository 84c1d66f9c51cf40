#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "liebra/lincombo.hpp"
#include "liebra/trees.hpp"

namespace liebra {

// Multilinear bracket monomial: a plane binary tree whose leaves carry
// pairwise distinct letters and whose internal vertices carry a bracket
// color (red prints as [.,.], blue as <.,.>). Immutable, cheaply copyable.
class Monomial {
 public:
  static Monomial letter(int index);
  static Monomial bracket(Color c, const Monomial& a, const Monomial& b);

  bool is_letter() const { return node_->letter != 0; }
  int letter_index() const;
  Color color() const;
  Monomial left() const;
  Monomial right() const;

  std::uint64_t mask() const { return node_->mask; }  // bit i-1 <-> letter i
  int degree() const;
  std::vector<int> support() const;
  bool contains(int letter) const { return (node_->mask >> (letter - 1)) & 1; }

  // The letter surviving the min-over-red / max-over-blue recursion.
  int graphical_root() const { return node_->groot; }

  const std::string& text() const { return node_->text; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.text() == b.text(); }
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.text() <=> b.text(); }

 private:
  struct Node {
    int letter = 0;  // nonzero on leaves
    Color c = Color::Red;
    std::shared_ptr<const Node> l, r;
    std::uint64_t mask = 0;
    int groot = 0;
    std::string text;
  };
  explicit Monomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using MonCombo = LinCombo<Monomial>;

// Grammar: expr := letter | '[' expr ',' expr ']' | '<' expr ',' expr '>',
// letter := 'x' digits. Errors carry the byte offset.
Monomial parse_monomial(const std::string& text);

// Every multilinear monomial over the given letters; count is
// Catalan(m-1) * m! * 2^(m-1) for m letters. Guarded to m <= 6.
std::vector<Monomial> enumerate_monomials_on(const std::vector<int>& letters);
std::vector<Monomial> enumerate_monomials(int n);

// Monotone letter substitution: i-th smallest support letter -> target[i].
Monomial relabel(const Monomial& m, const std::vector<int>& target);

// Arbitrary injective letter substitution; f must cover the support.
Monomial map_letters(const Monomial& m, const std::map<int, int>& f);

// Replace the leaf `at` by `sub`; supports must stay disjoint.
Monomial substitute(const Monomial& m, int at, const Monomial& sub);

// The colored graph accumulated by joining the graphical roots of the two
// sides of every bracket; its root equals the graphical root.
ColoredGraph bracket_graph(const Monomial& m);

// The distinguished monomial of a pattern-free tree: at each step the root's
// subtree hanging on its smallest red child splits off as a red bracket's
// right side; with no red child, the largest child's subtree becomes a blue
// bracket's left side.
Monomial basis_monomial(const ColoredGraph& g);

// Structural membership test for the image of basis_monomial; on failure
// `why` (if given) receives the first violated condition.
bool is_basis_monomial(const Monomial& m, std::string* why = nullptr);

// Uniform random monomial over the letters (shape, split, and colors drawn
// independently).
Monomial random_monomial_on(const std::vector<int>& letters, Rng& rng);

}  // namespace liebra
