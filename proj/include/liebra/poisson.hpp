#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "liebra/eil.hpp"
#include "liebra/monomial.hpp"
#include "liebra/rewrite.hpp"

namespace liebra {

class PoissonMonomial;

// One factor of a product monomial: a letter or a bracket of two product
// monomials. Immutable, cheaply copyable.
class PoissonFactor {
 public:
  static PoissonFactor letter(int index);
  static PoissonFactor bracket(Color c, const PoissonMonomial& a, const PoissonMonomial& b);
  static PoissonFactor from_lie(const Monomial& m);

  bool is_letter() const;
  int letter_index() const;
  Color color() const;
  const PoissonMonomial& left() const;
  const PoissonMonomial& right() const;

  std::uint64_t mask() const;
  const std::string& text() const;

  // True when every product below has exactly one factor, i.e. the factor
  // is a plain bracket monomial.
  bool is_lie() const;
  Monomial lie() const;

  friend bool operator==(const PoissonFactor& a, const PoissonFactor& b) {
    return a.text() == b.text();
  }
  friend auto operator<=>(const PoissonFactor& a, const PoissonFactor& b) {
    return a.text() <=> b.text();
  }

 private:
  struct Node;
  explicit PoissonFactor(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend class PoissonMonomial;
};

// Commutative product of factors over pairwise disjoint letters; the factor
// list is kept sorted by smallest letter, so equal products are equal values.
class PoissonMonomial {
 public:
  static PoissonMonomial letter(int index);
  static PoissonMonomial factor(const PoissonFactor& f);
  static PoissonMonomial product(const std::vector<PoissonMonomial>& parts);
  static PoissonMonomial from_lie(const Monomial& m);

  const std::vector<PoissonFactor>& factors() const { return factors_; }
  std::uint64_t mask() const { return mask_; }
  int degree() const;
  std::vector<int> support() const;

  const std::string& text() const { return text_; }

  friend bool operator==(const PoissonMonomial& a, const PoissonMonomial& b) {
    return a.text_ == b.text_;
  }
  friend auto operator<=>(const PoissonMonomial& a, const PoissonMonomial& b) {
    return a.text_ <=> b.text_;
  }

 private:
  PoissonMonomial() = default;
  std::vector<PoissonFactor> factors_;
  std::uint64_t mask_ = 0;
  std::string text_;
};

using PoisCombo = LinCombo<PoissonMonomial>;

// Grammar: product := atom ('*' atom)*, atom := letter | '[' product ','
// product ']' | '<' product ',' product '>' | '(' product ')'.
PoissonMonomial parse_poisson(const std::string& text);

// A forest: pattern-free trees on the blocks of a set partition, listed in
// increasing order of block maxima.
using Forest = std::vector<ColoredGraph>;

// Partitions of the letter set, each with blocks ordered by maximum;
// partitions sorted lexicographically.
std::vector<std::vector<std::vector<int>>> set_partitions(const std::vector<int>& letters);

// All (n+1)^(n-1) forests on {1..n}; per partition, component tuples run in
// per-block enumeration order with the first block most significant.
std::vector<Forest> enumerate_forests(int n);

// Product of the per-component distinguished monomials, one per forest.
std::vector<PoissonMonomial> poisson_basis(int n);

// Every product monomial over the letters (all partitions, all bracket
// monomials per block). Guarded to 5 letters.
std::vector<PoissonMonomial> enumerate_poisson_monomials_on(const std::vector<int>& letters);
std::vector<PoissonMonomial> enumerate_poisson_monomials(int n);

PoissonMonomial random_poisson_monomial(const std::vector<int>& letters, Rng& rng);

// Rewrites onto the forest basis: brackets of products expand through the
// two-sided derivation rule, pure bracket factors normalize through the
// bracket rewrite system, and factors recombine in canonical order.
PoisCombo poisson_normalize(const PoissonMonomial& pm);
PoisCombo poisson_normalize_combo(const PoisCombo& c);

// Pairing against product monomials: every edge must land on a bracket
// vertex of the matching color, bijectively over all brackets; the sign
// counts edges whose source sits in the right side of its bracket.
long long pair_com(const OrientedGraph& g, const PoissonMonomial& pm);
long long pair_com_combo(const OrientedGraph& g, const PoisCombo& c);

// Identity instances on product monomials: swap/rotation kinds anchor at
// bracket sites, derivation kinds split one product argument two ways.
enum class QbtRelKind { S, J, MJ, D1, D2 };
const char* qbt_rel_kind_name(QbtRelKind k);
inline constexpr QbtRelKind kAllQbtRelKinds[] = {QbtRelKind::S, QbtRelKind::J, QbtRelKind::MJ,
                                                 QbtRelKind::D1, QbtRelKind::D2};

std::vector<PoisCombo> qbt_relation_generators(int n, QbtRelKind kind);

// Rows of the product-side pairing matrix: one disconnected graph per
// forest, components the consistently oriented trees.
std::vector<OrientedGraph> com_rows(int n);

struct ComBlockReport {
  std::vector<std::vector<int>> blocks;  // the partition, ordered by maxima
  std::size_t dim = 0;
  std::vector<long long> entries;        // dense row-major, forest-tuple order
  bool kronecker_ok = false;             // equals the product of per-block matrices
  bool unimodular_ok = false;            // per-block factors are triangular with unit diagonal
};

struct ComMatrixReport {
  int n = 0;
  std::size_t dim = 0;
  bool cross_zero = false;  // entries across different partitions vanish
  bool blocks_ok = false;
  std::vector<ComBlockReport> diagonal;
};

// Diagonal block for one partition: rows and columns are component tuples in
// per-block linear-extension order.
ComBlockReport com_block(const std::vector<std::vector<int>>& blocks);

// Full block-structure certificate; quadratic in the basis size, so guarded
// to n <= 4.
ComMatrixReport com_matrix(int n);

struct ExpFormulaReport {
  int max_n = 0;
  bool ok = false;
  std::vector<long long> convolution;  // p(1..max_n) from the block recurrence
  std::vector<long long> closed_form;  // (n+1)^(n-1)
};

// Counts forests by the exponential-formula recurrence
// p(n) = sum_k C(n-1,k-1) k^(k-1) p(n-k) and compares with (n+1)^(n-1).
ExpFormulaReport exp_formula_check(int max_n);

}  // namespace liebra
