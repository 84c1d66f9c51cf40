#include "liebra/monomial.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace liebra {

static int low_letter(std::uint64_t mask) { return std::countr_zero(mask) + 1; }

Monomial Monomial::letter(int index) {
  if (index < 1 || index > 64) throw DomainError("letter index out of range 1..64");
  auto n = std::make_shared<Node>();
  n->letter = index;
  n->mask = std::uint64_t{1} << (index - 1);
  n->groot = index;
  n->text = "x" + std::to_string(index);
  return Monomial(std::move(n));
}

Monomial Monomial::bracket(Color c, const Monomial& a, const Monomial& b) {
  if (a.mask() & b.mask()) {
    throw DomainError("multilinearity violation: x" + std::to_string(low_letter(a.mask() & b.mask())) +
                      " appears twice");
  }
  auto n = std::make_shared<Node>();
  n->c = c;
  n->l = a.node_;
  n->r = b.node_;
  n->mask = a.mask() | b.mask();
  n->groot = c == Color::Red ? std::min(a.graphical_root(), b.graphical_root())
                             : std::max(a.graphical_root(), b.graphical_root());
  char open = c == Color::Red ? '[' : '<';
  char close = c == Color::Red ? ']' : '>';
  n->text.reserve(a.text().size() + b.text().size() + 3);
  n->text += open;
  n->text += a.text();
  n->text += ',';
  n->text += b.text();
  n->text += close;
  return Monomial(std::move(n));
}

int Monomial::letter_index() const {
  if (!is_letter()) throw InternalError("letter_index on a bracket");
  return node_->letter;
}

Color Monomial::color() const {
  if (is_letter()) throw InternalError("color of a leaf");
  return node_->c;
}

Monomial Monomial::left() const {
  if (is_letter()) throw InternalError("left of a leaf");
  return Monomial(node_->l);
}

Monomial Monomial::right() const {
  if (is_letter()) throw InternalError("right of a leaf");
  return Monomial(node_->r);
}

int Monomial::degree() const { return std::popcount(node_->mask); }

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (std::uint64_t m = node_->mask; m; m &= m - 1) out.push_back(low_letter(m));
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("parse error at byte " + std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  }
  Monomial leaf() {
    ++pos;  // consume 'x'
    std::size_t start = pos;
    long v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + (s[pos] - '0');
      if (v > 64) fail("letter index out of range 1..64");
      ++pos;
    }
    if (pos == start) fail("expected digits after 'x'");
    if (v < 1) fail("letter index out of range 1..64");
    return Monomial::letter(static_cast<int>(v));
  }
  Monomial expr() {
    char ch = peek();
    if (ch == 'x') return leaf();
    if (ch == '[' || ch == '<') {
      Color c = ch == '[' ? Color::Red : Color::Blue;
      char close = ch == '[' ? ']' : '>';
      ++pos;
      Monomial a = expr();
      expect(',');
      Monomial b = expr();
      expect(close);
      return Monomial::bracket(c, a, b);
    }
    fail("expected 'x', '[' or '<'");
  }
};

}  // namespace

Monomial parse_monomial(const std::string& text) {
  Parser p{text};
  Monomial m = p.expr();
  if (p.peek() != '\0') p.fail("trailing input");
  return m;
}

static void check_letters(const std::vector<int>& letters) {
  if (letters.empty()) throw DomainError("empty letter set");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 1 || letters[i] > 64) throw DomainError("letter index out of range 1..64");
    if (i && letters[i] <= letters[i - 1]) throw DomainError("letters must be strictly increasing");
  }
}

std::vector<Monomial> enumerate_monomials_on(const std::vector<int>& letters) {
  check_letters(letters);
  if (letters.size() > 6) throw DomainError("monomial list too large to materialize (more than 6 letters)");
  // Pools per position-subset of the letter vector, built bottom-up.
  std::map<unsigned, std::vector<Monomial>> pool;
  unsigned full = (1u << letters.size()) - 1;
  for (unsigned mask = 1; mask <= full; ++mask) {
    std::vector<Monomial>& out = pool[mask];
    if (std::popcount(mask) == 1) {
      out.push_back(Monomial::letter(letters[std::countr_zero(mask)]));
      continue;
    }
    for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
      const std::vector<Monomial>& ls = pool[sub];
      const std::vector<Monomial>& rs = pool[mask ^ sub];
      for (Color c : {Color::Red, Color::Blue})
        for (const Monomial& a : ls)
          for (const Monomial& b : rs) out.push_back(Monomial::bracket(c, a, b));
    }
  }
  return pool[full];
}

std::vector<Monomial> enumerate_monomials(int n) {
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i + 1;
  return enumerate_monomials_on(letters);
}

Monomial map_letters(const Monomial& m, const std::map<int, int>& f) {
  if (m.is_letter()) {
    auto it = f.find(m.letter_index());
    if (it == f.end()) throw DomainError("letter substitution misses x" + std::to_string(m.letter_index()));
    return Monomial::letter(it->second);
  }
  return Monomial::bracket(m.color(), map_letters(m.left(), f), map_letters(m.right(), f));
}

Monomial relabel(const Monomial& m, const std::vector<int>& target) {
  std::vector<int> from = m.support();
  if (from.size() != target.size()) throw DomainError("relabel target has wrong size");
  check_letters(target);
  std::map<int, int> f;
  for (std::size_t i = 0; i < from.size(); ++i) f[from[i]] = target[i];
  return map_letters(m, f);
}

Monomial substitute(const Monomial& m, int at, const Monomial& sub) {
  if (m.is_letter()) {
    if (m.letter_index() == at) return sub;
    return m;
  }
  if (!m.contains(at)) return m;
  if (m.left().contains(at))
    return Monomial::bracket(m.color(), substitute(m.left(), at, sub), m.right());
  return Monomial::bracket(m.color(), m.left(), substitute(m.right(), at, sub));
}

static void collect_edges(const Monomial& m, ColoredGraph& g) {
  if (m.is_letter()) return;
  collect_edges(m.left(), g);
  collect_edges(m.right(), g);
  g.add_edge(m.left().graphical_root(), m.right().graphical_root(), m.color());
}

ColoredGraph bracket_graph(const Monomial& m) {
  ColoredGraph g = ColoredGraph::on_vertices(m.support());
  collect_edges(m, g);
  g.normalize();
  return g;
}

Monomial basis_monomial(const ColoredGraph& g) {
  RootedView rv = rooted_view(g);
  if (g.n() == 1) return Monomial::letter(rv.root);
  const std::vector<int>& ch = rv.kids(rv.root);
  // Split off one root subtree; the rest keeps the root.
  int split;
  bool red = rv.root < ch.back();
  if (red) {
    split = *std::upper_bound(ch.begin(), ch.end(), rv.root);  // smallest red child
  } else {
    split = ch.back();  // largest (blue) child
  }
  std::vector<int> inner = rv.subtree(split);
  std::vector<int> rest;
  std::set_difference(g.vertices.begin(), g.vertices.end(), inner.begin(), inner.end(),
                      std::back_inserter(rest));
  Monomial sub = basis_monomial(induced(g, inner));
  Monomial other = basis_monomial(induced(g, rest));
  return red ? Monomial::bracket(Color::Red, other, sub) : Monomial::bracket(Color::Blue, sub, other);
}

static bool basis_fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool is_basis_monomial(const Monomial& m, std::string* why) {
  if (m.is_letter()) return true;
  Monomial l = m.left(), r = m.right();
  if (l.graphical_root() > r.graphical_root())
    return basis_fail(why, "left root exceeds right root in " + m.text());
  if (m.color() == Color::Red && !l.is_letter() && l.color() == Color::Red &&
      r.graphical_root() > l.right().graphical_root()) {
    return basis_fail(why, "red-in-red: outer right root exceeds inner right root in " + m.text());
  }
  if (m.color() == Color::Blue && !r.is_letter()) {
    if (r.color() == Color::Red)
      return basis_fail(why, "red bracket on the right of a blue bracket in " + m.text());
    if (r.left().graphical_root() > l.graphical_root())
      return basis_fail(why, "blue-in-blue: inner left root exceeds outer left root in " + m.text());
  }
  return is_basis_monomial(l, why) && is_basis_monomial(r, why);
}

// Number of monomials on k fixed letters: Catalan(k-1) * k! * 2^(k-1).
static long long monomial_count(int k) {
  long long cat = binomial(2 * (k - 1), k - 1) / k;
  long long fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return cat * fact * (1LL << (k - 1));
}

Monomial random_monomial_on(const std::vector<int>& letters, Rng& rng) {
  check_letters(letters);
  int m = static_cast<int>(letters.size());
  if (m > 10) throw DomainError("random monomial limited to 10 letters");
  if (m == 1) return Monomial::letter(letters[0]);
  // Left-support size drawn with exact weights, then a uniform size-j subset.
  std::vector<double> w(m, 0.0);
  for (int j = 1; j < m; ++j)
    w[j] = static_cast<double>(binomial(m, j)) * static_cast<double>(monomial_count(j)) *
           static_cast<double>(monomial_count(m - j));
  std::discrete_distribution<int> size_dist(w.begin(), w.end());
  int j = size_dist(rng);
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<int> left_letters, right_letters;
  for (int i = 0; i < m; ++i) (i < j ? left_letters : right_letters).push_back(letters[idx[i]]);
  std::sort(left_letters.begin(), left_letters.end());
  std::sort(right_letters.begin(), right_letters.end());
  Color c = rand_int(0, 1, rng) ? Color::Blue : Color::Red;
  return Monomial::bracket(c, random_monomial_on(left_letters, rng), random_monomial_on(right_letters, rng));
}

}  // namespace liebra
