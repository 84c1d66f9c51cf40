#include "liebra/poisson.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "liebra/orders.hpp"
#include "liebra/pairing.hpp"
#include "liebra/util.hpp"

namespace liebra {

static int low_letter(std::uint64_t mask) { return std::countr_zero(mask) + 1; }

struct PoissonFactor::Node {
  int letter = 0;  // nonzero on leaves
  Color c = Color::Red;
  std::shared_ptr<const PoissonMonomial> l, r;
  std::uint64_t mask = 0;
  std::string text;
  bool lie = false;
};

PoissonFactor PoissonFactor::letter(int index) {
  if (index < 1 || index > 64) throw DomainError("letter index out of range 1..64");
  auto n = std::make_shared<Node>();
  n->letter = index;
  n->mask = std::uint64_t{1} << (index - 1);
  n->text = "x" + std::to_string(index);
  n->lie = true;
  return PoissonFactor(std::move(n));
}

PoissonFactor PoissonFactor::bracket(Color c, const PoissonMonomial& a, const PoissonMonomial& b) {
  if (a.mask() & b.mask()) {
    throw DomainError("multilinearity violation: x" + std::to_string(low_letter(a.mask() & b.mask())) +
                      " appears twice");
  }
  auto n = std::make_shared<Node>();
  n->c = c;
  n->l = std::make_shared<const PoissonMonomial>(a);
  n->r = std::make_shared<const PoissonMonomial>(b);
  n->mask = a.mask() | b.mask();
  n->lie = a.factors().size() == 1 && a.factors()[0].is_lie() && b.factors().size() == 1 &&
           b.factors()[0].is_lie();
  char open = c == Color::Red ? '[' : '<';
  char close = c == Color::Red ? ']' : '>';
  n->text.reserve(a.text().size() + b.text().size() + 3);
  n->text += open;
  n->text += a.text();
  n->text += ',';
  n->text += b.text();
  n->text += close;
  return PoissonFactor(std::move(n));
}

PoissonFactor PoissonFactor::from_lie(const Monomial& m) {
  if (m.is_letter()) return letter(m.letter_index());
  return bracket(m.color(), PoissonMonomial::from_lie(m.left()), PoissonMonomial::from_lie(m.right()));
}

bool PoissonFactor::is_letter() const { return node_->letter != 0; }

int PoissonFactor::letter_index() const {
  if (!is_letter()) throw InternalError("letter_index on a bracket");
  return node_->letter;
}

Color PoissonFactor::color() const {
  if (is_letter()) throw InternalError("color of a leaf");
  return node_->c;
}

const PoissonMonomial& PoissonFactor::left() const {
  if (is_letter()) throw InternalError("left of a leaf");
  return *node_->l;
}

const PoissonMonomial& PoissonFactor::right() const {
  if (is_letter()) throw InternalError("right of a leaf");
  return *node_->r;
}

std::uint64_t PoissonFactor::mask() const { return node_->mask; }
const std::string& PoissonFactor::text() const { return node_->text; }
bool PoissonFactor::is_lie() const { return node_->lie; }

Monomial PoissonFactor::lie() const {
  if (!is_lie()) throw DomainError("factor has an inner product");
  if (is_letter()) return Monomial::letter(node_->letter);
  return Monomial::bracket(node_->c, left().factors()[0].lie(), right().factors()[0].lie());
}

PoissonMonomial PoissonMonomial::letter(int index) { return factor(PoissonFactor::letter(index)); }

PoissonMonomial PoissonMonomial::factor(const PoissonFactor& f) {
  PoissonMonomial pm;
  pm.factors_ = {f};
  pm.mask_ = f.mask();
  pm.text_ = f.text();
  return pm;
}

PoissonMonomial PoissonMonomial::product(const std::vector<PoissonMonomial>& parts) {
  if (parts.empty()) throw DomainError("empty product");
  PoissonMonomial pm;
  for (const PoissonMonomial& p : parts) {
    if (pm.mask_ & p.mask()) {
      throw DomainError("multilinearity violation: x" + std::to_string(low_letter(pm.mask_ & p.mask())) +
                        " appears twice");
    }
    pm.mask_ |= p.mask();
    pm.factors_.insert(pm.factors_.end(), p.factors_.begin(), p.factors_.end());
  }
  std::sort(pm.factors_.begin(), pm.factors_.end(), [](const PoissonFactor& a, const PoissonFactor& b) {
    return low_letter(a.mask()) < low_letter(b.mask());
  });
  for (std::size_t i = 0; i < pm.factors_.size(); ++i) {
    if (i) pm.text_ += '*';
    pm.text_ += pm.factors_[i].text();
  }
  return pm;
}

PoissonMonomial PoissonMonomial::from_lie(const Monomial& m) {
  return factor(PoissonFactor::from_lie(m));
}

int PoissonMonomial::degree() const { return std::popcount(mask_); }

std::vector<int> PoissonMonomial::support() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(low_letter(m));
  return out;
}

// ---- parsing -----------------------------------------------------------------

namespace {

struct PoissonParser {
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
  PoissonMonomial leaf() {
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
    return PoissonMonomial::letter(static_cast<int>(v));
  }
  PoissonMonomial atom() {
    char ch = peek();
    if (ch == 'x') return leaf();
    if (ch == '[' || ch == '<') {
      Color c = ch == '[' ? Color::Red : Color::Blue;
      char close = ch == '[' ? ']' : '>';
      ++pos;
      PoissonMonomial a = prod();
      expect(',');
      PoissonMonomial b = prod();
      expect(close);
      return PoissonMonomial::factor(PoissonFactor::bracket(c, a, b));
    }
    if (ch == '(') {
      ++pos;
      PoissonMonomial inner = prod();
      expect(')');
      return inner;
    }
    fail("expected 'x', '[', '<' or '('");
  }
  PoissonMonomial prod() {
    std::vector<PoissonMonomial> parts{atom()};
    while (peek() == '*') {
      ++pos;
      parts.push_back(atom());
    }
    return PoissonMonomial::product(parts);
  }
};

}  // namespace

PoissonMonomial parse_poisson(const std::string& text) {
  PoissonParser p{text};
  PoissonMonomial pm = p.prod();
  if (p.peek() != '\0') p.fail("trailing input");
  return pm;
}

// ---- partitions and forests ----------------------------------------------------

std::vector<std::vector<std::vector<int>>> set_partitions(const std::vector<int>& raw) {
  if (raw.empty()) throw DomainError("empty letter set");
  std::vector<int> letters = raw;
  std::sort(letters.begin(), letters.end());
  const std::size_t n = letters.size();
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> part(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < n; ++i) part[static_cast<std::size_t>(rgs[i])].push_back(letters[i]);
    std::sort(part.begin(), part.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.back() < b.back(); });
    out.push_back(std::move(part));

    // next restricted growth string
    std::size_t i = n;
    while (i-- > 1) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + static_cast<long>(i)) + 1;
      if (rgs[i] < cap) {
        rgs[i]++;
        std::fill(rgs.begin() + static_cast<long>(i) + 1, rgs.end(), 0);
        break;
      }
      if (i == 1) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (n == 1) {
      std::sort(out.begin(), out.end());
      return out;
    }
  }
}

std::vector<Forest> enumerate_forests(int n) {
  if (n < 1) throw DomainError("alphabet size must be positive");
  std::vector<int> letters(static_cast<std::size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  std::vector<Forest> out;
  for (const auto& part : set_partitions(letters)) {
    std::vector<std::vector<ColoredGraph>> choices;
    for (const auto& block : part) {
      std::vector<ColoredGraph> trees;
      for (const ColoredGraph& t : enumerate_basis_trees(static_cast<int>(block.size()))) {
        trees.push_back(relabel(t, block));
      }
      choices.push_back(std::move(trees));
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      Forest f;
      for (std::size_t i = 0; i < choices.size(); ++i) f.push_back(choices[i][idx[i]]);
      out.push_back(std::move(f));
      std::size_t i = choices.size();
      while (i-- > 0) {
        if (++idx[i] < choices[i].size()) break;
        idx[i] = 0;
        if (i == 0) goto next_partition;
      }
    }
  next_partition:;
  }
  return out;
}

std::vector<PoissonMonomial> poisson_basis(int n) {
  std::vector<PoissonMonomial> out;
  for (const Forest& f : enumerate_forests(n)) {
    std::vector<PoissonMonomial> parts;
    for (const ColoredGraph& g : f) parts.push_back(PoissonMonomial::from_lie(basis_monomial(g)));
    out.push_back(PoissonMonomial::product(parts));
  }
  return out;
}

std::vector<PoissonMonomial> enumerate_poisson_monomials_on(const std::vector<int>& letters) {
  if (letters.size() > 5) throw DomainError("product-monomial family too large to materialize");
  std::vector<PoissonMonomial> out;
  for (const auto& part : set_partitions(letters)) {
    std::vector<std::vector<Monomial>> choices;
    for (const auto& block : part) choices.push_back(enumerate_monomials_on(block));
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      std::vector<PoissonMonomial> parts;
      for (std::size_t i = 0; i < choices.size(); ++i) {
        parts.push_back(PoissonMonomial::from_lie(choices[i][idx[i]]));
      }
      out.push_back(PoissonMonomial::product(parts));
      std::size_t i = choices.size();
      while (i-- > 0) {
        if (++idx[i] < choices[i].size()) break;
        idx[i] = 0;
        if (i == 0) goto next_partition;
      }
    }
  next_partition:;
  }
  return out;
}

std::vector<PoissonMonomial> enumerate_poisson_monomials(int n) {
  std::vector<int> letters(static_cast<std::size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  return enumerate_poisson_monomials_on(letters);
}

PoissonMonomial random_poisson_monomial(const std::vector<int>& letters, Rng& rng) {
  if (letters.size() > 7) throw DomainError("random product monomial capped at 7 letters");
  const auto parts = set_partitions(letters);
  const auto& part = parts[static_cast<std::size_t>(
      rand_int(0, static_cast<int>(parts.size()) - 1, rng))];
  std::vector<PoissonMonomial> factors;
  for (const auto& block : part) {
    factors.push_back(PoissonMonomial::from_lie(random_monomial_on(block, rng)));
  }
  return PoissonMonomial::product(factors);
}

// ---- normalization ---------------------------------------------------------------

namespace {

// Expands every bracket-of-products through the two-sided derivation rule,
// innermost first; keys of the result are products of plain bracket factors.
PoisCombo expand_pm(const PoissonMonomial& pm);

PoisCombo expand_factor(const PoissonFactor& f) {
  if (f.is_lie()) return {PoissonMonomial::factor(f), 1};
  const PoisCombo ea = expand_pm(f.left());
  const PoisCombo eb = expand_pm(f.right());
  PoisCombo out;
  for (const auto& [p, ca] : ea) {
    for (const auto& [q, cb] : eb) {
      for (std::size_t i = 0; i < p.factors().size(); ++i) {
        for (std::size_t j = 0; j < q.factors().size(); ++j) {
          std::vector<PoissonMonomial> parts;
          for (std::size_t k = 0; k < p.factors().size(); ++k) {
            if (k != i) parts.push_back(PoissonMonomial::factor(p.factors()[k]));
          }
          for (std::size_t l = 0; l < q.factors().size(); ++l) {
            if (l != j) parts.push_back(PoissonMonomial::factor(q.factors()[l]));
          }
          parts.push_back(PoissonMonomial::factor(
              PoissonFactor::bracket(f.color(), PoissonMonomial::factor(p.factors()[i]),
                                     PoissonMonomial::factor(q.factors()[j]))));
          out.add(PoissonMonomial::product(parts), ca * cb);
        }
      }
    }
  }
  return out;
}

PoisCombo expand_pm(const PoissonMonomial& pm) {
  PoisCombo acc;
  bool first = true;
  for (const PoissonFactor& f : pm.factors()) {
    PoisCombo ef = expand_factor(f);
    if (first) {
      acc = std::move(ef);
      first = false;
      continue;
    }
    PoisCombo next;
    for (const auto& [a, ca] : acc) {
      for (const auto& [b, cb] : ef) next.add(PoissonMonomial::product({a, b}), ca * cb);
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

PoisCombo poisson_normalize(const PoissonMonomial& pm) {
  PoisCombo out;
  for (const auto& [flat, c] : expand_pm(pm)) {
    PoisCombo acc;
    bool first = true;
    for (const PoissonFactor& f : flat.factors()) {
      PoisCombo ef;
      for (const auto& [m, cm] : lc_normalize(f.lie())) ef.add(PoissonMonomial::from_lie(m), cm);
      if (first) {
        acc = std::move(ef);
        first = false;
        continue;
      }
      PoisCombo next;
      for (const auto& [a, ca] : acc) {
        for (const auto& [b, cb] : ef) next.add(PoissonMonomial::product({a, b}), ca * cb);
      }
      acc = std::move(next);
    }
    acc *= c;
    out += acc;
  }
  return out;
}

PoisCombo poisson_normalize_combo(const PoisCombo& c) {
  PoisCombo out;
  for (const auto& [pm, coeff] : c) {
    PoisCombo part = poisson_normalize(pm);
    part *= coeff;
    out += part;
  }
  return out;
}

// ---- pairing ----------------------------------------------------------------------

namespace {

int bracket_count(const PoissonMonomial& pm) {
  int total = 0;
  for (const PoissonFactor& f : pm.factors()) {
    if (!f.is_letter()) total += 1 + bracket_count(f.left()) + bracket_count(f.right());
  }
  return total;
}

struct ComNadir {
  bool at_bracket = false;
  Color c = Color::Red;
  std::uint64_t id = 0;  // support mask of the bracket vertex
  bool ccw = false;      // source letter sits in the right side
};

ComNadir com_nadir(const PoissonMonomial& pm, int src, int dst) {
  const std::uint64_t sb = std::uint64_t{1} << (src - 1);
  const std::uint64_t db = std::uint64_t{1} << (dst - 1);
  const PoissonMonomial* cur = &pm;
  while (true) {
    const PoissonFactor* fs = nullptr;
    const PoissonFactor* fd = nullptr;
    for (const PoissonFactor& f : cur->factors()) {
      if (f.mask() & sb) fs = &f;
      if (f.mask() & db) fd = &f;
    }
    if (fs == nullptr || fd == nullptr) throw InternalError("letter missing under its product");
    if (fs != fd) return {};  // nadir is the product vertex
    if (fs->is_letter()) throw InternalError("two letters at one leaf");
    const bool src_left = (fs->left().mask() & sb) != 0;
    const bool dst_left = (fs->left().mask() & db) != 0;
    if (src_left && dst_left) {
      cur = &fs->left();
    } else if (!src_left && !dst_left) {
      cur = &fs->right();
    } else {
      return {true, fs->color(), fs->mask(), !src_left};
    }
  }
}

}  // namespace

long long pair_com(const OrientedGraph& g, const PoissonMonomial& pm) {
  if (g.vertices != pm.support()) throw DomainError("graph and monomial use different alphabets");
  if (static_cast<int>(g.edges.size()) != bracket_count(pm)) return 0;
  std::vector<std::uint64_t> seen;
  int ccw = 0;
  for (const Arc& a : g.edges) {
    const ComNadir nd = com_nadir(pm, a.src, a.dst);
    if (!nd.at_bracket || nd.c != a.c) return 0;
    if (std::find(seen.begin(), seen.end(), nd.id) != seen.end()) return 0;
    seen.push_back(nd.id);
    if (nd.ccw) ++ccw;
  }
  return (ccw & 1) ? -1 : 1;
}

long long pair_com_combo(const OrientedGraph& g, const PoisCombo& c) {
  long long total = 0;
  for (const auto& [pm, coeff] : c) total += coeff * pair_com(g, pm);
  return total;
}

// ---- identity instances -------------------------------------------------------------

const char* qbt_rel_kind_name(QbtRelKind k) {
  switch (k) {
    case QbtRelKind::S: return "S";
    case QbtRelKind::J: return "J";
    case QbtRelKind::MJ: return "MJ";
    case QbtRelKind::D1: return "D1";
    case QbtRelKind::D2: return "D2";
  }
  return "?";
}

namespace {

using Rebuild = std::function<PoissonMonomial(const PoissonMonomial&)>;

PoissonMonomial wrap_bracket(Color c, const PoissonMonomial& a, const PoissonMonomial& b) {
  return PoissonMonomial::factor(PoissonFactor::bracket(c, a, b));
}

// Replaces factor `skip` of `pm` by the factors of `sub`.
PoissonMonomial splice(const PoissonMonomial& pm, std::size_t skip, const PoissonMonomial& sub) {
  std::vector<PoissonMonomial> parts{sub};
  for (std::size_t k = 0; k < pm.factors().size(); ++k) {
    if (k != skip) parts.push_back(PoissonMonomial::factor(pm.factors()[k]));
  }
  return PoissonMonomial::product(parts);
}

void collect_qbt(const PoissonMonomial& pm, QbtRelKind kind, const Rebuild& ctx,
                 std::vector<PoisCombo>& out) {
  for (std::size_t fi = 0; fi < pm.factors().size(); ++fi) {
    const PoissonFactor& f = pm.factors()[fi];
    if (f.is_letter()) continue;
    const Color c = f.color();
    const PoissonMonomial& a = f.left();
    const PoissonMonomial& w = f.right();
    auto here = [&, fi](const PoissonMonomial& repl) { return ctx(splice(pm, fi, repl)); };

    switch (kind) {
      case QbtRelKind::S: {
        PoisCombo combo;
        combo.add(here(wrap_bracket(c, a, w)), 1);
        combo.add(here(wrap_bracket(c, w, a)), 1);
        out.push_back(std::move(combo));
        break;
      }
      case QbtRelKind::J:
      case QbtRelKind::MJ: {
        if (w.factors().size() != 1 || w.factors()[0].is_letter()) break;
        const PoissonFactor& inner = w.factors()[0];
        if (inner.color() != c) break;
        if (kind == QbtRelKind::J) {
          const PoissonMonomial& b = inner.left();
          const PoissonMonomial& cc = inner.right();
          PoisCombo combo;
          combo.add(here(wrap_bracket(c, a, wrap_bracket(c, b, cc))), 1);
          combo.add(here(wrap_bracket(c, b, wrap_bracket(c, cc, a))), 1);
          combo.add(here(wrap_bracket(c, cc, wrap_bracket(c, a, b))), 1);
          out.push_back(std::move(combo));
        } else if (c == Color::Red) {
          const PoissonMonomial& b = inner.left();
          const PoissonMonomial& cc = inner.right();
          PoisCombo combo;
          combo.add(here(wrap_bracket(Color::Red, a, wrap_bracket(Color::Blue, b, cc))), 1);
          combo.add(here(wrap_bracket(Color::Red, b, wrap_bracket(Color::Blue, cc, a))), 1);
          combo.add(here(wrap_bracket(Color::Red, cc, wrap_bracket(Color::Blue, a, b))), 1);
          combo.add(here(wrap_bracket(Color::Blue, a, wrap_bracket(Color::Red, b, cc))), 1);
          combo.add(here(wrap_bracket(Color::Blue, b, wrap_bracket(Color::Red, cc, a))), 1);
          combo.add(here(wrap_bracket(Color::Blue, cc, wrap_bracket(Color::Red, a, b))), 1);
          out.push_back(std::move(combo));
        }
        break;
      }
      case QbtRelKind::D1:
      case QbtRelKind::D2: {
        if (c != (kind == QbtRelKind::D1 ? Color::Red : Color::Blue)) break;
        const std::size_t m = w.factors().size();
        if (m < 2) break;
        // nonempty complementary groups; the first factor stays in group one
        for (std::uint64_t pick = 0; pick + 1 < (std::uint64_t{1} << (m - 1)); ++pick) {
          std::vector<PoissonMonomial> group_b{PoissonMonomial::factor(w.factors()[0])};
          std::vector<PoissonMonomial> group_c;
          for (std::size_t k = 1; k < m; ++k) {
            ((pick >> (k - 1)) & 1 ? group_b : group_c)
                .push_back(PoissonMonomial::factor(w.factors()[k]));
          }
          PoisCombo combo;
          combo.add(here(wrap_bracket(c, a, w)), 1);
          std::vector<PoissonMonomial> two{wrap_bracket(c, a, PoissonMonomial::product(group_b))};
          two.insert(two.end(), group_c.begin(), group_c.end());
          combo.add(here(PoissonMonomial::product(two)), -1);
          std::vector<PoissonMonomial> three{wrap_bracket(c, a, PoissonMonomial::product(group_c))};
          three.insert(three.end(), group_b.begin(), group_b.end());
          combo.add(here(PoissonMonomial::product(three)), -1);
          out.push_back(std::move(combo));
        }
        break;
      }
    }

    // the same sites inside both arguments
    auto left_ctx = [&, fi](const PoissonMonomial& repl) {
      return ctx(splice(pm, fi, wrap_bracket(c, repl, w)));
    };
    auto right_ctx = [&, fi](const PoissonMonomial& repl) {
      return ctx(splice(pm, fi, wrap_bracket(c, a, repl)));
    };
    collect_qbt(a, kind, left_ctx, out);
    collect_qbt(w, kind, right_ctx, out);
  }
}

}  // namespace

std::vector<PoisCombo> qbt_relation_generators(int n, QbtRelKind kind) {
  if (n < 1 || n > 4) throw DomainError("identity-instance stream capped at 4 letters");
  std::vector<PoisCombo> out;
  Rebuild id = [](const PoissonMonomial& pm) { return pm; };
  const bool derivation = kind == QbtRelKind::D1 || kind == QbtRelKind::D2;
  for (const PoissonMonomial& pm : enumerate_poisson_monomials(n)) {
    collect_qbt(pm, kind, id, out);
    // Derivation sites need a bracket over a product, which product-of-bracket
    // monomials never contain; wrap each factor against the rest to form them.
    if (derivation && pm.factors().size() >= 3) {
      const Color c = kind == QbtRelKind::D1 ? Color::Red : Color::Blue;
      for (std::size_t i = 0; i < pm.factors().size(); ++i) {
        std::vector<PoissonMonomial> rest;
        for (std::size_t k = 0; k < pm.factors().size(); ++k) {
          if (k != i) rest.push_back(PoissonMonomial::factor(pm.factors()[k]));
        }
        collect_qbt(wrap_bracket(c, PoissonMonomial::factor(pm.factors()[i]),
                                 PoissonMonomial::product(rest)),
                    kind, id, out);
      }
    }
  }
  return out;
}

// ---- the block pairing matrix ----------------------------------------------------

std::vector<OrientedGraph> com_rows(int n) {
  std::vector<OrientedGraph> out;
  for (const Forest& f : enumerate_forests(n)) {
    OrientedGraph g = OrientedGraph::on_alphabet(n);
    for (const ColoredGraph& comp : f) {
      for (const Arc& a : consistent_orientation(comp).edges) g.add_edge(a.src, a.dst, a.c);
    }
    g.normalize();
    out.push_back(std::move(g));
  }
  return out;
}

ComBlockReport com_block(const std::vector<std::vector<int>>& blocks) {
  ComBlockReport rep;
  rep.blocks = blocks;
  std::vector<std::vector<ColoredGraph>> orders;
  std::vector<PairingMatrix> lie;
  std::vector<int> all;
  for (const auto& block : blocks) {
    const std::vector<ColoredGraph> ext = linear_extension(static_cast<int>(block.size()));
    std::vector<ColoredGraph> rel;
    for (const ColoredGraph& t : ext) rel.push_back(relabel(t, block));
    orders.push_back(std::move(rel));
    lie.push_back(pairing_matrix(ext));
    all.insert(all.end(), block.begin(), block.end());
  }
  std::sort(all.begin(), all.end());

  std::size_t dim = 1;
  for (const auto& o : orders) dim *= o.size();
  rep.dim = dim;
  rep.entries.assign(dim * dim, 0);

  const std::size_t k = orders.size();
  auto tuple_of = [&](std::size_t flat) {
    std::vector<std::size_t> t(k);
    for (std::size_t i = k; i-- > 0;) {
      t[i] = flat % orders[i].size();
      flat /= orders[i].size();
    }
    return t;  // first block most significant
  };

  std::vector<PoissonMonomial> cols;
  cols.reserve(dim);
  for (std::size_t cidx = 0; cidx < dim; ++cidx) {
    const std::vector<std::size_t> tc = tuple_of(cidx);
    std::vector<PoissonMonomial> parts;
    for (std::size_t i = 0; i < k; ++i) {
      parts.push_back(PoissonMonomial::from_lie(basis_monomial(orders[i][tc[i]])));
    }
    cols.push_back(PoissonMonomial::product(parts));
  }

  std::vector<char> row_ok(dim, 1);
  parallel_for(dim, [&](std::size_t r) {
    const std::vector<std::size_t> tr = tuple_of(r);
    OrientedGraph row = OrientedGraph::on_vertices(all);
    for (std::size_t i = 0; i < k; ++i) {
      for (const Arc& a : consistent_orientation(orders[i][tr[i]]).edges) {
        row.add_edge(a.src, a.dst, a.c);
      }
    }
    row.normalize();
    for (std::size_t cidx = 0; cidx < dim; ++cidx) {
      const std::vector<std::size_t> tc = tuple_of(cidx);
      const long long got = pair_com(row, cols[cidx]);
      rep.entries[r * dim + cidx] = got;
      long long want = 1;
      for (std::size_t i = 0; i < k; ++i) {
        want *= lie[i].at(static_cast<int>(tr[i]), static_cast<int>(tc[i]));
      }
      if (got != want) row_ok[r] = 0;
    }
  });
  rep.kronecker_ok = std::find(row_ok.begin(), row_ok.end(), 0) == row_ok.end();
  rep.unimodular_ok = true;
  for (const PairingMatrix& m : lie) {
    if (!m.upper_triangular() || !m.diagonal_unimodular()) rep.unimodular_ok = false;
  }
  return rep;
}

ComMatrixReport com_matrix(int n) {
  if (n < 1 || n > 4) throw DomainError("block matrix certificate capped at 4 letters");
  ComMatrixReport rep;
  rep.n = n;

  std::vector<int> letters(static_cast<std::size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  const auto partitions = set_partitions(letters);

  // partition id per forest, in enumeration order
  const std::vector<Forest> forests = enumerate_forests(n);
  const std::vector<OrientedGraph> rows = com_rows(n);
  const std::vector<PoissonMonomial> cols = poisson_basis(n);
  rep.dim = forests.size();
  std::vector<std::size_t> pid(forests.size());
  for (std::size_t i = 0; i < forests.size(); ++i) {
    std::vector<std::vector<int>> part;
    for (const ColoredGraph& comp : forests[i]) part.push_back(comp.vertices);
    const auto it = std::find(partitions.begin(), partitions.end(), part);
    if (it == partitions.end()) throw InternalError("forest outside the partition list");
    pid[i] = static_cast<std::size_t>(it - partitions.begin());
  }

  std::vector<char> row_clean(rows.size(), 1);
  parallel_for(rows.size(), [&](std::size_t r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (pid[r] != pid[c] && pair_com(rows[r], cols[c]) != 0) row_clean[r] = 0;
    }
  });
  rep.cross_zero = std::find(row_clean.begin(), row_clean.end(), 0) == row_clean.end();

  rep.diagonal.resize(partitions.size());
  parallel_for(partitions.size(), [&](std::size_t i) { rep.diagonal[i] = com_block(partitions[i]); });
  rep.blocks_ok = true;
  for (const ComBlockReport& b : rep.diagonal) {
    if (!b.kronecker_ok || !b.unimodular_ok) rep.blocks_ok = false;
  }
  return rep;
}

ExpFormulaReport exp_formula_check(int max_n) {
  if (max_n < 1 || max_n > 10) throw DomainError("convolution check capped at 10");
  ExpFormulaReport rep;
  rep.max_n = max_n;
  std::vector<long long> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= max_n; ++m) {
    long long total = 0;
    for (int k = 1; k <= m; ++k) {
      total += binomial(m - 1, k - 1) * ipow(k, k - 1) * p[static_cast<std::size_t>(m - k)];
    }
    p[static_cast<std::size_t>(m)] = total;
    rep.convolution.push_back(total);
    rep.closed_form.push_back(ipow(m + 1, m - 1));
  }
  rep.ok = rep.convolution == rep.closed_form;
  return rep;
}

}  // namespace liebra
