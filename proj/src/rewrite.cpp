#include "liebra/rewrite.hpp"

#include <algorithm>
#include <map>

namespace liebra {

namespace {

constexpr int kDepthLimit = 2000;

thread_local std::map<std::string, MonCombo> lc_memo;

Monomial red(const Monomial& a, const Monomial& b) { return Monomial::bracket(Color::Red, a, b); }
Monomial blue(const Monomial& a, const Monomial& b) { return Monomial::bracket(Color::Blue, a, b); }

MonCombo lc_rec(const Monomial& m, int depth) {
  if (depth > kDepthLimit) throw InternalError("normalization recursion budget exceeded");
  if (is_basis_monomial(m)) return MonCombo(m, 1);
  if (auto it = lc_memo.find(m.text()); it != lc_memo.end()) return it->second;
  Monomial a = m.left(), b = m.right();
  Color c = m.color();
  MonCombo out;
  if (!is_basis_monomial(a) || !is_basis_monomial(b)) {
    // Normalize children first, then recombine bilinearly.
    MonCombo la = lc_rec(a, depth + 1);
    MonCombo lb = lc_rec(b, depth + 1);
    for (const auto& [ka, ca] : la)
      for (const auto& [kb, cb] : lb)
        out += ca * cb * lc_rec(Monomial::bracket(c, ka, kb), depth + 1);
  } else if (a.graphical_root() > b.graphical_root()) {
    out -= lc_rec(Monomial::bracket(c, b, a), depth + 1);
  } else if (c == Color::Red) {
    if (a.is_letter() || a.color() != Color::Red)
      throw InternalError("red rewrite expects a red bracket on the left: " + m.text());
    Monomial a1 = a.left(), a2 = a.right();
    out += lc_rec(red(red(a1, b), a2), depth + 1);
    out += lc_rec(red(a1, red(a2, b)), depth + 1);
  } else if (!b.is_letter() && b.color() == Color::Red) {
    Monomial b1 = b.left(), b2 = b.right();
    out -= lc_rec(blue(red(a, b2), b1), depth + 1);
    out += lc_rec(blue(red(a, b1), b2), depth + 1);
    out -= lc_rec(red(a, blue(b1, b2)), depth + 1);
    out += lc_rec(red(b1, blue(a, b2)), depth + 1);
    out += lc_rec(red(blue(a, b1), b2), depth + 1);
  } else {
    if (b.is_letter()) throw InternalError("blue rewrite expects a bracket on the right: " + m.text());
    Monomial b1 = b.left(), b2 = b.right();
    out += lc_rec(blue(b1, blue(a, b2)), depth + 1);
    out += lc_rec(blue(blue(a, b1), b2), depth + 1);
  }
  lc_memo.emplace(m.text(), out);
  return out;
}

}  // namespace

MonCombo lc_normalize(const Monomial& m) { return lc_rec(m, 0); }

MonCombo lc_normalize_combo(const MonCombo& c) {
  MonCombo out;
  for (const auto& [m, k] : c) out += k * lc_normalize(m);
  return out;
}

const char* rel_kind_name(RelKind k) {
  switch (k) {
    case RelKind::S1: return "S1";
    case RelKind::S2: return "S2";
    case RelKind::J1: return "J1";
    case RelKind::J2: return "J2";
    case RelKind::MJ: return "MJ";
  }
  return "?";
}

RelKind rel_kind_from_name(const std::string& name) {
  for (RelKind k : kAllRelKinds)
    if (name == rel_kind_name(k)) return k;
  throw DomainError("unknown relation kind '" + name + "'");
}

static int slot_count(RelKind k) { return (k == RelKind::S1 || k == RelKind::S2) ? 2 : 3; }

MonCombo relation_combo(RelKind k, const std::vector<Monomial>& slots) {
  if (static_cast<int>(slots.size()) != slot_count(k))
    throw DomainError(std::string("kind ") + rel_kind_name(k) + " needs " +
                      std::to_string(slot_count(k)) + " slots");
  MonCombo out;
  switch (k) {
    case RelKind::S1:
      out.add(red(slots[0], slots[1]), 1);
      out.add(red(slots[1], slots[0]), 1);
      break;
    case RelKind::S2:
      out.add(blue(slots[0], slots[1]), 1);
      out.add(blue(slots[1], slots[0]), 1);
      break;
    case RelKind::J1:
      out.add(red(slots[0], red(slots[1], slots[2])), 1);
      out.add(red(slots[1], red(slots[2], slots[0])), 1);
      out.add(red(slots[2], red(slots[0], slots[1])), 1);
      break;
    case RelKind::J2:
      out.add(blue(slots[0], blue(slots[1], slots[2])), 1);
      out.add(blue(slots[1], blue(slots[2], slots[0])), 1);
      out.add(blue(slots[2], blue(slots[0], slots[1])), 1);
      break;
    case RelKind::MJ:
      out.add(red(slots[0], blue(slots[1], slots[2])), 1);
      out.add(red(slots[1], blue(slots[2], slots[0])), 1);
      out.add(red(slots[2], blue(slots[0], slots[1])), 1);
      out.add(blue(slots[0], red(slots[1], slots[2])), 1);
      out.add(blue(slots[1], red(slots[2], slots[0])), 1);
      out.add(blue(slots[2], red(slots[0], slots[1])), 1);
      break;
  }
  return out;
}

// Wraps each term of `inner` in the one-hole context, producing the element
// `context[inner]`.
static MonCombo wrap(const MonCombo& inner, const Monomial& context, int hole) {
  MonCombo out;
  for (const auto& [m, c] : inner) out.add(substitute(context, hole, m), c);
  return out;
}

RelationElement random_relation(RelKind k, int n, Rng& rng) {
  int s = slot_count(k);
  if (n < s)
    throw DomainError(std::string("kind ") + rel_kind_name(k) + " needs at least " +
                      std::to_string(s) + " letters");
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i + 1;
  std::shuffle(letters.begin(), letters.end(), rng);
  std::vector<std::vector<int>> parts(s);
  std::vector<int> ctx;
  for (int i = 0; i < n; ++i) {
    if (i < s)
      parts[i].push_back(letters[i]);
    else {
      int where = rand_int(0, s, rng);  // s = context pool
      if (where == s)
        ctx.push_back(letters[i]);
      else
        parts[where].push_back(letters[i]);
    }
  }
  std::vector<Monomial> slots;
  for (auto& p : parts) {
    std::sort(p.begin(), p.end());
    slots.push_back(random_monomial_on(p, rng));
  }
  MonCombo inner = relation_combo(k, slots);
  RelationElement r{k, inner, std::string(rel_kind_name(k))};
  for (const Monomial& sm : slots) r.context += " | " + sm.text();
  if (!ctx.empty()) {
    std::sort(ctx.begin(), ctx.end());
    int m = static_cast<int>(ctx.size()) + 1;
    std::vector<int> abstract(m);
    for (int i = 0; i < m; ++i) abstract[i] = i + 1;
    Monomial shape = basis_monomial(random_basis_tree(abstract, rng));
    int hole_at = rand_int(1, m, rng);
    int hole = n + 1;
    std::map<int, int> f;
    int next = 0;
    for (int i = 1; i <= m; ++i) f[i] = (i == hole_at) ? hole : ctx[next++];
    Monomial context = map_letters(shape, f);
    r.combo = wrap(inner, context, hole);
    r.context += " ; context " + context.text() + " hole x" + std::to_string(hole);
  }
  return r;
}

std::vector<RelationElement> exhaustive_relations_3(RelKind k) {
  std::vector<RelationElement> out;
  if (slot_count(k) == 3) {
    std::vector<int> perm{1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<Monomial> slots{Monomial::letter(perm[0]), Monomial::letter(perm[1]),
                                  Monomial::letter(perm[2])};
      RelationElement r{k, relation_combo(k, slots), std::string(rel_kind_name(k))};
      for (const Monomial& sm : slots) r.context += " | " + sm.text();
      out.push_back(std::move(r));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }
  // Two-slot kinds: all ordered support splits with all monomial shapes.
  for (unsigned sub = 1; sub < 7; ++sub) {
    std::vector<int> sa, sb;
    for (int i = 0; i < 3; ++i) ((sub >> i) & 1 ? sa : sb).push_back(i + 1);
    if (sb.empty()) continue;
    for (const Monomial& a : enumerate_monomials_on(sa))
      for (const Monomial& b : enumerate_monomials_on(sb)) {
        RelationElement r{k, relation_combo(k, {a, b}),
                          std::string(rel_kind_name(k)) + " | " + a.text() + " | " + b.text()};
        out.push_back(std::move(r));
      }
  }
  // One-letter contexts around the two-letter placements.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      int rest = 6 - i - j;
      MonCombo inner = relation_combo(k, {Monomial::letter(i), Monomial::letter(j)});
      for (const Monomial& shape : enumerate_monomials_on({1, 2})) {
        if (!is_basis_monomial(shape)) continue;
        for (int hole_at = 1; hole_at <= 2; ++hole_at) {
          std::map<int, int> f;
          f[hole_at] = 4;
          f[3 - hole_at] = rest;
          Monomial context = map_letters(shape, f);
          RelationElement r{k, wrap(inner, context, 4),
                            std::string(rel_kind_name(k)) + " | x" + std::to_string(i) + " | x" +
                                std::to_string(j) + " ; context " + context.text() + " hole x4"};
          out.push_back(std::move(r));
        }
      }
    }
  return out;
}

bool relation_audit(const RelationElement& r) { return lc_normalize_combo(r.combo).empty(); }

}  // namespace liebra
