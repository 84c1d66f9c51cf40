#include "liebra/pairing.hpp"

#include <algorithm>

namespace liebra {

Monomial path_nadir(const Monomial& t, int i, int j) {
  if (i == j) throw DomainError("nadir needs two distinct letters");
  if (!t.contains(i) || !t.contains(j))
    throw DomainError("letter absent from monomial in nadir query");
  Monomial cur = t;
  for (;;) {
    Monomial l = cur.left();
    if (l.contains(i) && l.contains(j)) {
      cur = l;
      continue;
    }
    Monomial r = cur.right();
    if (r.contains(i) && r.contains(j)) {
      cur = r;
      continue;
    }
    return cur;
  }
}

static void check_same_alphabet(const OrientedGraph& g, const Monomial& t) {
  if (g.vertices != t.support()) throw DomainError("graph and monomial alphabets differ");
}

BetaResult beta_map(const OrientedGraph& g, const Monomial& t) {
  check_same_alphabet(g, t);
  BetaResult res;
  std::vector<std::uint64_t> seen;
  res.color_preserving = true;
  for (const Arc& a : g.edges) {
    Monomial nadir = path_nadir(t, a.src, a.dst);
    if (nadir.color() != a.c) res.color_preserving = false;
    if (nadir.right().contains(a.src)) ++res.ccw_count;
    seen.push_back(nadir.mask());
    res.assignment.emplace_back(a, nadir);
  }
  std::sort(seen.begin(), seen.end());
  bool distinct = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  res.is_bijection = distinct && g.edges.size() + 1 == static_cast<std::size_t>(t.degree());
  return res;
}

int pair_value(const OrientedGraph& g, const Monomial& t) {
  check_same_alphabet(g, t);
  if (g.edges.size() + 1 != static_cast<std::size_t>(t.degree())) return 0;
  std::vector<std::uint64_t> seen;
  seen.reserve(g.edges.size());
  int ccw = 0;
  for (const Arc& a : g.edges) {
    Monomial nadir = path_nadir(t, a.src, a.dst);
    if (nadir.color() != a.c) return 0;
    std::uint64_t id = nadir.mask();
    if (std::find(seen.begin(), seen.end(), id) != seen.end()) return 0;
    seen.push_back(id);
    if (nadir.right().contains(a.src)) ++ccw;
  }
  return (ccw & 1) ? -1 : 1;
}

long long pair_combo(const GraphCombo& gs, const MonCombo& ts) {
  long long total = 0;
  for (const auto& [g, cg] : gs)
    for (const auto& [t, ct] : ts) total += cg * ct * pair_value(g, t);
  return total;
}

bool PairingMatrix::upper_triangular() const {
  for (int i = 1; i < dim(); ++i)
    for (int j = 0; j < i; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

bool PairingMatrix::diagonal_unimodular() const {
  for (int i = 0; i < dim(); ++i)
    if (at(i, i) != 1 && at(i, i) != -1) return false;
  return true;
}

std::vector<std::pair<int, int>> PairingMatrix::lower_violations(std::size_t cap) const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < dim() && out.size() < cap; ++i)
    for (int j = 0; j < i && out.size() < cap; ++j)
      if (at(i, j) != 0) out.emplace_back(i, j);
  return out;
}

static PairingMatrix assemble(const std::vector<ColoredGraph>& order,
                              const std::vector<Monomial>& columns) {
  PairingMatrix m;
  m.order = order;
  std::size_t d = order.size();
  if (columns.size() != d) throw DomainError("column count differs from row count");
  m.entries.assign(d * d, 0);
  std::vector<OrientedGraph> rows;
  rows.reserve(d);
  for (const ColoredGraph& g : order) rows.push_back(consistent_orientation(g));
  parallel_for(d, [&](std::size_t i) {
    for (std::size_t j = 0; j < d; ++j) m.entries[i * d + j] = pair_value(rows[i], columns[j]);
  });
  return m;
}

PairingMatrix pairing_matrix(const std::vector<ColoredGraph>& order) {
  if (order.empty()) throw DomainError("empty order");
  int n = order.front().n();
  std::vector<ColoredGraph> sorted_order(order.begin(), order.end());
  std::sort(sorted_order.begin(), sorted_order.end());
  std::vector<ColoredGraph> all = enumerate_basis_trees(n);
  std::sort(all.begin(), all.end());
  if (sorted_order != all) throw DomainError("order is not a permutation of the basis trees");
  std::vector<Monomial> columns;
  columns.reserve(order.size());
  for (const ColoredGraph& g : order) columns.push_back(basis_monomial(g));
  return assemble(order, columns);
}

PairingMatrix pairing_matrix_columns(const std::vector<ColoredGraph>& order,
                                     const std::vector<Monomial>& columns) {
  return assemble(order, columns);
}

// ---- theta: identity instances at bracket sites -----------------------------

namespace {

Monomial replace_sub(const Monomial& t, const std::string& site, const Monomial& with) {
  if (t.text() == site) return with;
  if (t.is_letter()) return t;
  return Monomial::bracket(t.color(), replace_sub(t.left(), site, with),
                           replace_sub(t.right(), site, with));
}

bool site_eligible(const Monomial& s, RelKind kind) {
  switch (kind) {
    case RelKind::S1: return s.color() == Color::Red;
    case RelKind::S2: return s.color() == Color::Blue;
    case RelKind::J1:
      return s.color() == Color::Red && !s.right().is_letter() && s.right().color() == Color::Red;
    case RelKind::J2:
      return s.color() == Color::Blue && !s.right().is_letter() && s.right().color() == Color::Blue;
    case RelKind::MJ:
      return s.color() == Color::Red && !s.right().is_letter() && s.right().color() == Color::Red;
  }
  return false;
}

void collect_sites(const Monomial& t, RelKind kind, std::vector<Monomial>& out) {
  if (t.is_letter()) return;
  if (site_eligible(t, kind)) out.push_back(t);
  collect_sites(t.left(), kind, out);
  collect_sites(t.right(), kind, out);
}

RelationElement theta_at(const Monomial& t, const Monomial& site, RelKind kind) {
  RelationElement r{kind, {}, std::string(rel_kind_name(kind)) + " at " + site.text() + " in " + t.text()};
  std::vector<Monomial> slots;
  if (kind == RelKind::S1 || kind == RelKind::S2)
    slots = {site.left(), site.right()};
  else
    slots = {site.left(), site.right().left(), site.right().right()};
  MonCombo inner = relation_combo(kind, slots);
  for (const auto& [m, c] : inner) r.combo.add(replace_sub(t, site.text(), m), c);
  return r;
}

}  // namespace

std::vector<RelationElement> theta_exhaustive(int n, RelKind kind) {
  std::vector<RelationElement> out;
  for (const Monomial& t : enumerate_monomials(n)) {
    std::vector<Monomial> sites;
    collect_sites(t, kind, sites);
    for (const Monomial& s : sites) out.push_back(theta_at(t, s, kind));
  }
  return out;
}

RelationElement theta_random(RelKind kind, int n, Rng& rng) {
  int need = (kind == RelKind::S1 || kind == RelKind::S2) ? 2 : 3;
  if (n < need)
    throw DomainError(std::string("kind ") + rel_kind_name(kind) + " needs at least " +
                      std::to_string(need) + " letters");
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i + 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Monomial t = random_monomial_on(letters, rng);
    std::vector<Monomial> sites;
    collect_sites(t, kind, sites);
    if (sites.empty()) continue;
    return theta_at(t, pick(sites, rng), kind);
  }
  throw InternalError("no eligible site found after many attempts");
}

// ---- gamma: identity instances on oriented graphs ---------------------------

const char* gamma_kind_name(GammaKind k) {
  switch (k) {
    case GammaKind::S1: return "S1";
    case GammaKind::S2: return "S2";
    case GammaKind::J1: return "J1";
    case GammaKind::J2: return "J2";
    case GammaKind::MJ: return "MJ";
    case GammaKind::MultiEdge: return "multi-edge";
    case GammaKind::Disconnected: return "disconnected";
  }
  return "?";
}

namespace {

OrientedGraph with_arcs(int n, const std::vector<Arc>& arcs) {
  OrientedGraph g = OrientedGraph::on_alphabet(n);
  for (const Arc& a : arcs) g.add_edge(a.src, a.dst, a.c);
  g.normalize();
  return g;
}

GammaElement flip_element(int n, const std::vector<Arc>& arcs, std::size_t at, GammaKind kind) {
  std::vector<Arc> flipped = arcs;
  flipped[at] = Arc(arcs[at].dst, arcs[at].src, arcs[at].c);
  GammaElement e{kind, {}, ""};
  OrientedGraph h = with_arcs(n, arcs);
  e.combo.add(h, 1);
  e.combo.add(with_arcs(n, flipped), 1);
  e.context = std::string(gamma_kind_name(kind)) + " flip " + color_char(arcs[at].c) +
              std::to_string(arcs[at].src) + ">" + std::to_string(arcs[at].dst) + " in " + h.line();
  return e;
}

GammaElement jacobi_element(int n, const std::vector<Arc>& rest, int i, int j, int k, Color c,
                            GammaKind kind) {
  GammaElement e{kind, {}, ""};
  int v[3] = {i, j, k};
  for (int r = 0; r < 3; ++r) {
    std::vector<Arc> arcs = rest;
    arcs.emplace_back(v[r], v[(r + 1) % 3], c);
    arcs.emplace_back(v[(r + 1) % 3], v[(r + 2) % 3], c);
    e.combo.add(with_arcs(n, arcs), 1);
  }
  e.context = std::string(gamma_kind_name(kind)) + " at (" + std::to_string(i) + "," +
              std::to_string(j) + "," + std::to_string(k) + ")";
  return e;
}

GammaElement mixed_element(int n, const std::vector<Arc>& rest, int i, int j, int k) {
  GammaElement e{GammaKind::MJ, {}, ""};
  int v[3] = {i, j, k};
  for (int r = 0; r < 3; ++r) {
    int a = v[r], b = v[(r + 1) % 3], c = v[(r + 2) % 3];
    std::vector<Arc> first = rest, second = rest;
    first.emplace_back(a, b, Color::Blue);
    first.emplace_back(b, c, Color::Red);
    second.emplace_back(a, b, Color::Red);
    second.emplace_back(b, c, Color::Blue);
    e.combo.add(with_arcs(n, first), 1);
    e.combo.add(with_arcs(n, second), 1);
  }
  e.context = std::string("MJ at (") + std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(k) + ")";
  return e;
}

std::vector<Arc> all_arcs_3() {
  std::vector<Arc> arcs;
  for (int s = 1; s <= 3; ++s)
    for (int d = 1; d <= 3; ++d) {
      if (s == d) continue;
      arcs.emplace_back(s, d, Color::Red);
      arcs.emplace_back(s, d, Color::Blue);
    }
  return arcs;
}

Arc random_arc(int n, Rng& rng) {
  int s = rand_int(1, n, rng);
  int d = rand_int(1, n - 1, rng);
  if (d >= s) ++d;
  return Arc(s, d, rand_int(0, 1, rng) ? Color::Blue : Color::Red);
}

}  // namespace

std::vector<GammaElement> gamma_exhaustive_3(GammaKind kind) {
  std::vector<GammaElement> out;
  std::vector<Arc> u = all_arcs_3();
  Color flip_color = kind == GammaKind::S1 ? Color::Red : Color::Blue;
  switch (kind) {
    case GammaKind::S1:
    case GammaKind::S2:
      for (std::size_t x = 0; x < u.size(); ++x)
        for (std::size_t y = x; y < u.size(); ++y) {
          std::vector<Arc> arcs{u[x], u[y]};
          for (std::size_t at = 0; at < 2; ++at) {
            if (at == 1 && x == y) continue;
            if (arcs[at].c != flip_color) continue;
            out.push_back(flip_element(3, arcs, at, kind));
          }
        }
      break;
    case GammaKind::J1:
    case GammaKind::J2: {
      std::vector<int> perm{1, 2, 3};
      do {
        out.push_back(jacobi_element(3, {}, perm[0], perm[1], perm[2],
                                     kind == GammaKind::J1 ? Color::Red : Color::Blue, kind));
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case GammaKind::MJ: {
      std::vector<int> perm{1, 2, 3};
      do {
        out.push_back(mixed_element(3, {}, perm[0], perm[1], perm[2]));
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case GammaKind::MultiEdge:
      for (std::size_t x = 0; x < u.size(); ++x)
        for (std::size_t y = x; y < u.size(); ++y) {
          if (std::min(u[x].src, u[x].dst) != std::min(u[y].src, u[y].dst) ||
              std::max(u[x].src, u[x].dst) != std::max(u[y].src, u[y].dst))
            continue;
          GammaElement e{kind, {}, ""};
          OrientedGraph h = with_arcs(3, {u[x], u[y]});
          e.combo.add(h, 1);
          e.context = "multi-edge " + h.line();
          out.push_back(std::move(e));
        }
      break;
    case GammaKind::Disconnected:
      for (std::size_t x = 0; x < u.size(); ++x)
        for (std::size_t y = x; y < u.size(); ++y) {
          OrientedGraph h = with_arcs(3, {u[x], u[y]});
          if (components(h).size() == 1) continue;
          GammaElement e{kind, {}, "disconnected " + h.line()};
          e.combo.add(h, 1);
          out.push_back(std::move(e));
        }
      break;
  }
  return out;
}

GammaElement gamma_random(GammaKind kind, int n, Rng& rng) {
  if (n < 3) throw DomainError("graph relation sampling needs at least 3 letters");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  switch (kind) {
    case GammaKind::S1:
    case GammaKind::S2: {
      std::vector<Arc> arcs;
      for (int i = 0; i < n - 1; ++i) arcs.push_back(random_arc(n, rng));
      std::size_t at = static_cast<std::size_t>(rand_int(0, n - 2, rng));
      arcs[at] = Arc(arcs[at].src, arcs[at].dst, kind == GammaKind::S1 ? Color::Red : Color::Blue);
      return flip_element(n, arcs, at, kind);
    }
    case GammaKind::J1:
    case GammaKind::J2: {
      std::vector<Arc> rest;
      for (int i = 0; i < n - 3; ++i) rest.push_back(random_arc(n, rng));
      return jacobi_element(n, rest, perm[0], perm[1], perm[2],
                            kind == GammaKind::J1 ? Color::Red : Color::Blue, kind);
    }
    case GammaKind::MJ: {
      std::vector<Arc> rest;
      for (int i = 0; i < n - 3; ++i) rest.push_back(random_arc(n, rng));
      return mixed_element(n, rest, perm[0], perm[1], perm[2]);
    }
    case GammaKind::MultiEdge: {
      int u = std::min(perm[0], perm[1]), v = std::max(perm[0], perm[1]);
      std::vector<Arc> arcs;
      for (int i = 0; i < 2; ++i) {
        bool fwd = rand_int(0, 1, rng);
        arcs.emplace_back(fwd ? u : v, fwd ? v : u, rand_int(0, 1, rng) ? Color::Blue : Color::Red);
      }
      for (int i = 0; i < n - 3; ++i) arcs.push_back(random_arc(n, rng));
      GammaElement e{kind, {}, ""};
      OrientedGraph h = with_arcs(n, arcs);
      e.combo.add(h, 1);
      e.context = "multi-edge " + h.line();
      return e;
    }
    case GammaKind::Disconnected: {
      int skip = perm[0];
      std::vector<Arc> arcs;
      for (int i = 0; i < n - 1; ++i) {
        Arc a = random_arc(n, rng);
        while (a.src == skip || a.dst == skip) a = random_arc(n, rng);
        arcs.push_back(a);
      }
      GammaElement e{kind, {}, ""};
      OrientedGraph h = with_arcs(n, arcs);
      e.combo.add(h, 1);
      e.context = "disconnected " + h.line();
      return e;
    }
  }
  throw InternalError("unreachable");
}

}  // namespace liebra
