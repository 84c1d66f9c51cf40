#pragma once

#include <string>
#include <vector>

#include "liebra/monomial.hpp"

namespace liebra {

// Rewrites a monomial into the distinguished basis: recurse into non-basis
// children, swap misordered brackets with a sign, and apply the fixed
// red-in-red / blue-over-red / blue-in-blue expansions at the top. Every
// output key passes is_basis_monomial; the class in the algebra is preserved.
MonCombo lc_normalize(const Monomial& m);
MonCombo lc_normalize_combo(const MonCombo& c);

// The defining identities. S* are the two antisymmetries, J* the two Jacobi
// identities, MJ the mixed Jacobi identity (six terms).
enum class RelKind { S1, S2, J1, J2, MJ };
const char* rel_kind_name(RelKind k);
RelKind rel_kind_from_name(const std::string& name);
inline constexpr RelKind kAllRelKinds[] = {RelKind::S1, RelKind::S2, RelKind::J1, RelKind::J2,
                                           RelKind::MJ};

struct RelationElement {
  RelKind kind;
  MonCombo combo;
  std::string context;  // human-readable reproducer
};

// Identity instance with the given slot monomials (2 slots for S*, 3 else).
MonCombo relation_combo(RelKind k, const std::vector<Monomial>& slots);

// Random instance on {1..n}: letters are split among the slots and an
// optional remainder that forms an enclosing one-hole context (a basis
// monomial with one leaf acting as the hole).
RelationElement random_relation(RelKind k, int n, Rng& rng);

// Every placement on the three-letter alphabet: all ordered slot supports
// and all slot monomials; for the two-slot kinds also every one-letter
// context shape and hole position.
std::vector<RelationElement> exhaustive_relations_3(RelKind k);

// True iff the element normalizes to zero.
bool relation_audit(const RelationElement& r);

}  // namespace liebra
