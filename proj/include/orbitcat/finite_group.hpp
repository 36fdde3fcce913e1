#pragma once

// Finite groups given by multiplication tables, with the subgroup and coset
// calculus used by presheaves and the orbit category.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitcat/report.hpp"

namespace orbitcat::group {

/// Index of a group element; the identity is always 0.
using Element = int;
/// Sorted, duplicate-free set of elements.
using ElementSet = std::vector<Element>;
/// Images of 0..k-1.
using Permutation = std::vector<int>;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FiniteGroup {
 public:
  /// Validates closure, associativity, identity at index 0 and inverses.
  /// Labels default to the decimal element indices.
  explicit FiniteGroup(std::vector<std::vector<Element>> table,
                       std::vector<std::string> labels = {});

  int order() const noexcept { return static_cast<int>(table_.size()); }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<Element>>& table() const noexcept { return table_; }
  const std::vector<Element>& inverses() const noexcept { return inverse_; }

  bool contains(Element a) const noexcept { return a >= 0 && a < order(); }
  /// Element with the given label, or -1.
  Element find_label(const std::string& label) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
/// Symmetric group on {1..k}; elements in lexicographic order of their
/// image tuples (identity first), labelled in cycle notation.
FiniteGroup symmetric_group(int k);
/// Group of the given permutations under composition (p*q applies q first).
/// The set must be closed and contain the identity.
FiniteGroup permutation_group(std::vector<Permutation> perms);

std::string cycle_notation(const Permutation& p);

class Subgroup {
 public:
  /// Throws GroupError unless members form a subgroup of g.
  static Subgroup from_members(const FiniteGroup& g, ElementSet members);

  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element a) const { return a >= 0 && a < static_cast<Element>(mask_.size()) && mask_[a]; }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) { return a.members_ <=> b.members_; }

 private:
  Subgroup(ElementSet members, std::size_t order);

  ElementSet members_;
  std::vector<char> mask_;
};

bool is_subgroup(const FiniteGroup& g, const ElementSet& members);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);

/// Smallest subgroup containing gens, by breadth-first closure.
Subgroup generate_subgroup(const FiniteGroup& g, std::span<const Element> gens);

/// Left cosets aH, ordered by their canonical (minimal) representative.
std::vector<ElementSet> cosets(const FiniteGroup& g, const Subgroup& h);
/// Minimal element of aH.
Element coset_rep(const FiniteGroup& g, const Subgroup& h, Element a);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup conjugate_subgroup(const FiniteGroup& g, Element a, const Subgroup& h);
ElementSet product_set(const FiniteGroup& g, const ElementSet& left, const ElementSet& right);
ElementSet intersection(const ElementSet& a, const ElementSet& b);

/// All subgroups, ordered by size and then lexicographically by members.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

std::string format_set(const FiniteGroup& g, const ElementSet& s);

/// A homomorphism given by the images of the domain elements.
struct GroupHom {
  std::vector<Element> map;
  Element operator()(Element a) const { return map[a]; }
};

ValidationReport validate_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                              const GroupHom& hom);

/// Left action of a group on {0..set_size-1}, one permutation per element.
struct GroupAction {
  int set_size = 0;
  std::vector<Permutation> perms;

  int apply(Element g, int x) const { return perms[g][x]; }

  friend bool operator==(const GroupAction&, const GroupAction&) = default;
};

GroupAction trivial_action(const FiniteGroup& g, int set_size);
/// Action on the left cosets of h by left translation; points in the order
/// of cosets(g, h).
GroupAction coset_action(const FiniteGroup& g, const Subgroup& h);

/// Structural checks (sizes, ranges, bijectivity) and the action axioms.
ValidationReport validate_action(const FiniteGroup& g, const GroupAction& action);

}  // namespace orbitcat::group
