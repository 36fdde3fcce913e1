#pragma once

// A-preorders carrying a G-presheaf, an A-self-duality and an A-cosieve,
// together with exhaustive validators and the lemma checks built on them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitcat/crossed_module.hpp"
#include "orbitcat/finite_group.hpp"
#include "orbitcat/report.hpp"

namespace orbitcat::preorder {

using group::Element;
using group::FiniteGroup;
using group::GroupAction;
using group::Subgroup;
using xmod::CrossedModule;

/// Index into the underlying set S.
using Point = int;

/// Square boolean matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int size) : size_(size), bits_(static_cast<std::size_t>(size) * size, 0) {}
  explicit Relation(const std::vector<std::vector<bool>>& rows);

  int size() const noexcept { return size_; }
  bool operator()(Point x, Point y) const { return bits_[index(x, y)] != 0; }
  void set(Point x, Point y, bool value = true) { bits_[index(x, y)] = value ? 1 : 0; }
  bool empty() const;
  std::vector<std::vector<bool>> rows() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t index(Point x, Point y) const { return static_cast<std::size_t>(x) * size_ + y; }

  int size_ = 0;
  std::vector<char> bits_;
};

/// The preorder ⊑ on labelled points, with a monotone action of A.
struct APreorder {
  std::vector<std::string> elements;
  Relation leq;
  GroupAction action;

  int size() const { return static_cast<int>(elements.size()); }
  bool le(Point x, Point y) const { return leq(x, y); }
  /// x ~ y: mutual ⊑.
  bool iso(Point x, Point y) const { return leq(x, y) && leq(y, x); }
  Point act(Element g, Point x) const { return action.apply(g, x); }
  /// Point with the given label, or -1.
  Point find(const std::string& label) const;

  friend bool operator==(const APreorder&, const APreorder&) = default;
};

/// x |-> G_x.
struct GPresheaf {
  std::vector<Subgroup> stalks;

  const Subgroup& operator[](Point x) const { return stalks[static_cast<std::size_t>(x)]; }
  friend bool operator==(const GPresheaf&, const GPresheaf&) = default;
};

/// x |-> x°.
struct SelfDuality {
  std::vector<Point> dual;

  Point operator()(Point x) const { return dual[static_cast<std::size_t>(x)]; }
  bool strict_involution() const;
  friend bool operator==(const SelfDuality&, const SelfDuality&) = default;
};

/// The relation ⋐.
struct ACosieve {
  Relation rel;

  bool operator()(Point x, Point y) const { return rel(x, y); }
  friend bool operator==(const ACosieve&, const ACosieve&) = default;
};

/// Reflexivity, transitivity and monotonicity of the action. A non-transitive
/// relation is reported, never closed.
ValidationReport validate_preorder(const FiniteGroup& arrows, const APreorder& pre);

/// G_{gx} = act(g)(G_x) and x ⊑ y => G_y ⊆ G_x.
ValidationReport validate_presheaf(const CrossedModule& cm, const APreorder& pre,
                                   const GPresheaf& sheaf);

/// x ~ x°°, x ⊑ y <=> y° ⊑ x°, (gx)° ~ g(x°).
ValidationReport validate_duality(const FiniteGroup& arrows, const APreorder& pre,
                                  const SelfDuality& duality);

/// x ⋐ y => x ⊑ y, x ⋐ y => gx ⋐ gy, x ⋐ y ⊑ z => x ⋐ z.
ValidationReport validate_cosieve(const FiniteGroup& arrows, const APreorder& pre,
                                  const ACosieve& cosieve);

/// For A = G acting on itself by conjugation and an A-set: stabilizers as
/// stalks and x ⊑ y <=> A_y ⊆ A_x.
std::pair<APreorder, GPresheaf> isotropy_presheaf(const FiniteGroup& a, const GroupAction& action,
                                                  std::vector<std::string> labels = {});

/// x ⋐° y <=> x ⊑ y and <G_{y°} ∪ G_x> = G.
ACosieve cosieve_from_duality(const FiniteGroup& g, const APreorder& pre, const GPresheaf& sheaf,
                              const SelfDuality& duality);

/// N_G(G_x) = N_G(G_{x°}) for every x.
CheckRecord check_normalizer_lemma(const FiniteGroup& g, const APreorder& pre,
                                   const GPresheaf& sheaf, const SelfDuality& duality);

/// G_x G_{x°} = G_{x°} G_x is a subgroup, of order |G_x||G_{x°}| when the
/// stalks meet trivially.
CheckRecord check_product_corollary(const FiniteGroup& g, const APreorder& pre,
                                    const GPresheaf& sheaf, const SelfDuality& duality);

/// y ~ z => (x ⋐ y <=> x ⋐ z).
CheckRecord check_cosieve_iso_invariance(const APreorder& pre, const ACosieve& cosieve);

struct TubularWitness {
  Point b, c, d;
  Element rho;
  Point a;
};

struct TubularFailure {
  Point b, c, d;
};

struct TubularReport {
  std::size_t triples = 0;
  std::vector<TubularWitness> witnesses;
  std::vector<TubularFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// For every (b, c, d) with c ⋐ b° and d ⋐ b°, looks for rho in G_c ∩ G_d and
/// a with rho ▷ a ~ b and a ⋐ b. Witnesses use the smallest rho, then a.
TubularReport check_tubular_condition(const CrossedModule& cm, const APreorder& pre,
                                      const GPresheaf& sheaf, const SelfDuality& duality,
                                      const ACosieve& cosieve);

CheckRecord tubular_record(const TubularReport& report, const CrossedModule& cm,
                           const APreorder& pre);

}  // namespace orbitcat::preorder
