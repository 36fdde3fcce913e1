#pragma once

#include <vector>

#include "orbitcat/finite_group.hpp"
#include "orbitcat/report.hpp"

namespace orbitcat::xmod {

using group::Element;
using group::FiniteGroup;
using group::Permutation;

/// A strict 2-group as a crossed module: t: G -> A and an action of A on G
/// by automorphisms. A 2-cell g => h is a gamma in G with t(gamma) = h g^-1.
struct CrossedModule {
  FiniteGroup source;              // G
  FiniteGroup arrows;              // A
  std::vector<Element> target;     // t, indexed by elements of G
  std::vector<Permutation> action; // act(h) as a permutation of G, per h in A

  Element t(Element gamma) const { return target[gamma]; }
  Element act(Element h, Element gamma) const { return action[h][gamma]; }

  friend bool operator==(const CrossedModule&, const CrossedModule&) = default;
};

/// Empty iff cm is a crossed module. Size/range problems are reported as
/// structural violations and stop the axiom scan.
ValidationReport validate(const CrossedModule& cm);

/// G = A, t = id, act(h)(g) = h g h^-1.
CrossedModule conjugation_module(const FiniteGroup& a);

/// Crossed module with trivial G: t and act trivial.
CrossedModule trivial_source_module(const FiniteGroup& a);

/// gamma ▷ x := t(gamma) x for an action of A on a set.
inline int triv_action(const CrossedModule& cm, Element gamma, int x,
                       const group::GroupAction& on_set) {
  return on_set.apply(cm.t(gamma), x);
}

/// Scan that the image of t is normal in A and ker t is central in G.
CheckRecord check_classical_consequences(const CrossedModule& cm);

}  // namespace orbitcat::xmod
