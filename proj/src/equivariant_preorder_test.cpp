#include "orbitcat/equivariant_preorder.hpp"

#include <set>

#include "doctest.h"
#include "orbitcat/instances.hpp"

using namespace orbitcat;
using namespace orbitcat::preorder;
using group::ElementSet;
using group::symmetric_group;

namespace {

std::set<std::string> axioms(const ValidationReport& r) {
  std::set<std::string> out;
  for (const auto& v : r) out.insert(v.axiom);
  return out;
}

Relation from_rows(std::vector<std::vector<bool>> rows) { return Relation(rows); }

// Smallest subgroup containing s, as the intersection of all subgroups
// containing it.
ElementSet join_by_lattice(const FiniteGroup& g, const ElementSet& s) {
  ElementSet best;
  for (const auto& h : group::all_subgroups(g))
    if (std::includes(h.members().begin(), h.members().end(), s.begin(), s.end()) &&
        (best.empty() || h.size() < best.size()))
      best = h.members();
  return best;
}

// Tubular condition straight from the quantifiers.
bool tubular_by_definition(const orbit::OrbitInstance& inst) {
  const auto& pre = inst.preorder();
  const auto& d = *inst.duality();
  const auto& cos = *inst.cosieve();
  for (Point b = 0; b < inst.size(); ++b)
    for (Point c = 0; c < inst.size(); ++c)
      for (Point e = 0; e < inst.size(); ++e) {
        if (!cos(c, d(b)) || !cos(e, d(b))) continue;
        bool found = false;
        for (Element rho = 0; rho < inst.source_group().order(); ++rho) {
          if (!inst.stalk(c).contains(rho) || !inst.stalk(e).contains(rho)) continue;
          for (Point a = 0; a < inst.size(); ++a)
            if (pre.iso(inst.triangle(rho, a), b) && cos(a, b)) found = true;
        }
        if (!found) return false;
      }
  return true;
}

struct Chain {
  FiniteGroup a = group::trivial_group();
  APreorder pre;
};

// 0 ⊑ 1 ⊑ 2 under the trivial group.
Chain chain3() {
  Chain c;
  c.pre = APreorder{{"a", "b", "c"},
                    from_rows({{true, true, true}, {false, true, true}, {false, false, true}}),
                    group::trivial_action(c.a, 3)};
  return c;
}

}  // namespace

TEST_CASE("relation basics") {
  Relation r(2);
  CHECK(r.empty());
  r.set(0, 1);
  CHECK(r(0, 1));
  CHECK_FALSE(r(1, 0));
  CHECK(Relation(r.rows()) == r);
  CHECK_THROWS_AS(Relation(std::vector<std::vector<bool>>{{true, false}, {true}}),
                  std::invalid_argument);
}

TEST_CASE("preorder validation") {
  auto c = chain3();
  CHECK(validate_preorder(c.a, c.pre).empty());
  CHECK(c.pre.iso(1, 1));
  CHECK_FALSE(c.pre.iso(0, 1));
  CHECK(c.pre.find("b") == 1);
  CHECK(c.pre.find("z") == -1);

  auto nonrefl = c.pre;
  nonrefl.leq.set(1, 1, false);
  CHECK(axioms(validate_preorder(c.a, nonrefl)).contains("reflexive"));

  auto nontrans = c.pre;
  nontrans.leq.set(0, 2, false);
  const auto report = validate_preorder(c.a, nontrans);
  CHECK(axioms(report) == std::set<std::string>{"transitive"});
  CHECK(report.front().witness == "x=a y=b z=c");
}

TEST_CASE("a non-monotone action is rejected") {
  const auto z2 = group::cyclic_group(2);
  APreorder pre{{"a", "b"}, from_rows({{true, true}, {false, true}}),
                group::GroupAction{2, {{0, 1}, {1, 0}}}};
  CHECK(axioms(validate_preorder(z2, pre)).contains("monotone-action"));
  pre.leq.set(1, 0);
  CHECK(validate_preorder(z2, pre).empty());
}

TEST_CASE("structural preorder problems") {
  auto c = chain3();
  auto bad = c.pre;
  bad.elements.pop_back();
  CHECK(has_structural(validate_preorder(c.a, bad)));
  bad = c.pre;
  bad.action.perms[0] = {0, 0, 1};
  CHECK(has_structural(validate_preorder(c.a, bad)));
}

TEST_CASE("isotropy presheaf matches stabilizers") {
  const auto s3 = symmetric_group(3);
  const auto c2 = group::Subgroup::from_members(s3, {0, s3.find_label("(12)")});
  for (const auto& action : {group::coset_action(s3, c2), group::coset_action(s3, group::whole_group(s3)),
                             group::coset_action(s3, group::trivial_subgroup(s3))}) {
    const auto [pre, sheaf] = isotropy_presheaf(s3, action);
    const auto cm = xmod::conjugation_module(s3);
    CHECK(validate_preorder(s3, pre).empty());
    CHECK(validate_presheaf(cm, pre, sheaf).empty());
    for (Point x = 0; x < pre.size(); ++x) {
      ElementSet stab;
      for (Element g = 0; g < s3.order(); ++g)
        if (action.apply(g, x) == x) stab.push_back(g);
      CHECK(sheaf[x].members() == stab);
      for (Point y = 0; y < pre.size(); ++y)
        CHECK(pre.le(x, y) == sheaf[y].is_subset_of(sheaf[x]));
    }
  }
}

TEST_CASE("presheaf validation catches broken stalks") {
  const auto s3 = symmetric_group(3);
  const auto cm = xmod::conjugation_module(s3);
  const auto c2 = group::Subgroup::from_members(s3, {0, s3.find_label("(12)")});
  auto [pre, sheaf] = isotropy_presheaf(s3, group::coset_action(s3, c2));
  auto same = sheaf;
  same.stalks[1] = same.stalks[0];
  CHECK(axioms(validate_presheaf(cm, pre, same)).contains("equivariant"));
  auto short_sheaf = sheaf;
  short_sheaf.stalks.pop_back();
  CHECK(has_structural(validate_presheaf(cm, pre, short_sheaf)));

  auto c = chain3();
  const auto triv = xmod::conjugation_module(c.a);
  const auto z = group::whole_group(c.a);
  CHECK(validate_presheaf(triv, c.pre, GPresheaf{{z, z, z}}).empty());

  const auto z2 = group::cyclic_group(2);
  const auto cm2 = xmod::conjugation_module(z2);
  APreorder p2{{"a", "b"}, from_rows({{true, true}, {false, true}}), group::trivial_action(z2, 2)};
  GPresheaf wrong{{group::trivial_subgroup(z2), group::whole_group(z2)}};
  CHECK(axioms(validate_presheaf(cm2, p2, wrong)).contains("antitone"));
  GPresheaf right{{group::whole_group(z2), group::trivial_subgroup(z2)}};
  CHECK(validate_presheaf(cm2, p2, right).empty());
}

TEST_CASE("duality validation") {
  auto c = chain3();
  CHECK(validate_duality(c.a, c.pre, SelfDuality{{2, 1, 0}}).empty());
  CHECK(SelfDuality{{2, 1, 0}}.strict_involution());
  CHECK(axioms(validate_duality(c.a, c.pre, SelfDuality{{0, 1, 2}})).contains("order-reversing"));
  CHECK(axioms(validate_duality(c.a, c.pre, SelfDuality{{2, 2, 0}})).contains("double-dual-iso"));
  CHECK(has_structural(validate_duality(c.a, c.pre, SelfDuality{{2, 1}})));
  CHECK(has_structural(validate_duality(c.a, c.pre, SelfDuality{{2, 1, 3}})));

  // Up to ~ suffices: two isomorphic points may be swapped.
  APreorder twins{{"p", "q"}, from_rows({{true, true}, {true, true}}), group::trivial_action(c.a, 2)};
  const SelfDuality collapse{{0, 0}};
  CHECK_FALSE(collapse.strict_involution());
  CHECK(validate_duality(c.a, twins, collapse).empty());

  const auto z2 = group::cyclic_group(2);
  APreorder swap{{"p", "q"}, from_rows({{true, false}, {false, true}}),
                 group::GroupAction{2, {{0, 1}, {1, 0}}}};
  CHECK(axioms(validate_duality(z2, swap, SelfDuality{{0, 0}})).contains("equivariant-up-to-iso"));
  CHECK(validate_duality(z2, swap, SelfDuality{{1, 0}}).empty());
}

TEST_CASE("cosieve validation") {
  auto c = chain3();
  CHECK(validate_cosieve(c.a, c.pre, ACosieve{c.pre.leq}).empty());
  CHECK(validate_cosieve(c.a, c.pre, ACosieve{Relation(3)}).empty());
  ACosieve only{Relation(3)};
  only.rel.set(0, 1);
  CHECK(axioms(validate_cosieve(c.a, c.pre, only)) == std::set<std::string>{"upward-closed"});
  only.rel.set(0, 2);
  CHECK(validate_cosieve(c.a, c.pre, only).empty());
  ACosieve down{Relation(3)};
  down.rel.set(2, 0);
  CHECK(axioms(validate_cosieve(c.a, c.pre, down)).contains("contained-in-leq"));
  CHECK(has_structural(validate_cosieve(c.a, c.pre, ACosieve{Relation(2)})));

  const auto z2 = group::cyclic_group(2);
  APreorder swap{{"p", "q"}, from_rows({{true, false}, {false, true}}),
                 group::GroupAction{2, {{0, 1}, {1, 0}}}};
  ACosieve one{Relation(2)};
  one.rel.set(0, 0);
  CHECK(axioms(validate_cosieve(z2, swap, one)).contains("equivariant"));
}

TEST_CASE("cosieve induced by a duality matches the join by lattice") {
  for (const auto& name : {"z6-two-normals", "z30-primes", "s3-orbit-dual", "s3-normal", "s3-full"}) {
    const auto inst = instances::build(name);
    const auto& g = inst.source_group();
    const auto& d = *inst.duality();
    const auto induced = cosieve_from_duality(g, inst.preorder(), inst.presheaf(), d);
    CHECK(validate_cosieve(inst.arrow_group(), inst.preorder(), induced).empty());
    for (Point x = 0; x < inst.size(); ++x)
      for (Point y = 0; y < inst.size(); ++y) {
        ElementSet u;
        std::set_union(inst.stalk(d(y)).members().begin(), inst.stalk(d(y)).members().end(),
                       inst.stalk(x).members().begin(), inst.stalk(x).members().end(),
                       std::back_inserter(u));
        const bool expected = inst.preorder().le(x, y) &&
                              join_by_lattice(g, u).size() == static_cast<std::size_t>(g.order());
        CHECK(induced(x, y) == expected);
      }
  }
}

TEST_CASE("degenerate induced cosieves") {
  auto induced = [](const char* name) {
    const auto inst = instances::build(name);
    return cosieve_from_duality(inst.source_group(), inst.preorder(), inst.presheaf(),
                                *inst.duality());
  };
  CHECK(induced("z30-primes").rel.empty());
  CHECK(induced("s3-normal").rel.empty());
  CHECK(induced("s3-full").rel == instances::build("s3-full").preorder().leq);
}

TEST_CASE("normalizer lemma and product corollary on dual instances") {
  for (const auto& entry : instances::catalog()) {
    const auto inst = entry.builder();
    if (!inst.duality()) continue;
    CAPTURE(entry.name);
    CHECK(check_normalizer_lemma(inst.source_group(), inst.preorder(), inst.presheaf(), *inst.duality()).passed);
    CHECK(check_product_corollary(inst.source_group(), inst.preorder(), inst.presheaf(), *inst.duality()).passed);
  }
}

TEST_CASE("normalizer lemma detects a duality that breaks it") {
  // Not a valid duality on the orbit preorder, but the check is a scan.
  const auto inst = instances::build("s3-orbit");
  SelfDuality d;
  for (Point x = 0; x < inst.size(); ++x) d.dual.push_back(x);
  std::swap(d.dual[static_cast<std::size_t>(inst.preorder().find("<(12)>"))],
            d.dual[static_cast<std::size_t>(inst.preorder().find("A3"))]);
  const auto rec = check_normalizer_lemma(inst.source_group(), inst.preorder(), inst.presheaf(), d);
  CHECK_FALSE(rec.passed);
  CHECK_FALSE(rec.witnesses.empty());
}

TEST_CASE("cosieve iso invariance") {
  for (const auto& entry : instances::catalog()) {
    const auto inst = entry.builder();
    if (!inst.cosieve()) continue;
    CHECK(check_cosieve_iso_invariance(inst.preorder(), *inst.cosieve()).passed);
  }
}

TEST_CASE("tubular condition agrees with the direct quantifier scan") {
  for (const auto& entry : instances::catalog()) {
    const auto inst = entry.builder();
    if (!inst.has_ho_structure()) continue;
    CAPTURE(entry.name);
    CHECK(inst.tubular()->passed() == tubular_by_definition(inst));
    for (const auto& w : inst.tubular()->witnesses) {
      CHECK(inst.stalk(w.c).contains(w.rho));
      CHECK(inst.stalk(w.d).contains(w.rho));
      CHECK(inst.preorder().iso(inst.triangle(w.rho, w.a), w.b));
      CHECK((*inst.cosieve())(w.a, w.b));
    }
  }
  CHECK_FALSE(instances::build("s3-orbit-dual").tubular()->passed());
}

TEST_CASE("tubular witnesses on the collapse instance") {
  const auto inst = instances::build("s3-collapse");
  const auto& rep = *inst.tubular();
  CHECK(rep.passed());
  CHECK(rep.triples == 1);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].rho == 0);
  CHECK(rep.witnesses[0].a == 0);
  const auto rec = tubular_record(rep, inst.crossed_module(), inst.preorder());
  CHECK(rec.passed);
  CHECK(rec.witnesses == std::vector<std::string>{"b=pt c=pt d=pt rho=() a=pt"});
}
