#include <set>

#include "doctest.h"
#include "orbitcat/instance_file.hpp"
#include "orbitcat/instances.hpp"
#include "orbitcat/orbit_cat.hpp"
#include "orbitcat/para_cat.hpp"

using namespace orbitcat;
using namespace orbitcat::orbit;

namespace {

std::string data(const std::string& name) {
  return std::string(ORBITCAT_SOURCE_DIR) + "/data/instances/" + name + ".json";
}

group::FiniteGroup dihedral4() {
  std::vector<group::Permutation> perms;
  group::Permutation r{1, 2, 3, 0}, s{0, 3, 2, 1}, p{0, 1, 2, 3};
  for (int k = 0; k < 4; ++k) {
    perms.push_back(p);
    group::Permutation ps(4), next(4);
    for (int i = 0; i < 4; ++i) ps[i] = p[s[i]];
    perms.push_back(ps);
    for (int i = 0; i < 4; ++i) next[i] = r[p[i]];
    p = next;
  }
  return group::permutation_group(perms);
}

// max{j | -f(-j) <= i} by scanning a range wide enough for small ranks.
para::ParaMorphism dual_by_scan(const para::ParaMorphism& f) {
  std::vector<para::Value> values;
  for (para::Value i = 0; i <= f.target_rank(); ++i) {
    para::Value best = -1000;
    for (para::Value j = -100; j <= 100; ++j)
      if (-f(-j) <= i) best = std::max(best, j);
    values.push_back(best);
  }
  return para::ParaMorphism(f.target_rank(), f.source_rank(), values);
}

}  // namespace

TEST_CASE("shipped instance files match the catalog") {
  for (const auto& e : instances::catalog()) {
    CAPTURE(e.name);
    const auto loaded = io::load_instance(data(e.name));
    CHECK(io::read_file(data(e.name)) == io::emit_instance(e.builder()));
    CHECK(instances::run_expected_checks(e, loaded, Execution::Serial).all_passed());
  }
}

TEST_CASE("orbit categories of several groups satisfy the category checks and the oracle") {
  for (const auto& a : {group::trivial_group(), group::cyclic_group(2), group::cyclic_group(6), group::cyclic_group(8),
                        dihedral4(), group::symmetric_group(3)}) {
    CAPTURE(a.order());
    const auto inst = orbit_category_of_group(a);
    const auto report = run_theorem(inst);
    CHECK(report.all_passed());
    CHECK(report.find("oracle-hom-counts") != nullptr);
    CHECK(inst.size() == group::all_subgroups(a).size());
  }
}

TEST_CASE("ho composition is independent of class members") {
  for (const auto& e : instances::catalog()) {
    const auto inst = e.builder();
    if (!inst.has_ho_structure()) continue;
    CAPTURE(e.name);
    for (Point x = 0; x < inst.size(); ++x)
      for (Point y = 0; y < inst.size(); ++y)
        for (Point z = 0; z < inst.size(); ++z)
          for (const auto& f : ho_hom(inst, x, y))
            for (const auto& g : ho_hom(inst, y, z)) {
              const auto composed = ho_compose(inst, g, f);
              for (const auto& fm : f.members)
                for (const auto& gm : g.members)
                  CHECK(ho_class_of(inst, compose_coset(inst, gm, fm)) == composed);
            }
  }
}

TEST_CASE("lifted duality is a contravariant involution where the tubular condition holds") {
  for (const auto& e : instances::catalog()) {
    const auto inst = e.builder();
    if (!inst.has_ho_structure() || !inst.tubular()->passed()) continue;
    CAPTURE(e.name);
    const auto& d = *inst.duality();
    const bool strict = [&] {
      for (Point x = 0; x < inst.size(); ++x)
        if (d(d(x)) != x) return false;
      return true;
    }();
    for (Point x = 0; x < inst.size(); ++x) {
      CHECK(dual_morphism(inst, ho_identity(inst, x)) == ho_identity(inst, d(x)));
      for (Point y = 0; y < inst.size(); ++y)
        for (const auto& f : ho_hom(inst, x, y)) {
          const auto df = dual_morphism(inst, f);
          CHECK(df.source == d(y));
          CHECK(df.target == d(x));
          for (const auto& m : f.members) CHECK(ho_class_of(inst, dual_member(inst, m)) == df);
          if (strict) CHECK(dual_morphism(inst, df) == f);
          for (Point z = 0; z < inst.size(); ++z)
            for (const auto& g : ho_hom(inst, y, z))
              CHECK(dual_morphism(inst, ho_compose(inst, g, f)) ==
                    ho_compose(inst, df, dual_morphism(inst, g)));
        }
    }
  }
}

TEST_CASE("paracyclic duality against a direct scan of its defining formula") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : para::enumerate(n, m, 1)) {
        CAPTURE(para::to_literal(f));
        const auto d = para::cyclic_dual(f);
        CHECK(d == dual_by_scan(f));
        CHECK(para::parse_literal(para::to_literal(d)) == d);
      }
}
