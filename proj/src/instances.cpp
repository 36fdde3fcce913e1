#include "orbitcat/instances.hpp"

#include <algorithm>

namespace orbitcat::instances {

namespace {

using group::Element;
using group::FiniteGroup;
using group::Subgroup;
using orbit::Metadata;
using orbit::OrbitInstance;
using preorder::ACosieve;
using preorder::APreorder;
using preorder::GPresheaf;
using preorder::Point;
using preorder::Relation;
using preorder::SelfDuality;

Relation diagonal(int n) {
  Relation r(n);
  for (Point x = 0; x < n; ++x) r.set(x, x);
  return r;
}

Relation total(int n) {
  Relation r(n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) r.set(x, y);
  return r;
}

SelfDuality identity_duality(int n) {
  SelfDuality d;
  for (Point x = 0; x < n; ++x) d.dual.push_back(x);
  return d;
}

Subgroup generated(const FiniteGroup& g, std::initializer_list<Element> gens) {
  const std::vector<Element> v(gens);
  return group::generate_subgroup(g, v);
}

/// A-preorder, presheaf and duality with the cosieve induced by the duality.
OrbitInstance with_induced_cosieve(xmod::CrossedModule cm, APreorder pre, GPresheaf sheaf,
                                   SelfDuality dual, Metadata meta) {
  auto cos = preorder::cosieve_from_duality(cm.source, pre, sheaf, dual);
  return OrbitInstance::make(std::move(cm), std::move(pre), std::move(sheaf), std::move(dual),
                             std::move(cos), std::move(meta));
}

std::vector<std::string> subgroup_labels(const FiniteGroup& a, const std::string& whole,
                                         const std::vector<std::pair<std::size_t, std::string>>& named) {
  std::vector<std::string> labels;
  for (const auto& s : group::all_subgroups(a)) {
    std::string label;
    for (const auto& [size, name] : named)
      if (s.size() == size) label = name;
    if (s.size() == 1) label = "1";
    else if (static_cast<int>(s.size()) == a.order()) label = whole;
    else if (label.empty()) label = "<" + a.label(s.members()[1]) + ">";
    labels.push_back(label);
  }
  return labels;
}

OrbitInstance build_trivial() {
  const auto a = group::trivial_group();
  APreorder pre{{"pt"}, total(1), group::trivial_action(a, 1)};
  GPresheaf sheaf{{group::whole_group(a)}};
  return with_induced_cosieve(xmod::conjugation_module(a), std::move(pre), std::move(sheaf),
                              identity_duality(1),
                              {"trivial", "one point over the trivial group", ""});
}

OrbitInstance build_z6_two_normals() {
  const auto a = group::cyclic_group(6);
  APreorder pre{{"H", "K"}, diagonal(2), group::trivial_action(a, 2)};
  GPresheaf sheaf{{generated(a, {2}), generated(a, {3})}};
  return with_induced_cosieve(
      xmod::conjugation_module(a), std::move(pre), std::move(sheaf), SelfDuality{{1, 0}},
      {"z6-two-normals",
       "two normal subgroups H = {0,2,4}, K = {0,3} of Z6 with HK = G, discrete order, "
       "H° = K and K° = H",
       ""});
}

OrbitInstance build_z30_primes() {
  const auto a = group::cyclic_group(30);
  APreorder pre{{"2", "3", "5"}, diagonal(3), group::trivial_action(a, 3)};
  GPresheaf sheaf{{generated(a, {2}), generated(a, {3}), generated(a, {5})}};
  return with_induced_cosieve(
      xmod::conjugation_module(a), std::move(pre), std::move(sheaf), identity_duality(3),
      {"z30-primes",
       "finite analogue of the prime example: A = Z replaced by Z30 and the primes by {2,3,5}; "
       "G_p = <p>, discrete order, p° = p, so the induced cosieve is empty",
       ""});
}

OrbitInstance build_s3_collapse() {
  const auto a = group::symmetric_group(3);
  APreorder pre{{"pt"}, total(1), group::trivial_action(a, 1)};
  GPresheaf sheaf{{generated(a, {3})}};
  return OrbitInstance::make(
      xmod::conjugation_module(a), std::move(pre), std::move(sheaf), identity_duality(1),
      ACosieve{total(1)},
      {"s3-collapse",
       "one point over S3 with G_pt = A3, pt° = pt and ⋐ = ⊑; modelled on the normal-subgroup "
       "example with G_x = H for all x",
       ""});
}

OrbitInstance build_s3_orbit() {
  const auto a = group::symmetric_group(3);
  return orbit::orbit_category_of_group(a, subgroup_labels(a, "S3", {{3, "A3"}}), "s3-orbit");
}

OrbitInstance build_z4_orbit() {
  const auto a = group::cyclic_group(4);
  return orbit::orbit_category_of_group(a, subgroup_labels(a, "Z4", {}), "z4-orbit");
}

OrbitInstance build_s3_orbit_dual() {
  const auto a = group::symmetric_group(3);
  const auto base = orbit::orbit_category_of_group(a, subgroup_labels(a, "S3", {{3, "A3"}}));
  SelfDuality dual = identity_duality(base.size());
  const Point bottom = base.preorder().find("1");
  const Point top = base.preorder().find("S3");
  dual.dual[static_cast<std::size_t>(bottom)] = top;
  dual.dual[static_cast<std::size_t>(top)] = bottom;
  return with_induced_cosieve(base.crossed_module(), base.preorder(), base.presheaf(),
                              std::move(dual),
                              {"s3-orbit-dual",
                               "subgroups of S3 under reverse inclusion with the duality "
                               "swapping 1 and S3 and fixing the rest",
                               ""});
}

// S3 acting on the three cosets of <(12)>, every stalk equal to `stalk`,
// all points isomorphic and the trivial duality.
OrbitInstance s3_on_cosets(const Subgroup& stalk, Metadata meta) {
  const auto a = group::symmetric_group(3);
  const auto action = group::coset_action(a, generated(a, {a.find_label("(12)")}));
  APreorder pre{{"p0", "p1", "p2"}, total(3), action};
  GPresheaf sheaf{{stalk, stalk, stalk}};
  return with_induced_cosieve(xmod::conjugation_module(a), std::move(pre), std::move(sheaf),
                              identity_duality(3), std::move(meta));
}

OrbitInstance build_s3_normal() {
  const auto a = group::symmetric_group(3);
  return s3_on_cosets(generated(a, {3}),
                      {"s3-normal",
                       "S3 acting on S3/<(12)> with G_x = A3 for all x, all points isomorphic "
                       "and x° = x; the induced cosieve is empty",
                       ""});
}

OrbitInstance build_s3_full() {
  const auto a = group::symmetric_group(3);
  return s3_on_cosets(group::whole_group(a),
                      {"s3-full",
                       "S3 acting on S3/<(12)> with G_x = S3 for all x, all points isomorphic "
                       "and x° = x; the induced cosieve equals ⊑",
                       ""});
}

OrbitInstance build_s3_isotropy() {
  const auto a = group::symmetric_group(3);
  const auto action = group::coset_action(a, generated(a, {a.find_label("(12)")}));
  auto [pre, sheaf] = preorder::isotropy_presheaf(a, action, {"p0", "p1", "p2"});
  return OrbitInstance::make(
      xmod::conjugation_module(a), std::move(pre), std::move(sheaf), std::nullopt, std::nullopt,
      {"s3-isotropy", "isotropy presheaf of S3 acting on S3/<(12)>, no duality", ""});
}

ExpectedCheck theorem() { return {"theorem", "", "", 0, ""}; }
ExpectedCheck hom_count(std::string from, std::string to, long n) {
  return {"hom-count", std::move(from), std::move(to), n, ""};
}
ExpectedCheck ho_count(std::string from, std::string to, long n) {
  return {"ho-class-count", std::move(from), std::move(to), n, ""};
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"trivial", "one point over the trivial group", build_trivial,
               {theorem(), hom_count("pt", "pt", 1), ho_count("pt", "pt", 1)}});
  c.push_back({"z6-two-normals",
               "two normal subgroups of Z6 exchanged by the duality",
               build_z6_two_normals,
               {theorem(), hom_count("H", "H", 2), ho_count("H", "H", 1), hom_count("K", "K", 3),
                ho_count("K", "K", 1), hom_count("H", "K", 0), {"product-order", "H", "", 6, ""}}});
  c.push_back({"z30-primes",
               "finite analogue of the prime example (Z replaced by Z30, primes by {2,3,5})",
               build_z30_primes,
               {theorem(), {"cosieve-empty", "", "", 0, ""}, hom_count("2", "2", 2),
                ho_count("2", "2", 1)}});
  c.push_back({"s3-collapse",
               "one point over S3 with stalk A3, collapsing to two ho-classes",
               build_s3_collapse,
               {theorem(), hom_count("pt", "pt", 2), ho_count("pt", "pt", 2),
                {"dual-class", "pt", "pt", 1, "(12)"}}});
  c.push_back({"s3-orbit", "orbit category of S3", build_s3_orbit,
               {theorem(), {"oracle-matches", "", "", 36, ""}, hom_count("A3", "A3", 2),
                hom_count("<(12)>", "<(12)>", 1), hom_count("S3", "1", 1),
                hom_count("1", "1", 6)}});
  c.push_back({"z4-orbit", "orbit category of Z4", build_z4_orbit,
               {theorem(), {"oracle-matches", "", "", 9, ""}, hom_count("1", "Z4", 0),
                hom_count("<2>", "<2>", 2)}});
  c.push_back({"s3-orbit-dual",
               "orbit category of S3 with the duality exchanging 1 and S3",
               build_s3_orbit_dual,
               {{"theorem-core", "", "", 0, ""}, {"tubular", "", "", 0, ""},
                ho_count("1", "1", 1), hom_count("1", "1", 6)}});
  c.push_back({"s3-normal",
               "S3/<(12)> with every stalk A3 and the trivial duality",
               build_s3_normal, {theorem(), {"cosieve-empty", "", "", 0, ""}}});
  c.push_back({"s3-full", "S3/<(12)> with every stalk S3 and the trivial duality",
               build_s3_full, {theorem(), {"cosieve-equals-leq", "", "", 0, ""}}});
  c.push_back({"s3-isotropy", "isotropy presheaf of S3 acting on S3/<(12)>",
               build_s3_isotropy, {theorem()}});
  return c;
}

Point point(const OrbitInstance& inst, const std::string& name) {
  const Point p = inst.find_point(name);
  if (p < 0) throw std::invalid_argument("no point named " + name);
  return p;
}

CheckRecord count_record(std::string id, long actual, long expected) {
  const bool ok = actual == expected;
  return {std::move(id), ok,
          "got " + std::to_string(actual) + ", expected " + std::to_string(expected), {}};
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw UnknownInstance(name);
}

OrbitInstance build(const std::string& name) { return entry(name).builder(); }

CheckRecord run_check(const OrbitInstance& inst, const ExpectedCheck& check, Execution exec) {
  const std::string where = check.from.empty() ? "" : " " + check.from + " -> " + check.to;
  const std::string id = "expect " + check.kind + where;
  try {
    if (check.kind == "theorem") {
      const auto report = orbit::run_theorem(inst, exec);
      CheckRecord rec{id, report.all_passed(),
                      std::to_string(report.records().size() - report.failures()) + "/" +
                          std::to_string(report.records().size()) + " checks pass",
                      {}};
      for (const auto& r : report.records())
        if (!r.passed) rec.witnesses.push_back(r.id + ": " + r.summary);
      return rec;
    }
    if (check.kind == "theorem-core") {
      // Everything except the tubular condition and the lifted duality.
      const auto report = orbit::run_theorem(inst, exec);
      CheckRecord rec{id, true, "", {}};
      std::size_t counted = 0;
      for (const auto& r : report.records()) {
        if (r.id == "tubular-condition" || r.id.starts_with("duality-")) continue;
        ++counted;
        if (!r.passed) {
          rec.passed = false;
          rec.witnesses.push_back(r.id + ": " + r.summary);
        }
      }
      rec.summary = std::to_string(counted - rec.witnesses.size()) + "/" +
                    std::to_string(counted) + " checks pass";
      return rec;
    }
    if (check.kind == "tubular") {
      if (!inst.has_ho_structure()) throw orbit::MissingDuality();
      const auto rec = preorder::tubular_record(*inst.tubular(), inst.crossed_module(),
                                                inst.preorder());
      CheckRecord out = count_record(id, inst.tubular()->passed() ? 1 : 0, check.expected);
      out.summary = rec.summary + (check.expected ? "" : " (expected to fail)");
      if (!out.passed) out.witnesses = rec.witnesses;
      return out;
    }
    if (check.kind == "hom-count") {
      const auto n = orbit::hom(inst, point(inst, check.from), point(inst, check.to)).size();
      return count_record(id, static_cast<long>(n), check.expected);
    }
    if (check.kind == "ho-class-count") {
      const auto n = orbit::ho_hom(inst, point(inst, check.from), point(inst, check.to)).size();
      return count_record(id, static_cast<long>(n), check.expected);
    }
    if (check.kind == "product-order") {
      if (!inst.duality()) throw orbit::MissingDuality();
      const Point x = point(inst, check.from);
      const auto prod = group::product_set(inst.source_group(), inst.stalk(x).members(),
                                           inst.stalk((*inst.duality())(x)).members());
      return count_record(id, static_cast<long>(prod.size()), check.expected);
    }
    if (check.kind == "oracle-matches") {
      long matches = 0;
      for (Point x = 0; x < inst.size(); ++x)
        for (Point y = 0; y < inst.size(); ++y)
          if (orbit::hom(inst, x, y).size() ==
              orbit::equivariant_map_count(inst.arrow_group(), inst.stalk(x), inst.stalk(y)))
            ++matches;
      return count_record(id, matches, check.expected);
    }
    if (check.kind == "cosieve-empty" || check.kind == "cosieve-equals-leq") {
      if (!inst.duality()) throw orbit::MissingDuality();
      const auto induced = preorder::cosieve_from_duality(inst.source_group(), inst.preorder(),
                                                          inst.presheaf(), *inst.duality());
      const bool ok = check.kind == "cosieve-empty" ? induced.rel.empty()
                                                     : induced.rel == inst.preorder().leq;
      return {id, ok, ok ? "holds" : "does not hold", {}};
    }
    if (check.kind == "dual-class") {
      const Point x = point(inst, check.from);
      const Point y = point(inst, check.to);
      const Element gamma = inst.source_group().find_label(check.rep);
      if (gamma < 0) throw std::invalid_argument("no element named " + check.rep);
      const auto m = orbit::ho_class_of(inst, orbit::make_coset(inst, x, y, gamma));
      const auto d = orbit::dual_morphism(inst, m);
      const auto expected_member =
          orbit::make_coset(inst, d.source, d.target, inst.source_group().inv(gamma));
      const bool contains =
          std::binary_search(d.members.begin(), d.members.end(), expected_member);
      CheckRecord rec = count_record(id, contains ? 1 : 0, check.expected);
      rec.summary = "dual of " + orbit::describe(inst, m) + " is " + orbit::describe(inst, d);
      return rec;
    }
    return {id, false, "unknown check kind", {}};
  } catch (const std::exception& e) {
    return {id, false, std::string("error: ") + e.what(), {}};
  }
}

Report run_expected_checks(const CatalogEntry& e, const OrbitInstance& inst, Execution exec) {
  Report report;
  for (const auto& check : e.checks) report.add(run_check(inst, check, exec));
  return report;
}

Report run_expected_checks(const std::string& name, Execution exec) {
  const auto& e = entry(name);
  Report report;
  try {
    const auto inst = e.builder();
    report.add({"build", true, "instance " + name + " validates", {}});
    report.append(run_expected_checks(e, inst, exec));
  } catch (const orbit::InvalidInstance& err) {
    CheckRecord rec{"build", false, "instance " + name + " fails validation", {}};
    for (const auto& r : err.report().records())
      if (!r.passed) rec.witnesses.push_back(r.id + ": " + r.summary);
    report.add(std::move(rec));
  }
  return report;
}

}  // namespace orbitcat::instances
