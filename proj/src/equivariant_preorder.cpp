#include "orbitcat/equivariant_preorder.hpp"

#include <algorithm>
#include <numeric>

namespace orbitcat::preorder {

Relation::Relation(const std::vector<std::vector<bool>>& rows)
    : Relation(static_cast<int>(rows.size())) {
  for (int x = 0; x < size_; ++x) {
    if (static_cast<int>(rows[x].size()) != size_)
      throw std::invalid_argument("relation matrix is not square");
    for (int y = 0; y < size_; ++y) set(x, y, rows[x][y]);
  }
}

bool Relation::empty() const {
  return std::none_of(bits_.begin(), bits_.end(), [](char b) { return b != 0; });
}

std::vector<std::vector<bool>> Relation::rows() const {
  std::vector<std::vector<bool>> out(size_, std::vector<bool>(size_));
  for (int x = 0; x < size_; ++x)
    for (int y = 0; y < size_; ++y) out[x][y] = (*this)(x, y);
  return out;
}

Point APreorder::find(const std::string& label) const {
  auto it = std::find(elements.begin(), elements.end(), label);
  return it == elements.end() ? -1 : static_cast<Point>(it - elements.begin());
}

bool SelfDuality::strict_involution() const {
  for (std::size_t x = 0; x < dual.size(); ++x)
    if ((*this)((*this)(static_cast<Point>(x))) != static_cast<Point>(x)) return false;
  return true;
}

namespace {

std::string pts(const APreorder& pre, std::initializer_list<std::pair<const char*, Point>> items) {
  std::string out;
  for (const auto& [name, p] : items) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + "=" + pre.elements[static_cast<std::size_t>(p)];
  }
  return out;
}

}  // namespace

ValidationReport validate_preorder(const FiniteGroup& arrows, const APreorder& pre) {
  ValidationReport report;
  const int n = pre.size();
  if (pre.leq.size() != n)
    report.push_back({ViolationKind::Structural, "leq-size",
                      "matrix is " + std::to_string(pre.leq.size()) + "x" +
                          std::to_string(pre.leq.size()) + " for " + std::to_string(n) + " elements"});
  if (pre.action.set_size != n)
    report.push_back({ViolationKind::Structural, "action-size",
                      "action on " + std::to_string(pre.action.set_size) + " points for " +
                          std::to_string(n) + " elements"});
  if (!report.empty()) return report;
  for (auto& v : group::validate_action(arrows, pre.action)) report.push_back(std::move(v));
  if (has_structural(report)) return report;

  for (Point x = 0; x < n; ++x)
    if (!pre.le(x, x)) report.push_back({ViolationKind::Axiom, "reflexive", pts(pre, {{"x", x}})});
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z)
        if (pre.le(x, y) && pre.le(y, z) && !pre.le(x, z))
          report.push_back(
              {ViolationKind::Axiom, "transitive", pts(pre, {{"x", x}, {"y", y}, {"z", z}})});
  for (Element g = 0; g < arrows.order(); ++g)
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y)
        if (pre.le(x, y) && !pre.le(pre.act(g, x), pre.act(g, y)))
          report.push_back({ViolationKind::Axiom, "monotone-action",
                            "g=" + arrows.label(g) + " " + pts(pre, {{"x", x}, {"y", y}})});
  return report;
}

ValidationReport validate_presheaf(const CrossedModule& cm, const APreorder& pre,
                                   const GPresheaf& sheaf) {
  ValidationReport report;
  const auto& g = cm.source;
  if (static_cast<int>(sheaf.stalks.size()) != pre.size()) {
    report.push_back({ViolationKind::Structural, "presheaf-size",
                      std::to_string(sheaf.stalks.size()) + " stalks for " +
                          std::to_string(pre.size()) + " elements"});
    return report;
  }
  for (Point x = 0; x < pre.size(); ++x)
    if (!group::is_subgroup(g, sheaf[x].members()))
      report.push_back({ViolationKind::Structural, "stalk-subgroup", pts(pre, {{"x", x}})});
  if (!report.empty()) return report;

  for (Element h = 0; h < cm.arrows.order(); ++h)
    for (Point x = 0; x < pre.size(); ++x) {
      group::ElementSet image;
      for (Element gamma : sheaf[x].members()) image.push_back(cm.act(h, gamma));
      std::sort(image.begin(), image.end());
      if (image != sheaf[pre.act(h, x)].members())
        report.push_back({ViolationKind::Axiom, "equivariant",
                          "g=" + cm.arrows.label(h) + " " + pts(pre, {{"x", x}})});
    }
  for (Point x = 0; x < pre.size(); ++x)
    for (Point y = 0; y < pre.size(); ++y)
      if (pre.le(x, y) && !sheaf[y].is_subset_of(sheaf[x]))
        report.push_back({ViolationKind::Axiom, "antitone", pts(pre, {{"x", x}, {"y", y}})});
  return report;
}

ValidationReport validate_duality(const FiniteGroup& arrows, const APreorder& pre,
                                  const SelfDuality& duality) {
  ValidationReport report;
  const int n = pre.size();
  if (static_cast<int>(duality.dual.size()) != n) {
    report.push_back({ViolationKind::Structural, "duality-size",
                      std::to_string(duality.dual.size()) + " entries for " + std::to_string(n) +
                          " elements"});
    return report;
  }
  for (Point x = 0; x < n; ++x)
    if (duality(x) < 0 || duality(x) >= n)
      report.push_back({ViolationKind::Structural, "duality-range", pts(pre, {{"x", x}})});
  if (!report.empty()) return report;

  for (Point x = 0; x < n; ++x)
    if (!pre.iso(x, duality(duality(x))))
      report.push_back({ViolationKind::Axiom, "double-dual-iso", pts(pre, {{"x", x}})});
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      if (pre.le(x, y) != pre.le(duality(y), duality(x)))
        report.push_back({ViolationKind::Axiom, "order-reversing", pts(pre, {{"x", x}, {"y", y}})});
  for (Element g = 0; g < arrows.order(); ++g)
    for (Point x = 0; x < n; ++x)
      if (!pre.iso(duality(pre.act(g, x)), pre.act(g, duality(x))))
        report.push_back({ViolationKind::Axiom, "equivariant-up-to-iso",
                          "g=" + arrows.label(g) + " " + pts(pre, {{"x", x}})});
  return report;
}

ValidationReport validate_cosieve(const FiniteGroup& arrows, const APreorder& pre,
                                  const ACosieve& cosieve) {
  ValidationReport report;
  const int n = pre.size();
  if (cosieve.rel.size() != n) {
    report.push_back({ViolationKind::Structural, "cosieve-size",
                      "matrix is " + std::to_string(cosieve.rel.size()) + "x" +
                          std::to_string(cosieve.rel.size()) + " for " + std::to_string(n) +
                          " elements"});
    return report;
  }
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      if (!cosieve(x, y)) continue;
      if (!pre.le(x, y))
        report.push_back({ViolationKind::Axiom, "contained-in-leq", pts(pre, {{"x", x}, {"y", y}})});
      for (Element g = 0; g < arrows.order(); ++g)
        if (!cosieve(pre.act(g, x), pre.act(g, y)))
          report.push_back({ViolationKind::Axiom, "equivariant",
                            "g=" + arrows.label(g) + " " + pts(pre, {{"x", x}, {"y", y}})});
      for (Point z = 0; z < n; ++z)
        if (pre.le(y, z) && !cosieve(x, z))
          report.push_back(
              {ViolationKind::Axiom, "upward-closed", pts(pre, {{"x", x}, {"y", y}, {"z", z}})});
    }
  return report;
}

std::pair<APreorder, GPresheaf> isotropy_presheaf(const FiniteGroup& a, const GroupAction& action,
                                                  std::vector<std::string> labels) {
  const int n = action.set_size;
  if (labels.empty())
    for (int x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  GPresheaf sheaf;
  for (Point x = 0; x < n; ++x) {
    group::ElementSet stab;
    for (Element g = 0; g < a.order(); ++g)
      if (action.apply(g, x) == x) stab.push_back(g);
    sheaf.stalks.push_back(Subgroup::from_members(a, std::move(stab)));
  }
  Relation leq(n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) leq.set(x, y, sheaf[y].is_subset_of(sheaf[x]));
  return {APreorder{std::move(labels), std::move(leq), action}, std::move(sheaf)};
}

ACosieve cosieve_from_duality(const FiniteGroup& g, const APreorder& pre, const GPresheaf& sheaf,
                              const SelfDuality& duality) {
  const int n = pre.size();
  ACosieve out{Relation(n)};
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      if (!pre.le(x, y)) continue;
      group::ElementSet gens = sheaf[duality(y)].members();
      gens.insert(gens.end(), sheaf[x].members().begin(), sheaf[x].members().end());
      out.rel.set(x, y, static_cast<int>(group::generate_subgroup(g, gens).size()) == g.order());
    }
  return out;
}

CheckRecord check_normalizer_lemma(const FiniteGroup& g, const APreorder& pre,
                                   const GPresheaf& sheaf, const SelfDuality& duality) {
  CheckRecord rec{"normalizer-lemma", true, "", {}};
  for (Point x = 0; x < pre.size(); ++x) {
    auto nx = group::normalizer(g, sheaf[x]);
    auto nd = group::normalizer(g, sheaf[duality(x)]);
    if (nx != nd)
      rec.witnesses.push_back(pts(pre, {{"x", x}}) + " N(G_x)=" + group::format_set(g, nx.members()) +
                              " N(G_x°)=" + group::format_set(g, nd.members()));
  }
  rec.passed = rec.witnesses.empty();
  rec.summary = rec.passed ? "N_G(G_x) = N_G(G_x°) for all " + std::to_string(pre.size()) + " points"
                           : std::to_string(rec.witnesses.size()) + " point(s) differ";
  return rec;
}

CheckRecord check_product_corollary(const FiniteGroup& g, const APreorder& pre,
                                    const GPresheaf& sheaf, const SelfDuality& duality) {
  CheckRecord rec{"product-corollary", true, "", {}};
  for (Point x = 0; x < pre.size(); ++x) {
    const auto& gx = sheaf[x].members();
    const auto& gd = sheaf[duality(x)].members();
    auto left = group::product_set(g, gx, gd);
    auto right = group::product_set(g, gd, gx);
    const std::string where = pts(pre, {{"x", x}});
    if (left != right) rec.witnesses.push_back(where + " G_x G_x° != G_x° G_x");
    if (!group::is_subgroup(g, left)) rec.witnesses.push_back(where + " G_x G_x° not a subgroup");
    if (group::intersection(gx, gd).size() == 1 && left.size() != gx.size() * gd.size())
      rec.witnesses.push_back(where + " trivial intersection but |G_x G_x°| = " +
                              std::to_string(left.size()));
  }
  rec.passed = rec.witnesses.empty();
  rec.summary = rec.passed ? "G_x G_x° = G_x° G_x is a subgroup for all " +
                                 std::to_string(pre.size()) + " points"
                           : std::to_string(rec.witnesses.size()) + " violation(s)";
  return rec;
}

CheckRecord check_cosieve_iso_invariance(const APreorder& pre, const ACosieve& cosieve) {
  CheckRecord rec{"cosieve-iso-invariance", true, "", {}};
  const int n = pre.size();
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z)
        if (pre.iso(y, z) && cosieve(x, y) != cosieve(x, z))
          rec.witnesses.push_back(pts(pre, {{"x", x}, {"y", y}, {"z", z}}));
  rec.passed = rec.witnesses.empty();
  rec.summary = rec.passed ? "y ~ z => (x ⋐ y <=> x ⋐ z)"
                           : std::to_string(rec.witnesses.size()) + " violation(s)";
  return rec;
}

TubularReport check_tubular_condition(const CrossedModule& cm, const APreorder& pre,
                                      const GPresheaf& sheaf, const SelfDuality& duality,
                                      const ACosieve& cosieve) {
  TubularReport report;
  const int n = pre.size();
  for (Point b = 0; b < n; ++b) {
    const Point bd = duality(b);
    for (Point c = 0; c < n; ++c) {
      if (!cosieve(c, bd)) continue;
      for (Point d = 0; d < n; ++d) {
        if (!cosieve(d, bd)) continue;
        ++report.triples;
        bool found = false;
        for (Element rho : group::intersection(sheaf[c].members(), sheaf[d].members())) {
          for (Point a = 0; a < n && !found; ++a)
            if (cosieve(a, b) && pre.iso(pre.act(cm.t(rho), a), b)) {
              report.witnesses.push_back({b, c, d, rho, a});
              found = true;
            }
          if (found) break;
        }
        if (!found) report.failures.push_back({b, c, d});
      }
    }
  }
  return report;
}

CheckRecord tubular_record(const TubularReport& report, const CrossedModule& cm,
                           const APreorder& pre) {
  CheckRecord rec{"tubular-condition", report.passed(), "", {}};
  if (report.passed()) {
    rec.summary = report.triples == 0
                      ? "vacuous: no b, c, d with c ⋐ b° and d ⋐ b°"
                      : std::to_string(report.triples) + " triple(s), all witnessed";
    // On success the witnesses are the (rho, a) found for each triple.
    for (const auto& w : report.witnesses)
      rec.witnesses.push_back(pts(pre, {{"b", w.b}, {"c", w.c}, {"d", w.d}}) +
                              " rho=" + cm.source.label(w.rho) + " " + pts(pre, {{"a", w.a}}));
  } else {
    rec.summary = std::to_string(report.failures.size()) + " of " +
                  std::to_string(report.triples) + " triple(s) without witness";
    for (const auto& f : report.failures)
      rec.witnesses.push_back(pts(pre, {{"b", f.b}, {"c", f.c}, {"d", f.d}}));
  }
  return rec;
}

}  // namespace orbitcat::preorder
