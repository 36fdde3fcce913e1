#include "orbitcat/crossed_module.hpp"

#include <numeric>

namespace orbitcat::xmod {

namespace {

std::string pair_witness(const char* a_name, const FiniteGroup& ga, Element a, const char* b_name,
                         const FiniteGroup& gb, Element b) {
  return std::string(a_name) + "=" + ga.label(a) + " " + b_name + "=" + gb.label(b);
}

}  // namespace

ValidationReport validate(const CrossedModule& cm) {
  const auto& g = cm.source;
  const auto& a = cm.arrows;
  ValidationReport report = group::validate_hom(g, a, group::GroupHom{cm.target});
  if (has_structural(report)) return report;

  // act must be an action of A on the underlying set of G ...
  group::GroupAction as_action{g.order(), cm.action};
  auto action_report = group::validate_action(a, as_action);
  for (auto& v : action_report) {
    if (v.kind == ViolationKind::Axiom) v.axiom = "act-" + v.axiom;
    report.push_back(std::move(v));
  }
  if (has_structural(report)) return report;

  // ... by automorphisms.
  for (Element h = 0; h < a.order(); ++h) {
    bool broken = false;
    for (Element x = 0; x < g.order() && !broken; ++x)
      for (Element y = 0; y < g.order() && !broken; ++y)
        if (cm.act(h, g.mul(x, y)) != g.mul(cm.act(h, x), cm.act(h, y))) {
          report.push_back({ViolationKind::Axiom, "act-automorphism",
                            "h=" + a.label(h) + " gamma=" + g.label(x) + " alpha=" + g.label(y)});
          broken = true;
        }
  }

  for (Element h = 0; h < a.order(); ++h)
    for (Element gamma = 0; gamma < g.order(); ++gamma)
      if (cm.t(cm.act(h, gamma)) != a.conj(h, cm.t(gamma)))
        report.push_back(
            {ViolationKind::Axiom, "equivariance", pair_witness("h", a, h, "gamma", g, gamma)});

  for (Element gamma = 0; gamma < g.order(); ++gamma)
    for (Element alpha = 0; alpha < g.order(); ++alpha)
      if (g.conj(gamma, alpha) != cm.act(cm.t(gamma), alpha))
        report.push_back({ViolationKind::Axiom, "peiffer",
                          pair_witness("gamma", g, gamma, "alpha", g, alpha)});
  return report;
}

CrossedModule conjugation_module(const FiniteGroup& a) {
  std::vector<Element> t(static_cast<std::size_t>(a.order()));
  std::iota(t.begin(), t.end(), 0);
  std::vector<Permutation> action;
  for (Element h = 0; h < a.order(); ++h) {
    Permutation p;
    for (Element x = 0; x < a.order(); ++x) p.push_back(a.conj(h, x));
    action.push_back(std::move(p));
  }
  return CrossedModule{a, a, std::move(t), std::move(action)};
}

CrossedModule trivial_source_module(const FiniteGroup& a) {
  return CrossedModule{group::trivial_group(), a, {0},
                       std::vector<Permutation>(static_cast<std::size_t>(a.order()), Permutation{0})};
}

CheckRecord check_classical_consequences(const CrossedModule& cm) {
  const auto& g = cm.source;
  const auto& a = cm.arrows;
  CheckRecord rec{"crossed-module-consequences", true, "", {}};
  std::vector<char> in_image(a.order(), 0);
  for (Element gamma = 0; gamma < g.order(); ++gamma) in_image[cm.t(gamma)] = 1;
  for (Element h = 0; h < a.order(); ++h)
    for (Element x = 0; x < a.order(); ++x)
      if (in_image[x] && !in_image[a.conj(h, x)])
        rec.witnesses.push_back("image not normal: h=" + a.label(h) + " x=" + a.label(x));
  for (Element k = 0; k < g.order(); ++k) {
    if (cm.t(k) != a.identity()) continue;
    for (Element gamma = 0; gamma < g.order(); ++gamma)
      if (g.mul(k, gamma) != g.mul(gamma, k))
        rec.witnesses.push_back("kernel not central: k=" + g.label(k) + " gamma=" + g.label(gamma));
  }
  rec.passed = rec.witnesses.empty();
  rec.summary = rec.passed ? "im t normal in A, ker t central in G"
                           : std::to_string(rec.witnesses.size()) + " violation(s)";
  return rec;
}

}  // namespace orbitcat::xmod
