#include "orbitcat/orbit_cat.hpp"

#include <algorithm>
#include <charconv>

#include <omp.h>

namespace orbitcat::orbit {

namespace {

constexpr std::size_t kMaxWitnesses = 32;

// Accumulates failures for one check record, keeping the first witnesses.
class Findings {
 public:
  explicit Findings(std::string id) : id_(std::move(id)) {}

  void fail(std::string witness) {
    ++failures_;
    if (witnesses_.size() < kMaxWitnesses) witnesses_.push_back(std::move(witness));
  }
  void count(std::size_t n = 1) { checked_ += n; }
  std::size_t checked() const { return checked_; }

  CheckRecord finish(const std::string& what) && {
    CheckRecord rec{std::move(id_), failures_ == 0, "", std::move(witnesses_)};
    rec.summary = std::to_string(checked_) + " " + what +
                  (failures_ == 0 ? ", all hold" : ", " + std::to_string(failures_) + " failed");
    if (failures_ > rec.witnesses.size())
      rec.witnesses.push_back("... " + std::to_string(failures_ - rec.witnesses.size()) + " more");
    return rec;
  }

 private:
  std::string id_;
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> witnesses_;
};

// All hom-sets of an instance, indexed by (x, y).
class HomTable {
 public:
  explicit HomTable(const OrbitInstance& inst) : n_(inst.size()) {
    sets_.reserve(static_cast<std::size_t>(n_) * n_);
    for (Point x = 0; x < n_; ++x)
      for (Point y = 0; y < n_; ++y) sets_.push_back(hom(inst, x, y));
  }
  const std::vector<CosetMorphism>& operator()(Point x, Point y) const {
    return sets_[static_cast<std::size_t>(x) * n_ + y];
  }
  int size() const { return n_; }

 private:
  int n_;
  std::vector<std::vector<CosetMorphism>> sets_;
};

// All ho-sets, only built for instances with ho structure.
class HoTable {
 public:
  explicit HoTable(const OrbitInstance& inst) : n_(inst.size()) {
    for (Point x = 0; x < n_; ++x)
      for (Point y = 0; y < n_; ++y) sets_.push_back(ho_hom(inst, x, y));
  }
  const std::vector<HoMorphism>& operator()(Point x, Point y) const {
    return sets_[static_cast<std::size_t>(x) * n_ + y];
  }
  const HoMorphism& class_of(const CosetMorphism& f) const {
    for (const auto& m : (*this)(f.source, f.target))
      if (std::binary_search(m.members.begin(), m.members.end(), f)) return m;
    throw std::logic_error("coset morphism not found in its ho-set");
  }

 private:
  int n_;
  std::vector<std::vector<HoMorphism>> sets_;
};

const std::string& pt(const OrbitInstance& inst, Point x) {
  return inst.preorder().elements.at(static_cast<std::size_t>(x));
}

void require_ho(const OrbitInstance& inst) {
  if (!inst.has_ho_structure()) throw MissingDuality();
}

}  // namespace

Report validate_parts(const CrossedModule& cm, const APreorder& pre, const GPresheaf& sheaf,
                      const std::optional<SelfDuality>& duality,
                      const std::optional<ACosieve>& cosieve) {
  Report report;
  auto cm_violations = xmod::validate(cm);
  report.add(to_check("crossed-module", cm_violations));
  if (has_structural(cm_violations)) return report;

  auto pre_violations = preorder::validate_preorder(cm.arrows, pre);
  report.add(to_check("preorder", pre_violations));
  if (has_structural(pre_violations)) return report;

  auto sheaf_violations = preorder::validate_presheaf(cm, pre, sheaf);
  report.add(to_check("presheaf", sheaf_violations));
  if (has_structural(sheaf_violations)) return report;

  // gamma G_x ⊑-membership must not depend on the representative.
  ValidationReport membership;
  for (Point x = 0; x < pre.size(); ++x)
    for (Element h : sheaf[x].members())
      if (!pre.iso(pre.act(cm.t(h), x), x))
        membership.push_back({ViolationKind::Axiom, "stalk-fixes-point",
                              "x=" + pre.elements[static_cast<std::size_t>(x)] +
                                  " h=" + cm.source.label(h)});
  report.add(to_check("coset-membership", membership));

  if (duality) report.add(to_check("duality", preorder::validate_duality(cm.arrows, pre, *duality)));
  if (cosieve) report.add(to_check("cosieve", preorder::validate_cosieve(cm.arrows, pre, *cosieve)));
  return report;
}

OrbitInstance::OrbitInstance(CrossedModule cm, APreorder pre, GPresheaf sheaf,
                             std::optional<SelfDuality> duality, std::optional<ACosieve> cosieve,
                             Metadata meta)
    : cm_(std::move(cm)),
      pre_(std::move(pre)),
      sheaf_(std::move(sheaf)),
      duality_(std::move(duality)),
      cosieve_(std::move(cosieve)),
      meta_(std::move(meta)) {
  if (has_ho_structure())
    tubular_ = preorder::check_tubular_condition(cm_, pre_, sheaf_, *duality_, *cosieve_);
}

OrbitInstance OrbitInstance::make(CrossedModule cm, APreorder pre, GPresheaf sheaf,
                                  std::optional<SelfDuality> duality,
                                  std::optional<ACosieve> cosieve, Metadata meta) {
  auto report = validate_parts(cm, pre, sheaf, duality, cosieve);
  if (!report.all_passed()) throw InvalidInstance(std::move(report));
  return OrbitInstance(std::move(cm), std::move(pre), std::move(sheaf), std::move(duality),
                       std::move(cosieve), std::move(meta));
}

Point OrbitInstance::find_point(const std::string& name) const {
  Point p = pre_.find(name);
  if (p >= 0) return p;
  int idx = -1;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), idx);
  if (ec == std::errc() && ptr == name.data() + name.size() && idx >= 0 && idx < size()) return idx;
  return -1;
}

std::string describe(const OrbitInstance& inst, const CosetMorphism& f) {
  return inst.source_group().label(f.rep) + "·G[" + pt(inst, f.source) + "] : " +
         pt(inst, f.source) + " -> " + pt(inst, f.target);
}

std::string describe(const OrbitInstance& inst, const HoMorphism& m) {
  std::string reps;
  for (const auto& f : m.members) {
    if (!reps.empty()) reps += ",";
    reps += inst.source_group().label(f.rep);
  }
  return "[" + reps + "] : " + pt(inst, m.source) + " -> " + pt(inst, m.target);
}

std::vector<CosetMorphism> hom(const OrbitInstance& inst, Point x, Point y) {
  std::vector<CosetMorphism> out;
  for (const auto& coset : group::cosets(inst.source_group(), inst.stalk(x))) {
    const Element rep = coset.front();
    if (inst.preorder().le(inst.triangle(rep, x), y)) out.push_back({x, y, rep});
  }
  return out;
}

CosetMorphism make_coset(const OrbitInstance& inst, Point x, Point y, Element gamma) {
  if (!inst.preorder().le(inst.triangle(gamma, x), y))
    throw std::invalid_argument("not a morphism: " + inst.source_group().label(gamma) +
                                " ▷ " + pt(inst, x) + " is not ⊑ " + pt(inst, y));
  return {x, y, group::coset_rep(inst.source_group(), inst.stalk(x), gamma)};
}

CosetMorphism identity_coset(const OrbitInstance& inst, Point x) {
  return {x, x, inst.source_group().identity()};
}

CosetMorphism compose_coset(const OrbitInstance& inst, const CosetMorphism& h,
                            const CosetMorphism& f) {
  if (f.target != h.source)
    throw SourceTargetMismatch("cannot compose " + describe(inst, h) + " after " + describe(inst, f));
  const auto& g = inst.source_group();
  const Element rep = group::coset_rep(g, inst.stalk(f.source), g.mul(h.rep, f.rep));
  if (!inst.preorder().le(inst.triangle(rep, f.source), h.target))
    throw std::logic_error("composite is not a morphism: " + describe(inst, CosetMorphism{f.source, h.target, rep}));
  return {f.source, h.target, rep};
}

CosetMorphism act(const OrbitInstance& inst, Element h, const CosetMorphism& f) {
  const auto& pre = inst.preorder();
  const Point hx = pre.act(h, f.source);
  const Element image = inst.crossed_module().act(h, f.rep);
  return {hx, pre.act(h, f.target), group::coset_rep(inst.source_group(), inst.stalk(hx), image)};
}

CosetMorphism natural_component(const OrbitInstance& inst, Element gamma, Point x) {
  return {x, inst.triangle(gamma, x), group::coset_rep(inst.source_group(), inst.stalk(x), gamma)};
}

bool equivalent(const OrbitInstance& inst, const CosetMorphism& f, const CosetMorphism& g) {
  require_ho(inst);
  if (f.source != g.source || f.target != g.target)
    throw SourceTargetMismatch("not parallel: " + describe(inst, f) + " and " + describe(inst, g));
  const auto& grp = inst.source_group();
  const auto& cos = *inst.cosieve();
  const Point yd = (*inst.duality())(f.target);
  const Element f_inv = grp.inv(f.rep);
  for (Point u = 0; u < inst.size(); ++u) {
    if (!cos(u, yd)) continue;
    const auto& gu = inst.stalk(u);
    bool meets = false;
    for (Element h : inst.stalk(f.source).members())
      if (gu.contains(grp.mul(grp.mul(g.rep, h), f_inv))) {
        meets = true;
        break;
      }
    if (!meets) return false;
  }
  return true;
}

std::vector<HoMorphism> ho_hom(const OrbitInstance& inst, Point x, Point y) {
  require_ho(inst);
  const auto members = hom(inst, x, y);
  const std::size_t k = members.size();
  std::vector<char> eq(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) eq[i * k + j] = equivalent(inst, members[i], members[j]);

  std::vector<std::string> witnesses;
  for (std::size_t i = 0; i < k; ++i) {
    if (!eq[i * k + i]) witnesses.push_back("not reflexive at " + describe(inst, members[i]));
    for (std::size_t j = 0; j < k; ++j) {
      if (eq[i * k + j] && !eq[j * k + i])
        witnesses.push_back("not symmetric: " + describe(inst, members[i]) + " / " +
                            describe(inst, members[j]));
      for (std::size_t l = 0; l < k; ++l)
        if (eq[i * k + j] && eq[j * k + l] && !eq[i * k + l])
          witnesses.push_back("not transitive: " + describe(inst, members[i]) + " / " +
                              describe(inst, members[j]) + " / " + describe(inst, members[l]));
    }
  }
  if (!witnesses.empty())
    throw NotAnEquivalence("≡ is not an equivalence on hom(" + pt(inst, x) + ", " + pt(inst, y) + ")",
                           std::move(witnesses));

  std::vector<HoMorphism> classes;
  std::vector<int> class_of(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    if (class_of[i] >= 0) continue;
    HoMorphism m{x, y, {}};
    for (std::size_t j = i; j < k; ++j)
      if (eq[i * k + j]) {
        class_of[j] = static_cast<int>(classes.size());
        m.members.push_back(members[j]);
      }
    classes.push_back(std::move(m));
  }
  return classes;
}

HoMorphism ho_class_of(const OrbitInstance& inst, const CosetMorphism& f) {
  for (auto& m : ho_hom(inst, f.source, f.target))
    if (std::binary_search(m.members.begin(), m.members.end(), f)) return m;
  throw std::invalid_argument("not a morphism of O_s: " + describe(inst, f));
}

HoMorphism ho_identity(const OrbitInstance& inst, Point x) {
  return ho_class_of(inst, identity_coset(inst, x));
}

HoMorphism ho_compose(const OrbitInstance& inst, const HoMorphism& h, const HoMorphism& f) {
  return ho_class_of(inst, compose_coset(inst, h.canonical(), f.canonical()));
}

CosetMorphism dual_member(const OrbitInstance& inst, const CosetMorphism& f) {
  require_ho(inst);
  const auto& dual = *inst.duality();
  const auto& g = inst.source_group();
  const Point yd = dual(f.target);
  const Point xd = dual(f.source);
  const Element inv = g.inv(f.rep);
  if (!inst.preorder().le(inst.triangle(inv, yd), xd))
    throw std::logic_error("dual is not a morphism: " + describe(inst, f));
  return {yd, xd, group::coset_rep(g, inst.stalk(yd), inv)};
}

HoMorphism dual_morphism(const OrbitInstance& inst, const HoMorphism& m) {
  require_ho(inst);
  if (!inst.tubular()->passed()) throw TubularConditionFailed();
  return ho_class_of(inst, dual_member(inst, m.canonical()));
}

CheckRecord check_category_laws(const OrbitInstance& inst) {
  Findings found("category-laws");
  const HomTable homs(inst);
  const int n = inst.size();
  const auto& g = inst.source_group();
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (const auto& f : homs(x, y)) {
        found.count(2);
        if (compose_coset(inst, identity_coset(inst, y), f) != f)
          found.fail("left identity: " + describe(inst, f));
        if (compose_coset(inst, f, identity_coset(inst, x)) != f)
          found.fail("right identity: " + describe(inst, f));
      }
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z)
        for (const auto& f : homs(x, y))
          for (const auto& h : homs(y, z)) {
            // Representative independence of the composite.
            const auto composite = compose_coset(inst, h, f);
            for (Element a : inst.stalk(y).members())
              for (Element b : inst.stalk(x).members()) {
                found.count();
                const Element alt = g.mul(g.mul(h.rep, a), g.mul(f.rep, b));
                if (group::coset_rep(g, inst.stalk(x), alt) != composite.rep)
                  found.fail("representative dependence: " + describe(inst, h) + " after " +
                             describe(inst, f));
              }
            for (Point w = 0; w < n; ++w)
              for (const auto& k : homs(z, w)) {
                found.count();
                if (compose_coset(inst, k, compose_coset(inst, h, f)) !=
                    compose_coset(inst, compose_coset(inst, k, h), f))
                  found.fail("associativity: " + describe(inst, k) + ", " + describe(inst, h) +
                             ", " + describe(inst, f));
              }
          }
  return std::move(found).finish("identity/associativity/well-definedness instances");
}

CheckRecord check_monic(const OrbitInstance& inst) {
  Findings found("monic");
  const HomTable homs(inst);
  const int n = inst.size();
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z)
        for (const auto& f : homs(y, z))
          for (const auto& g : homs(x, y))
            for (const auto& h : homs(x, y)) {
              found.count();
              if (g != h && compose_coset(inst, f, g) == compose_coset(inst, f, h))
                found.fail(describe(inst, f) + " does not cancel " + describe(inst, g) + " vs " +
                           describe(inst, h));
            }
  return std::move(found).finish("left-cancellation instances");
}

CheckRecord check_action_functor(const OrbitInstance& inst) {
  Findings found("action-functor");
  const HomTable homs(inst);
  const int n = inst.size();
  const auto& a = inst.arrow_group();
  const auto& pre = inst.preorder();
  for (Element h = 0; h < a.order(); ++h)
    for (Point x = 0; x < n; ++x) {
      found.count();
      if (act(inst, h, identity_coset(inst, x)) != identity_coset(inst, pre.act(h, x)))
        found.fail("identity not preserved: h=" + a.label(h) + " x=" + pt(inst, x));
      for (Point y = 0; y < n; ++y)
        for (const auto& f : homs(x, y)) {
          const auto image = act(inst, h, f);
          found.count();
          if (!pre.le(inst.triangle(image.rep, image.source), image.target))
            found.fail("image not a morphism: h=" + a.label(h) + " " + describe(inst, f));
          if (h == a.identity() && image != f)
            found.fail("identity of A acts nontrivially on " + describe(inst, f));
          for (Element k = 0; k < a.order(); ++k) {
            found.count();
            if (act(inst, a.mul(h, k), f) != act(inst, h, act(inst, k, f)))
              found.fail("not an action: h=" + a.label(h) + " k=" + a.label(k) + " " +
                         describe(inst, f));
          }
          for (Point z = 0; z < n; ++z)
            for (const auto& g : homs(y, z)) {
              found.count();
              if (act(inst, h, compose_coset(inst, g, f)) !=
                  compose_coset(inst, act(inst, h, g), act(inst, h, f)))
                found.fail("composition not preserved: h=" + a.label(h) + " " + describe(inst, g) +
                           " after " + describe(inst, f));
            }
        }
    }
  return std::move(found).finish("functoriality instances");
}

CheckRecord check_natural_components(const OrbitInstance& inst) {
  Findings found("natural-components");
  const HomTable homs(inst);
  const int n = inst.size();
  const auto& g = inst.source_group();
  for (Element gamma = 0; gamma < g.order(); ++gamma)
    for (Point x = 0; x < n; ++x) {
      const auto c = natural_component(inst, gamma, x);
      const auto inverse = natural_component(inst, g.inv(gamma), c.target);
      found.count();
      if (compose_coset(inst, inverse, c) != identity_coset(inst, x) ||
          compose_coset(inst, c, inverse) != identity_coset(inst, c.target))
        found.fail("not invertible: gamma=" + g.label(gamma) + " x=" + pt(inst, x));
      for (Point y = 0; y < n; ++y)
        for (const auto& f : homs(x, y)) {
          found.count();
          const auto lhs = compose_coset(inst, natural_component(inst, gamma, y), f);
          const auto rhs = compose_coset(inst, act(inst, inst.crossed_module().t(gamma), f), c);
          if (lhs != rhs)
            found.fail("not natural: gamma=" + g.label(gamma) + " at " + describe(inst, f));
        }
    }
  return std::move(found).finish("invertibility/naturality instances");
}

CheckRecord check_equivalence_relation(const OrbitInstance& inst) {
  require_ho(inst);
  Findings found("equivalence-relation");
  const int n = inst.size();
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      found.count();
      try {
        ho_hom(inst, x, y);
      } catch (const NotAnEquivalence& e) {
        for (const auto& w : e.witnesses()) found.fail(w);
      }
    }
  return std::move(found).finish("hom-sets");
}

namespace {

// Checks one object triple (x, y, z); returns the number of quadruples seen.
std::size_t congruence_at(const OrbitInstance& inst, const HomTable& homs, Point x, Point y, Point z,
                          std::vector<std::string>& failures) {
  std::size_t seen = 0;
  const auto& first = homs(x, y);
  const auto& second = homs(y, z);
  for (const auto& f : first)
    for (const auto& f2 : first) {
      if (!equivalent(inst, f, f2)) continue;
      for (const auto& h : second)
        for (const auto& h2 : second) {
          if (!equivalent(inst, h, h2)) continue;
          ++seen;
          if (!equivalent(inst, compose_coset(inst, h, f), compose_coset(inst, h2, f2)))
            failures.push_back(describe(inst, h) + " after " + describe(inst, f) + " vs " +
                               describe(inst, h2) + " after " + describe(inst, f2));
        }
    }
  return seen;
}

CheckRecord congruence_record(std::size_t seen, std::vector<std::string> failures) {
  std::sort(failures.begin(), failures.end());
  Findings found("congruence");
  found.count(seen);
  for (auto& w : failures) found.fail(std::move(w));
  return std::move(found).finish("pairs of ≡-related composable pairs");
}

CheckRecord check_congruence_serial(const OrbitInstance& inst) {
  const int n = inst.size();
  std::size_t seen = 0;
  std::vector<std::string> failures;
  // Reference loop: recompute hom-sets directly for every triple.
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z)
        for (const auto& f : hom(inst, x, y))
          for (const auto& f2 : hom(inst, x, y)) {
            if (!equivalent(inst, f, f2)) continue;
            for (const auto& h : hom(inst, y, z))
              for (const auto& h2 : hom(inst, y, z)) {
                if (!equivalent(inst, h, h2)) continue;
                ++seen;
                if (!equivalent(inst, compose_coset(inst, h, f), compose_coset(inst, h2, f2)))
                  failures.push_back(describe(inst, h) + " after " + describe(inst, f) + " vs " +
                                     describe(inst, h2) + " after " + describe(inst, f2));
              }
          }
  return congruence_record(seen, std::move(failures));
}

CheckRecord check_congruence_parallel(const OrbitInstance& inst) {
  const HomTable homs(inst);
  const int n = inst.size();
  const std::ptrdiff_t triples = static_cast<std::ptrdiff_t>(n) * n * n;
  std::size_t seen = 0;
  std::vector<std::string> failures;
#pragma omp parallel
  {
    std::vector<std::string> local;
#pragma omp for schedule(dynamic) reduction(+ : seen)
    for (std::ptrdiff_t t = 0; t < triples; ++t) {
      const auto x = static_cast<Point>(t / (n * n));
      const auto y = static_cast<Point>((t / n) % n);
      const auto z = static_cast<Point>(t % n);
      seen += congruence_at(inst, homs, x, y, z, local);
    }
#pragma omp critical
    failures.insert(failures.end(), local.begin(), local.end());
  }
  return congruence_record(seen, std::move(failures));
}

}  // namespace

CheckRecord check_congruence(const OrbitInstance& inst, Execution exec) {
  require_ho(inst);
  return exec == Execution::Serial ? check_congruence_serial(inst) : check_congruence_parallel(inst);
}

CheckRecord check_action_descends(const OrbitInstance& inst) {
  require_ho(inst);
  Findings found("action-descends");
  const HomTable homs(inst);
  const int n = inst.size();
  const auto& a = inst.arrow_group();
  for (Element h = 0; h < a.order(); ++h)
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y)
        for (const auto& f : homs(x, y))
          for (const auto& g : homs(x, y)) {
            found.count();
            if (equivalent(inst, f, g) != equivalent(inst, act(inst, h, f), act(inst, h, g)))
              found.fail("h=" + a.label(h) + " " + describe(inst, f) + " / " + describe(inst, g));
          }
  return std::move(found).finish("(h, f, g) instances of f ≡ g <=> hf ≡ hg");
}

Report check_duality_functor(const OrbitInstance& inst) {
  require_ho(inst);
  Report report;
  if (!inst.tubular()->passed()) {
    report.add({"duality-functor", false, "tubular condition fails; lifted duality undefined",
                tubular_record(*inst.tubular(), inst.crossed_module(), inst.preorder()).witnesses});
    return report;
  }
  const HoTable ho(inst);
  const auto& dual = *inst.duality();
  const auto& a = inst.arrow_group();
  const auto& pre = inst.preorder();
  const int n = inst.size();
  auto d = [&](const HoMorphism& m) { return ho.class_of(dual_member(inst, m.canonical())); };
  auto compose = [&](const HoMorphism& h, const HoMorphism& f) {
    return ho.class_of(compose_coset(inst, h.canonical(), f.canonical()));
  };

  Findings well_defined("duality-well-defined");
  Findings contravariant("duality-contravariant");
  Findings unit("duality-unit");
  Findings involution("duality-involution");
  Findings equivariant("duality-equivariant");
  const bool strict = dual.strict_involution();

  for (Point x = 0; x < n; ++x) {
    unit.count();
    if (d(ho.class_of(identity_coset(inst, x))) != ho.class_of(identity_coset(inst, dual(x))))
      unit.fail("x=" + pt(inst, x));
    for (Point y = 0; y < n; ++y)
      for (const auto& m : ho(x, y)) {
        const auto image = d(m);
        for (const auto& f : m.members) {
          well_defined.count();
          if (ho.class_of(dual_member(inst, f)) != image)
            well_defined.fail(describe(inst, f) + " gives " +
                              describe(inst, ho.class_of(dual_member(inst, f))) + ", class gives " +
                              describe(inst, image));
        }
        if (strict) {
          involution.count();
          if (d(image) != m) involution.fail(describe(inst, m));
        }
        for (Point z = 0; z < n; ++z)
          for (const auto& h : ho(y, z)) {
            contravariant.count();
            if (d(compose(h, m)) != compose(image, d(h)))
              contravariant.fail(describe(inst, h) + " after " + describe(inst, m));
          }
        for (Element g = 0; g < a.order(); ++g) {
          equivariant.count();
          // (hy)° -> h(y°) -> h(x°) -> (hx)°, with the outer maps given by
          // the identity cosets witnessing (hy)° ~ h(y°) and h(x°) ~ (hx)°.
          const auto moved = ho.class_of(act(inst, g, m.canonical()));
          const auto lhs = d(moved);
          const auto act_dual = ho.class_of(act(inst, g, image.canonical()));
          const auto into = make_coset(inst, dual(pre.act(g, y)), pre.act(g, dual(y)), 0);
          const auto out = make_coset(inst, pre.act(g, dual(x)), dual(pre.act(g, x)), 0);
          const auto rhs = ho.class_of(
              compose_coset(inst, out, compose_coset(inst, act_dual.canonical(), into)));
          if (lhs != rhs) equivariant.fail("h=" + a.label(g) + " " + describe(inst, m));
        }
      }
  }

  report.add(std::move(well_defined).finish("members checked for representative independence"));
  report.add(std::move(contravariant).finish("composable class pairs"));
  report.add(std::move(unit).finish("identity classes"));
  if (strict) {
    report.add(std::move(involution).finish("classes with D(D(m)) = m"));
  } else {
    report.add({"duality-involution", true,
                "not applicable: ° is only an involution up to ~ on this instance", {}});
  }
  report.add(std::move(equivariant).finish("(h, class) instances"));
  return report;
}

CheckRecord ho_class_summary(const OrbitInstance& inst) {
  require_ho(inst);
  CheckRecord rec{"ho-classes", true, "", {}};
  std::size_t morphisms = 0;
  std::size_t classes = 0;
  for (Point x = 0; x < inst.size(); ++x)
    for (Point y = 0; y < inst.size(); ++y) {
      const auto h = hom(inst, x, y);
      if (h.empty()) continue;
      const auto c = ho_hom(inst, x, y);
      morphisms += h.size();
      classes += c.size();
      rec.witnesses.push_back(pt(inst, x) + " -> " + pt(inst, y) + ": " + std::to_string(h.size()) +
                              " morphism(s), " + std::to_string(c.size()) + " class(es)");
    }
  rec.summary = std::to_string(morphisms) + " morphisms in " + std::to_string(classes) + " classes";
  return rec;
}

OrbitInstance orbit_category_of_group(const FiniteGroup& a, std::vector<std::string> labels,
                                      std::string name) {
  auto subgroups = group::all_subgroups(a);
  const int n = static_cast<int>(subgroups.size());
  if (labels.empty())
    for (const auto& s : subgroups) labels.push_back(group::format_set(a, s.members()));
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("need one label per subgroup");

  group::GroupAction action{n, {}};
  for (Element h = 0; h < a.order(); ++h) {
    group::Permutation p;
    for (const auto& s : subgroups) {
      auto image = group::conjugate_subgroup(a, h, s);
      p.push_back(static_cast<int>(std::find(subgroups.begin(), subgroups.end(), image) -
                                   subgroups.begin()));
    }
    action.perms.push_back(std::move(p));
  }
  preorder::Relation leq(n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) leq.set(x, y, subgroups[y].is_subset_of(subgroups[x]));

  Metadata meta{std::move(name), "orbit category of a group: S = subgroups, G_x = x",
                kOrbitCategoryOfGroup};
  return OrbitInstance::make(xmod::conjugation_module(a),
                             APreorder{std::move(labels), std::move(leq), std::move(action)},
                             GPresheaf{std::move(subgroups)}, std::nullopt, std::nullopt,
                             std::move(meta));
}

std::size_t equivariant_map_count(const FiniteGroup& a, const Subgroup& x, const Subgroup& y) {
  const auto source = group::cosets(a, y);  // A/y
  const auto target = group::cosets(a, x);  // A/x
  std::vector<int> source_of(a.order()), target_of(a.order());
  for (std::size_t i = 0; i < source.size(); ++i)
    for (Element e : source[i]) source_of[e] = static_cast<int>(i);
  for (std::size_t i = 0; i < target.size(); ++i)
    for (Element e : target[i]) target_of[e] = static_cast<int>(i);

  std::size_t count = 0;
  for (const auto& image_of_base : target) {
    // Candidate map: a·y |-> a·image_of_base. Reject if two names of the same
    // source coset disagree, then confirm equivariance on every point.
    std::vector<int> phi(source.size(), -1);
    bool ok = true;
    for (Element e = 0; e < a.order() && ok; ++e) {
      const int s = source_of[e];
      const int t = target_of[a.mul(e, image_of_base.front())];
      if (phi[s] < 0) phi[s] = t;
      else if (phi[s] != t) ok = false;
    }
    for (Element b = 0; b < a.order() && ok; ++b)
      for (std::size_t s = 0; s < source.size() && ok; ++s) {
        const int moved = source_of[a.mul(b, source[s].front())];
        const int image_moved = target_of[a.mul(b, target[static_cast<std::size_t>(phi[s])].front())];
        ok = phi[static_cast<std::size_t>(moved)] == image_moved;
      }
    if (ok) ++count;
  }
  return count;
}

CheckRecord check_oracle_hom_counts(const OrbitInstance& inst) {
  Findings found("oracle-hom-counts");
  for (Point x = 0; x < inst.size(); ++x)
    for (Point y = 0; y < inst.size(); ++y) {
      found.count();
      const auto direct = hom(inst, x, y).size();
      const auto oracle = equivariant_map_count(inst.arrow_group(), inst.stalk(x), inst.stalk(y));
      if (direct != oracle)
        found.fail(pt(inst, x) + " -> " + pt(inst, y) + ": |hom| = " + std::to_string(direct) +
                   ", equivariant maps = " + std::to_string(oracle));
    }
  return std::move(found).finish("subgroup pairs matched against equivariant-map counts");
}

Report run_theorem(const OrbitInstance& inst, Execution exec) {
  Report report = validate_parts(inst.crossed_module(), inst.preorder(), inst.presheaf(),
                                 inst.duality(), inst.cosieve());
  report.add(xmod::check_classical_consequences(inst.crossed_module()));
  report.add(check_category_laws(inst));
  report.add(check_monic(inst));
  report.add(check_action_functor(inst));
  report.add(check_natural_components(inst));
  const auto& g = inst.source_group();
  if (inst.duality()) {
    report.add(preorder::check_normalizer_lemma(g, inst.preorder(), inst.presheaf(), *inst.duality()));
    report.add(preorder::check_product_corollary(g, inst.preorder(), inst.presheaf(), *inst.duality()));
  }
  if (inst.cosieve())
    report.add(preorder::check_cosieve_iso_invariance(inst.preorder(), *inst.cosieve()));
  if (inst.has_ho_structure()) {
    report.add(check_equivalence_relation(inst));
    report.add(check_congruence(inst, exec));
    report.add(check_action_descends(inst));
    report.add(preorder::tubular_record(*inst.tubular(), inst.crossed_module(), inst.preorder()));
    report.append(check_duality_functor(inst));
    report.add(ho_class_summary(inst));
  }
  if (inst.metadata().kind == kOrbitCategoryOfGroup) report.add(check_oracle_hom_counts(inst));
  return report;
}

}  // namespace orbitcat::orbit
