#pragma once

// The orbit category O_s of a G-presheaf, its 2-thin upgrade by the relation
// ≡, the homotopy category ho(O_s), the A-action, and the duality lifted
// from the preorder to ho(O_s).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitcat/crossed_module.hpp"
#include "orbitcat/equivariant_preorder.hpp"
#include "orbitcat/execution.hpp"
#include "orbitcat/finite_group.hpp"
#include "orbitcat/report.hpp"

namespace orbitcat::orbit {

using group::Element;
using group::FiniteGroup;
using group::Subgroup;
using preorder::ACosieve;
using preorder::APreorder;
using preorder::GPresheaf;
using preorder::Point;
using preorder::SelfDuality;
using xmod::CrossedModule;

inline constexpr const char* kOrbitCategoryOfGroup = "orbit-category-of-group";

struct Metadata {
  std::string name;
  std::string provenance;
  std::string kind;  // empty, or kOrbitCategoryOfGroup

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

class InvalidInstance : public std::runtime_error {
 public:
  explicit InvalidInstance(Report report)
      : std::runtime_error("instance fails validation"), report_(std::move(report)) {}
  const Report& report() const noexcept { return report_; }

 private:
  Report report_;
};

class MissingDuality : public std::logic_error {
 public:
  MissingDuality() : std::logic_error("operation needs both a self-duality and a cosieve") {}
};

class SourceTargetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAnEquivalence : public std::runtime_error {
 public:
  NotAnEquivalence(std::string what, std::vector<std::string> witnesses)
      : std::runtime_error(std::move(what)), witnesses_(std::move(witnesses)) {}
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<std::string> witnesses_;
};

class TubularConditionFailed : public std::runtime_error {
 public:
  TubularConditionFailed() : std::runtime_error("tubular condition fails; duality not defined") {}
};

/// Runs every component validator plus the check that G_x-cosets have a
/// well-defined membership (h ∈ G_x => h ▷ x ~ x). Later validators are skipped
/// when an earlier component is structurally broken.
Report validate_parts(const CrossedModule& cm, const APreorder& pre, const GPresheaf& sheaf,
                      const std::optional<SelfDuality>& duality,
                      const std::optional<ACosieve>& cosieve);

/// A validated tuple (G, A, t, act, S, ⊑, s, °, ⋐). Immutable.
class OrbitInstance {
 public:
  /// Throws InvalidInstance carrying the validation report.
  static OrbitInstance make(CrossedModule cm, APreorder pre, GPresheaf sheaf,
                            std::optional<SelfDuality> duality = std::nullopt,
                            std::optional<ACosieve> cosieve = std::nullopt, Metadata meta = {});

  const CrossedModule& crossed_module() const noexcept { return cm_; }
  const FiniteGroup& source_group() const noexcept { return cm_.source; }
  const FiniteGroup& arrow_group() const noexcept { return cm_.arrows; }
  const APreorder& preorder() const noexcept { return pre_; }
  const GPresheaf& presheaf() const noexcept { return sheaf_; }
  const std::optional<SelfDuality>& duality() const noexcept { return duality_; }
  const std::optional<ACosieve>& cosieve() const noexcept { return cosieve_; }
  const Metadata& metadata() const noexcept { return meta_; }

  int size() const { return pre_.size(); }
  const Subgroup& stalk(Point x) const { return sheaf_[x]; }
  /// gamma ▷ x = t(gamma) x
  Point triangle(Element gamma, Point x) const { return pre_.act(cm_.t(gamma), x); }
  bool has_ho_structure() const { return duality_.has_value() && cosieve_.has_value(); }
  /// Present iff has_ho_structure().
  const std::optional<preorder::TubularReport>& tubular() const noexcept { return tubular_; }
  /// Point by label or decimal index; -1 if neither matches.
  Point find_point(const std::string& name) const;

  friend bool operator==(const OrbitInstance& a, const OrbitInstance& b) {
    return a.cm_ == b.cm_ && a.pre_ == b.pre_ && a.sheaf_ == b.sheaf_ &&
           a.duality_ == b.duality_ && a.cosieve_ == b.cosieve_ && a.meta_ == b.meta_;
  }

 private:
  OrbitInstance(CrossedModule cm, APreorder pre, GPresheaf sheaf, std::optional<SelfDuality> duality,
                std::optional<ACosieve> cosieve, Metadata meta);

  CrossedModule cm_;
  APreorder pre_;
  GPresheaf sheaf_;
  std::optional<SelfDuality> duality_;
  std::optional<ACosieve> cosieve_;
  Metadata meta_;
  std::optional<preorder::TubularReport> tubular_;
};

/// The morphism rep·G_source : source -> target; rep is the minimal element
/// of its coset.
struct CosetMorphism {
  Point source = 0;
  Point target = 0;
  Element rep = 0;

  friend bool operator==(const CosetMorphism&, const CosetMorphism&) = default;
  friend auto operator<=>(const CosetMorphism&, const CosetMorphism&) = default;
};

/// An ≡-class of parallel coset morphisms, members sorted by rep.
struct HoMorphism {
  Point source = 0;
  Point target = 0;
  std::vector<CosetMorphism> members;

  const CosetMorphism& canonical() const { return members.front(); }
  friend bool operator==(const HoMorphism&, const HoMorphism&) = default;
};

std::string describe(const OrbitInstance& inst, const CosetMorphism& f);
std::string describe(const OrbitInstance& inst, const HoMorphism& m);

/// {gamma G_x | gamma ▷ x ⊑ y}, ordered by rep.
std::vector<CosetMorphism> hom(const OrbitInstance& inst, Point x, Point y);

/// gamma·G_x as a morphism x -> y; throws std::invalid_argument if it is not one.
CosetMorphism make_coset(const OrbitInstance& inst, Point x, Point y, Element gamma);

CosetMorphism identity_coset(const OrbitInstance& inst, Point x);

/// (delta G_y) ⋄ (gamma G_x) = delta gamma G_x. Throws SourceTargetMismatch.
CosetMorphism compose_coset(const OrbitInstance& inst, const CosetMorphism& h,
                            const CosetMorphism& f);

/// gamma G_x |-> act(h)(gamma) G_{hx}, a morphism hx -> hy.
CosetMorphism act(const OrbitInstance& inst, Element h, const CosetMorphism& f);

/// gamma_x = gamma G_x : x -> gamma ▷ x.
CosetMorphism natural_component(const OrbitInstance& inst, Element gamma, Point x);

/// ∀u ⋐ y°: G_u ∩ g G_x f^-1 ≠ ∅. Throws MissingDuality, SourceTargetMismatch.
bool equivalent(const OrbitInstance& inst, const CosetMorphism& f, const CosetMorphism& g);

/// Partition of hom(x, y) into ≡-classes ordered by canonical member. Throws
/// NotAnEquivalence (with witnesses) if ≡ fails reflexivity, symmetry or
/// transitivity on this hom-set.
std::vector<HoMorphism> ho_hom(const OrbitInstance& inst, Point x, Point y);

HoMorphism ho_class_of(const OrbitInstance& inst, const CosetMorphism& f);
HoMorphism ho_identity(const OrbitInstance& inst, Point x);
/// Class of the composite of canonical members.
HoMorphism ho_compose(const OrbitInstance& inst, const HoMorphism& h, const HoMorphism& f);

/// gamma^-1 G_{y°} : y° -> x° for f = gamma G_x : x -> y.
CosetMorphism dual_member(const OrbitInstance& inst, const CosetMorphism& f);

/// [gamma G_x]° = [gamma^-1 G_{y°}], computed from the canonical member.
/// Throws MissingDuality, or TubularConditionFailed when the tubular
/// condition does not verify.
HoMorphism dual_morphism(const OrbitInstance& inst, const HoMorphism& m);

// Exhaustive checks. Each returns one record per check id.

CheckRecord check_category_laws(const OrbitInstance& inst);
CheckRecord check_monic(const OrbitInstance& inst);
CheckRecord check_action_functor(const OrbitInstance& inst);
CheckRecord check_natural_components(const OrbitInstance& inst);
CheckRecord check_equivalence_relation(const OrbitInstance& inst);
CheckRecord check_congruence(const OrbitInstance& inst, Execution exec = Execution::Parallel);
CheckRecord check_action_descends(const OrbitInstance& inst);
/// Records: duality-well-defined, duality-contravariant, duality-unit,
/// duality-involution, duality-equivariant.
Report check_duality_functor(const OrbitInstance& inst);

/// ho-class counts for every nonempty hom-set.
CheckRecord ho_class_summary(const OrbitInstance& inst);

/// S = all subgroups of A, ⊑ = reverse inclusion, G_x = x, crossed module
/// conjugation_module(A). Labels default to the member lists.
OrbitInstance orbit_category_of_group(const FiniteGroup& a, std::vector<std::string> labels = {},
                                      std::string name = {});

/// Number of A-equivariant maps A/y -> A/x, by brute force over images of
/// the base coset.
std::size_t equivariant_map_count(const FiniteGroup& a, const Subgroup& x, const Subgroup& y);

/// |hom(x, y)| against equivariant_map_count for every pair of an orbit
/// category of a group.
CheckRecord check_oracle_hom_counts(const OrbitInstance& inst);

/// Validators, category checks and, when present, the ho-level and duality
/// checks, lemma checks and the oracle comparison.
Report run_theorem(const OrbitInstance& inst, Execution exec = Execution::Parallel);

}  // namespace orbitcat::orbit
