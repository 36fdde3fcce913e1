#pragma once

// Catalog of named instances with their expected-check lists.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitcat/execution.hpp"
#include "orbitcat/orbit_cat.hpp"
#include "orbitcat/report.hpp"

namespace orbitcat::instances {

class UnknownInstance : public std::invalid_argument {
 public:
  explicit UnknownInstance(const std::string& name)
      : std::invalid_argument("unknown instance: " + name) {}
};

/// One machine-runnable expectation. Kinds:
///   theorem             run_theorem passes
///   theorem-core        run_theorem passes apart from the tubular condition
///                       and the lifted duality
///   tubular             tubular condition holds (expected 1) or fails (0)
///   hom-count           |hom(from, to)| == expected
///   ho-class-count      |ho_hom(from, to)| == expected
///   product-order       |G_from G_{from°}| == expected
///   oracle-matches      number of pairs where |hom| equals the oracle == expected
///   cosieve-empty       the cosieve induced by the duality is empty
///   cosieve-equals-leq  the cosieve induced by the duality equals ⊑
///   dual-class          dual of the class of rep·G_from : from -> to has
///                       expected members
struct ExpectedCheck {
  std::string kind;
  std::string from;
  std::string to;
  long expected = 0;
  std::string rep;
};

struct CatalogEntry {
  std::string name;
  std::string provenance;
  std::function<orbit::OrbitInstance()> builder;
  std::vector<ExpectedCheck> checks;
};

/// Entries in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Throws UnknownInstance.
const CatalogEntry& entry(const std::string& name);

/// Throws UnknownInstance.
orbit::OrbitInstance build(const std::string& name);

/// Runs one expectation on an instance; failures become failed records.
CheckRecord run_check(const orbit::OrbitInstance& inst, const ExpectedCheck& check,
                      Execution exec = Execution::Parallel);

/// Runs the full expected-check list. Throws UnknownInstance.
Report run_expected_checks(const std::string& name, Execution exec = Execution::Parallel);

/// Same, for an instance loaded from elsewhere that claims to be `name`.
Report run_expected_checks(const CatalogEntry& entry, const orbit::OrbitInstance& inst,
                           Execution exec = Execution::Parallel);

}  // namespace orbitcat::instances
