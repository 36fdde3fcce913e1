#pragma once

// Exhaustive check of the paracyclic duality laws over a bounded enumeration.
// The OpenMP kernel and the serial reference must return identical results.

#include <cstddef>
#include <string>
#include <vector>

#include "orbitcat/para_cat.hpp"

namespace orbitcat::para {

struct DualitySuiteConfig {
  int max_rank = 4;
  int window = 2;
  std::size_t max_witnesses = 16;
};

struct DualitySuiteResult {
  std::size_t morphisms = 0;
  std::size_t composable_pairs = 0;
  std::size_t involution_failures = 0;      // f°° != f
  std::size_t unit_failures = 0;            // id° != id
  std::size_t contravariance_failures = 0;  // (g f)° != f° g°
  std::size_t k_restriction_failures = 0;   // f in K, f° not in K
  std::size_t closure_failures = 0;         // K or Delta not closed under compose
  std::vector<ParaMorphism> delta_escapes;  // f in Delta with f° not in Delta, sorted
  std::vector<std::string> witnesses;       // sorted, at most max_witnesses

  bool clean() const {
    return involution_failures == 0 && unit_failures == 0 && contravariance_failures == 0 &&
           k_restriction_failures == 0 && closure_failures == 0;
  }

  friend bool operator==(const DualitySuiteResult&, const DualitySuiteResult&) = default;
};

DualitySuiteResult run_duality_suite_serial(const DualitySuiteConfig& config);
DualitySuiteResult run_duality_suite_parallel(const DualitySuiteConfig& config);

}  // namespace orbitcat::para
