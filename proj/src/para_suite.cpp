#include "orbitcat/para_suite.hpp"

#include <algorithm>

#include <omp.h>

namespace orbitcat::para {

namespace {

class WitnessSink {
 public:
  explicit WitnessSink(std::size_t cap) : cap_(cap) {}

  void push(std::string w) {
    items_.push_back(std::move(w));
    if (items_.size() > 4 * cap_ + 16) trim();
  }

  void merge(WitnessSink&& other) {
    for (auto& w : other.items_) items_.push_back(std::move(w));
    trim();
  }

  std::vector<std::string> finish() {
    trim();
    return std::move(items_);
  }

 private:
  void trim() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    if (items_.size() > cap_) items_.resize(cap_);
  }

  std::size_t cap_;
  std::vector<std::string> items_;
};

struct Tally {
  std::size_t composable_pairs = 0;
  std::size_t contravariance_failures = 0;
  std::size_t closure_failures = 0;
};

std::vector<ParaMorphism> all_morphisms(const DualitySuiteConfig& config) {
  std::vector<ParaMorphism> out;
  for (int n = 0; n <= config.max_rank; ++n)
    for (int m = 0; m <= config.max_rank; ++m) {
      auto hom = enumerate(n, m, config.window);
      out.insert(out.end(), hom.begin(), hom.end());
    }
  return out;
}

std::string pair_literal(const ParaMorphism& g, const ParaMorphism& f) {
  return "g=" + to_literal(g) + " f=" + to_literal(f);
}

}  // namespace

DualitySuiteResult run_duality_suite_serial(const DualitySuiteConfig& config) {
  DualitySuiteResult result;
  WitnessSink sink(config.max_witnesses);
  const auto morphisms = all_morphisms(config);
  result.morphisms = morphisms.size();

  for (int n = 0; n <= config.max_rank; ++n)
    if (cyclic_dual(identity(n)) != identity(n)) {
      ++result.unit_failures;
      sink.push("unit: n=" + std::to_string(n));
    }

  for (const auto& f : morphisms) {
    const auto dual = cyclic_dual(f);
    if (cyclic_dual(dual) != f) {
      ++result.involution_failures;
      sink.push("involution: f=" + to_literal(f));
    }
    if (in_K(f) && !in_K(dual)) {
      ++result.k_restriction_failures;
      sink.push("k-restriction: f=" + to_literal(f));
    }
    if (in_Delta(f) && !in_Delta(dual)) result.delta_escapes.push_back(f);
  }

  for (const auto& f : morphisms)
    for (const auto& g : morphisms) {
      if (g.source_rank() != f.target_rank()) continue;
      ++result.composable_pairs;
      const auto gf = compose(g, f);
      if (cyclic_dual(gf) != compose(cyclic_dual(f), cyclic_dual(g))) {
        ++result.contravariance_failures;
        sink.push("contravariance: " + pair_literal(g, f));
      }
      const bool k_ok = !(in_K(f) && in_K(g)) || in_K(gf);
      const bool delta_ok = !(in_Delta(f) && in_Delta(g)) || in_Delta(gf);
      if (!k_ok || !delta_ok) {
        ++result.closure_failures;
        sink.push("closure: " + pair_literal(g, f));
      }
    }

  std::sort(result.delta_escapes.begin(), result.delta_escapes.end());
  result.witnesses = sink.finish();
  return result;
}

DualitySuiteResult run_duality_suite_parallel(const DualitySuiteConfig& config) {
  DualitySuiteResult result;
  const auto morphisms = all_morphisms(config);
  const auto count = static_cast<std::ptrdiff_t>(morphisms.size());
  result.morphisms = morphisms.size();

  std::vector<ParaMorphism> duals(morphisms.begin(), morphisms.end());
  std::vector<std::vector<std::size_t>> by_source(static_cast<std::size_t>(config.max_rank) + 1);
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    by_source[static_cast<std::size_t>(morphisms[i].source_rank())].push_back(i);

  WitnessSink sink(config.max_witnesses);
  for (int n = 0; n <= config.max_rank; ++n)
    if (cyclic_dual(identity(n)) != identity(n)) {
      ++result.unit_failures;
      sink.push("unit: n=" + std::to_string(n));
    }

  std::size_t involution = 0;
  std::size_t k_restriction = 0;
  std::vector<char> escapes(morphisms.size(), 0);

#pragma omp parallel
  {
    WitnessSink local(config.max_witnesses);
#pragma omp for schedule(static) reduction(+ : involution, k_restriction)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto& f = morphisms[static_cast<std::size_t>(i)];
      auto dual = cyclic_dual(f);
      if (cyclic_dual(dual) != f) {
        ++involution;
        local.push("involution: f=" + to_literal(f));
      }
      if (in_K(f) && !in_K(dual)) {
        ++k_restriction;
        local.push("k-restriction: f=" + to_literal(f));
      }
      escapes[static_cast<std::size_t>(i)] = in_Delta(f) && !in_Delta(dual);
      duals[static_cast<std::size_t>(i)] = std::move(dual);
    }
#pragma omp critical
    sink.merge(std::move(local));
  }

  Tally total;
#pragma omp parallel
  {
    Tally tally;
    WitnessSink local(config.max_witnesses);
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto& f = morphisms[static_cast<std::size_t>(i)];
      const auto& f_dual = duals[static_cast<std::size_t>(i)];
      const auto& candidates = by_source[static_cast<std::size_t>(f.target_rank())];
      for (std::size_t j : candidates) {
        const auto& g = morphisms[j];
        ++tally.composable_pairs;
        const auto gf = compose(g, f);
        if (cyclic_dual(gf) != compose(f_dual, duals[j])) {
          ++tally.contravariance_failures;
          local.push("contravariance: " + pair_literal(g, f));
        }
        const bool k_ok = !(in_K(f) && in_K(g)) || in_K(gf);
        const bool delta_ok = !(in_Delta(f) && in_Delta(g)) || in_Delta(gf);
        if (!k_ok || !delta_ok) {
          ++tally.closure_failures;
          local.push("closure: " + pair_literal(g, f));
        }
      }
    }
#pragma omp critical
    {
      total.composable_pairs += tally.composable_pairs;
      total.contravariance_failures += tally.contravariance_failures;
      total.closure_failures += tally.closure_failures;
      sink.merge(std::move(local));
    }
  }

  result.involution_failures = involution;
  result.k_restriction_failures = k_restriction;
  result.composable_pairs = total.composable_pairs;
  result.contravariance_failures = total.contravariance_failures;
  result.closure_failures = total.closure_failures;
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (escapes[i]) result.delta_escapes.push_back(morphisms[i]);
  std::sort(result.delta_escapes.begin(), result.delta_escapes.end());
  result.witnesses = sink.finish();
  return result;
}

}  // namespace orbitcat::para
