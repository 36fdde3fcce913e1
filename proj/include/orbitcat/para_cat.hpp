#pragma once

// Morphisms of the paracyclic category and its subcategories K (duplicial)
// and Delta (simplicial), cyclic duality, and the quotient to the cyclic
// category.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbitcat::para {

using Value = std::int64_t;

class InvalidMorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class LiteralParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Floor division for a positive divisor.
constexpr Value floor_div(Value a, Value b) {
  Value q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// A morphism n -> m: a monotone map f: Z -> Z with f(j + n + 1) = f(j) + m + 1.
/// Only the window f(0), ..., f(n) is stored; periodicity gives the rest.
class ParaMorphism {
 public:
  /// Throws InvalidMorphism unless values has n + 1 entries, is nondecreasing
  /// and satisfies values[n] <= values[0] + m + 1.
  ParaMorphism(int source_rank, int target_rank, std::vector<Value> values);

  int source_rank() const noexcept { return n_; }
  int target_rank() const noexcept { return m_; }
  const std::vector<Value>& values() const noexcept { return values_; }

  Value operator()(Value j) const noexcept {
    const Value period = n_ + 1;
    const Value q = floor_div(j, period);
    return values_[static_cast<std::size_t>(j - q * period)] + q * (m_ + 1);
  }

  friend bool operator==(const ParaMorphism&, const ParaMorphism&) = default;
  friend std::strong_ordering operator<=>(const ParaMorphism&, const ParaMorphism&) = default;

 private:
  int n_;
  int m_;
  std::vector<Value> values_;
};

inline Value eval(const ParaMorphism& f, Value j) { return f(j); }

/// g after f. Throws RankMismatch unless f.target_rank() == g.source_rank().
ParaMorphism compose(const ParaMorphism& g, const ParaMorphism& f);

ParaMorphism identity(int n);

/// f°(i) = max { j | -f(-j) <= i }, a morphism m -> n.
ParaMorphism cyclic_dual(const ParaMorphism& f);

bool in_K(const ParaMorphism& f);
bool in_Delta(const ParaMorphism& f);

/// (n-1) -> n, the monotone injection skipping i.
ParaMorphism face(int n, int i);
/// (n+1) -> n, the monotone surjection hitting i twice.
ParaMorphism degeneracy(int n, int i);
/// n -> n, j |-> j + 1.
ParaMorphism cycle(int n);

/// Every valid morphism n -> m with f(0) in [-window*(m+1), window*(m+1)],
/// in lexicographic order of the window values.
std::vector<ParaMorphism> enumerate(int n, int m, int window);

/// Representative of f modulo translation by multiples of m + 1, chosen with
/// 0 <= f(0) <= m.
ParaMorphism lambda_canonical(const ParaMorphism& f);

/// `n m : v0 v1 ... vn`
std::string to_literal(const ParaMorphism& f);

/// Inverse of to_literal. Accepts any run of blanks between tokens. Throws
/// LiteralParseError on syntax errors and InvalidMorphism when the values do
/// not describe a morphism.
ParaMorphism parse_literal(std::string_view text);

}  // namespace orbitcat::para
