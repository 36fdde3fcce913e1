#include "orbitcat/para_cat.hpp"

#include <charconv>
#include <sstream>

namespace orbitcat::para {

ParaMorphism::ParaMorphism(int source_rank, int target_rank, std::vector<Value> values)
    : n_(source_rank), m_(target_rank), values_(std::move(values)) {
  if (n_ < 0 || m_ < 0) throw InvalidMorphism("ranks must be natural numbers");
  if (values_.size() != static_cast<std::size_t>(n_) + 1)
    throw InvalidMorphism("expected " + std::to_string(n_ + 1) + " values, got " +
                          std::to_string(values_.size()));
  for (std::size_t j = 1; j < values_.size(); ++j)
    if (values_[j - 1] > values_[j])
      throw InvalidMorphism("values not nondecreasing at position " + std::to_string(j));
  if (values_.back() > values_.front() + m_ + 1)
    throw InvalidMorphism("f(n) exceeds f(0) + m + 1, so the periodic extension is not monotone");
}

ParaMorphism compose(const ParaMorphism& g, const ParaMorphism& f) {
  if (f.target_rank() != g.source_rank())
    throw RankMismatch("cannot compose: target rank " + std::to_string(f.target_rank()) +
                       " differs from source rank " + std::to_string(g.source_rank()));
  std::vector<Value> out(f.values().size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = g(f.values()[j]);
  return ParaMorphism(f.source_rank(), g.target_rank(), std::move(out));
}

ParaMorphism identity(int n) {
  std::vector<Value> v(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[j] = j;
  return ParaMorphism(n, n, std::move(v));
}

ParaMorphism cyclic_dual(const ParaMorphism& f) {
  const Value n = f.source_rank();
  const Value m = f.target_rank();
  // h(j) = -f(-j) is nondecreasing with h(j + n + 1) = h(j) + m + 1, so for
  // q = floor((i + f(0)) / (m + 1)) the maximum lies in [q(n+1), (q+1)(n+1)).
  auto h = [&f](Value j) { return -f(-j); };
  std::vector<Value> out(static_cast<std::size_t>(m) + 1);
  for (Value i = 0; i <= m; ++i) {
    Value j = floor_div(i + f.values().front(), m + 1) * (n + 1);
    while (h(j + 1) <= i) ++j;
    out[static_cast<std::size_t>(i)] = j;
  }
  return ParaMorphism(static_cast<int>(m), static_cast<int>(n), std::move(out));
}

bool in_K(const ParaMorphism& f) { return f.values().front() >= 0; }

bool in_Delta(const ParaMorphism& f) {
  return in_K(f) && f.values().back() <= f.target_rank();
}

ParaMorphism face(int n, int i) {
  if (n < 1 || i < 0 || i > n)
    throw IndexOutOfRange("face(" + std::to_string(n) + ", " + std::to_string(i) + ")");
  std::vector<Value> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v[j] = j < i ? j : j + 1;
  return ParaMorphism(n - 1, n, std::move(v));
}

ParaMorphism degeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n)
    throw IndexOutOfRange("degeneracy(" + std::to_string(n) + ", " + std::to_string(i) + ")");
  std::vector<Value> v(static_cast<std::size_t>(n) + 2);
  for (int j = 0; j <= n + 1; ++j) v[j] = j <= i ? j : j - 1;
  return ParaMorphism(n + 1, n, std::move(v));
}

ParaMorphism cycle(int n) {
  if (n < 0) throw IndexOutOfRange("cycle(" + std::to_string(n) + ")");
  std::vector<Value> v(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[j] = j + 1;
  return ParaMorphism(n, n, std::move(v));
}

namespace {

void extend(int n, int m, std::vector<Value>& prefix, std::vector<ParaMorphism>& out) {
  if (prefix.size() == static_cast<std::size_t>(n) + 1) {
    out.emplace_back(n, m, prefix);
    return;
  }
  const Value hi = prefix.front() + m + 1;
  for (Value v = prefix.back(); v <= hi; ++v) {
    prefix.push_back(v);
    extend(n, m, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ParaMorphism> enumerate(int n, int m, int window) {
  std::vector<ParaMorphism> out;
  if (n < 0 || m < 0 || window < 0) return out;
  const Value bound = static_cast<Value>(window) * (m + 1);
  std::vector<Value> prefix;
  prefix.reserve(static_cast<std::size_t>(n) + 1);
  for (Value v0 = -bound; v0 <= bound; ++v0) {
    prefix.assign(1, v0);
    extend(n, m, prefix, out);
  }
  return out;
}

ParaMorphism lambda_canonical(const ParaMorphism& f) {
  const Value period = f.target_rank() + 1;
  const Value shift = floor_div(f.values().front(), period) * period;
  if (shift == 0) return f;
  std::vector<Value> v = f.values();
  for (auto& x : v) x -= shift;
  return ParaMorphism(f.source_rank(), f.target_rank(), std::move(v));
}

std::string to_literal(const ParaMorphism& f) {
  std::string s = std::to_string(f.source_rank()) + " " + std::to_string(f.target_rank()) + " :";
  for (Value v : f.values()) s += " " + std::to_string(v);
  return s;
}

namespace {

std::vector<std::string_view> split_blanks(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

Value parse_int(std::string_view tok) {
  Value v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw LiteralParseError("not an integer: '" + std::string(tok) + "'");
  return v;
}

}  // namespace

ParaMorphism parse_literal(std::string_view text) {
  auto tokens = split_blanks(text);
  if (tokens.size() < 4 || tokens[2] != ":")
    throw LiteralParseError("expected `n m : v0 ... vn`, got '" + std::string(text) + "'");
  Value n = parse_int(tokens[0]);
  Value m = parse_int(tokens[1]);
  if (n < 0 || m < 0 || n > 1'000'000 || m > 1'000'000)
    throw LiteralParseError("ranks out of range in '" + std::string(text) + "'");
  std::vector<Value> values;
  for (std::size_t k = 3; k < tokens.size(); ++k) values.push_back(parse_int(tokens[k]));
  if (values.size() != static_cast<std::size_t>(n) + 1)
    throw LiteralParseError("expected " + std::to_string(n + 1) + " values in '" +
                            std::string(text) + "'");
  return ParaMorphism(static_cast<int>(n), static_cast<int>(m), std::move(values));
}

}  // namespace orbitcat::para
