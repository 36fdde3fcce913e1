#include "orbitcat/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace orbitcat::group {

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw GroupError("group must have at least one element");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw GroupError("table is not square");
    for (Element e : row)
      if (e < 0 || e >= n) throw GroupError("table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw GroupError("element 0 is not the identity (witness " + std::to_string(a) + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw GroupError("table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw GroupError("element " + std::to_string(a) + " has no inverse");
  }
  if (labels_.empty()) {
    for (int a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  } else if (static_cast<int>(labels_.size()) != n) {
    throw GroupError("label count differs from group order");
  }
}

Element FiniteGroup::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<Element>(it - labels_.begin());
}

FiniteGroup trivial_group() { return FiniteGroup({{0}}, {"e"}); }

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup(std::move(table));
}

std::string cycle_notation(const Permutation& p) {
  const bool compact = p.size() < 10;
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = 1;
      if (!first && !compact) out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(p[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

FiniteGroup permutation_group(std::vector<Permutation> perms) {
  if (perms.empty()) throw GroupError("permutation group needs at least the identity");
  const std::size_t k = perms.front().size();
  Permutation id(k);
  std::iota(id.begin(), id.end(), 0);
  auto it = std::find(perms.begin(), perms.end(), id);
  if (it == perms.end()) throw GroupError("permutation set lacks the identity");
  std::rotate(perms.begin(), it, it + 1);

  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (perms[i].size() != k) throw GroupError("permutations of different degree");
    if (!index.emplace(perms[i], static_cast<Element>(i)).second)
      throw GroupError("duplicate permutation");
  }
  const std::size_t n = perms.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  Permutation prod(k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) prod[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      auto found = index.find(prod);
      if (found == index.end()) throw GroupError("permutation set is not closed");
      table[a][b] = found->second;
    }
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(cycle_notation(p));
  return FiniteGroup(std::move(table), std::move(labels));
}

FiniteGroup symmetric_group(int k) {
  if (k < 1) throw GroupError("symmetric group degree must be positive");
  std::vector<Permutation> perms;
  Permutation p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return permutation_group(std::move(perms));
}

Subgroup::Subgroup(ElementSet members, std::size_t order)
    : members_(std::move(members)), mask_(order, 0) {
  for (Element a : members_) mask_[a] = 1;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& members) {
  if (members.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (Element a : members) {
    if (!g.contains(a)) return false;
    in[a] = 1;
  }
  if (!in[g.identity()]) return false;
  for (Element a : members) {
    if (!in[g.inv(a)]) return false;
    for (Element b : members)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

Subgroup Subgroup::from_members(const FiniteGroup& g, ElementSet members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subgroup(g, members)) throw GroupError("not a subgroup: " + format_set(g, members));
  return Subgroup(std::move(members), static_cast<std::size_t>(g.order()));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  for (Element a : members_)
    if (!other.contains(a)) return false;
  return true;
}

Subgroup whole_group(const FiniteGroup& g) {
  ElementSet all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup::from_members(g, std::move(all));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup::from_members(g, {0}); }

Subgroup generate_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::deque<Element> frontier{g.identity()};
  in[g.identity()] = 1;
  for (Element s : gens) {
    if (!g.contains(s)) throw GroupError("generator out of range: " + std::to_string(s));
    if (!in[s]) {
      in[s] = 1;
      frontier.push_back(s);
    }
  }
  ElementSet members;
  while (!frontier.empty()) {
    Element a = frontier.front();
    frontier.pop_front();
    members.push_back(a);
    // In a finite group, closure under right multiplication by generators
    // already yields inverses.
    for (Element s : gens) {
      Element b = g.mul(a, s);
      if (!in[b]) {
        in[b] = 1;
        frontier.push_back(b);
      }
    }
  }
  return Subgroup::from_members(g, std::move(members));
}

Element coset_rep(const FiniteGroup& g, const Subgroup& h, Element a) {
  Element best = g.order();
  for (Element x : h.members()) best = std::min(best, g.mul(a, x));
  return best;
}

std::vector<ElementSet> cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<ElementSet> out;
  std::vector<char> seen(g.order(), 0);
  for (Element a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    ElementSet c;
    for (Element x : h.members()) c.push_back(g.mul(a, x));
    std::sort(c.begin(), c.end());
    for (Element x : c) seen[x] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, Element a, const Subgroup& h) {
  ElementSet members;
  for (Element x : h.members()) members.push_back(g.conj(a, x));
  return Subgroup::from_members(g, std::move(members));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  ElementSet members;
  for (Element a = 0; a < g.order(); ++a)
    if (conjugate_subgroup(g, a, h) == h) members.push_back(a);
  return Subgroup::from_members(g, std::move(members));
}

ElementSet product_set(const FiniteGroup& g, const ElementSet& left, const ElementSet& right) {
  std::vector<char> in(g.order(), 0);
  for (Element a : left)
    for (Element b : right) in[g.mul(a, b)] = 1;
  ElementSet out;
  for (Element a = 0; a < g.order(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

ElementSet intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  // Every subgroup is the join of its cyclic subgroups.
  std::set<ElementSet> found;
  std::vector<ElementSet> pending;
  for (Element a = 0; a < g.order(); ++a) {
    const Element gen[] = {a};
    auto c = generate_subgroup(g, gen).members();
    if (found.insert(c).second) pending.push_back(c);
  }
  std::vector<ElementSet> cyclic(found.begin(), found.end());
  while (!pending.empty()) {
    ElementSet current = std::move(pending.back());
    pending.pop_back();
    for (const auto& c : cyclic) {
      ElementSet gens = current;
      gens.insert(gens.end(), c.begin(), c.end());
      auto joined = generate_subgroup(g, gens).members();
      if (found.insert(joined).second) pending.push_back(std::move(joined));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& s : found) out.push_back(Subgroup::from_members(g, s));
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

std::string format_set(const FiniteGroup& g, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g.contains(s[i]) ? g.label(s[i]) : std::to_string(s[i]);
  }
  return out + "}";
}

ValidationReport validate_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                              const GroupHom& hom) {
  ValidationReport report;
  if (static_cast<int>(hom.map.size()) != domain.order()) {
    report.push_back({ViolationKind::Structural, "hom-size",
                      "map has " + std::to_string(hom.map.size()) + " entries, domain order " +
                          std::to_string(domain.order())});
    return report;
  }
  for (std::size_t i = 0; i < hom.map.size(); ++i)
    if (!codomain.contains(hom.map[i]))
      report.push_back({ViolationKind::Structural, "hom-range",
                        "image of " + std::to_string(i) + " out of range"});
  if (!report.empty()) return report;
  for (Element a = 0; a < domain.order(); ++a)
    for (Element b = 0; b < domain.order(); ++b)
      if (hom(domain.mul(a, b)) != codomain.mul(hom(a), hom(b)))
        report.push_back({ViolationKind::Axiom, "homomorphism",
                          "a=" + domain.label(a) + " b=" + domain.label(b)});
  return report;
}

GroupAction trivial_action(const FiniteGroup& g, int set_size) {
  Permutation id(static_cast<std::size_t>(set_size));
  std::iota(id.begin(), id.end(), 0);
  return GroupAction{set_size, std::vector<Permutation>(static_cast<std::size_t>(g.order()), id)};
}

GroupAction coset_action(const FiniteGroup& g, const Subgroup& h) {
  auto cs = cosets(g, h);
  std::vector<int> point_of(g.order(), -1);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (Element a : cs[i]) point_of[a] = static_cast<int>(i);
  GroupAction action{static_cast<int>(cs.size()), {}};
  for (Element a = 0; a < g.order(); ++a) {
    Permutation p;
    for (const auto& c : cs) p.push_back(point_of[g.mul(a, c.front())]);
    action.perms.push_back(std::move(p));
  }
  return action;
}

ValidationReport validate_action(const FiniteGroup& g, const GroupAction& action) {
  ValidationReport report;
  if (static_cast<int>(action.perms.size()) != g.order()) {
    report.push_back({ViolationKind::Structural, "action-size",
                      std::to_string(action.perms.size()) + " permutations for group of order " +
                          std::to_string(g.order())});
    return report;
  }
  for (Element a = 0; a < g.order(); ++a) {
    const auto& p = action.perms[a];
    if (static_cast<int>(p.size()) != action.set_size) {
      report.push_back({ViolationKind::Structural, "action-size",
                        "permutation of " + g.label(a) + " has wrong length"});
      continue;
    }
    std::vector<char> hit(p.size(), 0);
    bool ok = true;
    for (int x : p) {
      if (x < 0 || x >= action.set_size || hit[x]) {
        ok = false;
        break;
      }
      hit[x] = 1;
    }
    if (!ok)
      report.push_back({ViolationKind::Structural, "action-bijective",
                        "image list of " + g.label(a) + " is not a permutation"});
  }
  if (!report.empty()) return report;
  for (int x = 0; x < action.set_size; ++x)
    if (action.apply(g.identity(), x) != x)
      report.push_back({ViolationKind::Axiom, "action-identity", "x=" + std::to_string(x)});
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (int x = 0; x < action.set_size; ++x)
        if (action.apply(g.mul(a, b), x) != action.apply(a, action.apply(b, x))) {
          report.push_back({ViolationKind::Axiom, "action-compatible",
                            "g=" + g.label(a) + " h=" + g.label(b) + " x=" + std::to_string(x)});
          break;
        }
  return report;
}

}  // namespace orbitcat::group
