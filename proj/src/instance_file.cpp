#include "orbitcat/instance_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "orbitcat/json_text.hpp"

namespace orbitcat::io {

namespace {

using group::Element;
using group::FiniteGroup;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InstanceFileError(path + ": " + what);
}

void expect_keys(const Json& j, const std::string& path, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) fail(path, std::string("missing key \"") + k + "\"");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) fail(path, "unknown key \"" + key + "\"");
}

const Json& array(const Json& j, const std::string& path, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) fail(path, "expected an array");
  if (size && j.size() != *size)
    fail(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

int integer(const Json& j, const std::string& path, int lo, int hi) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v >= hi)
    fail(path, "index " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + ")");
  return static_cast<int>(v);
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<int> int_row(const Json& j, const std::string& path, std::optional<std::size_t> size,
                         int hi) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array(j, path, size).size(); ++i)
    out.push_back(integer(j[i], path + "[" + std::to_string(i) + "]", 0, hi));
  return out;
}

preorder::Relation relation(const Json& j, const std::string& path, std::size_t n) {
  preorder::Relation r(static_cast<int>(n));
  array(j, path, n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto row_path = path + "[" + std::to_string(x) + "]";
    array(j[x], row_path, n);
    for (std::size_t y = 0; y < n; ++y) {
      if (!j[x][y].is_boolean()) fail(row_path + "[" + std::to_string(y) + "]", "expected a boolean");
      r.set(static_cast<int>(x), static_cast<int>(y), j[x][y].get<bool>());
    }
  }
  return r;
}

FiniteGroup parse_group(const Json& j, const std::string& path) {
  expect_keys(j, path, {"order", "table"}, {"labels"});
  const int order = integer(j["order"], path + ".order", 1, 1 << 16);
  std::vector<std::vector<Element>> table;
  array(j["table"], path + ".table", static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a)
    table.push_back(int_row(j["table"][a], path + ".table[" + std::to_string(a) + "]",
                            static_cast<std::size_t>(order), order));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    array(j["labels"], path + ".labels", static_cast<std::size_t>(order));
    for (int a = 0; a < order; ++a)
      labels.push_back(text(j["labels"][a], path + ".labels[" + std::to_string(a) + "]"));
  }
  try {
    return FiniteGroup(std::move(table), std::move(labels));
  } catch (const group::GroupError& e) {
    fail(path, e.what());
  }
}

Json group_json(const FiniteGroup& g) {
  Json j = Json::object();
  j["order"] = g.order();
  j["table"] = g.table();
  j["labels"] = g.labels();
  return j;
}

Json relation_json(const preorder::Relation& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows()) {
    Json out = Json::array();
    for (bool b : row) out.push_back(b);
    rows.push_back(std::move(out));
  }
  return rows;
}

Json parse_json(std::string_view text_in) {
  try {
    return Json::parse(text_in.begin(), text_in.end());
  } catch (const Json::parse_error& e) {
    throw InstanceFileError(std::string("malformed JSON: ") + e.what());
  }
}

bool scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

// Arrays of scalars stay on one line; everything else is one entry per line.
void write(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out << ",\n";
      first = false;
      out << inner << Json(key).dump() << ": ";
      write(out, value, indent + 2);
    }
    out << "\n" << pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out << "[]";
      return;
    }
    if (std::all_of(j.begin(), j.end(), scalar)) {
      out << "[";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
      out << "]";
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << (i ? ",\n" : "") << inner;
      write(out, j[i], indent + 2);
    }
    out << "\n" << pad << "]";
  } else {
    out << j.dump();
  }
}

}  // namespace

std::string pretty(const Json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << "\n";
  return out.str();
}

InstanceParts parse_parts(std::string_view text_in) {
  const Json root = parse_json(text_in);
  expect_keys(root, "$", {"version", "crossed_module", "preorder", "presheaf"},
              {"metadata", "duality", "cosieve"});
  if (!root["version"].is_number_integer() || root["version"].get<long long>() != kFormatVersion)
    fail("$.version", "unsupported format version");

  InstanceParts parts{.cm = xmod::conjugation_module(group::trivial_group()),
                      .preorder = {},
                      .presheaf = {},
                      .duality = std::nullopt,
                      .cosieve = std::nullopt,
                      .metadata = {}};
  if (root.contains("metadata")) {
    const auto& m = root["metadata"];
    expect_keys(m, "$.metadata", {}, {"name", "provenance", "kind"});
    if (m.contains("name")) parts.metadata.name = text(m["name"], "$.metadata.name");
    if (m.contains("provenance"))
      parts.metadata.provenance = text(m["provenance"], "$.metadata.provenance");
    if (m.contains("kind")) parts.metadata.kind = text(m["kind"], "$.metadata.kind");
  }

  const auto& cmj = root["crossed_module"];
  expect_keys(cmj, "$.crossed_module", {"G", "A", "t", "act"});
  auto g = parse_group(cmj["G"], "$.crossed_module.G");
  auto a = parse_group(cmj["A"], "$.crossed_module.A");
  auto t = int_row(cmj["t"], "$.crossed_module.t", static_cast<std::size_t>(g.order()), a.order());
  std::vector<group::Permutation> act;
  array(cmj["act"], "$.crossed_module.act", static_cast<std::size_t>(a.order()));
  for (int h = 0; h < a.order(); ++h)
    act.push_back(int_row(cmj["act"][h], "$.crossed_module.act[" + std::to_string(h) + "]",
                          static_cast<std::size_t>(g.order()), g.order()));
  parts.cm = xmod::CrossedModule{std::move(g), std::move(a), std::move(t), std::move(act)};
  const auto& cm = parts.cm;

  const auto& pj = root["preorder"];
  expect_keys(pj, "$.preorder", {"elements", "leq", "action"});
  array(pj["elements"], "$.preorder.elements");
  const std::size_t n = pj["elements"].size();
  for (std::size_t x = 0; x < n; ++x)
    parts.preorder.elements.push_back(
        text(pj["elements"][x], "$.preorder.elements[" + std::to_string(x) + "]"));
  parts.preorder.leq = relation(pj["leq"], "$.preorder.leq", n);
  parts.preorder.action.set_size = static_cast<int>(n);
  array(pj["action"], "$.preorder.action", static_cast<std::size_t>(cm.arrows.order()));
  for (int h = 0; h < cm.arrows.order(); ++h)
    parts.preorder.action.perms.push_back(int_row(
        pj["action"][h], "$.preorder.action[" + std::to_string(h) + "]", n, static_cast<int>(n)));

  array(root["presheaf"], "$.presheaf", n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto path = "$.presheaf[" + std::to_string(x) + "]";
    auto members = int_row(root["presheaf"][x], path, std::nullopt, cm.source.order());
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      fail(path, "repeated element");
    try {
      parts.presheaf.stalks.push_back(group::Subgroup::from_members(cm.source, std::move(members)));
    } catch (const group::GroupError& e) {
      fail(path, e.what());
    }
  }

  if (root.contains("duality")) {
    auto dual = int_row(root["duality"], "$.duality", n, static_cast<int>(n));
    parts.duality = preorder::SelfDuality{std::move(dual)};
  }
  if (root.contains("cosieve"))
    parts.cosieve = preorder::ACosieve{relation(root["cosieve"], "$.cosieve", n)};
  return parts;
}

orbit::OrbitInstance parse_instance(std::string_view text_in) {
  auto p = parse_parts(text_in);
  return orbit::OrbitInstance::make(std::move(p.cm), std::move(p.preorder), std::move(p.presheaf),
                                    std::move(p.duality), std::move(p.cosieve),
                                    std::move(p.metadata));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceFileError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

orbit::OrbitInstance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

std::string emit_instance(const orbit::OrbitInstance& inst) {
  const auto& cm = inst.crossed_module();
  Json root = Json::object();
  root["version"] = kFormatVersion;
  const auto& meta = inst.metadata();
  root["metadata"] = {{"name", meta.name}, {"provenance", meta.provenance}, {"kind", meta.kind}};
  Json cmj = Json::object();
  cmj["G"] = group_json(cm.source);
  cmj["A"] = group_json(cm.arrows);
  cmj["t"] = cm.target;
  cmj["act"] = cm.action;
  root["crossed_module"] = std::move(cmj);
  const auto& pre = inst.preorder();
  Json pj = Json::object();
  pj["elements"] = pre.elements;
  pj["leq"] = relation_json(pre.leq);
  pj["action"] = pre.action.perms;
  root["preorder"] = std::move(pj);
  Json sheaf = Json::array();
  for (const auto& s : inst.presheaf().stalks) sheaf.push_back(s.members());
  root["presheaf"] = std::move(sheaf);
  if (inst.duality()) root["duality"] = inst.duality()->dual;
  if (inst.cosieve()) root["cosieve"] = relation_json(inst.cosieve()->rel);
  return pretty(root);
}

std::string emit_morphism(const para::ParaMorphism& f) {
  Json j = Json::object();
  j["n"] = f.source_rank();
  j["m"] = f.target_rank();
  j["values"] = f.values();
  return pretty(j);
}

para::ParaMorphism parse_morphism(std::string_view text_in) {
  const Json j = parse_json(text_in);
  expect_keys(j, "$", {"n", "m", "values"});
  const int n = integer(j["n"], "$.n", 0, 1 << 20);
  const int m = integer(j["m"], "$.m", 0, 1 << 20);
  array(j["values"], "$.values");
  std::vector<para::Value> values;
  for (std::size_t i = 0; i < j["values"].size(); ++i) {
    if (!j["values"][i].is_number_integer())
      fail("$.values[" + std::to_string(i) + "]", "expected an integer");
    values.push_back(j["values"][i].get<para::Value>());
  }
  return para::ParaMorphism(n, m, std::move(values));
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "structured") return Format::Structured;
  throw std::invalid_argument("unknown format: " + name);
}

std::string render(const Report& report, Format format) {
  if (format == Format::Structured) {
    Json records = Json::array();
    for (const auto& r : report.records()) {
      Json rec = Json::object();
      rec["id"] = r.id;
      rec["status"] = r.passed ? "pass" : "fail";
      rec["summary"] = r.summary;
      rec["witnesses"] = r.witnesses;
      records.push_back(std::move(rec));
    }
    Json root = Json::object();
    root["passed"] = report.all_passed();
    root["records"] = std::move(records);
    return pretty(root);
  }
  std::ostringstream out;
  for (const auto& r : report.records()) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.summary << "\n";
    for (const auto& w : r.witnesses) out << "    " << w << "\n";
  }
  out << (report.all_passed() ? "all " : "") << report.records().size() - report.failures() << "/"
      << report.records().size() << " checks pass\n";
  return out.str();
}

}  // namespace orbitcat::io
