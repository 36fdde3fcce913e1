#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "CLI11.hpp"
#include "orbitcat/instance_file.hpp"
#include "orbitcat/instances.hpp"
#include "orbitcat/json_text.hpp"
#include "orbitcat/orbit_cat.hpp"
#include "orbitcat/para_cat.hpp"

namespace orbitcat::cli {

namespace {

using io::Format;
using io::Json;
using orbit::OrbitInstance;
using para::ParaMorphism;

/// Input that parses but names something that does not exist, or flags that
/// do not fit together.
class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ParaMorphism morphism_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') return io::parse_morphism(text);
  return para::parse_literal(text);
}

Json morphism_json(const ParaMorphism& f) {
  Json j = Json::object();
  j["n"] = f.source_rank();
  j["m"] = f.target_rank();
  j["values"] = f.values();
  return j;
}

void print_morphism(std::ostream& out, const ParaMorphism& f, Format format) {
  if (format == Format::Structured) out << io::pretty(morphism_json(f));
  else out << para::to_literal(f) << "\n";
}

int exit_for(const Report& report) { return report.all_passed() ? kExitPass : kExitFail; }

struct Context {
  std::string format_name = "text";
  Format format() const { return io::parse_format(format_name); }
};

// para ------------------------------------------------------------------

struct ParaArgs {
  std::vector<std::string> literals;
  int n = 0;
  int m = 0;
  int window = 2;
  std::string in = "delta";
};

int para_compose(const ParaArgs& a, const Context& ctx, std::ostream& out) {
  const auto g = morphism_arg(a.literals.at(0));
  const auto f = morphism_arg(a.literals.at(1));
  print_morphism(out, para::compose(g, f), ctx.format());
  return kExitPass;
}

int para_dual(const ParaArgs& a, const Context& ctx, std::ostream& out) {
  print_morphism(out, para::cyclic_dual(morphism_arg(a.literals.at(0))), ctx.format());
  return kExitPass;
}

int para_check(const ParaArgs& a, const Context& ctx, std::ostream& out) {
  const auto f = morphism_arg(a.literals.at(0));
  const auto d = para::cyclic_dual(f);
  Report report;
  report.add({"membership", true,
              std::string("in K: ") + (para::in_K(f) ? "yes" : "no") +
                  ", in Delta: " + (para::in_Delta(f) ? "yes" : "no"),
              {}});
  report.add({"dual", true, para::to_literal(d), {}});
  const bool involution = para::cyclic_dual(d) == f;
  report.add({"involution", involution, involution ? "f°° = f" : "f°° != f",
              involution ? std::vector<std::string>{} : std::vector{para::to_literal(para::cyclic_dual(d))}});
  const bool k_ok = !para::in_K(f) || para::in_K(d);
  report.add({"k-restriction", k_ok,
              para::in_K(f) ? (k_ok ? "f in K and f° in K" : "f in K but f° not in K")
                            : "f not in K",
              {}});
  const bool escapes = para::in_Delta(f) && !para::in_Delta(d);
  report.add({"delta-escape", true,
              escapes ? "f in Delta, f° leaves Delta" : "no escape from Delta", {}});
  const auto canon = para::lambda_canonical(f);
  const bool idempotent = para::lambda_canonical(canon) == canon;
  report.add({"lambda-canonical", idempotent, para::to_literal(canon), {}});
  out << io::render(report, ctx.format());
  return exit_for(report);
}

int para_enumerate(const ParaArgs& a, const Context& ctx, std::ostream& out) {
  const auto all = para::enumerate(a.n, a.m, a.window);
  if (ctx.format() == Format::Structured) {
    Json list = Json::array();
    for (const auto& f : all) list.push_back(morphism_json(f));
    Json root = Json::object();
    root["count"] = all.size();
    root["morphisms"] = std::move(list);
    out << io::pretty(root);
  } else {
    for (const auto& f : all) out << para::to_literal(f) << "\n";
  }
  return kExitPass;
}

int para_count(const ParaArgs& a, const Context& ctx, std::ostream& out) {
  const auto all = para::enumerate(a.n, a.m, a.window);
  std::size_t count = 0;
  if (a.in == "delta") {
    count = static_cast<std::size_t>(std::count_if(all.begin(), all.end(), para::in_Delta));
  } else if (a.in == "k") {
    count = static_cast<std::size_t>(std::count_if(all.begin(), all.end(), para::in_K));
  } else {
    std::set<ParaMorphism> classes;
    for (const auto& f : all) classes.insert(para::lambda_canonical(f));
    count = classes.size();
  }
  if (ctx.format() == Format::Structured) {
    Json root = Json::object();
    root["n"] = a.n;
    root["m"] = a.m;
    root["window"] = a.window;
    root["in"] = a.in;
    root["count"] = count;
    out << io::pretty(root);
  } else {
    out << count << "\n";
  }
  return kExitPass;
}

// orbit -----------------------------------------------------------------

struct OrbitArgs {
  std::string file;
  std::string from;
  std::string to;
  std::string member;
  bool serial = false;
};

orbit::Point point_arg(const OrbitInstance& inst, const std::string& name) {
  const auto p = inst.find_point(name);
  if (p < 0) throw BadInput("no point named \"" + name + "\"");
  return p;
}

Json coset_json(const OrbitInstance& inst, const orbit::CosetMorphism& f) {
  const auto& g = inst.source_group();
  Json members = Json::array();
  for (auto e : group::cosets(g, inst.stalk(f.source)))
    if (std::find(e.begin(), e.end(), f.rep) != e.end())
      for (auto x : e) members.push_back(g.label(x));
  Json j = Json::object();
  j["rep"] = g.label(f.rep);
  j["coset"] = std::move(members);
  return j;
}

Json class_json(const OrbitInstance& inst, const orbit::HoMorphism& m) {
  Json reps = Json::array();
  for (const auto& f : m.members) reps.push_back(inst.source_group().label(f.rep));
  Json j = Json::object();
  j["source"] = inst.preorder().elements[static_cast<std::size_t>(m.source)];
  j["target"] = inst.preorder().elements[static_cast<std::size_t>(m.target)];
  j["members"] = std::move(reps);
  return j;
}

int orbit_validate(const OrbitArgs& a, const Context& ctx, std::ostream& out) {
  const auto parts = io::parse_parts(io::read_file(a.file));
  const auto report = orbit::validate_parts(parts.cm, parts.preorder, parts.presheaf,
                                            parts.duality, parts.cosieve);
  out << io::render(report, ctx.format());
  return exit_for(report);
}

int orbit_hom(const OrbitArgs& a, const Context& ctx, std::ostream& out) {
  const auto inst = io::load_instance(a.file);
  const auto x = point_arg(inst, a.from);
  const auto y = point_arg(inst, a.to);
  const auto homs = orbit::hom(inst, x, y);
  if (ctx.format() == Format::Structured) {
    Json list = Json::array();
    for (const auto& f : homs) list.push_back(coset_json(inst, f));
    Json root = Json::object();
    root["source"] = a.from;
    root["target"] = a.to;
    root["count"] = homs.size();
    root["morphisms"] = std::move(list);
    out << io::pretty(root);
  } else {
    out << "hom(" << a.from << ", " << a.to << "): " << homs.size() << " morphism(s)\n";
    for (const auto& f : homs) out << "  " << orbit::describe(inst, f) << "\n";
  }
  return kExitPass;
}

int orbit_ho(const OrbitArgs& a, const Context& ctx, std::ostream& out) {
  const auto inst = io::load_instance(a.file);
  const auto x = point_arg(inst, a.from);
  const auto y = point_arg(inst, a.to);
  const auto classes = orbit::ho_hom(inst, x, y);
  if (ctx.format() == Format::Structured) {
    Json list = Json::array();
    for (const auto& m : classes) list.push_back(class_json(inst, m));
    Json root = Json::object();
    root["source"] = a.from;
    root["target"] = a.to;
    root["count"] = classes.size();
    root["classes"] = std::move(list);
    out << io::pretty(root);
  } else {
    out << "ho(" << a.from << ", " << a.to << "): " << classes.size() << " class(es)\n";
    for (const auto& m : classes) out << "  " << orbit::describe(inst, m) << "\n";
  }
  return kExitPass;
}

int orbit_dual(const OrbitArgs& a, const Context& ctx, std::ostream& out) {
  const auto inst = io::load_instance(a.file);
  const auto x = point_arg(inst, a.from);
  const auto y = point_arg(inst, a.to);
  auto classes = orbit::ho_hom(inst, x, y);
  if (!a.member.empty()) {
    const auto gamma = inst.source_group().find_label(a.member);
    if (gamma < 0) throw BadInput("no element named \"" + a.member + "\"");
    const auto m = orbit::ho_class_of(inst, orbit::make_coset(inst, x, y, gamma));
    classes = {m};
  }
  Json list = Json::array();
  for (const auto& m : classes) {
    const auto d = orbit::dual_morphism(inst, m);
    if (ctx.format() == Format::Structured) {
      Json pair = Json::object();
      pair["class"] = class_json(inst, m);
      pair["dual"] = class_json(inst, d);
      list.push_back(std::move(pair));
    } else {
      out << orbit::describe(inst, m) << "  |->  " << orbit::describe(inst, d) << "\n";
    }
  }
  if (ctx.format() == Format::Structured) out << io::pretty(list);
  return kExitPass;
}

int orbit_theorem(const OrbitArgs& a, const Context& ctx, std::ostream& out) {
  const auto inst = io::load_instance(a.file);
  const auto report = orbit::run_theorem(inst, a.serial ? Execution::Serial : Execution::Parallel);
  out << io::render(report, ctx.format());
  return exit_for(report);
}

// instances -------------------------------------------------------------

struct InstancesArgs {
  std::string name;
  std::string output;
  bool serial = false;
};

int instances_list(const Context& ctx, std::ostream& out) {
  if (ctx.format() == Format::Structured) {
    Json list = Json::array();
    for (const auto& e : instances::catalog()) {
      Json j = Json::object();
      j["name"] = e.name;
      j["provenance"] = e.provenance;
      j["checks"] = e.checks.size();
      list.push_back(std::move(j));
    }
    out << io::pretty(list);
  } else {
    std::size_t width = 0;
    for (const auto& e : instances::catalog()) width = std::max(width, e.name.size());
    for (const auto& e : instances::catalog())
      out << e.name << std::string(width + 2 - e.name.size(), ' ') << e.provenance << "\n";
  }
  return kExitPass;
}

int instances_emit(const InstancesArgs& a, std::ostream& out) {
  const auto text = io::emit_instance(instances::build(a.name));
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!(file << text)) throw BadInput(a.output + ": cannot write");
  }
  return kExitPass;
}

int instances_check(const InstancesArgs& a, const Context& ctx, std::ostream& out) {
  const auto report =
      instances::run_expected_checks(a.name, a.serial ? Execution::Serial : Execution::Parallel);
  out << io::render(report, ctx.format());
  return exit_for(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Paracyclic duality and orbit categories of G-presheaves", "orbitcat"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--format", ctx.format_name, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  ParaArgs pa;
  auto* para = app.add_subcommand("para", "Paracyclic morphisms and cyclic duality");
  para->require_subcommand(1);
  auto* compose = para->add_subcommand("compose", "Composite g after f");
  compose->add_option("g", pa.literals, "Morphisms g then f")->required()->expected(2);
  auto* dual = para->add_subcommand("dual", "Cyclic dual");
  dual->add_option("f", pa.literals, "Morphism")->required()->expected(1);
  auto* check = para->add_subcommand("check", "Membership and duality invariants");
  check->add_option("f", pa.literals, "Morphism")->required()->expected(1);
  auto* enumerate = para->add_subcommand("enumerate", "All morphisms n -> m in a window");
  auto* count = para->add_subcommand("count", "Count morphisms n -> m in a subcategory");
  for (auto* sub : {enumerate, count}) {
    sub->add_option("--n", pa.n, "Source rank")->required()->check(CLI::Range(0, 64));
    sub->add_option("--m", pa.m, "Target rank")->required()->check(CLI::Range(0, 64));
    sub->add_option("--window", pa.window, "Bound on f(0) in multiples of m+1")
        ->check(CLI::Range(0, 64));
  }
  count->add_option("--in", pa.in, "Subcategory")->check(CLI::IsMember({"delta", "k", "lambda"}));

  OrbitArgs oa;
  auto* orbit = app.add_subcommand("orbit", "Orbit category of an instance file");
  orbit->require_subcommand(1);
  auto* validate = orbit->add_subcommand("validate", "Run every component validator");
  auto* hom = orbit->add_subcommand("hom", "List hom(from, to)");
  auto* ho = orbit->add_subcommand("ho", "List the ≡-classes of hom(from, to)");
  auto* odual = orbit->add_subcommand("dual", "Lifted duality on ho-classes");
  auto* theorem = orbit->add_subcommand("theorem", "Run every check");
  for (auto* sub : {validate, hom, ho, odual, theorem})
    sub->add_option("file", oa.file, "Instance file")->required();
  for (auto* sub : {hom, ho, odual}) {
    sub->add_option("--from", oa.from, "Source point")->required();
    sub->add_option("--to", oa.to, "Target point")->required();
  }
  odual->add_option("--class", oa.member, "A member rep of the class (default: all classes)");
  theorem->add_flag("--serial", oa.serial, "Use the serial reference scans");

  InstancesArgs ia;
  auto* inst = app.add_subcommand("instances", "Catalog of named instances");
  inst->require_subcommand(1);
  auto* list = inst->add_subcommand("list", "List the catalog");
  auto* emit = inst->add_subcommand("emit", "Write an instance file");
  auto* icheck = inst->add_subcommand("check", "Run the expected checks of an entry");
  for (auto* sub : {emit, icheck}) sub->add_option("name", ia.name, "Entry name")->required();
  emit->add_option("-o,--output", ia.output, "Output path (default: stdout)");
  icheck->add_flag("--serial", ia.serial, "Use the serial reference scans");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    if (compose->parsed()) return para_compose(pa, ctx, out);
    if (dual->parsed()) return para_dual(pa, ctx, out);
    if (check->parsed()) return para_check(pa, ctx, out);
    if (enumerate->parsed()) return para_enumerate(pa, ctx, out);
    if (count->parsed()) return para_count(pa, ctx, out);
    if (validate->parsed()) return orbit_validate(oa, ctx, out);
    if (hom->parsed()) return orbit_hom(oa, ctx, out);
    if (ho->parsed()) return orbit_ho(oa, ctx, out);
    if (odual->parsed()) return orbit_dual(oa, ctx, out);
    if (theorem->parsed()) return orbit_theorem(oa, ctx, out);
    if (list->parsed()) return instances_list(ctx, out);
    if (emit->parsed()) return instances_emit(ia, out);
    if (icheck->parsed()) return instances_check(ia, ctx, out);
  } catch (const instances::UnknownInstance& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const orbit::InvalidInstance& e) {
    err << "error: " << e.what() << "\n" << io::render(e.report(), Format::Text);
    return kExitFail;
  } catch (const orbit::MissingDuality& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const orbit::TubularConditionFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const orbit::NotAnEquivalence& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& w : e.witnesses()) err << "    " << w << "\n";
    return kExitFail;
  } catch (const io::InstanceFileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const para::LiteralParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const para::InvalidMorphism& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const para::RankMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    // make_coset on a non-morphism, or an unknown label.
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  err << "error: no command\n";
  return kExitMalformed;
}

}  // namespace orbitcat::cli
