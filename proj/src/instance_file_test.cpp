#include "orbitcat/instance_file.hpp"

#include "doctest.h"
#include "orbitcat/instances.hpp"
#include "orbitcat/json_text.hpp"

using namespace orbitcat;
using namespace orbitcat::io;

namespace {

Json emitted(const std::string& name) { return Json::parse(emit_instance(instances::build(name))); }

void expect_file_error(const Json& j) { CHECK_THROWS_AS(parse_instance(j.dump()), InstanceFileError); }

}  // namespace

TEST_CASE("emit is a fixpoint of parse for every catalog entry") {
  for (const auto& e : instances::catalog()) {
    CAPTURE(e.name);
    const auto text = emit_instance(e.builder());
    const auto back = parse_instance(text);
    CHECK(emit_instance(back) == text);
    CHECK(back.size() == e.builder().size());
    CHECK(back.metadata().name == e.name);
    CHECK(text.back() == '\n');
  }
}

TEST_CASE("parsed instances agree with built ones on hom-sets") {
  for (const char* name : {"s3-orbit", "z6-two-normals", "s3-collapse"}) {
    const auto a = instances::build(name);
    const auto b = parse_instance(emit_instance(a));
    for (orbit::Point x = 0; x < a.size(); ++x)
      for (orbit::Point y = 0; y < a.size(); ++y) CHECK(orbit::hom(a, x, y) == orbit::hom(b, x, y));
  }
}

TEST_CASE("key order and whitespace do not matter") {
  const auto j = emitted("z6-two-normals");
  nlohmann::json unordered = nlohmann::json::parse(j.dump());
  const auto inst = parse_instance(unordered.dump());
  CHECK(emit_instance(inst) == emit_instance(instances::build("z6-two-normals")));
}

TEST_CASE("malformed files are rejected") {
  CHECK_THROWS_AS(parse_instance("{"), InstanceFileError);
  CHECK_THROWS_AS(parse_instance("[]"), InstanceFileError);
  CHECK_THROWS_AS(parse_instance(""), InstanceFileError);

  auto j = emitted("s3-collapse");
  j["extra"] = 1;
  expect_file_error(j);

  j = emitted("s3-collapse");
  j["version"] = 2;
  expect_file_error(j);

  j = emitted("s3-collapse");
  j.erase("version");
  expect_file_error(j);

  j = emitted("s3-collapse");
  j["crossed_module"]["t"][0] = 99;
  expect_file_error(j);

  j = emitted("s3-collapse");
  j["crossed_module"]["G"]["table"][0][0] = -1;
  expect_file_error(j);

  j = emitted("s3-collapse");
  j["crossed_module"]["G"]["table"][1][1] = 1;
  expect_file_error(j);

  j = emitted("s3-collapse");
  j["crossed_module"]["G"]["color"] = "red";
  expect_file_error(j);

  j = emitted("z6-two-normals");
  j["duality"][0] = 5;
  expect_file_error(j);

  j = emitted("z6-two-normals");
  j["preorder"]["elements"] = "H";
  expect_file_error(j);

  j = emitted("z6-two-normals");
  j["presheaf"][0] = Json::array({0, 1});
  expect_file_error(j);
}

TEST_CASE("well-formed files that fail validation raise InvalidInstance") {
  auto j = emitted("z6-two-normals");
  j["cosieve"][0][1] = true;
  CHECK_THROWS_AS(parse_instance(j.dump()), orbit::InvalidInstance);

  j = emitted("s3-orbit");
  j["crossed_module"]["t"][1] = 0;
  CHECK_THROWS_AS(parse_instance(j.dump()), orbit::InvalidInstance);
}

TEST_CASE("unreadable paths") {
  CHECK_THROWS_AS(load_instance("/nonexistent/file.json"), InstanceFileError);
}

TEST_CASE("morphism JSON round trip") {
  const auto f = para::ParaMorphism(2, 2, {1, 2, 3});
  const auto text = emit_morphism(f);
  CHECK(text == "{\n  \"n\": 2,\n  \"m\": 2,\n  \"values\": [1, 2, 3]\n}\n");
  CHECK(parse_morphism(text) == f);
  CHECK_THROWS_AS(parse_morphism("{\"n\": 1}"), InstanceFileError);
  CHECK_THROWS_AS(parse_morphism("{\"n\": 1, \"m\": 1, \"values\": [2, 1]}"), para::InvalidMorphism);
}

TEST_CASE("report rendering") {
  Report r;
  r.add(CheckRecord{"alpha", true, "fine", {}});
  r.add(CheckRecord{"beta", false, "broken", {"w1", "w2"}});
  CHECK(render(r, Format::Text) ==
        "[PASS] alpha: fine\n[FAIL] beta: broken\n    w1\n    w2\n1/2 checks pass\n");
  const auto s = Json::parse(render(r, Format::Structured));
  CHECK(s["passed"] == false);
  CHECK(s["records"].size() == 2);
  CHECK(s["records"][1]["status"] == "fail");
  CHECK(s["records"][1]["witnesses"][1] == "w2");
  CHECK(parse_format("text") == Format::Text);
  CHECK(parse_format("structured") == Format::Structured);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
