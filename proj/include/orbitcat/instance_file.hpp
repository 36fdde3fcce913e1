#pragma once

// The JSON instance-file format, deterministic emission, and report rendering.

#include <stdexcept>
#include <string>
#include <string_view>

#include "orbitcat/orbit_cat.hpp"
#include "orbitcat/para_cat.hpp"
#include "orbitcat/report.hpp"

namespace orbitcat::io {

inline constexpr int kFormatVersion = 1;

/// Malformed text, wrong shapes, unknown keys or out-of-range indices.
class InstanceFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed but not yet validated components of an instance file.
struct InstanceParts {
  orbit::CrossedModule cm;
  orbit::APreorder preorder;
  orbit::GPresheaf presheaf;
  std::optional<orbit::SelfDuality> duality;
  std::optional<orbit::ACosieve> cosieve;
  orbit::Metadata metadata;
};

/// Throws InstanceFileError.
InstanceParts parse_parts(std::string_view text);

/// parse_parts followed by OrbitInstance::make, which throws
/// orbit::InvalidInstance when a validator fails.
orbit::OrbitInstance parse_instance(std::string_view text);

/// Whole file contents. Throws InstanceFileError when unreadable.
std::string read_file(const std::string& path);

/// Reads a file and parses it. Throws InstanceFileError when unreadable.
orbit::OrbitInstance load_instance(const std::string& path);

/// Canonical text; emit(parse(emit(x))) == emit(x).
std::string emit_instance(const orbit::OrbitInstance& inst);

/// {"n": .., "m": .., "values": [..]}
std::string emit_morphism(const para::ParaMorphism& f);
/// Throws InstanceFileError or para::InvalidMorphism.
para::ParaMorphism parse_morphism(std::string_view text);

enum class Format { Text, Structured };

/// Throws std::invalid_argument for anything but "text" or "structured".
Format parse_format(const std::string& name);

/// Text: one "[PASS] id: summary" line per record, witnesses indented below.
/// Structured: {"passed": .., "records": [{"id", "status", "summary", "witnesses"}]}.
std::string render(const Report& report, Format format);

}  // namespace orbitcat::io
