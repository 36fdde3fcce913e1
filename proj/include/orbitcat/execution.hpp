#pragma once

namespace orbitcat {

/// Selects the serial reference loop or the OpenMP kernel for exhaustive scans.
enum class Execution { Serial, Parallel };

}  // namespace orbitcat
