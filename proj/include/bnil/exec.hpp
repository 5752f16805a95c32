#pragma once

// Execution policy for the data-parallel sweeps: every parallel kernel has a
// serial reference path selected by this flag, and the tests hold the two
// against each other.  Without OpenMP the parallel path degrades to serial.

namespace bnil {

enum class Exec { serial, parallel };

}  // namespace bnil
