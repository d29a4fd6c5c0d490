#pragma once

namespace indgap {

/// Serial mode is the deterministic reference; parallel mode fans work out
/// across OpenMP threads and must return the same results.
enum class Exec { serial, parallel };

}  // namespace indgap
