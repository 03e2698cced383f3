#pragma once

namespace ordsup {

inline constexpr const char* kVersion = "0.1.0";

// Hard limit on materialized group elements; overridable per call
// (the CLI reads ORDSUP_ELEMENT_CAP).
inline constexpr long long kDefaultElementCap = 1'000'000;

// Above this many vertices, separability queries run on the divisibility
// quotient only; at or below it, the direct graph is built as well and the
// two answers must agree.
inline constexpr int kDefaultDirectThreshold = 2'000;

// Chordless-cycle enumeration aborts (recoverably) past this many emissions.
inline constexpr long long kDefaultCycleLimit = 1'000'000;

// Order profiles of S_n / A_n are computed from cycle-type combinatorics;
// class sizes only fit in 64 bits up to 20!.
inline constexpr int kMaxCycleTypeDegree = 20;

}  // namespace ordsup
