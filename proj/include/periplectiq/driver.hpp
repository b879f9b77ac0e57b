#pragma once

// Shared command drivers: assemble the machine-readable reports the CLI and
// the python module expose. JSON output is byte-stable for a fixed
// configuration; timing telemetry goes to stderr only.

#include <string>

#include "periplectiq/relcheck.hpp"

namespace periplectiq {

struct DriveResult {
    std::string json;
    bool pass = true;
};

/// exprel + dj_relations + lemma_alg + divided_powers + classical (+ the
/// centralizer suite for k >= 2). With mutate, every suite runs its negative
/// control and the result reports the injected failures.
DriveResult drive_relations(int n, int k, bool mutate);

/// Maximal-vector profile of V^(⊗k) and the theorem candidate list; optional
/// tableau/pattern JSON arguments evaluate one candidate.
DriveResult drive_maximal(int n, int k, ComposeOrder order,
                          const std::string& tableau_arg = "",
                          const std::string& pattern_arg = "");

/// Direct-sum certificate and per-summand splitness reports, k in {2, 3}.
DriveResult drive_decompose(int n, int k, ComposeOrder order);

DriveResult drive_character(int n, int k);

} // namespace periplectiq
