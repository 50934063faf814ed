#pragma once

#include "orbsec/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace orbsec::report {

/// Blocks of the machine-readable report, filled by the CLI subcommands.
struct Sections {
    bool components = false;
    bool decision = false;
    bool verifiers = false;
    bool euler = false;
};

/// Result of the full verifier battery.
struct VerifierResults {
    GaussBonnetReport gauss_bonnet;
    std::vector<AdditivityReport> additivity;
    MinimalComponentsReport minimal_components;
    IntersectionClosureReport intersection_closure;
    InductionReport induction;

    /// Failures that indicate an internal inconsistency (CLI exit code 2).
    std::vector<std::string> violations(const SectorAnalysis& analysis, const Decision& decision) const;
};

/// Gauss-Bonnet, additivity on star/complement splits of up to
/// `max_splits` evenly spaced vertices, both lemma validators and the
/// induction identity.
VerifierResults run_verifiers(const SectorAnalysis& analysis, std::size_t max_splits = 16);

nlohmann::ordered_json validation_json(const OrbifoldComplex& oc, const ValidationReport& validation);

nlohmann::ordered_json build(const OrbifoldComplex& oc, const ValidationReport& validation,
                             const SectorAnalysis* analysis, const Sections& sections,
                             const Decision* decision = nullptr, const VerifierResults* verifiers = nullptr);

}  // namespace orbsec::report
