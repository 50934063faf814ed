#pragma once

#include "orbsec/inertia.hpp"
#include "orbsec/sector_order.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbsec {

/// Everything derived from one validated orbifold complex.
struct SectorAnalysis {
    InertiaComplex inertia;
    std::vector<SectorComponent> components;
    SectorPoset poset;
    PlausibilityReport plausibility;

    const OrbifoldComplex& orbifold() const { return inertia.orbifold(); }
};

/// Throws LabelError when `oc` fails lax validation.
SectorAnalysis analyze(const OrbifoldComplex& oc);

struct GaussBonnetReport {
    Rational sector_sum;        // sum of chi_orb over all components
    std::int64_t euler = 0;     // chi of the underlying complex
    bool ok = false;
};

GaussBonnetReport verify_inertia_gauss_bonnet(const SectorAnalysis& analysis);
GaussBonnetReport verify_inertia_gauss_bonnet(const OrbifoldComplex& oc);

struct AdditivityReport {
    Rational a, b, intersection, total;
    bool ok = false;
};

/// chi_orb(A) + chi_orb(B) - chi_orb(A n B) == chi_orb(whole). A and B must
/// be face closed and cover every simplex; throws std::invalid_argument
/// otherwise.
AdditivityReport verify_additivity(const OrbifoldComplex& oc, const SimplexSet& a, const SimplexSet& b);

/// A = closure of the simplices meeting `vertices`, B = simplices avoiding
/// them.
std::pair<SimplexSet, SimplexSet> star_complement_split(const SimplicialComplex& complex,
                                                        const std::vector<Vertex>& vertices);

struct CharacteristicSplit {
    Rational generic;   // (1/|g|) * sum over nodes with m == |g| of (-1)^dim
    Rational singular;  // sum over nodes with m > |g| of (-1)^dim / m
};

CharacteristicSplit split_characteristic(const InertiaComplex& inertia, const SectorComponent& c);

enum class InductionOutcome {
    verified,                 // premises hold and chi_orb == chi / |g|
    failed,                   // premises hold and the identity does not
    premise_gap,              // some node with m > |g| is not covered by a strict predecessor
    nonvanishing_predecessor  // a strict predecessor has nonzero chi or chi_orb
};

std::string to_string(InductionOutcome outcome);

struct InductionEntry {
    std::size_t component;
    InductionOutcome outcome;
    Rational chi_orb;
    Rational scaled_chi;  // chi / |g|
    std::vector<std::size_t> uncovered_simplices_sample;
};

struct InductionReport {
    std::vector<InductionEntry> entries;

    bool ok() const;
    std::vector<std::size_t> premise_gaps() const;
};

InductionReport verify_induction_identity(const SectorAnalysis& analysis);

struct Decision {
    bool condition_iii = false;  // every component has chi == 0
    bool condition_iv = false;   // every component has chi_orb == 0
    bool consistent = false;
    /// Empty when the conditions disagree: the input then cannot be a
    /// closed almost-complex cyclic orbifold and no verdict is given.
    std::optional<bool> admits;
    std::vector<std::size_t> witnesses;  // components with a nonzero invariant
    Rational classical_chi_orb;
    std::int64_t classical_chi = 0;
    PlausibilityReport plausibility;

    std::string verdict() const;
};

Decision decide_nonvanishing(const SectorAnalysis& analysis);
Decision decide_nonvanishing(const OrbifoldComplex& oc);

}  // namespace orbsec
