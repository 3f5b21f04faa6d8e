#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sperner/cochain.hpp"
#include "sperner/sperner.hpp"

namespace sperner {

/// Each vertex w gets a label drawn uniformly from { j : w^j > 0 }.
/// Deterministic for a fixed seed (std::mt19937_64).
Labeling random_sperner_labeling(const ComplexPtr& K, std::uint64_t seed);

/// Number of Sperner-valid labelings of K, saturating at UINT64_MAX.
std::uint64_t sperner_labeling_count(const EmbeddedComplex& K);

/// The index-th valid labeling in mixed-radix order (vertex 0 varies fastest,
/// labels ascending within each vertex's choice set).
Labeling sperner_labeling_at(const ComplexPtr& K, std::uint64_t index);

struct TripleCheckOptions {
    /// Also test that the connecting-map witness and the pullback of [Δ]
    /// represent the same relative class (two F2 eliminations).
    bool cohomology_class = true;
    CohomologyOptions cohomology{};
};

/// The three parity computations run side by side on one labeling.
struct TripleCheckReport {
    int dim = 0;
    bool trivial = false; ///< n = 0: the single vertex is fully labeled

    // combinatorial: door census
    std::size_t e = 0, f = 0, g = 0, h = 0;
    // cochain level: chain identity report
    std::size_t chain_e = 0, chain_h = 0, chain_g = 0, chain_cancellations = 0;
    bool chain_identity_ok = false;
    // cohomological: boundary degree and pullbacks
    int boundary_degree = 0;          ///< degree_mod2 of the labeling map on ∂Δ'
    std::size_t boundary_pullback = 0; ///< |φ_∂*(Δ_{n+1})|
    std::size_t pullback_of_top = 0;   ///< |φ*(Δ)|
    std::optional<bool> connecting_class_matches;

    int combinatorial_parity = 0; ///< e mod 2
    int chain_parity = 0;         ///< |∂*φ*(Δ_{n+1})| mod 2
    int cohomological_parity = 0; ///< boundary_degree

    std::vector<std::string> disagreements;

    bool agree() const noexcept { return disagreements.empty(); }
};

/// Requires a Sperner-valid labeling of a full-dimensional complex
/// (InvalidLabeling otherwise, before any parity is computed).
TripleCheckReport triple_check(const Labeling& L, const TripleCheckOptions& options = {});

struct CorpusOptions {
    std::size_t labelings = 1000;
    std::uint64_t seed = 1;      ///< labeling i uses seed + i
    bool exhaustive = false;     ///< enumerate every valid labeling instead
    std::uint64_t exhaustive_limit = 1'000'000;
    bool check_pathfollow = true; ///< compare path-following with brute force
    bool keep_entries = true;
    TripleCheckOptions triple{};
};

struct CorpusEntry {
    std::uint64_t seed = 0; ///< labeling seed, or enumeration index when exhaustive
    TripleCheckReport report;
    std::optional<bool> pathfollow_in_bruteforce;
    std::string error; ///< set when a check threw

    bool ok() const noexcept {
        return error.empty() && report.agree() && pathfollow_in_bruteforce.value_or(true);
    }
};

struct CorpusSummary {
    std::size_t runs = 0;
    std::size_t disagreements = 0;         ///< entries failing any check
    std::size_t even_e = 0;
    std::size_t identity_failures = 0;     ///< h + 2g != e + 2f
    std::size_t cancellation_mismatches = 0;
    std::size_t pathfollow_failures = 0;
    std::optional<std::uint64_t> first_failure;
    std::vector<CorpusEntry> entries;

    bool ok() const noexcept { return disagreements == 0; }
};

/// Runs triple_check over a corpus of labelings of K (OpenMP across labelings).
/// Throws ResourceCapExceeded when exhaustive enumeration is over the limit.
CorpusSummary run_corpus(const ComplexPtr& K, const CorpusOptions& options);
/// Single-threaded reference.
CorpusSummary run_corpus_serial(const ComplexPtr& K, const CorpusOptions& options);

} // namespace sperner
