#include "sperner/verification.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "sperner/errors.hpp"
#include "sperner/path_follow.hpp"

namespace sperner {

namespace {

/// Labels j with w^j > 0, ascending.
std::vector<Label> choice_set(const EmbeddedComplex& K, VertexId v) {
    const std::uint32_t zeros = K.vertex_zero_mask(v);
    std::vector<Label> out;
    for (int j = 1; j <= K.ambient_dim() + 1; ++j)
        if (!(zeros >> (j - 1) & 1u)) out.push_back(j);
    return out;
}

} // namespace

Labeling random_sperner_labeling(const ComplexPtr& K, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Label> labels(K->vertex_count());
    for (VertexId v = 0; v < labels.size(); ++v) {
        const auto choices = choice_set(*K, v);
        std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
        labels[v] = choices[pick(rng)];
    }
    return Labeling(K, std::move(labels));
}

std::uint64_t sperner_labeling_count(const EmbeddedComplex& K) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (VertexId v = 0; v < K.vertex_count(); ++v) {
        const std::uint64_t c = choice_set(K, v).size();
        if (total > kMax / c) return kMax;
        total *= c;
    }
    return total;
}

Labeling sperner_labeling_at(const ComplexPtr& K, std::uint64_t index) {
    if (index >= sperner_labeling_count(*K)) throw InvalidInput("labeling index out of range");
    std::vector<Label> labels(K->vertex_count());
    for (VertexId v = 0; v < labels.size(); ++v) {
        const auto choices = choice_set(*K, v);
        labels[v] = choices[index % choices.size()];
        index /= choices.size();
    }
    return Labeling(K, std::move(labels));
}

TripleCheckReport triple_check(const Labeling& L, const TripleCheckOptions& options) {
    const ComplexPtr& K = L.complex();
    const int n = K->ambient_dim();
    if (K->dim() != n) throw InvalidInput("triple_check needs a full-dimensional complex");
    require_sperner(L);

    TripleCheckReport r;
    r.dim = n;
    auto disagree = [&](std::string what) { r.disagreements.push_back(std::move(what)); };

    const SpernerCensus c = census(L);
    r.e = c.e;
    r.f = c.f;
    r.g = c.g;
    r.h = c.h;
    r.combinatorial_parity = static_cast<int>(c.e % 2);

    if (n == 0) {
        r.trivial = true;
        r.chain_e = r.chain_h = 1;
        r.chain_identity_ok = true;
        r.boundary_degree = 1;
        r.boundary_pullback = 1;
        r.pullback_of_top = 1;
        r.chain_parity = r.cohomological_parity = 1;
        if (c.e != 1) disagree("combinatorial: the single vertex is not counted as fully labeled");
        return r;
    }

    if (c.e % 2 != c.h % 2) disagree("combinatorial: e and h differ in parity");
    if (c.h + 2 * c.g != c.e + 2 * c.f) disagree("combinatorial: h + 2g != e + 2f");

    // Cochain level.
    const ChainIdentityReport chain = chain_identity_report(L);
    r.chain_e = chain.e;
    r.chain_h = chain.h;
    r.chain_g = chain.g;
    r.chain_cancellations = chain.cancellations;
    r.chain_identity_ok = chain.ok();
    r.chain_parity = chain.lhs.parity();
    if (!chain.sums_agree) disagree("cochain: the two sides of the chain identity differ");
    if (!chain.integer_identity) disagree("cochain: term count identity fails");
    if (!chain.sigma_hats_distinct) disagree("cochain: boundary door cofacets repeat");
    if (chain.e != c.e) disagree("combinatorial/cochain: e differs");
    if (chain.h != c.h) disagree("combinatorial/cochain: h differs");
    if (chain.cancellations != c.f) disagree("combinatorial/cochain: cancellation count differs from f");

    // Cohomological level, on the boundary pseudomanifolds.
    const ComplexPtr delta = standard_simplex_complex(n);
    const BoundaryComplex source = boundary_subcomplex(*K);
    const BoundaryComplex target = boundary_subcomplex(*delta);
    const SimplicialMap phi_boundary = boundary_map(L, source, target);
    r.boundary_degree = degree_mod2(phi_boundary);
    r.cohomological_parity = r.boundary_degree;

    const auto tag = std::find(target.face_tag.begin(), target.face_tag.end(), n + 1);
    if (tag == target.face_tag.end()) throw InvariantBreach("boundary of Δ lacks the face Δ_{n+1}");
    const Cochain last_face(target.complex, n - 1, {static_cast<FaceIndex>(tag - target.face_tag.begin())});
    const Cochain pulled_boundary = pullback(phi_boundary, last_face);
    r.boundary_pullback = pulled_boundary.support().size();

    const SimplicialMap phi = to_simplicial_map(L, delta);
    const Cochain top(delta, n, {0});
    const Cochain pulled_top = pullback(phi, top);
    r.pullback_of_top = pulled_top.support().size();

    if (r.boundary_pullback != c.h) disagree("combinatorial/cohomological: boundary pullback size differs from h");
    if (r.boundary_degree != static_cast<int>(c.h % 2)) disagree("combinatorial/cohomological: degree differs from h mod 2");
    if (r.pullback_of_top != c.e) disagree("combinatorial/cohomological: pullback of Δ differs from e");

    if (options.cohomology_class) {
        const Subcomplex A = Subcomplex::boundary(K);
        const Cochain alpha = lift_to_parent(source, pulled_boundary, K);
        const ConnectingWitness w = connecting_witness(alpha, A, 0x5eed, options.cohomology);
        bool matches = w.witness_is_relative_cocycle && w.same_class;
        matches = matches && is_relative_coboundary(w.witness + pulled_top, A, options.cohomology);
        r.connecting_class_matches = matches;
        if (!matches) disagree("cochain/cohomological: connecting witness and pullback of Δ lie in different classes");
    }

    if (r.combinatorial_parity != r.chain_parity) disagree("combinatorial/cochain: parity differs");
    if (r.chain_parity != r.cohomological_parity) disagree("cochain/cohomological: parity differs");
    if (r.combinatorial_parity != r.cohomological_parity) disagree("combinatorial/cohomological: parity differs");
    if (r.combinatorial_parity != 1) disagree("combinatorial: e is even");
    return r;
}

namespace {

CorpusEntry run_entry(const ComplexPtr& K, std::uint64_t id, const CorpusOptions& options) {
    CorpusEntry entry;
    entry.seed = id;
    try {
        const Labeling L = options.exhaustive ? sperner_labeling_at(K, id) : random_sperner_labeling(K, id);
        entry.report = triple_check(L, options.triple);
        if (options.check_pathfollow) {
            const auto brute = find_fully_labeled_bruteforce(L);
            const FaceIndex found = find_fully_labeled_pathfollow(L);
            entry.pathfollow_in_bruteforce = std::binary_search(brute.begin(), brute.end(), found);
        }
    } catch (const std::exception& ex) {
        entry.error = ex.what();
    }
    return entry;
}

std::vector<std::uint64_t> corpus_ids(const EmbeddedComplex& K, const CorpusOptions& options) {
    std::vector<std::uint64_t> ids;
    if (options.exhaustive) {
        const std::uint64_t total = sperner_labeling_count(K);
        if (total > options.exhaustive_limit)
            throw ResourceCapExceeded("exhaustive enumeration needs " +
                                      (total == std::numeric_limits<std::uint64_t>::max() ? std::string("over 2^64")
                                                                                          : std::to_string(total)) +
                                      " labelings, limit is " + std::to_string(options.exhaustive_limit));
        ids.resize(total);
        for (std::uint64_t i = 0; i < total; ++i) ids[i] = i;
    } else {
        ids.resize(options.labelings);
        for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = options.seed + i;
    }
    return ids;
}

CorpusSummary summarize(std::vector<CorpusEntry> entries, bool keep) {
    CorpusSummary s;
    s.runs = entries.size();
    for (const CorpusEntry& e : entries) {
        const auto& r = e.report;
        if (!e.ok()) {
            ++s.disagreements;
            if (!s.first_failure) s.first_failure = e.seed;
        }
        if (!e.error.empty()) continue;
        if (r.e % 2 == 0) ++s.even_e;
        if (r.h + 2 * r.g != r.e + 2 * r.f) ++s.identity_failures;
        if (!r.trivial && r.chain_cancellations != r.f) ++s.cancellation_mismatches;
        if (!e.pathfollow_in_bruteforce.value_or(true)) ++s.pathfollow_failures;
    }
    if (keep) s.entries = std::move(entries);
    return s;
}

} // namespace

CorpusSummary run_corpus(const ComplexPtr& K, const CorpusOptions& options) {
    const auto ids = corpus_ids(*K, options);
    std::vector<CorpusEntry> entries(ids.size());
    const auto count = static_cast<std::ptrdiff_t>(ids.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) entries[i] = run_entry(K, ids[i], options);
    return summarize(std::move(entries), options.keep_entries);
}

CorpusSummary run_corpus_serial(const ComplexPtr& K, const CorpusOptions& options) {
    const auto ids = corpus_ids(*K, options);
    std::vector<CorpusEntry> entries;
    entries.reserve(ids.size());
    for (std::uint64_t id : ids) entries.push_back(run_entry(K, id, options));
    return summarize(std::move(entries), options.keep_entries);
}

} // namespace sperner
