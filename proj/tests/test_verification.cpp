#include <catch_amalgamated.hpp>

#include <set>

#include "sperner/errors.hpp"
#include "sperner/subdivision.hpp"
#include "sperner/verification.hpp"
#include "support.hpp"

using namespace sperner;

namespace {

std::vector<Label> as_vector(const Labeling& L) { return {L.labels().begin(), L.labels().end()}; }

std::vector<std::size_t> choice_sizes(const EmbeddedComplex& K) {
    std::vector<std::size_t> out;
    for (VertexId v = 0; v < K.vertex_count(); ++v) {
        std::size_t c = 0;
        for (const Rational& x : K.point(v)) c += x > 0;
        out.push_back(c);
    }
    return out;
}

void check_report_against_oracle(const Labeling& L, const TripleCheckReport& r) {
    const oracle::Recount rc = oracle::recount(*L.complex(), as_vector(L));
    CHECK(r.agree());
    CHECK(r.e == rc.e);
    CHECK(r.f == rc.f);
    CHECK(r.g == rc.g);
    CHECK(r.h == rc.h);
    CHECK(r.chain_e == rc.e);
    CHECK(r.chain_h == rc.h);
    CHECK(r.chain_g == rc.g);
    CHECK(r.chain_cancellations == rc.f);
    CHECK(r.chain_identity_ok);
    CHECK(rc.h + 2 * rc.g == rc.e + 2 * rc.f);
    CHECK(r.boundary_pullback == rc.h);
    CHECK(r.pullback_of_top == rc.e);
    CHECK(r.combinatorial_parity == 1);
    CHECK(r.chain_parity == 1);
    CHECK(r.cohomological_parity == 1);
    CHECK(r.boundary_degree == 1);
    CHECK(r.connecting_class_matches == std::optional<bool>(true));
}

} // namespace

TEST_CASE("random labelings are valid and reproducible") {
    const ComplexPtr K = oracle::barycentric(3, 1);
    const Labeling a = random_sperner_labeling(K, 7), b = random_sperner_labeling(K, 7);
    CHECK(as_vector(a) == as_vector(b));
    CHECK(as_vector(a) != as_vector(random_sperner_labeling(K, 8)));
    const auto sizes = choice_sizes(*K);
    std::vector<std::set<Label>> seen(K->vertex_count());
    for (std::uint64_t s = 0; s < 300; ++s) {
        const Labeling L = random_sperner_labeling(K, s);
        CHECK(validate_sperner(L).empty());
        for (VertexId v = 0; v < K->vertex_count(); ++v) seen[v].insert(L[v]);
    }
    for (VertexId v = 0; v < K->vertex_count(); ++v) {
        // corners are forced, the barycentre sees every label
        CHECK(seen[v].size() == sizes[v]);
        for (Label l : seen[v]) CHECK(K->point(v)[l - 1] > 0);
    }
}

TEST_CASE("labeling count and enumeration") {
    for (auto K : {oracle::barycentric(1, 2), oracle::barycentric(2, 1), edgewise_subdivide(2, 2),
                   edgewise_subdivide(3, 1)}) {
        std::uint64_t expect = 1;
        for (std::size_t c : choice_sizes(*K)) expect *= c;
        REQUIRE(sperner_labeling_count(*K) == expect);
        std::set<std::vector<Label>> all;
        for (std::uint64_t i = 0; i < expect; ++i) {
            const Labeling L = sperner_labeling_at(K, i);
            CHECK(validate_sperner(L).empty());
            all.insert(as_vector(L));
        }
        CHECK(all.size() == expect);
    }
    CHECK(sperner_labeling_count(*oracle::barycentric(2, 1)) == 24);
    CHECK(sperner_labeling_count(*oracle::barycentric(3, 3)) == UINT64_MAX);
    CHECK_THROWS(sperner_labeling_at(oracle::barycentric(2, 1), 24));
}

TEST_CASE("triple check matches the independent recount") {
    for (auto K : {oracle::barycentric(1, 2), oracle::barycentric(2, 2), oracle::barycentric(3, 1),
                   edgewise_subdivide(2, 5), edgewise_subdivide(4, 2)})
        for (std::uint64_t s = 0; s < 20; ++s) {
            const Labeling L = random_sperner_labeling(K, s);
            check_report_against_oracle(L, triple_check(L));
        }
}

TEST_CASE("triple check on the smallest-coordinate labeling") {
    // Label each vertex by its first positive coordinate.
    const ComplexPtr K = oracle::barycentric(2, 2);
    std::vector<Label> labels;
    for (VertexId v = 0; v < K->vertex_count(); ++v) {
        Label l = 1;
        while (K->point(v)[l - 1] == 0) ++l;
        labels.push_back(l);
    }
    const Labeling L(K, labels);
    check_report_against_oracle(L, triple_check(L));
}

TEST_CASE("triple check rejects invalid labelings") {
    const ComplexPtr K = oracle::barycentric(2, 1);
    std::vector<Label> labels = as_vector(random_sperner_labeling(K, 3));
    for (VertexId v = 0; v < K->vertex_count(); ++v)
        if (K->point(v)[0] == 0) {
            labels[v] = 1;
            break;
        }
    CHECK_THROWS_AS(triple_check(Labeling(K, labels)), InvalidLabeling);
    // a lower-dimensional complex is rejected as well
    const BoundaryComplex B = boundary_subcomplex(*K);
    std::vector<Label> bl(B.complex->vertex_count(), 1);
    CHECK_THROWS(triple_check(Labeling(B.complex, bl)));
}

TEST_CASE("dimension zero is trivial") {
    const ComplexPtr K = standard_simplex_complex(0);
    const TripleCheckReport r = triple_check(Labeling(K, {1}));
    CHECK(r.trivial);
    CHECK(r.agree());
    CHECK(r.e == 1);
    CHECK(r.h == 1);
    CorpusOptions opts;
    opts.labelings = 5;
    const CorpusSummary s = run_corpus(K, opts);
    CHECK(s.ok());
    CHECK(s.runs == 5);
}

TEST_CASE("corpus runs") {
    CorpusOptions opts;
    opts.labelings = 200;
    opts.seed = 100;
    const ComplexPtr K = oracle::barycentric(2, 2);
    const CorpusSummary a = run_corpus(K, opts);
    const CorpusSummary b = run_corpus_serial(K, opts);
    CHECK(a.ok());
    CHECK(a.runs == 200);
    CHECK(a.even_e == 0);
    CHECK(a.identity_failures == 0);
    CHECK(a.cancellation_mismatches == 0);
    CHECK(a.pathfollow_failures == 0);
    CHECK_FALSE(a.first_failure);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].seed == 100 + i);
        CHECK(a.entries[i].seed == b.entries[i].seed);
        CHECK(a.entries[i].report.e == b.entries[i].report.e);
        CHECK(a.entries[i].report.g == b.entries[i].report.g);
        CHECK(a.entries[i].pathfollow_in_bruteforce == std::optional<bool>(true));
    }
    // entry i reproduces labeling seed + i
    const Labeling L = random_sperner_labeling(K, 137);
    CHECK(a.entries[37].report.e == oracle::recount(*K, as_vector(L)).e);

    opts.exhaustive = true;
    const CorpusSummary ex = run_corpus(oracle::barycentric(2, 1), opts);
    CHECK(ex.runs == 24);
    CHECK(ex.ok());
    opts.exhaustive_limit = 23;
    CHECK_THROWS_AS(run_corpus(oracle::barycentric(2, 1), opts), ResourceCapExceeded);
    opts.exhaustive = false;
    opts.keep_entries = false;
    CHECK(run_corpus(K, opts).entries.empty());
}
