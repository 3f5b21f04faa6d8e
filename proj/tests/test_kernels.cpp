#include <catch_amalgamated.hpp>

#include <random>

#include "sperner/brouwer.hpp"
#include "sperner/f2.hpp"
#include "sperner/kernels.hpp"
#include "sperner/maps.hpp"
#include "sperner/parallel.hpp"
#include "sperner/subdivision.hpp"
#include "sperner/verification.hpp"
#include "support.hpp"

using namespace sperner;

namespace {

struct ThreadGuard {
    ~ThreadGuard() { set_thread_count(0); }
};

const int kThreadCounts[] = {1, 2, 3, 8};

BitMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

} // namespace

TEST_CASE("thread count setting") {
    ThreadGuard guard;
    set_thread_count(3);
    CHECK(thread_count() >= 1);
    set_thread_count(0);
    CHECK(thread_count() >= 1);
}

TEST_CASE("face label masks") {
    ThreadGuard guard;
    std::mt19937_64 rng(1);
    const ComplexPtr K = edgewise_subdivide(3, 6);
    const std::vector<Label> labels = oracle::random_valid_labels(*K, rng);
    for (int k = 0; k <= 3; ++k) {
        const auto ref = kernels::face_label_masks_serial(*K, labels, k);
        REQUIRE(ref.size() == K->face_count(k));
        for (FaceIndex f = 0; f < ref.size(); f += 37) {
            std::uint32_t m = 0;
            for (VertexId v : K->face(k, f)) m |= 1u << (labels[v] - 1);
            CHECK(ref[f] == m);
        }
        for (int t : kThreadCounts) {
            set_thread_count(t);
            CHECK(kernels::face_label_masks(*K, labels, k) == ref);
        }
    }
}

TEST_CASE("select equal") {
    ThreadGuard guard;
    std::mt19937_64 rng(2);
    std::vector<std::uint32_t> masks(50'000);
    for (auto& m : masks) m = rng() % 5;
    std::vector<FaceIndex> expect;
    for (FaceIndex i = 0; i < masks.size(); ++i)
        if (masks[i] == 3) expect.push_back(i);
    CHECK(kernels::select_equal_serial(masks, 3) == expect);
    for (int t : kThreadCounts) {
        set_thread_count(t);
        CHECK(kernels::select_equal(masks, 3) == expect);
        CHECK(kernels::select_equal(masks, 9).empty());
    }
    CHECK(kernels::select_equal(std::span<const std::uint32_t>{}, 0).empty());
}

TEST_CASE("F2 rank") {
    ThreadGuard guard;
    std::mt19937_64 rng(3);
    SECTION("small matrices against span closure") {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 9;
            const BitMatrix m = random_matrix(rows, cols, 0.4, rng);
            std::vector<std::vector<int>> dense(rows, std::vector<int>(cols));
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) dense[r][c] = m.get(r, c);
            const std::size_t expect = oracle::rank_by_span(dense);
            CHECK(f2_rank_serial(m) == expect);
            CHECK(f2_rank(m) == expect);
        }
    }
    SECTION("large matrices across thread counts") {
        for (auto [rows, cols] : {std::pair<std::size_t, std::size_t>{300, 200}, {130, 500}, {257, 257}}) {
            const BitMatrix m = random_matrix(rows, cols, 0.05, rng);
            const std::size_t ref = f2_rank_serial(m);
            for (int t : kThreadCounts) {
                set_thread_count(t);
                CHECK(f2_rank(m) == ref);
            }
        }
    }
    SECTION("known ranks") {
        BitMatrix id(100, 100);
        for (std::size_t i = 0; i < 100; ++i) id.set(i, i);
        CHECK(f2_rank(id) == 100);
        BitMatrix dup(4, 70);
        for (std::size_t r = 0; r < 4; ++r) dup.set(r, 65);
        CHECK(f2_rank(dup) == 1);
        CHECK(f2_rank(BitMatrix(5, 5)) == 0);
    }
}

TEST_CASE("star labeling and lattice labeling across thread counts") {
    ThreadGuard guard;
    const ComplexPtr K = edgewise_subdivide(2, 10);
    const BoundaryComplex B = boundary_subcomplex(*K);
    const PointMap r = make_ray_retraction(quadratic_map(2, 4));
    StarLabelingOptions opts;
    const auto ref = star_labeling_serial(r, B.complex, opts);
    const EdgewiseGrid grid(3, 10);
    const auto points = grid.lattice_points();
    const auto lat_ref = label_lattice_serial(quadratic_map(3, 4), grid, points, 1e-15, {}, nullptr);
    for (int t : kThreadCounts) {
        set_thread_count(t);
        const auto res = star_labeling(r, B.complex, opts);
        CHECK(res.labels == ref.labels);
        CHECK(res.samples_evaluated == ref.samples_evaluated);
        CHECK(label_lattice(quadratic_map(3, 4), grid, points, 1e-15, {}, nullptr) == lat_ref);
    }
}

TEST_CASE("corpus across thread counts") {
    ThreadGuard guard;
    const ComplexPtr K = oracle::barycentric(3, 1);
    CorpusOptions opts;
    opts.labelings = 60;
    const CorpusSummary ref = run_corpus_serial(K, opts);
    for (int t : kThreadCounts) {
        set_thread_count(t);
        const CorpusSummary s = run_corpus(K, opts);
        CHECK(s.runs == ref.runs);
        CHECK(s.disagreements == ref.disagreements);
        REQUIRE(s.entries.size() == ref.entries.size());
        for (std::size_t i = 0; i < s.entries.size(); ++i) {
            CHECK(s.entries[i].report.e == ref.entries[i].report.e);
            CHECK(s.entries[i].report.f == ref.entries[i].report.f);
            CHECK(s.entries[i].report.disagreements == ref.entries[i].report.disagreements);
        }
    }
}
