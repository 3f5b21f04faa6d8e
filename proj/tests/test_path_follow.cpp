#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "sperner/errors.hpp"
#include "sperner/maps.hpp"
#include "sperner/path_follow.hpp"
#include "support.hpp"

using namespace sperner;

TEST_CASE("identity labeling of the simplex") {
    for (int n = 0; n <= 5; ++n) {
        std::vector<Label> labels(n + 1);
        for (int i = 0; i <= n; ++i) labels[i] = i + 1;
        CHECK(find_fully_labeled_pathfollow(Labeling(standard_simplex_complex(n), labels)) == 0);
    }
}

TEST_CASE("path-following lands in the brute-force list") {
    std::mt19937_64 rng(2024);
    std::vector<ComplexPtr> complexes;
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= (n == 3 ? 2 : 3); ++k) complexes.push_back(oracle::barycentric(n, k));
    complexes.push_back(edgewise_subdivide(2, 9));
    complexes.push_back(edgewise_subdivide(3, 5));
    complexes.push_back(edgewise_subdivide(4, 3));
    for (const ComplexPtr& K : complexes) {
        for (int trial = 0; trial < 40; ++trial) {
            const Labeling L(K, oracle::random_valid_labels(*K, rng));
            const auto brute = find_fully_labeled_bruteforce(L);
            PathStats stats;
            const FaceIndex found = find_fully_labeled_pathfollow(L, &stats);
            CHECK(std::binary_search(brute.begin(), brute.end(), found));
            CHECK(stats.steps <= 10 * K->face_count(K->dim()) + 10);
        }
    }
}

TEST_CASE("path-following rejects invalid labelings") {
    const ComplexPtr K = oracle::barycentric(2, 1);
    std::vector<Label> labels(K->vertex_count(), 1);
    CHECK_THROWS_AS(find_fully_labeled_pathfollow(Labeling(K, labels)), InvalidLabeling);
}

TEST_CASE("implicit walk agrees with the explicit complex") {
    std::mt19937_64 rng(99);
    for (auto [n, m] : {std::pair{1, 7}, {2, 8}, {3, 5}, {4, 3}}) {
        const EdgewiseGrid grid(n, m);
        const ComplexPtr K = edgewise_subdivide(n, m);
        const auto points = grid.lattice_points();
        std::map<LatticePoint, VertexId> id;
        for (VertexId v = 0; v < points.size(); ++v) id[points[v]] = v;
        for (int trial = 0; trial < 40; ++trial) {
            const auto labels = oracle::random_valid_labels(*K, rng);
            const Labeling L(K, labels);
            const auto brute = find_fully_labeled_bruteforce(L);
            const KuhnCell cell =
                find_fully_labeled_pathfollow(grid, [&](const LatticePoint& p) { return labels[id.at(p)]; });
            REQUIRE(cell.level() == n);
            std::vector<VertexId> ids;
            for (const auto& p : grid.vertices(cell)) ids.push_back(id.at(p));
            const FaceIndex t = K->index_of(Simplex(std::span<const VertexId>(ids)));
            CHECK(std::binary_search(brute.begin(), brute.end(), t));
        }
    }
}

TEST_CASE("implicit walk on a fine grid labeled by a map") {
    const EdgewiseGrid grid(2, 256);
    for (const char* spec : {"quadratic:1", "quadratic:2", "constant:0.2,0.3,0.5"}) {
        const MapOnSimplex f = make_map(spec, 2);
        const LatticeLabeler labeler = [&](const LatticePoint& a) {
            const auto r = label_from_map(f, grid.real_point(a));
            REQUIRE_FALSE(r.fixed_point_hit());
            return *r.label;
        };
        PathStats stats;
        const KuhnCell cell = find_fully_labeled_pathfollow(grid, labeler, &stats);
        std::set<Label> seen;
        for (const auto& p : grid.vertices(cell)) seen.insert(labeler(p));
        CHECK(seen == std::set<Label>{1, 2, 3});
        // only a sliver of the 65536 cells is touched
        CHECK(stats.label_queries < 65536);
    }
}

TEST_CASE("implicit walk rejects a labeler that breaks the boundary rule") {
    const EdgewiseGrid grid(2, 4);
    CHECK_THROWS_AS(find_fully_labeled_pathfollow(grid, [](const LatticePoint&) { return 3; }), InvalidLabeling);
}

namespace {

/// Every node has degree two, but keys repeat with period three, so the walk
/// state (previous key, current key) recurs and the walk would never end.
struct AliasedSpace {
    using Node = int;
    using Key = int;
    int dim() const { return 1; }
    Node start() const { return -1; }
    int level(Node n) const { return n < 0 ? 0 : 1; }
    std::vector<Label> labels(Node n) const { return n < 0 ? std::vector<Label>{1} : std::vector<Label>{1, 1}; }
    bool facet_in_lower(Node n, int i) const { return n == 0 && i == 0; }
    Node lower(Node, int) const { return -1; }
    std::optional<Node> across(Node n, int i) const { return i == 0 ? n - 1 : n + 1; }
    Node upper(Node) const { return 0; }
    Key key(Node n) const { return n < 0 ? -1 : n % 3; }
};

/// Two onward doors at the start.
struct BranchingSpace : AliasedSpace {
    Node start() const { return 5; }
};

} // namespace

TEST_CASE("a repeating walk state is reported instead of looping") {
    AliasedSpace space;
    CHECK_THROWS_WITH(walk_nested_doors(space), Catch::Matchers::ContainsSubstring("revisited"));
    CHECK_THROWS_WITH(walk_nested_doors(space, nullptr, 3), Catch::Matchers::ContainsSubstring("step budget"));
    BranchingSpace branching;
    CHECK_THROWS_WITH(walk_nested_doors(branching), Catch::Matchers::ContainsSubstring("onward doors"));
}
