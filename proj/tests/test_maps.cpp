#include <catch_amalgamated.hpp>

#include <random>

#include "sperner/errors.hpp"
#include "sperner/maps.hpp"

using namespace sperner;
using Catch::Matchers::WithinAbs;

namespace {

RealPoint random_point(int n, std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    RealPoint p(n + 1);
    double s = 0;
    for (double& x : p) s += (x = e(rng));
    for (double& x : p) x /= s;
    return p;
}

RealPoint corner(int n, int i) {
    RealPoint p(n + 1, 0.0);
    p[i] = 1;
    return p;
}

} // namespace

TEST_CASE("registry builds the named maps") {
    const RealPoint x{0.5, 0.3, 0.2};
    CHECK(make_map("identity", 2).eval(x) == x);
    CHECK(make_map("rotate", 2).eval(x) == RealPoint{0.2, 0.5, 0.3});
    const MapOnSimplex c = make_map("constant:0.2,0.3,0.5", 2);
    CHECK(c.name == "constant:0.2,0.3,0.5");
    CHECK(c.eval(x) == RealPoint{0.2, 0.3, 0.5});
    const MapOnSimplex q1 = make_map("quadratic:9", 2), q2 = make_map("quadratic:9", 2);
    CHECK(q1.eval(x) == q2.eval(x));
    CHECK(q1.eval(x) != make_map("quadratic:10", 2).eval(x));
    for (const char* s : {"identity", "rotate", "quadratic:1"}) CHECK(make_map(s, 3).dim == 3);
}

TEST_CASE("registry rejects bad specs") {
    for (const char* s : {"", "spiral", "constant", "constant:", "constant:0.5,0.5", "constant:0.5,0.6,0.1",
                          "constant:-0.1,0.6,0.5", "constant:a,b,c", "quadratic", "quadratic:x", "identity:3"})
        CHECK_THROWS_AS(make_map(s, 2), InvalidInput);
    CHECK_THROWS_AS(make_map("identity", -1), InvalidInput);
}

TEST_CASE("map outputs stay in the simplex") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 5; ++n) {
        const std::vector<MapOnSimplex> maps = {identity_map(n), rotate_map(n), quadratic_map(n, 1),
                                                quadratic_map(n, 2)};
        for (const MapOnSimplex& f : maps)
            for (int t = 0; t < 200; ++t) {
                const RealPoint y = f.eval(random_point(n, rng));
                REQUIRE(y.size() == static_cast<std::size_t>(n + 1));
                double s = 0;
                for (double c : y) {
                    CHECK(c >= 0);
                    s += c;
                }
                CHECK_THAT(s, WithinAbs(1.0, 1e-12));
            }
    }
}

TEST_CASE("quadratic maps send corners to the interior") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const MapOnSimplex f = quadratic_map(n, seed);
            for (int i = 0; i <= n; ++i) {
                const RealPoint y = f.eval(corner(n, i));
                for (double c : y) CHECK(c > 0);
                CHECK(y[i] < 1);
            }
        }
}

TEST_CASE("quadratic maps are symmetric homogeneous forms") {
    // f(x) = Σ x_k x_l P[k][l], so f on an edge is determined by the corners and
    // the midpoint: f((a+b)/2) = (f(a) + f(b) + 2 P[a][b]) / 4.
    const int n = 3;
    const MapOnSimplex f = quadratic_map(n, 5);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const RealPoint x = random_point(n, rng);
        RealPoint expect(n + 1, 0.0);
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) {
                RealPoint mid(n + 1, 0.0);
                mid[k] += 0.5;
                mid[l] += 0.5;
                const RealPoint fm = f.eval(mid), fk = f.eval(corner(n, k)), fl = f.eval(corner(n, l));
                for (int j = 0; j <= n; ++j) {
                    const double pkl = k == l ? fk[j] : (4 * fm[j] - fk[j] - fl[j]) / 2;
                    expect[j] += x[k] * x[l] * pkl;
                }
            }
        const RealPoint y = f.eval(x);
        for (int j = 0; j <= n; ++j) CHECK_THAT(y[j], WithinAbs(expect[j], 1e-12));
    }
}

TEST_CASE("affine maps") {
    const MapOnSimplex f = affine_map({{0, 1}, {1, 0}}, {0.5, 0.5}, 0.25);
    const RealPoint y = f.eval({1, 0});
    CHECK_THAT(y[0], WithinAbs(0.125, 1e-15));
    CHECK_THAT(y[1], WithinAbs(0.875, 1e-15));
    CHECK_THROWS_AS(affine_map({{0, 1}}, {0.5, 0.5}, 0.25), InvalidInput);
    CHECK_THROWS_AS(affine_map({{0, 1}, {1, 0}}, {0.5, 0.5}, 1.5), InvalidInput);
}
