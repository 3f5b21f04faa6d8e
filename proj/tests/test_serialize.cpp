#include <catch_amalgamated.hpp>

#include <random>

#include "sperner/errors.hpp"
#include "sperner/maps.hpp"
#include "sperner/serialize.hpp"
#include "sperner/subdivision.hpp"
#include "support.hpp"

using namespace sperner;

TEST_CASE("complex round trip is exact") {
    for (auto K : {oracle::barycentric(2, 2), oracle::barycentric(3, 1), edgewise_subdivide(3, 3),
                   boundary_subcomplex(*oracle::barycentric(2, 1)).complex}) {
        const Json j = to_json(*K);
        const ComplexPtr back = complex_from_json(j);
        CHECK(dump_line(to_json(*back)) == dump_line(j));
        CHECK(back->vertex_count() == K->vertex_count());
        for (VertexId v = 0; v < K->vertex_count(); ++v) CHECK(back->point(v) == K->point(v));
        const Json reparsed = Json::parse(j.dump(2));
        CHECK(dump_line(to_json(*complex_from_json(reparsed))) == dump_line(j));
    }
}

TEST_CASE("complex format") {
    const Json j = to_json(*standard_simplex_complex(1));
    CHECK(dump_line(j) ==
          R"({"dim":1,"ambient_dim":1,"vertices":{"0":["1","0"],"1":["0","1"]},"top_simplices":[[0,1]]})");
    const Json mid = to_json(*oracle::barycentric(1, 1));
    CHECK(mid["vertices"]["2"] == Json::array({"1/2", "1/2"}));
}

TEST_CASE("malformed complexes are rejected") {
    const Json good = to_json(*oracle::barycentric(1, 1));
    auto broken = [&](auto edit) {
        Json j = good;
        edit(j);
        return j;
    };
    CHECK_THROWS_AS(complex_from_json(Json::parse("[]")), InvalidInput);
    CHECK_THROWS_AS(complex_from_json(broken([](Json& j) { j.erase("vertices"); })), InvalidInput);
    CHECK_THROWS_AS(complex_from_json(broken([](Json& j) { j["vertices"]["0"] = {"1/0", "1"}; })), InvalidInput);
    CHECK_THROWS_AS(complex_from_json(broken([](Json& j) { j["vertices"]["0"] = {"x", "1"}; })), InvalidInput);
    CHECK_THROWS_AS(complex_from_json(broken([](Json& j) { j["vertices"]["0"] = {"1/2", "1/3"}; })),
                    ComplexValidationError);
    CHECK_THROWS_AS(complex_from_json(broken([](Json& j) { j["top_simplices"][0][1] = 7; })), ComplexValidationError);
    CHECK_THROWS(complex_from_json(broken([](Json& j) { j["top_simplices"].erase(1); })));
}

TEST_CASE("labeling round trip") {
    const ComplexPtr K = oracle::barycentric(2, 2);
    const Labeling L = random_sperner_labeling(K, 4);
    const Json j = to_json(L);
    CHECK(j.size() == K->vertex_count());
    const Labeling back = labeling_from_json(K, Json::parse(j.dump()));
    CHECK(std::vector<Label>(back.labels().begin(), back.labels().end()) ==
          std::vector<Label>(L.labels().begin(), L.labels().end()));
    Json missing = j;
    missing.erase("3");
    CHECK_THROWS_AS(labeling_from_json(K, missing), InvalidLabeling);
    Json bad = j;
    bad["3"] = 9;
    CHECK_THROWS_AS(labeling_from_json(K, bad), InvalidLabeling);
}

TEST_CASE("cochain round trip") {
    const ComplexPtr K = oracle::barycentric(2, 1);
    std::mt19937_64 rng(12);
    for (int k = 0; k <= 2; ++k)
        for (int t = 0; t < 20; ++t) {
            std::vector<FaceIndex> support;
            for (FaceIndex f = 0; f < K->face_count(k); ++f)
                if (rng() & 1u) support.push_back(f);
            const Cochain c(K, k, support);
            const Json j = to_json(c);
            CHECK(j["degree"] == k);
            CHECK(j["support"].size() == support.size());
            CHECK(cochain_from_json(K, j) == c);
        }
    CHECK_THROWS_AS(cochain_from_json(K, Json::parse(R"({"degree":1,"support":[[0,99]]})")), InvalidInput);
}

TEST_CASE("census and reports") {
    const ComplexPtr K = oracle::barycentric(2, 1);
    const Labeling L = sperner_labeling_at(K, 5);
    const SpernerCensus c = census(L);
    const Json j = to_json(c, *K);
    CHECK(j["e"] == c.e);
    CHECK(j["h"] == c.h);
    REQUIRE(j["fully_labeled"].size() == c.e);
    for (const Json& s : j["fully_labeled"]) CHECK(s.size() == 3);

    const Json t = to_json(triple_check(L));
    for (const char* key : {"dim", "trivial", "counts", "chain", "cohomology", "parities", "agree", "disagreements"})
        CHECK(t.contains(key));
    CHECK(t["agree"] == true);
}

TEST_CASE("corpus output is byte-identical across runs") {
    const ComplexPtr K = oracle::barycentric(2, 2);
    CorpusOptions opts;
    opts.labelings = 50;
    auto render = [&](const CorpusSummary& s) {
        std::string out;
        for (const CorpusEntry& e : s.entries) out += dump_line(to_json(e)) + "\n";
        return out;
    };
    const std::string a = render(run_corpus(K, opts));
    CHECK(a == render(run_corpus(K, opts)));
    CHECK(a == render(run_corpus_serial(K, opts)));
    CHECK(a.rfind("{\"seed\":1,", 0) == 0);
}

TEST_CASE("solver result serialization") {
    SolveOptions opts;
    opts.tol = 1e-3;
    const Json j = to_json(solve(constant_map({0.2, 0.3, 0.5}), opts));
    CHECK(j["status"] == "converged");
    CHECK(j["point"].size() == 3);
    CHECK(j["witness_labels"].size() == 3);
    CHECK(j["residual"].get<double>() <= 1e-3);
}
