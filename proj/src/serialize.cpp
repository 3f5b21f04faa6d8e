#include "sperner/serialize.hpp"

#include "sperner/errors.hpp"
#include "sperner/rational.hpp"

namespace sperner {

namespace {

Json ids_json(const Simplex& s) {
    Json a = Json::array();
    for (VertexId v : s) a.push_back(v);
    return a;
}

Json faces_json(const EmbeddedComplex& K, int k, std::span<const FaceIndex> faces) {
    Json a = Json::array();
    for (FaceIndex f : faces) a.push_back(ids_json(K.face(k, f)));
    return a;
}

Json support_json(const Cochain& c) { return faces_json(*c.complex(), c.degree(), c.support()); }

Simplex simplex_from_json(const Json& j) {
    if (!j.is_array() || j.size() > Simplex::kCapacity) throw InvalidInput("simplex must be an array of vertex ids");
    std::vector<VertexId> ids;
    for (const auto& v : j) ids.push_back(v.get<VertexId>());
    return Simplex(std::span<const VertexId>(ids));
}

} // namespace

Json to_json(const EmbeddedComplex& K) {
    Json j;
    j["dim"] = K.dim();
    j["ambient_dim"] = K.ambient_dim();
    Json vertices = Json::object();
    for (VertexId v = 0; v < K.vertex_count(); ++v) {
        Json coords = Json::array();
        for (const Rational& q : K.point(v)) coords.push_back(format_rational(q));
        vertices[std::to_string(v)] = std::move(coords);
    }
    j["vertices"] = std::move(vertices);
    Json tops = Json::array();
    for (const Simplex& s : K.top_simplices()) tops.push_back(ids_json(s));
    j["top_simplices"] = std::move(tops);
    return j;
}

ComplexPtr complex_from_json(const Json& j, const ComplexOptions& options) {
    try {
        const int dim = j.at("dim").get<int>();
        const int ambient = j.contains("ambient_dim") ? j.at("ambient_dim").get<int>() : dim;
        std::vector<std::pair<VertexId, ExactPoint>> vertices;
        for (const auto& [key, coords] : j.at("vertices").items()) {
            std::size_t used = 0;
            const unsigned long id = std::stoul(key, &used);
            if (used != key.size()) throw InvalidInput("vertex id '" + key + "' is not an integer");
            ExactPoint p;
            for (const auto& c : coords) p.push_back(parse_rational(c.get<std::string>()));
            vertices.emplace_back(static_cast<VertexId>(id), std::move(p));
        }
        std::vector<std::vector<VertexId>> tops;
        for (const auto& t : j.at("top_simplices")) tops.push_back(t.get<std::vector<VertexId>>());
        ComplexPtr K = build_complex(ambient, std::move(vertices), std::move(tops), options);
        if (K->dim() != dim) throw InvalidInput("declared dim does not match the top simplices");
        return K;
    } catch (const Json::exception& ex) {
        throw InvalidInput(std::string("malformed complex document: ") + ex.what());
    } catch (const std::logic_error& ex) {
        if (dynamic_cast<const InvalidInput*>(&ex) || dynamic_cast<const InvariantBreach*>(&ex)) throw;
        throw InvalidInput(std::string("malformed complex document: ") + ex.what());
    }
}

Json to_json(const Labeling& L) {
    Json j = Json::object();
    for (VertexId v = 0; v < L.labels().size(); ++v) j[std::to_string(v)] = L[v];
    return j;
}

Labeling labeling_from_json(const ComplexPtr& K, const Json& j) {
    std::vector<Label> labels(K->vertex_count(), 0);
    std::vector<char> seen(labels.size(), 0);
    try {
        for (const auto& [key, value] : j.items()) {
            const unsigned long id = std::stoul(key);
            if (id >= labels.size() || seen[id]) throw InvalidLabeling("bad or repeated vertex id " + key);
            seen[id] = 1;
            labels[id] = value.get<Label>();
        }
    } catch (const Json::exception& ex) {
        throw InvalidInput(std::string("malformed labeling document: ") + ex.what());
    }
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (!seen[v]) throw InvalidLabeling("vertex " + std::to_string(v) + " has no label");
    return Labeling(K, std::move(labels));
}

Json to_json(const SpernerCensus& c, const EmbeddedComplex& K) {
    Json j;
    j["e"] = c.e;
    j["f"] = c.f;
    j["g"] = c.g;
    j["h"] = c.h;
    j["fully_labeled"] = faces_json(K, K.dim(), c.fully_labeled);
    return j;
}

Json to_json(const Cochain& c) {
    Json j;
    j["degree"] = c.degree();
    j["support"] = support_json(c);
    return j;
}

Cochain cochain_from_json(const ComplexPtr& K, const Json& j) {
    try {
        const int degree = j.at("degree").get<int>();
        std::vector<Simplex> simplices;
        for (const auto& s : j.at("support")) {
            simplices.push_back(simplex_from_json(s));
            if (simplices.back().dim() != degree) throw InvalidInput("cochain simplex of the wrong dimension");
        }
        if (simplices.empty()) return Cochain::zero(K, degree);
        return Cochain::from_simplices(K, simplices);
    } catch (const Json::exception& ex) {
        throw InvalidInput(std::string("malformed cochain document: ") + ex.what());
    }
}

Json to_json(const CommutationReport& r) {
    Json j;
    j["degree"] = r.pullback_of_coboundary.degree();
    j["pullback_of_coboundary"] = support_json(r.pullback_of_coboundary);
    j["coboundary_of_pullback"] = support_json(r.coboundary_of_pullback);
    j["equal"] = r.equal;
    return j;
}

Json to_json(const ChainIdentityReport& r) {
    Json j;
    j["e"] = r.e;
    j["h"] = r.h;
    j["g"] = r.g;
    j["cancellations"] = r.cancellations;
    j["census_f"] = r.census_f;
    j["lhs"] = support_json(r.lhs);
    j["rhs"] = support_json(r.rhs);
    j["sums_agree"] = r.sums_agree;
    j["cancellations_match_f"] = r.cancellations_match_f;
    j["integer_identity"] = r.integer_identity;
    j["sigma_hats_distinct"] = r.sigma_hats_distinct;
    j["census_agrees"] = r.census_agrees;
    j["ok"] = r.ok();
    return j;
}

Json to_json(const TripleCheckReport& r) {
    Json j;
    j["dim"] = r.dim;
    j["trivial"] = r.trivial;
    j["counts"] = {{"e", r.e}, {"f", r.f}, {"g", r.g}, {"h", r.h}};
    j["chain"] = {{"e", r.chain_e},
                  {"h", r.chain_h},
                  {"g", r.chain_g},
                  {"cancellations", r.chain_cancellations},
                  {"identity_ok", r.chain_identity_ok}};
    j["cohomology"] = {{"boundary_degree", r.boundary_degree},
                       {"boundary_pullback", r.boundary_pullback},
                       {"pullback_of_top", r.pullback_of_top}};
    if (r.connecting_class_matches) j["cohomology"]["connecting_class_matches"] = *r.connecting_class_matches;
    j["parities"] = {{"combinatorial", r.combinatorial_parity},
                     {"chain", r.chain_parity},
                     {"cohomological", r.cohomological_parity}};
    j["agree"] = r.agree();
    j["disagreements"] = r.disagreements;
    return j;
}

Json to_json(const CorpusEntry& e) {
    Json j;
    j["seed"] = e.seed;
    if (!e.error.empty()) {
        j["error"] = e.error;
        j["agree"] = false;
        return j;
    }
    const Json report = to_json(e.report);
    for (const auto& [key, value] : report.items()) j[key] = value;
    if (e.pathfollow_in_bruteforce) j["pathfollow_in_bruteforce"] = *e.pathfollow_in_bruteforce;
    j["agree"] = e.ok();
    return j;
}

Json to_json(const ApproxFixedPoint& p) {
    Json j;
    j["status"] = std::string(status_name(p.status));
    j["point"] = p.point;
    j["residual"] = p.residual;
    j["level"] = p.level;
    j["m"] = p.m;
    j["witness_diameter"] = p.witness_diameter;
    j["witness_labels"] = p.witness_labels;
    j["witness_vertices"] = p.witness_vertices;
    j["best_residuals"] = p.best_residuals;
    j["evaluations"] = p.evaluations;
    return j;
}

std::string dump_line(const Json& j) { return j.dump(); }

} // namespace sperner
