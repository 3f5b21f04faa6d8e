#include "sperner/cochain.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sperner/errors.hpp"
#include "sperner/f2.hpp"

namespace sperner {

// ---------------------------------------------------------------------------
// Cochain

Cochain::Cochain(ComplexPtr complex, int degree, std::vector<FaceIndex> support)
    : complex_(std::move(complex)), degree_(degree), support_(std::move(support)) {
    if (!complex_) throw InvalidInput("cochain needs a complex");
    std::sort(support_.begin(), support_.end());
    if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
        throw InvalidInput("cochain support lists a simplex twice");
    const std::size_t count = complex_->face_count(degree_);
    if (!support_.empty() && support_.back() >= count)
        throw InvalidInput("cochain support references a simplex outside degree " + std::to_string(degree_));
}

Cochain Cochain::zero(ComplexPtr complex, int degree) { return Cochain(std::move(complex), degree, {}); }

Cochain Cochain::from_terms(ComplexPtr complex, int degree, std::vector<FaceIndex> terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<FaceIndex> odd;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2) odd.push_back(terms[i]);
        i = j;
    }
    return Cochain(std::move(complex), degree, std::move(odd));
}

Cochain Cochain::from_simplices(ComplexPtr complex, std::span<const Simplex> simplices) {
    if (simplices.empty()) throw InvalidInput("from_simplices needs at least one simplex to fix the degree");
    const int degree = simplices.front().dim();
    std::vector<FaceIndex> terms;
    for (const Simplex& s : simplices) {
        if (s.dim() != degree) throw InvalidInput("cochain simplices of mixed dimension");
        terms.push_back(complex->index_of(s));
    }
    return from_terms(std::move(complex), degree, std::move(terms));
}

std::vector<Simplex> Cochain::simplices() const {
    std::vector<Simplex> out;
    out.reserve(support_.size());
    for (FaceIndex f : support_) out.push_back(complex_->face(degree_, f));
    return out;
}

bool Cochain::contains(FaceIndex f) const { return std::binary_search(support_.begin(), support_.end(), f); }

bool Cochain::is_relative(const Subcomplex& A) const {
    if (A.parent() != complex_) throw InvalidInput("subcomplex of a different complex");
    return std::none_of(support_.begin(), support_.end(), [&](FaceIndex f) { return A.contains(degree_, f); });
}

Cochain Cochain::operator+(const Cochain& other) const {
    if (other.complex_ != complex_ || other.degree_ != degree_) throw InvalidInput("adding cochains of different spaces");
    std::vector<FaceIndex> out;
    std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(), other.support_.end(),
                                  std::back_inserter(out));
    return Cochain(complex_, degree_, std::move(out));
}

// ---------------------------------------------------------------------------
// Operators

Cochain coboundary(const Cochain& c) {
    const auto& K = *c.complex();
    std::vector<FaceIndex> terms;
    for (FaceIndex f : c.support())
        for (FaceIndex g : K.cofaces(c.degree(), f)) terms.push_back(g);
    return Cochain::from_terms(c.complex(), c.degree() + 1, std::move(terms));
}

Cochain pullback(const SimplicialMap& map, const Cochain& c) {
    if (c.complex() != map.target()) throw InvalidInput("pullback: cochain does not live on the map's target");
    const int k = c.degree();
    std::vector<FaceIndex> out;
    if (c.is_zero()) return Cochain(map.source(), k, {});
    for (FaceIndex f = 0; f < map.source()->face_count(k); ++f)
        if (auto t = map.maps_onto(k, f); t && c.contains(*t)) out.push_back(f);
    return Cochain(map.source(), k, std::move(out));
}

CommutationReport verify_commutation(const SimplicialMap& map, const Cochain& c) {
    CommutationReport r{pullback(map, coboundary(c)), coboundary(pullback(map, c)), false};
    r.equal = r.pullback_of_coboundary == r.coboundary_of_pullback;
    return r;
}

ChainIdentityReport chain_identity_report(const Labeling& L) {
    const ComplexPtr& K = L.complex();
    const int n = K->ambient_dim();
    if (K->dim() != n || n < 1) throw InvalidInput("chain identity needs a full-dimensional complex with n >= 1");
    require_sperner(L);

    const ComplexPtr delta = standard_simplex_complex(n);
    const SimplicialMap phi = to_simplicial_map(L, delta);

    Simplex last_face;
    {
        std::vector<VertexId> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
        last_face = Simplex(std::span<const VertexId>(ids));
    }
    const Cochain face_cochain(delta, n - 1, {delta->index_of(last_face)});

    const Cochain pulled = pullback(phi, face_cochain); // σ's and τ's
    Cochain lhs = coboundary(pulled);
    Cochain rhs = pullback(phi, coboundary(face_cochain));

    std::vector<FaceIndex> terms, sigma_hats;
    std::size_t h = 0, g = 0;
    for (FaceIndex s : pulled.support()) {
        const auto co = K->cofaces(n - 1, s);
        if (K->in_boundary(n - 1, s)) {
            if (co.size() != 1) throw InvariantBreach("boundary face with " + std::to_string(co.size()) + " cofacets");
            sigma_hats.push_back(co[0]);
            ++h;
        } else {
            if (co.size() != 2) throw InvariantBreach("interior face with " + std::to_string(co.size()) + " cofacets");
            ++g;
        }
    }
    terms = sigma_hats;
    for (FaceIndex s : pulled.support())
        if (!K->in_boundary(n - 1, s))
            for (FaceIndex t : K->cofaces(n - 1, s)) terms.push_back(t);

    if (!(Cochain::from_terms(K, n, terms) == lhs))
        throw InvariantBreach("term list disagrees with the coboundary of the pullback");

    std::vector<FaceIndex> sorted = terms;
    std::sort(sorted.begin(), sorted.end());
    std::size_t cancellations = 0;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) {
            ++cancellations;
            ++i;
        }
    std::vector<FaceIndex> hats = sigma_hats;
    std::sort(hats.begin(), hats.end());

    const SpernerCensus c = census(L);

    ChainIdentityReport r{std::move(terms), std::move(sigma_hats), std::move(lhs), std::move(rhs)};
    r.e = r.rhs.support().size();
    r.h = h;
    r.g = g;
    r.cancellations = cancellations;
    r.census_f = c.f;
    r.sums_agree = r.lhs == r.rhs;
    r.cancellations_match_f = cancellations == c.f;
    r.integer_identity = r.lhs_terms.size() == h + 2 * g && h + 2 * g == r.e + 2 * cancellations &&
                         h + 2 * g == c.e + 2 * c.f;
    r.sigma_hats_distinct = std::adjacent_find(hats.begin(), hats.end()) == hats.end();
    r.census_agrees = r.e == c.e && r.h == c.h && r.g == c.g;
    return r;
}

// ---------------------------------------------------------------------------
// Degree

namespace {

void require_closed_pseudomanifold(const EmbeddedComplex& K, const char* which) {
    const int d = K.dim();
    for (FaceIndex f = 0; d >= 1 && f < K.face_count(d - 1); ++f)
        if (K.cofaces(d - 1, f).size() != 2)
            throw InvalidInput(std::string("degree_mod2: ") + which + " is not a closed pseudomanifold");
}

} // namespace

int degree_mod2(const SimplicialMap& map, FaceIndex target_top) {
    const auto& S = *map.source();
    const auto& T = *map.target();
    if (S.dim() != T.dim()) throw InvalidInput("degree_mod2: complexes of different dimension");
    require_closed_pseudomanifold(S, "source");
    require_closed_pseudomanifold(T, "target");
    if (target_top >= T.top_simplices().size()) throw InvalidInput("degree_mod2: target simplex out of range");
    const int d = S.dim();
    std::size_t count = 0;
    for (FaceIndex f = 0; f < S.face_count(d); ++f)
        if (auto t = map.maps_onto(d, f); t && *t == target_top) ++count;
    return static_cast<int>(count % 2);
}

int degree_mod2(const SimplicialMap& map) {
    const auto& T = *map.target();
    if (T.top_simplices().empty()) throw InvalidInput("degree_mod2: empty target");
    const int d = T.dim();
    std::vector<std::size_t> counts(T.face_count(d), 0);
    const int first = degree_mod2(map, 0);
    for (FaceIndex f = 0; f < map.source()->face_count(d); ++f)
        if (auto t = map.maps_onto(d, f)) ++counts[*t];
    for (std::size_t t = 0; t < counts.size(); ++t)
        if (static_cast<int>(counts[t] % 2) != first)
            throw InvariantBreach("mod-2 preimage count depends on the target simplex");
    return first;
}

// ---------------------------------------------------------------------------
// Cohomology

namespace {

struct RelativeBasis {
    std::vector<FaceIndex> faces;        // basis faces (not in A)
    std::vector<std::int64_t> position;  // face index -> basis position or -1
};

RelativeBasis relative_basis(const Subcomplex& A, int k, const CohomologyOptions& options) {
    const auto& K = *A.parent();
    RelativeBasis b;
    b.position.assign(K.face_count(k), -1);
    for (FaceIndex f = 0; f < K.face_count(k); ++f)
        if (!A.contains(k, f)) {
            b.position[f] = static_cast<std::int64_t>(b.faces.size());
            b.faces.push_back(f);
        }
    if (b.faces.size() > options.max_simplices_per_degree)
        throw ResourceCapExceeded("cochain space of degree " + std::to_string(k) + " has " +
                                  std::to_string(b.faces.size()) + " simplices, cap is " +
                                  std::to_string(options.max_simplices_per_degree));
    return b;
}

/// Matrix of ∂*: C^k(K,A) → C^{k+1}(K,A), rows indexed by (k+1)-faces, plus `extra` zero columns.
BitMatrix coboundary_matrix(const Subcomplex& A, int k, const RelativeBasis& rows, const RelativeBasis& cols,
                            std::size_t extra, const CohomologyOptions& options) {
    if (BitMatrix::storage_bytes(rows.faces.size(), cols.faces.size() + extra) > options.max_matrix_bytes)
        throw ResourceCapExceeded("coboundary matrix exceeds the memory cap");
    const auto& K = *A.parent();
    BitMatrix m(rows.faces.size(), cols.faces.size() + extra);
    for (std::size_t r = 0; r < rows.faces.size(); ++r)
        for (FaceIndex facet : K.facets(k + 1, rows.faces[r]))
            if (cols.position[facet] >= 0) m.set(r, static_cast<std::size_t>(cols.position[facet]));
    return m;
}

std::size_t coboundary_rank(const Subcomplex& A, int k, const CohomologyOptions& options) {
    const auto& K = *A.parent();
    if (k < 0 || k >= K.dim()) return 0;
    const auto rows = relative_basis(A, k + 1, options);
    const auto cols = relative_basis(A, k, options);
    return f2_rank(coboundary_matrix(A, k, rows, cols, 0, options));
}

} // namespace

std::size_t cohomology_rank(const Subcomplex& A, int k, const CohomologyOptions& options) {
    const auto& K = *A.parent();
    if (k < 0 || k > K.dim()) return 0;
    const std::size_t dim = relative_basis(A, k, options).faces.size();
    std::size_t rank = dim - coboundary_rank(A, k, options) - coboundary_rank(A, k - 1, options);
    if (options.reduced && k == 0 && K.vertex_count() > 0) {
        // The constant cochain is a cocycle exactly when A has no vertex.
        bool relative = true;
        for (FaceIndex v = 0; v < K.face_count(0) && relative; ++v) relative = !A.contains(0, v);
        if (relative) --rank;
    }
    return rank;
}

bool is_relative_coboundary(const Cochain& c, const Subcomplex& A, const CohomologyOptions& options) {
    if (c.complex() != A.parent()) throw InvalidInput("cochain and subcomplex live on different complexes");
    if (!c.is_relative(A)) return false;
    const int k = c.degree();
    if (k == 0) return c.is_zero();
    const auto rows = relative_basis(A, k, options);
    const auto cols = relative_basis(A, k - 1, options);
    BitMatrix m = coboundary_matrix(A, k - 1, rows, cols, 1, options);
    const std::size_t base_rank = f2_rank(m);
    const std::size_t extra = cols.faces.size();
    for (FaceIndex f : c.support()) m.set(static_cast<std::size_t>(rows.position[f]), extra);
    return f2_rank(std::move(m)) == base_rank;
}

Cochain coboundary_in(const Cochain& c, const Subcomplex& A) {
    const Cochain full = coboundary(c);
    std::vector<FaceIndex> kept;
    for (FaceIndex f : full.support())
        if (A.contains(full.degree(), f)) kept.push_back(f);
    return Cochain(c.complex(), full.degree(), std::move(kept));
}

ConnectingWitness connecting_witness(const Cochain& alpha, const Subcomplex& A, std::uint64_t seed,
                                     const CohomologyOptions& options) {
    if (alpha.complex() != A.parent()) throw InvalidInput("cochain and subcomplex live on different complexes");
    const int k = alpha.degree();
    for (FaceIndex f : alpha.support())
        if (!A.contains(k, f)) throw InvalidInput("connecting_witness: α is not supported on the subcomplex");
    if (!coboundary_in(alpha, A).is_zero()) throw InvalidInput("connecting_witness: α is not a cocycle of the subcomplex");

    std::mt19937_64 rng(seed);
    std::vector<FaceIndex> noise;
    for (FaceIndex f = 0; f < alpha.complex()->face_count(k); ++f)
        if (!A.contains(k, f) && (rng() & 1u)) noise.push_back(f);
    Cochain alternative = alpha + Cochain(alpha.complex(), k, std::move(noise));

    ConnectingWitness w{alpha, coboundary(alpha), alternative, coboundary(alternative)};
    w.witness_is_relative_cocycle = w.witness.is_relative(A) && coboundary(w.witness).is_zero();
    w.same_class = is_relative_coboundary(w.witness + w.alternative_witness, A, options);
    return w;
}

Cochain lift_to_parent(const BoundaryComplex& boundary, const Cochain& c, ComplexPtr parent) {
    if (c.complex() != boundary.complex) throw InvalidInput("cochain does not live on the boundary complex");
    std::vector<FaceIndex> out;
    for (const Simplex& s : c.simplices()) {
        std::vector<VertexId> ids;
        for (VertexId v : s) ids.push_back(boundary.parent_vertex.at(v));
        out.push_back(parent->index_of(Simplex(std::span<const VertexId>(ids))));
    }
    return Cochain(std::move(parent), c.degree(), std::move(out));
}

} // namespace sperner
