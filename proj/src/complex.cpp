#include "sperner/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

using Kind = ComplexValidationError::Kind;

std::string to_text(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

/// Row-reduces in place and returns the rank. Optionally accumulates the determinant
/// (meaningful only for square input).
std::size_t eliminate(std::vector<std::vector<Rational>>& rows, Rational* det) {
    if (det) *det = 1;
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows ? rows[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && rows[pivot][col] == 0) ++pivot;
        if (pivot == nrows) {
            if (det) *det = 0;
            continue;
        }
        if (pivot != rank) {
            std::swap(rows[pivot], rows[rank]);
            if (det) *det = -*det;
        }
        const Rational p = rows[rank][col];
        if (det) *det *= p;
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            if (rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / p;
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    if (det && rank < nrows) *det = 0;
    return rank;
}

std::size_t parse_cap(const char* text, std::size_t fallback) {
    if (!text || !*text) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(text, &end, 10);
    if (end == text || *end != '\0' || v == 0) return fallback;
    return static_cast<std::size_t>(v);
}

} // namespace

// ---------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::initializer_list<VertexId> ids) : Simplex(std::span<const VertexId>(ids.begin(), ids.size())) {}

Simplex::Simplex(std::span<const VertexId> ids) {
    if (ids.size() > kCapacity) throw InvalidInput("simplex has more than " + std::to_string(kCapacity) + " vertices");
    std::copy(ids.begin(), ids.end(), ids_.begin());
    size_ = static_cast<std::uint8_t>(ids.size());
    std::sort(ids_.begin(), ids_.begin() + size_);
}

bool Simplex::contains(VertexId v) const noexcept { return std::binary_search(begin(), end(), v); }

bool Simplex::has_duplicates() const noexcept { return std::adjacent_find(begin(), end()) != end(); }

Simplex Simplex::without(std::size_t i) const {
    Simplex out;
    for (std::size_t j = 0; j < size_; ++j)
        if (j != i) out.ids_[out.size_++] = ids_[j];
    return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// EmbeddedComplex

std::size_t default_simplex_cap() { return parse_cap(std::getenv("SPERNER_MAX_SIMPLICES"), 1'000'000); }

std::span<const Simplex> EmbeddedComplex::faces(int k) const {
    if (k < 0 || k > dim_) return {};
    return faces_[k];
}

std::optional<FaceIndex> EmbeddedComplex::find(const Simplex& s) const {
    const int k = s.dim();
    if (k < 0 || k > dim_) return std::nullopt;
    const auto& list = faces_[k];
    const auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || !(*it == s)) return std::nullopt;
    return static_cast<FaceIndex>(it - list.begin());
}

FaceIndex EmbeddedComplex::index_of(const Simplex& s) const {
    if (auto f = find(s)) return *f;
    throw InvalidInput("simplex " + to_text(s) + " is not a face of the complex");
}

std::span<const FaceIndex> EmbeddedComplex::cofaces(int k, FaceIndex f) const {
    if (k < 0 || k >= dim_) return {};
    const auto& off = coface_offsets_[k];
    return std::span<const FaceIndex>(coface_table_[k]).subspan(off.at(f), off.at(f + 1) - off[f]);
}

std::span<const FaceIndex> EmbeddedComplex::facets(int k, FaceIndex f) const {
    if (k < 1 || k > dim_) throw InvalidInput("facets() requires 1 <= k <= dim");
    const std::size_t width = static_cast<std::size_t>(k) + 1;
    return std::span<const FaceIndex>(facet_table_[k]).subspan(static_cast<std::size_t>(f) * width, width);
}

std::uint32_t EmbeddedComplex::face_zero_mask(int k, FaceIndex f) const {
    std::uint32_t mask = ~0u;
    for (VertexId v : face(k, f)) mask &= vertex_masks_[v];
    return mask;
}

std::vector<ExactPoint> EmbeddedComplex::face_points(const Simplex& s) const {
    std::vector<ExactPoint> out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(point(v));
    return out;
}

double EmbeddedComplex::max_diameter() const {
    if (dim_ < 1) return 0.0;
    Rational best = 0;
    for (const Simplex& e : faces_[1]) best = std::max(best, squared_distance(points_[e[0]], points_[e[1]]));
    return std::sqrt(to_double(best));
}

void EmbeddedComplex::index_faces(const std::vector<Simplex>& tops) {
    faces_.assign(dim_ + 1, {});
    const std::size_t width = static_cast<std::size_t>(dim_) + 1;
    for (const Simplex& top : tops) {
        for (std::uint32_t subset = 1; subset < (1u << width); ++subset) {
            std::array<VertexId, Simplex::kCapacity> buf{};
            std::size_t count = 0;
            for (std::size_t i = 0; i < width; ++i)
                if (subset & (1u << i)) buf[count++] = top[i];
            faces_[count - 1].emplace_back(std::span<const VertexId>(buf.data(), count));
        }
    }
    for (auto& list : faces_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    facet_table_.assign(dim_ + 1, {});
    coface_offsets_.assign(std::max(dim_, 0), {});
    coface_table_.assign(std::max(dim_, 0), {});
    for (int k = 1; k <= dim_; ++k) {
        auto& table = facet_table_[k];
        table.reserve(faces_[k].size() * (k + 1));
        for (const Simplex& s : faces_[k])
            for (std::size_t i = 0; i < s.size(); ++i) table.push_back(index_of(s.without(i)));

        auto& off = coface_offsets_[k - 1];
        off.assign(faces_[k - 1].size() + 1, 0);
        for (FaceIndex lower : table) ++off[lower + 1];
        std::partial_sum(off.begin(), off.end(), off.begin());
        auto& co = coface_table_[k - 1];
        co.resize(table.size());
        std::vector<std::uint32_t> cursor(off.begin(), off.end() - 1);
        for (std::size_t f = 0; f < faces_[k].size(); ++f)
            for (int i = 0; i <= k; ++i) co[cursor[table[f * (k + 1) + i]]++] = static_cast<FaceIndex>(f);
    }
}

ComplexPtr build_complex(int ambient_dim, std::vector<std::pair<VertexId, ExactPoint>> vertices,
                         std::vector<std::vector<VertexId>> top_simplices, const ComplexOptions& options) {
    if (ambient_dim < 0 || ambient_dim > kMaxDim)
        throw InvalidInput("ambient dimension must lie in 0.." + std::to_string(kMaxDim));
    const std::size_t cap = options.max_top_simplices ? options.max_top_simplices : default_simplex_cap();
    if (top_simplices.size() > cap)
        throw ResourceCapExceeded("complex has " + std::to_string(top_simplices.size()) +
                                  " top simplices, cap is " + std::to_string(cap));

    std::shared_ptr<EmbeddedComplex> K(new EmbeddedComplex());
    K->ambient_dim_ = ambient_dim;

    // Vertices: ids must be a permutation of 0..V-1.
    const std::size_t nv = vertices.size();
    K->points_.assign(nv, {});
    std::vector<char> seen(nv, 0);
    for (auto& [id, p] : vertices) {
        if (id < nv && seen[id])
            throw ComplexValidationError(Kind::DuplicateVertex, "duplicate vertex id " + std::to_string(id));
        if (id >= nv)
            throw ComplexValidationError(Kind::NonContiguousIds,
                                         "vertex id " + std::to_string(id) + " outside 0.." + std::to_string(nv - 1));
        if (p.size() != static_cast<std::size_t>(ambient_dim) + 1 || !is_valid_point(p))
            throw ComplexValidationError(Kind::InvalidPoint,
                                         "vertex " + std::to_string(id) + " is not a point of the standard simplex");
        seen[id] = 1;
        K->points_[id] = std::move(p);
    }
    K->vertex_masks_.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) K->vertex_masks_[v] = zero_mask(K->points_[v]);

    // Top simplices.
    std::vector<Simplex> tops;
    tops.reserve(top_simplices.size());
    for (const auto& ids : top_simplices) {
        if (ids.empty() || ids.size() > Simplex::kCapacity)
            throw ComplexValidationError(Kind::DegenerateSimplex, "top simplex with bad vertex count");
        for (VertexId v : ids)
            if (v >= nv)
                throw ComplexValidationError(Kind::NonContiguousIds, "top simplex uses unknown vertex " + std::to_string(v));
        tops.emplace_back(std::span<const VertexId>(ids));
        if (tops.back().has_duplicates())
            throw ComplexValidationError(Kind::DegenerateSimplex, "top simplex " + to_text(tops.back()) + " repeats a vertex");
    }
    if (tops.empty()) {
        if (nv != 0) throw ComplexValidationError(Kind::Pseudomanifold, "vertices given without any top simplex");
        K->dim_ = -1;
        return K;
    }
    const int dim = tops.front().dim();
    if (dim > ambient_dim) throw ComplexValidationError(Kind::DegenerateSimplex, "top simplex dimension exceeds ambient dimension");
    for (const Simplex& s : tops)
        if (s.dim() != dim) throw ComplexValidationError(Kind::DegenerateSimplex, "top simplices of mixed dimension");
    std::sort(tops.begin(), tops.end());
    if (auto dup = std::adjacent_find(tops.begin(), tops.end()); dup != tops.end())
        throw ComplexValidationError(Kind::Pseudomanifold, "top simplex " + to_text(*dup) + " listed twice");
    K->dim_ = dim;

    // Affine independence, and the signed-volume sum for coverage.
    const bool full = dim == ambient_dim;
    const bool coverage = full && options.check_coverage && tops.size() <= options.coverage_limit && dim >= 1;
    Rational volume = 0;
    for (const Simplex& s : tops) {
        if (dim == 0) break;
        const ExactPoint& base = K->points_[s[0]];
        std::vector<std::vector<Rational>> rows;
        rows.reserve(dim);
        for (int i = 1; i <= dim; ++i) {
            const ExactPoint& p = K->points_[s[i]];
            // Full-dimensional: drop the last coordinate, which is determined by the others.
            const std::size_t width = full ? static_cast<std::size_t>(ambient_dim) : p.size();
            std::vector<Rational> row(width);
            for (std::size_t c = 0; c < width; ++c) row[c] = p[c] - base[c];
            rows.push_back(std::move(row));
        }
        Rational det;
        const std::size_t rank = eliminate(rows, full ? &det : nullptr);
        if (rank != static_cast<std::size_t>(dim))
            throw ComplexValidationError(Kind::DegenerateSimplex, "top simplex " + to_text(s) + " is affinely degenerate");
        if (coverage) volume += det < 0 ? Rational(-det) : det;
    }

    K->index_faces(tops);

    std::vector<char> used(nv, 0);
    for (const Simplex& s : tops)
        for (VertexId v : s) used[v] = 1;
    if (std::find(used.begin(), used.end(), 0) != used.end())
        throw ComplexValidationError(Kind::Pseudomanifold, "a vertex belongs to no top simplex");

    if (dim >= 1) {
        for (FaceIndex f = 0; f < K->faces_[dim - 1].size(); ++f) {
            const std::size_t count = K->cofaces(dim - 1, f).size();
            if (count != 1 && count != 2)
                throw ComplexValidationError(Kind::Pseudomanifold, "face " + to_text(K->faces_[dim - 1][f]) + " has " +
                                                                       std::to_string(count) + " cofacets");
            if (full && count == 1 && K->face_zero_mask(dim - 1, f) == 0)
                throw ComplexValidationError(Kind::Coverage, "free face " + to_text(K->faces_[dim - 1][f]) +
                                                                 " does not lie on the boundary of the simplex");
        }
    }
    if (coverage && volume != 1)
        throw ComplexValidationError(Kind::Coverage, "top simplices have total normalized volume " + format_rational(volume) +
                                                         ", expected 1");
    return K;
}

ComplexPtr standard_simplex_complex(int n) {
    const StandardSimplex s(n);
    std::vector<std::pair<VertexId, ExactPoint>> verts;
    std::vector<VertexId> top;
    for (Label i = 1; i <= n + 1; ++i) {
        verts.emplace_back(static_cast<VertexId>(i - 1), s.vertex(i));
        top.push_back(static_cast<VertexId>(i - 1));
    }
    return build_complex(n, std::move(verts), {top});
}

// ---------------------------------------------------------------------------
// Queries

BoundaryComplex boundary_subcomplex(const EmbeddedComplex& K) {
    if (K.dim() != K.ambient_dim()) throw InvalidInput("boundary_subcomplex needs a full-dimensional complex");
    BoundaryComplex out;
    const int n = K.dim();
    std::vector<FaceIndex> faces;
    if (n >= 1)
        for (FaceIndex f = 0; f < K.face_count(n - 1); ++f)
            if (K.in_boundary(n - 1, f)) faces.push_back(f);

    std::vector<VertexId> local(K.vertex_count(), ~VertexId{0});
    for (FaceIndex f : faces)
        for (VertexId v : K.face(n - 1, f)) local[v] = 0;
    for (VertexId v = 0; v < K.vertex_count(); ++v)
        if (local[v] == 0) {
            local[v] = static_cast<VertexId>(out.parent_vertex.size());
            out.parent_vertex.push_back(v);
        }

    std::vector<std::pair<VertexId, ExactPoint>> verts;
    for (VertexId b = 0; b < out.parent_vertex.size(); ++b) verts.emplace_back(b, K.point(out.parent_vertex[b]));
    std::vector<std::vector<VertexId>> tops;
    for (FaceIndex f : faces) {
        std::vector<VertexId> ids;
        for (VertexId v : K.face(n - 1, f)) ids.push_back(local[v]);
        tops.push_back(std::move(ids));
    }
    ComplexOptions opts;
    opts.max_top_simplices = std::max<std::size_t>(tops.size(), 1);
    out.complex = build_complex(n, std::move(verts), std::move(tops), opts);

    // Local ids preserve parent order, so the canonical top order matches `faces`.
    for (FaceIndex t = 0; t < out.complex->top_simplices().size(); ++t) {
        const std::uint32_t mask = out.complex->face_zero_mask(n - 1, t);
        out.face_tag.push_back(static_cast<Label>(std::countr_zero(mask)) + 1);
    }
    return out;
}

std::vector<FaceIndex> cofacets(const EmbeddedComplex& K, const Simplex& face) {
    if (K.dim() < 1 || face.dim() != K.dim() - 1)
        throw InvalidInput("cofacets() expects a face of dimension " + std::to_string(K.dim() - 1));
    const FaceIndex f = K.index_of(face);
    const auto co = K.cofaces(face.dim(), f);
    return {co.begin(), co.end()};
}

std::size_t OpenStar::size() const {
    std::size_t total = 0;
    for (const auto& v : by_dim) total += v.size();
    return total;
}

OpenStar open_star(const EmbeddedComplex& K, VertexId w) {
    if (w >= K.vertex_count()) throw InvalidInput("unknown vertex " + std::to_string(w));
    OpenStar star;
    star.by_dim.assign(K.dim() + 1, {});
    star.by_dim[0].push_back(K.index_of(Simplex{w}));
    for (int k = 0; k < K.dim(); ++k) {
        auto& next = star.by_dim[k + 1];
        for (FaceIndex f : star.by_dim[k])
            for (FaceIndex c : K.cofaces(k, f)) next.push_back(c);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
    }
    return star;
}

// ---------------------------------------------------------------------------
// Subcomplex

Subcomplex::Subcomplex(ComplexPtr parent) : parent_(std::move(parent)) {
    if (!parent_) throw InvalidInput("subcomplex needs a parent complex");
    member_.resize(parent_->dim() + 1);
    for (int k = 0; k <= parent_->dim(); ++k) member_[k].assign(parent_->face_count(k), 0);
}

Subcomplex Subcomplex::empty(ComplexPtr parent) { return Subcomplex(std::move(parent)); }

Subcomplex Subcomplex::boundary(ComplexPtr parent) {
    Subcomplex A(std::move(parent));
    for (int k = 0; k <= A.parent_->dim(); ++k)
        for (FaceIndex f = 0; f < A.parent_->face_count(k); ++f) A.member_[k][f] = A.parent_->in_boundary(k, f);
    return A;
}

bool Subcomplex::contains(int k, FaceIndex f) const {
    if (k < 0 || k > parent_->dim()) return false;
    return member_[k].at(f) != 0;
}

// ---------------------------------------------------------------------------
// SimplicialMap

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<VertexId> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
    if (!source_ || !target_) throw InvalidInput("simplicial map needs both complexes");
    if (map_.size() != source_->vertex_count()) throw InvalidInput("vertex map size differs from source vertex count");
    for (VertexId v : map_)
        if (v >= target_->vertex_count()) throw InvalidInput("vertex map points outside the target");
    for (const Simplex& s : source_->top_simplices())
        if (!target_->find(image(s)))
            throw InvalidInput("image of source simplex " + to_text(s) + " is not a simplex of the target");
}

SimplicialMap SimplicialMap::identity(ComplexPtr K) {
    std::vector<VertexId> ids(K->vertex_count());
    std::iota(ids.begin(), ids.end(), VertexId{0});
    return SimplicialMap(K, K, std::move(ids));
}

SimplicialMap SimplicialMap::compose(const SimplicialMap& outer, const SimplicialMap& inner) {
    if (inner.target_ != outer.source_) throw InvalidInput("maps are not composable");
    std::vector<VertexId> ids(inner.map_.size());
    for (std::size_t v = 0; v < ids.size(); ++v) ids[v] = outer.map_[inner.map_[v]];
    return SimplicialMap(inner.source_, outer.target_, std::move(ids));
}

Simplex SimplicialMap::image(const Simplex& s) const {
    std::array<VertexId, Simplex::kCapacity> buf{};
    for (std::size_t i = 0; i < s.size(); ++i) buf[i] = map_.at(s[i]);
    std::sort(buf.begin(), buf.begin() + s.size());
    const auto last = std::unique(buf.begin(), buf.begin() + s.size());
    return Simplex(std::span<const VertexId>(buf.data(), static_cast<std::size_t>(last - buf.begin())));
}

std::optional<FaceIndex> SimplicialMap::maps_onto(int k, FaceIndex f) const {
    const Simplex img = image(source_->face(k, f));
    if (img.dim() != k) return std::nullopt;
    return target_->find(img);
}

} // namespace sperner
