#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sperner/simplex.hpp"

namespace sperner {

using VertexId = std::uint32_t;
using FaceIndex = std::uint32_t;

/// A simplex as its sorted set of vertex ids. Orientation is never stored.
class Simplex {
public:
    static constexpr std::size_t kCapacity = kMaxDim + 1;

    Simplex() = default;
    Simplex(std::initializer_list<VertexId> ids);
    /// Sorts the ids. Duplicate ids are kept (see has_duplicates()).
    explicit Simplex(std::span<const VertexId> ids);

    std::size_t size() const noexcept { return size_; }
    int dim() const noexcept { return static_cast<int>(size_) - 1; }
    bool empty() const noexcept { return size_ == 0; }

    VertexId operator[](std::size_t i) const noexcept { return ids_[i]; }
    const VertexId* begin() const noexcept { return ids_.data(); }
    const VertexId* end() const noexcept { return ids_.data() + size_; }
    std::span<const VertexId> ids() const noexcept { return {ids_.data(), size_}; }

    bool contains(VertexId v) const noexcept;
    bool has_duplicates() const noexcept;

    /// The facet obtained by dropping the i-th vertex (in sorted position).
    Simplex without(std::size_t i) const;

    friend bool operator==(const Simplex& a, const Simplex& b) noexcept {
        return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
    }
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept;

private:
    std::array<VertexId, kCapacity> ids_{};
    std::uint8_t size_ = 0;
};

struct ComplexOptions {
    /// Run the exact volume-sum coverage check (only for full-dimensional complexes).
    bool check_coverage = true;
    /// Skip the coverage check above this many top simplices.
    std::size_t coverage_limit = 100'000;
    /// Refuse to build complexes with more top simplices than this.
    std::size_t max_top_simplices = 0; ///< 0 means default_simplex_cap()
};

/// Top-simplex cap, overridable with SPERNER_MAX_SIMPLICES. Default 10^6.
std::size_t default_simplex_cap();

/// A finite simplicial complex whose vertices are exact points of the
/// standard simplex of dimension ambient_dim(). Immutable once built.
///
/// Faces of every dimension are stored sorted lexicographically, so a face
/// is addressed by (dimension, index) and every report built on this
/// ordering is reproducible.
class EmbeddedComplex {
public:
    int dim() const noexcept { return dim_; }
    int ambient_dim() const noexcept { return ambient_dim_; }

    std::size_t vertex_count() const noexcept { return points_.size(); }
    const ExactPoint& point(VertexId v) const { return points_.at(v); }
    std::uint32_t vertex_zero_mask(VertexId v) const { return vertex_masks_.at(v); }

    std::span<const Simplex> faces(int k) const;
    std::span<const Simplex> top_simplices() const { return faces(dim_); }
    const Simplex& face(int k, FaceIndex f) const { return faces(k)[f]; }
    std::size_t face_count(int k) const { return faces(k).size(); }

    std::optional<FaceIndex> find(const Simplex& s) const;
    /// Throws InvalidInput when s is not a face.
    FaceIndex index_of(const Simplex& s) const;

    /// (k+1)-faces containing face f of dimension k.
    std::span<const FaceIndex> cofaces(int k, FaceIndex f) const;
    /// (k-1)-faces of face f; entry i drops the i-th sorted vertex. Requires k >= 1.
    std::span<const FaceIndex> facets(int k, FaceIndex f) const;

    /// Bit i-1 set iff every vertex of the face has x^i = 0, i.e. the face lies in Δ_i.
    std::uint32_t face_zero_mask(int k, FaceIndex f) const;
    bool in_boundary(int k, FaceIndex f) const { return face_zero_mask(k, f) != 0; }

    std::vector<ExactPoint> face_points(const Simplex& s) const;
    double max_diameter() const;

private:
    friend std::shared_ptr<const EmbeddedComplex> build_complex(int, std::vector<std::pair<VertexId, ExactPoint>>,
                                                                std::vector<std::vector<VertexId>>,
                                                                const ComplexOptions&);
    EmbeddedComplex() = default;
    void index_faces(const std::vector<Simplex>& tops);

    int dim_ = -1;
    int ambient_dim_ = 0;
    std::vector<ExactPoint> points_;
    std::vector<std::uint32_t> vertex_masks_;
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::vector<FaceIndex>> facet_table_;   // per k >= 1, (k+1) entries per face
    std::vector<std::vector<std::uint32_t>> coface_offsets_;
    std::vector<std::vector<FaceIndex>> coface_table_;
};

using ComplexPtr = std::shared_ptr<const EmbeddedComplex>;

/// Validates and indexes a complex inside the standard ambient_dim-simplex.
/// Vertex ids must be exactly 0..V-1 (in any order). All top simplices must
/// share one dimension. Checks: valid points, distinct vertices, affine
/// independence, pseudomanifold, and (full-dimensional case) exact coverage
/// of the simplex by volume sum.
ComplexPtr build_complex(int ambient_dim, std::vector<std::pair<VertexId, ExactPoint>> vertices,
                         std::vector<std::vector<VertexId>> top_simplices, const ComplexOptions& options = {});

/// The unsubdivided standard simplex; vertex id i-1 sits at v_i.
ComplexPtr standard_simplex_complex(int n);

/// (n-1)-faces of K lying in ∂Δ, as a complex of its own.
struct BoundaryComplex {
    ComplexPtr complex;
    std::vector<VertexId> parent_vertex; ///< boundary vertex id -> vertex id in K
    std::vector<Label> face_tag;         ///< per top simplex of `complex`: the i with simplex ⊂ Δ_i
};

BoundaryComplex boundary_subcomplex(const EmbeddedComplex& K);

/// Top simplices of K having the (n-1)-face `face` as a facet.
std::vector<FaceIndex> cofacets(const EmbeddedComplex& K, const Simplex& face);

/// All simplices of K containing vertex w, grouped by dimension.
struct OpenStar {
    std::vector<std::vector<FaceIndex>> by_dim;
    std::size_t size() const;
};

OpenStar open_star(const EmbeddedComplex& K, VertexId w);

/// A subcomplex of a parent complex as a membership mask over its faces.
class Subcomplex {
public:
    static Subcomplex empty(ComplexPtr parent);
    /// Faces lying in ∂Δ.
    static Subcomplex boundary(ComplexPtr parent);

    const ComplexPtr& parent() const noexcept { return parent_; }
    bool contains(int k, FaceIndex f) const;

private:
    explicit Subcomplex(ComplexPtr parent);
    ComplexPtr parent_;
    std::vector<std::vector<char>> member_;
};

/// Vertex map between complexes whose image of every simplex is a simplex of the target.
class SimplicialMap {
public:
    SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<VertexId> vertex_map);

    static SimplicialMap identity(ComplexPtr K);
    /// outer ∘ inner
    static SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

    const ComplexPtr& source() const noexcept { return source_; }
    const ComplexPtr& target() const noexcept { return target_; }
    std::span<const VertexId> vertex_map() const noexcept { return map_; }
    VertexId operator()(VertexId v) const { return map_.at(v); }

    /// Sorted, deduplicated image vertex set.
    Simplex image(const Simplex& s) const;
    /// Index of the target k-face the source k-face maps onto, if the map is injective on it.
    std::optional<FaceIndex> maps_onto(int k, FaceIndex f) const;

private:
    ComplexPtr source_;
    ComplexPtr target_;
    std::vector<VertexId> map_;
};

} // namespace sperner
