#include "sperner/sperner.hpp"

#include <algorithm>
#include <string>

#include "sperner/errors.hpp"
#include "sperner/kernels.hpp"

namespace sperner {

Labeling::Labeling(ComplexPtr complex, std::vector<Label> labels) : complex_(std::move(complex)), labels_(std::move(labels)) {
    if (!complex_) throw InvalidInput("labeling needs a complex");
    if (labels_.size() != complex_->vertex_count())
        throw InvalidLabeling("missing label: got " + std::to_string(labels_.size()) + " labels for " +
                              std::to_string(complex_->vertex_count()) + " vertices");
    const int top = label_count();
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] < 1 || labels_[v] > top)
            throw InvalidLabeling("vertex " + std::to_string(v) + " has label " + std::to_string(labels_[v]) +
                                  " outside 1.." + std::to_string(top));
}

std::vector<SpernerViolation> validate_sperner(const Labeling& L) {
    std::vector<SpernerViolation> out;
    const auto& K = *L.complex();
    for (VertexId v = 0; v < K.vertex_count(); ++v) {
        const Label l = L[v];
        if (K.vertex_zero_mask(v) & (1u << (l - 1))) out.push_back({v, l});
    }
    return out;
}

void require_sperner(const Labeling& L) {
    const auto violations = validate_sperner(L);
    if (violations.empty()) return;
    std::string msg = "labeling violates the Sperner condition:";
    for (std::size_t i = 0; i < std::min<std::size_t>(violations.size(), 5); ++i)
        msg += " vertex " + std::to_string(violations[i].vertex) + " lies on face " + std::to_string(violations[i].face) +
               " but is labeled " + std::to_string(violations[i].face) + ";";
    if (violations.size() > 5) msg += " ...";
    throw InvalidLabeling(msg);
}

std::uint32_t label_mask(const Labeling& L, const Simplex& s) {
    std::uint32_t m = 0;
    for (VertexId v : s) m |= 1u << (L[v] - 1);
    return m;
}

SpernerCensus census(const Labeling& L, Label distinguished) {
    const auto& K = *L.complex();
    const int n = K.ambient_dim();
    if (K.dim() != n) throw InvalidInput("census needs a full-dimensional complex");
    require_sperner(L);
    if (distinguished == 0) distinguished = n + 1;
    if (distinguished < 1 || distinguished > n + 1) throw InvalidInput("distinguished label out of range");

    SpernerCensus c;
    c.distinguished = distinguished;
    const std::uint32_t full = (1u << (n + 1)) - 1;
    const std::uint32_t door = full & ~(1u << (distinguished - 1));

    const auto top_masks = kernels::face_label_masks(K, L.labels(), n);
    c.types.resize(top_masks.size(), SimplexType::First);
    for (FaceIndex t = 0; t < top_masks.size(); ++t) {
        if (top_masks[t] == full) {
            c.types[t] = SimplexType::Second;
            c.fully_labeled.push_back(t);
        } else if (top_masks[t] == door) {
            c.types[t] = SimplexType::Third;
            c.third_type.push_back(t);
        }
    }
    if (n == 0) {
        // The empty face is the single door, sitting on the (empty) boundary.
        c.h = 1;
    } else {
        const auto facet_masks = kernels::face_label_masks(K, L.labels(), n - 1);
        for (FaceIndex f : kernels::select_equal(facet_masks, door)) {
            if (K.cofaces(n - 1, f).size() == 1)
                c.boundary_doors.push_back(f);
            else
                c.interior_doors.push_back(f);
        }
        c.h = c.boundary_doors.size();
        c.g = c.interior_doors.size();
    }
    c.e = c.fully_labeled.size();
    c.f = c.third_type.size();
    return c;
}

std::vector<FaceIndex> find_fully_labeled_bruteforce(const Labeling& L) {
    const auto& K = *L.complex();
    const int n = K.ambient_dim();
    if (K.dim() != n) throw InvalidInput("fully labeled search needs a full-dimensional complex");
    require_sperner(L);
    const auto masks = kernels::face_label_masks(K, L.labels(), n);
    return kernels::select_equal(masks, (1u << (n + 1)) - 1);
}

SimplicialMap to_simplicial_map(const Labeling& L, ComplexPtr target) {
    require_sperner(L);
    const int n = L.complex()->ambient_dim();
    if (!target) target = standard_simplex_complex(n);
    if (target->vertex_count() != static_cast<std::size_t>(n) + 1)
        throw InvalidInput("labeling map target must be the standard simplex");
    std::vector<VertexId> map(L.labels().size());
    for (std::size_t v = 0; v < map.size(); ++v) map[v] = static_cast<VertexId>(L.labels()[v] - 1);
    return SimplicialMap(L.complex(), std::move(target), std::move(map));
}

SimplicialMap boundary_map(const Labeling& L, const BoundaryComplex& source, const BoundaryComplex& target) {
    require_sperner(L);
    std::vector<VertexId> local(target.parent_vertex.empty() ? 0 : *std::max_element(target.parent_vertex.begin(),
                                                                                       target.parent_vertex.end()) + 1,
                                ~VertexId{0});
    for (VertexId b = 0; b < target.parent_vertex.size(); ++b) local[target.parent_vertex[b]] = b;
    std::vector<VertexId> map(source.parent_vertex.size());
    for (VertexId b = 0; b < map.size(); ++b) {
        const auto label_vertex = static_cast<VertexId>(L[source.parent_vertex[b]] - 1);
        if (label_vertex >= local.size() || local[label_vertex] == ~VertexId{0})
            throw InvalidInput("boundary map target lacks the vertex for a label");
        map[b] = local[label_vertex];
    }
    return SimplicialMap(source.complex, target.complex, std::move(map));
}

Labeling restrict_labeling(const Labeling& L, const BoundaryComplex& boundary) {
    std::vector<Label> labels(boundary.parent_vertex.size());
    for (std::size_t b = 0; b < labels.size(); ++b) labels[b] = L[boundary.parent_vertex[b]];
    return Labeling(boundary.complex, std::move(labels));
}

} // namespace sperner
