#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sperner/complex.hpp"

namespace sperner {

/// A label in 1..n+1 for every vertex of a complex in the standard n-simplex
/// (n is the ambient dimension, so boundary complexes are labeled by the
/// same alphabet as the full subdivision).
class Labeling {
public:
    /// Throws InvalidLabeling when a label is missing or out of range.
    Labeling(ComplexPtr complex, std::vector<Label> labels);

    const ComplexPtr& complex() const noexcept { return complex_; }
    std::span<const Label> labels() const noexcept { return labels_; }
    Label operator[](VertexId v) const { return labels_.at(v); }
    int label_count() const noexcept { return complex_->ambient_dim() + 1; }

private:
    ComplexPtr complex_;
    std::vector<Label> labels_;
};

struct SpernerViolation {
    VertexId vertex;
    Label face; ///< the vertex lies on Δ_face and carries label `face`
    friend bool operator==(const SpernerViolation&, const SpernerViolation&) = default;
};

/// Empty iff every vertex on a face Δ_i avoids label i.
std::vector<SpernerViolation> validate_sperner(const Labeling& L);

/// Throws InvalidLabeling listing the first violations.
void require_sperner(const Labeling& L);

/// Bit l-1 is set iff some vertex of the face carries label l.
std::uint32_t label_mask(const Labeling& L, const Simplex& s);

enum class SimplexType {
    First,  ///< image is neither Δ nor the distinguished face
    Second, ///< fully labeled: image is Δ
    Third,  ///< image is the distinguished face (one repeated label)
};

/// Counts from the double-counting argument. Doors are (n-1)-faces whose
/// label set is {1..n+1} minus the distinguished label.
struct SpernerCensus {
    Label distinguished = 0;
    std::size_t e = 0; ///< fully labeled top simplices
    std::size_t f = 0; ///< third-type top simplices (two doors)
    std::size_t g = 0; ///< interior doors
    std::size_t h = 0; ///< boundary doors
    std::vector<FaceIndex> fully_labeled;  ///< ρ_1..ρ_e (top-simplex indices)
    std::vector<FaceIndex> third_type;
    std::vector<FaceIndex> interior_doors; ///< τ_1..τ_g ((n-1)-face indices)
    std::vector<FaceIndex> boundary_doors; ///< σ_1..σ_h
    std::vector<SimplexType> types;        ///< per top simplex
};

/// Requires a Sperner-valid labeling of a full-dimensional complex.
/// distinguished = 0 selects n+1.
SpernerCensus census(const Labeling& L, Label distinguished = 0);

/// All fully labeled top simplices, ascending.
std::vector<FaceIndex> find_fully_labeled_bruteforce(const Labeling& L);

/// φ: Δ' → Δ sending a vertex labeled i to v_i. The target is
/// standard_simplex_complex(n) unless one is supplied.
SimplicialMap to_simplicial_map(const Labeling& L, ComplexPtr target = nullptr);

/// φ_∂: ∂Δ' → ∂Δ, the restriction of the labeling map to the boundary.
SimplicialMap boundary_map(const Labeling& L, const BoundaryComplex& source, const BoundaryComplex& target);

/// Labeling of the boundary complex induced by L.
Labeling restrict_labeling(const Labeling& L, const BoundaryComplex& boundary);

} // namespace sperner
