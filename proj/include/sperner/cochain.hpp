#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sperner/complex.hpp"
#include "sperner/sperner.hpp"

namespace sperner {

/// An F2 cochain: a formal sum of k-simplices, stored as the sorted set of
/// face indices with coefficient 1.
class Cochain {
public:
    /// `support` must list distinct k-faces of the complex.
    Cochain(ComplexPtr complex, int degree, std::vector<FaceIndex> support);

    static Cochain zero(ComplexPtr complex, int degree);
    /// Reduces a multiset of faces mod 2.
    static Cochain from_terms(ComplexPtr complex, int degree, std::vector<FaceIndex> terms);
    static Cochain from_simplices(ComplexPtr complex, std::span<const Simplex> simplices);

    const ComplexPtr& complex() const noexcept { return complex_; }
    int degree() const noexcept { return degree_; }
    std::span<const FaceIndex> support() const noexcept { return support_; }
    std::vector<Simplex> simplices() const;

    bool is_zero() const noexcept { return support_.empty(); }
    bool contains(FaceIndex f) const;
    /// Coefficient sum mod 2.
    int parity() const noexcept { return static_cast<int>(support_.size() % 2); }

    /// Vanishes on every simplex of A.
    bool is_relative(const Subcomplex& A) const;

    Cochain operator+(const Cochain& other) const;
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.complex_ == b.complex_ && a.degree_ == b.degree_ && a.support_ == b.support_;
    }

private:
    ComplexPtr complex_;
    int degree_;
    std::vector<FaceIndex> support_;
};

/// ∂*: each k-simplex goes to the sum of the (k+1)-simplices having it as a facet.
Cochain coboundary(const Cochain& c);

/// ψ*: each target k-simplex goes to the sum of source k-simplices mapped onto it.
Cochain pullback(const SimplicialMap& map, const Cochain& c);

struct CommutationReport {
    Cochain pullback_of_coboundary; ///< ψ*(∂* c)
    Cochain coboundary_of_pullback; ///< ∂*(ψ* c)
    bool equal = false;
};

CommutationReport verify_commutation(const SimplicialMap& map, const Cochain& c);

/// Both sides of σ̂_1+…+σ̂_h+∂*τ_1+…+∂*τ_g = ρ_1+…+ρ_e for a labeling map,
/// built from pullbacks and coboundaries before cancellation.
struct ChainIdentityReport {
    std::vector<FaceIndex> lhs_terms;  ///< σ̂'s then both cofacets of each τ, before cancellation
    std::vector<FaceIndex> sigma_hats; ///< σ̂_1..σ̂_h
    Cochain lhs;                       ///< ∂*(φ*(Δ_{n+1}))
    Cochain rhs;                       ///< φ*(∂*(Δ_{n+1})) = φ*(Δ)
    std::size_t e = 0, h = 0, g = 0;
    std::size_t cancellations = 0;     ///< top simplices occurring twice among lhs_terms
    std::size_t census_f = 0;

    bool sums_agree = false;           ///< lhs == rhs as F2 cochains
    bool cancellations_match_f = false;
    bool integer_identity = false;     ///< h + 2g == e + 2·cancellations == e + 2f
    bool sigma_hats_distinct = false;
    bool census_agrees = false;        ///< e, h, g equal the census values

    bool ok() const {
        return sums_agree && cancellations_match_f && integer_identity && sigma_hats_distinct && census_agrees;
    }
};

/// Requires a Sperner-valid labeling of a full-dimensional complex with n >= 1.
ChainIdentityReport chain_identity_report(const Labeling& L);

/// Parity of the number of source top simplices mapped onto `target_top`.
/// Source and target must be closed pseudomanifolds of the same dimension.
int degree_mod2(const SimplicialMap& map, FaceIndex target_top);
/// Same, checking the count parity agrees over every target top simplex.
int degree_mod2(const SimplicialMap& map);

struct CohomologyOptions {
    /// Reduced cohomology: degree 0 of an absolute group drops the constant class.
    bool reduced = false;
    std::size_t max_simplices_per_degree = 200'000;
    std::size_t max_matrix_bytes = std::size_t{1} << 30;
};

/// dim over F2 of H^k(K, A), K = A.parent(). Use Subcomplex::empty for absolute cohomology.
std::size_t cohomology_rank(const Subcomplex& A, int k, const CohomologyOptions& options = {});

/// Whether the relative cochain c lies in ∂*(C^{k-1}(K, A)).
bool is_relative_coboundary(const Cochain& c, const Subcomplex& A, const CohomologyOptions& options = {});

/// Restricts the coboundary to A: the cocycle test for a cochain supported on A.
Cochain coboundary_in(const Cochain& c, const Subcomplex& A);

struct ConnectingWitness {
    Cochain extension;             ///< zero-extension of α to K
    Cochain witness;               ///< ∂*(extension), a relative cocycle
    Cochain alternative_extension; ///< α plus a seeded random cochain off A
    Cochain alternative_witness;
    bool witness_is_relative_cocycle = false;
    bool same_class = false;       ///< witness - alternative_witness is a relative coboundary
};

/// The connecting map on cochains. α is given on the parent complex and must
/// be supported on A and be a cocycle of A (InvalidInput otherwise).
ConnectingWitness connecting_witness(const Cochain& alpha, const Subcomplex& A, std::uint64_t seed = 0x5eed,
                                     const CohomologyOptions& options = {});

/// Moves a cochain on a boundary complex to the faces of its parent.
Cochain lift_to_parent(const BoundaryComplex& boundary, const Cochain& c, ComplexPtr parent);

} // namespace sperner
