#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sperner/complex.hpp"

namespace sperner {

/// One vertex per face of K at its exact barycenter; top simplices are the
/// complete flags of faces of K.
ComplexPtr barycentric_subdivide(const EmbeddedComplex& K, const ComplexOptions& options = {});

/// Barycentric numerators a_1..a_{n+1} of a lattice point a/m, summing to m.
using LatticePoint = std::vector<std::int64_t>;

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const noexcept;
};

/// A Kuhn (Freudenthal) simplex in partial-sum coordinates.
///
/// With x_i = a_{i+2} + ... + a_{n+1} the standard simplex scaled by m becomes
/// the order region m >= x_1 >= ... >= x_n >= 0. A cell is a base lattice
/// point b plus a permutation p; its vertices are b, b + e_{p1},
/// b + e_{p1} + e_{p2}, ..., b + (1,...,1). The cell lives at level k =
/// base.size(): a level-k cell triangulates the face conv(v_1..v_{k+1}), all
/// trailing partial sums being zero.
struct KuhnCell {
    std::vector<std::int64_t> base;
    std::vector<int> perm;

    int level() const noexcept { return static_cast<int>(base.size()); }
    friend bool operator==(const KuhnCell&, const KuhnCell&) = default;
};

/// Uniform edgewise subdivision of the standard n-simplex into m^n Kuhn
/// simplices, answered on demand. Vertices are the lattice points a/m.
///
/// Every top simplex has diameter at most sqrt(2 * ceil(n/2)) / m, so the
/// scheme constant is c_n = sqrt(ceil(n/2)) (1 for n <= 2, sqrt(2) for n = 3,4).
class EdgewiseGrid {
public:
    EdgewiseGrid(int n, std::int64_t m);

    int dim() const noexcept { return n_; }
    std::int64_t m() const noexcept { return m_; }

    /// m^n; throws ResourceCapExceeded on 64-bit overflow.
    std::uint64_t top_count() const;
    /// C(m+n, n); throws ResourceCapExceeded on 64-bit overflow.
    std::uint64_t vertex_count() const;

    static double scheme_constant(int n);
    static double diameter_bound(int n, std::int64_t m);
    double diameter_bound() const { return diameter_bound(n_, m_); }

    /// Cell inside the order region of its own level.
    bool is_valid(const KuhnCell& cell) const;

    /// Lattice points of the cell's level()+1 vertices, in walk order.
    std::vector<LatticePoint> vertices(const KuhnCell& cell) const;

    /// Same-level cell sharing every vertex except vertex `drop`, if it exists.
    std::optional<KuhnCell> neighbor(const KuhnCell& cell, int drop) const;

    /// Top cells containing the lattice point.
    std::vector<KuhnCell> star(const LatticePoint& vertex) const;

    /// Top cells having the given n lattice points as a facet (1 or 2 cells).
    /// Throws InvalidInput if the points are not a facet of the triangulation.
    std::vector<KuhnCell> cofacets(std::span<const LatticePoint> facet) const;

    /// All top cells, in canonical order (bases lexicographic, then permutations lexicographic).
    void for_each_cell(const std::function<void(const KuhnCell&)>& fn) const;
    /// Monotone bases; each pairs with the permutations from compatible_perms().
    std::vector<std::vector<std::int64_t>> bases() const;
    std::vector<std::vector<int>> compatible_perms(const std::vector<std::int64_t>& base) const;

    ExactPoint exact_point(const LatticePoint& a) const;
    RealPoint real_point(const LatticePoint& a) const;
    bool is_lattice_point(const LatticePoint& a) const;

    /// Lattice points in lexicographic order of (a_1, ..., a_{n+1}) descending a_1 first.
    std::vector<LatticePoint> lattice_points() const;

    double cell_diameter(const KuhnCell& cell) const;

    LatticePoint from_partial_sums(std::span<const std::int64_t> x) const;
    std::vector<std::int64_t> to_partial_sums(const LatticePoint& a) const;

private:
    bool in_region(std::span<const std::int64_t> x, int level) const;

    int n_;
    std::int64_t m_;
};

/// The grid materialized as an EmbeddedComplex; vertex ids follow lattice_points().
ComplexPtr edgewise_subdivide(int n, std::int64_t m, const ComplexOptions& options = {});

enum class Scheme { Barycentric, Edgewise };

Scheme parse_scheme(std::string_view name);
std::string_view scheme_name(Scheme s);

struct SequenceOptions {
    std::int64_t m0 = 1;           ///< edgewise: m = m0 * 2^k
    bool materialize = true;       ///< edgewise: build the explicit complex
    std::size_t max_top_simplices = 0; ///< 0 means default_simplex_cap()
    bool check_coverage = true;
};

/// Level k of the refinement sequence Δ'_0 = Δ, Δ'_1, ...
struct SubdivisionLevel {
    Scheme scheme = Scheme::Barycentric;
    int level = 0;
    std::int64_t m = 1;           ///< edgewise parameter (1 for barycentric)
    std::uint64_t top_count = 0;
    double max_diameter = 0.0;    ///< exact for explicit complexes, the scheme bound otherwise
    ComplexPtr complex;           ///< null when only the implicit grid exists
    std::optional<EdgewiseGrid> grid;
};

SubdivisionLevel subdivision_sequence(Scheme scheme, int n, int k, const SequenceOptions& options = {});

} // namespace sperner
