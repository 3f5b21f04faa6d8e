#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sperner/complex.hpp"
#include "sperner/sperner.hpp"
#include "sperner/subdivision.hpp"

namespace sperner {

/// A continuous self-map of the standard n-simplex supplied by the caller.
/// eval must be safe to call concurrently unless SolveOptions::parallel_eval is off.
struct MapOnSimplex {
    int dim = 0;
    std::string name;
    std::function<RealPoint(const RealPoint&)> eval;
};

/// Thrown when the ray from f(x) through x is undefined because f(x) = x.
class RayUndefined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluates f and checks the result is a point of Δ: coordinates >= -εΣ and
/// sum within εΣ of 1. Accepted points are clamped at zero and renormalized;
/// anything else raises MapEvaluationError.
RealPoint evaluate(const MapOnSimplex& f, const RealPoint& x, const Tolerances& tol = {});

struct LabelResult {
    std::optional<Label> label; ///< empty: fixed_point_hit
    RealPoint image;            ///< f(w)

    bool fixed_point_hit() const noexcept { return !label.has_value(); }
};

/// Smallest j with f(w)^j < w^j - margin. No such j means f(w) = w up to the margin.
LabelResult label_from_map(const MapOnSimplex& f, const RealPoint& w, double margin = 1e-15,
                           const Tolerances& tol = {});

/// Exact variant for maps with rational output; the margin is zero.
using ExactMap = std::function<ExactPoint(const ExactPoint&)>;
std::optional<Label> label_from_exact_map(const ExactMap& f, const ExactPoint& w);

/// Exit point on ∂Δ of the ray from f(x) through x: x + t*(x - f(x)) with
/// t* = min over {j : d^j < 0} of x^j / (-d^j). Throws RayUndefined when
/// |f(x) - x|∞ <= ray_tol and MapEvaluationError when no coordinate of
/// x - f(x) is negative.
RealPoint ray_retraction(const MapOnSimplex& f, const RealPoint& x, double ray_tol = 1e-12,
                         const Tolerances& tol = {});

using PointMap = std::function<RealPoint(const RealPoint&)>;

/// x ↦ ray_retraction(f, x) as a point map.
PointMap make_ray_retraction(MapOnSimplex f, double ray_tol = 1e-12, Tolerances tol = {});

struct StarLabelingOptions {
    std::size_t samples_per_simplex = 16; ///< random interior points per maximal star simplex
    std::uint64_t seed = 0x57a12;
    double zero_tol = Tolerances{}.zero;
    bool parallel = true; ///< r must then be safe to call concurrently
};

/// Outcome of labeling each vertex w by the smallest j with r(st(w)) ⊂ st(v_j),
/// tested on sample points of the open star: w itself, the barycenter of every
/// simplex containing w, and random interior points of each maximal one.
struct StarLabelingResult {
    std::vector<Label> labels;            ///< 0 where no label passed
    std::optional<VertexId> failed_vertex; ///< first vertex without a label
    std::size_t failures = 0;
    std::size_t samples_evaluated = 0;
    /// Sampled points whose image passed every star predicate. The sets
    /// st(v_j) have empty common intersection, so this is always 0.
    std::size_t common_star_hits = 0;

    bool total() const noexcept { return failures == 0; }
};

StarLabelingResult star_labeling(const PointMap& r, const ComplexPtr& K, const StarLabelingOptions& options = {});
/// Single-threaded reference.
StarLabelingResult star_labeling_serial(const PointMap& r, const ComplexPtr& K, const StarLabelingOptions& options = {});

/// Sample points used for vertex w (deterministic given the options seed).
std::vector<RealPoint> open_star_samples(const EmbeddedComplex& K, VertexId w, const StarLabelingOptions& options);

enum class SearchMethod { PathFollow, BruteForce };

SearchMethod parse_search(std::string_view name);

struct SolveOptions {
    double tol = 1e-6;
    Scheme scheme = Scheme::Edgewise;
    SearchMethod search = SearchMethod::PathFollow;
    int max_level = 30;
    std::int64_t m0 = 1;
    double margin = 1e-15;
    Tolerances tolerances{};
    bool parallel_eval = true;
    std::size_t max_top_simplices = 0; ///< explicit levels; 0 means default_simplex_cap()
};

enum class SolveStatus { Converged, FixedPointHit, ToleranceNotMet };

std::string_view status_name(SolveStatus s);

struct ApproxFixedPoint {
    RealPoint point;
    double residual = 0.0; ///< |f(point) - point|∞, recomputed from eval
    SolveStatus status = SolveStatus::ToleranceNotMet;
    int level = 0;
    std::int64_t m = 1; ///< edgewise parameter at `level`
    double witness_diameter = 0.0;
    std::vector<RealPoint> witness_vertices; ///< fully labeled simplex (empty on a fixed-point hit)
    std::vector<Label> witness_labels;
    std::vector<double> best_residuals;      ///< best-so-far residual after each level
    std::size_t evaluations = 0;

    bool converged() const noexcept { return status != SolveStatus::ToleranceNotMet; }
};

/// Refines level by level (edgewise m = m0·2^level by default), labels vertices
/// with label_from_map, finds a fully labeled simplex, and takes its barycenter
/// as the candidate. Stops once the best residual is <= tol, on a fixed-point
/// hit, or after max_level.
ApproxFixedPoint solve(const MapOnSimplex& f, const SolveOptions& options);

/// Labels every lattice point of the grid from the map (OpenMP over points).
/// Returns an empty optional as soon as some point is a fixed-point hit, with
/// that point's index written to *hit.
std::optional<std::vector<Label>> label_lattice(const MapOnSimplex& f, const EdgewiseGrid& grid,
                                                std::span<const LatticePoint> points, double margin,
                                                const Tolerances& tol, std::size_t* hit);
std::optional<std::vector<Label>> label_lattice_serial(const MapOnSimplex& f, const EdgewiseGrid& grid,
                                                       std::span<const LatticePoint> points, double margin,
                                                       const Tolerances& tol, std::size_t* hit);

} // namespace sperner
