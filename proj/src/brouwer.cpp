#include "sperner/brouwer.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <string>

#include "sperner/errors.hpp"
#include "sperner/parallel.hpp"
#include "sperner/path_follow.hpp"

namespace sperner {

namespace {

double max_abs_diff(const RealPoint& a, const RealPoint& b) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
    return best;
}

RealPoint barycenter_of(const std::vector<RealPoint>& pts) {
    RealPoint c(pts.front().size(), 0.0);
    for (const auto& p : pts)
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
    for (double& x : c) x /= static_cast<double>(pts.size());
    return c;
}

struct FixedPointFound {
    RealPoint point;
};

} // namespace

// ---------------------------------------------------------------------------
// Map evaluation and labeling

RealPoint evaluate(const MapOnSimplex& f, const RealPoint& x, const Tolerances& tol) {
    RealPoint y = f.eval(x);
    if (y.size() != x.size())
        throw MapEvaluationError("map '" + f.name + "' returned " + std::to_string(y.size()) + " coordinates, expected " +
                                 std::to_string(x.size()));
    if (!is_valid_point(y, tol)) throw MapEvaluationError("map '" + f.name + "' returned a point outside the simplex");
    double sum = 0.0;
    for (double& c : y) {
        c = std::max(c, 0.0);
        sum += c;
    }
    for (double& c : y) c /= sum;
    return y;
}

LabelResult label_from_map(const MapOnSimplex& f, const RealPoint& w, double margin, const Tolerances& tol) {
    if (!is_valid_point(w, tol)) throw InvalidInput("label_from_map: w is not a point of the simplex");
    LabelResult r{std::nullopt, evaluate(f, w, tol)};
    for (std::size_t j = 0; j < w.size(); ++j)
        if (r.image[j] < w[j] - margin) {
            r.label = static_cast<Label>(j + 1);
            break;
        }
    return r;
}

std::optional<Label> label_from_exact_map(const ExactMap& f, const ExactPoint& w) {
    if (!is_valid_point(w)) throw InvalidInput("label_from_exact_map: w is not a point of the simplex");
    const ExactPoint y = f(w);
    if (y.size() != w.size() || !is_valid_point(y)) throw MapEvaluationError("exact map returned a point outside the simplex");
    for (std::size_t j = 0; j < w.size(); ++j)
        if (y[j] < w[j]) return static_cast<Label>(j + 1);
    return std::nullopt;
}

RealPoint ray_retraction(const MapOnSimplex& f, const RealPoint& x, double ray_tol, const Tolerances& tol) {
    if (!is_valid_point(x, tol)) throw InvalidInput("ray_retraction: x is not a point of the simplex");
    const RealPoint y = evaluate(f, x, tol);
    RealPoint d(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) d[j] = x[j] - y[j];
    if (max_abs_diff(x, y) <= ray_tol) throw RayUndefined("ray_retraction: f(x) = x, the ray is undefined");

    double t_star = std::numeric_limits<double>::infinity();
    std::size_t exit = x.size();
    for (std::size_t j = 0; j < x.size(); ++j)
        if (d[j] < 0.0) {
            const double t = std::max(x[j], 0.0) / -d[j];
            if (t < t_star) {
                t_star = t;
                exit = j;
            }
        }
    if (exit == x.size()) throw MapEvaluationError("ray_retraction: x - f(x) has no negative coordinate");

    RealPoint p(x.size());
    double sum = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        p[j] = j == exit ? 0.0 : std::max(x[j] + t_star * d[j], 0.0);
        sum += p[j];
    }
    for (double& c : p) c /= sum;
    return p;
}

PointMap make_ray_retraction(MapOnSimplex f, double ray_tol, Tolerances tol) {
    return [f = std::move(f), ray_tol, tol](const RealPoint& x) { return ray_retraction(f, x, ray_tol, tol); };
}

// ---------------------------------------------------------------------------
// Star labeling

std::vector<RealPoint> open_star_samples(const EmbeddedComplex& K, VertexId w, const StarLabelingOptions& options) {
    const OpenStar star = open_star(K, w);
    std::vector<RealPoint> out;
    out.push_back(to_real(K.point(w)));
    for (int k = 1; k <= K.dim(); ++k)
        for (FaceIndex f : star.by_dim[k]) {
            std::vector<RealPoint> pts;
            for (VertexId v : K.face(k, f)) pts.push_back(to_real(K.point(v)));
            out.push_back(barycenter_of(pts));
        }
    if (K.dim() >= 1 && options.samples_per_simplex > 0) {
        std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(w) + 1)));
        std::exponential_distribution<double> expo(1.0);
        for (FaceIndex f : star.by_dim[K.dim()]) {
            const Simplex& s = K.face(K.dim(), f);
            std::vector<RealPoint> pts;
            for (VertexId v : s) pts.push_back(to_real(K.point(v)));
            for (std::size_t i = 0; i < options.samples_per_simplex; ++i) {
                std::vector<double> weight(s.size());
                double total = 0.0;
                for (double& x : weight) {
                    x = expo(rng) + 1e-9;
                    total += x;
                }
                RealPoint p(pts.front().size(), 0.0);
                for (std::size_t a = 0; a < pts.size(); ++a)
                    for (std::size_t c = 0; c < p.size(); ++c) p[c] += weight[a] / total * pts[a][c];
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

namespace {

struct VertexStarOutcome {
    Label label = 0;
    std::size_t samples = 0;
    std::size_t common_hits = 0;
};

VertexStarOutcome label_vertex_by_star(const PointMap& r, const EmbeddedComplex& K, VertexId w,
                                       const StarLabelingOptions& options) {
    const int labels = K.ambient_dim() + 1;
    std::vector<char> passes(labels, 1);
    VertexStarOutcome out;
    for (const RealPoint& p : open_star_samples(K, w, options)) {
        const RealPoint img = r(p);
        if (static_cast<int>(img.size()) != labels) throw MapEvaluationError("point map returned the wrong dimension");
        bool all = true;
        for (int j = 0; j < labels; ++j) {
            const bool positive = img[j] > options.zero_tol;
            if (!positive) passes[j] = 0;
            all = all && positive;
        }
        out.common_hits += all;
        ++out.samples;
    }
    for (int j = 0; j < labels; ++j)
        if (passes[j]) {
            out.label = j + 1;
            break;
        }
    return out;
}

StarLabelingResult collect(std::vector<VertexStarOutcome> per_vertex) {
    StarLabelingResult res;
    res.labels.resize(per_vertex.size());
    for (std::size_t v = 0; v < per_vertex.size(); ++v) {
        res.labels[v] = per_vertex[v].label;
        res.samples_evaluated += per_vertex[v].samples;
        res.common_star_hits += per_vertex[v].common_hits;
        if (per_vertex[v].label == 0) {
            ++res.failures;
            if (!res.failed_vertex) res.failed_vertex = static_cast<VertexId>(v);
        }
    }
    return res;
}

} // namespace

StarLabelingResult star_labeling(const PointMap& r, const ComplexPtr& K, const StarLabelingOptions& options) {
    if (!options.parallel) return star_labeling_serial(r, K, options);
    std::vector<VertexStarOutcome> per_vertex(K->vertex_count());
    ExceptionSlot errors;
    const auto count = static_cast<std::ptrdiff_t>(per_vertex.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t v = 0; v < count; ++v)
        errors.run([&] { per_vertex[v] = label_vertex_by_star(r, *K, static_cast<VertexId>(v), options); });
    errors.rethrow();
    return collect(std::move(per_vertex));
}

StarLabelingResult star_labeling_serial(const PointMap& r, const ComplexPtr& K, const StarLabelingOptions& options) {
    std::vector<VertexStarOutcome> per_vertex(K->vertex_count());
    for (VertexId v = 0; v < per_vertex.size(); ++v) per_vertex[v] = label_vertex_by_star(r, *K, v, options);
    return collect(std::move(per_vertex));
}

// ---------------------------------------------------------------------------
// Lattice labeling kernels

namespace {

template <bool Parallel>
std::optional<std::vector<Label>> label_points(const MapOnSimplex& f, const EdgewiseGrid& grid,
                                               std::span<const LatticePoint> points, double margin,
                                               const Tolerances& tol, std::size_t* hit) {
    std::vector<Label> labels(points.size(), 0);
    const auto count = static_cast<std::ptrdiff_t>(points.size());
    if constexpr (Parallel) {
        ExceptionSlot errors;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i)
            errors.run([&] { labels[i] = label_from_map(f, grid.real_point(points[i]), margin, tol).label.value_or(0); });
        errors.rethrow();
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i)
            labels[i] = label_from_map(f, grid.real_point(points[i]), margin, tol).label.value_or(0);
    }
    if (auto it = std::find(labels.begin(), labels.end(), 0); it != labels.end()) {
        if (hit) *hit = static_cast<std::size_t>(it - labels.begin());
        return std::nullopt;
    }
    return labels;
}

} // namespace

std::optional<std::vector<Label>> label_lattice(const MapOnSimplex& f, const EdgewiseGrid& grid,
                                                std::span<const LatticePoint> points, double margin,
                                                const Tolerances& tol, std::size_t* hit) {
    return label_points<true>(f, grid, points, margin, tol, hit);
}

std::optional<std::vector<Label>> label_lattice_serial(const MapOnSimplex& f, const EdgewiseGrid& grid,
                                                       std::span<const LatticePoint> points, double margin,
                                                       const Tolerances& tol, std::size_t* hit) {
    return label_points<false>(f, grid, points, margin, tol, hit);
}

// ---------------------------------------------------------------------------
// Solver

SearchMethod parse_search(std::string_view name) {
    if (name == "path") return SearchMethod::PathFollow;
    if (name == "brute") return SearchMethod::BruteForce;
    throw InvalidInput("unknown search method '" + std::string(name) + "'");
}

std::string_view status_name(SolveStatus s) {
    switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::FixedPointHit: return "fixed_point_hit";
    case SolveStatus::ToleranceNotMet: return "tolerance_not_met";
    }
    return "unknown";
}

namespace {

struct LevelWitness {
    std::vector<RealPoint> vertices;
    std::vector<Label> labels;
};

LevelWitness edgewise_level(const MapOnSimplex& f, const EdgewiseGrid& grid, const SolveOptions& opt,
                            std::size_t& evaluations) {
    const int n = grid.dim();
    LevelWitness w;
    if (opt.search == SearchMethod::PathFollow) {
        const LatticeLabeler labeler = [&](const LatticePoint& a) -> Label {
            const RealPoint x = grid.real_point(a);
            ++evaluations;
            const LabelResult r = label_from_map(f, x, opt.margin, opt.tolerances);
            if (r.fixed_point_hit()) throw FixedPointFound{x};
            return *r.label;
        };
        const KuhnCell cell = find_fully_labeled_pathfollow(grid, labeler);
        for (const LatticePoint& a : grid.vertices(cell)) {
            w.vertices.push_back(grid.real_point(a));
            w.labels.push_back(labeler(a));
        }
        return w;
    }

    const std::size_t cap = opt.max_top_simplices ? opt.max_top_simplices : default_simplex_cap();
    if (grid.top_count() > cap)
        throw ResourceCapExceeded("brute-force level has " + std::to_string(grid.top_count()) + " cells, cap is " +
                                  std::to_string(cap));
    const auto points = grid.lattice_points();
    std::size_t hit = 0;
    const auto labels = opt.parallel_eval
                            ? label_lattice(f, grid, points, opt.margin, opt.tolerances, &hit)
                            : label_lattice_serial(f, grid, points, opt.margin, opt.tolerances, &hit);
    evaluations += points.size();
    if (!labels) throw FixedPointFound{grid.real_point(points[hit])};
    std::unordered_map<LatticePoint, Label, LatticePointHash> lookup;
    lookup.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) lookup.emplace(points[i], (*labels)[i]);

    const std::uint32_t full = (1u << (n + 1)) - 1;
    std::optional<KuhnCell> found;
    grid.for_each_cell([&](const KuhnCell& cell) {
        if (found) return;
        std::uint32_t mask = 0;
        for (const auto& a : grid.vertices(cell)) mask |= 1u << (lookup.at(a) - 1);
        if (mask == full) found = cell;
    });
    if (!found) throw InvariantBreach("no fully labeled cell in a Sperner labeling");
    for (const LatticePoint& a : grid.vertices(*found)) {
        w.vertices.push_back(grid.real_point(a));
        w.labels.push_back(lookup.at(a));
    }
    return w;
}

LevelWitness barycentric_level(const MapOnSimplex& f, int n, int level, const SolveOptions& opt,
                               std::size_t& evaluations) {
    SequenceOptions seq;
    seq.max_top_simplices = opt.max_top_simplices;
    seq.check_coverage = false;
    const SubdivisionLevel lvl = subdivision_sequence(Scheme::Barycentric, n, level, seq);
    const auto& K = *lvl.complex;

    std::vector<Label> labels(K.vertex_count(), 0);
    const auto count = static_cast<std::ptrdiff_t>(labels.size());
    auto label_one = [&](std::ptrdiff_t v) {
        labels[v] = label_from_map(f, to_real(K.point(static_cast<VertexId>(v))), opt.margin, opt.tolerances)
                        .label.value_or(0);
    };
    if (opt.parallel_eval) {
        ExceptionSlot errors;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t v = 0; v < count; ++v) errors.run([&] { label_one(v); });
        errors.rethrow();
    } else {
        for (std::ptrdiff_t v = 0; v < count; ++v) label_one(v);
    }
    evaluations += labels.size();
    if (auto it = std::find(labels.begin(), labels.end(), 0); it != labels.end())
        throw FixedPointFound{to_real(K.point(static_cast<VertexId>(it - labels.begin())))};

    const Labeling L(lvl.complex, labels);
    const FaceIndex top = opt.search == SearchMethod::PathFollow ? find_fully_labeled_pathfollow(L)
                                                                 : find_fully_labeled_bruteforce(L).front();
    LevelWitness w;
    for (VertexId v : K.face(n, top)) {
        w.vertices.push_back(to_real(K.point(v)));
        w.labels.push_back(L[v]);
    }
    return w;
}

} // namespace

ApproxFixedPoint solve(const MapOnSimplex& f, const SolveOptions& opt) {
    if (!(opt.tol > 0.0)) throw InvalidInput("solve: tolerance must be positive");
    if (opt.max_level < 0) throw InvalidInput("solve: max_level must be >= 0");
    if (opt.m0 < 1) throw InvalidInput("solve: m0 must be >= 1");
    if (f.dim < 0 || f.dim > kMaxDim || !f.eval) throw InvalidInput("solve: bad map");
    const int n = f.dim;

    ApproxFixedPoint best;
    best.residual = std::numeric_limits<double>::infinity();
    std::size_t evaluations = 0;

    for (int level = 0; level <= opt.max_level; ++level) {
        std::int64_t m = 1;
        if (opt.scheme == Scheme::Edgewise) {
            if (level >= 62 || opt.m0 > (std::int64_t{1} << (62 - level))) break;
            m = opt.m0 << level;
        }
        LevelWitness w;
        try {
            w = opt.scheme == Scheme::Edgewise ? edgewise_level(f, EdgewiseGrid(n, m), opt, evaluations)
                                               : barycentric_level(f, n, level, opt, evaluations);
        } catch (const FixedPointFound& hit) {
            ApproxFixedPoint out;
            out.point = hit.point;
            out.residual = max_abs_diff(evaluate(f, hit.point, opt.tolerances), hit.point);
            out.status = SolveStatus::FixedPointHit;
            out.level = level;
            out.m = m;
            out.best_residuals = best.best_residuals;
            out.best_residuals.push_back(std::min(best.residual, out.residual));
            out.evaluations = evaluations + 1;
            return out;
        } catch (const ResourceCapExceeded&) {
            if (level == 0) throw;
            break;
        }

        const RealPoint x = barycenter_of(w.vertices);
        const double residual = max_abs_diff(evaluate(f, x, opt.tolerances), x);
        ++evaluations;
        if (residual < best.residual) {
            best.point = x;
            best.residual = residual;
            best.level = level;
            best.m = m;
            best.witness_diameter = simplex_diameter(std::span<const RealPoint>(w.vertices));
            best.witness_vertices = std::move(w.vertices);
            best.witness_labels = std::move(w.labels);
        }
        best.best_residuals.push_back(best.residual);
        if (best.residual <= opt.tol) {
            best.status = SolveStatus::Converged;
            break;
        }
    }
    best.evaluations = evaluations;
    if (best.best_residuals.empty()) throw ResourceCapExceeded("solve: no subdivision level fits the resource cap");
    return best;
}

} // namespace sperner
