#include "sperner/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > ~std::uint64_t{0}) throw ResourceCapExceeded(std::string(what) + " overflows 64 bits");
    return static_cast<std::uint64_t>(p);
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i), "factorial");
    return f;
}

} // namespace

// ---------------------------------------------------------------------------
// Barycentric

ComplexPtr barycentric_subdivide(const EmbeddedComplex& K, const ComplexOptions& options) {
    const int d = K.dim();
    if (d < 0) throw InvalidInput("cannot subdivide an empty complex");
    const std::uint64_t count = checked_mul(K.top_simplices().size(), factorial(d + 1), "simplex count");
    const std::size_t cap = options.max_top_simplices ? options.max_top_simplices : default_simplex_cap();
    if (count > cap)
        throw ResourceCapExceeded("barycentric subdivision would have " + std::to_string(count) +
                                  " top simplices, cap is " + std::to_string(cap));

    // New vertex ids: faces of K by dimension, then index.
    std::vector<VertexId> offset(d + 2, 0);
    for (int k = 0; k <= d; ++k) offset[k + 1] = offset[k] + static_cast<VertexId>(K.face_count(k));

    std::vector<std::pair<VertexId, ExactPoint>> verts;
    verts.reserve(offset[d + 1]);
    for (int k = 0; k <= d; ++k)
        for (FaceIndex f = 0; f < K.face_count(k); ++f) {
            const Simplex& s = K.face(k, f);
            ExactPoint p(K.ambient_dim() + 1, Rational(0));
            for (VertexId v : s)
                for (std::size_t c = 0; c < p.size(); ++c) p[c] += K.point(v)[c];
            for (auto& c : p) c /= static_cast<long>(s.size());
            verts.emplace_back(offset[k] + f, std::move(p));
        }

    std::vector<std::vector<VertexId>> tops;
    tops.reserve(count);
    std::vector<int> order(d + 1);
    for (const Simplex& top : K.top_simplices()) {
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<VertexId> flag;
            flag.reserve(d + 1);
            std::vector<VertexId> prefix;
            for (int k = 0; k <= d; ++k) {
                prefix.push_back(top[order[k]]);
                flag.push_back(offset[k] + K.index_of(Simplex(std::span<const VertexId>(prefix))));
            }
            tops.push_back(std::move(flag));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return build_complex(K.ambient_dim(), std::move(verts), std::move(tops), options);
}

// ---------------------------------------------------------------------------
// Edgewise

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int64_t c : p) {
        h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

EdgewiseGrid::EdgewiseGrid(int n, std::int64_t m) : n_(n), m_(m) {
    if (n < 0 || n > kMaxDim) throw InvalidInput("grid dimension must lie in 0.." + std::to_string(kMaxDim));
    if (m < 1) throw InvalidInput("edgewise parameter m must be >= 1");
}

std::uint64_t EdgewiseGrid::top_count() const {
    std::uint64_t c = 1;
    for (int i = 0; i < n_; ++i) c = checked_mul(c, static_cast<std::uint64_t>(m_), "m^n");
    return c;
}

std::uint64_t EdgewiseGrid::vertex_count() const {
    unsigned __int128 c = 1;
    for (int i = 1; i <= n_; ++i) {
        c = c * static_cast<unsigned __int128>(m_ + i) / static_cast<unsigned>(i);
        if (c > ~std::uint64_t{0}) throw ResourceCapExceeded("vertex count overflows 64 bits");
    }
    return static_cast<std::uint64_t>(c);
}

double EdgewiseGrid::scheme_constant(int n) { return std::sqrt(static_cast<double>((n + 1) / 2)); }

double EdgewiseGrid::diameter_bound(int n, std::int64_t m) {
    if (n == 0) return 0.0;
    return std::sqrt(2.0) * scheme_constant(n) / static_cast<double>(m);
}

bool EdgewiseGrid::in_region(std::span<const std::int64_t> x, int level) const {
    if (level == 0) return true;
    if (x[0] > m_ || x[level - 1] < 0) return false;
    for (int i = 0; i + 1 < level; ++i)
        if (x[i] < x[i + 1]) return false;
    return true;
}

bool EdgewiseGrid::is_valid(const KuhnCell& cell) const {
    const int k = cell.level();
    if (k > n_ || static_cast<int>(cell.perm.size()) != k) return false;
    std::vector<char> seen(k, 0);
    for (int p : cell.perm) {
        if (p < 0 || p >= k || seen[p]) return false;
        seen[p] = 1;
    }
    std::vector<std::int64_t> y = cell.base;
    if (!in_region(y, k)) return false;
    for (int j = 0; j < k; ++j) {
        ++y[cell.perm[j]];
        if (!in_region(y, k)) return false;
    }
    return true;
}

LatticePoint EdgewiseGrid::from_partial_sums(std::span<const std::int64_t> x) const {
    LatticePoint a(n_ + 1, 0);
    if (n_ == 0) {
        a[0] = m_;
        return a;
    }
    a[0] = m_ - x[0];
    for (int i = 1; i < n_; ++i) a[i] = x[i - 1] - x[i];
    a[n_] = x[n_ - 1];
    return a;
}

std::vector<std::int64_t> EdgewiseGrid::to_partial_sums(const LatticePoint& a) const {
    std::vector<std::int64_t> x(n_, 0);
    std::int64_t tail = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        tail += a[i + 1];
        x[i] = tail;
    }
    return x;
}

std::vector<LatticePoint> EdgewiseGrid::vertices(const KuhnCell& cell) const {
    const int k = cell.level();
    std::vector<std::int64_t> y(n_, 0);
    std::copy(cell.base.begin(), cell.base.end(), y.begin());
    std::vector<LatticePoint> out;
    out.reserve(k + 1);
    out.push_back(from_partial_sums(y));
    for (int j = 0; j < k; ++j) {
        ++y[cell.perm[j]];
        out.push_back(from_partial_sums(y));
    }
    return out;
}

std::optional<KuhnCell> EdgewiseGrid::neighbor(const KuhnCell& cell, int drop) const {
    const int k = cell.level();
    if (k == 0 || drop < 0 || drop > k) return std::nullopt;
    KuhnCell next = cell;
    if (drop == 0) {
        ++next.base[cell.perm[0]];
        std::rotate(next.perm.begin(), next.perm.begin() + 1, next.perm.end());
    } else if (drop == k) {
        --next.base[cell.perm[k - 1]];
        std::rotate(next.perm.begin(), next.perm.end() - 1, next.perm.end());
    } else {
        std::swap(next.perm[drop - 1], next.perm[drop]);
    }
    if (!is_valid(next)) return std::nullopt;
    return next;
}

std::vector<KuhnCell> EdgewiseGrid::star(const LatticePoint& vertex) const {
    if (!is_lattice_point(vertex)) throw InvalidInput("not a lattice point of the grid");
    const auto x = to_partial_sums(vertex);
    std::vector<KuhnCell> out;
    if (n_ == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int j = 0; j <= n_; ++j) {
            KuhnCell cell{x, perm};
            for (int i = 0; i < j; ++i) --cell.base[perm[i]];
            if (is_valid(cell) && std::find(out.begin(), out.end(), cell) == out.end()) out.push_back(std::move(cell));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end(), [](const KuhnCell& a, const KuhnCell& b) {
        return std::tie(a.base, a.perm) < std::tie(b.base, b.perm);
    });
    return out;
}

std::vector<KuhnCell> EdgewiseGrid::cofacets(std::span<const LatticePoint> facet) const {
    if (static_cast<int>(facet.size()) != n_ || n_ == 0) throw InvalidInput("cofacets() expects n lattice points");
    std::vector<KuhnCell> out;
    for (KuhnCell& cell : star(facet[0])) {
        const auto verts = vertices(cell);
        const bool all = std::all_of(facet.begin(), facet.end(), [&](const LatticePoint& p) {
            return std::find(verts.begin(), verts.end(), p) != verts.end();
        });
        if (all) out.push_back(std::move(cell));
    }
    if (out.empty() || out.size() > 2) throw InvalidInput("points are not a facet of the edgewise grid");
    return out;
}

std::vector<std::vector<std::int64_t>> EdgewiseGrid::bases() const {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> b(n_, 0);
    // Monotone non-increasing sequences with m-1 >= b_0 and b_{n-1} >= 0.
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t upper) {
        if (i == n_) {
            out.push_back(b);
            return;
        }
        for (std::int64_t v = 0; v <= upper; ++v) {
            b[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, m_ - 1);
    return out;
}

std::vector<std::vector<int>> EdgewiseGrid::compatible_perms(const std::vector<std::int64_t>& base) const {
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (is_valid(KuhnCell{base, perm})) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void EdgewiseGrid::for_each_cell(const std::function<void(const KuhnCell&)>& fn) const {
    for (const auto& b : bases())
        for (auto& p : compatible_perms(b)) fn(KuhnCell{b, std::move(p)});
}

ExactPoint EdgewiseGrid::exact_point(const LatticePoint& a) const {
    ExactPoint p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = Rational(a[i], m_);
    return p;
}

RealPoint EdgewiseGrid::real_point(const LatticePoint& a) const {
    RealPoint p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = static_cast<double>(a[i]) / static_cast<double>(m_);
    return p;
}

bool EdgewiseGrid::is_lattice_point(const LatticePoint& a) const {
    if (static_cast<int>(a.size()) != n_ + 1) return false;
    std::int64_t sum = 0;
    for (std::int64_t c : a) {
        if (c < 0) return false;
        sum += c;
    }
    return sum == m_;
}

std::vector<LatticePoint> EdgewiseGrid::lattice_points() const {
    std::vector<LatticePoint> out;
    LatticePoint a(n_ + 1, 0);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
        if (i == n_) {
            a[i] = left;
            out.push_back(a);
            return;
        }
        for (std::int64_t v = left; v >= 0; --v) {
            a[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, m_);
    return out;
}

double EdgewiseGrid::cell_diameter(const KuhnCell& cell) const {
    const auto verts = vertices(cell);
    std::int64_t best = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            std::int64_t sq = 0;
            for (std::size_t c = 0; c < verts[i].size(); ++c) {
                const std::int64_t d = verts[i][c] - verts[j][c];
                sq += d * d;
            }
            best = std::max(best, sq);
        }
    return std::sqrt(static_cast<double>(best)) / static_cast<double>(m_);
}

ComplexPtr edgewise_subdivide(int n, std::int64_t m, const ComplexOptions& options) {
    const EdgewiseGrid grid(n, m);
    const std::size_t cap = options.max_top_simplices ? options.max_top_simplices : default_simplex_cap();
    if (grid.top_count() > cap)
        throw ResourceCapExceeded("edgewise subdivision would have " + std::to_string(grid.top_count()) +
                                  " top simplices, cap is " + std::to_string(cap));

    const auto points = grid.lattice_points();
    std::unordered_map<LatticePoint, VertexId, LatticePointHash> ids;
    ids.reserve(points.size());
    std::vector<std::pair<VertexId, ExactPoint>> verts;
    verts.reserve(points.size());
    for (const auto& a : points) {
        const auto id = static_cast<VertexId>(verts.size());
        ids.emplace(a, id);
        verts.emplace_back(id, grid.exact_point(a));
    }
    std::vector<std::vector<VertexId>> tops;
    tops.reserve(grid.top_count());
    grid.for_each_cell([&](const KuhnCell& cell) {
        std::vector<VertexId> t;
        for (const auto& a : grid.vertices(cell)) t.push_back(ids.at(a));
        tops.push_back(std::move(t));
    });
    return build_complex(n, std::move(verts), std::move(tops), options);
}

// ---------------------------------------------------------------------------
// Sequence

Scheme parse_scheme(std::string_view name) {
    if (name == "barycentric") return Scheme::Barycentric;
    if (name == "edgewise") return Scheme::Edgewise;
    throw InvalidInput("unknown scheme '" + std::string(name) + "'");
}

std::string_view scheme_name(Scheme s) { return s == Scheme::Barycentric ? "barycentric" : "edgewise"; }

SubdivisionLevel subdivision_sequence(Scheme scheme, int n, int k, const SequenceOptions& options) {
    if (k < 0) throw InvalidInput("depth must be >= 0");
    const std::size_t cap = options.max_top_simplices ? options.max_top_simplices : default_simplex_cap();
    ComplexOptions copts;
    copts.max_top_simplices = cap;
    copts.check_coverage = options.check_coverage;

    SubdivisionLevel out;
    out.scheme = scheme;
    out.level = k;
    if (scheme == Scheme::Barycentric) {
        std::uint64_t count = 1;
        const std::uint64_t growth = factorial(n + 1);
        for (int i = 0; i < k; ++i) {
            count = checked_mul(count, growth, "simplex count");
            if (count > cap)
                throw ResourceCapExceeded("barycentric depth " + std::to_string(k) + " exceeds the simplex cap " +
                                          std::to_string(cap));
        }
        ComplexPtr K = standard_simplex_complex(n);
        for (int i = 0; i < k; ++i) K = barycentric_subdivide(*K, copts);
        out.top_count = K->top_simplices().size();
        out.max_diameter = K->max_diameter();
        out.complex = std::move(K);
        return out;
    }

    if (options.m0 < 1) throw InvalidInput("m0 must be >= 1");
    if (k >= 62 || options.m0 > (std::int64_t{1} << (62 - k))) throw ResourceCapExceeded("edgewise parameter overflows");
    out.m = options.m0 << k;
    out.grid.emplace(n, out.m);
    out.top_count = out.grid->top_count();
    out.max_diameter = out.grid->diameter_bound();
    if (options.materialize) {
        out.complex = edgewise_subdivide(n, out.m, copts);
        out.max_diameter = out.complex->max_diameter();
    }
    return out;
}

} // namespace sperner
