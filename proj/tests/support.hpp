#pragma once

// Independent oracles shared by the unit tests. None of these call the
// library routine they are used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sperner/complex.hpp"
#include "sperner/rational.hpp"
#include "sperner/sperner.hpp"
#include "sperner/subdivision.hpp"

namespace oracle {

using namespace sperner;

inline ComplexPtr barycentric(int n, int k) {
    ComplexPtr K = standard_simplex_complex(n);
    for (int i = 0; i < k; ++i) K = barycentric_subdivide(*K);
    return K;
}

/// Labels from the vertex coordinates alone: a uniformly random j with w^j > 0.
inline std::vector<Label> random_valid_labels(const EmbeddedComplex& K, std::mt19937_64& rng) {
    std::vector<Label> labels(K.vertex_count());
    for (VertexId v = 0; v < labels.size(); ++v) {
        std::vector<Label> ok;
        const ExactPoint& p = K.point(v);
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p[j] > 0) ok.push_back(static_cast<Label>(j + 1));
        labels[v] = ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
    }
    return labels;
}

struct Recount {
    std::size_t e = 0, f = 0, g = 0, h = 0;
    std::vector<std::size_t> fully_labeled;
};

/// Census by direct enumeration: label sets of every top simplex, and every
/// (n-1)-face found by dropping one vertex, with interior/boundary decided from
/// the exact coordinates and the number of containing top simplices.
inline Recount recount(const EmbeddedComplex& K, const std::vector<Label>& labels, Label distinguished = 0) {
    const int n = K.dim();
    if (distinguished == 0) distinguished = n + 1;
    std::set<Label> all, door;
    for (Label l = 1; l <= n + 1; ++l) {
        all.insert(l);
        if (l != distinguished) door.insert(l);
    }
    Recount r;
    const auto tops = K.top_simplices();
    std::set<std::vector<VertexId>> seen_faces;
    for (std::size_t t = 0; t < tops.size(); ++t) {
        std::set<Label> ls;
        std::vector<Label> multi;
        for (VertexId v : tops[t]) {
            ls.insert(labels[v]);
            multi.push_back(labels[v]);
        }
        if (ls == all) {
            ++r.e;
            r.fully_labeled.push_back(t);
        }
        if (ls == door) ++r.f;
        for (std::size_t drop = 0; drop < tops[t].size(); ++drop) {
            std::vector<VertexId> face;
            for (std::size_t i = 0; i < tops[t].size(); ++i)
                if (i != drop) face.push_back(tops[t][i]);
            if (!seen_faces.insert(face).second) continue;
            std::set<Label> fl;
            for (VertexId v : face) fl.insert(labels[v]);
            if (fl != door) continue;
            // Boundary iff some coordinate vanishes on all face vertices.
            bool boundary = false;
            for (int j = 0; j <= n && !boundary; ++j) {
                bool zero = true;
                for (VertexId v : face) zero = zero && K.point(v)[j] == 0;
                boundary = zero;
            }
            boundary ? ++r.h : ++r.g;
        }
    }
    return r;
}

inline double euclid(const RealPoint& a, const RealPoint& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

/// Longest edge over all top simplices, from real coordinates.
inline double max_edge(const EmbeddedComplex& K) {
    double best = 0;
    for (const Simplex& s : K.top_simplices())
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                best = std::max(best, euclid(to_real(K.point(s[i])), to_real(K.point(s[j]))));
    return best;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Rank over F2 of a small 0/1 matrix: 2^rank is the size of the row space,
/// found by closing the set of row combinations.
inline std::size_t rank_by_span(const std::vector<std::vector<int>>& rows) {
    std::set<std::vector<int>> span;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    span.insert(std::vector<int>(cols, 0));
    for (const auto& r : rows) {
        std::set<std::vector<int>> next = span;
        for (auto v : span) {
            for (std::size_t c = 0; c < cols; ++c) v[c] ^= r[c];
            next.insert(v);
        }
        span = std::move(next);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size()) ++rank;
    return rank;
}

} // namespace oracle
