#pragma once

#include <cstdint>
#include <string_view>

#include "sperner/brouwer.hpp"

namespace sperner {

/// f(x) = x.
MapOnSimplex identity_map(int n);

/// f(x) = c for a fixed point c of the simplex.
MapOnSimplex constant_map(RealPoint c);

/// Cyclic coordinate shift (x_1, ..., x_{n+1}) ↦ (x_{n+1}, x_1, ..., x_n).
MapOnSimplex rotate_map(int n);

/// Homogeneous quadratic map f(x)_j = Σ_{k,l} P[j][k][l] x_k x_l where, for
/// each pair (k, l), P[·][k][l] = P[·][l][k] is a probability vector whose
/// entries are drawn uniformly from [0.05, 1] and normalized (std::mt19937_64
/// seeded with `seed`). Coordinates of f(x) sum to (Σ x)^2 = 1, and f(v_i) is
/// interior, so no vertex of Δ is fixed.
MapOnSimplex quadratic_map(int n, std::uint64_t seed);

/// f(x) = (1 - s)·M x + s·c, where column k of M is the image of v_{k+1}.
MapOnSimplex affine_map(std::vector<std::vector<double>> columns, RealPoint shift, double shift_weight);

/// Registry: `identity`, `constant:<c1,c2,...>`, `rotate`, `quadratic:<seed>`.
MapOnSimplex make_map(std::string_view spec, int n);

} // namespace sperner
