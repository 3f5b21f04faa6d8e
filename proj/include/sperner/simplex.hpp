#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sperner/rational.hpp"

namespace sperner {

/// Vertex labels run 1..n+1, matching the vertex indices of the standard simplex.
using Label = int;

/// Barycentric coordinates with exact rational entries. Used on every
/// proof-verification path.
using ExactPoint = std::vector<Rational>;

/// Barycentric coordinates as doubles. Used for map evaluation in the solver.
using RealPoint = std::vector<double>;

/// Largest supported simplex dimension. Keeps face masks inside 32 bits.
inline constexpr int kMaxDim = 15;

struct Tolerances {
    double zero = 1e-12; ///< a floating coordinate <= zero counts as 0
    double sum = 1e-9;   ///< allowed |sum - 1| and allowed negative excursion
};

/// Face of the standard simplex opposite one vertex, cut out by x^opposite = 0.
struct FaceDescriptor {
    Label opposite = 0;
    std::vector<Label> vertices;

    bool contains(const ExactPoint& p) const;
    bool contains(const RealPoint& p, double zero_tol) const;
};

/// The standard n-simplex: points of R^{n+1} with nonnegative coordinates summing to one.
class StandardSimplex {
public:
    explicit StandardSimplex(int dim);

    int dim() const noexcept { return dim_; }
    int vertex_count() const noexcept { return dim_ + 1; }

    /// Unit coordinate point v_i.
    ExactPoint vertex(Label i) const;

    FaceDescriptor face_opposite(Label i) const;

    ExactPoint barycenter() const;

private:
    int dim_;
};

bool is_valid_point(const ExactPoint& p);
bool is_valid_point(const RealPoint& p, const Tolerances& tol = {});

/// Labels i with p^i = 0, ascending.
std::vector<Label> carrier_faces(const ExactPoint& p);
std::vector<Label> carrier_faces(const RealPoint& p, double zero_tol = Tolerances{}.zero);

/// Bit i-1 is set iff p^i == 0.
std::uint32_t zero_mask(const ExactPoint& p);

RealPoint to_real(const ExactPoint& p);

/// Maximum pairwise Euclidean distance, treating barycentric coordinates as
/// coordinates in R^{n+1}.
double simplex_diameter(std::span<const RealPoint> vertices);
double simplex_diameter(std::span<const ExactPoint> vertices);

/// Squared distance, exact.
Rational squared_distance(const ExactPoint& a, const ExactPoint& b);

} // namespace sperner
