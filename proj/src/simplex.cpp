#include "sperner/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

void check_label(int dim, Label i) {
    if (i < 1 || i > dim + 1)
        throw InvalidInput("label " + std::to_string(i) + " out of range 1.." + std::to_string(dim + 1));
}

} // namespace

bool FaceDescriptor::contains(const ExactPoint& p) const {
    return opposite >= 1 && static_cast<std::size_t>(opposite) <= p.size() && p[opposite - 1] == 0;
}

bool FaceDescriptor::contains(const RealPoint& p, double zero_tol) const {
    return opposite >= 1 && static_cast<std::size_t>(opposite) <= p.size() && p[opposite - 1] <= zero_tol;
}

StandardSimplex::StandardSimplex(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim)
        throw InvalidInput("simplex dimension must lie in 0.." + std::to_string(kMaxDim));
}

ExactPoint StandardSimplex::vertex(Label i) const {
    check_label(dim_, i);
    ExactPoint p(vertex_count(), Rational(0));
    p[i - 1] = 1;
    return p;
}

FaceDescriptor StandardSimplex::face_opposite(Label i) const {
    check_label(dim_, i);
    FaceDescriptor face;
    face.opposite = i;
    for (Label j = 1; j <= vertex_count(); ++j)
        if (j != i) face.vertices.push_back(j);
    return face;
}

ExactPoint StandardSimplex::barycenter() const {
    return ExactPoint(vertex_count(), Rational(1, vertex_count()));
}

bool is_valid_point(const ExactPoint& p) {
    if (p.empty()) return false;
    Rational sum = 0;
    for (const auto& c : p) {
        if (c < 0) return false;
        sum += c;
    }
    return sum == 1;
}

bool is_valid_point(const RealPoint& p, const Tolerances& tol) {
    if (p.empty()) return false;
    double sum = 0.0;
    for (double c : p) {
        if (!std::isfinite(c) || c < -tol.sum) return false;
        sum += c;
    }
    return std::abs(sum - 1.0) <= tol.sum;
}

std::vector<Label> carrier_faces(const ExactPoint& p) {
    std::vector<Label> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == 0) out.push_back(static_cast<Label>(i + 1));
    return out;
}

std::vector<Label> carrier_faces(const RealPoint& p, double zero_tol) {
    std::vector<Label> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] <= zero_tol) out.push_back(static_cast<Label>(i + 1));
    return out;
}

std::uint32_t zero_mask(const ExactPoint& p) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == 0) mask |= 1u << i;
    return mask;
}

RealPoint to_real(const ExactPoint& p) {
    RealPoint out(p.size());
    std::transform(p.begin(), p.end(), out.begin(), [](const Rational& r) { return to_double(r); });
    return out;
}

Rational squared_distance(const ExactPoint& a, const ExactPoint& b) {
    if (a.size() != b.size()) throw InvalidInput("points of different dimension");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

double simplex_diameter(std::span<const RealPoint> vertices) {
    if (vertices.empty()) throw InvalidInput("diameter of an empty vertex list");
    double best = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i].size() != vertices[j].size()) throw InvalidInput("points of different dimension");
            double sq = 0.0;
            for (std::size_t c = 0; c < vertices[i].size(); ++c) {
                const double d = vertices[i][c] - vertices[j][c];
                sq += d * d;
            }
            best = std::max(best, sq);
        }
    return std::sqrt(best);
}

double simplex_diameter(std::span<const ExactPoint> vertices) {
    if (vertices.empty()) throw InvalidInput("diameter of an empty vertex list");
    Rational best = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) best = std::max(best, squared_distance(vertices[i], vertices[j]));
    return std::sqrt(to_double(best));
}

} // namespace sperner
