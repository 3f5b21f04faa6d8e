#include "sperner/kernels.hpp"

#include <cstddef>

namespace sperner::kernels {

namespace {

std::uint32_t mask_of(const Simplex& s, std::span<const Label> labels) {
    std::uint32_t m = 0;
    for (VertexId v : s) m |= 1u << (labels[v] - 1);
    return m;
}

} // namespace

std::vector<std::uint32_t> face_label_masks(const EmbeddedComplex& K, std::span<const Label> labels, int k) {
    const auto faces = K.faces(k);
    const auto count = static_cast<std::ptrdiff_t>(faces.size());
    std::vector<std::uint32_t> out(faces.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = mask_of(faces[i], labels);
    return out;
}

std::vector<std::uint32_t> face_label_masks_serial(const EmbeddedComplex& K, std::span<const Label> labels, int k) {
    std::vector<std::uint32_t> out;
    out.reserve(K.face_count(k));
    for (const Simplex& s : K.faces(k)) out.push_back(mask_of(s, labels));
    return out;
}

std::vector<FaceIndex> select_equal(std::span<const std::uint32_t> masks, std::uint32_t target) {
    const auto count = static_cast<std::ptrdiff_t>(masks.size());
    std::vector<char> hit(masks.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) hit[i] = masks[i] == target;
    std::vector<FaceIndex> out;
    for (std::size_t i = 0; i < hit.size(); ++i)
        if (hit[i]) out.push_back(static_cast<FaceIndex>(i));
    return out;
}

std::vector<FaceIndex> select_equal_serial(std::span<const std::uint32_t> masks, std::uint32_t target) {
    std::vector<FaceIndex> out;
    for (std::size_t i = 0; i < masks.size(); ++i)
        if (masks[i] == target) out.push_back(static_cast<FaceIndex>(i));
    return out;
}

} // namespace sperner::kernels
