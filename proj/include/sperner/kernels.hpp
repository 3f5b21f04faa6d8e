#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sperner/complex.hpp"

// Data-parallel scans over the faces of a complex. Each OpenMP kernel has a
// *_serial twin that the tests use as the reference; outputs are identical
// for any thread count.
namespace sperner::kernels {

/// mask[f] has bit l-1 set iff a vertex of k-face f carries label l.
std::vector<std::uint32_t> face_label_masks(const EmbeddedComplex& K, std::span<const Label> labels, int k);
std::vector<std::uint32_t> face_label_masks_serial(const EmbeddedComplex& K, std::span<const Label> labels, int k);

/// Ascending indices i with masks[i] == target.
std::vector<FaceIndex> select_equal(std::span<const std::uint32_t> masks, std::uint32_t target);
std::vector<FaceIndex> select_equal_serial(std::span<const std::uint32_t> masks, std::uint32_t target);

} // namespace sperner::kernels
