#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hpcg/common.hpp"

namespace hpcg {

// Occupied voxel position. Components are non-negative and < 2^bitdepth of
// the cloud that owns them.
struct VoxelCoord {
  std::int32_t x = 0, y = 0, z = 0;

  friend bool operator==(const VoxelCoord&, const VoxelCoord&) = default;
  friend auto operator<=>(const VoxelCoord&, const VoxelCoord&) = default;
};

// 21 bits per component; lexicographic (x,y,z) order equals numeric order of
// the packed key, so sorting packed keys yields the canonical node order.
constexpr int kPackBits = 21;

inline std::uint64_t pack_coord(const VoxelCoord& c) {
  return (std::uint64_t(c.x) << (2 * kPackBits)) | (std::uint64_t(c.y) << kPackBits) |
         std::uint64_t(c.z);
}

inline VoxelCoord unpack_coord(std::uint64_t k) {
  constexpr std::uint64_t mask = (std::uint64_t(1) << kPackBits) - 1;
  return {std::int32_t((k >> (2 * kPackBits)) & mask), std::int32_t((k >> kPackBits) & mask),
          std::int32_t(k & mask)};
}

// Sorted, deduplicated set of occupied voxels at a given bit depth.
struct PointCloud {
  std::vector<VoxelCoord> coords;  // canonical lexicographic order
  int bitdepth = 0;

  std::size_t size() const { return coords.size(); }
  bool empty() const { return coords.empty(); }

  // Sorts, dedupes and validates component ranges.
  static PointCloud from_points(std::vector<VoxelCoord> pts, int bitdepth);

  friend bool operator==(const PointCloud&, const PointCloud&) = default;
};

// One bit per parent node, in canonical parent order, telling whether the
// parent's j-th child is occupied.
using StageBits = std::vector<std::uint8_t>;

// x^0 (finest) ... x^L (coarsest).
struct ScaleHierarchy {
  std::vector<PointCloud> scales;

  std::size_t levels() const { return scales.size(); }
  const PointCloud& finest() const { return scales.front(); }
  const PointCloud& coarsest() const { return scales.back(); }
};

// Child slot j in 1..8 -> offset in {0,1}^3. Morton order: j-1 = b2 b1 b0
// maps to (dx,dy,dz) = (b2,b1,b0).
inline std::array<std::int32_t, 3> child_offset(int j) {
  if (j < 1 || j > 8) throw std::out_of_range("child_offset: stage index must be in 1..8");
  const int v = j - 1;
  return {std::int32_t((v >> 2) & 1), std::int32_t((v >> 1) & 1), std::int32_t(v & 1)};
}

// Parent grid of `pc`: unique floor(c/2), bitdepth - 1.
PointCloud voxel_downsample(const PointCloud& pc);

// Repeated downsampling until the coarsest scale holds at most
// `coarse_threshold` points or bitdepth reaches zero.
ScaleHierarchy build_hierarchy(const PointCloud& pc, int coarse_threshold);

// bits[p] = 1 iff (2p + child_offset(j)) is in `children`. `parents` must be
// voxel_downsample(children).
StageBits stage_ground_truth(const PointCloud& children, const PointCloud& parents, int j);

// All eight stages at once; cheaper than eight membership passes.
std::array<StageBits, 8> stage_ground_truth_all(const PointCloud& children,
                                                const PointCloud& parents);

// Inverse of stage_ground_truth: children = { 2p + child_offset(j) : bits set }.
// Throws CorruptStream if some parent has no occupied child.
PointCloud reconstruct_scale(const PointCloud& parents, const std::array<StageBits, 8>& bits);

}  // namespace hpcg
