#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "hpcg/common.hpp"
#include "hpcg/voxel.hpp"

namespace hpcg {

// Immutable coordinate list plus lookup structures shared by every tensor on
// it. The hash index is built once; the 27-neighbour table is built on first
// sparse-convolution use and cached.
class CoordinateSet {
 public:
  explicit CoordinateSet(const PointCloud& pc);

  std::size_t size() const { return coords_.size(); }
  int bitdepth() const { return bitdepth_; }
  const std::vector<VoxelCoord>& coords() const { return coords_; }

  // Row index of `c`, or -1.
  std::int32_t find(const VoxelCoord& c) const {
    auto it = index_.find(pack_coord(c));
    return it == index_.end() ? -1 : it->second;
  }

  // size() x 27 table; entry (i,k) is the row of coords[i] + offset_k or -1.
  // Offsets are ordered k = 9*(dx+1) + 3*(dy+1) + (dz+1).
  const std::vector<std::int32_t>& neighbors27() const;

  static std::array<std::int32_t, 3> conv_offset(int k) {
    return {std::int32_t(k / 9) - 1, std::int32_t((k / 3) % 3) - 1, std::int32_t(k % 3) - 1};
  }

 private:
  std::vector<VoxelCoord> coords_;
  int bitdepth_;
  std::unordered_map<std::uint64_t, std::int32_t> index_;
  mutable std::vector<std::int32_t> nbr_;
  mutable std::once_flag nbr_once_;
};

using CoordSetPtr = std::shared_ptr<const CoordinateSet>;

// 8-channel sibling-occupancy feature at each node: channel k is 1 when the
// k-th slot of the node's own 2x2x2 dyadic block is occupied in the same
// cloud. The node's own slot is always 1.
template <typename T>
MatX<T> lsop_features(const CoordinateSet& cs);

extern template MatX<float> lsop_features<float>(const CoordinateSet&);
extern template MatX<double> lsop_features<double>(const CoordinateSet&);

}  // namespace hpcg
