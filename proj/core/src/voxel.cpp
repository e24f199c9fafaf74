#include "hpcg/voxel.hpp"

#include <algorithm>
#include <unordered_set>

namespace hpcg {

PointCloud PointCloud::from_points(std::vector<VoxelCoord> pts, int bitdepth) {
  if (pts.empty()) throw ParseError("point cloud is empty");
  if (bitdepth < 0 || bitdepth > kPackBits)
    throw ParseError("unsupported bitdepth " + std::to_string(bitdepth));
  const std::int32_t lim = std::int32_t(1) << bitdepth;
  for (const auto& p : pts) {
    if (p.x < 0 || p.y < 0 || p.z < 0 || p.x >= lim || p.y >= lim || p.z >= lim)
      throw ParseError("coordinate out of range for bitdepth " + std::to_string(bitdepth));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return PointCloud{std::move(pts), bitdepth};
}

PointCloud voxel_downsample(const PointCloud& pc) {
  std::vector<VoxelCoord> parents;
  parents.reserve(pc.coords.size());
  for (const auto& c : pc.coords) parents.push_back({c.x >> 1, c.y >> 1, c.z >> 1});
  std::sort(parents.begin(), parents.end());
  parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
  return PointCloud{std::move(parents), pc.bitdepth - 1};
}

ScaleHierarchy build_hierarchy(const PointCloud& pc, int coarse_threshold) {
  if (pc.empty()) throw ParseError("build_hierarchy: empty point cloud");
  if (coarse_threshold < 1) throw ParseError("build_hierarchy: coarse_threshold must be >= 1");
  ScaleHierarchy h;
  h.scales.push_back(pc);
  while (h.scales.back().size() > std::size_t(coarse_threshold) && h.scales.back().bitdepth > 0)
    h.scales.push_back(voxel_downsample(h.scales.back()));
  return h;
}

StageBits stage_ground_truth(const PointCloud& children, const PointCloud& parents, int j) {
  return stage_ground_truth_all(children, parents)[j - 1];
}

std::array<StageBits, 8> stage_ground_truth_all(const PointCloud& children,
                                                const PointCloud& parents) {
  std::array<StageBits, 8> out;
  for (auto& s : out) s.assign(parents.size(), 0);

  // Children sorted by parent key in lock-step with sorted parents: each
  // child's parent is located by a forward scan instead of hashing.
  std::size_t pi = 0;
  for (const auto& c : children.coords) {
    const VoxelCoord par{c.x >> 1, c.y >> 1, c.z >> 1};
    while (pi < parents.coords.size() && parents.coords[pi] < par) ++pi;
    if (pi >= parents.coords.size() || !(parents.coords[pi] == par))
      throw ParseError("stage_ground_truth: parents do not match downsampled children");
    const int j = ((c.x & 1) << 2) | ((c.y & 1) << 1) | (c.z & 1);
    out[j][pi] = 1;
  }
  return out;
}

PointCloud reconstruct_scale(const PointCloud& parents, const std::array<StageBits, 8>& bits) {
  for (const auto& s : bits)
    if (s.size() != parents.size())
      throw ParseError("reconstruct_scale: stage bits not aligned to parents");

  std::vector<VoxelCoord> children;
  children.reserve(parents.size() * 2);
  for (std::size_t p = 0; p < parents.coords.size(); ++p) {
    bool any = false;
    for (int j = 1; j <= 8; ++j) {
      if (!bits[j - 1][p]) continue;
      any = true;
      const auto off = child_offset(j);
      const auto& q = parents.coords[p];
      children.push_back({2 * q.x + off[0], 2 * q.y + off[1], 2 * q.z + off[2]});
    }
    if (!any) throw CorruptStream("reconstruct_scale: parent with no occupied child", p);
  }
  std::sort(children.begin(), children.end());
  return PointCloud{std::move(children), parents.bitdepth + 1};
}

}  // namespace hpcg
