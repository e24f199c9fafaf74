#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpcg {

// Row-major everywhere: feature rows are gathered/scattered by coordinate.
template <typename T>
using MatX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename T>
using VecX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using ByteVec = std::vector<std::uint8_t>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorruptStream : std::runtime_error {
  std::size_t position;
  CorruptStream(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at byte " + std::to_string(pos) + ")"), position(pos) {}
};

struct AssetMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hpcg
