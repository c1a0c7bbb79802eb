#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "diskoct/graph.hpp"

namespace diskoct {

/// Closed disk with integer center and radius.
struct Disk {
  std::int64_t id = 0;
  std::int64_t cx = 0;
  std::int64_t cy = 0;
  std::int64_t r = 1;

  friend bool operator==(const Disk&, const Disk&) = default;
};

struct BoundingBox {
  std::int64_t min_x = 0;
  std::int64_t min_y = 0;
  std::int64_t max_x = 0;
  std::int64_t max_y = 0;
};

class DiskInstance {
 public:
  DiskInstance() = default;
  /// Validates radii, coordinates and id uniqueness; sorts by id and renumbers to 0..n-1.
  explicit DiskInstance(std::vector<Disk> disks);

  const std::vector<Disk>& disks() const { return disks_; }
  std::size_t size() const { return disks_.size(); }
  bool empty() const { return disks_.empty(); }
  BoundingBox bounding_box() const;

  friend bool operator==(const DiskInstance&, const DiskInstance&) = default;

 private:
  std::vector<Disk> disks_;
};

// Coordinates and radii are limited so that squared distances fit in 64 bits
// after widening to 128-bit intermediates.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 40;

/// Closed-disk intersection; tangent disks intersect.
bool disks_intersect(const Disk& a, const Disk& b);

Graph build_disk_graph(const DiskInstance& inst);

struct GeneratorParams {
  std::size_t n = 0;
  std::int64_t r_min = 1;
  std::int64_t r_max = 1;
  std::int64_t side = 100;
  std::uint64_t seed = 0;
};

/// Centers uniform on the integer grid [0, side]^2, radii uniform in [r_min, r_max].
DiskInstance generate_random_instance(const GeneratorParams& params);

// Disk file format: one `id cx cy r` per line, `#` comments.
DiskInstance read_disks(std::istream& in);
DiskInstance read_disks_file(const std::string& path);
void write_disks(std::ostream& out, const DiskInstance& inst);
void write_disks_file(const std::string& path, const DiskInstance& inst);

}  // namespace diskoct
