#include "diskoct/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "diskoct/graph_io.hpp"
#include "diskoct/rng.hpp"

namespace diskoct {

namespace {

void check_disk(const Disk& d) {
  if (d.r < 1) throw std::invalid_argument("disk " + std::to_string(d.id) + ": radius must be >= 1");
  if (d.r > kMaxCoordinate || std::abs(d.cx) > kMaxCoordinate || std::abs(d.cy) > kMaxCoordinate) {
    throw std::invalid_argument("disk " + std::to_string(d.id) + ": coordinate out of range");
  }
}

}  // namespace

DiskInstance::DiskInstance(std::vector<Disk> disks) : disks_(std::move(disks)) {
  for (const auto& d : disks_) check_disk(d);
  std::stable_sort(disks_.begin(), disks_.end(), [](const Disk& a, const Disk& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < disks_.size(); ++i) {
    if (disks_[i].id == disks_[i - 1].id) {
      throw std::invalid_argument("duplicate disk id " + std::to_string(disks_[i].id));
    }
  }
  for (std::size_t i = 0; i < disks_.size(); ++i) disks_[i].id = static_cast<std::int64_t>(i);
}

BoundingBox DiskInstance::bounding_box() const {
  BoundingBox box;
  if (disks_.empty()) return box;
  box.min_x = box.min_y = kMaxCoordinate * 2;
  box.max_x = box.max_y = -kMaxCoordinate * 2;
  for (const auto& d : disks_) {
    box.min_x = std::min(box.min_x, d.cx - d.r);
    box.min_y = std::min(box.min_y, d.cy - d.r);
    box.max_x = std::max(box.max_x, d.cx + d.r);
    box.max_y = std::max(box.max_y, d.cy + d.r);
  }
  return box;
}

bool disks_intersect(const Disk& a, const Disk& b) {
  __extension__ using Wide = __int128;
  const Wide dx = static_cast<Wide>(a.cx) - b.cx;
  const Wide dy = static_cast<Wide>(a.cy) - b.cy;
  const Wide rs = static_cast<Wide>(a.r) + b.r;
  return dx * dx + dy * dy <= rs * rs;
}

Graph build_disk_graph(const DiskInstance& inst) {
  const auto& disks = inst.disks();
  const std::size_t n = disks.size();
  std::int64_t r_max = 0;
  for (const auto& d : disks) r_max = std::max(r_max, d.r);

  // Sweep in x: a partner of i lies within r_i + r_max horizontally.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return disks[a].cx != disks[b].cx ? disks[a].cx < disks[b].cx : a < b;
  });
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < n; ++p) {
    const Disk& di = disks[order[p]];
    for (std::size_t q = p + 1; q < n; ++q) {
      const Disk& dj = disks[order[q]];
      if (dj.cx - di.cx > di.r + r_max) break;
      if (disks_intersect(di, dj)) {
        edges.emplace_back(static_cast<Vertex>(order[p]), static_cast<Vertex>(order[q]));
      }
    }
  }
  return Graph(n, edges);
}

DiskInstance generate_random_instance(const GeneratorParams& p) {
  if (p.r_min < 1 || p.r_max < p.r_min) throw std::invalid_argument("need 1 <= r_min <= r_max");
  if (p.side < 1) throw std::invalid_argument("need side >= 1");
  if (p.side > kMaxCoordinate || p.r_max > kMaxCoordinate) throw std::invalid_argument("range too large");
  Rng rng(mix_seed(p.seed, 0x6469736bULL));
  std::vector<Disk> disks;
  disks.reserve(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    Disk d;
    d.id = static_cast<std::int64_t>(i);
    d.cx = uniform_int(rng, 0, p.side);
    d.cy = uniform_int(rng, 0, p.side);
    d.r = uniform_int(rng, p.r_min, p.r_max);
    disks.push_back(d);
  }
  return DiskInstance(std::move(disks));
}

DiskInstance read_disks(std::istream& in) {
  std::vector<Disk> disks;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::istringstream ss(line);
    Disk d;
    if (!(ss >> d.id)) {
      if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
      throw ParseError("expected `id cx cy r` on line " + std::to_string(line_no));
    }
    std::string extra;
    if (!(ss >> d.cx >> d.cy >> d.r) || (ss >> extra)) {
      throw ParseError("expected `id cx cy r` on line " + std::to_string(line_no));
    }
    disks.push_back(d);
  }
  try {
    return DiskInstance(std::move(disks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

DiskInstance read_disks_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_disks(in);
}

void write_disks(std::ostream& out, const DiskInstance& inst) {
  for (const auto& d : inst.disks()) out << d.id << ' ' << d.cx << ' ' << d.cy << ' ' << d.r << '\n';
}

void write_disks_file(const std::string& path, const DiskInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_disks(out, inst);
}

}  // namespace diskoct
