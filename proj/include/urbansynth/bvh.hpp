#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "urbansynth/geometry.hpp"

namespace urbansynth {

// Binary BVH over the triangles of a mesh list. Binned surface-area heuristic
// (16 bins), leaves hold at most 4 primitives. Construction is a pure
// function of the input meshes, so identical input yields an identical tree.
class Bvh {
 public:
  struct Node {
    Aabb bounds;
    // Interior: children form a consecutive pair, `right_or_first` is the
    // right child and `right_or_first - 1` the left. Leaf: `right_or_first`
    // is the first primitive, `count` > 0.
    uint32_t right_or_first = 0;
    uint16_t count = 0;
    uint8_t axis = 0;
  };

  // Flattened primitive reference, in BVH leaf order.
  struct Primitive {
    Vec3 v0, v1, v2;
    uint32_t mesh_index;
    uint32_t tri_index;
  };

  static Bvh build(std::span<const TriangleMesh> meshes);

  // Nearest hit over all primitives, or nullopt. `meshes` must be the list
  // the tree was built from.
  std::optional<SurfaceInteraction> intersect(std::span<const TriangleMesh> meshes,
                                              const Ray& ray) const;

  // True iff any primitive intersects within (t_min, t_max); terminates on
  // the first hit found.
  bool occluded(const Ray& ray) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Primitive>& primitives() const { return prims_; }
  bool empty() const { return prims_.empty(); }

 private:
  std::vector<Node> nodes_;
  std::vector<Primitive> prims_;
};

}  // namespace urbansynth
