#pragma once

#include <array>
#include <string>
#include <vector>

#include <optional>

#include "stationary/error.hpp"
#include "stationary/surface.hpp"

namespace stationary {

struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
};

struct MeshTopology {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  bool closed = false;       // every edge shared by exactly two faces
  bool consistent = false;   // every shared edge traversed in opposite directions

  int euler_characteristic() const { return vertices - edges + faces; }
};

MeshTopology topology(const TriMesh& mesh);

struct SampledMesh {
  TriMesh mesh;
  bool closed = false;
};

/// Structured triangulation of a patch with nu intervals in u and nv in v.
/// Periodic directions wrap; u ends that collapse to a point (sphere poles)
/// close with triangle fans; anything else gives an open mesh.
SampledMesh sample_mesh(const ParametricPatch& patch, int nu, int nv);

/// Sum over faces of |centroid|^alpha * area. Throws kOriginInFace.
double discrete_energy(const TriMesh& mesh, double alpha);

/// Exact gradient of discrete_energy with respect to every vertex.
std::vector<Vec3> discrete_gradient(const TriMesh& mesh, double alpha);

enum class StepRule { kFixed, kBacktracking };

struct DescentOptions {
  int steps = 100;
  StepRule rule = StepRule::kBacktracking;
  double dt = 1e-3;            // fixed step, or initial trial step
  double armijo = 1e-4;        // sufficient-decrease constant
  int max_rejections = 50;
  double min_area = 1e-14;
};

struct TraceRow {
  int step;
  double energy;
  double grad_max;
  double dt;
};

struct DescentResult {
  TriMesh mesh;
  std::vector<TraceRow> trace;  // row 0 is the initial state
  std::optional<ErrorKind> stop_kind;  // kFlowSingularity or kStall
  std::string stop_reason;
};

/// Gradient descent on a closed mesh. With backtracking every accepted
/// step lowers the energy. Throws kOpenMesh for meshes with boundary. A
/// degenerate triangle or more than max_rejections rejected trials ends the
/// run early with stop_kind set and the step index in stop_reason.
DescentResult descend(const TriMesh& mesh, double alpha, const DescentOptions& options);

}  // namespace stationary
