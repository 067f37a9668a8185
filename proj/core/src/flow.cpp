#include "stationary/flow.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "stationary/parallel.hpp"

namespace stationary {

namespace {

template <typename T>
T pairwise_sum(const std::vector<T>& xs, std::size_t lo, std::size_t hi, T zero) {
  if (hi - lo <= 8) {
    T s = zero;
    for (std::size_t i = lo; i < hi; ++i) s += xs[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(xs, lo, mid, zero) + pairwise_sum(xs, mid, hi, zero);
}

struct Face {
  Vec3 x0, x1, x2;
  Vec3 c;
  Vec3 n;  // unnormalized, |n| = 2 area
  double area;
};

Face face(const TriMesh& m, std::size_t f) {
  const auto& t = m.triangles[f];
  Face out{m.vertices[t[0]], m.vertices[t[1]], m.vertices[t[2]], {}, {}, 0};
  out.c = (out.x0 + out.x1 + out.x2) / 3;
  out.n = (out.x1 - out.x0).cross(out.x2 - out.x0);
  out.area = 0.5 * out.n.norm();
  return out;
}

double weight(const Face& f, double alpha, std::size_t index) {
  const double c = f.c.norm();
  if (!(c > 0)) {
    std::ostringstream os;
    os << "face " << index << " has its centroid at 0";
    throw Error(ErrorKind::kOriginInFace, os.str());
  }
  return std::pow(c, alpha);
}

double min_area(const TriMesh& m) {
  double a = std::numeric_limits<double>::infinity();
  for (std::size_t f = 0; f < m.triangles.size(); ++f) a = std::min(a, face(m, f).area);
  return a;
}

double max_norm(const std::vector<Vec3>& g) {
  double m = 0;
  for (const auto& x : g) m = std::max(m, x.norm());
  return m;
}

}  // namespace

MeshTopology topology(const TriMesh& mesh) {
  std::map<std::pair<int, int>, std::pair<int, int>> edges;  // (min,max) -> (forward, backward)
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      const int a = t[k], b = t[(k + 1) % 3];
      auto& e = edges[{std::min(a, b), std::max(a, b)}];
      (a < b ? e.first : e.second) += 1;
    }
  }
  MeshTopology top;
  top.vertices = static_cast<int>(mesh.vertices.size());
  top.edges = static_cast<int>(edges.size());
  top.faces = static_cast<int>(mesh.triangles.size());
  top.closed = !edges.empty();
  top.consistent = true;
  for (const auto& [key, e] : edges) {
    if (e.first + e.second != 2) top.closed = false;
    if (e.first > 1 || e.second > 1) top.consistent = false;
  }
  return top;
}

SampledMesh sample_mesh(const ParametricPatch& patch, int nu, int nv) {
  if (nu < 1 || nv < 3) throw Error(ErrorKind::kPrecondition, "sample_mesh: need nu >= 1, nv >= 3");
  const Interval ur = patch.u_range(), vr = patch.v_range();
  const bool up = patch.u_periodic(), vp = patch.v_periodic();
  const int rows = up ? nu : nu + 1;
  const int cols = vp ? nv : nv + 1;
  auto u_at = [&](int i) { return ur.lo + i * ur.length() / nu; };
  auto v_at = [&](int j) { return vr.lo + j * vr.length() / nv; };

  std::vector<Vec3> grid(static_cast<std::size_t>(rows) * cols);
  parallel_for(grid.size(), [&](std::size_t k) {
    grid[k] = eval_jet2(patch, u_at(static_cast<int>(k) / cols), v_at(static_cast<int>(k) % cols)).P;
  });

  // A non-periodic u end whose whole row sits at one point becomes a pole.
  auto collapsed = [&](int i) {
    if (up) return false;
    double scale = 0, spread = 0;
    for (int j = 0; j < cols; ++j) {
      scale = std::max(scale, grid[i * cols + j].norm());
      spread = std::max(spread, (grid[i * cols + j] - grid[i * cols]).norm());
    }
    return spread <= 1e-9 * std::max(1.0, scale);
  };
  const bool pole_lo = collapsed(0), pole_hi = collapsed(rows - 1);

  SampledMesh out;
  std::vector<int> index(grid.size(), -1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const bool pole = (i == 0 && pole_lo) || (i == rows - 1 && pole_hi);
      if (pole && j > 0) {
        index[i * cols + j] = index[i * cols];
        continue;
      }
      index[i * cols + j] = static_cast<int>(out.mesh.vertices.size());
      out.mesh.vertices.push_back(grid[i * cols + j]);
    }
  }
  auto id = [&](int i, int j) {
    if (up) i %= rows;
    if (vp) j %= cols;
    return index[i * cols + j];
  };
  const int quad_rows = nu, quad_cols = nv;
  for (int i = 0; i < quad_rows; ++i) {
    for (int j = 0; j < quad_cols; ++j) {
      const int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      for (const std::array<int, 3>& t : {std::array<int, 3>{a, b, c}, std::array<int, 3>{a, c, d}}) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
        out.mesh.triangles.push_back(t);
      }
    }
  }
  out.closed = vp && (up || (pole_lo && pole_hi));
  return out;
}

double discrete_energy(const TriMesh& mesh, double alpha) {
  std::vector<double> terms(mesh.triangles.size());
  parallel_for(terms.size(), [&](std::size_t f) {
    const Face fc = face(mesh, f);
    terms[f] = weight(fc, alpha, f) * fc.area;
  });
  return terms.empty() ? 0.0 : pairwise_sum(terms, 0, terms.size(), 0.0);
}

std::vector<Vec3> discrete_gradient(const TriMesh& mesh, double alpha) {
  std::vector<std::array<Vec3, 3>> parts(mesh.triangles.size());
  parallel_for(parts.size(), [&](std::size_t f) {
    const Face fc = face(mesh, f);
    const double w = weight(fc, alpha, f);
    const double len = fc.n.norm();
    const Vec3 nh = len > 0 ? Vec3(fc.n / len) : Vec3::Zero();
    // d|c|^alpha / dx_i = alpha |c|^(alpha-2) c / 3
    const Vec3 dw = alpha * w / fc.c.squaredNorm() * fc.c / 3;
    parts[f][0] = w * 0.5 * nh.cross(fc.x2 - fc.x1) + fc.area * dw;
    parts[f][1] = w * 0.5 * nh.cross(fc.x0 - fc.x2) + fc.area * dw;
    parts[f][2] = w * 0.5 * nh.cross(fc.x1 - fc.x0) + fc.area * dw;
  });
  std::vector<Vec3> grad(mesh.vertices.size(), Vec3::Zero());
  for (std::size_t f = 0; f < parts.size(); ++f)
    for (int k = 0; k < 3; ++k) grad[mesh.triangles[f][k]] += parts[f][k];
  return grad;
}

DescentResult descend(const TriMesh& mesh, double alpha, const DescentOptions& options) {
  const MeshTopology top = topology(mesh);
  if (!top.closed) throw Error(ErrorKind::kOpenMesh, "descent needs a closed mesh");

  DescentResult res;
  res.mesh = mesh;
  double E = discrete_energy(res.mesh, alpha);
  std::vector<Vec3> g = discrete_gradient(res.mesh, alpha);
  res.trace.push_back({0, E, max_norm(g), 0.0});

  auto moved = [&](double dt) {
    TriMesh m = res.mesh;
    for (std::size_t i = 0; i < m.vertices.size(); ++i) m.vertices[i] -= dt * g[i];
    return m;
  };
  auto stop = [&](ErrorKind kind, int step, const std::string& why) {
    res.stop_kind = kind;
    std::ostringstream os;
    os << why << " at step " << step;
    res.stop_reason = os.str();
  };

  double dt = options.dt;
  for (int step = 1; step <= options.steps; ++step) {
    double g2 = 0;
    for (const auto& x : g) g2 += x.squaredNorm();

    if (options.rule == StepRule::kFixed) {
      TriMesh m = moved(dt);
      if (min_area(m) < options.min_area) {
        stop(ErrorKind::kFlowSingularity, step, "degenerate triangle");
        break;
      }
      res.mesh = std::move(m);
      E = discrete_energy(res.mesh, alpha);
      g = discrete_gradient(res.mesh, alpha);
      res.trace.push_back({step, E, max_norm(g), dt});
      continue;
    }

    int rejections = 0;
    bool accepted = false;
    while (!accepted) {
      TriMesh m = moved(dt);
      double trial = std::numeric_limits<double>::infinity();
      if (min_area(m) >= options.min_area) {
        try {
          trial = discrete_energy(m, alpha);
        } catch (const Error&) {
          trial = std::numeric_limits<double>::infinity();
        }
      }
      if (std::isfinite(trial) && trial <= E - options.armijo * dt * g2 && trial < E) {
        res.mesh = std::move(m);
        E = trial;
        accepted = true;
        break;
      }
      if (++rejections > options.max_rejections) break;
      dt *= 0.5;
    }
    if (!accepted) {
      stop(ErrorKind::kStall, step, "step rejected " + std::to_string(rejections) + " times");
      break;
    }
    g = discrete_gradient(res.mesh, alpha);
    res.trace.push_back({step, E, max_norm(g), dt});
    dt *= 2;
  }
  return res;
}

}  // namespace stationary
