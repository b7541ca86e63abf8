#pragma once

#include <array>
#include <vector>

#include "pfcurv/dual.hpp"
#include "pfcurv/embedding.hpp"
#include "pfcurv/geometry.hpp"

namespace pfcurv {

// Cotan estimate of the mean curvature at each vertex: the edge-vector sum
//   (1 / (4 A_i)) * sum over star of (cot a + cot b) (v_i - v_j)
// points along the curvature normal with the mean curvature as magnitude.
// The signed value follows the hinge convention: negative where the vector
// points toward the positive orientation side (convex), positive away.
struct CotanCurvature {
  std::vector<double> value;    // signed magnitude
  std::vector<Vec3> direction;  // unit sum direction; zero where the sum vanishes
  std::vector<bool> valid;      // false where the star touches the boundary
};

CotanCurvature cotan_mean_curvature(const EmbeddedSurface& es, const DualTessellation& dual);

// Anisotropic hinge-angle tensor averaged over a vertex's dual cell:
//   (1/|B|) * sum over star edges of (|h n B| / 2) [ (phi - sin phi) e+ e+^T
//                                                  + (phi + sin phi) e- e-^T ]
// where e+ and e- are the normalized sum and difference of the two triangle
// normals along the edge, and |h n B| is the half of the edge inside the cell.
struct VertexTensor3 {
  int vertex = -1;
  Mat3 tensor = Mat3::Zero();  // symmetric
  double area = 0.0;           // dual cell area |B|
};

// Principal curvature estimates drop the tensor eigenvector closest to the
// vertex normal and keep the remaining two eigenvalues in ascending order.
struct CsmCurvature {
  std::vector<VertexTensor3> tensor;
  std::vector<std::array<double, 2>> principal;
  std::vector<bool> valid;  // false where the star touches the boundary
};

CsmCurvature csm_tensor(const EmbeddedSurface& es, const DualTessellation& dual);

}  // namespace pfcurv
