#pragma once

#include <Eigen/Dense>

namespace bmpc {

// Rectangular lattice of powder nodes. Node (ix, iy) sits at physical
// position (ix*dx, iy*dy); indices are row-major with ix fastest.
struct GridGeometry {
  int nx = 15;
  int ny = 15;
  double dx = 2e-5;  // node width [m]
  double dy = 2e-5;  // node depth [m]
  double dz = 5e-5;  // powder layer thickness [m]

  int node_count() const { return nx * ny; }
  int node_index(int ix, int iy) const { return iy * nx + ix; }
  double width() const { return (nx - 1) * dx; }
  double height() const { return (ny - 1) * dy; }

  void validate() const;
};

struct ThermalParams {
  double k_node;  // conductivity between neighbouring nodes [W/K]
  double k_sub;   // conductivity from a node to the substrate [W/K]
  double c;       // heat capacity of one node [J/K]

  void validate() const;

  // k_sub follows the 20*dz magnitude rule; k_node uses the same rule as a
  // calibration default since no physical value is prescribed.
  static ThermalParams defaults_for(const GridGeometry& g) {
    return ThermalParams{20.0 * g.dz, 20.0 * g.dz, 8.5e-8};
  }
};

// Directed incidence matrix of the 4-neighbourhood link graph, N x q with
// q = nx*(ny-1) + ny*(nx-1). Each column holds one +1 and one -1.
Eigen::MatrixXd build_incidence(const GridGeometry& g);

// Weighted graph Laplacian D*(k*I)*D^T.
Eigen::MatrixXd grid_laplacian(const GridGeometry& g, double k_node);

}  // namespace bmpc
