#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "skeinlab/cyclotomic.hpp"
#include "skeinlab/qtorus.hpp"

namespace skeinlab {

using OmegaMatrix = std::vector<std::vector<long long>>;

/// Matrix of the Thurston form on a weight basis: Omega[i][j] = omega(b_i, b_j).
OmegaMatrix omega_matrix(const TrainTrack& tt, const std::vector<WeightVector>& basis);

/// Representation of the quantum torus at a root of unity: one matrix per
/// weight-basis vector, with the scalar parameters that classify it.
struct MatrixRep {
  RootOfUnity root;
  int dimension = 1;
  std::vector<Eigen::MatrixXcd> images;
  std::vector<std::complex<double>> scalars;
  OmegaMatrix omega;

  std::size_t rank() const { return images.size(); }
};

/// Clock-and-shift construction: reduce Omega mod N to symplectic pairs plus
/// kernel by an invertible congruence transform over Z/N, realize each pair
/// on an N-dimensional clock/shift block, act by the given nonzero scalars
/// elsewhere. Dimension N^{rank(Omega mod N)/2}.
MatrixRep build_rep(const OmegaMatrix& omega, const RootOfUnity& root,
                    const std::vector<std::complex<double>>& scalars);

/// Max over basis pairs of ||rho(b_i) rho(b_j) - A^{omega_ij} rho(b_j) rho(b_i)||.
double verify_rep(const MatrixRep& rep);

/// Dimension of the span of all products of the images up to length 2*rank;
/// equals dimension^2 iff the representation is irreducible.
int irreducibility_rank(const MatrixRep& rep);

/// Image of the lattice vector sum_i t_i b_i under the Weyl-ordered rule
///   rho(v) = A^{-1/2 sum_{i<j} t_i t_j omega_ij} prod_i rho(b_i)^{t_i},
/// which satisfies rho(u) rho(v) = A^{omega(u,v)/2} rho(u+v).
Eigen::MatrixXcd rep_of_vector(const MatrixRep& rep, const std::vector<long long>& t);

struct CentralCharacter {
  std::vector<std::complex<double>> values;
};

/// Schur scalars of the central vectors N*b_i followed by any extra central
/// vectors (given in basis coordinates). NotScalar when an image has
/// off-scalar residual above 1e-8.
CentralCharacter central_character(const MatrixRep& rep,
                                   const std::vector<std::vector<long long>>& extra = {});

/// Coordinates of w in the given lattice basis (exact integer solve);
/// TrackMismatch if w is not in the lattice.
std::vector<long long> express_in_basis(const std::vector<WeightVector>& basis,
                                        const WeightVector& w);

}  // namespace skeinlab
