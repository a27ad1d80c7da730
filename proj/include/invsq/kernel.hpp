#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "invsq/deformation.hpp"
#include "invsq/types.hpp"

namespace invsq {

// Eigenpairs of X^2 = -d^2/dp^2 on [-b,b] with Dirichlet walls:
//   chi_n = pi^2 n^2 / (4 b^2),  phi_n(p) = sin(n pi (p+b)/(2b)) / sqrt(b).
double chi(int n, double b);
double phi(int n, double b, double p);

// Kernel of 1/X^2.  The closed form
//   K(p,q) = -(|p-q| + p q / b - b) / 2
// is evaluated in the factored shape (b - max)(b + min)/(2b), which is
// manifestly symmetric and exactly zero at the walls.
double kernel_closed(double b, double p, double q);

// Truncated spectral sum  sum_{n<=terms} phi_n(p) phi_n(q) / chi_n.
double kernel_spectral(double b, double p, double q, int terms);

// Dimensionless kernel on [-1,1]: (1 - |y-y'| - y y')/2.
double kernel_scaled(double y, double yp);

// Gauss-Legendre nodes and weights on [-1,1], Newton on the recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Symmetrized quadrature discretization of the integral eigenproblem
//   (G(y) + eps) psi = alpha0 Int K(y,y') psi(y') dy',
// as  A_ij = alpha0 sqrt(w_i) K(y_i,y_j) sqrt(w_j) - delta_ij G(y_i);
// the positive eigenvalues of A are the bound-state eps.
struct KernelDiscretization {
    std::vector<double> nodes;
    std::vector<double> weights;
    Eigen::MatrixXd matrix;
    double alpha0 = 0;
    std::string deformation;
};

KernelDiscretization nystrom_matrix(const DeformationSpec& spec, double alpha0, int n);

// All positive eigenvalues, sorted descending, at most k; parity is read off
// the eigenvector symmetry under y -> -y, residual is ||A v - eps v||_inf.
std::vector<EigenLevel> nystrom_spectrum(const KernelDiscretization& disc, int k);

}  // namespace invsq
