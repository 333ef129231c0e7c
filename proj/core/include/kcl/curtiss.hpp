#pragma once

#include "kcl/constants.hpp"
#include "kcl/grid.hpp"

namespace kcl {

/// Macroscopic state of the rotating-molecule gas: translational fields plus
/// angular velocity, intrinsic angular momentum and the molecular inertia
/// tensor N (symmetric positive semidefinite).
struct CurtissMacro {
  double rho = 1.0;
  Vec3 u = Vec3::Zero();
  double theta = 1.0;
  Vec3 gamma = Vec3::Zero();
  Vec3 mu = Vec3::Zero();
  Mat3 inertia = Mat3::Identity();
};

/// Nematic configuration: unit director, its gradient, and the inertia
/// coefficient in N = lambda (I - n x n).
struct NematicField {
  Vec3 n = Vec3::UnitX();
  Mat3 grad_n = Mat3::Zero();
  double lambda_inertia = 1.0;
};

struct CoupleFluxSet {
  Mat3 T = Mat3::Zero();   // not necessarily symmetric
  Vec3 Q = Vec3::Zero();
  Mat3 M = Mat3::Zero();   // couple stress
};

namespace curtiss {

/// Zeroth-order fluxes of the anisotropic Maxwellian by tensor Gaussian
/// quadrature over (V, Omega). Zero-eigenvalue inertia directions carry no
/// energy and are marginalized out. Expected: T = -rho R_s theta I, Q = 0,
/// M = 0.
CoupleFluxSet curtiss_zeroth_fluxes(const CurtissMacro& macro, const GasConstants& c,
                                    int n_per_axis = 16);

/// e = (5/2) R_s theta + (lambda/2) rho R_s theta tr(grad_n^T grad_n).
double nematic_internal_energy(double theta, double rho, const NematicField& field,
                               const GasConstants& c);

/// Analytic derivative of the nematic internal energy with respect to grad_n:
/// lambda rho R_s theta grad_n.
Mat3 energy_gradient_grad_n(double theta, double rho, const NematicField& field,
                            const GasConstants& c);
/// Same by central finite differences on nematic_internal_energy.
Mat3 energy_gradient_grad_n_fd(double theta, double rho, const NematicField& field,
                               const GasConstants& c, double step = 1e-5);

/// Overloaded cross product of a vector with a tensor: (n x S)_ij = eps_iqp n_q S_jp.
Mat3 cross_tensor(const Vec3& n, const Mat3& S);

struct EricksenFluxes {
  Mat3 T_star;  // -(de/dgrad_n)^T grad_n
  Mat3 M_star;  // n x (de/dgrad_n)
};
EricksenFluxes ericksen_fluxes(const NematicField& field, double theta, double rho,
                               const GasConstants& c);

/// (-T - (de/dgrad_n)^T grad_n):grad_v + (-M + n x (de/dgrad_n)):grad_omega.
/// Zero iff the pair (T, M) satisfies the energy identity for these test
/// gradients.
double variational_residual(const Mat3& T, const Mat3& M, const NematicField& field, double theta,
                            double rho, const Mat3& grad_v, const Mat3& grad_omega,
                            const GasConstants& c);

/// Compares the Ericksen momentum stress -T* against the p (lambda/2)
/// grad_n^T grad_n term of the printed momentum balance. The two candidates
/// are proportional; the coefficient ratio (2 when grad_n != 0) quantifies
/// the discrepancy between the energy-derived and the printed coefficient.
struct LeslieComparison {
  Mat3 energy_derived;     // -T* = p lambda grad_n^T grad_n
  Mat3 momentum_equation;  // p (lambda/2) grad_n^T grad_n
  double coefficient_ratio;
  bool degenerate;         // grad_n = 0, ratio undefined
};
LeslieComparison leslie_stress_comparison(const NematicField& field, double theta, double rho,
                                          const GasConstants& c);

}  // namespace curtiss

}  // namespace kcl
