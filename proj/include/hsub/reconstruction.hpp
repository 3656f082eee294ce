#pragma once

#include "hsub/fd.hpp"
#include "hsub/kernels.hpp"
#include "hsub/quadrature.hpp"

namespace hsub {

struct StokesOptions {
  int surface_degree = 30;
  int volume_radial = 16;
  int volume_sphere_degree = 24;
  FDConfig fd;
};

/// Both sides of the pairing
///   int_{dOmega} F n G dS  =  2 int_Omega ((F D) G + F (D G)) dV
/// on a ball, together with the norm of their difference.
struct StokesResult {
  Cmv boundary;
  Cmv volume;
  double residual;
};
StokesResult stokes_residual(const FieldFn& F, const FieldFn& G, const Point& center,
                             double radius, const StokesOptions& opts);

/// Boundary representation of d/dx0 F at u from a sphere of radius R
/// around `center`: int_{dB} K(x - u) n(x) F(x) dS. mc_samples switches
/// the sphere discretization to Monte Carlo where no product rule exists.
Cmv reconstruct_dx0(const FieldFn& F, const Point& center, double R, const Point& u,
                    int surface_degree = 36, int mc_samples = 0, std::uint64_t seed = 0);

struct CylinderOptions {
  int cap_radial = 24;
  int sphere_degree = 48;
  int panel_order = 14;
  double tail_safety = 2.0;
  double tail_budget = INFINITY;  // throws when the tail bound exceeds this
};

/// Cauchy representation of F on the semi-infinite cylinder
/// {x0 < a, |x| < R}, truncated at x0 = b, with an empirical bound on
/// the discarded tail:
///   F(u) = - int_{dC_a(R)} E(x - u) n(x) F(x) dS.
struct CylinderResult {
  Cmv value;
  double tail_bound;
};
CylinderResult reconstruct_F_cylinder(const FieldFn& F, double a, double R, double b,
                                      const Point& u, double decay_rate,
                                      const CylinderOptions& opts = {});

/// Small-sphere integral int_{dB_eps(u)} K n F dS, the local limit of
/// the boundary representation.
Cmv eps_sphere_integral(const FieldFn& F, const Point& u, double eps, int surface_degree = 36);

/// The local limit combination evaluated from finite differences of F:
///  ( (2n f0^dag f0 + 2 beta (f0 f0^dag - f0^dag f0)) dx0 F
///    - 2 (2n+1-2 beta) f0 dz F - 2 (1+2 beta) f0^dag dzdag F ) / (2n+1).
Cmv local_limit_combination(const FieldFn& F, const Point& u, const FDConfig& cfg);

}  // namespace hsub
