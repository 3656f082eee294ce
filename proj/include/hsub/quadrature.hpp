#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "hsub/clifford.hpp"
#include "hsub/special.hpp"
#include "hsub/witt.hpp"

namespace hsub {

/// Nodes and weights of a one-dimensional Gauss rule.
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre(int n);

/// Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^a (1+x)^b.
GaussRule gauss_jacobi(int n, double a, double b);

/// Generalized Gauss-Laguerre rule on [0, inf) for x^a e^{-x}.
GaussRule gauss_laguerre(int n, double a);

/// Adaptive Gauss-Kronrod 15(7) integration of a complex-valued
/// function; returns the estimate, writes an error estimate if asked.
cdouble adapt_integrate(const std::function<cdouble(double)>& f, double a, double b,
                        double rel_tol = 1e-12, double abs_tol = 1e-14,
                        double* err_out = nullptr);

/// Deterministic pairwise reduction of f(i) over [0, count).
template <class T, class F>
T pairwise_reduce(std::size_t count, const F& f, const T& zero) {
  if (count == 0) return zero;
  struct Rec {
    const F& f;
    T run(std::size_t lo, std::size_t hi) const {
      if (hi - lo <= 8) {
        T acc = f(lo);
        for (std::size_t i = lo + 1; i < hi; ++i) acc = acc + f(i);
        return acc;
      }
      std::size_t mid = lo + (hi - lo) / 2;
      return run(lo, mid) + run(mid, hi);
    }
  } rec{f};
  return rec.run(0, count);
}

/// Quadrature rule on the unit sphere S^{p-1} in R^p. Deterministic
/// product constructions for p in {2, 3, 4, 6}; seeded Monte Carlo
/// with normalized Gaussian directions otherwise.
struct SphereRule {
  int p = 0;
  int degree = 0;      // declared polynomial exactness (deterministic rules)
  bool monte_carlo = false;
  std::vector<Eigen::VectorXd> nodes;
  std::vector<double> weights;  // sum to sigma_p

  double weight_sum() const;
};

SphereRule sphere_rule(int p, int degree, int mc_samples = 0, std::uint64_t seed = 0);

/// Exact value of the monomial integral int_{S^{p-1}} prod x_i^{a_i} dS.
double sphere_monomial_integral(const std::vector<int>& exponents);

/// Integral of f over [0, inf) against exponential decay e^{-c rho}
/// hidden inside f itself; graded Gauss-Legendre panels on
/// [0, 40/c] plus an analytically bounded tail estimate.
struct RadialResult {
  cdouble value{0.0, 0.0};
  double tail_bound = 0.0;
};
RadialResult integrate_radial_decay(const std::function<cdouble(double)>& f, double c,
                                    int panel_order = 20, double rho_max_scale = 40.0);

/// Multivector-valued version with pairwise panel reduction.
Cmv integrate_radial_decay_mv(int n_pairs, const std::function<Cmv(double)>& f, double c,
                              int panel_order = 20, double rho_max_scale = 40.0);

/// Integral of f over [lower, inf) for algebraically decaying f,
/// via the substitution s = lower + t/(1-t) and panelled Gauss nodes.
cdouble integrate_algebraic_tail(const std::function<cdouble(double)>& f, double lower,
                                 int panels = 8, int order = 24);

/// Residual of the Funk-Hecke identity for a zonal kernel F, a
/// spherical harmonic Y of degree k on S^{p-1} and a pole xi.
double funk_hecke_residual(const std::function<cdouble(double)>& F, int k, int p,
                           const std::function<double(const Eigen::VectorXd&)>& Y,
                           const Eigen::VectorXd& xi, const SphereRule& rule);

/// Which plane-wave moment of the kernel integral to compute.
enum class PlaneWaveMoment { I0, I1, I2, I3, I4 };

struct PlaneWaveIntegralOptions {
  int sphere_degree = 40;
  int radial_order = 20;
  int mc_samples = 0;          // used when no deterministic rule exists
  std::uint64_t seed = 1234;
  double* mc_stderr = nullptr; // filled for Monte Carlo runs
};

/// Direct numerical value of
///   int_{R^{2n}} e^{i sum (x_{n+j} u_j - x_j u_{n+j}) - x0 |w|} F(w) dV(w)
/// with F one of {1, w/|w|, wdag/|w|, wdag w/|w|^2, w wdag/|w|^2},
/// computed in polar form: radial decay rule times sphere rule.
Cmv integrate_plane_wave_moment(int n_pairs, const Point& p, PlaneWaveMoment which,
                                const PlaneWaveIntegralOptions& opts = {});

/// One node of a discretized boundary surface in R^{2n+1}.
struct SurfaceNode {
  Point x;
  Eigen::VectorXd normal;  // (nu_0, nu) in R^{2n+1}
  double weight = 0.0;
};

/// Tagged discretized boundary surface.
struct BoundarySurface {
  enum class Kind { Sphere, CylinderSide, CylinderCap };
  Kind kind;
  int n_pairs = 0;
  std::vector<SurfaceNode> nodes;
  double measure = 0.0;  // exact surface measure, for validation
};

/// Sphere boundaries use the deterministic rules where they exist
/// (p = 3 at n = 1); n = 2 lives on S^5 and needs mc_samples.
BoundarySurface sphere_surface(int n_pairs, const Point& center, double radius, int degree,
                               int mc_samples = 0, std::uint64_t seed = 0);
BoundarySurface cylinder_cap_surface(int n_pairs, double a, double R, int radial_order,
                                     int sphere_degree, bool normal_up = true);
BoundarySurface cylinder_side_surface(int n_pairs, double a, double R, double b,
                                      int panel_order, int sphere_degree);

/// Weighted sum of the integrand over the surface nodes, pairwise
/// reduced; throws on non-finite integrand values.
Cmv surface_integral(const BoundarySurface& S,
                     const std::function<Cmv(const Point&, const Eigen::VectorXd&)>& integrand);

/// Volume rule for a ball in R^{2n+1} (polar: radial x sphere).
struct VolumeNode {
  Point x;
  double weight = 0.0;
};
std::vector<VolumeNode> ball_volume_nodes(int n_pairs, const Point& center, double radius,
                                          int radial_order, int sphere_degree);

}  // namespace hsub
