#pragma once

#include <functional>
#include <vector>

#include "hsub/clifford.hpp"
#include "hsub/witt.hpp"

namespace hsub {

/// Finite-difference configuration. Central differences with one
/// Richardson extrapolation by default; h = 1e-3 suits O(1)-scaled
/// inputs, h4 = 1e-2 is used for the fourth-order stencils.
struct FDConfig {
  enum class Scheme { Central2, Central4, Richardson };
  double h = 1e-3;
  double h4 = 1e-2;
  Scheme scheme = Scheme::Richardson;
};

/// Field on R^{2n+1} (y0-independent mode) or on C x R^{2n} (full
/// mode, z0 = x0 + i y0). Full mode is active when f_full is set.
struct FieldFn {
  int n = 1;
  std::function<Cmv(const Point&)> f;
  std::function<Cmv(cdouble, const Eigen::VectorXd&)> f_full;

  bool full_mode() const { return bool(f_full); }
  Cmv eval(const Point& p) const { return full_mode() ? f_full(cdouble(p.x0, 0.0), p.x) : f(p); }
};

/// Precomputed Witt symbols of the submonogenic operator for one n.
struct DiracSymbols {
  int n;
  Cmv f0, f0d;
  std::vector<Cmv> left_zbar;   // f0 f0d f_j
  std::vector<Cmv> left_z;      // f0d f0 f_j^dagger
  std::vector<Cmv> fj, fjd;     // f_j, f_j^dagger

  explicit DiracSymbols(int n_pairs);
};

/// First partial derivatives of the field at p: index 0 is x0, then
/// the 2n coordinates of x; in full mode an extra slot for y0 is
/// appended at the end.
std::vector<Cmv> fd_gradient(const FieldFn& f, const Point& p, const FDConfig& cfg);

/// D f with D = f0 d/dzbar0 + f0^dag d/dz0 + f0 f0^dag d/dzdag
/// + f0^dag f0 d/dz; in y0-independent mode d/dz0 = d/dzbar0 = (1/2) d/dx0.
Cmv apply_D_left(const FieldFn& f, const Point& p, const FDConfig& cfg);

/// The dual equation: derivatives multiply the operator symbols from
/// the right, f D = (dzbar0 f) f0 + (dz0 f) f0^dag
/// + sum (dzbar_j f) f0 f0^dag f_j + sum (dz_j f) f0^dag f0 f_j^dag.
Cmv apply_D_right(const FieldFn& f, const Point& p, const FDConfig& cfg);

/// d/dz f = sum f_j^dag dz_j f and d/dzdag f = sum f_j dzbar_j f.
Cmv apply_dirac_z(const FieldFn& f, const Point& p, const FDConfig& cfg);
Cmv apply_dirac_zdag(const FieldFn& f, const Point& p, const FDConfig& cfg);

/// Laplacian over the 2n x-coordinates by second differences.
Cmv laplacian_2n(const FieldFn& f, const Point& p, const FDConfig& cfg);

/// Classical generalized Cauchy-Riemann operator d/dx0 + sum e_g d/dx_g
/// over an explicit generator set; x holds one coordinate per generator.
Cmv apply_classical_D_left(const FieldFn& f, const std::vector<int>& gens, const Point& p,
                           const FDConfig& cfg);
Cmv apply_classical_D_right(const FieldFn& f, const std::vector<int>& gens, const Point& p,
                            const FDConfig& cfg);

/// || Delta_2 (Delta_2 + Delta_{2n}) f || by nested second differences;
/// Delta_2 degenerates to d^2/dx0^2 in y0-independent mode. The scale
/// is the size of the two fourth-order terms before cancellation.
struct BiharmonicResult {
  double residual = 0.0;
  double scale = 0.0;
};
BiharmonicResult biharmonic_terms(const FieldFn& f, const Point& p, const FDConfig& cfg);
double biharmonic_residual(const FieldFn& f, const Point& p, const FDConfig& cfg);

/// Assembles D f from the component systems of the A + f0 B + f0^dag C
/// + f0^dag f0 D splitting and returns the norm of the difference from
/// the directly computed D f; an algebraic identity for any C^1 field.
double system_equivalence_residual(const FieldFn& f, const Point& p, const FDConfig& cfg);

}  // namespace hsub
