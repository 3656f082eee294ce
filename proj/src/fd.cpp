#include "hsub/fd.hpp"

#include <cmath>
#include <stdexcept>

namespace hsub {

namespace {

const cdouble kHalf(0.5, 0.0);
const cdouble kHalfI(0.0, 0.5);

// evaluate the field with coordinate `coord` shifted by t; coord 0 is
// x0, 1..2n the x components, 2n+1 is y0 (full mode only)
Cmv eval_shifted(const FieldFn& f, const Point& p, int coord, double t) {
  const int n2 = int(p.x.size());
  if (f.full_mode()) {
    cdouble z0(p.x0, 0.0);
    Eigen::VectorXd x = p.x;
    if (coord == 0)
      z0 += t;
    else if (coord <= n2)
      x(coord - 1) += t;
    else
      z0 += cdouble(0.0, t);
    return f.f_full(z0, x);
  }
  Point q = p;
  if (coord == 0)
    q.x0 += t;
  else if (coord <= n2)
    q.x(coord - 1) += t;
  else
    throw std::invalid_argument("y0 derivative requested for y0-independent field");
  return f.f(q);
}

Cmv central2(const FieldFn& f, const Point& p, int coord, double h) {
  Cmv d = eval_shifted(f, p, coord, h) - eval_shifted(f, p, coord, -h);
  return d * cdouble(0.5 / h, 0.0);
}

Cmv central4(const FieldFn& f, const Point& p, int coord, double h) {
  Cmv d = (eval_shifted(f, p, coord, -2 * h) - eval_shifted(f, p, coord, 2 * h)) +
          (eval_shifted(f, p, coord, h) - eval_shifted(f, p, coord, -h)) * cdouble(8.0, 0.0);
  return d * cdouble(1.0 / (12.0 * h), 0.0);
}

Cmv fd_partial(const FieldFn& f, const Point& p, int coord, const FDConfig& cfg) {
  switch (cfg.scheme) {
    case FDConfig::Scheme::Central2:
      return central2(f, p, coord, cfg.h);
    case FDConfig::Scheme::Central4:
      return central4(f, p, coord, cfg.h);
    case FDConfig::Scheme::Richardson: {
      Cmv dh = central2(f, p, coord, cfg.h);
      Cmv dh2 = central2(f, p, coord, 0.5 * cfg.h);
      return (dh2 * cdouble(4.0, 0.0) - dh) * cdouble(1.0 / 3.0, 0.0);
    }
  }
  throw std::logic_error("fd_partial");
}

Cmv second_difference(const FieldFn& f, const Point& p, int coord, double h) {
  Cmv d = eval_shifted(f, p, coord, h) + eval_shifted(f, p, coord, -h) -
          f.eval(p) * cdouble(2.0, 0.0);
  return d * cdouble(1.0 / (h * h), 0.0);
}

}  // namespace

DiracSymbols::DiracSymbols(int n_pairs)
    : n(n_pairs), f0(witt_c(n_pairs, 0, false)), f0d(witt_c(n_pairs, 0, true)) {
  Cmv pp = f0 * f0d;
  Cmv pm = f0d * f0;
  for (int j = 1; j <= n; ++j) {
    fj.push_back(witt_c(n, j, false));
    fjd.push_back(witt_c(n, j, true));
    left_zbar.push_back(pp * fj.back());
    left_z.push_back(pm * fjd.back());
  }
}

std::vector<Cmv> fd_gradient(const FieldFn& f, const Point& p, const FDConfig& cfg) {
  const int n2 = int(p.x.size());
  std::vector<Cmv> g;
  g.reserve(n2 + 2);
  for (int c = 0; c <= n2; ++c) g.push_back(fd_partial(f, p, c, cfg));
  if (f.full_mode()) g.push_back(fd_partial(f, p, n2 + 1, cfg));
  return g;
}

Cmv apply_D_left(const FieldFn& f, const Point& p, const FDConfig& cfg) {
  const int n = f.n;
  DiracSymbols sym(n);
  auto g = fd_gradient(f, p, cfg);
  Cmv dz0 = g[0] * kHalf;     // d/dz0 f
  Cmv dzb0 = g[0] * kHalf;    // d/dzbar0 f
  if (f.full_mode()) {
    Cmv iy = g[2 * n + 1] * kHalfI;
    dz0 = dz0 - iy;
    dzb0 = dzb0 + iy;
  }
  Cmv out = sym.f0 * dzb0 + sym.f0d * dz0;
  for (int j = 1; j <= n; ++j) {
    Cmv dzj = (g[j] - g[n + j] * cdouble(0.0, 1.0)) * kHalf;
    Cmv dzbj = (g[j] + g[n + j] * cdouble(0.0, 1.0)) * kHalf;
    out = out + sym.left_zbar[j - 1] * dzbj + sym.left_z[j - 1] * dzj;
  }
  out.normalize();
  return out;
}

Cmv apply_D_right(const FieldFn& f, const Point& p, const FDConfig& cfg) {
  const int n = f.n;
  DiracSymbols sym(n);
  auto g = fd_gradient(f, p, cfg);
  Cmv dz0 = g[0] * kHalf;
  Cmv dzb0 = g[0] * kHalf;
  if (f.full_mode()) {
    Cmv iy = g[2 * n + 1] * kHalfI;
    dz0 = dz0 - iy;
    dzb0 = dzb0 + iy;
  }
  Cmv out = dzb0 * sym.f0 + dz0 * sym.f0d;
  for (int j = 1; j <= n; ++j) {
    Cmv dzj = (g[j] - g[n + j] * cdouble(0.0, 1.0)) * kHalf;
    Cmv dzbj = (g[j] + g[n + j] * cdouble(0.0, 1.0)) * kHalf;
    out = out + dzbj * sym.left_zbar[j - 1] + dzj * sym.left_z[j - 1];
  }
  out.normalize();
  return out;
}

Cmv apply_dirac_z(const FieldFn& f, const Point& p, const FDConfig& cfg) {
  const int n = f.n;
  DiracSymbols sym(n);
  Cmv out(n);
  for (int j = 1; j <= n; ++j) {
    Cmv dzj = (fd_partial(f, p, j, cfg) - fd_partial(f, p, n + j, cfg) * cdouble(0.0, 1.0)) * kHalf;
    out = out + sym.fjd[j - 1] * dzj;
  }
  out.normalize();
  return out;
}

Cmv apply_dirac_zdag(const FieldFn& f, const Point& p, const FDConfig& cfg) {
  const int n = f.n;
  DiracSymbols sym(n);
  Cmv out(n);
  for (int j = 1; j <= n; ++j) {
    Cmv dzbj = (fd_partial(f, p, j, cfg) + fd_partial(f, p, n + j, cfg) * cdouble(0.0, 1.0)) * kHalf;
    out = out + sym.fj[j - 1] * dzbj;
  }
  out.normalize();
  return out;
}

Cmv laplacian_2n(const FieldFn& f, const Point& p, const FDConfig& cfg) {
  const int n2 = int(p.x.size());
  Cmv out(f.n);
  for (int c = 1; c <= n2; ++c) out = out + second_difference(f, p, c, cfg.h4);
  out.normalize();
  return out;
}

Cmv apply_classical_D_left(const FieldFn& f, const std::vector<int>& gens, const Point& p,
                           const FDConfig& cfg) {
  Cmv out = fd_partial(f, p, 0, cfg);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Cmv e = Cmv::blade(f.n, BladeMask(1) << gens[k], cdouble(1.0, 0.0));
    out = out + e * fd_partial(f, p, int(k) + 1, cfg);
  }
  out.normalize();
  return out;
}

Cmv apply_classical_D_right(const FieldFn& f, const std::vector<int>& gens, const Point& p,
                            const FDConfig& cfg) {
  Cmv out = fd_partial(f, p, 0, cfg);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Cmv e = Cmv::blade(f.n, BladeMask(1) << gens[k], cdouble(1.0, 0.0));
    out = out + fd_partial(f, p, int(k) + 1, cfg) * e;
  }
  out.normalize();
  return out;
}

BiharmonicResult biharmonic_terms(const FieldFn& f, const Point& p, const FDConfig& cfg) {
  const double h = cfg.h4;
  const int n2 = int(p.x.size());
  // Delta_2 g = d^2/dx0^2 g (+ d^2/dy0^2 g in full mode), as a field
  auto delta2_field = [&](const FieldFn& g) {
    FieldFn out;
    out.n = g.n;
    if (g.full_mode()) {
      out.f_full = [&g, h](cdouble z0, const Eigen::VectorXd& x) {
        auto at = [&](cdouble z) { return g.f_full(z, x); };
        Cmv dx0 = at(z0 + h) + at(z0 - h) - at(z0) * cdouble(2.0, 0.0);
        Cmv dy0 = at(z0 + cdouble(0.0, h)) + at(z0 - cdouble(0.0, h)) - at(z0) * cdouble(2.0, 0.0);
        return (dx0 + dy0) * cdouble(1.0 / (h * h), 0.0);
      };
    } else {
      out.f = [&g, h](const Point& q) {
        Point qp = q, qm = q;
        qp.x0 += h;
        qm.x0 -= h;
        return (g.f(qp) + g.f(qm) - g.f(q) * cdouble(2.0, 0.0)) * cdouble(1.0 / (h * h), 0.0);
      };
    }
    return out;
  };
  FieldFn d2 = delta2_field(f);
  FDConfig inner = cfg;
  Cmv term1 = delta2_field(d2).eval(p);    // Delta_2^2 f
  Cmv term2 = laplacian_2n(d2, p, inner);  // Delta_2 Delta_{2n} f
  (void)n2;
  BiharmonicResult out;
  out.residual = (term1 + term2).norm();
  out.scale = std::max(term1.norm() + term2.norm(), 1e-300);
  return out;
}

double biharmonic_residual(const FieldFn& f, const Point& p, const FDConfig& cfg) {
  return biharmonic_terms(f, p, cfg).residual;
}

double system_equivalence_residual(const FieldFn& f, const Point& p, const FDConfig& cfg) {
  const int n = f.n;
  DiracSymbols sym(n);
  Cmv direct = apply_D_left(f, p, cfg);

  // component fields of the splitting; decompose is linear so it
  // commutes with the finite differences
  auto part_field = [&](int which) {
    FieldFn g;
    g.n = n;
    if (f.full_mode()) {
      g.f_full = [&f, which](cdouble z0, const Eigen::VectorXd& x) {
        auto parts = decompose_ABCD(f.f_full(z0, x));
        switch (which) {
          case 0: return parts.A;
          case 1: return parts.B;
          case 2: return parts.C;
          default: return parts.D;
        }
      };
    } else {
      g.f = [&f, which](const Point& q) {
        auto parts = decompose_ABCD(f.f(q));
        switch (which) {
          case 0: return parts.A;
          case 1: return parts.B;
          case 2: return parts.C;
          default: return parts.D;
        }
      };
    }
    return g;
  };

  FieldFn A = part_field(0), B = part_field(1), C = part_field(2), D = part_field(3);
  auto dz0_of = [&](const FieldFn& g) {
    Cmv gx = fd_partial(g, p, 0, cfg) * kHalf;
    if (!f.full_mode()) return gx;
    Cmv gy = fd_partial(g, p, 2 * n + 1, cfg) * kHalfI;
    return gx - gy;
  };
  auto dzb0_of = [&](const FieldFn& g) {
    Cmv gx = fd_partial(g, p, 0, cfg) * kHalf;
    if (!f.full_mode()) return gx;
    Cmv gy = fd_partial(g, p, 2 * n + 1, cfg) * kHalfI;
    return gx + gy;
  };

  auto sumAD_z = apply_dirac_z(A, p, cfg) + apply_dirac_z(D, p, cfg);
  auto sumAD_zb0 = dzb0_of(A) + dzb0_of(D);

  Cmv assembled = sym.f0d * (dz0_of(A) - apply_dirac_z(C, p, cfg)) +
                  sym.f0d * sym.f0 * (dz0_of(B) + sumAD_z) +
                  sym.f0 * (sumAD_zb0 - apply_dirac_zdag(B, p, cfg)) +
                  sym.f0 * sym.f0d * (dzb0_of(C) + apply_dirac_zdag(A, p, cfg));
  return (assembled - direct).norm();
}

}  // namespace hsub
