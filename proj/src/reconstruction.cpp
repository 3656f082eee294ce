#include "hsub/reconstruction.hpp"

#include <cmath>

namespace hsub {

StokesResult stokes_residual(const FieldFn& F, const FieldFn& G, const Point& center,
                             double radius, const StokesOptions& opts) {
  const int n = F.n;
  BoundarySurface S = sphere_surface(n, center, radius, opts.surface_degree);
  Cmv boundary = surface_integral(S, [&](const Point& x, const Eigen::VectorXd& nu) {
    Cmv nel = normal_element(n, nu(0), nu.tail(2 * n));
    return F.eval(x) * nel * G.eval(x);
  });

  auto nodes = ball_volume_nodes(n, center, radius, opts.volume_radial, opts.volume_sphere_degree);
  Cmv volume = pairwise_reduce<Cmv>(
      nodes.size(),
      [&](std::size_t i) {
        const Point& q = nodes[i].x;
        Cmv t = apply_D_right(F, q, opts.fd) * G.eval(q) + F.eval(q) * apply_D_left(G, q, opts.fd);
        return t * cdouble(nodes[i].weight, 0.0);
      },
      Cmv::zero(n));
  volume = volume * cdouble(2.0, 0.0);
  volume.normalize();
  return {boundary, volume, (boundary - volume).norm()};
}

Cmv reconstruct_dx0(const FieldFn& F, const Point& center, double R, const Point& u,
                    int surface_degree, int mc_samples, std::uint64_t seed) {
  const int n = F.n;
  double du0 = u.x0 - center.x0;
  if (std::sqrt((u.x - center.x).squaredNorm() + du0 * du0) >= R)
    throw std::invalid_argument("reconstruct_dx0: evaluation point not inside the ball");
  BoundarySurface S = sphere_surface(n, center, R, surface_degree, mc_samples, seed);
  return surface_integral(S, [&](const Point& x, const Eigen::VectorXd& nu) {
    Point d(x.x0 - u.x0, x.x - u.x);
    Cmv nel = normal_element(n, nu(0), nu.tail(2 * n));
    return derivative_kernel(n, d) * nel * F.eval(x);
  });
}

CylinderResult reconstruct_F_cylinder(const FieldFn& F, double a, double R, double b,
                                      const Point& u, double decay_rate,
                                      const CylinderOptions& opts) {
  const int n = F.n;
  if (!(u.x0 < a && u.r() < R)) throw std::invalid_argument("reconstruct_F_cylinder: u outside");
  if (!(b < u.x0)) throw std::invalid_argument("reconstruct_F_cylinder: need b < u0");

  auto integrand = [&](const Point& x, const Eigen::VectorXd& nu) {
    Point d(x.x0 - u.x0, x.x - u.x);
    Cmv nel = normal_element(n, nu(0), nu.tail(2 * n));
    return cauchy_kernel(n, d) * nel * F.eval(x);
  };

  BoundarySurface cap = cylinder_cap_surface(n, a, R, opts.cap_radial, opts.sphere_degree);
  BoundarySurface side = cylinder_side_surface(n, a, R, b, opts.panel_order, opts.sphere_degree);
  Cmv total = surface_integral(cap, integrand) + surface_integral(side, integrand);

  // Tail below x0 = b: |E n F| is sampled on the ring at x0 = b and the
  // field decay e^{decay_rate x0} integrates to e^{decay_rate b}/rate.
  SphereRule ring = sphere_rule(2 * n, 12);
  double m_ring = 0.0;
  for (std::size_t i = 0; i < ring.nodes.size(); ++i) {
    Point x(b, R * ring.nodes[i]);
    Eigen::VectorXd nu = Eigen::VectorXd::Zero(2 * n + 1);
    nu.tail(2 * n) = ring.nodes[i];
    Point d(x.x0 - u.x0, x.x - u.x);
    Cmv nel = normal_element(n, nu(0), nu.tail(2 * n));
    Cmv ker = cauchy_kernel(n, d) * nel;
    double decay_here = std::exp(decay_rate * b);
    m_ring = std::max(m_ring, ker.norm() * F.eval(x).norm() / decay_here);
  }
  double circumference = sigma_sphere(2 * n) * std::pow(R, 2 * n - 1);
  double tail = opts.tail_safety * circumference * m_ring * std::exp(decay_rate * b) / decay_rate;
  if (tail > opts.tail_budget)
    throw std::runtime_error("reconstruct_F_cylinder: tail bound exceeds the budget");

  return {-total, tail};
}

Cmv eps_sphere_integral(const FieldFn& F, const Point& u, double eps, int surface_degree) {
  const int n = F.n;
  BoundarySurface S = sphere_surface(n, u, eps, surface_degree);
  return surface_integral(S, [&](const Point& x, const Eigen::VectorXd& nu) {
    Point d(x.x0 - u.x0, x.x - u.x);
    Cmv nel = normal_element(n, nu(0), nu.tail(2 * n));
    return derivative_kernel(n, d) * nel * F.eval(x);
  });
}

Cmv local_limit_combination(const FieldFn& F, const Point& u, const FDConfig& cfg) {
  const int n = F.n;
  Cmv f0 = witt_c(n, 0, false), f0d = witt_c(n, 0, true);
  Cmv beta = beta_element<cdouble>(n);
  Cmv two_beta = beta * cdouble(2.0, 0.0);
  Cmv dx0 = fd_gradient(F, u, cfg)[0];
  Cmv dz = apply_dirac_z(F, u, cfg);
  Cmv dzd = apply_dirac_zdag(F, u, cfg);

  Cmv head = f0d * f0 * cdouble(2.0 * n, 0.0) + two_beta * (f0 * f0d - f0d * f0);
  Cmv mid = (Cmv::scalar(n, cdouble(2.0 * n + 1.0, 0.0)) - two_beta) * f0 * dz * cdouble(2.0, 0.0);
  Cmv tail = (Cmv::scalar(n, cdouble(1.0, 0.0)) + two_beta) * f0d * dzd * cdouble(2.0, 0.0);
  Cmv out = head * dx0 - mid - tail;
  return out * cdouble(1.0 / (2.0 * n + 1.0), 0.0);
}

}  // namespace hsub
