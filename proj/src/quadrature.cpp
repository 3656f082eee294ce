#include "hsub/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "hsub/special.hpp"

namespace hsub {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric Jacobi
// matrix of the monic recurrence, weights mu0 * v0^2.
GaussRule golub_welsch(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta_sq, double mu0) {
  const int n = int(alpha.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = alpha(i);
    if (i + 1 < n) {
      double b = std::sqrt(beta_sq(i + 1));
      J(i, i + 1) = b;
      J(i + 1, i) = b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussRule r;
  r.nodes = es.eigenvalues();
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double v0 = es.eigenvectors()(0, i);
    r.weights(i) = mu0 * v0 * v0;
  }
  return r;
}

std::mutex g_rule_mutex;

}  // namespace

GaussRule gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lk(g_rule_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Eigen::VectorXd a = Eigen::VectorXd::Zero(n), b2 = Eigen::VectorXd::Zero(n);
  for (int k = 1; k < n; ++k) b2(k) = double(k * k) / double(4 * k * k - 1);
  GaussRule r = golub_welsch(a, b2, 2.0);
  cache[n] = r;
  return r;
}

GaussRule gauss_jacobi(int n, double a, double b) {
  Eigen::VectorXd al(n), b2 = Eigen::VectorXd::Zero(n);
  double ab = a + b;
  al(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    double d = 2.0 * k + ab;
    al(k) = (b * b - a * a) / (d * (d + 2.0));
    if (k == 1)
      b2(1) = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    else
      b2(k) = 4.0 * k * (k + a) * (k + b) * (k + ab) /
              (d * d * (d + 1.0) * (d - 1.0));
  }
  double mu0 = std::pow(2.0, ab + 1.0) * beta_fn(a + 1.0, b + 1.0);
  return golub_welsch(al, b2, mu0);
}

GaussRule gauss_laguerre(int n, double a) {
  Eigen::VectorXd al(n), b2 = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < n; ++k) {
    al(k) = 2.0 * k + a + 1.0;
    if (k >= 1) b2(k) = k * (k + a);
  }
  return golub_welsch(al, b2, std::tgamma(a + 1.0));
}

namespace {

// Gauss-Kronrod 15(7) node/weight table on [-1, 1] (positive half).
constexpr double kK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GKResult {
  cdouble value;
  double err;
};

GKResult gk15(const std::function<cdouble(double)>& f, double a, double b) {
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  cdouble fk[8];
  cdouble sum_k = 0.0, sum_g = 0.0;
  for (int i = 0; i < 8; ++i) {
    double x = h * kK15Nodes[i];
    cdouble v = (i == 7) ? f(c) : f(c - x) + f(c + x);
    fk[i] = v;
    sum_k += kK15Weights[i] * v;
  }
  // Gauss-7 uses nodes 1, 3, 5, 7 of the Kronrod set
  sum_g = kG7Weights[0] * fk[1] + kG7Weights[1] * fk[3] + kG7Weights[2] * fk[5] +
          kG7Weights[3] * fk[7];
  GKResult r;
  r.value = h * sum_k;
  double diff = std::abs(h * (sum_k - sum_g));
  r.err = std::pow(200.0 * diff, 1.5);
  if (!std::isfinite(r.err) || r.err > diff) r.err = diff;
  return r;
}

void adapt_rec(const std::function<cdouble(double)>& f, double a, double b, double tol,
               int depth, cdouble& acc, double& erra) {
  GKResult r = gk15(f, a, b);
  if (depth > 48 || r.err <= tol) {
    acc += r.value;
    erra += r.err;
    return;
  }
  double c = 0.5 * (a + b);
  adapt_rec(f, a, c, tol * 0.6, depth + 1, acc, erra);
  adapt_rec(f, c, b, tol * 0.6, depth + 1, acc, erra);
}

}  // namespace

cdouble adapt_integrate(const std::function<cdouble(double)>& f, double a, double b,
                        double rel_tol, double abs_tol, double* err_out) {
  GKResult first = gk15(f, a, b);
  double tol = std::max(abs_tol, rel_tol * std::abs(first.value));
  cdouble acc = 0.0;
  double err = 0.0;
  adapt_rec(f, a, b, tol, 0, acc, err);
  if (err_out) *err_out = err;
  return acc;
}

double SphereRule::weight_sum() const {
  return pairwise_reduce<double>(weights.size(), [&](std::size_t i) { return weights[i]; }, 0.0);
}

namespace {

void sphere_rule_s1(SphereRule& r, int degree) {
  int N = std::max(4, 2 * degree + 4);
  for (int k = 0; k < N; ++k) {
    double phi = 2.0 * M_PI * k / N;
    Eigen::VectorXd v(2);
    v << std::cos(phi), std::sin(phi);
    r.nodes.push_back(v);
    r.weights.push_back(2.0 * M_PI / N);
  }
}

void sphere_rule_s2(SphereRule& r, int degree) {
  int ng = degree / 2 + 2;
  int np = std::max(4, degree + 4);
  GaussRule gl = gauss_legendre(ng);
  for (int i = 0; i < ng; ++i) {
    double mu = gl.nodes(i);        // cos(theta)
    double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    for (int k = 0; k < np; ++k) {
      double phi = 2.0 * M_PI * k / np;
      Eigen::VectorXd v(3);
      v << s * std::cos(phi), s * std::sin(phi), mu;
      r.nodes.push_back(v);
      r.weights.push_back(gl.weights(i) * 2.0 * M_PI / np);
    }
  }
}

// S^3 via the double-angle parametrization: with u = sin^2(psi)
// uniform on [0, 1], dS = (1/2) du dphi1 dphi2.
void sphere_rule_s3(SphereRule& r, int degree) {
  int nu = degree / 2 + 2;
  int np = std::max(4, degree + 4);
  GaussRule gl = gauss_legendre(nu);
  for (int i = 0; i < nu; ++i) {
    double u = 0.5 * (gl.nodes(i) + 1.0);
    double wu = 0.5 * gl.weights(i);
    double cu = std::sqrt(1.0 - u), su = std::sqrt(u);
    for (int k1 = 0; k1 < np; ++k1) {
      double p1 = 2.0 * M_PI * k1 / np;
      for (int k2 = 0; k2 < np; ++k2) {
        double p2 = 2.0 * M_PI * k2 / np;
        Eigen::VectorXd v(4);
        v << cu * std::cos(p1), cu * std::sin(p1), su * std::cos(p2), su * std::sin(p2);
        r.nodes.push_back(v);
        r.weights.push_back(0.5 * wu * (2.0 * M_PI / np) * (2.0 * M_PI / np));
      }
    }
  }
}

// S^5 as three phase circles over the simplex v1+v2+v3 = 1, where the
// simplex measure is uniform: dS = (1/4) dv1 dv2 dphi1 dphi2 dphi3.
// Duffy map v1 = s t, v2 = s (1-t), v3 = 1-s with Jacobian s.
void sphere_rule_s5(SphereRule& r, int degree) {
  int ns = degree / 2 + 2;
  int np = std::max(4, degree + 4);
  GaussRule gs = gauss_jacobi(ns, 0.0, 1.0);  // weight (1+x) on [-1,1] -> s on [0,1]
  GaussRule gt = gauss_legendre(ns);
  for (int i = 0; i < ns; ++i) {
    double s = 0.5 * (gs.nodes(i) + 1.0);
    // (1+x)dx on [-1,1] maps to 4 s ds on [0,1]
    double ws = 0.25 * gs.weights(i);
    for (int j = 0; j < ns; ++j) {
      double t = 0.5 * (gt.nodes(j) + 1.0);
      double wt = 0.5 * gt.weights(j);
      double v1 = s * t, v2 = s * (1.0 - t), v3 = 1.0 - s;
      double r1 = std::sqrt(v1), r2 = std::sqrt(v2), r3 = std::sqrt(v3);
      for (int a = 0; a < np; ++a) {
        double pa = 2.0 * M_PI * a / np;
        for (int b = 0; b < np; ++b) {
          double pb = 2.0 * M_PI * b / np;
          for (int c = 0; c < np; ++c) {
            double pc = 2.0 * M_PI * c / np;
            Eigen::VectorXd v(6);
            v << r1 * std::cos(pa), r1 * std::sin(pa), r2 * std::cos(pb), r2 * std::sin(pb),
                r3 * std::cos(pc), r3 * std::sin(pc);
            r.nodes.push_back(v);
            r.weights.push_back(0.25 * ws * wt * std::pow(2.0 * M_PI / np, 3));
          }
        }
      }
    }
  }
}

}  // namespace

SphereRule sphere_rule(int p, int degree, int mc_samples, std::uint64_t seed) {
  if (p < 2) throw std::invalid_argument("sphere_rule: p < 2");
  SphereRule r;
  r.p = p;
  r.degree = degree;
  switch (p) {
    case 2: sphere_rule_s1(r, degree); return r;
    case 3: sphere_rule_s2(r, degree); return r;
    case 4: sphere_rule_s3(r, degree); return r;
    case 6: sphere_rule_s5(r, degree); return r;
    default: break;
  }
  if (mc_samples <= 0)
    throw std::invalid_argument("sphere_rule: no deterministic rule for this p; pass mc_samples");
  r.monte_carlo = true;
  r.degree = 0;
  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng]() { return double(rng() >> 11) * 0x1.0p-53; };
  const double sp = sigma_sphere(p);
  for (int i = 0; i < mc_samples; ++i) {
    Eigen::VectorXd v(p);
    for (int k = 0; k < p; k += 2) {
      double u1 = std::max(uniform01(), 1e-300), u2 = uniform01();
      double rad = std::sqrt(-2.0 * std::log(u1));
      v(k) = rad * std::cos(2.0 * M_PI * u2);
      if (k + 1 < p) v(k + 1) = rad * std::sin(2.0 * M_PI * u2);
    }
    v.normalize();
    r.nodes.push_back(v);
    r.weights.push_back(sp / mc_samples);
  }
  return r;
}

double sphere_monomial_integral(const std::vector<int>& exponents) {
  const int p = int(exponents.size());
  int total = 0;
  for (int a : exponents) {
    if (a < 0) throw std::invalid_argument("sphere_monomial_integral: negative exponent");
    if (a % 2 == 1) return 0.0;
    total += a;
  }
  double num = 2.0;
  for (int a : exponents) num *= std::tgamma(0.5 * (a + 1));
  return num / std::tgamma(0.5 * (total + p));
}

namespace {

// geometric panels 0, w, 2w, 4w, ... covering [0, rho_max]
std::vector<double> graded_panels(double rho_max, double first_width) {
  std::vector<double> cuts{0.0};
  double w = first_width;
  double x = 0.0;
  while (x < rho_max) {
    x = std::min(rho_max, x + w);
    cuts.push_back(x);
    w *= 2.0;
  }
  return cuts;
}

}  // namespace

RadialResult integrate_radial_decay(const std::function<cdouble(double)>& f, double c,
                                    int panel_order, double rho_max_scale) {
  if (c <= 0.0) throw std::invalid_argument("integrate_radial_decay: need positive decay rate");
  const double rho_max = rho_max_scale / c;
  GaussRule gl = gauss_legendre(panel_order);
  auto cuts = graded_panels(rho_max, 0.5 / c);
  const std::size_t np = cuts.size() - 1;
  cdouble total = pairwise_reduce<cdouble>(
      np,
      [&](std::size_t pi) {
        double a = cuts[pi], b = cuts[pi + 1];
        double h = 0.5 * (b - a), mid = 0.5 * (a + b);
        cdouble s = 0.0;
        for (int i = 0; i < panel_order; ++i) s += gl.weights(i) * f(mid + h * gl.nodes(i));
        return h * s;
      },
      cdouble(0.0));
  RadialResult out;
  out.value = total;
  // for |f| ~ rho^q e^{-c rho} with q well below c rho_max the tail is
  // bounded by |f(rho_max)| / c up to a modest factor
  out.tail_bound = 2.0 * std::abs(f(rho_max)) / c;
  return out;
}

Cmv integrate_radial_decay_mv(int n_pairs, const std::function<Cmv(double)>& f, double c,
                              int panel_order, double rho_max_scale) {
  if (c <= 0.0) throw std::invalid_argument("integrate_radial_decay_mv: need positive decay rate");
  const double rho_max = rho_max_scale / c;
  GaussRule gl = gauss_legendre(panel_order);
  auto cuts = graded_panels(rho_max, 0.5 / c);
  const std::size_t np = cuts.size() - 1;
  return pairwise_reduce<Cmv>(
      np,
      [&](std::size_t pi) {
        double a = cuts[pi], b = cuts[pi + 1];
        double h = 0.5 * (b - a), mid = 0.5 * (a + b);
        Cmv s(n_pairs);
        for (int i = 0; i < panel_order; ++i)
          s = s + f(mid + h * gl.nodes(i)) * std::complex<double>(gl.weights(i), 0.0);
        return s * std::complex<double>(h, 0.0);
      },
      Cmv::zero(n_pairs));
}

cdouble integrate_algebraic_tail(const std::function<cdouble(double)>& f, double lower,
                                 int panels, int order) {
  GaussRule gl = gauss_legendre(order);
  // s = lower + t/(1-t), ds = dt/(1-t)^2, t in [0, 1)
  auto g = [&](double t) {
    double om = 1.0 - t;
    return f(lower + t / om) / (om * om);
  };
  cdouble acc = 0.0;
  for (int pi = 0; pi < panels; ++pi) {
    double a = double(pi) / panels, b = double(pi + 1) / panels;
    if (pi == panels - 1) b = 1.0 - 1e-12;
    double h = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < order; ++i) acc += h * gl.weights(i) * g(mid + h * gl.nodes(i));
  }
  return acc;
}

double funk_hecke_residual(const std::function<cdouble(double)>& F, int k, int p,
                           const std::function<double(const Eigen::VectorXd&)>& Y,
                           const Eigen::VectorXd& xi, const SphereRule& rule) {
  if (p < 3) throw std::invalid_argument("funk_hecke_residual: need p >= 3");
  const double lambda = 0.5 * (p - 2);
  // sphere side
  cdouble lhs = pairwise_reduce<cdouble>(
      rule.nodes.size(),
      [&](std::size_t i) {
        const Eigen::VectorXd& eta = rule.nodes[i];
        return rule.weights[i] * F(xi.dot(eta)) * Y(eta);
      },
      cdouble(0.0));
  // one-dimensional Gegenbauer-weighted side
  GaussRule gj = gauss_jacobi(96, 0.5 * (p - 3), 0.5 * (p - 3));
  cdouble one_d = 0.0;
  for (int i = 0; i < gj.nodes.size(); ++i)
    one_d += gj.weights(i) * F(gj.nodes(i)) * gegenbauer(k, lambda, gj.nodes(i));
  double ck1 = gegenbauer(k, lambda, 1.0);
  cdouble rhs = sigma_sphere(p - 1) / ck1 * Y(xi) * one_d;
  return std::abs(lhs - rhs);
}

namespace {

// F(xi) on the sphere for each moment; xi_w = sum (nu_j + i nu_{n+j}) f_j.
Cmv moment_factor(int n, const Eigen::VectorXd& nu, PlaneWaveMoment which) {
  switch (which) {
    case PlaneWaveMoment::I0:
      return Cmv::scalar(n, {1.0, 0.0});
    case PlaneWaveMoment::I1: {
      Eigen::VectorXcd v(n);
      for (int j = 0; j < n; ++j) v(j) = std::complex<double>(nu(j), nu(n + j));
      return witt_vector(n, v, false);
    }
    case PlaneWaveMoment::I2: {
      Eigen::VectorXcd v(n);
      for (int j = 0; j < n; ++j) v(j) = std::complex<double>(nu(j), nu(n + j));
      return witt_vector(n, v, true);
    }
    case PlaneWaveMoment::I3: {
      Eigen::VectorXcd v(n);
      for (int j = 0; j < n; ++j) v(j) = std::complex<double>(nu(j), nu(n + j));
      return witt_vector(n, v, true) * witt_vector(n, v, false);
    }
    case PlaneWaveMoment::I4: {
      Eigen::VectorXcd v(n);
      for (int j = 0; j < n; ++j) v(j) = std::complex<double>(nu(j), nu(n + j));
      return witt_vector(n, v, false) * witt_vector(n, v, true);
    }
  }
  throw std::logic_error("moment_factor");
}

}  // namespace

Cmv integrate_plane_wave_moment(int n_pairs, const Point& p, PlaneWaveMoment which,
                                const PlaneWaveIntegralOptions& opts) {
  if (p.x0 <= 0.0) throw std::invalid_argument("integrate_plane_wave_moment: needs x0 > 0");
  const int n = n_pairs;
  const int sp = 2 * n;  // sphere S^{2n-1} in R^{2n}
  SphereRule rule = sphere_rule(sp, opts.sphere_degree, opts.mc_samples, opts.seed);

  // phase(nu) = sum_j (x_{n+j} nu_j - x_j nu_{n+j}); the zonal factor of
  // each node is flattened into (mask, coefficient) pairs for speed
  const std::size_t ns = rule.nodes.size();
  std::vector<double> phase(ns);
  std::vector<std::uint32_t> fac_off(ns + 1, 0);
  std::vector<std::pair<BladeMask, cdouble>> fac_ent;
  for (std::size_t i = 0; i < ns; ++i) {
    const Eigen::VectorXd& nu = rule.nodes[i];
    double ph = 0.0;
    for (int j = 0; j < n; ++j) ph += p.x(n + j) * nu(j) - p.x(j) * nu(n + j);
    phase[i] = ph;
    Cmv f = moment_factor(n, nu, which);
    for (auto& [m, v] : f.coeffs()) fac_ent.emplace_back(m, v);
    fac_off[i + 1] = std::uint32_t(fac_ent.size());
  }

  // dense accumulation over blade masks for speed, panel by panel
  const double c = p.x0;
  GaussRule gl = gauss_legendre(opts.radial_order);
  auto cuts = graded_panels(40.0 / c, 0.5 / c);
  const int nblades = 1 << (2 * n + 2);

  auto panel_value = [&](std::size_t pi) {
    std::vector<cdouble> acc(nblades, cdouble(0.0, 0.0));
    double a = cuts[pi], b = cuts[pi + 1];
    double h = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < opts.radial_order; ++i) {
      double rho = mid + h * gl.nodes(i);
      double wr = h * gl.weights(i) * std::pow(rho, 2 * n - 1) * std::exp(-c * rho);
      for (std::size_t s = 0; s < ns; ++s) {
        cdouble e = std::polar(wr * rule.weights[s], rho * phase[s]);
        for (std::uint32_t k = fac_off[s]; k < fac_off[s + 1]; ++k)
          acc[fac_ent[k].first] += e * fac_ent[k].second;
      }
    }
    Cmv out(n);
    for (int m = 0; m < nblades; ++m)
      if (acc[m] != cdouble(0.0, 0.0)) out.set(BladeMask(m), acc[m]);
    return out;
  };

  Cmv total = pairwise_reduce<Cmv>(cuts.size() - 1, panel_value, Cmv::zero(n));
  total.normalize();

  if (opts.mc_stderr && rule.monte_carlo) {
    // per-node totals: radially integrate each node's zonal contribution
    // and estimate the spread of the node sample
    const int nr = opts.radial_order;
    double sum_sq = 0.0;
    std::vector<double> node_norm(ns, 0.0);
    for (std::size_t s = 0; s < ns; ++s) {
      cdouble radial(0.0, 0.0);
      for (std::size_t pi = 0; pi + 1 < cuts.size(); ++pi) {
        double a = cuts[pi], b = cuts[pi + 1];
        double h = 0.5 * (b - a), mid = 0.5 * (a + b);
        for (int i = 0; i < nr; ++i) {
          double rho = mid + h * gl.nodes(i);
          radial += h * gl.weights(i) * std::pow(rho, 2 * n - 1) *
                    std::exp(cdouble(-c * rho, rho * phase[s]));
        }
      }
      // contribution of node s is weight * radial * factor
      double fac_norm_sq = 0.0;
      for (std::uint32_t k = fac_off[s]; k < fac_off[s + 1]; ++k)
        fac_norm_sq += std::norm(fac_ent[k].second);
      node_norm[s] = rule.weights[s] * std::abs(radial) * std::sqrt(fac_norm_sq);
    }
    double mean = 0.0;
    for (double v : node_norm) mean += v;
    mean /= double(ns);
    for (double v : node_norm) sum_sq += (v - mean) * (v - mean);
    // total = sum of ns contributions; var(total) = ns * var(contribution)
    *opts.mc_stderr = std::sqrt(sum_sq / double(ns - 1) * double(ns));
  }
  return total;
}

BoundarySurface sphere_surface(int n_pairs, const Point& center, double radius, int degree,
                               int mc_samples, std::uint64_t seed) {
  const int p = 2 * n_pairs + 1;
  SphereRule rule = sphere_rule(p, degree, mc_samples, seed);
  BoundarySurface S;
  S.kind = BoundarySurface::Kind::Sphere;
  S.n_pairs = n_pairs;
  S.measure = sigma_sphere(p) * std::pow(radius, p - 1);
  const double scale = std::pow(radius, p - 1);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Eigen::VectorXd& om = rule.nodes[i];
    SurfaceNode nd;
    nd.normal = om;
    Eigen::VectorXd x = center.x + radius * om.tail(p - 1);
    nd.x = Point(center.x0 + radius * om(0), x);
    nd.weight = rule.weights[i] * scale;
    S.nodes.push_back(std::move(nd));
  }
  return S;
}

BoundarySurface cylinder_cap_surface(int n_pairs, double a, double R, int radial_order,
                                     int sphere_degree, bool normal_up) {
  const int n = n_pairs;
  const int sp = 2 * n;
  SphereRule rule = sphere_rule(sp, sphere_degree);
  GaussRule gl = gauss_legendre(radial_order);
  BoundarySurface S;
  S.kind = BoundarySurface::Kind::CylinderCap;
  S.n_pairs = n;
  S.measure = sigma_sphere(sp) * std::pow(R, sp) / sp;  // volume of the 2n-ball
  Eigen::VectorXd nu0dir = Eigen::VectorXd::Zero(2 * n + 1);
  nu0dir(0) = normal_up ? 1.0 : -1.0;
  for (int i = 0; i < radial_order; ++i) {
    double r = 0.5 * R * (gl.nodes(i) + 1.0);
    double wr = 0.5 * R * gl.weights(i) * std::pow(r, sp - 1);
    for (std::size_t s = 0; s < rule.nodes.size(); ++s) {
      SurfaceNode nd;
      nd.normal = nu0dir;
      nd.x = Point(a, r * rule.nodes[s]);
      nd.weight = wr * rule.weights[s];
      S.nodes.push_back(std::move(nd));
    }
  }
  return S;
}

BoundarySurface cylinder_side_surface(int n_pairs, double a, double R, double b,
                                      int panel_order, int sphere_degree) {
  if (b >= a) throw std::invalid_argument("cylinder_side_surface: need b < a");
  const int n = n_pairs;
  const int sp = 2 * n;
  SphereRule rule = sphere_rule(sp, sphere_degree);
  GaussRule gl = gauss_legendre(panel_order);
  BoundarySurface S;
  S.kind = BoundarySurface::Kind::CylinderSide;
  S.n_pairs = n;
  S.measure = sigma_sphere(sp) * std::pow(R, sp - 1) * (a - b);
  // panels grow geometrically away from the cap
  std::vector<double> cuts{a};
  double w = 0.5, x = a;
  while (x > b) {
    x = std::max(b, x - w);
    cuts.push_back(x);
    w *= 1.6;
  }
  const double rscale = std::pow(R, sp - 1);
  for (std::size_t pi = 0; pi + 1 < cuts.size(); ++pi) {
    double hi = cuts[pi], lo = cuts[pi + 1];
    double h = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    for (int i = 0; i < panel_order; ++i) {
      double x0 = mid + h * gl.nodes(i);
      double wx = h * gl.weights(i) * rscale;
      for (std::size_t s = 0; s < rule.nodes.size(); ++s) {
        SurfaceNode nd;
        nd.normal = Eigen::VectorXd::Zero(2 * n + 1);
        nd.normal.tail(sp) = rule.nodes[s];
        nd.x = Point(x0, R * rule.nodes[s]);
        nd.weight = wx * rule.weights[s];
        S.nodes.push_back(std::move(nd));
      }
    }
  }
  return S;
}

Cmv surface_integral(const BoundarySurface& S,
                     const std::function<Cmv(const Point&, const Eigen::VectorXd&)>& integrand) {
  Cmv total = pairwise_reduce<Cmv>(
      S.nodes.size(),
      [&](std::size_t i) {
        const SurfaceNode& nd = S.nodes[i];
        Cmv v = integrand(nd.x, nd.normal);
        for (auto& [m, c] : v.coeffs())
          if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::runtime_error("surface_integral: non-finite integrand value");
        return v * std::complex<double>(nd.weight, 0.0);
      },
      Cmv::zero(S.n_pairs));
  total.normalize();
  return total;
}

std::vector<VolumeNode> ball_volume_nodes(int n_pairs, const Point& center, double radius,
                                          int radial_order, int sphere_degree) {
  const int p = 2 * n_pairs + 1;
  SphereRule rule = sphere_rule(p, sphere_degree);
  GaussRule gl = gauss_legendre(radial_order);
  std::vector<VolumeNode> out;
  for (int i = 0; i < radial_order; ++i) {
    double r = 0.5 * radius * (gl.nodes(i) + 1.0);
    double wr = 0.5 * radius * gl.weights(i) * std::pow(r, p - 1);
    for (std::size_t s = 0; s < rule.nodes.size(); ++s) {
      const Eigen::VectorXd& om = rule.nodes[s];
      VolumeNode nd;
      nd.x = Point(center.x0 + r * om(0), center.x + r * om.tail(p - 1));
      nd.weight = wr * rule.weights[s];
      out.push_back(std::move(nd));
    }
  }
  return out;
}

}  // namespace hsub
