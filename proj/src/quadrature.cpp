#include "loopfield/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "loopfield/errors.hpp"
#include "loopfield/profile.hpp"

namespace loopfield {

QuadratureSpec QuadratureSpec::standard() { return QuadratureSpec{}; }

QuadratureSpec QuadratureSpec::fast() {
  QuadratureSpec s;
  s.radial_order = 10;
  s.radial_panels = 16;
  s.r_max = 60.0;
  s.r_split = 20.0;
  s.theta_order = 16;
  s.phi_order = 32;
  return s;
}

QuadratureSpec QuadratureSpec::locality() {
  QuadratureSpec s;
  s.radial_panels = 40;
  s.theta_order = 96;
  s.phi_order = 192;
  return s;
}

QuadratureSpec QuadratureSpec::refined() const {
  QuadratureSpec s = *this;
  s.radial_panels *= 2;
  s.theta_order *= 2;
  s.phi_order *= 2;
  return s;
}

QuadratureSpec QuadratureSpec::with_threads(int t) const {
  QuadratureSpec s = *this;
  s.threads = t;
  return s;
}

namespace {

struct RadialGrid {
  std::vector<double> nodes, weights;
};

RadialGrid radial_grid(const QuadratureSpec& spec) {
  RadialGrid g;
  const GaussRule& gl = gauss_legendre(spec.radial_order);
  std::vector<double> edges;
  const double split = std::min(spec.r_split, spec.r_max);
  const int inner = std::max(1, (3 * spec.radial_panels) / 4);
  const int outer = std::max(1, spec.radial_panels - inner);
  edges.push_back(0.0);
  for (int i = 1; i <= inner; ++i)
    edges.push_back(split * i / inner);
  if (spec.r_max > split)
    for (int i = 1; i <= outer; ++i)
      edges.push_back(split + (spec.r_max - split) * i / outer);
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double lo = edges[e], hi = edges[e + 1];
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      g.nodes.push_back(0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.nodes[i]);
      g.weights.push_back(0.5 * (hi - lo) * gl.weights[i]);
    }
  }
  return g;
}

Complex run_rule(const MomentumIntegrand& M, ConeBranch branch,
                 const QuadratureSpec& spec, long& nodes_out) {
  if (spec.r_max > kTransformRange)
    throw ConfigError("quadrature r_max exceeds the transform table range");
  const RadialGrid rg = radial_grid(spec);
  const GaussRule& th = gauss_legendre(spec.theta_order);
  const int nphi = spec.phi_order;

  std::vector<double> cphi(nphi), sphi(nphi);
  for (int j = 0; j < nphi; ++j) {
    cphi[j] = std::cos(kTwoPi * j / nphi);
    sphi[j] = std::sin(kTwoPi * j / nphi);
  }

  const std::size_t nshell = rg.nodes.size();
  std::vector<Complex> shell(nshell);
  nodes_out = static_cast<long>(nshell) * th.nodes.size() * nphi *
              (branch == ConeBranch::SignedEnergy ? 2 : 1);

  auto eval_shell = [&](std::size_t s) {
    const double rho = rg.nodes[s];
    std::vector<Complex> vals;
    vals.reserve(th.nodes.size() * static_cast<std::size_t>(nphi));
    for (std::size_t a = 0; a < th.nodes.size(); ++a) {
      const double ct = th.nodes[a];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int j = 0; j < nphi; ++j) {
        const Vec4 p{rho, rho * st * cphi[j], rho * st * sphi[j], rho * ct};
        Complex m = M(p);
        if (branch == ConeBranch::SignedEnergy) {
          const Vec4 pm{-rho, p[1], p[2], p[3]};
          m -= M(pm);
        }
        vals.push_back(th.weights[a] * m);
      }
    }
    // d^3p = rho^2 drho dOmega; the cone measure contributes 1/(2 rho)
    shell[s] = pairwise_sum(vals) * (kTwoPi / nphi) * (rho / 2.0) *
               rg.weights[s];
  };

  const int nthreads = std::max(1, spec.threads);
  if (nthreads == 1) {
    for (std::size_t s = 0; s < nshell; ++s) eval_shell(s);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t s = next.fetch_add(1);
          if (s >= nshell) return;
          eval_shell(s);
        }
      });
    for (auto& t : pool) t.join();
  }
  return pairwise_sum(shell);
}

}  // namespace

IntegralResult lightcone_integrate(const MomentumIntegrand& M, ConeBranch branch,
                                   const QuadratureSpec& spec) {
  IntegralResult res;
  long nodes_base = 0, nodes_fine = 0;
  const Complex base = run_rule(M, branch, spec, nodes_base);
  const Complex fine = run_rule(M, branch, spec.refined(), nodes_fine);
  res.value = fine;
  res.error = std::abs(fine - base);
  res.nodes = nodes_base + nodes_fine;
  res.converged = res.error <= std::max(spec.target_rel_tol * std::abs(fine),
                                        spec.target_abs_tol);
  return res;
}

}  // namespace loopfield
