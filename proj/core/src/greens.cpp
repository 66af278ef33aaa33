#include "dsbvp/greens.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dsbvp/errors.hpp"
#include "dsbvp/quadrature.hpp"

namespace dsbvp {

namespace {

ScalarFn reciprocal(const ScalarFn& p) {
    return [p](double t) { return 1.0 / p(t); };
}

// Uniform-panel doubling on [a, b]; gaps handed to this are short, so it
// settles fast.
double interval_quad(const ScalarFn& fn, double a, double b, double tol) {
    if (b <= a) {
        return 0.0;
    }
    double prev = midpoint(fn, a, b, 8);
    for (int n = 16; n <= (1 << 20); n *= 2) {
        const double cur = midpoint(fn, a, b, n);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) {
            return cur;
        }
        prev = cur;
    }
    throw QuadratureNotConverged("integral over [" + std::to_string(a) + ", " +
                                 std::to_string(b) + "] did not settle");
}

}  // namespace

double b_eval(const ProblemSpec& spec, double x, const AnalyticKernelData& analytic) {
    if (!(x > 0.0 && x <= 1.0)) {
        throw OutOfRange("b_eval: x = " + std::to_string(x) + " outside (0,1]");
    }
    if (analytic.b) {
        return analytic.b(x);
    }
    if (!spec.p) {
        throw InvalidProblem("b_eval: problem has no p");
    }
    const AdaptiveQuad q = graded_midpoint_adaptive(reciprocal(spec.p), x, 1e-10);
    if (!q.converged) {
        throw QuadratureNotConverged(
            "b(" + std::to_string(x) +
            "): panel doubling kept growing; 1/p looks non-integrable at 0");
    }
    return q.value;
}

KernelSpec make_kernel(const ProblemSpec& spec, const AnalyticKernelData& analytic) {
    if (!spec.p) {
        throw InvalidProblem("make_kernel: problem has no p");
    }
    validate(spec.bc);
    const bool dirichlet = is_dirichlet(spec.bc);

    KernelSpec ks;
    ks.bc = spec.bc;
    const double p_at_1 = spec.p(1.0);
    if (!std::isfinite(p_at_1) || !(p_at_1 > 0.0)) {
        throw InvalidProblem("make_kernel: p(1) must be finite and positive");
    }
    ks.b1_prime = 1.0 / p_at_1;

    if (analytic.b) {
        ks.b = analytic.b;
        ks.b1 = analytic.b(1.0);
        if (analytic.b1_minus_b) {
            ks.b1_minus_b = analytic.b1_minus_b;
        } else {
            ks.b1_minus_b = [b = analytic.b, b1 = ks.b1](double t) { return b1 - b(t); };
        }
        ks.analytic = true;
        return ks;
    }
    if (analytic.b1_minus_b) {
        if (dirichlet) {
            throw UnavailableKernel(
                "value conditions at both ends need b(x) itself, and only "
                "b(1)-b(t) is available for this problem");
        }
        ks.b1_minus_b = analytic.b1_minus_b;
        ks.b1 = std::numeric_limits<double>::quiet_NaN();
        ks.analytic = true;
        return ks;
    }

    // No closed forms: decide availability by quadrature.
    const AdaptiveQuad probe = graded_midpoint_adaptive(reciprocal(spec.p), 1.0, 1e-9);
    ks.analytic = false;
    const ScalarFn p = spec.p;
    if (probe.converged) {
        ks.b1 = probe.value;
        ks.b = [p](double x) {
            const AdaptiveQuad q = graded_midpoint_adaptive(reciprocal(p), x, 1e-10);
            if (!q.converged) {
                throw QuadratureNotConverged("b(" + std::to_string(x) +
                                             ") did not settle");
            }
            return q.value;
        };
        ks.b1_minus_b = [p](double t) {
            return interval_quad(reciprocal(p), t, 1.0, 1e-11);
        };
        return ks;
    }
    if (dirichlet) {
        throw UnavailableKernel(
            "1/p is not integrable at 0, so no kernel exists for value "
            "conditions at both ends");
    }
    ks.b1 = std::numeric_limits<double>::quiet_NaN();
    ks.b1_minus_b = [p](double t) {
        return interval_quad(reciprocal(p), t, 1.0, 1e-11);
    };
    return ks;
}

double greens_kernel(const KernelSpec& kernel, double x, double t) {
    if (!(x > 0.0 && x <= 1.0) || !(t > 0.0 && t <= 1.0)) {
        throw OutOfRange("greens_kernel: arguments must lie in (0,1]");
    }
    const double lo = std::min(x, t);
    const double hi = std::max(x, t);
    if (const auto* rob = std::get_if<NeumannRobinBC>(&kernel.bc)) {
        return kernel.b1_minus_b(hi) + rob->beta * kernel.b1_prime / rob->alpha;
    }
    if (!kernel.b) {
        throw UnavailableKernel("greens_kernel: b(x) is unavailable for this problem");
    }
    return kernel.b(lo) * kernel.b1_minus_b(hi) / kernel.b1;
}

double v_eval(const KernelSpec& kernel, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw OutOfRange("v_eval: x = " + std::to_string(x) + " outside [0,1]");
    }
    if (const auto* rob = std::get_if<NeumannRobinBC>(&kernel.bc)) {
        return rob->gamma / rob->alpha;
    }
    const auto& dir = std::get<DirichletBC>(kernel.bc);
    if (x == 0.0) {
        return dir.alpha;
    }
    if (x == 1.0) {
        return dir.beta;
    }
    if (!kernel.b) {
        throw UnavailableKernel("v_eval: b(x) is unavailable for this problem");
    }
    return dir.alpha + (dir.beta - dir.alpha) * kernel.b(x) / kernel.b1;
}

std::vector<double> oracle_probes() {
    std::vector<double> xs(33);
    for (int l = 1; l <= 33; ++l) {
        xs[static_cast<size_t>(l - 1)] = l / 34.0;
    }
    return xs;
}

namespace {

struct KernelTables {
    // b1 - b at the quadrature nodes and probes; b itself only when the
    // value-condition kernel needs it.
    std::vector<double> d_nodes;
    std::vector<double> d_probes;
    std::vector<double> b_nodes;
    std::vector<double> b_probes;
    double b1 = std::numeric_limits<double>::quiet_NaN();
};

// One backward cumulative pass over the union of nodes and probes, so
// the generic (quadrature-backed) kernel costs O(points) short integrals
// instead of one long integral per kernel evaluation.
KernelTables tabulate_quadrature_kernel(const ProblemSpec& spec,
                                        const KernelSpec& kernel,
                                        const std::vector<double>& nodes,
                                        const std::vector<double>& probes) {
    const ScalarFn invp = reciprocal(spec.p);
    std::vector<double> s;
    s.reserve(nodes.size() + probes.size());
    s.insert(s.end(), nodes.begin(), nodes.end());
    s.insert(s.end(), probes.begin(), probes.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    std::vector<double> d(s.size());
    d.back() = interval_quad(invp, s.back(), 1.0, 1e-12);
    for (size_t i = s.size() - 1; i-- > 0;) {
        d[i] = d[i + 1] + interval_quad(invp, s[i], s[i + 1], 1e-12);
    }

    auto lookup = [&](double x) {
        const auto it = std::lower_bound(s.begin(), s.end(), x);
        return d[static_cast<size_t>(it - s.begin())];
    };

    KernelTables tab;
    tab.d_nodes.reserve(nodes.size());
    for (double t : nodes) {
        tab.d_nodes.push_back(lookup(t));
    }
    tab.d_probes.reserve(probes.size());
    for (double x : probes) {
        tab.d_probes.push_back(lookup(x));
    }
    if (is_dirichlet(kernel.bc)) {
        const AdaptiveQuad head = graded_midpoint_adaptive(invp, s.front(), 1e-10);
        if (!head.converged) {
            throw QuadratureNotConverged("b(" + std::to_string(s.front()) +
                                         ") did not settle");
        }
        tab.b1 = head.value + d.front();
        tab.b_nodes.reserve(nodes.size());
        for (size_t k = 0; k < nodes.size(); ++k) {
            tab.b_nodes.push_back(tab.b1 - tab.d_nodes[k]);
        }
        tab.b_probes.reserve(probes.size());
        for (size_t k = 0; k < probes.size(); ++k) {
            tab.b_probes.push_back(tab.b1 - tab.d_probes[k]);
        }
    }
    return tab;
}

}  // namespace

double integral_residual(const std::function<double(double)>& y,
                         const ProblemSpec& spec, const KernelSpec& kernel,
                         int n_quad, const std::vector<double>& probes) {
    if (n_quad < 4) {
        throw OutOfRange("integral_residual: n_quad must be at least 4");
    }
    if (probes.empty()) {
        throw InvalidArgument("integral_residual: probe set is empty");
    }
    for (double x : probes) {
        if (!(x > 0.0 && x < 1.0)) {
            throw OutOfRange("integral_residual: probe " + std::to_string(x) +
                             " outside (0,1)");
        }
    }
    if (!y || !spec.q || !spec.f) {
        throw InvalidProblem("integral_residual: needs y, q and f");
    }
    const bool dirichlet = is_dirichlet(kernel.bc);
    if (dirichlet && kernel.analytic && !kernel.b) {
        throw UnavailableKernel("integral_residual: b(x) is unavailable");
    }

    // Graded midpoint mesh, edges at (k/n)^2 with nodes at the graded
    // image of the midpoints (the same convention as graded_midpoint, so
    // sqrt-type kernel factors cost no accuracy).
    const int n = n_quad;
    std::vector<double> t(static_cast<size_t>(n)), w(static_cast<size_t>(n));
    double lo = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double frac = static_cast<double>(k) / n;
        const double hi = frac * frac;
        const double mid = (k - 0.5) / n;
        t[static_cast<size_t>(k - 1)] = mid * mid;
        w[static_cast<size_t>(k - 1)] = hi - lo;
        lo = hi;
    }

    std::vector<double> qf(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double tk = t[static_cast<size_t>(k)];
        const double v = spec.q(tk) * spec.f(tk, y(tk));
        if (!std::isfinite(v)) {
            throw QuadratureNonFinite("q f(t, y) is not finite at t = " +
                                      std::to_string(tk));
        }
        qf[static_cast<size_t>(k)] = v;
    }

    std::vector<double> d_nodes(static_cast<size_t>(n)), d_probes(probes.size());
    std::vector<double> b_nodes, b_probes;
    double b1 = kernel.b1;
    if (kernel.analytic) {
        for (int k = 0; k < n; ++k) {
            d_nodes[static_cast<size_t>(k)] = kernel.b1_minus_b(t[static_cast<size_t>(k)]);
        }
        for (size_t k = 0; k < probes.size(); ++k) {
            d_probes[k] = kernel.b1_minus_b(probes[k]);
        }
        if (dirichlet) {
            b_nodes.resize(static_cast<size_t>(n));
            b_probes.resize(probes.size());
            for (int k = 0; k < n; ++k) {
                b_nodes[static_cast<size_t>(k)] = kernel.b(t[static_cast<size_t>(k)]);
            }
            for (size_t k = 0; k < probes.size(); ++k) {
                b_probes[k] = kernel.b(probes[k]);
            }
        }
    } else {
        KernelTables tab = tabulate_quadrature_kernel(spec, kernel, t, probes);
        d_nodes = std::move(tab.d_nodes);
        d_probes = std::move(tab.d_probes);
        b_nodes = std::move(tab.b_nodes);
        b_probes = std::move(tab.b_probes);
        if (dirichlet) {
            b1 = tab.b1;
        }
    }

    double shift = 0.0;
    double v_const = 0.0;
    const DirichletBC* dir = std::get_if<DirichletBC>(&kernel.bc);
    if (const auto* rob = std::get_if<NeumannRobinBC>(&kernel.bc)) {
        shift = rob->beta * kernel.b1_prime / rob->alpha;
        v_const = rob->gamma / rob->alpha;
    }

    double worst = 0.0;
    for (size_t j = 0; j < probes.size(); ++j) {
        const double x = probes[j];
        double integral = 0.0;
        if (dir) {
            const double bx = b_probes[j];
            const double dx = d_probes[j];
            for (int k = 0; k < n; ++k) {
                const double tk = t[static_cast<size_t>(k)];
                const double g = (x <= tk)
                                     ? bx * d_nodes[static_cast<size_t>(k)] / b1
                                     : b_nodes[static_cast<size_t>(k)] * dx / b1;
                integral += w[static_cast<size_t>(k)] * g * qf[static_cast<size_t>(k)];
            }
        } else {
            const double dx = d_probes[j];
            for (int k = 0; k < n; ++k) {
                const double tk = t[static_cast<size_t>(k)];
                const double g = (tk >= x ? d_nodes[static_cast<size_t>(k)] : dx) + shift;
                integral += w[static_cast<size_t>(k)] * g * qf[static_cast<size_t>(k)];
            }
        }
        const double v = dir ? dir->alpha + (dir->beta - dir->alpha) * b_probes[j] / b1
                             : v_const;
        worst = std::max(worst, std::abs(y(x) - v + integral));
    }
    return worst;
}

double integral_residual(const std::function<double(double)>& y,
                         const ProblemSpec& spec, const KernelSpec& kernel,
                         int n_quad) {
    return integral_residual(y, spec, kernel, n_quad, oracle_probes());
}

double integral_residual(const Solution& sol, const ProblemSpec& spec,
                         const KernelSpec& kernel, int n_quad) {
    return integral_residual([&sol](double x) { return sol.evaluate(x); }, spec,
                             kernel, n_quad);
}

}  // namespace dsbvp
