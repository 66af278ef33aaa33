#include "dsbvp/catalog.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dsbvp/errors.hpp"

namespace dsbvp {

namespace {

std::vector<BenchmarkCase> build_cases() {
    std::vector<BenchmarkCase> cases;
    cases.reserve(8);

    {
        // (sqrt(x) y')' = sqrt(x) (e^y/2 - e^{2y}),  y(0) = ln 2, y(1) = 0,
        // exact y = ln(2/(1+x^2)).
        BenchmarkCase c;
        c.id = 1;
        c.name = "exponential source under value conditions";
        c.spec.p = [](double x) { return std::sqrt(x); };
        c.spec.p_prime = [](double x) { return 0.5 / std::sqrt(x); };
        c.spec.q = [](double x) { return std::sqrt(x); };
        c.spec.f = [](double, double y) {
            return 0.5 * std::exp(y) - std::exp(2.0 * y);
        };
        c.spec.f_y = [](double, double y) {
            return 0.5 * std::exp(y) - 2.0 * std::exp(2.0 * y);
        };
        c.spec.bc = DirichletBC{std::log(2.0), 0.0};
        c.exact = [](double x) { return std::log(2.0 / (1.0 + x * x)); };
        c.ref_resolution = 3;
        c.ref_iters = 8;
        c.kernel.b = [](double x) { return 2.0 * std::sqrt(x); };
        c.kernel.b1_minus_b = [](double t) { return 2.0 - 2.0 * std::sqrt(t); };
        c.table = {
            {0.1, 0.68320, {}, 0.68330, 1.06e-4, {0.68367, {}, {}, {}, {}, {}}},
            {0.3, 0.60697, {}, 0.60715, 1.79e-4, {0.60784, {}, {}, {}, {}, {}}},
            {0.5, 0.47020, {}, 0.47020, 1.92e-4, {0.47125, {}, {}, {}, {}, {}}},
            {0.7, 0.29437, {}, 0.29452, 1.44e-4, {0.29585, {}, {}, {}, {}, {}}},
            {0.9, 0.09982, {}, 0.099875, 5.42e-5, {0.10065, {}, {}, {}, {}, {}}},
        };
        c.note = "published run: J = 3, 8 sweeps; comparison column is a "
                 "kernel-based decomposition series";
        cases.push_back(std::move(c));
    }

    {
        // y'' = y^{3/2}/sqrt(x), y(0) = 1, y(1) = 0 (Thomas-Fermi). The
        // guard clips negative excursions, where y^{3/2} is undefined.
        BenchmarkCase c;
        c.id = 2;
        c.name = "Thomas-Fermi equation";
        c.spec.p = [](double) { return 1.0; };
        c.spec.p_prime = [](double) { return 0.0; };
        c.spec.q = [](double x) { return 1.0 / std::sqrt(x); };
        c.spec.f = [](double, double y) { return std::pow(y, 1.5); };
        c.spec.f_y = [](double, double y) { return 1.5 * std::sqrt(y); };
        c.spec.bc = DirichletBC{1.0, 0.0};
        c.spec.domain_guard = [](double y) { return y > 0.0 ? y : 0.0; };
        c.ref_resolution = 3;
        c.ref_iters = 7;
        c.alt_resolution = 2;
        c.kernel.b = [](double x) { return x; };
        c.kernel.b1_minus_b = [](double t) { return 1.0 - t; };
        c.table = {
            {0.1, 0.84909, 0.84976, {}, {}, {{}, 0.84950, {}, {}, {}, {}}},
            {0.3, 0.61888, 0.61829, {}, {}, {{}, 0.61937, {}, {}, {}, {}}},
            {0.5, 0.42723, 0.42672, {}, {}, {{}, 0.42765, {}, {}, {}, {}}},
            {0.7, 0.25220, 0.25187, {}, {}, {{}, 0.25249, {}, {}, {}, {}}},
            {0.9, 0.08361, 0.08351, {}, {}, {{}, 0.08374, {}, {}, {}, {}}},
        };
        c.note = "no closed form; published runs at J = 3 and J = 2, 7 sweeps";
        cases.push_back(std::move(c));
    }

    {
        // (sqrt(x) y')' = sqrt(x) 4x^2 e^y (4x^4 e^y - 3.5),
        // y(0) = ln(1/4), y(1) = ln(1/5), exact y = -ln(4 + x^4).
        BenchmarkCase c;
        c.id = 3;
        c.name = "quartic exponential source under value conditions";
        c.spec.p = [](double x) { return std::sqrt(x); };
        c.spec.p_prime = [](double x) { return 0.5 / std::sqrt(x); };
        c.spec.q = [](double x) { return std::sqrt(x); };
        c.spec.f = [](double x, double y) {
            const double x2 = x * x;
            const double ey = std::exp(y);
            return 16.0 * x2 * x2 * x2 * ey * ey - 14.0 * x2 * ey;
        };
        c.spec.f_y = [](double x, double y) {
            const double x2 = x * x;
            const double ey = std::exp(y);
            return 32.0 * x2 * x2 * x2 * ey * ey - 14.0 * x2 * ey;
        };
        c.spec.bc = DirichletBC{std::log(0.25), std::log(0.2)};
        c.exact = [](double x) {
            const double x2 = x * x;
            return -std::log(4.0 + x2 * x2);
        };
        c.ref_resolution = 3;
        c.ref_iters = 7;
        c.kernel.b = [](double x) { return 2.0 * std::sqrt(x); };
        c.kernel.b1_minus_b = [](double t) { return 2.0 - 2.0 * std::sqrt(t); };
        c.table = {
            {0.1, -1.38630, {}, -1.38640, 5.92e-5, {-1.38632, {}, {}, {}, {}, {}}},
            {0.3, -1.38830, {}, -1.38840, 6.90e-5, {-1.38832, {}, {}, {}, {}, {}}},
            {0.5, -1.40180, {}, -1.40200, 1.57e-4, {-1.40180, {}, {}, {}, {}, {}}},
            {0.7, -1.44460, {}, -1.44480, 2.22e-4, {-1.44459, {}, {}, {}, {}, {}}},
            {0.9, -1.53820, {}, -1.53820, 6.86e-5, {-1.53818, {}, {}, {}, {}, {}}},
        };
        c.note = "published run: J = 3, 7 sweeps";
        cases.push_back(std::move(c));
    }

    {
        // (x^2 y')' = -x^2 y^5, y'(0) = 0, y(1) = sqrt(3)/2,
        // exact y = (1 + x^2/3)^{-1/2} (isothermal gas sphere).
        BenchmarkCase c;
        c.id = 4;
        c.name = "isothermal gas sphere";
        c.spec.p = [](double x) { return x * x; };
        c.spec.p_prime = [](double x) { return 2.0 * x; };
        c.spec.q = [](double x) { return x * x; };
        c.spec.f = [](double, double y) { return -std::pow(y, 5); };
        c.spec.f_y = [](double, double y) { return -5.0 * std::pow(y, 4); };
        c.spec.bc = NeumannRobinBC{1.0, 0.0, std::sqrt(0.75)};
        c.exact = [](double x) { return 1.0 / std::sqrt(1.0 + x * x / 3.0); };
        c.ref_resolution = 3;
        c.ref_iters = 6;
        c.kernel.b1_minus_b = [](double t) { return 1.0 / t - 1.0; };
        c.table = {
            {0.1, 0.99834, {}, 0.99858, 2.41e-4, {0.99795, {}, {}, {}, {}, {}}},
            {0.3, 0.98533, {}, 0.98554, 2.11e-4, {0.98501, {}, {}, {}, {}, {}}},
            {0.5, 0.96077, {}, 0.96093, 1.65e-4, {0.96055, {}, {}, {}, {}, {}}},
            {0.7, 0.92715, {}, 0.92725, 1.04e-4, {0.92703, {}, {}, {}, {}, {}}},
            {0.9, 0.88736, {}, 0.88739, 3.27e-5, {0.88732, {}, {}, {}, {}, {}}},
        };
        c.note = "published run: J = 3, 6 sweeps; b(x) diverges at 0, so only "
                 "the mixed-family kernel exists";
        cases.push_back(std::move(c));
    }

    {
        // (x y')' = -x e^y, y'(0) = 0, y(1) = 0, exact
        // y = 2 ln((A+1)/(A x^2 + 1)) with A = 3 - 2 sqrt(2)
        // (electrohydrodynamic flow).
        BenchmarkCase c;
        c.id = 5;
        c.name = "electrohydrodynamic flow";
        c.spec.p = [](double x) { return x; };
        c.spec.p_prime = [](double) { return 1.0; };
        c.spec.q = [](double x) { return x; };
        c.spec.f = [](double, double y) { return -std::exp(y); };
        c.spec.f_y = [](double, double y) { return -std::exp(y); };
        c.spec.bc = NeumannRobinBC{1.0, 0.0, 0.0};
        c.exact = [](double x) {
            const double a = 3.0 - 2.0 * std::sqrt(2.0);
            return 2.0 * std::log((a + 1.0) / (a * x * x + 1.0));
        };
        c.ref_resolution = 3;
        c.ref_iters = 6;
        c.kernel.b1_minus_b = [](double t) { return -std::log(t); };
        c.table = {
            {0.1, 0.31327, {}, 0.31327, 8.34e-6, {0.31326, {}, {}, {}, {}, {}}},
            {0.3, 0.28605, {}, 0.28606, 8.08e-6, {0.28604, {}, {}, {}, {}, {}}},
            {0.5, 0.23270, {}, 0.23270, 7.22e-6, {0.23269, {}, {}, {}, {}, {}}},
            {0.7, 0.15525, {}, 0.15525, 5.41e-6, {0.15525, {}, {}, {}, {}, {}}},
            {0.9, 0.05643, {}, 0.05644, 2.21e-6, {0.05644, {}, {}, {}, {}, {}}},
        };
        c.note = "published run: J = 3, 6 sweeps";
        cases.push_back(std::move(c));
    }

    {
        // (x^2 y')' = -x^2 e^{-y}, y'(0) = 0, 2 y(1) + y'(1) = 0
        // (steady temperature in a spherical tissue ball).
        BenchmarkCase c;
        c.id = 6;
        c.name = "heat conduction in the human head";
        c.spec.p = [](double x) { return x * x; };
        c.spec.p_prime = [](double x) { return 2.0 * x; };
        c.spec.q = [](double x) { return x * x; };
        c.spec.f = [](double, double y) { return -std::exp(-y); };
        c.spec.f_y = [](double, double y) { return std::exp(-y); };
        c.spec.bc = NeumannRobinBC{2.0, 1.0, 0.0};
        c.ref_resolution = 3;
        c.ref_iters = 7;
        c.kernel.b1_minus_b = [](double t) { return 1.0 / t - 1.0; };
        c.table = {
            {0.1, 0.26866, {}, {}, {}, {0.26862, {}, {}, 0.26875, 0.26907, {}}},
            {0.3, 0.25845, {}, {}, {}, {0.25841, {}, {}, 0.25853, 0.25886, {}}},
            {0.5, 0.23782, {}, {}, {}, {0.23781, {}, {}, 0.23791, 0.23822, {}}},
            {0.7, 0.20640, {}, {}, {}, {0.20641, {}, {}, 0.20649, 0.20677, {}}},
            {0.9, 0.16356, {}, {}, {}, {0.16359, {}, {}, 0.16365, 0.16387, {}}},
        };
        c.note = "no closed form; published run: J = 3, 7 sweeps";
        cases.push_back(std::move(c));
    }

    {
        // (x^2 y')' = x^2 (0.76129 y)/(y + 0.03119), y'(0) = 0,
        // 5 y(1) + y'(1) = 5 (oxygen uptake in a cell).
        BenchmarkCase c;
        c.id = 7;
        c.name = "oxygen uptake in a spherical cell";
        c.spec.p = [](double x) { return x * x; };
        c.spec.p_prime = [](double x) { return 2.0 * x; };
        c.spec.q = [](double x) { return x * x; };
        c.spec.f = [](double, double y) { return 0.76129 * y / (y + 0.03119); };
        c.spec.f_y = [](double, double y) {
            const double d = y + 0.03119;
            return 0.76129 * 0.03119 / (d * d);
        };
        c.spec.bc = NeumannRobinBC{5.0, 1.0, 5.0};
        c.ref_resolution = 3;
        c.ref_iters = 7;
        c.kernel.b1_minus_b = [](double t) { return 1.0 / t - 1.0; };
        c.table = {
            {0.1, 0.82971, {}, {}, {}, {0.82970, {}, 0.82970, {}, {}, 0.82970}},
            {0.3, 0.83949, {}, {}, {}, {0.83949, {}, 0.83948, {}, {}, 0.83948}},
            {0.5, 0.85907, {}, {}, {}, {0.85906, {}, 0.85906, {}, {}, 0.85906}},
            {0.7, 0.88845, {}, {}, {}, {0.88844, {}, 0.88844, {}, {}, 0.88844}},
            {0.9, 0.92765, {}, {}, {}, {0.92765, {}, 0.92765, {}, {}, 0.92765}},
        };
        c.note = "no closed form; published run: J = 3, 7 sweeps";
        cases.push_back(std::move(c));
    }

    {
        // (x^3 y')' = x^3 (1/2 - 1/(8 y^2)), y'(0) = 0, y(1) = 1
        // (shallow membrane cap). The guard rejects iterates that sit on
        // the 1/y^2 pole.
        BenchmarkCase c;
        c.id = 8;
        c.name = "shallow membrane cap";
        c.spec.p = [](double x) { return x * x * x; };
        c.spec.p_prime = [](double x) { return 3.0 * x * x; };
        c.spec.q = [](double x) { return x * x * x; };
        c.spec.f = [](double, double y) { return 0.5 - 1.0 / (8.0 * y * y); };
        c.spec.f_y = [](double, double y) { return 1.0 / (4.0 * y * y * y); };
        c.spec.bc = NeumannRobinBC{1.0, 0.0, 1.0};
        c.spec.domain_guard = [](double y) {
            return std::abs(y) < 1e-6 ? std::numeric_limits<double>::quiet_NaN() : y;
        };
        c.ref_resolution = 3;
        c.ref_iters = 7;
        c.kernel.b1_minus_b = [](double t) { return 0.5 * (1.0 / (t * t) - 1.0); };
        c.table = {
            {0.1, 0.95459, {}, {}, {}, {0.95458, {}, 0.95263, {}, {}, {}}},
            {0.3, 0.95822, {}, {}, {}, {0.95822, {}, 0.95649, {}, {}, {}}},
            {0.5, 0.96550, {}, {}, {}, {0.96550, {}, 0.96420, {}, {}, {}}},
            {0.7, 0.97648, {}, {}, {}, {0.97647, {}, 0.97571, {}, {}, {}}},
            {0.9, 0.99121, {}, {}, {}, {0.99120, {}, 0.99098, {}, {}, {}}},
        };
        c.note = "no closed form; published run: J = 3, 7 sweeps";
        cases.push_back(std::move(c));
    }

    return cases;
}

}  // namespace

const std::vector<BenchmarkCase>& benchmark_cases() {
    static const std::vector<BenchmarkCase> cases = build_cases();
    return cases;
}

const BenchmarkCase& get_case(int id) {
    const auto& cases = benchmark_cases();
    if (id < 1 || id > static_cast<int>(cases.size())) {
        throw OutOfRange("get_case: id " + std::to_string(id) + " outside 1.." +
                         std::to_string(cases.size()));
    }
    return cases[static_cast<size_t>(id - 1)];
}

double exact_eval(const BenchmarkCase& c, double x) {
    if (!c.exact) {
        throw NoExactSolution("case " + std::to_string(c.id) + " (" + c.name +
                              ") has no closed form");
    }
    return c.exact(x);
}

}  // namespace dsbvp
