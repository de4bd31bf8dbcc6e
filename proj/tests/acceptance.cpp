// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sincfred/bench.hpp"
#include "sincfred/collocation.hpp"
#include "sincfred/dense.hpp"
#include "sincfred/problems.hpp"
#include "sincfred/quadrature.hpp"
#include "sincfred/sinc_basis.hpp"

using namespace sincfred;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) {
                detail = what;
            } else if (detail.size() < 400) {
                detail += "; " + what;
            }
            pass = false;
        }
    }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

struct SweepPoint {
    double error;
    double residual;
    double scale;
};

// Solutions for N = 10, 20, ..., 80, shared by several criteria.
using Sweep = std::map<std::pair<int, MethodKind>, std::vector<SweepPoint>>;

const std::vector<int> kSweepN = {10, 20, 30, 40, 50, 60, 70, 80};
const std::vector<MethodKind> kCollocation = {MethodKind::OriginalSE, MethodKind::NewSE,
                                              MethodKind::OriginalDE, MethodKind::NewDE};

// Sup-grid error thresholds at N = 80. These are tighter than the
// 1e-4 (SE) / 1e-8 (DE) floor, pinned from the first verified run with
// roughly a 20x margin over the worst observed case (example 4).
constexpr double kSeThreshold = 1e-6;
constexpr double kDeThreshold = 1e-11;
constexpr double kSeCriterion = 1e-4;
constexpr double kDeCriterion = 1e-8;

Sweep run_sweep(std::map<int, double>& seconds) {
    Sweep sweep;
    for (int id = 1; id <= 4; ++id) {
        const Problem p = example_by_id(id);
        const auto start = std::chrono::steady_clock::now();
        for (MethodKind m : kCollocation) {
            auto& points = sweep[{id, m}];
            for (int n : kSweepN) {
                const SincSolution sol = solve(p, m, n);
                points.push_back({max_error(sol, *p.exact, kDefaultGrid), sol.residual(),
                                  sol.residual_scale()});
            }
        }
        seconds[id] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return sweep;
}

Outcome criterion_convergence(const Sweep& sweep, const std::map<int, double>& seconds) {
    Outcome out;
    double worst_se = 0.0, worst_de = 0.0;
    for (int id = 1; id <= 4; ++id) {
        for (MethodKind m : kCollocation) {
            const double err = sweep.at({id, m}).back().error;
            const bool se = transform_kind(m) == TransformKind::SE;
            const double limit = se ? kSeThreshold : kDeThreshold;
            (se ? worst_se : worst_de) = std::max(se ? worst_se : worst_de, err);
            out.require(err <= (se ? kSeCriterion : kDeCriterion) && err <= limit,
                        "example " + std::to_string(id) + " " + std::string(to_string(m)) +
                            " error " + sci(err));
        }
        const double budget = id == 3 ? 60.0 : 10.0;
        out.require(seconds.at(id) < budget, "example " + std::to_string(id) + " took " +
                                                 std::to_string(seconds.at(id)) + " s");
    }
    if (out.pass) {
        out.detail = "worst SE " + sci(worst_se) + " (<= " + sci(kSeThreshold) + "), worst DE " +
                     sci(worst_de) + " (<= " + sci(kDeThreshold) + ")";
    }
    return out;
}

struct Fit {
    double slope;
    double r2;
    std::size_t points;
};

Fit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return {sxy / sxx, syy > 0 ? (sxy * sxy) / (sxx * syy) : 0.0, x.size()};
}

Outcome criterion_rate_shape(const Sweep& sweep) {
    // Points under the double-precision floor (1e-13) are left out of the fit.
    constexpr double kFloor = 1e-13;
    Outcome out;
    double min_r2 = 1.0;
    for (int id : {1, 2}) {
        for (MethodKind m : kCollocation) {
            const bool se = transform_kind(m) == TransformKind::SE;
            std::vector<double> x, y;
            const auto& pts = sweep.at({id, m});
            for (std::size_t k = 0; k < kSweepN.size(); ++k) {
                if (pts[k].error < kFloor) {
                    continue;
                }
                const double n = kSweepN[k];
                x.push_back(se ? std::sqrt(n) : n / std::log(n));
                y.push_back(std::log10(pts[k].error));
            }
            const std::string tag = "example " + std::to_string(id) + " " + std::string(to_string(m));
            out.require(x.size() >= 3, tag + ": fewer than 3 points above the floor");
            if (x.size() < 3) {
                continue;
            }
            const Fit fit = least_squares(x, y);
            min_r2 = std::min(min_r2, fit.r2);
            out.require(fit.slope < 0.0 && fit.r2 >= 0.9,
                        tag + ": slope " + sci(fit.slope) + " R^2 " + std::to_string(fit.r2));
        }
    }
    if (out.pass) {
        out.detail = "min R^2 = " + std::to_string(min_r2);
    }
    return out;
}

Outcome criterion_pn_identity() {
    Outcome out;
    double worst = 0.0;
    for (int id = 1; id <= 4; ++id) {
        const Problem p = example_by_id(id);
        for (MethodKind m : {MethodKind::NewSE, MethodKind::NewDE}) {
            for (int n : {5, 20, 50}) {
                const SincSolution sol = solve(p, m, n);
                const SampleVector samples(sol.coeffs(), sol.plan());
                const double scale = 1.0 + norm_inf(sol.coeffs());
                double dev = 0.0;
                for (double t : uniform_grid(p.interval, 201)) {
                    dev = std::max(dev, std::abs(sol.evaluate(t) - interpolate(samples, t)));
                }
                worst = std::max(worst, dev / scale);
                out.require(dev <= 1e-12 * scale, "example " + std::to_string(id) + " " +
                                                      std::string(to_string(m)) + " N=" +
                                                      std::to_string(n) + " deviation " + sci(dev));
            }
        }
    }
    if (out.pass) {
        out.detail = "max scaled deviation " + sci(worst);
    }
    return out;
}

Outcome criterion_kernel_counts() {
    Outcome out;
    const Problem p = example3();
    for (int n : {1, 10, 50}) {
        for (auto kind : {TransformKind::SE, TransformKind::DE}) {
            const auto plan = plan_for(p, kind, n);
            KernelCounter orig, fresh;
            assemble_original(p, plan, &orig);
            assemble_new(p, plan, &fresh);
            const auto nn = static_cast<std::uint64_t>(n);
            const std::uint64_t orig_expected = 3 * (2 * nn + 3) * (2 * nn + 1);
            const std::uint64_t new_expected = (2 * nn + 1) * (2 * nn + 1);
            out.require(orig.count() == orig_expected,
                        "original N=" + std::to_string(n) + " count " + std::to_string(orig.count()));
            out.require(fresh.count() == new_expected,
                        "new N=" + std::to_string(n) + " count " + std::to_string(fresh.count()));
            const double ratio = static_cast<double>(orig.count()) / static_cast<double>(fresh.count());
            out.require(ratio >= 2.5, "ratio " + std::to_string(ratio) + " at N=" + std::to_string(n));
        }
    }
    if (out.pass) {
        out.detail = "N=50: " + std::to_string(original_kernel_evals(50)) + " vs " +
                     std::to_string(new_kernel_evals(50));
    }
    return out;
}

Outcome criterion_quadrature() {
    Outcome out;
    const double pi = std::numbers::pi;
    const auto sqrt_plan = build_plan(VariableTransform(TransformKind::DE, Interval(0, pi / 2)), 0.5, pi / 2, 80);
    const double q1 = sinc_quadrature([](double t) { return std::sqrt(t); }, sqrt_plan);
    const double e1 = std::abs(q1 - 2.0 / 3.0 * std::pow(pi / 2, 1.5));
    const auto one_plan = build_plan(VariableTransform(TransformKind::DE, Interval(0, 1)), 1.0, pi / 2, 50);
    const double e2 = std::abs(sinc_quadrature([](double) { return 1.0; }, one_plan) - 1.0);
    out.require(e1 <= 1e-10, "sqrt error " + sci(e1));
    out.require(e2 <= 1e-12, "constant error " + sci(e2));
    out.detail = "sqrt " + sci(e1) + ", constant " + sci(e2);
    return out;
}

Outcome criterion_basis() {
    Outcome out;
    double kron = 0.0;
    for (double h : {0.05, 0.4, 1.3}) {
        const int n = 100;
        for (int i = -n; i <= n; ++i) {
            for (int j = -n; j <= n; ++j) {
                kron = std::max(kron, std::abs(sinc_basis(j, h, i * h) - (i == j ? 1.0 : 0.0)));
            }
        }
    }
    out.require(kron <= 1e-9, "Kronecker error " + sci(kron));

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> ns(1, 200);
    std::uniform_real_distribution<double> hs(0.01, 3.0);
    std::uniform_real_distribution<double> xs(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = ns(rng);
        const double h = hs(rng);
        const double x = xs(rng) * (n + 5) * h;
        const double s = lebesgue_sum(h, n, x);
        out.require(s <= lebesgue_bound(n), "Lebesgue sum " + std::to_string(s) + " at N=" + std::to_string(n));
    }

    double omega_err = 0.0;
    double const_err = 0.0;
    double offset = 0.0;
    for (auto kind : {TransformKind::SE, TransformKind::DE}) {
        for (int n : {4, 25, 80}) {
            const Interval iv(-1.0, 2.0);
            const auto plan = build_plan(VariableTransform(kind, iv), 1.0, 1.0, n);
            const SampleVector wa = sample([&iv](double t) { return omega_a(iv, t); }, plan);
            const SampleVector c = sample([](double) { return -4.5; }, plan);
            for (double t : uniform_grid(iv, 101)) {
                omega_err = std::max(omega_err, std::abs(interpolate(wa, t) - omega_a(iv, t)));
                const_err = std::max(const_err, std::abs(interpolate(c, t) + 4.5));
            }
            offset = std::max({offset, omega_b(iv, plan.node(-n)), omega_a(iv, plan.node(n))});
        }
    }
    out.require(const_err <= 1e-12, "constant reproduction error " + sci(const_err));
    out.require(omega_err <= 1e-12, "omega_a reproduction error " + sci(omega_err) +
                                        " (largest boundary offset of psi(+-Nh) " + sci(offset) + ")");
    if (out.pass) {
        out.detail = "Kronecker " + sci(kron) + ", omega_a " + sci(omega_err) + ", constant " + sci(const_err);
    }
    return out;
}

Outcome criterion_linear_solver(const Sweep& sweep) {
    Outcome out;
    double worst = 0.0;
    std::size_t solves = 0;
    for (const auto& [key, points] : sweep) {
        for (const auto& pt : points) {
            ++solves;
            worst = std::max(worst, pt.residual / pt.scale);
            out.require(pt.residual <= 1e-10 * pt.scale,
                        "example " + std::to_string(key.first) + " " + std::string(to_string(key.second)));
        }
    }
    DenseMatrix hilbert(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            hilbert(i, j) = 1.0 / static_cast<double>(i + j + 1);
        }
    }
    const double inverse[4][4] = {
        {16, -120, 240, -140}, {-120, 1200, -2700, 1680}, {240, -2700, 6480, -4200}, {-140, 1680, -4200, 2800}};
    double hil = 0.0;
    for (std::size_t col = 0; col < 4; ++col) {
        std::vector<double> e(4, 0.0);
        e[col] = 1.0;
        const auto x = solve_dense(hilbert, e);
        for (std::size_t i = 0; i < 4; ++i) {
            hil = std::max(hil, std::abs(x[i] - inverse[i][col]) / std::abs(inverse[i][col]));
        }
    }
    out.require(hil <= 1e-8, "Hilbert error " + sci(hil));
    if (out.pass) {
        out.detail = std::to_string(solves) + " solves, max scaled residual " + sci(worst) +
                     ", Hilbert " + sci(hil);
    }
    return out;
}

Outcome criterion_transcription() {
    Outcome out;
    double worst = 0.0;
    for (int id = 1; id <= 4; ++id) {
        const Problem p = example_by_id(id);
        const auto plan = plan_for(p, TransformKind::DE, 100);
        const auto& u = *p.exact;
        for (int k = 0; k <= 10; ++k) {
            const double t = p.interval.a() + p.interval.length() * (k + 0.5) / 11.0;
            const double integral = sinc_quadrature([&](double s) { return p.kernel(t, s) * u(s); }, plan);
            const double r = std::abs(u(t) - integral - p.rhs(t));
            worst = std::max(worst, r);
            out.require(r <= 1e-8, "example " + std::to_string(id) + " t=" + std::to_string(t) + " residual " + sci(r));
        }
    }
    if (out.pass) {
        out.detail = "max residual " + sci(worst);
    }
    return out;
}

// Replaces the three timing fields of each data row with a placeholder.
std::string mask_timings(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, result;
    bool header = true;
    while (std::getline(in, line)) {
        if (!header) {
            std::vector<std::string> fields;
            std::stringstream row(line);
            std::string f;
            while (std::getline(row, f, ',')) {
                fields.push_back(f);
            }
            if (fields.size() == 9) {
                fields[5] = fields[6] = fields[7] = "*";
            }
            line.clear();
            for (std::size_t i = 0; i < fields.size(); ++i) {
                line += (i ? "," : "") + fields[i];
            }
        }
        header = false;
        result += line + '\n';
    }
    return result;
}

Outcome criterion_golden() {
    Outcome out;
    const std::string path = std::string(SINCFRED_GOLDEN_DIR) + "/example1_new_de.csv";
    std::ifstream in(path, std::ios::binary);
    out.require(static_cast<bool>(in), "cannot open " + path);
    if (!in) {
        return out;
    }
    std::stringstream golden;
    golden << in.rdbuf();

    const auto recs = run_convergence(example1(), {MethodKind::NewDE}, {10, 20},
                                      {.grid_size = kDefaultGrid, .count_kernel_evals = true});
    std::ostringstream produced;
    write_csv(produced, recs);
    out.require(mask_timings(produced.str()) == mask_timings(golden.str()),
                "output differs from " + path + ":\n" + produced.str());
    if (out.pass) {
        out.detail = "matches golden/example1_new_de.csv";
    }
    return out;
}

}  // namespace

int main() {
    std::map<int, double> seconds;
    const Sweep sweep = run_sweep(seconds);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 exact-solution convergence at N=80", [&] { return criterion_convergence(sweep, seconds); }},
        {"AC2 rate-shape fits (examples 1, 2)", [&] { return criterion_rate_shape(sweep); }},
        {"AC3 new evaluator equals P_N of node values", criterion_pn_identity},
        {"AC4 kernel-evaluation counts", criterion_kernel_counts},
        {"AC5 quadrature oracles", criterion_quadrature},
        {"AC6 Sinc basis properties", criterion_basis},
        {"AC7 linear-solver contract", [&] { return criterion_linear_solver(sweep); }},
        {"AC8 transcription residual", criterion_transcription},
        {"AC9 CSV golden file", criterion_golden},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
