#include "spincirc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "spincirc/errors.hpp"

namespace spincirc {

namespace {

constexpr double kGolden = 0.6180339887498949;

// Maximize a smooth scalar function on [lo, hi] by golden-section search.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double xtol) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

const std::array<std::array<std::pair<int, int>, 4>, 4> kEdges = {{
    {{{1, 2}, {2, 3}, {3, 4}, {4, 1}}},  // CW
    {{{1, 4}, {4, 3}, {3, 2}, {2, 1}}},  // CCW
    {{{1, 2}, {2, 4}, {4, 3}, {3, 1}}},  // POS8
    {{{1, 3}, {3, 4}, {4, 2}, {2, 1}}},  // REV8
}};

const std::array<std::array<int, 4>, 4> kPorts = {{
    {1, 2, 3, 4},
    {1, 4, 3, 2},
    {1, 2, 4, 3},
    {1, 3, 4, 2},
}};

void check_range(double delta_min, double delta_max) {
    if (!std::isfinite(delta_min) || !std::isfinite(delta_max) ||
        !(delta_min < delta_max))
        throw invalid_parameter("need finite delta_min < delta_max");
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int k = 0; k < n; ++k) g[k] = lo + (hi - lo) * k / (n - 1);
    g.back() = hi;
    return g;
}

}  // namespace

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::CW: return "CW";
        case Direction::CCW: return "CCW";
        case Direction::POS8: return "POS8";
        case Direction::REV8: return "REV8";
    }
    return "?";
}

const std::array<int, 4>& cycle_ports(Direction d) {
    return kPorts[static_cast<int>(d)];
}

const std::array<std::pair<int, int>, 4>& cycle_edges(Direction d) {
    return kEdges[static_cast<int>(d)];
}

SweepResult sweep(const ReducedParams& rp, double delta_min, double delta_max,
                  int steps) {
    rp.validate();
    check_range(delta_min, delta_max);
    if (steps < 2) throw invalid_parameter("steps must be >= 2");
    SweepResult r;
    r.params = rp;
    r.deltas = uniform_grid(delta_min, delta_max, steps);
    r.tables.reserve(steps);
    for (double d : r.deltas) r.tables.push_back(transmission(smatrix(rp, d)));
    return r;
}

SweepResult sweep_single(double gamma_a, double gamma_b, double delta_f,
                         double chi, double delta_min, double delta_max,
                         int steps) {
    check_range(delta_min, delta_max);
    if (steps < 2) throw invalid_parameter("steps must be >= 2");
    SweepResult r;
    r.params = ReducedParams{gamma_a, gamma_b, 0.0, delta_f, 0.0, chi, 0.0};
    r.deltas = uniform_grid(delta_min, delta_max, steps);
    r.tables.reserve(steps);
    for (double d : r.deltas)
        r.tables.push_back(
            transmission(single_resonator_smatrix(gamma_a, gamma_b, delta_f, chi, d)));
    return r;
}

double circulation_fidelity(const Eigen::Matrix4d& t, Direction d) {
    for (int i = 0; i < 4; ++i)
        if (std::abs(t.col(i).sum() - 1.0) > 1e-6)
            throw invalid_parameter("transmission table is not column-stochastic");
    double f = 1.0;
    for (const auto& [i, j] : cycle_edges(d)) f = std::min(f, t(j - 1, i - 1));
    return f;
}

double mean_cycle_transmission(const Eigen::Matrix4d& t, Direction d) {
    double s = 0.0;
    for (const auto& [i, j] : cycle_edges(d)) s += t(j - 1, i - 1);
    return 0.25 * s;
}

std::vector<Candidate> closed_form_points(const ReducedParams& rp) {
    rp.validate();
    if (rp.chi_1 != 0.0 || rp.chi_2 != 0.0)
        throw invalid_parameter("closed_form_points requires chi_1 = chi_2 = 0");

    const double sum = rp.delta_f1 + rp.delta_f2;
    const double rad2 = rp.j * rp.j - rp.gamma_a * rp.gamma_b + 0.25 * sum * sum;
    std::vector<Candidate> out;
    if (rad2 >= 0.0) {
        const double rad = std::sqrt(rad2);
        const double rev_off = 0.5 * (rp.delta_f2 - rp.delta_f1);
        const double pos_off = 0.5 * (rp.delta_f1 - rp.delta_f2);
        out.push_back({rev_off + rad, Direction::REV8});
        out.push_back({rev_off - rad, Direction::REV8});
        out.push_back({pos_off + rad, Direction::POS8});
        out.push_back({pos_off - rad, Direction::POS8});
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.delta != b.delta) return a.delta < b.delta;
        return static_cast<int>(a.direction) < static_cast<int>(b.direction);
    });
    // merge same-direction duplicates within 1 Hz
    std::vector<Candidate> merged;
    for (const auto& c : out) {
        bool dup = false;
        for (const auto& m : merged)
            if (m.direction == c.direction && std::abs(m.delta - c.delta) <= 1.0)
                dup = true;
        if (!dup) merged.push_back(c);
    }
    return merged;
}

std::vector<CirculatorPoint> find_circulator_points(const ReducedParams& rp,
                                                    double delta_min,
                                                    double delta_max,
                                                    double threshold) {
    rp.validate();
    check_range(delta_min, delta_max);
    if (!(threshold > 0.0) || threshold > 1.0)
        throw invalid_parameter("threshold must be in (0, 1]");

    auto fids = [&](double d) {
        const Eigen::Matrix4d t = transmission(smatrix(rp, d));
        std::array<double, 4> f{};
        for (int c = 0; c < 4; ++c)
            f[c] = circulation_fidelity(t, static_cast<Direction>(c));
        return f;
    };
    auto best = [&](double d) {
        const auto f = fids(d);
        return *std::max_element(f.begin(), f.end());
    };

    constexpr int kGrid = 4096;
    const auto grid = uniform_grid(delta_min, delta_max, kGrid);
    std::vector<double> val(kGrid);
    for (int k = 0; k < kGrid; ++k) val[k] = best(grid[k]);

    std::vector<CirculatorPoint> points;
    for (int k = 1; k + 1 < kGrid; ++k) {
        if (!(val[k] > val[k - 1] && val[k] > val[k + 1])) continue;
        if (val[k] < threshold - 0.05) continue;  // cannot refine above threshold
        const double x = golden_max(best, grid[k - 1], grid[k + 1], 1e-3);
        const auto f = fids(x);
        const double fmax = *std::max_element(f.begin(), f.end());
        if (fmax < threshold) continue;
        const Eigen::Matrix4d t = transmission(smatrix(rp, x));
        for (int c = 0; c < 4; ++c) {
            if (f[c] < fmax - 1e-12) continue;  // report ties for every cycle
            CirculatorPoint p;
            p.delta = x;
            p.direction = static_cast<Direction>(c);
            p.cycle = cycle_ports(p.direction);
            p.fidelity = f[c];
            p.mean_fidelity = mean_cycle_transmission(t, p.direction);
            points.push_back(p);
        }
    }

    std::sort(points.begin(), points.end(),
              [](const CirculatorPoint& a, const CirculatorPoint& b) {
                  if (a.delta != b.delta) return a.delta < b.delta;
                  return static_cast<int>(a.direction) < static_cast<int>(b.direction);
              });
    std::vector<CirculatorPoint> out;
    for (const auto& p : points) {
        bool dup = false;
        for (const auto& q : out)
            if (q.direction == p.direction && std::abs(q.delta - p.delta) <= 1.0)
                dup = true;
        if (!dup) out.push_back(p);
    }
    return out;
}

RoutingResult find_complete_routing(const ReducedParams& rp_template) {
    rp_template.validate();
    if (rp_template.chi_1 != 0.0 || rp_template.chi_2 != 0.0)
        throw invalid_parameter("find_complete_routing requires chi = 0");
    if (rp_template.gamma_a != rp_template.gamma_b)
        throw invalid_parameter("find_complete_routing requires gamma_a = gamma_b");
    const double jmag = std::abs(rp_template.j);
    if (jmag <= 0.0)
        throw invalid_parameter("find_complete_routing requires j != 0");

    auto min_cross = [&](double shift, double delta) {
        ReducedParams rp = rp_template;
        rp.delta_f1 = shift;
        rp.delta_f2 = -shift;
        const Eigen::Matrix4d t = transmission(smatrix(rp, delta));
        return std::min(std::min(t(2, 0), t(3, 1)), std::min(t(0, 2), t(1, 3)));
    };

    // Best detuning (and its score) for a given symmetric shift.
    auto inner = [&](double shift) {
        const double span = 1.5 * jmag;
        constexpr int n = 513;
        const auto grid = uniform_grid(-span, span, n);
        int ibest = 0;
        double vbest = -1.0;
        for (int k = 0; k < n; ++k) {
            const double v = min_cross(shift, grid[k]);
            if (v > vbest) {
                vbest = v;
                ibest = k;
            }
        }
        const double lo = grid[std::max(0, ibest - 1)];
        const double hi = grid[std::min(n - 1, ibest + 1)];
        const double d = golden_max([&](double x) { return min_cross(shift, x); },
                                    lo, hi, 1e-3);
        return std::pair<double, double>{d, min_cross(shift, d)};
    };
    auto inner_val = [&](double shift) { return inner(shift).second; };

    constexpr int kOuter = 257;
    const auto sgrid = uniform_grid(0.2 * jmag, 1.8 * jmag, kOuter);
    int ibest = 0;
    double vbest = -1.0;
    for (int k = 0; k < kOuter; ++k) {
        const double v = inner_val(sgrid[k]);
        if (v > vbest) {
            vbest = v;
            ibest = k;
        }
    }
    double shift = golden_max(inner_val, sgrid[std::max(0, ibest - 1)],
                              sgrid[std::min(kOuter - 1, ibest + 1)], 1e-3);

    // The objective is locally quadratic but numerically flat near the top;
    // a parabolic vertex fit pins the shift far below the golden-section
    // plateau.
    {
        const double h = 64.0;
        const double ga = inner_val(shift - h);
        const double gb = inner_val(shift);
        const double gc = inner_val(shift + h);
        const double denom = ga - 2.0 * gb + gc;
        if (denom < 0.0) shift += 0.5 * h * (ga - gc) / denom;
    }

    const auto [delta_star, score] = inner(shift);

    RoutingResult r;
    r.shift_star = shift;
    r.delta_star = delta_star;
    r.min_cross = score;
    r.candidate_plus =
        std::sqrt(rp_template.j * rp_template.j + rp_template.gamma_a * rp_template.gamma_b);
    r.candidate_minus =
        std::sqrt(std::max(0.0, rp_template.j * rp_template.j -
                                    rp_template.gamma_a * rp_template.gamma_b));
    const double dplus = std::abs(shift - r.candidate_plus);
    const double dminus = std::abs(shift - r.candidate_minus);
    if (dminus <= 1.0 && dminus <= dplus)
        r.matched = RoutingFormula::minus;
    else if (dplus <= 1.0)
        r.matched = RoutingFormula::plus;

    if (r.min_cross < 0.999)
        throw non_convergence("complete-routing search stalled at min_cross = " +
                              std::to_string(r.min_cross));
    return r;
}

std::vector<RobustnessReport> backscatter_report(
    const std::vector<std::pair<std::string, ReducedParams>>& scenarios,
    double delta_min, double delta_max) {
    if (scenarios.empty()) throw invalid_parameter("scenario list is empty");
    check_range(delta_min, delta_max);

    std::vector<RobustnessReport> out;
    for (const auto& [label, rp] : scenarios) {
        rp.validate();
        auto t13 = [&](double d) { return transmission(smatrix(rp, d))(2, 0); };
        constexpr int n = 4097;
        const auto grid = uniform_grid(delta_min, delta_max, n);
        int ibest = 0;
        double vbest = -1.0;
        for (int k = 0; k < n; ++k) {
            const double v = t13(grid[k]);
            if (v > vbest) {
                vbest = v;
                ibest = k;
            }
        }
        const double lo = grid[std::max(0, ibest - 1)];
        const double hi = grid[std::min(n - 1, ibest + 1)];
        const double x = golden_max(t13, lo, hi, 1e-3);
        out.push_back({label, t13(x), x});
    }
    return out;
}

}  // namespace spincirc
