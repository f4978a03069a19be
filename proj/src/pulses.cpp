#include "boselat/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "boselat/errors.hpp"

namespace boselat {

namespace {

constexpr double kSqrtHalfPi = 1.2533141373155003;  // sqrt(pi/2)

void require_finite(const std::vector<double>& xs, const char* what) {
    for (double x : xs)
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string(what) + " must be finite");
}

void require_grid(const std::vector<double>& times,
                  const std::vector<double>& values) {
    if (times.size() != values.size())
        throw std::invalid_argument("pulse grid sizes must match");
    if (times.size() < 2)
        throw std::invalid_argument("pulse grid needs at least two points");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (!(times[k] > times[k - 1]))
            throw std::invalid_argument("pulse grid must be strictly increasing");
    require_finite(times, "pulse grid times");
    require_finite(values, "pulse grid values");
}

double interp_linear(const std::vector<double>& times,
                     const std::vector<double>& values, double t) {
    if (t < times.front() || t > times.back())
        throw std::domain_error("pulse sampled outside its window");
    auto it = std::upper_bound(times.begin(), times.end(), t);
    if (it == times.end()) return values.back();
    if (it == times.begin()) return values.front();
    const std::size_t hi = static_cast<std::size_t>(it - times.begin());
    const std::size_t lo = hi - 1;
    const double w = (t - times[lo]) / (times[hi] - times[lo]);
    return values[lo] + w * (values[hi] - values[lo]);
}

// Exact integral of the linear interpolant over [a, b] (trapezoids on
// clipped segments). Used as the closed form for piecewise-linear pulses.
double interp_integral(const std::vector<double>& times,
                       const std::vector<double>& values, double a, double b) {
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        const double lo = std::max(times[k], a);
        const double hi = std::min(times[k + 1], b);
        if (hi <= lo) continue;
        acc += 0.5 * (interp_linear(times, values, lo) +
                      interp_linear(times, values, hi)) * (hi - lo);
    }
    return acc;
}

}  // namespace

Pulse::Pulse(Shape shape, std::vector<double> params, std::vector<double> times,
             std::vector<double> values)
    : shape_(shape),
      params_(std::move(params)),
      times_(std::move(times)),
      values_(std::move(values)) {}

Pulse Pulse::constant(double value) {
    require_finite({value}, "constant pulse value");
    return Pulse(Shape::Constant, {value}, {}, {});
}

Pulse Pulse::step(double value, double t_on, double t_off, double baseline) {
    require_finite({value, t_on, t_off, baseline}, "step pulse parameters");
    if (!(t_on <= t_off))
        throw std::invalid_argument("step pulse requires t_on <= t_off");
    return Pulse(Shape::Step, {value, t_on, t_off, baseline}, {}, {});
}

Pulse Pulse::gaussian(double amplitude, double center, double width,
                      double baseline) {
    require_finite({amplitude, center, width, baseline},
                   "gaussian pulse parameters");
    if (!(width > 0.0))
        throw std::invalid_argument("gaussian pulse requires width > 0");
    return Pulse(Shape::Gaussian, {amplitude, center, width, baseline}, {}, {});
}

Pulse Pulse::piecewise_linear(std::vector<double> times,
                              std::vector<double> values) {
    require_grid(times, values);
    return Pulse(Shape::PiecewiseLinear, {}, std::move(times), std::move(values));
}

Pulse Pulse::sampled(std::vector<double> times, std::vector<double> values) {
    require_grid(times, values);
    return Pulse(Shape::Sampled, {}, std::move(times), std::move(values));
}

Pulse Pulse::sampled_from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open pulse file: " + path.string());
    std::vector<double> times, values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        double t = 0.0, v = 0.0;
        if (!(row >> t >> v))
            throw ConfigError("pulse file " + path.string() + ": line " +
                              std::to_string(lineno) +
                              " is not 'time value'");
        times.push_back(t);
        values.push_back(v);
    }
    try {
        return sampled(std::move(times), std::move(values));
    } catch (const std::invalid_argument& e) {
        throw ConfigError("pulse file " + path.string() + ": " + e.what());
    }
}

double Pulse::value_at(double t) const {
    if (t < 0.0) throw std::domain_error("pulse sampled outside its window");
    switch (shape_) {
        case Shape::Constant:
            return params_[0];
        case Shape::Step:
            // right-continuous at both switch points
            return (t >= params_[1] && t < params_[2]) ? params_[0] : params_[3];
        case Shape::Gaussian: {
            const double z = (t - params_[1]) / params_[2];
            return params_[3] + params_[0] * std::exp(-0.5 * z * z);
        }
        case Shape::PiecewiseLinear:
        case Shape::Sampled:
            return interp_linear(times_, values_, t);
    }
    throw std::logic_error("unreachable");
}

double Pulse::integral(double T) const {
    if (!(T >= 0.0)) throw std::invalid_argument("integration window needs T >= 0");
    if (T == 0.0) return 0.0;
    switch (shape_) {
        case Shape::Constant:
            return params_[0] * T;
        case Shape::Step: {
            const double overlap =
                std::max(0.0, std::min(params_[2], T) - std::max(params_[1], 0.0));
            return params_[3] * T + (params_[0] - params_[3]) * overlap;
        }
        case Shape::Gaussian: {
            const double amplitude = params_[0], center = params_[1],
                         width = params_[2], baseline = params_[3];
            const double s = width * std::sqrt(2.0);
            return baseline * T +
                   amplitude * width * kSqrtHalfPi *
                       (std::erf((T - center) / s) - std::erf(-center / s));
        }
        case Shape::PiecewiseLinear:
            if (times_.front() > 0.0 || times_.back() < T)
                throw std::domain_error("piecewise pulse does not cover [0, T]");
            return interp_integral(times_, values_, 0.0, T);
        case Shape::Sampled:
            if (times_.front() > 0.0 || times_.back() < T)
                throw std::domain_error("sampled pulse does not cover [0, T]");
            return simpson_integral(times_, values_, 0.0, T);
    }
    throw std::logic_error("unreachable");
}

double Pulse::average(double T) const {
    if (!(T > 0.0)) throw std::invalid_argument("pulse average needs T > 0");
    return integral(T) / T;
}

double sample(const Pulse& pulse, double t) { return pulse.value_at(t); }

double average(const Pulse& pulse, double T) { return pulse.average(T); }

double simpson_integral(const std::vector<double>& grid_times,
                        const std::vector<double>& grid_values, double a,
                        double b) {
    require_grid(grid_times, grid_values);
    const auto f = [&](double t) {
        return interp_linear(grid_times, grid_values, t);
    };
    // Composite Simpson aligned with the sample grid (so discontinuous
    // slopes sit on partition boundaries), refined by doubling the
    // subintervals per segment until the estimate is stable.
    const auto estimate = [&](int per_segment) {
        double acc = 0.0;
        for (std::size_t k = 0; k + 1 < grid_times.size(); ++k) {
            const double lo = std::max(grid_times[k], a);
            const double hi = std::min(grid_times[k + 1], b);
            if (hi <= lo) continue;
            const double h = (hi - lo) / (2.0 * per_segment);
            double seg = f(lo) + f(hi);
            for (int j = 1; j < 2 * per_segment; ++j)
                seg += f(lo + j * h) * ((j % 2 == 1) ? 4.0 : 2.0);
            acc += seg * h / 3.0;
        }
        return acc;
    };
    double prev = estimate(1);
    for (int per_segment = 2; per_segment <= (1 << 20); per_segment *= 2) {
        const double cur = estimate(per_segment);
        if (std::abs(cur - prev) < 1e-12 * std::max(1.0, std::abs(cur)))
            return cur;
        prev = cur;
    }
    return prev;
}

Pulse make_area_pulse(Pulse::Shape family, double target_area, double T,
                      double width_fraction) {
    if (!std::isfinite(target_area))
        throw std::invalid_argument("target area must be finite");
    if (!(T > 0.0)) throw std::invalid_argument("make_area_pulse needs T > 0");
    switch (family) {
        case Pulse::Shape::Constant:
            return Pulse::constant(target_area / T);
        case Pulse::Shape::Step: {
            if (!(width_fraction > 0.0) || width_fraction > 1.0)
                throw std::invalid_argument("infeasible step width fraction");
            const double w = width_fraction * T;
            return Pulse::step(target_area / w, 0.5 * (T - w), 0.5 * (T + w));
        }
        case Pulse::Shape::Gaussian: {
            if (!(width_fraction > 0.0))
                throw std::invalid_argument("infeasible gaussian width");
            const double sigma = width_fraction * T;
            // renormalized so the window integral is exact, not the
            // infinite-line integral
            const double unit = sigma * std::sqrt(2.0 * M_PI) *
                                std::erf(T / (2.0 * std::sqrt(2.0) * sigma));
            return Pulse::gaussian(target_area / unit, 0.5 * T, sigma, 0.0);
        }
        case Pulse::Shape::PiecewiseLinear: {
            if (!(width_fraction > 0.0) || width_fraction > 1.0)
                throw std::invalid_argument("infeasible triangle width fraction");
            const double w = width_fraction * T;
            const double h = 2.0 * target_area / w;
            std::vector<double> ts{0.0, 0.5 * (T - w), 0.5 * T, 0.5 * (T + w), T};
            std::vector<double> vs{0.0, 0.0, h, 0.0, 0.0};
            // drop duplicate knots when the triangle spans the full window
            std::vector<double> ts2, vs2;
            for (std::size_t k = 0; k < ts.size(); ++k) {
                if (!ts2.empty() && ts[k] <= ts2.back()) continue;
                ts2.push_back(ts[k]);
                vs2.push_back(vs[k]);
            }
            return Pulse::piecewise_linear(std::move(ts2), std::move(vs2));
        }
        case Pulse::Shape::Sampled:
            throw std::invalid_argument(
                "sampled pulses come from data; use rescale_to_area");
    }
    throw std::logic_error("unreachable");
}

Pulse rescale_to_area(const Pulse& base, double target_area, double T) {
    const double current = base.integral(T);
    if (current == 0.0)
        throw std::invalid_argument("cannot rescale a pulse with zero area");
    const double scale = target_area / current;
    switch (base.shape()) {
        case Pulse::Shape::Constant:
            return Pulse::constant(base.parameters()[0] * scale);
        case Pulse::Shape::Step:
            return Pulse::step(base.parameters()[0] * scale, base.parameters()[1],
                               base.parameters()[2], base.parameters()[3] * scale);
        case Pulse::Shape::Gaussian:
            return Pulse::gaussian(base.parameters()[0] * scale,
                                   base.parameters()[1], base.parameters()[2],
                                   base.parameters()[3] * scale);
        case Pulse::Shape::PiecewiseLinear:
        case Pulse::Shape::Sampled: {
            std::vector<double> vs = base.grid_values();
            for (double& v : vs) v *= scale;
            return base.shape() == Pulse::Shape::PiecewiseLinear
                       ? Pulse::piecewise_linear(base.grid_times(), std::move(vs))
                       : Pulse::sampled(base.grid_times(), std::move(vs));
        }
    }
    throw std::logic_error("unreachable");
}

std::string shape_name(Pulse::Shape shape) {
    switch (shape) {
        case Pulse::Shape::Constant: return "constant";
        case Pulse::Shape::Step: return "step";
        case Pulse::Shape::Gaussian: return "gaussian";
        case Pulse::Shape::PiecewiseLinear: return "triangle";
        case Pulse::Shape::Sampled: return "sampled";
    }
    throw std::logic_error("unreachable");
}

Pulse::Shape shape_from_name(const std::string& name) {
    if (name == "constant") return Pulse::Shape::Constant;
    if (name == "step") return Pulse::Shape::Step;
    if (name == "gaussian") return Pulse::Shape::Gaussian;
    if (name == "triangle" || name == "piecewise_linear")
        return Pulse::Shape::PiecewiseLinear;
    if (name == "sampled") return Pulse::Shape::Sampled;
    throw ConfigError("unknown pulse shape: " + name);
}

}  // namespace boselat
