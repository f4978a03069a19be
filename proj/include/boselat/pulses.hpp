#ifndef BOSELAT_PULSES_HPP
#define BOSELAT_PULSES_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace boselat {

/// Time-dependent control parameter over a gate window, hbar = 1 units.
/// Pulses are immutable value objects; evaluation is pure.
///
/// Conventions (frozen):
///  - step pulses are right-continuous at the switch points,
///  - sampled pulses interpolate linearly between grid points and are
///    defined only on [grid.front(), grid.back()],
///  - gaussians are evaluated as written (no window truncation of the
///    value); area-targeted construction renormalizes the amplitude so
///    the exact window integral matches (see make_area_pulse).
class Pulse {
public:
    enum class Shape { Constant, Step, Gaussian, PiecewiseLinear, Sampled };

    static Pulse constant(double value);
    /// `value` on [t_on, t_off), `baseline` outside.
    static Pulse step(double value, double t_on, double t_off,
                      double baseline = 0.0);
    static Pulse gaussian(double amplitude, double center, double width,
                          double baseline);
    static Pulse piecewise_linear(std::vector<double> times,
                                  std::vector<double> values);
    static Pulse sampled(std::vector<double> times, std::vector<double> values);
    /// Two-column text file (time, value); '#' comment lines allowed.
    static Pulse sampled_from_file(const std::filesystem::path& path);

    /// Value at time t. Throws std::domain_error outside the pulse window
    /// (t < 0, or beyond the grid of a sampled/piecewise pulse).
    double value_at(double t) const;

    /// Exact integral over [0, T]. Closed form for analytic shapes and
    /// piecewise-linear knots; composite Simpson refined to 1e-12 relative
    /// for sampled pulses.
    double integral(double T) const;

    /// (1/T) * integral(T); requires T > 0.
    double average(double T) const;

    Shape shape() const noexcept { return shape_; }
    const std::vector<double>& parameters() const noexcept { return params_; }
    const std::vector<double>& grid_times() const noexcept { return times_; }
    const std::vector<double>& grid_values() const noexcept { return values_; }

private:
    Pulse(Shape shape, std::vector<double> params, std::vector<double> times,
          std::vector<double> values);

    Shape shape_;
    std::vector<double> params_;  // shape-specific scalar parameters
    std::vector<double> times_;   // piecewise/sampled grid
    std::vector<double> values_;
};

double sample(const Pulse& pulse, double t);
double average(const Pulse& pulse, double T);

/// Pulse of the requested family whose integral over [0, T] equals
/// `target_area` exactly. Width parameter per family (all relative to T):
/// gaussian sigma = width_fraction*T centered at T/2; step and triangle
/// windows of width width_fraction*T centered at T/2. Constant ignores
/// the width. Throws std::invalid_argument for infeasible shapes
/// (non-positive width or T).
Pulse make_area_pulse(Pulse::Shape family, double target_area, double T,
                      double width_fraction = 0.125);

/// Rescale an existing pulse so its integral over [0, T] equals
/// `target_area` (used for user-supplied sampled shapes). The base pulse
/// must have a nonzero integral.
Pulse rescale_to_area(const Pulse& base, double target_area, double T);

std::string shape_name(Pulse::Shape shape);
Pulse::Shape shape_from_name(const std::string& name);

/// Adaptive composite Simpson of f over [a, b]; interval count doubles
/// until successive estimates differ by < 1e-12 relative.
double simpson_integral(const std::vector<double>& grid_times,
                        const std::vector<double>& grid_values, double a,
                        double b);

}  // namespace boselat

#endif
