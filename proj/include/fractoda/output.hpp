#pragma once

// CSV and SVG report writers.  CSV output is byte-stable across runs:
// fixed 17-significant-digit formatting, '.' decimal separator, '\n'
// line endings.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fractoda/integrator.hpp"
#include "fractoda/types.hpp"

namespace fractoda {

/// Formats a double with 17 significant digits ("%.17g", C locale).
std::string format_g17(double v);

/// Header "j,t,x1,x2,x3,x4,x5,dist"; one row per recorded state, dist is
/// the Euclidean distance to the trajectory's target equilibrium.
void write_trajectory_csv(std::ostream& out, const Trajectory& tr);
void write_trajectory_csv_file(const std::string& path, const Trajectory& tr);

/// Minimal line plot of one series against its index: 800x500 viewport,
/// linear axes, tick labels.
void write_series_svg(std::ostream& out, const std::string& title,
                      const std::vector<double>& values);

/// One SVG per state coordinate, named <prefix>_x1.svg .. <prefix>_x5.svg.
/// Returns the written paths.
std::vector<std::string> write_orbit_svgs(const Trajectory& tr, const std::string& prefix);

/// One sweep grid cell; empty q_tilde stands for the zero-eigenvalue
/// marker or a skipped cell.
struct SweepRow {
    double v1 = 0.0;
    double v2 = 0.0;
    int verdict = kSkippedCellCode;
    std::optional<double> q_tilde;
};

/// Header "<field1>,<field2>,verdict,q_tilde"; rows in grid row-major order.
void write_sweep_csv(std::ostream& out, const std::string& field1, const std::string& field2,
                     const std::vector<SweepRow>& rows);

}  // namespace fractoda
