#include "fractoda/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace fractoda {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& tr) {
    const State5 target = tr.target.to_state();
    out << "j,t,x1,x2,x3,x4,x5,dist\n";
    for (std::size_t j = 0; j < tr.states.size(); ++j) {
        const State5& s = tr.states[j];
        out << j << ',' << format_g17(tr.times[j]);
        for (std::size_t i = 0; i < 5; ++i) out << ',' << format_g17(s[i]);
        out << ',' << format_g17(distance(s, target)) << '\n';
    }
}

void write_trajectory_csv_file(const std::string& path, const Trajectory& tr) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_trajectory_csv(out, tr);
}

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 780.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 460.0;
constexpr int kTicks = 5;

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void write_series_svg(std::ostream& out, const std::string& title,
                      const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("write_series_svg: empty series");

    double lo = values[0];
    double hi = values[0];
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo == hi) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double n = static_cast<double>(values.size() - 1);
    const double jmax = (n == 0.0) ? 1.0 : n;

    auto sx = [&](double j) { return kLeft + (kRight - kLeft) * (j / jmax); };
    auto sy = [&](double v) { return kBottom - (kBottom - kTop) * ((v - lo) / (hi - lo)); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
        << "  <text x=\"" << px((kLeft + kRight) / 2) << "\" y=\"20\" text-anchor=\"middle\" "
        << "font-family=\"monospace\" font-size=\"14\">" << title << "</text>\n";

    // axes
    out << "  <line x1=\"" << px(kLeft) << "\" y1=\"" << px(kBottom) << "\" x2=\"" << px(kRight)
        << "\" y2=\"" << px(kBottom) << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << px(kLeft) << "\" y1=\"" << px(kTop) << "\" x2=\"" << px(kLeft)
        << "\" y2=\"" << px(kBottom) << "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= kTicks; ++i) {
        const double f = static_cast<double>(i) / kTicks;
        const double xj = f * jmax;
        const double xv = sx(xj);
        out << "  <line x1=\"" << px(xv) << "\" y1=\"" << px(kBottom) << "\" x2=\"" << px(xv)
            << "\" y2=\"" << px(kBottom + 5) << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << px(xv) << "\" y=\"" << px(kBottom + 20)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">"
            << tick_label(xj) << "</text>\n";

        const double yv = lo + f * (hi - lo);
        const double ypix = sy(yv);
        out << "  <line x1=\"" << px(kLeft - 5) << "\" y1=\"" << px(ypix) << "\" x2=\"" << px(kLeft)
            << "\" y2=\"" << px(ypix) << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << px(kLeft - 8) << "\" y=\"" << px(ypix + 4)
            << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">"
            << tick_label(yv) << "</text>\n";
    }

    out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\" points=\"";
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (j) out << ' ';
        out << px(sx(static_cast<double>(j))) << ',' << px(sy(values[j]));
    }
    out << "\"/>\n</svg>\n";
}

std::vector<std::string> write_orbit_svgs(const Trajectory& tr, const std::string& prefix) {
    static const char* const kNames[5] = {"x1", "x2", "x3", "x4", "x5"};
    std::vector<std::string> paths;
    paths.reserve(5);
    for (std::size_t i = 0; i < 5; ++i) {
        std::vector<double> series;
        series.reserve(tr.states.size());
        for (const State5& s : tr.states) series.push_back(s[i]);

        const std::string path = prefix + "_" + kNames[i] + ".svg";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
        write_series_svg(out, kNames[i], series);
        paths.push_back(path);
    }
    return paths;
}

void write_sweep_csv(std::ostream& out, const std::string& field1, const std::string& field2,
                     const std::vector<SweepRow>& rows) {
    out << field1 << ',' << field2 << ",verdict,q_tilde\n";
    for (const SweepRow& r : rows) {
        out << format_g17(r.v1) << ',' << format_g17(r.v2) << ',' << r.verdict << ',';
        if (r.q_tilde) out << format_g17(*r.q_tilde);
        out << '\n';
    }
}

}  // namespace fractoda
