#pragma once

#include <beltrami/geometry.hpp>

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace beltrami {

/// Uniform sampling grid over a parameter rectangle with an inset margin.
struct GridSpec {
    int rows = 24;
    int cols = 24;
    double inset = 0.05;       // fraction trimmed from each side
    bool keep_points = false;  // retain per-point residuals (CSV output)
};

inline std::vector<std::pair<double, double>> grid_points(const Rect& domain,
                                                          const GridSpec& grid) {
    const double du = domain.width() * grid.inset;
    const double dv = domain.height() * grid.inset;
    const double u0 = domain.u0 + du, u1 = domain.u1 - du;
    const double v0 = domain.v0 + dv, v1 = domain.v1 - dv;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(grid.rows) * grid.cols);
    for (int r = 0; r < grid.rows; ++r)
        for (int c = 0; c < grid.cols; ++c) {
            const double u = grid.rows == 1 ? (u0 + u1) / 2 : u0 + (u1 - u0) * r / (grid.rows - 1);
            const double v = grid.cols == 1 ? (v0 + v1) / 2 : v0 + (v1 - v0) * c / (grid.cols - 1);
            pts.emplace_back(u, v);
        }
    return pts;
}

/// Result of one residual evaluation at a grid point.
struct PointEval {
    double residual = 0;
    double cond_g = 0;
    double cond_e = 0;
};

/// Residual statistics of an identity check (or a named verdict) over a grid.
struct Report {
    enum class Status { Pass, Fail, NotApplicable };

    std::string identity;
    std::string surface;
    int rows = 0, cols = 0;
    int evaluated = 0, skipped = 0;
    std::map<std::string, int> skip_reasons;
    double residual_max = 0, residual_mean = 0;
    double argmax_u = 0, argmax_v = 0;
    double cond_g_at_max = 0, cond_e_at_max = 0;
    double tol = 0;
    Status status = Status::Pass;
    std::string note;
    std::vector<std::array<double, 3>> points;  // (u, v, residual) when kept

    bool pass() const { return status != Status::Fail; }
    const char* status_name() const {
        switch (status) {
            case Status::Pass: return "pass";
            case Status::Fail: return "fail";
            default: return "not-applicable";
        }
    }
};

/// Runs `fn` over the grid, skipping points where it throws a library error.
/// The sweep order (row-major) fixes the reduction order, so reports are
/// deterministic for a given configuration.
template <typename Fn>
Report sweep_grid(const std::string& identity, const std::string& surface, const Rect& domain,
                  const GridSpec& grid, double tol, Fn&& fn) {
    Report rep;
    rep.identity = identity;
    rep.surface = surface;
    rep.rows = grid.rows;
    rep.cols = grid.cols;
    rep.tol = tol;

    double sum = 0.0;
    for (const auto& [u, v] : grid_points(domain, grid)) {
        PointEval pe;
        try {
            pe = fn(u, v);
        } catch (const Error& err) {
            ++rep.skipped;
            ++rep.skip_reasons[err.what()];
            continue;
        }
        ++rep.evaluated;
        sum += pe.residual;
        if (pe.residual >= rep.residual_max) {
            rep.residual_max = pe.residual;
            rep.argmax_u = u;
            rep.argmax_v = v;
            rep.cond_g_at_max = pe.cond_g;
            rep.cond_e_at_max = pe.cond_e;
        }
        if (grid.keep_points) rep.points.push_back({u, v, pe.residual});
    }
    if (rep.evaluated > 0) rep.residual_mean = sum / rep.evaluated;
    rep.status = (rep.evaluated > 0 && rep.residual_max <= tol) ? Report::Status::Pass
                                                                : Report::Status::Fail;
    return rep;
}

}  // namespace beltrami
