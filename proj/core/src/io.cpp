#include "fracbvp/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fracbvp/errors.hpp"

namespace fracbvp {

std::string format_double(double x) {
    if (x == 0.0) return "0";  // canonicalize the sign of zero
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

std::string format_shortest(double x) {
    if (x == 0.0) return "0";
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
    return std::string(buffer, ptr);
}

std::string solution_csv(const Solution& solution) {
    std::ostringstream out;
    out << "t,y\n";
    const Grid& grid = solution.y.grid();
    for (int k = 0; k < grid.length(); ++k)
        out << grid.point(k).str() << "," << format_double(solution.y[k]) << "\n";
    return out.str();
}

std::string green_csv(const GreenTable& table) {
    std::ostringstream out;
    out << "t";
    for (int s = 0; s < table.cols(); ++s) out << ",s" << s;
    out << "\n";
    const Grid grid = table.shape.solution_grid();
    for (int k = 0; k < table.rows(); ++k) {
        out << grid.point(k).str();
        for (int s = 0; s < table.cols(); ++s)
            out << "," << format_double(table.value(k, s));
        out << "\n";
    }
    return out.str();
}

namespace {

const char* method_name(SolveMethod method) {
    switch (method) {
        case SolveMethod::green: return "green";
        case SolveMethod::direct: return "direct";
        case SolveMethod::fixed_point: return "fixedpoint";
    }
    return "?";
}

}  // namespace

std::string solution_report(const Solution& solution) {
    std::ostringstream out;
    out << "method = " << method_name(solution.method) << "\n";
    out << "sign = " << solution.sign << "\n";
    out << "iterations = " << solution.iterations << "\n";
    out << "clamped_evals = " << solution.f_evals.clamps << "\n";
    out << "extrapolated_evals = " << solution.f_evals.extrapolations << "\n";
    double eq_max = 0.0;
    for (double r : solution.residual.equation_residuals) eq_max = std::max(eq_max, r);
    out << "residual.equation_max = " << format_double(eq_max) << "\n";
    out << "residual.bc1 = " << format_double(solution.residual.bc1) << "\n";
    out << "residual.bc2 = " << format_double(solution.residual.bc2) << "\n";
    out << "residual.max_abs = " << format_double(solution.residual.max_abs) << "\n";
    out << "cone.norm = " << format_double(solution.cone.norm) << "\n";
    out << "cone.min_interior = " << format_double(solution.cone.min_interior) << "\n";
    out << "cone.margin = " << format_double(solution.cone.margin) << "\n";
    out << "cone.member = " << (solution.cone.member ? "true" : "false") << "\n";
    return out.str();
}

void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace fracbvp
