#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "fracbvp/green.hpp"
#include "fracbvp/io.hpp"
#include "fracbvp/solver.hpp"
#include "oracles.hpp"

using namespace fracbvp;

TEST_CASE("17-digit formatting round-trips doubles") {
    oracle::Rng rng(0x10901u);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform(-1e6, 1e6) * std::pow(10.0, static_cast<int>(rng.next() % 20) - 10);
        CHECK(std::stod(format_double(x)) == x);
        CHECK(std::stod(format_shortest(x)) == x);
    }
    CHECK(format_shortest(0.1) == "0.1");
    CHECK(format_shortest(1.0) == "1");
}

TEST_CASE("solution CSV uses exact rational abscissae") {
    const BvpShape shape(Rational(3, 2), 1);
    const Solution sol = solve_linear_direct(
        shape, 1.0, GridFunction::constant(shape.forcing_grid(), 0.0));
    const std::string csv = solution_csv(sol);
    CHECK(csv == "t,y\n-1/2,0\n1/2,0\n3/2,0\n5/2,0\n");
}

TEST_CASE("green CSV has the documented header and row labels") {
    const GreenTable table = green_table(BvpShape(Rational(3, 2), 1));
    const std::string csv = green_csv(table);
    CHECK(csv.substr(0, 8) == "t,s0,s1\n");
    CHECK(csv.find("-1/2,0,0\n") != std::string::npos);
    // identical inputs give byte-identical output
    CHECK(csv == green_csv(green_table(BvpShape(Rational(3, 2), 1))));
}

TEST_CASE("solution report is a flat key=value block") {
    const BvpShape shape(Rational(3, 2), 1);
    const Solution sol = solve_linear_direct(
        shape, 1.0, GridFunction::constant(shape.forcing_grid(), 1.0));
    const std::string report = solution_report(sol);
    CHECK(report.find("method = direct\n") != std::string::npos);
    CHECK(report.find("sign = 1\n") != std::string::npos);
    CHECK(report.find("residual.max_abs = ") != std::string::npos);
    CHECK(report.find("cone.member = ") != std::string::npos);
}

TEST_CASE("atomic writes leave no temporary behind") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "fracbvp_io_test";
    std::filesystem::create_directories(dir);
    const std::filesystem::path target = dir / "out.csv";

    atomic_write_file(target, "hello\n");
    CHECK(std::filesystem::exists(target));
    CHECK_FALSE(std::filesystem::exists(target.string() + ".tmp"));
    atomic_write_file(target, "replaced\n");

    std::ifstream in(target);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "replaced\n");
    std::filesystem::remove_all(dir);
}
