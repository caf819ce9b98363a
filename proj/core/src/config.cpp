#include "fracbvp/config.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "fracbvp/errors.hpp"
#include "fracbvp/io.hpp"

namespace fracbvp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto pos = s.find(sep);
        if (pos == std::string_view::npos) {
            parts.push_back(trim(s));
            return parts;
        }
        parts.push_back(trim(s.substr(0, pos)));
        s.remove_prefix(pos + 1);
    }
}

double parse_double(std::string_view s, const std::string& field, int line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ValidationError(field, "line " + std::to_string(line) +
                                         ": not a number: '" + std::string(s) + "'");
    return value;
}

int parse_int(std::string_view s, const std::string& field, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ValidationError(field, "line " + std::to_string(line) +
                                         ": not an integer: '" + std::string(s) + "'");
    return value;
}

NonlinearitySpec parse_f(std::string_view value, int line) {
    const auto space = value.find(' ');
    const std::string_view head = space == std::string_view::npos
                                      ? value
                                      : trim(value.substr(0, space));
    const std::string_view rest =
        space == std::string_view::npos ? std::string_view{} : trim(value.substr(space + 1));
    if (head == "constant")
        return NonlinearitySpec::constant(parse_double(rest, "f", line));
    if (head == "builtin") {
        if (rest == "example1") return NonlinearitySpec::builtin(1);
        if (rest == "example2") return NonlinearitySpec::builtin(2);
        if (rest == "example3") return NonlinearitySpec::builtin(3);
        throw ValidationError("f", "line " + std::to_string(line) +
                                       ": unknown builtin '" + std::string(rest) + "'");
    }
    if (head == "table") {
        std::vector<std::pair<double, double>> points;
        for (std::string_view pair : split(rest, ',')) {
            const auto colon = pair.find(':');
            if (colon == std::string_view::npos)
                throw ValidationError("f", "line " + std::to_string(line) +
                                              ": table entries are y:f pairs");
            points.emplace_back(
                parse_double(trim(pair.substr(0, colon)), "f", line),
                parse_double(trim(pair.substr(colon + 1)), "f", line));
        }
        return NonlinearitySpec::table(std::move(points));
    }
    throw ValidationError("f", "line " + std::to_string(line) +
                                   ": expected 'constant', 'builtin' or 'table'");
}

}  // namespace

ProblemConfig parse_problem_config(std::string_view text) {
    std::map<std::string, std::pair<std::string, int>> entries;  // key -> (value, line)
    int line_no = 0;
    for (std::string_view line : split(text, '\n')) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, "expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key != "v" && key != "b" && key != "lambda" && key != "h" && key != "f")
            throw ParseError(line_no, "unknown key '" + key + "'");
        if (entries.contains(key))
            throw ParseError(line_no, "duplicate key '" + key + "'");
        entries.emplace(key, std::make_pair(value, line_no));
    }
    for (const char* required : {"v", "b", "lambda", "h", "f"})
        if (!entries.contains(required))
            throw ValidationError(required, "missing from config");

    ProblemConfig config;
    {
        const auto& [value, line] = entries.at("v");
        try {
            config.v = Rational::parse(value);
        } catch (const DomainError& e) {
            throw ValidationError("v", "line " + std::to_string(line) + ": " + e.what());
        }
        // v = 2 itself passes range validation so the shape layer can report
        // it as the degenerate resonant case rather than a config typo.
        if (config.v <= Rational(1) || config.v > Rational(2))
            throw ValidationError("v", "line " + std::to_string(line) +
                                           ": must lie inside (1, 2), got " +
                                           config.v.str());
    }
    {
        const auto& [value, line] = entries.at("b");
        config.b = parse_int(value, "b", line);
        if (config.b < 1)
            throw ValidationError("b", "line " + std::to_string(line) + ": must be >= 1");
    }
    {
        const auto& [value, line] = entries.at("lambda");
        config.lambda = parse_double(value, "lambda", line);
        if (!(config.lambda > 0.0) || !std::isfinite(config.lambda))
            throw ValidationError("lambda",
                                  "line " + std::to_string(line) + ": must be > 0");
    }
    {
        const auto& [value, line] = entries.at("h");
        const auto space = value.find(' ');
        const std::string head =
            std::string(space == std::string::npos ? std::string_view(value)
                                                   : trim(std::string_view(value).substr(0, space)));
        const std::string_view rest = space == std::string::npos
                                          ? std::string_view{}
                                          : trim(std::string_view(value).substr(space + 1));
        if (head == "constant") {
            const double c = parse_double(rest, "h", line);
            if (c < 0.0)
                throw ValidationError("h", "line " + std::to_string(line) +
                                               ": constant must be >= 0");
            config.h = c;
        } else if (head == "values") {
            std::vector<double> values;
            for (std::string_view item : split(rest, ','))
                values.push_back(parse_double(item, "h", line));
            if (static_cast<int>(values.size()) != config.b + 2)
                throw ValidationError(
                    "h", "line " + std::to_string(line) + ": expected " +
                             std::to_string(config.b + 2) + " values, got " +
                             std::to_string(values.size()));
            for (double x : values)
                if (x < 0.0)
                    throw ValidationError("h", "line " + std::to_string(line) +
                                                   ": values must be >= 0");
            config.h = std::move(values);
        } else {
            throw ValidationError("h", "line " + std::to_string(line) +
                                           ": expected 'constant' or 'values'");
        }
    }
    {
        const auto& [value, line] = entries.at("f");
        config.f = parse_f(value, line);
    }
    return config;
}

std::string print_problem_config(const ProblemConfig& config) {
    std::ostringstream out;
    out << "v = " << config.v.str() << "\n";
    out << "b = " << config.b << "\n";
    out << "lambda = " << format_shortest(config.lambda) << "\n";
    if (const double* c = std::get_if<double>(&config.h)) {
        out << "h = constant " << format_shortest(*c) << "\n";
    } else {
        out << "h = values ";
        const auto& values = std::get<std::vector<double>>(config.h);
        for (size_t i = 0; i < values.size(); ++i)
            out << (i ? "," : "") << format_shortest(values[i]);
        out << "\n";
    }
    switch (config.f.kind()) {
        case NonlinearitySpec::Kind::constant:
            out << "f = constant " << format_shortest(config.f.constant_value()) << "\n";
            break;
        case NonlinearitySpec::Kind::builtin:
            out << "f = builtin example" << config.f.builtin_index() << "\n";
            break;
        case NonlinearitySpec::Kind::table: {
            out << "f = table ";
            const auto& points = config.f.table_points();
            for (size_t i = 0; i < points.size(); ++i)
                out << (i ? "," : "") << format_shortest(points[i].first) << ":"
                    << format_shortest(points[i].second);
            out << "\n";
            break;
        }
    }
    return out.str();
}

Problem make_problem(const ProblemConfig& config) {
    BvpShape shape(config.v, config.b);
    GridFunction h =
        std::holds_alternative<double>(config.h)
            ? GridFunction::constant(shape.weight_grid(), std::get<double>(config.h))
            : GridFunction(shape.weight_grid(), std::get<std::vector<double>>(config.h));
    return Problem(shape, config.lambda, std::move(h), config.f);
}

ProblemConfig builtin_example_config(int n) {
    ProblemConfig config;
    config.h = 1.0;
    switch (n) {
        case 1:
            config.v = Rational(13, 10);
            config.b = 5;
            config.lambda = 0.05;
            config.f = NonlinearitySpec::builtin(1);
            return config;
        case 2:
            config.v = Rational(3, 2);
            config.b = 10;
            config.lambda = 0.1;
            config.f = NonlinearitySpec::builtin(2);
            return config;
        case 3:
            config.v = Rational(5, 3);
            config.b = 7;
            config.lambda = 0.05;
            config.f = NonlinearitySpec::builtin(3);
            return config;
        default:
            throw DomainError("no builtin example " + std::to_string(n));
    }
}

}  // namespace fracbvp
