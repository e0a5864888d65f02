#ifndef QEDVAC_SWEEP_HPP
#define QEDVAC_SWEEP_HPP

// Sweep-grid parsing and generation for CLI sweeps. The textual form is
// "start:stop:points,log|lin"; grids are generated in requested order and
// the endpoints are pinned exactly so repeated runs are byte-identical.

#include <cmath>
#include <string>
#include <vector>

#include "qedvac/detail/text.hpp"
#include "qedvac/errors.hpp"

namespace qedvac {

struct SweepSpec {
    double start;
    double stop;
    int points;
    bool logarithmic;
};

inline SweepSpec parse_sweep(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ValidationError("sweep '" + text +
                              "': expected start:stop:points,log|lin");
    const std::string scale = detail::trim(text.substr(comma + 1));
    SweepSpec spec{};
    if (scale == "log")
        spec.logarithmic = true;
    else if (scale == "lin")
        spec.logarithmic = false;
    else
        throw ValidationError("sweep '" + text + "': scale must be log or lin");

    const std::string head = text.substr(0, comma);
    const auto c1 = head.find(':');
    const auto c2 = head.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ValidationError("sweep '" + text +
                              "': expected start:stop:points,log|lin");
    try {
        std::size_t pos = 0;
        const std::string s0 = detail::trim(head.substr(0, c1));
        const std::string s1 = detail::trim(head.substr(c1 + 1, c2 - c1 - 1));
        const std::string s2 = detail::trim(head.substr(c2 + 1));
        spec.start = std::stod(s0, &pos);
        if (pos != s0.size())
            throw ValidationError("");
        spec.stop = std::stod(s1, &pos);
        if (pos != s1.size())
            throw ValidationError("");
        spec.points = std::stoi(s2, &pos);
        if (pos != s2.size())
            throw ValidationError("");
    } catch (const std::exception&) {
        throw ValidationError("sweep '" + text + "': malformed numbers");
    }
    if (spec.points < 1)
        throw ValidationError("sweep '" + text + "': points must be >= 1");
    if (spec.logarithmic && !(spec.start > 0.0 && spec.stop > 0.0))
        throw ValidationError("sweep '" + text +
                              "': log scale needs positive endpoints");
    return spec;
}

inline std::vector<double> make_grid(const SweepSpec& spec) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(spec.points));
    if (spec.points == 1) {
        grid.push_back(spec.start);
        return grid;
    }
    if (spec.logarithmic) {
        const double l0 = std::log(spec.start);
        const double l1 = std::log(spec.stop);
        for (int i = 0; i < spec.points; ++i)
            grid.push_back(
                std::exp(l0 + (l1 - l0) * i / (spec.points - 1)));
    } else {
        for (int i = 0; i < spec.points; ++i)
            grid.push_back(spec.start +
                           (spec.stop - spec.start) * i / (spec.points - 1));
    }
    grid.front() = spec.start;
    grid.back() = spec.stop;
    return grid;
}

}  // namespace qedvac

#endif  // QEDVAC_SWEEP_HPP
