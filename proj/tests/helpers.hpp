#ifndef QEDVAC_TESTS_HELPERS_HPP
#define QEDVAC_TESTS_HELPERS_HPP

// Shared fixtures and oracles for the test suite.

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qedvac/constants.hpp"
#include "qedvac/particles.hpp"

namespace testutil {

inline std::string data_dir() { return QEDVAC_DATA_DIR; }

inline const qedvac::PhysicalConstants& fixture_constants() {
    static const qedvac::PhysicalConstants c =
        qedvac::load_constants(data_dir() + "/codata2018.txt");
    return c;
}

inline qedvac::ParticleSet load_set(const std::string& label) {
    const std::string file = label == "SM-with-W" ? "sm_with_w.csv"
                                                  : "sm_fermions.csv";
    return qedvac::load_particles(data_dir() + "/particles/" + file, label);
}

inline qedvac::ParticleSet electron_only() {
    std::stringstream ss("name,charge_ratio,mass_kg,degeneracy,kind\n"
                         "electron,-1,9.109383702e-31,1,lepton\n");
    return qedvac::load_particles(ss, "electron-only", "<electron-only>");
}

// Constants fixture text with optional per-key overrides and omissions.
inline std::string fixture_text(
    const std::map<std::string, std::string>& overrides = {},
    const std::vector<std::string>& omit = {}) {
    static const std::vector<std::pair<std::string, std::string>> kBase = {
        {"elementary_charge", "1.602176634e-19"},
        {"hbar", "1.0545718176461565e-34"},
        {"planck_h", "6.62607015e-34"},
        {"c_rel", "299792458"},
        {"boltzmann_k", "1.380649e-23"},
        {"epsilon0_exp", "8.8541878128e-12"},
        {"alpha_inverse_exp", "137.035999084"},
        {"gravitational_constant", "6.67430e-11"},
    };
    std::string out;
    for (const auto& [k, v] : kBase) {
        bool skip = false;
        for (const auto& o : omit)
            skip = skip || o == k;
        if (skip)
            continue;
        const auto it = overrides.find(k);
        out += k + " = " + (it == overrides.end() ? v : it->second) + "\n";
    }
    return out;
}

inline bool ulps_close(double a, double b, double n_ulps) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <=
           n_ulps * std::numeric_limits<double>::epsilon() * scale;
}

// Midpoint-rule brute force for the running kernel; the quadrature oracle.
// Kahan accumulation so the reference itself is good to ~1e-12 absolute.
inline double midpoint_feynman(double z, long long panels) {
    double sum = 0.0;
    double carry = 0.0;
    const double h = 1.0 / static_cast<double>(panels);
    for (long long i = 0; i < panels; ++i) {
        const double x = (static_cast<double>(i) + 0.5) * h;
        const double w = x * (1.0 - x);
        const double term = w * std::log1p(w * z) - carry;
        const double next = sum + term;
        carry = (next - sum) - term;
        sum = next;
    }
    return sum * h;
}

struct CommandResult {
    int exit_code;
    std::string out;
};

// Runs a shell command, capturing standard output (redirect in the command
// string to capture more).
inline CommandResult run_command(const std::string& cmd) {
    CommandResult r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
        r.out.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status))
        r.exit_code = WEXITSTATUS(status);
    return r;
}

#ifdef QEDVAC_CLI_PATH
inline std::string cli_path() { return QEDVAC_CLI_PATH; }

// Canonical list of CLI invocations exercised by the suite: one per
// subcommand plus every distinctive flag combination. The determinism
// criterion replays exactly this list.
inline const std::vector<std::string>& cli_invocations() {
    static const std::vector<std::string> cmds = {
        "running --k 100GeV/c",
        "running --k 0GeV",
        "running --k 1e10/m --mode paper-literal",
        "running --sweep 1GeV/c:100GeV/c:3,log",
        "landau",
        "landau --zeldovich 12 --planck",
        "landau --mode paper-literal",
        "vacuum --option 4",
        "vacuum --option 1 --show alpha",
        "sum-charges",
        "sum-charges --alpha-inverse 274.071998168",
        "schwinger --intensity",
        "schwinger --variant sauter-bohr",
        "focal --volume 1um3 --p 1e-20",
        "blackbody --law rj --T 300 --nu 1e14",
        "blackbody --law rj --T 300 --integrate --nu-max 1e15",
        "blackbody --law planck2 --T 300 --sweep 1e12:1e15:5,log",
        "particles",
        "particles --set SM-fermions",
    };
    return cmds;
}
#endif

}  // namespace testutil

#endif  // QEDVAC_TESTS_HELPERS_HPP
