#include "czkit/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace czkit {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

RunConfig RunConfig::parse_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config: bad section at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "kernel" && section != "window" && section != "basis" &&
                section != "quadrature" && section != "run" && section != "t1")
                throw std::invalid_argument("config: unknown section '" + section + "'");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value at line " +
                                        std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        const std::string qual = section + "." + key;
        try {
            if (qual == "kernel.name") cfg.kernel = val;
            else if (qual == "kernel.b") cfg.paraproduct_b = val;
            else if (qual == "window.M") cfg.M = std::stoi(val);
            else if (qual == "window.R") cfg.R = std::stod(val);
            else if (qual == "window.jmin") cfg.j_min = std::stoi(val);
            else if (qual == "window.jmax") cfg.j_max = std::stoi(val);
            else if (qual == "basis.m") cfg.basis_m = std::stoi(val);
            else if (qual == "basis.K") cfg.basis_K = std::stoi(val);
            else if (qual == "basis.tau_orth") cfg.tau_orth = std::stod(val);
            else if (qual == "quadrature.tolerance") cfg.tolerance = std::stod(val);
            else if (qual == "run.out") cfg.out_path = val;
            else if (qual == "run.cache_dir") cfg.cache_dir = val;
            else if (qual == "run.threads") cfg.threads = std::stoi(val);
            else if (qual == "t1.k_min") cfg.k_min = std::stoi(val);
            else if (qual == "t1.k_max") cfg.k_max = std::stoi(val);
            else
                throw std::invalid_argument("config: unknown key '" + qual + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("config: bad value for '" + qual + "'");
        }
    }
    if (cfg.j_min > cfg.j_max) throw std::invalid_argument("config: jmin > jmax");
    if (cfg.M < 1) throw std::invalid_argument("config: M must be >= 1");
    return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

std::string RunConfig::normalized() const {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "[kernel]\nname = %s\nb = %s\n"
                  "[window]\nM = %d\nR = %.17g\njmin = %d\njmax = %d\n"
                  "[basis]\nm = %d\nK = %d\ntau_orth = %.17g\n"
                  "[quadrature]\ntolerance = %.17g\n"
                  "[run]\nout = %s\ncache_dir = %s\nthreads = %d\n"
                  "[t1]\nk_min = %d\nk_max = %d\n",
                  kernel.c_str(), paraproduct_b.c_str(), M, R, j_min, j_max, basis_m, basis_K,
                  tau_orth, tolerance, out_path.c_str(), cache_dir.c_str(), threads, k_min,
                  k_max);
    return std::string(buf);
}

} // namespace czkit
