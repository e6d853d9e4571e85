#include "czkit/report.hpp"

#include <cstdio>

#include "czkit/parallel.hpp"

namespace czkit {

namespace {
int g_default_threads = 0;
}

int effective_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_default_threads(int n) { g_default_threads = n; }
int default_threads() { return g_default_threads; }

std::string hex_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%a", v);
    return std::string(buf);
}

nlohmann::json json_number(double v) {
    return nlohmann::json{{"dec", v}, {"hex", hex_double(v)}};
}

nlohmann::json interval_json(const DyadicInterval& I) {
    return nlohmann::json{{"j", I.j}, {"k", I.k}};
}

} // namespace czkit
