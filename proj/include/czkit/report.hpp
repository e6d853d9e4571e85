#ifndef CZKIT_REPORT_HPP
#define CZKIT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "czkit/interval.hpp"

namespace czkit {

/// Shortest C99 hex form of a double (bit-exact in reports).
std::string hex_double(double v);

/// {"dec": v, "hex": "..."} pair used for every float in reports.
nlohmann::json json_number(double v);

nlohmann::json interval_json(const DyadicInterval& I);

} // namespace czkit

#endif
