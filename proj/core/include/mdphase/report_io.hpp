#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdphase/falsifier.hpp"
#include "mdphase/scenario.hpp"

namespace mdphase {

/**
 * Time-series CSV. Column set (order is stable):
 *   t, re_z, im_z, abs_z, theta, phi_rel, a1, a2, var1, var2, comm,
 *   d12, d23, d13, [sz — stern_gerlach/peres only],
 *   then per bound (eq8, eq11, eq12, eq15, eq16, eq17, eq18, eq24, eq25):
 *   <name>_lhs, <name>_rhs, <name>_slack, <name>_verdict.
 * Numbers are written with 17 significant digits; undefined entries as nan.
 */
std::string timeseries_csv(const TimeSeries& ts);

/// Same rows with an extra leading column for a swept parameter.
std::string sweep_csv_header(const TimeSeries& sample, const std::string& axis_name);
std::string sweep_csv_rows(const TimeSeries& ts, double axis_value);

nlohmann::ordered_json bounds_json(const TimeSeries& ts);
nlohmann::ordered_json peres_json(const PeresReport& report);
nlohmann::ordered_json falsifier_json(const FalsifierReport& report);

void write_text_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const nlohmann::ordered_json& j);

} // namespace mdphase
