#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopenergy/experiments.hpp"

namespace hopenergy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

inline constexpr int kDefaultCsvPrecision = 6;

// Locale-independent shortest-of-%g formatting with `precision` significant
// digits.
std::string format_number(double value, int precision = kDefaultCsvPrecision);

// Header from the first record's table fields, one row per record.
void write_csv(const std::vector<SweepRecord>& records, std::ostream& out,
               int precision = kDefaultCsvPrecision);

nlohmann::ordered_json record_to_json(const SweepRecord& record);
nlohmann::ordered_json records_to_json(const std::vector<SweepRecord>& records);

// Entry point behind the hopenergy binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hopenergy::cli
