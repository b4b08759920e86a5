#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "arpeak/types.hpp"

namespace arpeak {

struct DatasetRecord {
    std::string time_label;
    double value = 0.0;
};

struct Dataset {
    std::vector<DatasetRecord> records;

    TimeSeries to_series(std::string origin) const;
};

// Two-column CSV: one header line, then label,value rows. UTF-8, comma
// separator, decimal point. ParseError messages carry the line number.
Dataset read_label_value_csv(const std::filesystem::path& path);

} // namespace arpeak
