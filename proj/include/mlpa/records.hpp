#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlpa/search.hpp"

namespace mlpa {

/// One reported optimum, flattened for emission. rank is 1-based within the
/// tie-ranked set it came from.
struct OutputRecord {
    int total_elements = 0;
    int levels = 0;
    std::string objective;
    std::vector<int> partition;
    std::vector<int> spacing;
    std::vector<int> positions;
    int unique_count = 0;
    int consecutive_count = 0;
    int unit_spacing_count = 0;
    int aperture = 0;
    int hole_count = 0;
    bool is_joint = false;
    int rank = 0;
};

OutputRecord make_record(const DesignResult& result, const EvaluatedConfig& entry,
                         Objective objective, int rank);

std::string join_ints(const std::vector<int>& values, char separator);

nlohmann::ordered_json record_to_json(const OutputRecord& record,
                                      std::optional<double> wavelength = std::nullopt);

std::string record_csv_header(std::optional<double> wavelength = std::nullopt);
std::string record_csv_row(const OutputRecord& record,
                           std::optional<double> wavelength = std::nullopt);
std::string record_table(const OutputRecord& record,
                         std::optional<double> wavelength = std::nullopt);

/// Physical positions at spacing d = wavelength / 2, formatted with %g.
std::vector<std::string> physical_positions(const std::vector<int>& positions,
                                            double wavelength);

}  // namespace mlpa
