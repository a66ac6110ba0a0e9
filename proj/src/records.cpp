#include "mlpa/records.hpp"

#include <cstdio>
#include <sstream>

namespace mlpa {

OutputRecord make_record(const DesignResult& result, const EvaluatedConfig& entry,
                         Objective objective, int rank) {
    OutputRecord record;
    record.total_elements = result.query.total_elements;
    record.levels = result.query.levels;
    record.objective = to_string(objective);
    record.partition = entry.config.partition.counts;
    record.spacing = entry.config.spacing.spacings;
    record.positions = entry.config.positions;
    record.unique_count = entry.coarray.unique_count;
    record.consecutive_count = entry.coarray.consecutive_count;
    record.unit_spacing_count = entry.coarray.unit_spacing_count;
    record.aperture = entry.config.aperture;
    record.hole_count = entry.coarray.hole_count;
    record.is_joint = entry.coarray.unique_count == result.max_unique &&
                      entry.coarray.consecutive_count == result.max_consecutive;
    record.rank = rank;
    return record;
}

std::string join_ints(const std::vector<int>& values, char separator) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << separator;
        out << values[i];
    }
    return out.str();
}

std::vector<std::string> physical_positions(const std::vector<int>& positions,
                                            double wavelength) {
    std::vector<std::string> out;
    out.reserve(positions.size());
    char buffer[64];
    for (int p : positions) {
        std::snprintf(buffer, sizeof(buffer), "%g", p * wavelength / 2.0);
        out.emplace_back(buffer);
    }
    return out;
}

nlohmann::ordered_json record_to_json(const OutputRecord& record,
                                      std::optional<double> wavelength) {
    nlohmann::ordered_json j;
    j["N"] = record.total_elements;
    j["L"] = record.levels;
    j["objective"] = record.objective;
    j["partition"] = record.partition;
    j["spacing"] = record.spacing;
    j["positions"] = record.positions;
    j["l_ug"] = record.unique_count;
    j["l_cg"] = record.consecutive_count;
    j["v_delta"] = record.unit_spacing_count;
    j["aperture"] = record.aperture;
    j["hole_count"] = record.hole_count;
    j["is_joint"] = record.is_joint;
    j["rank"] = record.rank;
    if (wavelength) j["positions_physical"] = physical_positions(record.positions, *wavelength);
    return j;
}

std::string record_csv_header(std::optional<double> wavelength) {
    std::string header =
        "N,L,objective,partition,spacing,positions,l_ug,l_cg,v_delta,aperture,"
        "hole_count,is_joint,rank";
    if (wavelength) header += ",positions_physical";
    return header;
}

std::string record_csv_row(const OutputRecord& record, std::optional<double> wavelength) {
    std::ostringstream out;
    out << record.total_elements << ',' << record.levels << ',' << record.objective << ','
        << join_ints(record.partition, ';') << ',' << join_ints(record.spacing, ';') << ','
        << join_ints(record.positions, ';') << ',' << record.unique_count << ','
        << record.consecutive_count << ',' << record.unit_spacing_count << ','
        << record.aperture << ',' << record.hole_count << ','
        << (record.is_joint ? "true" : "false") << ',' << record.rank;
    if (wavelength) {
        out << ',';
        auto physical = physical_positions(record.positions, *wavelength);
        for (std::size_t i = 0; i < physical.size(); ++i) {
            if (i) out << ';';
            out << physical[i];
        }
    }
    return out.str();
}

std::string record_table(const OutputRecord& record, std::optional<double> wavelength) {
    std::ostringstream out;
    out << "N=" << record.total_elements << " L=" << record.levels
        << " objective=" << record.objective << " rank=" << record.rank
        << (record.is_joint ? " (joint optimum)" : "") << '\n';
    out << "  counts:    " << join_ints(record.partition, ' ') << '\n';
    out << "  spacing:   " << join_ints(record.spacing, ' ') << '\n';
    out << "  positions: " << join_ints(record.positions, ' ') << '\n';
    if (wavelength) {
        out << "  physical:  ";
        auto physical = physical_positions(record.positions, *wavelength);
        for (std::size_t i = 0; i < physical.size(); ++i) {
            if (i) out << ' ';
            out << physical[i];
        }
        out << '\n';
    }
    out << "  l_ug=" << record.unique_count << " l_cg=" << record.consecutive_count
        << " v_delta=" << record.unit_spacing_count << " aperture=" << record.aperture
        << " holes=" << record.hole_count << '\n';
    return out.str();
}

}  // namespace mlpa
