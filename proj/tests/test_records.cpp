#include <doctest.h>

#include "mlpa/records.hpp"

namespace {

mlpa::OutputRecord sample_record() {
    mlpa::DesignQuery query;
    query.total_elements = 8;
    query.levels = 3;
    query.objective = mlpa::Objective::unique;
    auto result = mlpa::optimize(query);
    return mlpa::make_record(result, result.recommended(mlpa::Objective::unique),
                             mlpa::Objective::unique, 1);
}

}  // namespace

TEST_CASE("record fields") {
    auto record = sample_record();
    CHECK(record.total_elements == 8);
    CHECK(record.levels == 3);
    CHECK(record.objective == "unique");
    CHECK(record.partition == std::vector<int>{2, 3, 5});
    CHECK(record.spacing == std::vector<int>{5, 2, 3});
    CHECK(record.positions == std::vector<int>{0, 2, 3, 4, 5, 6, 9, 12});
    CHECK(record.unique_count == 23);
    CHECK(record.consecutive_count == 21);
    CHECK(record.unit_spacing_count == 4);
    CHECK(record.aperture == 12);
    CHECK(record.hole_count == 1);
    CHECK(record.is_joint);
    CHECK(record.rank == 1);
}

TEST_CASE("json and csv carry identical values") {
    auto record = sample_record();
    auto j = mlpa::record_to_json(record);
    CHECK(j["N"] == 8);
    CHECK(j["L"] == 3);
    CHECK(j["objective"] == "unique");
    CHECK(j["spacing"] == std::vector<int>{5, 2, 3});
    CHECK(j["l_ug"] == 23);
    CHECK(j["l_cg"] == 21);
    CHECK(j["v_delta"] == 4);
    CHECK(j["aperture"] == 12);
    CHECK(j["hole_count"] == 1);
    CHECK(j["is_joint"] == true);
    CHECK(j["rank"] == 1);

    CHECK(mlpa::record_csv_header() ==
          "N,L,objective,partition,spacing,positions,l_ug,l_cg,v_delta,aperture,"
          "hole_count,is_joint,rank");
    CHECK(mlpa::record_csv_row(record) ==
          "8,3,unique,2;3;5,5;2;3,0;2;3;4;5;6;9;12,23,21,4,12,1,true,1");

    // the csv row round-trips to the same values the json carries
    std::vector<std::string> cells;
    std::string row = mlpa::record_csv_row(record);
    std::size_t start = 0;
    while (true) {
        auto comma = row.find(',', start);
        cells.push_back(row.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    REQUIRE(cells.size() == 13);
    CHECK(std::stoi(cells[0]) == j["N"].get<int>());
    CHECK(std::stoi(cells[1]) == j["L"].get<int>());
    CHECK(cells[2] == j["objective"].get<std::string>());
    CHECK(std::stoi(cells[6]) == j["l_ug"].get<int>());
    CHECK(std::stoi(cells[7]) == j["l_cg"].get<int>());
    CHECK(std::stoi(cells[8]) == j["v_delta"].get<int>());
    CHECK(std::stoi(cells[9]) == j["aperture"].get<int>());
    CHECK(std::stoi(cells[10]) == j["hole_count"].get<int>());
    CHECK((cells[11] == "true") == j["is_joint"].get<bool>());
    CHECK(std::stoi(cells[12]) == j["rank"].get<int>());
}

TEST_CASE("wavelength scaling") {
    auto record = sample_record();
    auto physical = mlpa::physical_positions(record.positions, 3.0);
    REQUIRE(physical.size() == record.positions.size());
    CHECK(physical[0] == "0");
    CHECK(physical[1] == "3");   // position 2 at d = 1.5
    CHECK(physical[2] == "4.5");

    auto j = mlpa::record_to_json(record, 3.0);
    CHECK(j.contains("positions_physical"));
    CHECK(mlpa::record_csv_header(3.0) ==
          "N,L,objective,partition,spacing,positions,l_ug,l_cg,v_delta,aperture,"
          "hole_count,is_joint,rank,positions_physical");
}

TEST_CASE("join_ints") {
    CHECK(mlpa::join_ints({1, 2, 3}, ';') == "1;2;3");
    CHECK(mlpa::join_ints({}, ';').empty());
    CHECK(mlpa::join_ints({7}, ',') == "7");
}
