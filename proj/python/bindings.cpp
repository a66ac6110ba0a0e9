#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlpa/coarray.hpp"
#include "mlpa/core.hpp"
#include "mlpa/reference_arrays.hpp"
#include "mlpa/search.hpp"

namespace py = pybind11;

namespace {

mlpa::Partition as_partition(const std::vector<int>& counts) {
    return mlpa::Partition{counts};
}

mlpa::SpacingOrder as_spacing(const std::vector<int>& spacings) {
    return mlpa::SpacingOrder{spacings};
}

py::dict coarray_dict(const mlpa::CoarrayReport& report) {
    py::dict d;
    d["lags"] = report.lags;
    py::dict weights;
    for (const auto& [lag, weight] : report.weights) weights[py::int_(lag)] = weight;
    d["weights"] = weights;
    d["l_ug"] = report.unique_count;
    d["l_cg"] = report.consecutive_count;
    d["v_delta"] = report.unit_spacing_count;
    d["hole_count"] = report.hole_count;
    d["max_lag"] = report.max_lag;
    return d;
}

py::dict config_dict(const mlpa::EvaluatedConfig& evaluated) {
    py::dict d;
    d["partition"] = evaluated.config.partition.counts;
    d["spacing"] = evaluated.config.spacing.spacings;
    d["positions"] = evaluated.config.positions;
    d["N"] = evaluated.config.total_elements;
    d["aperture"] = evaluated.config.aperture;
    d["coarray"] = coarray_dict(evaluated.coarray);
    return d;
}

py::dict result_dict(const mlpa::DesignResult& result) {
    py::dict d;
    d["N"] = result.query.total_elements;
    d["L"] = result.query.levels;
    d["max_unique"] = result.max_unique;
    d["max_consecutive"] = result.max_consecutive;
    d["evaluated_count"] = result.evaluated_count;
    d["excluded_count"] = result.excluded_count;
    d["is_joint"] = result.is_joint();
    py::list unique_set, consecutive_set, joint_set;
    for (const auto& entry : result.unique_optima) unique_set.append(config_dict(entry));
    for (const auto& entry : result.consecutive_optima) consecutive_set.append(config_dict(entry));
    for (const auto& entry : result.joint_optima) joint_set.append(config_dict(entry));
    d["unique_optima"] = unique_set;
    d["consecutive_optima"] = consecutive_set;
    d["joint_optima"] = joint_set;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multi-level prime array design core";

    m.def(
        "build_positions",
        [](const std::vector<int>& counts, const std::vector<int>& spacings) {
            return mlpa::build_positions(as_partition(counts), as_spacing(spacings));
        },
        py::arg("counts"), py::arg("spacings"),
        "Element positions of an MLPA, deduplicated and sorted");

    m.def(
        "total_elements",
        [](const std::vector<int>& counts) { return mlpa::total_elements(as_partition(counts)); },
        py::arg("counts"));

    m.def(
        "aperture",
        [](const std::vector<int>& counts, const std::vector<int>& spacings) {
            return mlpa::aperture(as_partition(counts), as_spacing(spacings));
        },
        py::arg("counts"), py::arg("spacings"));

    m.def(
        "validate_config",
        [](const std::vector<int>& counts, const std::vector<int>& spacings) {
            return mlpa::validate_config(as_partition(counts), as_spacing(spacings));
        },
        py::arg("counts"), py::arg("spacings"),
        "List of violated invariants, empty when the configuration is valid");

    m.def(
        "difference_coarray",
        [](const std::vector<int>& positions) {
            return coarray_dict(mlpa::difference_coarray(positions));
        },
        py::arg("positions"));

    m.def("unit_spacing_count",
          [](const std::vector<int>& positions) { return mlpa::unit_spacing_count(positions); },
          py::arg("positions"));

    m.def(
        "enumerate_coprime_partitions",
        [](int total_elements, int levels) {
            std::vector<std::vector<int>> out;
            for (auto& partition : mlpa::enumerate_coprime_partitions(total_elements, levels))
                out.push_back(std::move(partition.counts));
            return out;
        },
        py::arg("total_elements"), py::arg("levels"));

    m.def(
        "enumerate_spacing_orders",
        [](const std::vector<int>& counts) {
            std::vector<std::vector<int>> out;
            for (auto& order : mlpa::enumerate_spacing_orders(as_partition(counts)))
                out.push_back(std::move(order.spacings));
            return out;
        },
        py::arg("counts"));

    m.def(
        "evaluate_config",
        [](const std::vector<int>& counts, const std::vector<int>& spacings) {
            return config_dict(mlpa::evaluate_config(as_partition(counts), as_spacing(spacings)));
        },
        py::arg("counts"), py::arg("spacings"));

    m.def(
        "optimize",
        [](int total_elements, int levels, const std::string& objective, int workers) {
            auto parsed = mlpa::objective_from_string(objective);
            if (!parsed) throw std::invalid_argument("unknown objective " + objective);
            mlpa::DesignQuery query;
            query.total_elements = total_elements;
            query.levels = levels;
            query.objective = *parsed;
            return result_dict(mlpa::optimize(query, workers));
        },
        py::arg("total_elements"), py::arg("levels"), py::arg("objective") = "joint",
        py::arg("workers") = 0);

    m.def(
        "sweep",
        [](int levels, int n_min, int n_max, int workers) {
            py::list rows;
            for (const auto& row : mlpa::sweep(levels, n_min, n_max, workers)) {
                py::dict d;
                d["N"] = row.total_elements;
                d["feasible"] = row.feasible;
                if (row.result) d["result"] = result_dict(*row.result);
                rows.append(std::move(d));
            }
            return rows;
        },
        py::arg("levels"), py::arg("n_min"), py::arg("n_max"), py::arg("workers") = 0);

    m.def("nested_positions", &mlpa::nested_positions, py::arg("n1"), py::arg("n2"));
    m.def("coprime_positions", &mlpa::coprime_positions, py::arg("m"), py::arg("nbar"));

    m.attr("__version__") = mlpa::kVersion;

    py::register_exception<mlpa::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<mlpa::InfeasibleQueryError>(m, "InfeasibleQueryError",
                                                       PyExc_ValueError);
}
