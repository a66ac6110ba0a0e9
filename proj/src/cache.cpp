#include "mlpa/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace mlpa {

namespace {

nlohmann::ordered_json config_set_to_json(const std::vector<EvaluatedConfig>& set) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& entry : set) {
        nlohmann::ordered_json item;
        item["partition"] = entry.config.partition.counts;
        item["spacing"] = entry.config.spacing.spacings;
        arr.push_back(std::move(item));
    }
    return arr;
}

std::vector<EvaluatedConfig> config_set_from_json(const nlohmann::json& arr) {
    std::vector<EvaluatedConfig> set;
    for (const auto& item : arr) {
        Partition partition{item.at("partition").get<std::vector<int>>()};
        SpacingOrder spacing{item.at("spacing").get<std::vector<int>>()};
        set.push_back(evaluate_config(partition, spacing));
    }
    return set;
}

}  // namespace

CacheConfig resolve_cache(const std::optional<std::string>& flag_directory, bool no_cache) {
    if (no_cache) return CacheConfig{};
    if (flag_directory && !flag_directory->empty())
        return CacheConfig{std::filesystem::path(*flag_directory)};
    if (const char* env = std::getenv(kCacheEnvVar); env && *env)
        return CacheConfig{std::filesystem::path(env)};
    return CacheConfig{};
}

std::filesystem::path cache_entry_path(const CacheConfig& cache, int total_elements, int levels) {
    std::string name = "design_v" + std::string(kVersion) + "_N" +
                       std::to_string(total_elements) + "_L" + std::to_string(levels) + ".json";
    return cache.directory / name;
}

std::optional<DesignResult> cache_load(const CacheConfig& cache, int total_elements, int levels) {
    if (!cache.enabled()) return std::nullopt;
    auto path = cache_entry_path(cache, total_elements, levels);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;

    try {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("unreadable");
        auto j = nlohmann::json::parse(in);
        if (j.at("version").get<std::string>() != kVersion ||
            j.at("N").get<int>() != total_elements || j.at("L").get<int>() != levels)
            throw std::runtime_error("entry does not match its key");

        DesignResult result;
        result.query.total_elements = total_elements;
        result.query.levels = levels;
        result.max_unique = j.at("max_unique").get<int>();
        result.max_consecutive = j.at("max_consecutive").get<int>();
        result.evaluated_count = j.at("evaluated_count").get<long long>();
        result.excluded_count = j.at("excluded_count").get<long long>();
        result.unique_optima = config_set_from_json(j.at("unique"));
        result.consecutive_optima = config_set_from_json(j.at("consecutive"));
        result.joint_optima = config_set_from_json(j.at("joint"));
        return result;
    } catch (const std::exception& e) {
        std::cerr << "warning: corrupt cache entry " << path.string() << " (" << e.what()
                  << "), recomputing\n";
        return std::nullopt;
    }
}

void cache_store(const CacheConfig& cache, const DesignResult& result) {
    if (!cache.enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(cache.directory, ec);

    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["N"] = result.query.total_elements;
    j["L"] = result.query.levels;
    j["max_unique"] = result.max_unique;
    j["max_consecutive"] = result.max_consecutive;
    j["evaluated_count"] = result.evaluated_count;
    j["excluded_count"] = result.excluded_count;
    j["unique"] = config_set_to_json(result.unique_optima);
    j["consecutive"] = config_set_to_json(result.consecutive_optima);
    j["joint"] = config_set_to_json(result.joint_optima);

    auto path = cache_entry_path(cache, result.query.total_elements, result.query.levels);
    std::ofstream out(path);
    if (!out) {
        std::cerr << "warning: cannot write cache entry " << path.string() << '\n';
        return;
    }
    out << j.dump(2) << '\n';
}

DesignResult cached_optimize(const CacheConfig& cache, const DesignQuery& query, int workers) {
    if (auto hit = cache_load(cache, query.total_elements, query.levels)) {
        hit->query = query;
        return *hit;
    }
    auto result = optimize(query, workers);
    cache_store(cache, result);
    return result;
}

}  // namespace mlpa
