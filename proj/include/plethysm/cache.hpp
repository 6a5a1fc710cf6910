#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include "json.hpp"

#include "plethysm/character.hpp"

namespace plethysm {

inline constexpr const char* kCharTableFormat = "plethysm-chartab-v1";
inline constexpr const char* kSequenceFormat = "plethysm-seq-v1";

/// PLETHYSM_CACHE_DIR, defaulting to ./.cache.
inline std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("PLETHYSM_CACHE_DIR")) return env;
    return std::filesystem::path(".cache");
}

inline nlohmann::json character_table_to_json(const CharacterTable& table) {
    nlohmann::json classes = nlohmann::json::array();
    for (const Partition& rho : table.classes) classes.push_back(rho.to_string());
    nlohmann::json rows = nlohmann::json::object();
    for (const auto& [mu, values] : table.rows) {
        nlohmann::json row = nlohmann::json::array();
        for (const Int& v : values) row.push_back(v.get_str());
        rows[mu.to_string()] = std::move(row);
    }
    return {{"format", kCharTableFormat}, {"p", table.p}, {"classes", classes}, {"rows", rows}};
}

inline CharacterTable character_table_from_json(const nlohmann::json& j) {
    if (j.at("format").get<std::string>() != kCharTableFormat)
        throw invalid_input("character table cache: unknown format");
    CharacterTable table;
    table.p = j.at("p").get<int>();
    for (const auto& cls : j.at("classes")) table.classes.push_back(Partition::parse(cls.get<std::string>()));
    for (const auto& [mu_text, row] : j.at("rows").items()) {
        std::vector<Int> values;
        for (const auto& v : row) values.emplace_back(v.get<std::string>());
        table.rows.emplace(Partition::parse(mu_text), std::move(values));
    }
    return table;
}

/// Character values feed the process-wide memo so later lookups short-circuit.
inline void seed_character_memo(const CharacterTable& table) {
    for (const auto& [mu, values] : table.rows)
        for (std::size_t i = 0; i < table.classes.size(); ++i)
            detail::CharacterMemo::instance().store({mu.parts(), table.classes[i].parts()},
                                                    values[i]);
}

inline std::filesystem::path character_table_path(int p) {
    return cache_dir() / ("chartab_p" + std::to_string(p) + ".json");
}

inline void save_character_table(const CharacterTable& table) {
    std::filesystem::create_directories(cache_dir());
    std::ofstream out(character_table_path(table.p));
    out << character_table_to_json(table).dump(1) << "\n";
}

/// Loads and seeds the memo; nullopt when absent or unreadable.
inline std::optional<CharacterTable> load_character_table(int p) {
    std::ifstream in(character_table_path(p));
    if (!in) return std::nullopt;
    try {
        CharacterTable table = character_table_from_json(nlohmann::json::parse(in));
        seed_character_memo(table);
        return table;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// On-disk memo for computed sequence values, keyed by the instance.
class SequenceCache {
public:
    SequenceCache(const std::string& what, const Partition& lambda, int p, int k,
                  const std::string& mu_text) {
        std::string name = "seq_" + what + "_l" + lambda.to_string() + "_p" + std::to_string(p) +
                           "_k" + std::to_string(k);
        if (!mu_text.empty()) name += "_m" + mu_text;
        for (char& ch : name)
            if (ch == ',') ch = '.';
        path_ = cache_dir() / (name + ".json");
        load();
    }

    std::optional<Rat> get(int d) const {
        const std::string key = std::to_string(d);
        if (!values_.contains(key)) return std::nullopt;
        return rat_from_string(values_[key].get<std::string>());
    }

    void put(int d, const Rat& value) {
        values_[std::to_string(d)] = rat_to_string(value);
        dirty_ = true;
    }

    void flush() {
        if (!dirty_) return;
        std::filesystem::create_directories(cache_dir());
        std::ofstream out(path_);
        out << nlohmann::json{{"format", kSequenceFormat}, {"values", values_}}.dump(1) << "\n";
        dirty_ = false;
    }

private:
    void load() {
        std::ifstream in(path_);
        if (!in) return;
        try {
            nlohmann::json j = nlohmann::json::parse(in);
            if (j.at("format").get<std::string>() == kSequenceFormat) values_ = j.at("values");
        } catch (const std::exception&) {
            values_ = nlohmann::json::object();
        }
    }

    std::filesystem::path path_;
    nlohmann::json values_ = nlohmann::json::object();
    bool dirty_ = false;
};

} // namespace plethysm
