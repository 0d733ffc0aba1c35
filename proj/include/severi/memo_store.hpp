#pragma once

#include <compare>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "severi/config.hpp"
#include "severi/errors.hpp"

namespace severi {

enum class Engine { irreducible, reducible };

inline const char* engine_tag(Engine e) {
    return e == Engine::irreducible ? "irr" : "red";
}

/// Memo key: engine tag plus configuration in canonical form. Two keys are
/// equal exactly when their serialized forms are byte-identical.
struct MemoKey {
    Engine engine = Engine::irreducible;
    CurveConfig config;

    friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

/// Thread-safe store of finished count values with optional line-oriented
/// persistence. Values are final on insert; inserting a different value for
/// an existing key reports nondeterminism instead of overwriting.
class MemoStore {
public:
    static constexpr const char* kFileHeader = "severi-cache-v1";

    std::optional<Count> lookup(const MemoKey& key) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const MemoKey& key, const Count& value) {
        if (value < 0) throw InvariantError("memo: negative count for " + serialize_key(key));
        std::unique_lock lock(mu_);
        auto [it, fresh] = map_.emplace(key, value);
        if (!fresh && it->second != value)
            throw InvariantError("memo: conflicting values for " + serialize_key(key) + ": " +
                                 it->second.str() + " vs " + value.str());
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mu_);
        map_.clear();
    }

    /// Entries in key order (the order used by save()).
    std::vector<std::pair<MemoKey, Count>> entries() const {
        std::shared_lock lock(mu_);
        return {map_.begin(), map_.end()};
    }

    /// Writes `severi-cache-v1` followed by one `v1|engine|d|g|alpha|beta|s|count`
    /// line per entry, sorted by key. Loading the result and saving again is
    /// byte-identical.
    void save(const std::filesystem::path& path) const {
        std::ostringstream out;
        {
            std::shared_lock lock(mu_);
            out << kFileHeader << '\n';
            for (const auto& [key, value] : map_)
                out << serialize_entry(key, value) << '\n';
        }
        std::ofstream f(path, std::ios::trunc);
        if (!f) throw CacheFormatError("cache: cannot open '" + path.string() + "' for writing");
        f << out.str();
        if (!f) throw CacheFormatError("cache: write to '" + path.string() + "' failed");
    }

    /// Parses and validates a file produced by save(), then merges the
    /// entries in. Any malformed or invalid line rejects the whole file and
    /// the store is left untouched.
    void load(const std::filesystem::path& path) {
        std::ifstream f(path);
        if (!f) throw CacheFormatError("cache: cannot open '" + path.string() + "'");
        std::string line;
        if (!std::getline(f, line) || line != kFileHeader)
            throw CacheFormatError("cache: bad or missing header in '" + path.string() + "'");
        std::vector<std::pair<MemoKey, Count>> parsed;
        std::size_t lineno = 1;
        while (std::getline(f, line)) {
            ++lineno;
            if (line.empty()) continue;
            parsed.push_back(parse_entry(line, lineno));
        }
        std::unique_lock lock(mu_);
        for (auto& [key, value] : parsed) {
            auto [it, fresh] = map_.emplace(key, value);
            if (!fresh && it->second != value)
                throw InvariantError("cache: loaded value conflicts with stored value for " +
                                     serialize_key(key));
        }
    }

    static std::string serialize_key(const MemoKey& key) {
        const CurveConfig& c = key.config;
        std::string s = "v1|";
        s += engine_tag(key.engine);
        s += '|';
        s += std::to_string(c.degree);
        s += '|';
        s += std::to_string(c.genus);
        s += '|';
        s += c.fixed.str();
        s += '|';
        s += c.moving.str();
        s += '|';
        s += c.mults.str();
        return s;
    }

    static std::string serialize_entry(const MemoKey& key, const Count& value) {
        return serialize_key(key) + '|' + value.str();
    }

private:
    static MemoKey parse_key_fields(const std::vector<std::string>& fields, std::size_t lineno) {
        if (fields[0] != "v1")
            throw CacheFormatError("cache: unsupported entry version '" + fields[0] + "' on line " +
                                   std::to_string(lineno));
        MemoKey key;
        if (fields[1] == "irr")
            key.engine = Engine::irreducible;
        else if (fields[1] == "red")
            key.engine = Engine::reducible;
        else
            throw CacheFormatError("cache: unknown engine tag '" + fields[1] + "' on line " +
                                   std::to_string(lineno));
        try {
            key.config.degree = std::stoi(fields[2]);
            key.config.genus = std::stoi(fields[3]);
            key.config.fixed = TangencySeq::parse(fields[4]);
            key.config.moving = TangencySeq::parse(fields[5]);
            key.config.mults = MultiplicityProfile::parse(fields[6]);
        } catch (const std::exception& e) {
            throw CacheFormatError("cache: bad config on line " + std::to_string(lineno) + ": " +
                                   e.what());
        }
        return key;
    }

    static std::pair<MemoKey, Count> parse_entry(const std::string& line, std::size_t lineno) {
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            std::size_t bar = line.find('|', pos);
            if (bar == std::string::npos) {
                fields.push_back(line.substr(pos));
                break;
            }
            fields.push_back(line.substr(pos, bar - pos));
            pos = bar + 1;
        }
        if (fields.size() != 8)
            throw CacheFormatError("cache: expected 8 fields on line " + std::to_string(lineno));
        MemoKey key = parse_key_fields(fields, lineno);
        Count value;
        try {
            value = Count(fields[7]);
        } catch (const std::exception&) {
            throw CacheFormatError("cache: bad count on line " + std::to_string(lineno));
        }
        // entry validation: the file is rejected wholesale on any failure
        if (value < 0)
            throw CacheFormatError("cache: negative count on line " + std::to_string(lineno));
        if (key.config.degree < 0)
            throw CacheFormatError("cache: negative degree on line " + std::to_string(lineno));
        if (!is_canonical(key.config))
            throw CacheFormatError("cache: non-canonical config on line " + std::to_string(lineno));
        if (!is_balanced(key.config))
            throw CacheFormatError("cache: unbalanced config on line " + std::to_string(lineno));
        return {key, value};
    }

    mutable std::shared_mutex mu_;
    std::map<MemoKey, Count> map_;
};

}  // namespace severi
