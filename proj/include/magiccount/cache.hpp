#ifndef MAGICCOUNT_CACHE_HPP
#define MAGICCOUNT_CACHE_HPP

#include "magiccount/counting.hpp"

#include <json.hpp>

#include <fstream>
#include <mutex>
#include <string>
#include <unordered_map>

namespace magiccount {

/// Append-only JSON-lines store of count samples, keyed on
/// (class, n, d, t, strict). Counts are kept as decimal strings.
class SampleCache {
  public:
    SampleCache() = default;  // in-memory only

    explicit SampleCache(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded()) continue;  // tolerate a torn final line
            try {
                std::string spec = j.at("class").get<std::string>() + ":" +
                                   std::to_string(j.at("n").get<int>());
                if (j.at("class").get<std::string>() == "hypercube") {
                    spec += ":" + std::to_string(j.at("d").get<int>());
                }
                const SquareClass cls = parse_class_spec(spec);
                entries_[key(cls, j.at("t").get<long long>(), j.at("strict").get<bool>())] =
                    Integer(j.at("count").get<std::string>());
            } catch (const std::exception&) {
                continue;  // skip malformed lines
            }
        }
    }

    Integer get_or_compute(const SquareClass& cls, long long t, bool strict,
                           const CountOptions& opts = {}) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            const auto it = entries_.find(key(cls, t, strict));
            if (it != entries_.end()) return it->second;
        }
        Integer c = count(cls, t, strict, opts);
        std::lock_guard<std::mutex> lock(mutex_);
        entries_[key(cls, t, strict)] = c;
        if (!path_.empty()) {
            nlohmann::json j;
            j["class"] = kind_name(cls.kind);
            j["n"] = cls.n;
            j["d"] = cls.d;
            j["t"] = t;
            j["strict"] = strict;
            j["count"] = c.str();
            std::ofstream out(path_, std::ios::app);
            out << j.dump() << "\n";
        }
        return c;
    }

    std::size_t size() const { return entries_.size(); }

  private:
    static std::string key(const SquareClass& cls, long long t, bool strict) {
        return class_spec(cls) + ":" + std::to_string(t) + (strict ? ":s" : ":p");
    }

    std::string path_;
    std::unordered_map<std::string, Integer> entries_;
    std::mutex mutex_;
};

}  // namespace magiccount

#endif  // MAGICCOUNT_CACHE_HPP
