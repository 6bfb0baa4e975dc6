#ifndef LINKHOM_CACHE_HPP
#define LINKHOM_CACHE_HPP

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "linkhom/dsl.hpp"
#include "linkhom/link.hpp"

namespace linkhom {

namespace detail {

inline std::uint64_t fnv1a(const std::string& data)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v)
{
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

} // namespace detail

/// Content-addressed store of invariant vectors, keyed by the normalized
/// text of (decomposition, word).  Enabled only when LINKHOM_CACHE_DIR is
/// set; a checksum guards each entry and corruption reads as a miss.
class VectorCache {
public:
    VectorCache() = default;

    static VectorCache from_env()
    {
        VectorCache c;
        if (const char* dir = std::getenv("LINKHOM_CACHE_DIR")) {
            c.dir_ = dir;
            c.enabled_ = !c.dir_.empty();
        }
        return c;
    }

    bool enabled() const { return enabled_; }

    static std::string key_of(const ComponentDecomposition& l,
                              const std::vector<GeneratorLink>& word)
    {
        LinkDocument doc{l, word, std::nullopt, std::nullopt};
        return detail::hex64(detail::fnv1a(serialize_link(doc)));
    }

    std::optional<InvariantVector>
    load(const std::string& key,
         const std::shared_ptr<const InvariantBasis>& basis) const
    {
        if (!enabled_)
            return std::nullopt;
        std::ifstream in(path_of(key));
        if (!in)
            return std::nullopt;
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
            std::string checksum = doc.at("checksum").get<std::string>();
            nlohmann::json payload = doc.at("payload");
            if (detail::hex64(detail::fnv1a(payload.dump())) != checksum)
                return std::nullopt;
            if (payload.at("key").get<std::string>() != key)
                return std::nullopt;
            auto values_text =
                payload.at("values").get<std::vector<std::string>>();
            if (values_text.size() != basis->size())
                return std::nullopt;
            std::vector<Int> values;
            values.reserve(values_text.size());
            for (const auto& s : values_text)
                values.emplace_back(s);
            return InvariantVector(basis, std::move(values));
        } catch (const std::exception&) {
            return std::nullopt; // corrupt entry: treat as a miss
        }
    }

    void store(const std::string& key, const InvariantVector& v) const
    {
        if (!enabled_)
            return;
        nlohmann::json payload;
        payload["key"] = key;
        payload["colors"] = v.basis().ambient().counts();
        std::vector<std::string> values;
        values.reserve(v.values().size());
        for (const auto& x : v.values())
            values.push_back(x.str());
        payload["values"] = std::move(values);
        nlohmann::json doc;
        doc["checksum"] = detail::hex64(detail::fnv1a(payload.dump()));
        doc["payload"] = std::move(payload);

        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        auto tmp = path_of(key) + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) {
                warn_unwritable();
                return;
            }
            out << doc.dump();
            if (!out) {
                warn_unwritable();
                return;
            }
        }
        std::filesystem::rename(tmp, path_of(key), ec);
        if (ec)
            warn_unwritable();
    }

private:
    std::string path_of(const std::string& key) const
    {
        return (std::filesystem::path(dir_) / (key + ".json")).string();
    }

    void warn_unwritable() const
    {
        std::cerr << "warning: cache directory '" << dir_
                  << "' is not writable; continuing without cache\n";
    }

    std::string dir_;
    bool enabled_ = false;
};

} // namespace linkhom

#endif
