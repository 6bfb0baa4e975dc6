#ifndef LINKHOM_IO_HPP
#define LINKHOM_IO_HPP

#include <sstream>
#include <string>

#include <json.hpp>

#include "linkhom/decide.hpp"
#include "linkhom/link.hpp"

namespace linkhom {

inline nlohmann::json to_json(const ComponentId& c)
{
    return nlohmann::json::array({c.color, c.index});
}

inline nlohmann::json to_json(const IndexSequence& s)
{
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& e : s.entries)
        seq.push_back(to_json(e));
    return seq;
}

/// Arbitrary-precision values render as JSON numbers when they fit a
/// 64-bit integer and as decimal strings otherwise.
inline nlohmann::json to_json(const Int& v)
{
    if (v <= std::numeric_limits<long long>::max() &&
        v >= std::numeric_limits<long long>::min())
        return v.convert_to<long long>();
    return v.str();
}

inline nlohmann::json to_json(const InvariantVector& v)
{
    nlohmann::json out;
    out["colors"] = v.basis().ambient().counts();
    nlohmann::json mu = nlohmann::json::array();
    const auto& keys = v.basis().keys();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        nlohmann::json entry;
        entry["seq"] = to_json(keys[i]);
        entry["value"] = to_json(v.values()[i]);
        mu.push_back(std::move(entry));
    }
    out["mu"] = std::move(mu);
    return out;
}

/// One coordinate per row: flattened sequence, tab, value.
inline std::string to_tsv(const InvariantVector& v)
{
    std::ostringstream out;
    const auto& keys = v.basis().keys();
    for (std::size_t i = 0; i < keys.size(); ++i)
        out << to_string(keys[i]) << "\t" << v.values()[i].str() << "\n";
    return out.str();
}

inline std::string to_string(const Move& m)
{
    std::ostringstream out;
    if (m.colorwise)
        out << "slide " << to_string(m.source) << " around color "
            << m.target_color;
    else
        out << "conjugate " << to_string(m.target) << " by "
            << to_string(m.source);
    out << (m.sign > 0 ? " +" : " -");
    return out.str();
}

inline std::string describe(const Certificate& c)
{
    std::ostringstream out;
    if (c.kind == Certificate::Kind::Level1) {
        out << "linking number " << to_string(c.sequence) << ": "
            << c.lhs.str() << " vs " << c.rhs.str();
    } else {
        out << "residue " << to_string(c.sequence) << ": " << c.lhs.str()
            << " (mod " << c.lhs_modulus.str() << ") vs " << c.rhs.str()
            << " (mod " << c.rhs_modulus.str() << ")";
    }
    return out.str();
}

inline nlohmann::json to_json(const DecisionOutcome& o)
{
    nlohmann::json out;
    switch (o.verdict) {
    case DecisionOutcome::Verdict::Equivalent:
        out["verdict"] = "equivalent";
        break;
    case DecisionOutcome::Verdict::Distinct:
        out["verdict"] = "distinct";
        break;
    case DecisionOutcome::Verdict::Unknown:
        out["verdict"] = "unknown";
        break;
    }
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& m : o.witness)
        witness.push_back(to_string(m));
    out["witness"] = std::move(witness);
    if (o.certificate)
        out["certificate"] = describe(*o.certificate);
    out["nodes_expanded"] = o.stats.expanded;
    out["budget"] = o.stats.budget;
    return out;
}

inline nlohmann::json error_json(const std::string& kind,
                                 const std::string& message, int line = 0,
                                 int column = 0)
{
    nlohmann::json out;
    out["error"] = kind;
    out["message"] = message;
    if (line > 0) {
        out["line"] = line;
        out["column"] = column;
    }
    return out;
}

} // namespace linkhom

#endif
