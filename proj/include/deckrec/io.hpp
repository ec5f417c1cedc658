#pragma once

#include "deckrec/balls.hpp"
#include "deckrec/deck.hpp"
#include "deckrec/search.hpp"
#include "deckrec/sequence.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace deckrec {

using Json = nlohmann::ordered_json;

inline std::string bigint_to_string(const BigInt& v) { return v.str(); }

inline BigInt bigint_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bare sign is not an integer");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("integer literal has non-digit characters");
    return BigInt(s);
}

/// {"n": ..., "k": ..., "counts": {"<pattern>": "<decimal>", ...}} with the
/// patterns in lexicographic order and multiplicities as decimal strings
/// (they outgrow native JSON numbers fast).
inline Json deck_to_json(const Deck& d) {
    Json counts = Json::object();
    for (const auto& [pattern, count] : d.counts())
        counts[pattern.str()] = bigint_to_string(count);
    Json out;
    out["n"] = d.n();
    out["k"] = d.k();
    out["counts"] = std::move(counts);
    return out;
}

inline Deck deck_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("counts"))
        throw std::invalid_argument("deck JSON needs fields n, k, counts");
    if (!j["n"].is_number_integer() || !j["k"].is_number_integer())
        throw std::invalid_argument("deck JSON n and k must be integers");
    if (!j["counts"].is_object())
        throw std::invalid_argument("deck JSON counts must be an object");
    Deck::CountMap counts;
    for (const auto& [key, value] : j["counts"].items()) {
        BigInt c;
        if (value.is_string())
            c = bigint_from_string(value.get<std::string>());
        else if (value.is_number_integer())
            c = BigInt(value.get<long long>());
        else
            throw std::invalid_argument("deck JSON counts must be decimal strings");
        counts.emplace(BinarySequence::parse(key.c_str()), std::move(c));
    }
    return Deck(j["n"].get<int>(), j["k"].get<int>(), std::move(counts));
}

/// One trace per line; blank lines (and trailing carriage returns) ignored.
inline std::vector<BinarySequence> parse_trace_lines(const std::string& text) {
    std::vector<BinarySequence> traces;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        traces.push_back(BinarySequence::parse(line));
    }
    return traces;
}

inline std::string serialize_traces(const std::vector<BinarySequence>& traces) {
    std::string out;
    for (const auto& tr : traces) {
        out += tr.str();
        out += '\n';
    }
    return out;
}

inline Json max_ball_report_to_json(const MaxBallReport& r) {
    Json out;
    out["n"] = r.n;
    out["t"] = r.t;
    out["max"] = bigint_to_string(r.max_size);
    out["bound"] = bigint_to_string(r.bound);
    Json argmax = Json::array();
    for (const auto& x : r.argmax) argmax.push_back(x.str());
    out["argmax"] = std::move(argmax);
    return out;
}

inline Json certificate_to_json(const BoundCertificate& c) {
    Json out;
    out["n"] = c.n;
    out["t"] = c.t;
    out["m"] = c.m;
    out["k"] = c.k;
    if (c.witness) {
        Json w;
        w["x"] = c.witness->x.str();
        w["y"] = c.witness->y.str();
        w["shared_traces"] = bigint_to_string(c.witness->shared_traces);
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    out["exhaustive"] = c.exhaustive;
    return out;
}

inline constexpr const char* kCertificateCsvHeader = "n,t,M,k,witness_x,witness_y,exhaustive";

inline std::string certificate_to_csv_row(const BoundCertificate& c) {
    std::ostringstream out;
    out << c.n << ',' << c.t << ',' << c.m << ',' << c.k << ',';
    if (c.witness) out << c.witness->x.str();
    out << ',';
    if (c.witness) out << c.witness->y.str();
    out << ',' << (c.exhaustive ? "true" : "false");
    return out.str();
}

}  // namespace deckrec
