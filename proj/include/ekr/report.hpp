#pragma once

#include "ekr/anchors.hpp"
#include "ekr/interval.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

namespace ekr {

enum class Status { verified, refuted, skipped, inconclusive };

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::skipped: return "skipped";
    case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

using Value = std::variant<std::monostate, Rational, RationalInterval>;

inline nlohmann::json value_json(const Value& v)
{
    if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
    if (const auto* iv = std::get_if<RationalInterval>(&v))
        return {{"lo", to_string(iv->lo())}, {"hi", to_string(iv->hi())}};
    return nullptr;
}

struct VerificationReport {
    std::string claim_id;
    std::string paper_anchor;
    Status status = Status::skipped;
    Value lhs, rhs;
    std::optional<nlohmann::json> witness;
    std::string note;
    double elapsed_ms = 0;

    bool ok() const { return status == Status::verified || status == Status::skipped; }
};

/// Fills in the anchor text; a refuted report without a witness gets the compared values as one.
inline VerificationReport make_report(std::string id, std::string_view anchor_key, Status status, Value lhs = {},
                                      Value rhs = {}, std::optional<nlohmann::json> witness = std::nullopt,
                                      std::string note = {})
{
    VerificationReport r{std::move(id), anchor(anchor_key), status, std::move(lhs), std::move(rhs), std::move(witness),
                         std::move(note), 0};
    if (r.status == Status::refuted && !r.witness)
        r.witness = nlohmann::json{{"lhs", value_json(r.lhs)}, {"rhs", value_json(r.rhs)}};
    return r;
}

inline nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json j{{"claim_id", r.claim_id},
                     {"paper_anchor", r.paper_anchor},
                     {"status", status_name(r.status)},
                     {"lhs", value_json(r.lhs)},
                     {"rhs", value_json(r.rhs)},
                     {"witness", r.witness ? *r.witness : nlohmann::json(nullptr)},
                     {"elapsed_ms", r.elapsed_ms}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline nlohmann::json to_json(const std::vector<VerificationReport>& rs)
{
    auto arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

inline void write_csv(std::ostream& os, const std::vector<VerificationReport>& rs)
{
    os << "claim_id,status,elapsed_ms\n";
    for (const auto& r : rs) os << r.claim_id << ',' << status_name(r.status) << ',' << r.elapsed_ms << '\n';
}

/// 0 if every report is verified or skipped, 1 if any is refuted, else 2.
inline int exit_code(const std::vector<VerificationReport>& rs)
{
    bool inconclusive = false;
    for (const auto& r : rs) {
        if (r.status == Status::refuted) return 1;
        if (r.status == Status::inconclusive) inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

/// Runs `body` and stamps the elapsed time onto the report it returns.
template <class Body>
VerificationReport timed(Body&& body)
{
    auto start = std::chrono::steady_clock::now();
    VerificationReport r = body();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// Comparison helpers. Exact values decide directly; enclosures go through certify_*.

inline VerificationReport check_less(std::string id, std::string_view key, const Rational& lhs, const Rational& rhs,
                                     std::optional<nlohmann::json> witness = std::nullopt)
{
    return make_report(std::move(id), key, lhs < rhs ? Status::verified : Status::refuted, lhs, rhs,
                       std::move(witness));
}

inline VerificationReport check_greater(std::string id, std::string_view key, const Rational& lhs,
                                        const Rational& rhs, std::optional<nlohmann::json> witness = std::nullopt)
{
    return make_report(std::move(id), key, lhs > rhs ? Status::verified : Status::refuted, lhs, rhs,
                       std::move(witness));
}

inline VerificationReport check_equal(std::string id, std::string_view key, const Rational& lhs, const Rational& rhs,
                                      std::optional<nlohmann::json> witness = std::nullopt)
{
    return make_report(std::move(id), key, lhs == rhs ? Status::verified : Status::refuted, lhs, rhs,
                       std::move(witness));
}

inline Status status_of(Verdict v)
{
    switch (v) {
    case Verdict::holds: return Status::verified;
    case Verdict::fails: return Status::refuted;
    default: return Status::inconclusive;
    }
}

inline VerificationReport check_less(std::string id, std::string_view key, const Enclosed& lhs, const Rational& rhs,
                                     std::optional<nlohmann::json> witness = std::nullopt)
{
    auto c = certify_less(lhs, rhs);
    return make_report(std::move(id), key, status_of(c.verdict), c.value, rhs, std::move(witness),
                       "series terms " + std::to_string(c.terms));
}

inline VerificationReport check_greater(std::string id, std::string_view key, const Enclosed& lhs,
                                        const Rational& rhs, std::optional<nlohmann::json> witness = std::nullopt)
{
    auto c = certify_greater(lhs, rhs);
    return make_report(std::move(id), key, status_of(c.verdict), c.value, rhs, std::move(witness),
                       "series terms " + std::to_string(c.terms));
}

} // namespace ekr
