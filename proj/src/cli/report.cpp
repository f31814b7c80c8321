#include "casson/cli/report.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include <openssl/evp.h>

#include "casson/errors.hpp"

namespace casson::cli {

namespace {

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    throw Error(ErrorCode::InvalidArgument, "report integer exceeds 64 bits: " + z.get_str());
}

Json value_json(const ReportValue& v)
{
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>)
                return x;
            else if constexpr (std::is_same_v<T, Integer>)
                return integer_json(x);
            else if constexpr (std::is_same_v<T, Rational>)
                return to_string(x);
            else {
                Json a = Json::array();
                for (const auto& z : x)
                    a.push_back(integer_json(z));
                return a;
            }
        },
        v);
}

ReportValue value_from_json(const Json& j)
{
    if (j.is_boolean())
        return j.get<bool>();
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_array()) {
        std::vector<Integer> xs;
        for (const auto& e : j)
            xs.emplace_back(e.get<long>());
        return xs;
    }
    throw Error(ErrorCode::SchemaError, "unsupported report value " + j.dump());
}

std::string value_text(const ReportValue& v)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>)
                return x ? "1" : "0";
            else if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
                return to_string(x);
            else {
                std::string s = "[";
                for (std::size_t i = 0; i < x.size(); ++i)
                    s += (i ? ", " : "") + to_string(x[i]);
                return s + "]";
            }
        },
        v);
}

} // namespace

bool InvariantReport::all_flags_hold() const
{
    for (const auto& [name, ok] : flags)
        if (!ok)
            return false;
    return true;
}

Json to_json(const InvariantReport& r)
{
    Json j;
    j["schema"] = "casson-report/1";
    j["command"] = r.command;
    j["label"] = r.label;
    j["input_digest"] = r.input_digest;
    Json inv = Json::object();
    for (const auto& [k, v] : r.invariants)
        inv[k] = value_json(v);
    j["invariants"] = inv;
    Json text = Json::object();
    for (const auto& [k, v] : r.text)
        text[k] = v;
    j["text"] = text;
    Json flags = Json::object();
    for (const auto& [k, v] : r.flags)
        flags[k] = v;
    j["flags"] = flags;
    j["notes"] = r.notes;
    j["status"] = r.all_flags_hold() ? "ok" : "congruence-failure";
    return j;
}

InvariantReport report_from_json(const Json& j)
{
    InvariantReport r;
    r.command = j.at("command").get<std::string>();
    r.label = j.value("label", std::string{});
    r.input_digest = j.at("input_digest").get<std::string>();
    for (const auto& [k, v] : j.at("invariants").items())
        r.invariants.emplace_back(k, value_from_json(v));
    for (const auto& [k, v] : j.at("text").items())
        r.text.emplace_back(k, v.get<std::string>());
    for (const auto& [k, v] : j.at("flags").items())
        r.flags.emplace_back(k, v.get<bool>());
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

std::string render_human(const InvariantReport& r)
{
    std::ostringstream os;
    os << r.command;
    if (!r.label.empty())
        os << " " << r.label;
    os << "  (" << r.input_digest << ")\n";
    for (const auto& [k, v] : r.invariants)
        os << "  " << k << " = " << value_text(v) << "\n";
    for (const auto& [k, v] : r.text)
        os << "  " << k << " = " << v << "\n";
    for (const auto& [k, ok] : r.flags)
        os << "  [" << (ok ? "pass" : "FAIL") << "] " << k << "\n";
    for (const auto& n : r.notes)
        os << "  note: " << n << "\n";
    return os.str();
}

std::size_t SweepTable::failures() const
{
    std::size_t f = 0;
    for (const auto& r : reports)
        if (!r.all_flags_hold())
            ++f;
    return f;
}

Json to_json(const SweepTable& t)
{
    Json j;
    j["schema"] = "casson-sweep/1";
    j["family"] = t.family;
    j["range"] = t.range;
    j["input_digest"] = t.input_digest;
    Json reports = Json::array();
    for (const auto& r : t.reports)
        reports.push_back(to_json(r));
    j["reports"] = reports;
    j["summary"] = {{"instances", t.reports.size()},
                    {"passed", t.reports.size() - t.failures()},
                    {"failed", t.failures()}};
    return j;
}

std::string render_human(const SweepTable& t)
{
    std::ostringstream os;
    os << "sweep " << t.family << " [" << t.range << "]  (" << t.input_digest << ")\n";
    for (const auto& r : t.reports) {
        os << (r.all_flags_hold() ? "pass  " : "FAIL  ") << r.label;
        for (const auto& [k, v] : r.invariants)
            os << "  " << k << "=" << value_text(v);
        os << "\n";
    }
    os << t.reports.size() << " instances, " << (t.reports.size() - t.failures()) << " passed, " << t.failures()
       << " failed\n";
    return os.str();
}

std::string digest(const std::string& bytes)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::InvalidArgument, "SHA-256 failed");
    std::string hex = "sha256:";
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

} // namespace casson::cli
