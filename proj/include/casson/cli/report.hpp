#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "casson/numbers.hpp"

namespace casson::cli {

using Json = nlohmann::ordered_json;

// Rationals serialize as "p/q" strings, integers as JSON numbers, lists as
// arrays of integers; the types therefore survive a JSON round trip.
using ReportValue = std::variant<bool, Integer, Rational, std::vector<Integer>>;

struct InvariantReport {
    std::string command;
    std::string label;
    std::string input_digest;
    std::vector<std::pair<std::string, ReportValue>> invariants;
    std::vector<std::pair<std::string, std::string>> text;
    // Congruences and theorem checks; any false flag is a regression.
    std::vector<std::pair<std::string, bool>> flags;
    std::vector<std::string> notes;

    void add(std::string name, ReportValue v) { invariants.emplace_back(std::move(name), std::move(v)); }
    void add_text(std::string name, std::string v) { text.emplace_back(std::move(name), std::move(v)); }
    void flag(std::string name, bool ok) { flags.emplace_back(std::move(name), ok); }
    void note(std::string n) { notes.push_back(std::move(n)); }

    bool all_flags_hold() const;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

Json to_json(const InvariantReport& r);
InvariantReport report_from_json(const Json& j);

std::string render_human(const InvariantReport& r);

struct SweepTable {
    std::string family;
    std::string range;
    std::string input_digest;
    std::vector<InvariantReport> reports;

    std::size_t failures() const;
};

Json to_json(const SweepTable& t);
std::string render_human(const SweepTable& t);

/// "sha256:<hex>"
std::string digest(const std::string& bytes);

} // namespace casson::cli
