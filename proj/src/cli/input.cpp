#include "casson/cli/input.hpp"

#include "casson/errors.hpp"

namespace casson::cli {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what)
{
    throw Error(ErrorCode::SchemaError, path + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& path)
{
    if (!j.is_object())
        schema_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        schema_error(path, std::string("missing field \"") + key + "\"");
    return *it;
}

long as_long(const Json& j, const std::string& path)
{
    if (!j.is_number_integer())
        schema_error(path, "expected an integer, got " + j.dump());
    return j.get<long>();
}

bool as_bit(const Json& j, const std::string& path)
{
    if (j.is_boolean())
        return j.get<bool>();
    const long v = as_long(j, path);
    if (v != 0 && v != 1)
        schema_error(path, "expected a bit, got " + j.dump());
    return v == 1;
}

std::string as_string(const Json& j, const std::string& path)
{
    if (!j.is_string())
        schema_error(path, "expected a string, got " + j.dump());
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt)
{
    if (!j.is_array())
        schema_error(path, "expected an array");
    if (size && j.size() != *size)
        schema_error(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
    return j;
}

std::string at_index(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

// Bit vector of length `n` (bit i of the mask = entry i).
unsigned parse_mask(const Json& j, const std::string& path, std::size_t n)
{
    as_array(j, path, n);
    unsigned m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (as_bit(j[i], at_index(path, i)))
            m |= 1u << i;
    return m;
}

std::array<long, kFloerGradings> parse_ranks(const Json& j, const std::string& path)
{
    as_array(j, path, kFloerGradings);
    std::array<long, kFloerGradings> r{};
    for (std::size_t k = 0; k < kFloerGradings; ++k) {
        r[k] = as_long(j[k], at_index(path, k));
        if (r[k] < 0)
            schema_error(at_index(path, k), "rank must be nonnegative");
    }
    return r;
}

FloerMap parse_map(const Json& j, const std::string& path)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "id")
            return IdentityMap{};
        if (s == "-id")
            return MinusIdentityMap{};
        schema_error(path, "unknown map token \"" + s + "\"");
    }
    as_array(j, path);
    RationalMatrix m;
    m.dim = j.size();
    for (std::size_t i = 0; i < m.dim; ++i) {
        const auto row_path = at_index(path, i);
        as_array(j[i], row_path, m.dim);
        for (std::size_t c = 0; c < m.dim; ++c)
            m.entries.push_back(parse_rational_value(j[i][c], at_index(row_path, c)));
    }
    return m;
}

} // namespace

Json parse_document(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (j.is_object() && j.contains("version")) {
        if (!j["version"].is_number_integer() || j["version"].get<long>() != kSchemaVersion)
            schema_error("version", "unsupported schema version " + j["version"].dump());
    }
    return j;
}

Rational parse_rational_value(const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            schema_error(path, e.what());
        }
    }
    schema_error(path, "expected an integer or a \"p/q\" string, got " + j.dump());
}

NamedKnot parse_knot(const Json& j, const std::string& path)
{
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        try {
            return {name, presets::by_name(name)};
        } catch (const Error& e) {
            schema_error(path, e.what());
        }
    }
    if (!j.is_object())
        schema_error(path, "expected a preset name or a knot object");
    if (j.contains("seifert")) {
        const auto& rows = as_array(j["seifert"], path + ".seifert");
        std::vector<std::vector<std::int64_t>> m;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto row_path = at_index(path + ".seifert", i);
            as_array(rows[i], row_path);
            std::vector<std::int64_t> row;
            for (std::size_t c = 0; c < rows[i].size(); ++c)
                row.push_back(as_long(rows[i][c], at_index(row_path, c)));
            m.push_back(std::move(row));
        }
        std::string name = j.contains("name") ? as_string(j["name"], path + ".name") : "seifert";
        return {name, SeifertMatrix(m)};
    }
    if (j.contains("preset"))
        return parse_knot(j["preset"], path + ".preset");
    if (j.contains("torus")) {
        const auto& pq = as_array(j["torus"], path + ".torus", 2);
        const long p = as_long(pq[0], path + ".torus[0]");
        const long q = as_long(pq[1], path + ".torus[1]");
        return {"T(" + std::to_string(p) + "," + std::to_string(q) + ")",
                torus_knot_seifert(static_cast<int>(p), static_cast<int>(q))};
    }
    if (j.contains("mirror")) {
        auto k = parse_knot(j["mirror"], path + ".mirror");
        return {"mirror(" + k.name + ")", mirror(k.matrix)};
    }
    if (j.contains("sum")) {
        const auto& parts = as_array(j["sum"], path + ".sum");
        NamedKnot acc{"", presets::unknot()};
        for (std::size_t i = 0; i < parts.size(); ++i) {
            auto k = parse_knot(parts[i], at_index(path + ".sum", i));
            acc.name += (i ? " # " : "") + k.name;
            acc.matrix = connected_sum(acc.matrix, k.matrix);
        }
        if (acc.name.empty())
            acc.name = "unknot";
        return acc;
    }
    schema_error(path, "knot object needs one of seifert, preset, torus, mirror, sum");
}

KnotInput parse_knot_input(const Json& j)
{
    KnotInput in;
    const Json& k = j.is_object() && j.contains("knot") ? j["knot"] : j;
    in.knot = parse_knot(k, "knot");
    if (j.is_object() && j.contains("orders")) {
        const auto& os = as_array(j["orders"], "orders");
        in.orders.clear();
        for (std::size_t i = 0; i < os.size(); ++i) {
            const long n = as_long(os[i], at_index("orders", i));
            if (n < 1 || n > 1000)
                schema_error(at_index("orders", i), "order must lie in 1..1000");
            in.orders.push_back(static_cast<int>(n));
        }
    }
    return in;
}

SurgeryPresentation parse_sphere_input(const Json& j)
{
    const auto& steps = as_array(require(j, "steps", "sphere"), "steps");
    SurgeryPresentation p;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto path = at_index("steps", i);
        auto k = parse_knot(require(steps[i], "knot", path), path + ".knot");
        const long q = as_long(require(steps[i], "q", path), path + ".q");
        if (q == 0)
            schema_error(path + ".q", "q must be nonzero");
        p.steps.push_back({k.matrix, Integer(q)});
    }
    return p;
}

MappingTorusInput parse_mapping_torus_input(const Json& j)
{
    MappingTorusInput in;
    const auto type = as_string(require(j, "type", "mapping-torus"), "type");
    const long n = as_long(require(j, "n", "mapping-torus"), "n");
    if (n < 1 || n > 1000)
        schema_error("n", "order must lie in 1..1000");
    const Integer lambda(as_long(require(j, "quotient_casson", "mapping-torus"), "quotient_casson"));
    if (type == "branched") {
        if (j.contains("branch_knot")) {
            auto k = parse_knot(j["branch_knot"], "branch_knot");
            in.branch_name = k.name;
            in.data = BranchedQuotientData::from_knot(static_cast<int>(n), lambda, k.matrix);
        } else if (j.contains("spectrum")) {
            const auto& s = as_array(j["spectrum"], "spectrum", static_cast<std::size_t>(n));
            BranchedQuotientData d;
            d.n = static_cast<int>(n);
            d.quotient_casson = lambda;
            d.spectrum.order = static_cast<int>(n);
            d.spectrum.values.clear();
            for (std::size_t m = 0; m < s.size(); ++m)
                d.spectrum.values.push_back(as_long(s[m], at_index("spectrum", m)));
            d.validate();
            in.branch_name = "spectrum";
            in.data = d;
        } else {
            schema_error("mapping-torus", "branched data needs branch_knot or spectrum");
        }
    } else if (type == "free") {
        FreeQuotientData d;
        d.n = static_cast<int>(n);
        d.q = as_long(require(j, "q", "mapping-torus"), "q");
        d.base_casson = lambda;
        auto k = parse_knot(require(j, "knot", "mapping-torus"), "knot");
        in.branch_name = k.name;
        d.knot = k.matrix;
        d.validate();
        in.data = d;
    } else {
        schema_error("type", "expected \"branched\" or \"free\", got \"" + type + "\"");
    }
    if (j.contains("rho"))
        in.rho = as_bit(j["rho"], "rho");
    if (j.contains("floer_ranks"))
        in.floer_ranks = parse_ranks(j["floer_ranks"], "floer_ranks");
    return in;
}

FloerData parse_floer_input(const Json& j)
{
    FloerData f;
    f.ranks = parse_ranks(require(j, "ranks", "floer"), "ranks");
    const Json& maps = require(j, "maps", "floer");
    if (maps.is_string()) {
        f = FloerData::uniform(f.ranks, parse_map(maps, "maps"));
    } else {
        as_array(maps, "maps", kFloerGradings);
        for (std::size_t k = 0; k < kFloerGradings; ++k)
            f.maps[k] = parse_map(maps[k], at_index("maps", k));
    }
    f.validate();
    return f;
}

TorusInput parse_torus_input(const Json& j)
{
    TorusInput in;
    if (!j.is_object())
        schema_error("torus4", "expected an object");
    if (j.contains("preset")) {
        const auto name = as_string(j["preset"], "preset");
        if (name == "T4")
            in.ring = presets::torus_ring();
        else if (name == "S1xT3")
            in.ring = product_ring(presets::three_torus());
        else if (name == "S1x#3(S1xS2)")
            in.ring = product_ring(presets::connected_sum_s1xs2());
        else
            schema_error("preset", "unknown ring preset \"" + name + "\"");
        in.name = name;
    } else if (j.contains("three_form")) {
        const bool t = as_bit(j["three_form"], "three_form");
        in.ring = product_ring(ThreeTorusForm{t});
        in.name = std::string("S1 x Y(") + (t ? "1" : "0") + ")";
    } else {
        const auto& cup = as_array(require(j, "cup2", "torus4"), "cup2", kH1Rank);
        for (std::size_t a = 0; a < kH1Rank; ++a) {
            as_array(cup[a], at_index("cup2", a), kH1Rank);
            for (std::size_t b = 0; b < kH1Rank; ++b)
                in.ring.cup2[a][b] = static_cast<H2Class>(
                    parse_mask(cup[a][b], at_index(at_index("cup2", a), b), kH2Rank));
        }
        const auto& pairing = as_array(require(j, "pairing", "torus4"), "pairing", kH2Rank);
        for (std::size_t i = 0; i < kH2Rank; ++i)
            in.ring.pairing[i] = static_cast<H2Class>(parse_mask(pairing[i], at_index("pairing", i), kH2Rank));
        in.ring.eval_top = as_bit(require(j, "eval_top", "torus4"), "eval_top");
        in.name = j.contains("name") ? as_string(j["name"], "name") : "ring";
    }
    if (j.contains("basis")) {
        const auto& b = as_array(j["basis"], "basis", kH1Rank);
        std::array<H1Class, kH1Rank> basis{};
        for (std::size_t i = 0; i < kH1Rank; ++i)
            basis[i] = static_cast<H1Class>(parse_mask(b[i], at_index("basis", i), kH1Rank));
        in.ring = change_basis(in.ring, basis);
    }
    in.ring.validate();
    if (j.contains("w"))
        in.w = static_cast<H2Class>(parse_mask(j["w"], "w", kH2Rank));
    if (j.contains("rohlin_table")) {
        const auto& t = as_array(j["rohlin_table"], "rohlin_table", 8);
        SpinRohlinTable table;
        for (std::size_t i = 0; i < 8; ++i)
            table.values[i] = parse_rational_value(t[i], at_index("rohlin_table", i));
        table.validate();
        in.rohlin_table = table;
    }
    return in;
}

CircleBundleData parse_circle_bundle_input(const Json& j, std::string* knot_name)
{
    auto k = parse_knot(require(j, "knot", "circle-bundle"), "knot");
    if (knot_name)
        *knot_name = k.name;
    CircleBundleData d{k.matrix, 1};
    if (j.contains("euler"))
        d.euler = as_long(j["euler"], "euler");
    return d;
}

} // namespace casson::cli
