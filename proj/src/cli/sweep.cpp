#include "casson/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "casson/cli/commands.hpp"
#include "casson/errors.hpp"

namespace casson::cli {

namespace {

using Task = std::function<InvariantReport()>;

std::vector<InvariantReport> evaluate(const std::vector<Task>& tasks, unsigned threads)
{
    std::vector<InvariantReport> out(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            try {
                out[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    // First failure in instance order, so errors are deterministic too.
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

std::vector<long> get(const RangeSpec& spec, const std::string& key, std::vector<long> fallback)
{
    auto it = spec.find(key);
    return it == spec.end() ? fallback : it->second;
}

void check_keys(const RangeSpec& spec, const std::string& family, std::initializer_list<const char*> allowed)
{
    for (const auto& [key, values] : spec) {
        bool ok = false;
        for (const char* a : allowed)
            ok |= key == a;
        if (!ok)
            throw Error(ErrorCode::SchemaError, "family " + family + " has no range key \"" + key + "\"");
    }
}

void require_double_covers(const std::vector<long>& ns)
{
    for (long n : ns)
        if (n != 2)
            throw Error(ErrorCode::SchemaError,
                        "only n = 2 is supported: rho of the cover is computed from the double branched cover");
}

std::string stamp(const std::string& family, const std::string& label)
{
    return digest(family + ":" + label);
}

// Brieskorn spheres Sigma(2,3,6k-1) and Sigma(2,3,6k+1) are -1/k surgery on a
// trefoil (left for 6k-1, right for 6k+1).
std::optional<SurgeryPresentation> trefoil_route(long q, long r)
{
    if (q != 3)
        std::swap(q, r);
    if (q != 3)
        return std::nullopt;
    if (r % 6 == 5)
        return SurgeryPresentation{{{presets::left_trefoil(), Integer(-(r + 1) / 6)}}};
    if (r % 6 == 1)
        return SurgeryPresentation{{{presets::right_trefoil(), Integer(-(r - 1) / 6)}}};
    return std::nullopt;
}

InvariantReport torus_branched_instance(long q, long r)
{
    InvariantReport rep;
    rep.command = "sweep";
    rep.label = "Sigma(2," + std::to_string(q) + "," + std::to_string(r) + ")";
    rep.input_digest = stamp("torus-branched", rep.label);
    const auto k = torus_knot_seifert(static_cast<int>(q), static_cast<int>(r));
    const QuotientData d = BranchedQuotientData::from_knot(2, 0, k);
    const bool rho = rohlin_double_branched(k);
    const auto m = conjecture1_check(d, rho);
    rep.add("lambda_fo", m.lambda_fo);
    rep.add("rho", rho);
    rep.flag("lambda_fo_equiv_rho", m.congruent);
    rep.flag("mubar_agrees", mubar_double_branched(k) == m.lambda_fo);
    rep.flag("orientation_antisymmetry", orientation_reversal_check(d));
    if (auto p = trefoil_route(q, r)) {
        const auto s = check_casson_rohlin(*p);
        rep.add("casson_surgery", s.casson);
        rep.flag("surgery_casson_agrees", Rational(s.casson) == m.lambda_fo);
        rep.flag("surgery_rohlin_agrees", s.rohlin == rho);
    }
    return rep;
}

std::vector<Task> torus_branched(const RangeSpec& spec)
{
    check_keys(spec, "torus-branched", {"n", "q", "r"});
    require_double_covers(get(spec, "n", {2}));
    std::vector<Task> tasks;
    std::set<std::pair<long, long>> seen;
    for (long q : get(spec, "q", {3, 5, 7, 9, 11}))
        for (long r : get(spec, "r", {3, 5})) {
            if (q < 3 || r < 3 || q % 2 == 0 || r % 2 == 0 || q == r || gcd(q, r) != 1)
                continue;
            if (!seen.insert({std::min(q, r), std::max(q, r)}).second)
                continue;
            tasks.push_back([a = std::min(q, r), b = std::max(q, r)] { return torus_branched_instance(a, b); });
        }
    return tasks;
}

struct NamedMatrix {
    std::string name;
    SeifertMatrix matrix;
};

// Knots in S^3 whose double branched cover is a homology sphere.
std::vector<NamedMatrix> free_composite_knots()
{
    const auto t35 = torus_knot_seifert(3, 5);
    const auto t37 = torus_knot_seifert(3, 7);
    return {
        {"T(3,5)", t35},
        {"T(3,7)", t37},
        {"T(5,7)", torus_knot_seifert(5, 7)},
        {"mirror T(3,5)", mirror(t35)},
        {"whitehead-type", presets::whitehead_type()},
        {"T(3,5) # T(3,7)", connected_sum(t35, t37)},
    };
}

InvariantReport free_instance(const NamedMatrix& k, long q)
{
    InvariantReport rep;
    rep.command = "sweep";
    rep.label = "2/" + std::to_string(q) + " on " + k.name;
    rep.input_digest = stamp("free-composite", rep.label);
    FreeQuotientData d{2, Integer(q), 0, k.matrix};
    // Sigma = Y_2 + (1/q) k~ with arf(k~) = arf(k).
    const bool rho = rohlin_double_branched(k.matrix) ^ (is_odd(Integer(q)) && arf_invariant(k.matrix));
    const auto m = conjecture1_check(d, rho);
    rep.add("lambda_fo", m.lambda_fo);
    rep.add("rho", rho);
    rep.flag("lambda_fo_equiv_rho", m.congruent);
    rep.flag("branched_free_relation", branched_free_relation(d, BranchedQuotientData::from_knot(2, 0, k.matrix)));
    rep.flag("orientation_antisymmetry", orientation_reversal_check(d));
    return rep;
}

std::vector<Task> free_composite(const RangeSpec& spec)
{
    check_keys(spec, "free-composite", {"n", "q"});
    require_double_covers(get(spec, "n", {2}));
    std::vector<Task> tasks;
    const auto knots = free_composite_knots();
    for (const auto& k : knots)
        for (long q : get(spec, "q", {-3, -1, 1, 3})) {
            if (q % 2 == 0)
                continue;
            tasks.push_back([k, q] { return free_instance(k, q); });
        }
    return tasks;
}

std::vector<Task> surgery_chains(const RangeSpec& spec)
{
    check_keys(spec, "surgery-chains", {"length", "q"});
    const std::vector<std::string> names{"left-trefoil", "right-trefoil", "figure-eight", "whitehead-type"};
    std::vector<long> qs;
    for (long q : get(spec, "q", {-2, -1, 1, 2}))
        if (q != 0)
            qs.push_back(q);
    std::vector<Task> tasks;
    const std::size_t choices = names.size() * qs.size();
    for (long len : get(spec, "length", {1, 2})) {
        if (len < 0 || len > 4)
            throw Error(ErrorCode::SchemaError, "chain length must lie in 0..4");
        std::size_t total = 1;
        for (long i = 0; i < len; ++i)
            total *= choices;
        for (std::size_t code = 0; code < total; ++code) {
            SurgeryPresentation p;
            std::string label;
            std::size_t c = code;
            for (long i = 0; i < len; ++i, c /= choices) {
                const auto& name = names[(c % choices) / qs.size()];
                const long q = qs[c % qs.size()];
                p.steps.push_back({presets::by_name(name), Integer(q)});
                label += (i ? " + " : "") + std::string("(1/") + std::to_string(q) + ")" + name;
            }
            if (label.empty())
                label = "S^3";
            tasks.push_back([p, label] {
                auto rep = sphere_report(p);
                rep.command = "sweep";
                rep.label = label;
                rep.input_digest = stamp("surgery-chains", label);
                return rep;
            });
        }
    }
    return tasks;
}

// Fixed GL(4, F_2) presentations of the product rings.
const std::array<std::array<H1Class, kH1Rank>, 4> kPresentations{{
    {0b0001, 0b0010, 0b0100, 0b1000},
    {0b0011, 0b0010, 0b0100, 0b1000},
    {0b0010, 0b0100, 0b1000, 0b0001},
    {0b1111, 0b0110, 0b1100, 0b1000},
}};

std::vector<Task> three_forms(const RangeSpec& spec)
{
    check_keys(spec, "three-forms", {"triple", "presentation", "torus"});
    std::vector<TorusInput> rings;
    for (long t : get(spec, "triple", {0, 1})) {
        if (t != 0 && t != 1)
            throw Error(ErrorCode::SchemaError, "triple must be 0 or 1");
        for (long p : get(spec, "presentation", {0, 1, 2, 3})) {
            if (p < 0 || p >= static_cast<long>(kPresentations.size()))
                throw Error(ErrorCode::SchemaError, "presentation must lie in 0..3");
            TorusInput in;
            in.name = "S1 x Y(" + std::to_string(t) + ")/P" + std::to_string(p);
            in.ring = change_basis(product_ring(ThreeTorusForm{t == 1}), kPresentations[static_cast<std::size_t>(p)]);
            rings.push_back(in);
        }
    }
    for (long t : get(spec, "torus", {1}))
        if (t == 1)
            rings.push_back({"T4", presets::torus_ring(), std::nullopt, std::nullopt});
    std::vector<Task> tasks;
    for (const auto& ring : rings)
        for (unsigned w = 1; w < (1u << kH2Rank); ++w) {
            if (!admissible(ring.ring, static_cast<H2Class>(w)))
                continue;
            TorusInput in = ring;
            in.w = static_cast<H2Class>(w);
            tasks.push_back([in] {
                auto rep = torus_report(in);
                rep.command = "sweep";
                rep.label = in.name + " w=" + std::to_string(*in.w);
                rep.input_digest = stamp("three-forms", rep.label);
                return rep;
            });
        }
    return tasks;
}

std::string canonical_range(const RangeSpec& spec)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, values] : spec) {
        os << (first ? "" : ";") << key << "=";
        for (std::size_t i = 0; i < values.size(); ++i)
            os << (i ? "," : "") << values[i];
        first = false;
    }
    return os.str();
}

long parse_long(const std::string& s, const std::string& context)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw Error(ErrorCode::ParseError, "range " + context + ": \"" + s + "\" is not an integer");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        parts.push_back(cur);
    if (!s.empty() && s.back() == sep)
        parts.emplace_back();
    return parts;
}

} // namespace

RangeSpec parse_range(const std::string& text)
{
    RangeSpec spec;
    std::string compact;
    for (char c : text)
        if (c != ' ' && c != '\t')
            compact += c;
    if (compact.empty())
        return spec;
    for (const auto& clause : split(compact, ';')) {
        if (clause.empty())
            continue;
        const auto eq = clause.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorCode::ParseError, "range clause \"" + clause + "\" needs key=values");
        const auto key = clause.substr(0, eq);
        if (spec.count(key))
            throw Error(ErrorCode::ParseError, "range key \"" + key + "\" given twice");
        auto& values = spec[key];
        const auto rhs = clause.substr(eq + 1);
        if (rhs.empty())
            continue;
        for (const auto& item : split(rhs, ',')) {
            const auto dots = item.find("..");
            if (dots == std::string::npos) {
                values.push_back(parse_long(item, key));
                continue;
            }
            const long a = parse_long(item.substr(0, dots), key);
            const long b = parse_long(item.substr(dots + 2), key);
            if (b - a > 10000)
                throw Error(ErrorCode::ParseError, "range " + key + " is too long");
            for (long v = a; v <= b; ++v)
                values.push_back(v);
        }
    }
    return spec;
}

const std::vector<std::string>& family_names()
{
    static const std::vector<std::string> names{"torus-branched", "free-composite", "surgery-chains", "three-forms"};
    return names;
}

SweepTable run_sweep(const std::string& family, const std::string& range, unsigned threads)
{
    const RangeSpec spec = parse_range(range);
    std::vector<Task> tasks;
    if (family == "torus-branched")
        tasks = torus_branched(spec);
    else if (family == "free-composite")
        tasks = free_composite(spec);
    else if (family == "surgery-chains")
        tasks = surgery_chains(spec);
    else if (family == "three-forms")
        tasks = three_forms(spec);
    else
        throw Error(ErrorCode::SchemaError, "unknown sweep family \"" + family + "\"");
    SweepTable t;
    t.family = family;
    t.range = canonical_range(spec);
    t.input_digest = digest("family=" + family + ";range=" + t.range);
    t.reports = evaluate(tasks, threads);
    return t;
}

} // namespace casson::cli
