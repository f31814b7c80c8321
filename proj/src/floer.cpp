#include "casson/floer.hpp"

#include <string>

namespace casson {

namespace {

std::string describe(const std::vector<SignPattern>& cs)
{
    std::string s;
    for (const auto& c : cs) {
        s += s.empty() ? "(" : " (";
        bool first = true;
        for (int v : c) {
            if (v == 0)
                continue;
            s += first ? "" : ",";
            s += v > 0 ? "+" : "-";
            first = false;
        }
        s += ")";
    }
    return s;
}

} // namespace

Rational RationalMatrix::trace() const
{
    Rational t = 0;
    for (std::size_t i = 0; i < dim; ++i)
        t += entries[i * dim + i];
    return t;
}

FloerData FloerData::uniform(const std::array<long, kFloerGradings>& ranks, const FloerMap& map)
{
    FloerData f;
    f.ranks = ranks;
    f.maps.fill(map);
    return f;
}

void FloerData::validate() const
{
    for (std::size_t k = 0; k < kFloerGradings; ++k) {
        if (ranks[k] < 0)
            throw Error(ErrorCode::SizeMismatch, "negative Floer rank in degree " + std::to_string(k));
        if (const auto* m = std::get_if<RationalMatrix>(&maps[k])) {
            if (m->dim != static_cast<std::size_t>(ranks[k]) || m->entries.size() != m->dim * m->dim)
                throw Error(ErrorCode::SizeMismatch, "map in degree " + std::to_string(k) + " does not match rank");
        }
    }
}

Integer lefschetz(const FloerData& f)
{
    f.validate();
    Rational total = 0;
    for (std::size_t k = 0; k < kFloerGradings; ++k) {
        const Rational tr = std::visit(
            [&](const auto& m) -> Rational {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, IdentityMap>)
                    return Rational(f.ranks[k]);
                else if constexpr (std::is_same_v<T, MinusIdentityMap>)
                    return Rational(-f.ranks[k]);
                else
                    return m.trace();
            },
            f.maps[k]);
        total += (k % 2 == 0) ? tr : Rational(-tr);
    }
    return to_integer(total, "Lefschetz number");
}

bool check_evenness(const FloerData& f)
{
    return !is_odd(lefschetz(f));
}

Integer lambda_fo_from_lefschetz(const FloerData& f)
{
    const Integer lef = lefschetz(f);
    if (is_odd(lef))
        throw Error(ErrorCode::OddLefschetz, "Lef = " + lef.get_str());
    return lef / 2;
}

FloerData block_sum(const FloerData& a, const FloerData& b)
{
    a.validate();
    b.validate();
    auto expand = [](const FloerMap& m, long rank) {
        RationalMatrix r;
        r.dim = static_cast<std::size_t>(rank);
        r.entries.assign(r.dim * r.dim, 0);
        if (const auto* mat = std::get_if<RationalMatrix>(&m))
            return *mat;
        const Rational d = std::holds_alternative<IdentityMap>(m) ? 1 : -1;
        for (std::size_t i = 0; i < r.dim; ++i)
            r.entries[i * r.dim + i] = d;
        return r;
    };
    FloerData out;
    for (std::size_t k = 0; k < kFloerGradings; ++k) {
        const RationalMatrix x = expand(a.maps[k], a.ranks[k]);
        const RationalMatrix y = expand(b.maps[k], b.ranks[k]);
        RationalMatrix z;
        z.dim = x.dim + y.dim;
        z.entries.assign(z.dim * z.dim, 0);
        for (std::size_t i = 0; i < x.dim; ++i)
            for (std::size_t j = 0; j < x.dim; ++j)
                z.entries[i * z.dim + j] = x.entries[i * x.dim + j];
        for (std::size_t i = 0; i < y.dim; ++i)
            for (std::size_t j = 0; j < y.dim; ++j)
                z.entries[(x.dim + i) * z.dim + x.dim + j] = y.entries[i * y.dim + j];
        out.ranks[k] = a.ranks[k] + b.ranks[k];
        out.maps[k] = std::move(z);
    }
    return out;
}

std::vector<SignPattern> enumerate_sign_patterns(const std::array<long, kFloerGradings>& ranks, long target)
{
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < kFloerGradings; ++k) {
        if (ranks[k] < 0)
            throw Error(ErrorCode::SizeMismatch, "negative Floer rank");
        if (ranks[k] > 0)
            support.push_back(k);
    }
    std::vector<SignPattern> out;
    for (unsigned mask = 0; mask < (1u << support.size()); ++mask) {
        SignPattern p{};
        long lef = 0;
        for (std::size_t i = 0; i < support.size(); ++i) {
            const std::size_t k = support[i];
            // bit set means minus identity
            p[k] = (mask >> i) & 1u ? -1 : 1;
            lef += (k % 2 == 0 ? 1 : -1) * p[k] * ranks[k];
        }
        if (lef == target)
            out.push_back(p);
    }
    return out;
}

SignPattern deduce_sign_pattern(const std::array<long, kFloerGradings>& ranks, long target)
{
    for (long b : ranks)
        if (b != 0 && b != 1)
            throw Error(ErrorCode::InvalidArgument, "sign deduction needs every nonzero rank to be 1");
    std::vector<SignPattern> cs = enumerate_sign_patterns(ranks, target);
    if (cs.empty())
        throw Error(ErrorCode::NoSolution, "no +-identity pattern has Lefschetz number " + std::to_string(target));
    if (cs.size() > 1)
        throw AmbiguousSignPattern(std::move(cs));
    return cs.front();
}

AmbiguousSignPattern::AmbiguousSignPattern(std::vector<SignPattern> candidates)
    : Error(ErrorCode::AmbiguousSolution, std::to_string(candidates.size()) + " candidates " + describe(candidates)),
      candidates_(std::move(candidates))
{
}

Integer seifert_tau_lefschetz(long b1, long b3, long b5, long b7)
{
    return Integer(-b1) + b3 - b5 + b7;
}

} // namespace casson
