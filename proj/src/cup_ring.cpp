#include "casson/cup_ring.hpp"

#include <bit>
#include <set>
#include <string>

#include "casson/errors.hpp"
#include "casson/f2_matrix.hpp"

namespace casson {

namespace {

bool bit(unsigned mask, int i)
{
    return ((mask >> i) & 1u) != 0;
}

// Coordinates of w in `basis`, if w lies in its span.
std::optional<unsigned> coordinates(const std::vector<H2Class>& basis, H2Class w)
{
    for (unsigned c = 0; c < (1u << basis.size()); ++c) {
        H2Class v = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (bit(c, static_cast<int>(i)))
                v ^= basis[i];
        if (v == w)
            return c;
    }
    return std::nullopt;
}

// Basis of the span of {a_i cup a_j}, chosen greedily from the products.
std::vector<H2Class> cup_image_basis(const CupRing& r)
{
    std::vector<H2Class> basis;
    for (int i = 0; i < kH1Rank; ++i)
        for (int j = i + 1; j < kH1Rank; ++j)
            if (!coordinates(basis, r.cup2[i][j]))
                basis.push_back(r.cup2[i][j]);
    return basis;
}

// q(sum c_i v_i) with q(v_i) = 0 and polar form the pairing.
bool refinement(const CupRing& r, const std::vector<H2Class>& basis, unsigned c)
{
    bool q = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (bit(c, static_cast<int>(i)) && bit(c, static_cast<int>(j)))
                q ^= r.pair(basis[i], basis[j]);
    return q;
}

void check_w(H2Class w)
{
    if (w == 0)
        throw Error(ErrorCode::ZeroW2, "w_2(P) must be nonzero");
    if (w >= (1u << kH2Rank))
        throw Error(ErrorCode::InvalidArgument, "H^2 class has more than 6 bits");
}

} // namespace

H2Class CupRing::cup(H1Class x, H1Class y) const
{
    H2Class out = 0;
    for (int i = 0; i < kH1Rank; ++i)
        if (bit(x, i))
            for (int j = 0; j < kH1Rank; ++j)
                if (bit(y, j))
                    out ^= cup2[i][j];
    return out;
}

bool CupRing::pair(H2Class u, H2Class v) const
{
    bool out = false;
    for (int i = 0; i < kH2Rank; ++i)
        if (bit(u, i))
            out ^= (std::popcount(static_cast<unsigned>(pairing[i] & v)) & 1) != 0;
    return out;
}

void CupRing::validate() const
{
    for (int i = 0; i < kH1Rank; ++i) {
        if (cup2[i][i] != 0)
            throw Error(ErrorCode::InconsistentRing, "a_" + std::to_string(i) + " cup a_" + std::to_string(i) + " != 0");
        for (int j = 0; j < kH1Rank; ++j) {
            if (cup2[i][j] != cup2[j][i])
                throw Error(ErrorCode::InconsistentRing, "cup2 is not symmetric");
            if (cup2[i][j] >= (1u << kH2Rank))
                throw Error(ErrorCode::InconsistentRing, "cup2 entry has more than 6 bits");
        }
    }
    for (int i = 0; i < kH2Rank; ++i)
        for (int j = 0; j < kH2Rank; ++j)
            if (bit(pairing[i], j) != bit(pairing[j], i))
                throw Error(ErrorCode::InconsistentRing, "H^2 pairing is not symmetric");
    for (int i = 0; i < kH1Rank; ++i)
        for (int j = 0; j < kH1Rank; ++j)
            for (int k = 0; k < kH1Rank; ++k)
                for (int l = 0; l < kH1Rank; ++l) {
                    const bool distinct = i != j && i != k && i != l && j != k && j != l && k != l;
                    const bool expected = distinct && eval_top;
                    if (pair(cup2[i][j], cup2[k][l]) != expected)
                        throw Error(ErrorCode::InconsistentRing,
                                    "(a_" + std::to_string(i) + " a_" + std::to_string(j) + " a_" + std::to_string(k) +
                                        " a_" + std::to_string(l) + ")[X] disagrees with the alternating top form");
                }
    const std::vector<H2Class> basis = cup_image_basis(*this);
    for (unsigned x = 1; x < 16; ++x)
        for (unsigned y = 1; y < 16; ++y) {
            const auto c = coordinates(basis, cup(static_cast<H1Class>(x), static_cast<H1Class>(y)));
            if (!c || refinement(*this, basis, *c))
                throw Error(ErrorCode::InconsistentRing, "a cup product has odd Pontryagin square");
        }
}

namespace presets {

CupRing torus_ring()
{
    CupRing r;
    int idx = 0;
    for (int i = 0; i < kH1Rank; ++i)
        for (int j = i + 1; j < kH1Rank; ++j) {
            r.cup2[i][j] = r.cup2[j][i] = static_cast<H2Class>(1u << idx);
            ++idx;
        }
    // a01.a23, a02.a13, a03.a12
    const int partner[kH2Rank] = {5, 4, 3, 2, 1, 0};
    for (int i = 0; i < kH2Rank; ++i)
        r.pairing[i] = static_cast<H2Class>(1u << partner[i]);
    r.eval_top = true;
    return r;
}

ThreeTorusForm three_torus()
{
    return ThreeTorusForm{true};
}

ThreeTorusForm connected_sum_s1xs2()
{
    return ThreeTorusForm{false};
}

} // namespace presets

bool det3(const ThreeTorusForm& f)
{
    return f.triple;
}

CupRing product_ring(const ThreeTorusForm& f)
{
    CupRing r;
    for (int i = 1; i < kH1Rank; ++i) {
        const auto u = static_cast<H2Class>(1u << (i - 1));
        r.cup2[0][i] = r.cup2[i][0] = u;
        // u_i pairs with s_i
        r.pairing[i - 1] = static_cast<H2Class>(1u << (3 + i - 1));
        r.pairing[3 + i - 1] = u;
    }
    if (f.triple)
        for (int i = 1; i < kH1Rank; ++i)
            for (int j = 1; j < kH1Rank; ++j)
                if (i != j) {
                    const int k = 6 - i - j; // the remaining index in {1,2,3}
                    r.cup2[i][j] = static_cast<H2Class>(1u << (3 + k - 1));
                }
    r.eval_top = f.triple;
    return r;
}

CupRing change_basis(const CupRing& r, const std::array<H1Class, kH1Rank>& new_basis)
{
    F2Matrix p(kH1Rank, kH1Rank);
    for (int i = 0; i < kH1Rank; ++i)
        for (int j = 0; j < kH1Rank; ++j)
            p.set(i, j, bit(new_basis[i], j));
    if (f2_rank(p) != kH1Rank)
        throw Error(ErrorCode::InvalidArgument, "basis change is singular over F_2");
    CupRing out = r;
    for (int i = 0; i < kH1Rank; ++i)
        for (int j = 0; j < kH1Rank; ++j)
            out.cup2[i][j] = r.cup(new_basis[i], new_basis[j]);
    // det P = 1 over F_2, so the top value is unchanged.
    return out;
}

bool det4(const CupRing& r)
{
    r.validate();
    return r.pair(r.cup2[0][1], r.cup2[2][3]);
}

std::vector<std::array<H1Class, 2>> two_planes()
{
    std::set<std::array<H1Class, 2>> planes;
    for (unsigned a = 1; a < 16; ++a)
        for (unsigned b = a + 1; b < 16; ++b) {
            std::set<unsigned> elems{a, b, a ^ b};
            auto it = elems.begin();
            const auto lo = static_cast<H1Class>(*it++);
            const auto mid = static_cast<H1Class>(*it);
            planes.insert({lo, mid});
        }
    return {planes.begin(), planes.end()};
}

bool xi_hypothesis_holds(const CupRing& r, H2Class w)
{
    for (unsigned xi = 1; xi < 16; ++xi)
        for (unsigned u = 1; u < 16; ++u)
            if (r.pair(w, r.cup(static_cast<H1Class>(xi), static_cast<H1Class>(u))))
                return true;
    return false;
}

std::optional<bool> pontryagin_square_parity(const CupRing& r, H2Class w)
{
    const std::vector<H2Class> basis = cup_image_basis(r);
    const auto c = coordinates(basis, w);
    if (!c)
        return std::nullopt;
    return refinement(r, basis, *c);
}

bool admissible(const CupRing& r, H2Class w)
{
    if (w == 0)
        return false;
    return xi_hypothesis_holds(r, w) && pontryagin_square_parity(r, w) != std::optional<bool>(true);
}

long four_orbit_count(const CupRing& r, H2Class w)
{
    check_w(w);
    r.validate();
    long count = 0;
    for (const auto& [alpha, beta] : two_planes())
        if (r.cup(alpha, beta) == w)
            ++count;
    return count;
}

bool donaldson_mod2(const CupRing& r, H2Class w)
{
    check_w(w);
    r.validate();
    if (!xi_hypothesis_holds(r, w))
        throw Error(ErrorCode::HypothesisFails, "no xi in H^1 with w cup xi != 0");
    if (pontryagin_square_parity(r, w) == std::optional<bool>(true))
        throw Error(ErrorCode::PontryaginObstruction, "w has odd Pontryagin square; no bundle with p_1 = 0");
    return four_orbit_count(r, w) % 2 != 0;
}

OrbitCensus orbit_order_census(const CupRing& r, H2Class w)
{
    check_w(w);
    r.validate();
    OrbitCensus census;
    for (const auto& [alpha, beta] : two_planes()) {
        if (r.cup(alpha, beta) != w)
            continue;
        // The stabilizer of a Z_2 + Z_2 representation is the plane it spans.
        const std::set<unsigned> stabilizer{0u, alpha, beta, static_cast<unsigned>(alpha ^ beta)};
        const long order = static_cast<long>(stabilizer.size());
        census.stabilizer_orders.push_back(order);
        const long orbit = (1L << kH1Rank) / order;
        if (orbit == 4)
            ++census.four_orbits;
        else
            census.small_orbits_absent = false;
    }
    return census;
}

void SpinRohlinTable::validate() const
{
    for (const auto& v : values)
        if (v < 0 || v >= 2)
            throw Error(ErrorCode::InvalidArgument, "Rohlin values must be representatives in [0, 2)");
}

bool rho_bar(const SpinRohlinTable& t)
{
    t.validate();
    Rational sum = 0;
    for (const auto& v : t.values)
        sum += v;
    // reduce mod 2
    Rational q = sum / 2;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational rem = sum - Rational(fl * 2);
    rem.canonicalize();
    if (rem == 0)
        return false;
    if (rem == 1)
        return true;
    throw Error(ErrorCode::NonBinary, "Rohlin table sums to " + to_string(rem) + " mod 2");
}

} // namespace casson
