#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "casson/numbers.hpp"

namespace casson {

// Bit masks: bit i is the coefficient of a_i in H^1 (4 bits) or of the
// i-th basis class in H^2 (6 bits).
using H1Class = std::uint8_t;
using H2Class = std::uint8_t;

inline constexpr int kH1Rank = 4;
inline constexpr int kH2Rank = 6;

/// Mod-2 cohomology ring data of a homology 4-torus.
struct CupRing {
    std::array<std::array<H2Class, kH1Rank>, kH1Rank> cup2{};  // a_i cup a_j
    std::array<H2Class, kH2Rank> pairing{};                  // row i as a bit mask: pairing(e_i, e_j) = bit j
    bool eval_top = false;                                   // (a_0 a_1 a_2 a_3)[X]

    H2Class cup(H1Class x, H1Class y) const;
    bool pair(H2Class u, H2Class v) const;

    /// Throws InconsistentRing if cup2 is not symmetric with zero diagonal, the
    /// pairing is not symmetric, the 4-fold products are not alternating, the
    /// top value disagrees with the pairing, or the Pontryagin-square
    /// refinement is inconsistent on the span of the cup image.
    void validate() const;
};

/// Homology 3-torus cup data: the alternating 3-form on H^1(Y; Z_2) = F_2^3
/// is determined by its single value on a basis.
struct ThreeTorusForm {
    bool triple = false;
};

namespace presets {
/// T^4 with H^2 basis a01, a02, a03, a12, a13, a23.
CupRing torus_ring();
ThreeTorusForm three_torus();          // T^3, triple = 1
ThreeTorusForm connected_sum_s1xs2();  // #3(S^1 x S^2), triple = 0
} // namespace presets

bool det3(const ThreeTorusForm& f);

/// Ring of S^1 x Y: a_0 is the circle class, H^2 basis (a_0 a_1, a_0 a_2,
/// a_0 a_3, s_1, s_2, s_3) with s_i dual to a_i in Y.
CupRing product_ring(const ThreeTorusForm& f);

/// a'_i = sum_j bit_j(new_basis[i]) a_j; throws InvalidArgument if singular.
CupRing change_basis(const CupRing& r, const std::array<H1Class, kH1Rank>& new_basis);

/// (a_0 a_1 a_2 a_3)[X] = pairing(a_0 a_1, a_2 a_3).
bool det4(const CupRing& r);

/// The 35 two-dimensional subspaces of H^1, each as (alpha, beta) with alpha < beta.
std::vector<std::array<H1Class, 2>> two_planes();

/// Exists xi with w cup xi != 0, tested as pairing(w, xi cup u) != 0 for some u.
bool xi_hypothesis_holds(const CupRing& r, H2Class w);

/// Pontryagin-square parity of w (w~ . w~ / 2 mod 2) when w lies in the span
/// of the cup image; nullopt when the ring data does not determine it.
std::optional<bool> pontryagin_square_parity(const CupRing& r, H2Class w);

/// w is the w_2 of an SO(3) bundle satisfying the hypotheses: w != 0, the xi
/// hypothesis holds, and p_1 = 0 is not obstructed.
bool admissible(const CupRing& r, H2Class w);

/// Number of planes <alpha, beta> with alpha cup beta = w. Throws ZeroW2.
long four_orbit_count(const CupRing& r, H2Class w);

/// four_orbit_count mod 2. Throws ZeroW2, HypothesisFails when no xi exists,
/// and PontryaginObstruction when no bundle with p_1 = 0 has this w_2.
bool donaldson_mod2(const CupRing& r, H2Class w);

struct OrbitCensus {
    long four_orbits = 0;
    // Perturbed orbits are not modelled; these stay empty.
    std::optional<long> eight_orbits;
    std::optional<long> sixteen_orbits;
    // Stabilizer order of each counted orbit (always 4: the plane itself).
    std::vector<long> stabilizer_orders;
    bool small_orbits_absent = true;
};

OrbitCensus orbit_order_census(const CupRing& r, H2Class w);

/// rho(X, a, sigma + x) for the 8 classes x in Span{x_1, x_2, x_3}, as Q/2Z
/// representatives in [0, 2).
struct SpinRohlinTable {
    std::array<Rational, 8> values{};

    void validate() const;
};

/// Sum of the table mod 2; throws NonBinary when the sum is not 0 or 1 mod 2.
bool rho_bar(const SpinRohlinTable& t);

} // namespace casson
