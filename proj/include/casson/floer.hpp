#pragma once

#include <array>
#include <variant>
#include <vector>

#include "casson/errors.hpp"
#include "casson/numbers.hpp"

namespace casson {

inline constexpr std::size_t kFloerGradings = 8;

struct IdentityMap {};
struct MinusIdentityMap {};

// Row-major square rational matrix.
struct RationalMatrix {
    std::size_t dim = 0;
    std::vector<Rational> entries;

    Rational trace() const;
};

using FloerMap = std::variant<IdentityMap, MinusIdentityMap, RationalMatrix>;

/// Ranks of I_0..I_7 and the induced maps W_k on each.
struct FloerData {
    std::array<long, kFloerGradings> ranks{};
    std::array<FloerMap, kFloerGradings> maps{};

    static FloerData uniform(const std::array<long, kFloerGradings>& ranks, const FloerMap& map);

    // Throws SizeMismatch.
    void validate() const;
};

/// sum_k (-1)^k tr(W_k). Throws SizeMismatch, NonIntegral.
Integer lefschetz(const FloerData& f);

bool check_evenness(const FloerData& f);

/// Lef / 2; throws OddLefschetz.
Integer lambda_fo_from_lefschetz(const FloerData& f);

/// Direct sum in every grading.
FloerData block_sum(const FloerData& a, const FloerData& b);

/// All sign choices eps_k = +-1 on the supported gradings with
/// sum_k (-1)^k eps_k b_k = target. Entries for unsupported gradings are 0.
using SignPattern = std::array<int, kFloerGradings>;
std::vector<SignPattern> enumerate_sign_patterns(const std::array<long, kFloerGradings>& ranks, long target);

/// The unique pattern; throws NoSolution, or AmbiguousSignPattern listing all
/// candidates. Requires every nonzero rank to be 1 (InvalidArgument otherwise).
SignPattern deduce_sign_pattern(const std::array<long, kFloerGradings>& ranks, long target);

class AmbiguousSignPattern : public Error {
public:
    explicit AmbiguousSignPattern(std::vector<SignPattern> candidates);
    const std::vector<SignPattern>& candidates() const noexcept { return candidates_; }

private:
    std::vector<SignPattern> candidates_;
};

/// Lefschetz number of complex conjugation on a Seifert fibered homology
/// sphere: W_k is +id for k = 1 mod 4 and -id for k = 3 mod 4 on the odd
/// gradings, so Lef = -b1 + b3 - b5 + b7.
Integer seifert_tau_lefschetz(long b1, long b3, long b5, long b7);

} // namespace casson
