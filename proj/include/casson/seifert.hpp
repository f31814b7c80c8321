#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "casson/hermitian.hpp"
#include "casson/laurent.hpp"
#include "casson/numbers.hpp"

namespace casson {

/// Integer Seifert matrix of a knot: square, even size 2g, with
/// det(S - S^T) = 1. The size-0 matrix is the unknot.
class SeifertMatrix {
public:
    SeifertMatrix() = default;
    /// Throws InvalidSeifertMatrix unless the rows form a valid Seifert matrix.
    explicit SeifertMatrix(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t genus() const noexcept { return dim_ / 2; }
    std::int64_t at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    std::vector<std::vector<std::int64_t>> rows() const;
    SeifertMatrix transpose() const;

    friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::int64_t> entries_;
};

/// Values sign^{m/n}(k) for m = 0..n-1.
struct SignatureSpectrum {
    int order = 1;
    std::vector<long> values{0};

    long total() const;
    /// Checks entry 0 = 0 and conjugation symmetry; throws InvalidArgument.
    void validate() const;

    friend bool operator==(const SignatureSpectrum&, const SignatureSpectrum&) = default;
};

namespace presets {

SeifertMatrix unknot();
/// [[1,0],[1,1]]: signature +2, the knot whose (-1)-surgery is the Poincare sphere.
SeifertMatrix left_trefoil();
/// [[-1,1],[0,-1]]: signature -2, mirror of left_trefoil up to congruence.
SeifertMatrix right_trefoil();
/// [[1,1],[0,-1]]
SeifertMatrix figure_eight();
/// [[-1,1],[0,0]]: trivial Alexander polynomial.
SeifertMatrix whitehead_type();

/// Looks up "unknot", "left-trefoil", "right-trefoil", "figure-eight",
/// "whitehead-type"; throws InvalidArgument for other names.
SeifertMatrix by_name(const std::string& name);
std::vector<std::string> names();

} // namespace presets

/// det(t^{1/2} S - t^{-1/2} S^T), normalized so that D(1) = 1 and D(t) = D(1/t).
LaurentPolynomial alexander_polynomial(const SeifertMatrix& s);

/// The Hermitian form (1 - w) S + (1 - conj w) S^T at w = zeta_n^m.
CycloMatrix tristram_levine_form(const SeifertMatrix& s, long m, int n);

/// Signature of the Tristram-Levine form at a = m/n (any m/n; reduced internally).
long tl_signature(const SeifertMatrix& s, long m, int n);
Inertia tl_inertia(const SeifertMatrix& s, long m, int n);

SignatureSpectrum signature_spectrum(const SeifertMatrix& s, int n);

/// Arf invariant of q(x) = x^T S x mod 2, via a symplectic basis of S + S^T mod 2.
/// Throws DegeneratePolarization if S + S^T is singular mod 2.
bool arf_invariant(const SeifertMatrix& s);

/// Seifert matrix of the (p,q) torus knot from the fiber-surface (tensor) basis;
/// signature is negative (right-handed convention). Throws NotCoprime, InvalidArgument.
SeifertMatrix torus_knot_seifert(int p, int q);

/// -S^T
SeifertMatrix mirror(const SeifertMatrix& s);
SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);

/// P^T S P; throws InvalidArgument unless det P = +-1.
SeifertMatrix congruence(const SeifertMatrix& s, const std::vector<std::vector<std::int64_t>>& p);

/// Elementary enlargement: appends a row (x, diag, 1) and a zero row. Preserves
/// the S-equivalence class, hence every invariant in this header.
SeifertMatrix stabilize(const SeifertMatrix& s, const std::vector<std::int64_t>& x, std::int64_t diag);

/// Signature of the symmetric integer form S + S^T, exactly.
long symmetrized_signature(const SeifertMatrix& s);

/// det(S + S^T) = +-Alexander(-1).
Integer symmetrized_determinant(const SeifertMatrix& s);

} // namespace casson
