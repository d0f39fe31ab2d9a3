#ifndef SPARSEZEROS_POLY_HPP
#define SPARSEZEROS_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sparsezeros/laurent.hpp"

namespace sparsezeros {

inline constexpr std::int64_t kDenseExpansionCap = 4096;

/// Sparse polynomial f = a_0 x^{n_0} + ... + a_k x^{n_k} over a SeriesField,
/// exponents strictly increasing, every coefficient nonzero (to its
/// precision).  The zero polynomial is not representable.
class SparsePoly {
public:
    struct Term {
        std::int64_t n;
        LaurentSeries a;
    };

    SparsePoly(SeriesField fld, std::vector<Term> terms);

    const SeriesField& field() const { return fld_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t k() const { return terms_.size() - 1; } // sparsity parameter
    std::int64_t degree() const { return terms_.back().n; }
    std::int64_t low_exp() const { return terms_.front().n; }

    /// Coefficients mapped into a larger series field.
    SparsePoly embed_into(const SeriesField& target) const;
    /// x -> c*x substitution: coefficients become a_i * c^{n_i}.
    SparsePoly x_scaled(const LaurentSeries& c) const;
    /// The exact p^s-th power (coefficientwise power, exponents scaled).
    SparsePoly pth_power(std::uint32_t s) const;
    /// Formal derivative; null when it vanishes identically (char p).
    bool derivative_is_zero() const;

    std::string str() const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.fld_ == b.fld_ && a.terms_.size() == b.terms_.size() &&
               [&] {
                   for (std::size_t i = 0; i < a.terms_.size(); ++i)
                       if (a.terms_[i].n != b.terms_[i].n || a.terms_[i].a != b.terms_[i].a) return false;
                   return true;
               }();
    }

private:
    SeriesField fld_;
    std::vector<Term> terms_;
};

/// f(x) with ultrametric precision propagation; exact when f and x are.
/// x may live in an extension of f's field (coefficients are embedded).
LaurentSeries evaluate(const SparsePoly& f, const LaurentSeries& x);

/// Sum_i n_i a_i x^{n_i - 1}, the derivative evaluated at x.
LaurentSeries evaluate_derivative(const SparsePoly& f, const LaurentSeries& x);

/// Dense coefficients of f(r + x) together with the first min-valuation
/// index M (the least j with v(b_j) minimal among all coefficients).
struct Recentered {
    std::vector<LaurentSeries> b; // b[j] multiplies x^j, j = 0..deg f
    std::int64_t min_val_index;   // M
};
Recentered recenter(const SparsePoly& f, const LaurentSeries& r);

/// f(x^e): exponents multiplied by e.
SparsePoly transform_xe(const SparsePoly& f, std::int64_t e);

/// x^m f(1/x) for m > deg f: term (n_i, a_i) -> (m - n_i, a_i).
SparsePoly transform_reverse(const SparsePoly& f, std::int64_t m);

/// Maximal (g, s) with f = g^{p^s}; s = 0 when f is not a p-th power.
/// Requires exact coefficients.
struct PthPowerReduced {
    SparsePoly g;
    std::uint32_t s;
};
PthPowerReduced pth_power_reduce(const SparsePoly& f);

} // namespace sparsezeros

#endif
