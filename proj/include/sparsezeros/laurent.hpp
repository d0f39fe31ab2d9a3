#ifndef SPARSEZEROS_LAURENT_HPP
#define SPARSEZEROS_LAURENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sparsezeros/fields.hpp"
#include "sparsezeros/rational.hpp"

namespace sparsezeros {

/// K = F_q((T)) or one of its unramified/tame extensions F_{q^j}((S)) with
/// S^e = T.  Valuations are reported relative to v(T) = 1, so v(S) = 1/e.
struct SeriesField {
    FieldPtr residue;      // F_{q^j}
    std::int64_t e = 1;    // ramification index
    std::uint32_t base_m;  // extension degree of the base residue field F_q over F_p

    std::uint32_t j() const { return residue->m / base_m; }
    std::uint32_t base_q() const;
    FieldPtr base() const { return fq_make(residue->p, base_m); }
    std::string label() const;

    friend bool operator==(const SeriesField& a, const SeriesField& b) {
        return a.residue.get() == b.residue.get() && a.e == b.e && a.base_m == b.base_m;
    }
    friend bool operator!=(const SeriesField& a, const SeriesField& b) { return !(a == b); }
};

/// The base field F_q((T)) for a given residue field.
SeriesField series_field(const FieldPtr& base_residue);
/// F_{q^j}((T^{1/e})) over the given base residue field F_q.
SeriesField series_field_ext(const FieldPtr& base_residue, std::uint32_t j, std::int64_t e);

/// Valuation query result.  A series whose known coefficients all vanish
/// never reports a number: callers receive the ABOVE marker and decide.
struct Val {
    enum Kind { FINITE, ABOVE, INFINITE } kind = INFINITE;
    Rat value; // the valuation (FINITE) or the precision bound (ABOVE)

    bool finite() const { return kind == FINITE; }
    std::string str() const;
};

inline constexpr std::int64_t kDefaultInvWindow = 32;
inline constexpr std::size_t kSeriesLenCap = std::size_t(1) << 22;

/// Element of a SeriesField, known either exactly (a Laurent polynomial in
/// the uniformizer) or modulo S^abs_prec.  coeffs[0] multiplies S^lead and
/// is nonzero whenever any coefficient is.
class LaurentSeries {
public:
    LaurentSeries() = default;

    static LaurentSeries zero(const SeriesField& fld);
    static LaurentSeries zero_mod(const SeriesField& fld, std::int64_t abs_prec);
    static LaurentSeries one(const SeriesField& fld);
    static LaurentSeries monomial(const SeriesField& fld, const FqElem& c, std::int64_t sexp);
    /// coeffs[i] multiplies S^(lead+i); exact when abs_prec is kExact.
    static constexpr std::int64_t kExact = INT64_MIN;
    static LaurentSeries make(const SeriesField& fld, std::int64_t lead, std::vector<FqElem> coeffs,
                              std::int64_t abs_prec = kExact);

    const SeriesField& field() const { return fld_; }
    bool exact() const { return exact_; }
    std::int64_t abs_prec() const { return prec_; } // valid when !exact()
    std::int64_t lead_exp() const { return lead_; } // valid when !is_zero()
    const std::vector<FqElem>& coeffs() const { return cs_; }

    bool is_zero() const { return cs_.empty(); }       // no known nonzero coefficient
    bool is_exact_zero() const { return cs_.empty() && exact_; }
    Val val() const;

    FqElem leading_coeff() const;
    /// Coefficient of S^sexp; requires sexp < abs_prec when inexact.
    FqElem coeff_at_sexp(std::int64_t sexp) const;
    /// Coefficient of T^g (g*e must be integral).
    FqElem coefficient_at(const Rat& g) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries scaled(const FqElem& c) const;
    /// Multiplicative inverse to rel_slots relative precision (default window
    /// when 0).  An exact monomial inverts exactly.
    LaurentSeries inv(std::int64_t rel_slots = 0) const;
    LaurentSeries pow(std::int64_t n) const;
    /// Coefficientwise c -> c^(p^s) together with S -> S^(p^s): the exact
    /// p^s-th power of the series.
    LaurentSeries pth_power(std::uint32_t s) const;
    /// Coefficientwise Frobenius a -> a^(p^i) (a field automorphism fixing S).
    LaurentSeries frobenius_map(std::int64_t i) const;
    LaurentSeries shifted(std::int64_t sexp) const; // multiply by S^sexp

    /// Precision-tracked truncation: result known mod S^abs_prec.
    LaurentSeries truncated(std::int64_t abs_prec) const;
    /// Keep coefficients below abs_prec as an exact Laurent polynomial.
    LaurentSeries snipped(std::int64_t abs_prec) const;

    /// Re-express in the field with uniformizer S' where S'^e_new = S.
    LaurentSeries rescale(std::int64_t e_new) const;
    /// Map into a larger field (residue extension and/or finer uniformizer).
    LaurentSeries embed_into(const SeriesField& target) const;
    /// Inverse of embed_into; throws when the series does not lie in target.
    LaurentSeries project_into(const SeriesField& target) const;

    /// Least j' (dividing j) with every coefficient in F_{q^j'}.
    std::uint32_t coeff_subfield_degree() const;
    /// Largest t | e with every support exponent divisible by t.
    std::int64_t support_gcd_with_e() const;

    std::string str() const;

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

private:
    SeriesField fld_;
    std::int64_t lead_ = 0;
    std::vector<FqElem> cs_;
    bool exact_ = true;
    std::int64_t prec_ = 0;

    void normalize();
};

/// The known part of x as a list of grammar atoms ("1", "g^2*T^-1", ...).
std::vector<std::string> series_latoms(const LaurentSeries& x);

/// True when a and b have the same image modulo S^abs_prec.
bool agree_mod(const LaurentSeries& a, const LaurentSeries& b, std::int64_t abs_prec);

/// a/b known modulo S^abs_prec at least.
LaurentSeries divide_mod(const LaurentSeries& a, const LaurentSeries& b, std::int64_t abs_prec);

/// Parse the laurent sub-grammar ("(1+g*T^-1)" without the parens; also
/// accepts T^(a/b) for ramified uniformizers).
LaurentSeries parse_series(const std::string& src, const SeriesField& fld);

} // namespace sparsezeros

#endif
