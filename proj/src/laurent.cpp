#include "sparsezeros/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sparsezeros {

std::uint32_t SeriesField::base_q() const {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < base_m; ++i) q *= residue->p;
    return q;
}

std::string SeriesField::label() const {
    std::ostringstream os;
    std::uint64_t qj = 1;
    for (std::uint32_t i = 0; i < residue->m; ++i) qj *= residue->p;
    os << "F_" << qj << "((" << (e == 1 ? "T" : "T^(1/" + std::to_string(e) + ")") << "))";
    return os.str();
}

SeriesField series_field(const FieldPtr& base_residue) {
    return SeriesField{base_residue, 1, base_residue->m};
}

SeriesField series_field_ext(const FieldPtr& base_residue, std::uint32_t j, std::int64_t e) {
    if (j < 1 || e < 1) throw domain_error("extension parameters must be >= 1");
    return SeriesField{fq_make(base_residue->p, base_residue->m * j), e, base_residue->m};
}

std::string Val::str() const {
    switch (kind) {
        case FINITE: return value.str();
        case ABOVE: return ">=" + value.str();
        default: return "inf";
    }
}

// ---------------------------------------------------------------------------

void LaurentSeries::normalize() {
    if (!exact_) {
        // discard coefficients at or beyond the precision bound
        if (!cs_.empty() && lead_ + static_cast<std::int64_t>(cs_.size()) > prec_) {
            std::int64_t keep = prec_ - lead_;
            cs_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
        }
    }
    std::size_t skip = 0;
    while (skip < cs_.size() && cs_[skip].is_zero()) ++skip;
    if (skip) {
        cs_.erase(cs_.begin(), cs_.begin() + static_cast<std::ptrdiff_t>(skip));
        lead_ += static_cast<std::int64_t>(skip);
    }
    while (!cs_.empty() && cs_.back().is_zero()) cs_.pop_back();
    if (cs_.empty()) lead_ = 0;
    if (cs_.size() > kSeriesLenCap) throw cap_error("series length cap exceeded");
}

LaurentSeries LaurentSeries::zero(const SeriesField& fld) {
    LaurentSeries s;
    s.fld_ = fld;
    s.exact_ = true;
    return s;
}

LaurentSeries LaurentSeries::zero_mod(const SeriesField& fld, std::int64_t abs_prec) {
    LaurentSeries s;
    s.fld_ = fld;
    s.exact_ = false;
    s.prec_ = abs_prec;
    return s;
}

LaurentSeries LaurentSeries::one(const SeriesField& fld) {
    return monomial(fld, fld.residue->one(), 0);
}

LaurentSeries LaurentSeries::monomial(const SeriesField& fld, const FqElem& c, std::int64_t sexp) {
    LaurentSeries s;
    s.fld_ = fld;
    s.lead_ = sexp;
    if (!c.is_zero()) s.cs_ = {c};
    s.exact_ = true;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::make(const SeriesField& fld, std::int64_t lead, std::vector<FqElem> coeffs,
                                  std::int64_t abs_prec) {
    LaurentSeries s;
    s.fld_ = fld;
    s.lead_ = lead;
    s.cs_ = std::move(coeffs);
    s.exact_ = (abs_prec == kExact);
    s.prec_ = s.exact_ ? 0 : abs_prec;
    s.normalize();
    return s;
}

Val LaurentSeries::val() const {
    if (!cs_.empty()) return Val{Val::FINITE, Rat(lead_, fld_.e)};
    if (exact_) return Val{Val::INFINITE, Rat()};
    return Val{Val::ABOVE, Rat(prec_, fld_.e)};
}

FqElem LaurentSeries::leading_coeff() const {
    if (cs_.empty()) throw domain_error("leading coefficient of a zero series");
    return cs_.front();
}

FqElem LaurentSeries::coeff_at_sexp(std::int64_t sexp) const {
    if (!exact_ && sexp >= prec_)
        throw precision_error("coefficient beyond known precision");
    if (cs_.empty() || sexp < lead_ || sexp >= lead_ + static_cast<std::int64_t>(cs_.size()))
        return fld_.residue->zero();
    return cs_[static_cast<std::size_t>(sexp - lead_)];
}

FqElem LaurentSeries::coefficient_at(const Rat& g) const {
    Rat idx = g * Rat(fld_.e);
    if (!idx.is_integer()) throw domain_error("T-exponent " + g.str() + " is not integral in this field");
    return coeff_at_sexp(idx.num);
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (fld_ != o.fld_) throw domain_error("series field mismatch in +");
    LaurentSeries r;
    r.fld_ = fld_;
    r.exact_ = exact_ && o.exact_;
    if (!r.exact_) {
        std::int64_t p1 = exact_ ? INT64_MAX : prec_;
        std::int64_t p2 = o.exact_ ? INT64_MAX : o.prec_;
        r.prec_ = std::min(p1, p2);
    }
    if (cs_.empty() && o.cs_.empty()) {
        r.normalize();
        return r;
    }
    std::int64_t lo = cs_.empty() ? o.lead_ : (o.cs_.empty() ? lead_ : std::min(lead_, o.lead_));
    std::int64_t hi_a = cs_.empty() ? lo : lead_ + static_cast<std::int64_t>(cs_.size());
    std::int64_t hi_b = o.cs_.empty() ? lo : o.lead_ + static_cast<std::int64_t>(o.cs_.size());
    std::int64_t hi = std::max(hi_a, hi_b);
    r.lead_ = lo;
    r.cs_.assign(static_cast<std::size_t>(hi - lo), fld_.residue->zero());
    for (std::size_t i = 0; i < cs_.size(); ++i) r.cs_[static_cast<std::size_t>(lead_ - lo) + i] = cs_[i];
    for (std::size_t i = 0; i < o.cs_.size(); ++i) {
        auto& slot = r.cs_[static_cast<std::size_t>(o.lead_ - lo) + i];
        slot = slot + o.cs_[i];
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.cs_) c = -c;
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::scaled(const FqElem& c) const {
    if (c.is_zero()) return zero(fld_); // the scalar is exact
    LaurentSeries r = *this;
    for (auto& x : r.cs_) x = x * c;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (fld_ != o.fld_) throw domain_error("series field mismatch in *");
    // exact zero annihilates regardless of the other side's precision
    if (is_exact_zero() || o.is_exact_zero()) return zero(fld_);
    LaurentSeries r;
    r.fld_ = fld_;
    r.exact_ = exact_ && o.exact_;
    std::int64_t vx = cs_.empty() ? prec_ : lead_;
    std::int64_t vy = o.cs_.empty() ? o.prec_ : o.lead_;
    if (!r.exact_) {
        std::int64_t p1 = o.exact_ ? INT64_MAX : (vx >= INT64_MAX - o.prec_ ? INT64_MAX : vx + o.prec_);
        std::int64_t p2 = exact_ ? INT64_MAX : (vy >= INT64_MAX - prec_ ? INT64_MAX : vy + prec_);
        r.prec_ = std::min(p1, p2);
    }
    if (cs_.empty() || o.cs_.empty()) {
        // apparent zero times something: no known coefficients
        r.normalize();
        return r;
    }
    if (cs_.size() + o.cs_.size() > kSeriesLenCap) throw cap_error("series length cap exceeded in *");
    r.lead_ = lead_ + o.lead_;
    std::int64_t len = static_cast<std::int64_t>(cs_.size() + o.cs_.size()) - 1;
    if (!r.exact_) len = std::min(len, r.prec_ - r.lead_);
    if (len <= 0) {
        r.cs_.clear();
        r.normalize();
        return r;
    }
    r.cs_.assign(static_cast<std::size_t>(len), fld_.residue->zero());
    for (std::size_t i = 0; i < cs_.size(); ++i) {
        if (cs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.cs_.size(); ++j) {
            if (i + j >= static_cast<std::size_t>(len)) break;
            r.cs_[i + j] = r.cs_[i + j] + cs_[i] * o.cs_[j];
        }
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::inv(std::int64_t rel_slots) const {
    if (is_exact_zero()) throw domain_error("inversion of zero");
    if (cs_.empty()) throw precision_error("inversion of a series indistinguishable from zero");
    if (rel_slots <= 0) {
        if (exact_) {
            rel_slots = cs_.size() == 1 ? 1 : kDefaultInvWindow;
        } else {
            rel_slots = prec_ - lead_;
        }
    }
    if (!exact_) rel_slots = std::min(rel_slots, prec_ - lead_);
    if (exact_ && cs_.size() == 1) {
        // exact monomial: exact inverse
        return monomial(fld_, cs_[0].inv(), -lead_);
    }
    // invert the unit part 1 + u by the standard recurrence
    std::size_t n = static_cast<std::size_t>(rel_slots);
    FqElem c0 = cs_[0];
    FqElem c0i = c0.inv();
    std::vector<FqElem> u(n, fld_.residue->zero()); // unit part, u[0] = 1
    for (std::size_t i = 0; i < n && i < cs_.size(); ++i) u[i] = cs_[i] * c0i;
    std::vector<FqElem> w(n, fld_.residue->zero());
    w[0] = fld_.residue->one();
    for (std::size_t i = 1; i < n; ++i) {
        FqElem acc = fld_.residue->zero();
        for (std::size_t j = 1; j <= i; ++j) acc = acc + u[j] * w[i - j];
        w[i] = -acc;
    }
    for (auto& x : w) x = x * c0i;
    return make(fld_, -lead_, std::move(w), -lead_ + rel_slots);
}

LaurentSeries LaurentSeries::pow(std::int64_t n) const {
    if (n < 0) return inv().pow(-n);
    LaurentSeries r = one(fld_);
    LaurentSeries base = *this;
    std::int64_t e = n;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

LaurentSeries LaurentSeries::pth_power(std::uint32_t s) const {
    std::int64_t scale = 1;
    for (std::uint32_t i = 0; i < s; ++i) scale *= fld_.residue->p;
    LaurentSeries r;
    r.fld_ = fld_;
    r.exact_ = exact_;
    r.prec_ = exact_ ? 0 : prec_ * scale;
    r.lead_ = lead_ * scale;
    if (!cs_.empty()) {
        r.cs_.assign(static_cast<std::size_t>((cs_.size() - 1) * scale + 1), fld_.residue->zero());
        for (std::size_t i = 0; i < cs_.size(); ++i)
            r.cs_[i * static_cast<std::size_t>(scale)] = frobenius(cs_[i], s);
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::frobenius_map(std::int64_t i) const {
    LaurentSeries r = *this;
    for (auto& c : r.cs_) c = frobenius(c, i);
    return r;
}

LaurentSeries LaurentSeries::shifted(std::int64_t sexp) const {
    LaurentSeries r = *this;
    r.lead_ += sexp;
    if (!r.exact_) r.prec_ += sexp;
    if (r.cs_.empty()) r.lead_ = 0;
    return r;
}

LaurentSeries LaurentSeries::truncated(std::int64_t abs_prec) const {
    LaurentSeries r = *this;
    if (r.exact_) {
        r.exact_ = false;
        r.prec_ = abs_prec;
    } else {
        r.prec_ = std::min(r.prec_, abs_prec);
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::snipped(std::int64_t abs_prec) const {
    LaurentSeries r = *this;
    if (!r.cs_.empty() && r.lead_ + static_cast<std::int64_t>(r.cs_.size()) > abs_prec) {
        std::int64_t keep = abs_prec - r.lead_;
        r.cs_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
    }
    r.exact_ = true;
    r.prec_ = 0;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::rescale(std::int64_t e_new) const {
    if (e_new < 1) throw domain_error("rescale factor must be >= 1");
    SeriesField target{fld_.residue, fld_.e * e_new, fld_.base_m};
    LaurentSeries r;
    r.fld_ = target;
    r.exact_ = exact_;
    r.prec_ = exact_ ? 0 : prec_ * e_new;
    r.lead_ = lead_ * e_new;
    if (!cs_.empty()) {
        r.cs_.assign(static_cast<std::size_t>((cs_.size() - 1) * e_new + 1), fld_.residue->zero());
        for (std::size_t i = 0; i < cs_.size(); ++i) r.cs_[i * static_cast<std::size_t>(e_new)] = cs_[i];
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::embed_into(const SeriesField& target) const {
    if (target == fld_) return *this;
    if (target.residue->p != fld_.residue->p || target.base_m != fld_.base_m)
        throw domain_error("series embedding across incompatible fields");
    if (target.residue->m % fld_.residue->m != 0 || target.e % fld_.e != 0)
        throw domain_error("no embedding into " + target.label());
    std::int64_t scale = target.e / fld_.e;
    LaurentSeries r;
    r.fld_ = target;
    r.exact_ = exact_;
    r.prec_ = exact_ ? 0 : prec_ * scale;
    r.lead_ = lead_ * scale;
    if (!cs_.empty()) {
        r.cs_.assign(static_cast<std::size_t>((cs_.size() - 1) * scale + 1), target.residue->zero());
        for (std::size_t i = 0; i < cs_.size(); ++i)
            r.cs_[i * static_cast<std::size_t>(scale)] = embed(cs_[i], target.residue);
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::project_into(const SeriesField& target) const {
    if (target == fld_) return *this;
    if (fld_.residue->m % target.residue->m != 0 || fld_.e % target.e != 0)
        throw domain_error("projection target is not a subfield");
    std::int64_t scale = fld_.e / target.e;
    LaurentSeries r;
    r.fld_ = target;
    r.exact_ = exact_;
    if (!exact_) {
        // coefficients at S'^w are known for w*scale < prec
        std::int64_t p = prec_;
        r.prec_ = (p >= 0 ? (p + scale - 1) / scale : -((-p) / scale));
    }
    if (!cs_.empty()) {
        if (lead_ % scale != 0) throw domain_error("series support not divisible: not in subfield");
        r.lead_ = lead_ / scale;
        r.cs_.assign(cs_.size() / static_cast<std::size_t>(scale) + 1, target.residue->zero());
        for (std::size_t i = 0; i < cs_.size(); ++i) {
            if (cs_[i].is_zero()) continue;
            if (static_cast<std::int64_t>(i) % scale != 0)
                throw domain_error("series support not divisible: not in subfield");
            r.cs_[i / static_cast<std::size_t>(scale)] = project(cs_[i], target.residue);
        }
    }
    r.normalize();
    return r;
}

std::uint32_t LaurentSeries::coeff_subfield_degree() const {
    std::uint32_t j = 1;
    for (const auto& c : cs_) {
        if (c.is_zero()) continue;
        j = std::lcm(j, subfield_degree(c, fld_.base_m));
    }
    return j;
}

std::int64_t LaurentSeries::support_gcd_with_e() const {
    std::int64_t g = fld_.e;
    for (std::size_t i = 0; i < cs_.size(); ++i) {
        if (cs_[i].is_zero()) continue;
        g = std::gcd(g, lead_ + static_cast<std::int64_t>(i));
        if (g == 1) break;
    }
    return g;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.fld_ == b.fld_ && a.lead_ == b.lead_ && a.cs_ == b.cs_ && a.exact_ == b.exact_ &&
           (a.exact_ || a.prec_ == b.prec_);
}

bool agree_mod(const LaurentSeries& a, const LaurentSeries& b, std::int64_t abs_prec) {
    LaurentSeries d = a - b;
    if (d.is_zero()) {
        if (d.exact()) return true;
        return d.abs_prec() >= abs_prec;
    }
    return d.lead_exp() >= abs_prec;
}

LaurentSeries divide_mod(const LaurentSeries& a, const LaurentSeries& b, std::int64_t abs_prec) {
    if (b.is_zero()) throw domain_error("division by zero series");
    if (a.is_zero()) {
        if (a.exact()) return a;
        return LaurentSeries::zero_mod(a.field(), std::min(a.abs_prec() - b.lead_exp(), abs_prec));
    }
    std::int64_t rel = abs_prec - (a.lead_exp() - b.lead_exp()) + 2;
    if (rel < 1) rel = 1;
    return (a * b.inv(rel)).truncated(abs_prec);
}

// ---------------------------------------------------------------------------
// text form

std::vector<std::string> series_latoms(const LaurentSeries& x) {
    std::vector<std::string> out;
    const auto& cs = x.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        std::int64_t sexp = x.lead_exp() + static_cast<std::int64_t>(i);
        Rat w(sexp, x.field().e);
        std::string tp;
        if (w.num != 0) {
            if (w.is_integer())
                tp = (w.num == 1) ? "T" : "T^" + std::to_string(w.num);
            else
                tp = "T^(" + std::to_string(w.num) + "/" + std::to_string(w.den) + ")";
        }
        // decompose the residue coefficient into prime-field multiples of g^k
        auto digits = cs[i].repr();
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (digits[k] == 0) continue;
            if (k == 0) {
                std::string fe = std::to_string(digits[k]);
                out.push_back(tp.empty() ? fe : (fe == "1" ? tp : fe + "*" + tp));
            } else {
                std::string gpow = (k == 1) ? "g" : "g^" + std::to_string(k);
                for (std::uint32_t rep = 0; rep < digits[k]; ++rep)
                    out.push_back(tp.empty() ? gpow : gpow + "*" + tp);
            }
        }
    }
    if (out.empty()) out.push_back("0");
    return out;
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    auto latoms = series_latoms(*this);
    for (std::size_t i = 0; i < latoms.size(); ++i) os << (i ? " + " : "") << latoms[i];
    if (!exact_)
        os << " + O(" << (fld_.e == 1 ? "T^" + std::to_string(prec_)
                                      : "T^(" + Rat(prec_, fld_.e).str() + ")")
           << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing (the laurent sub-grammar, whitespace-insensitive)

namespace {

struct SeriesParser {
    const std::string& s;
    std::size_t i = 0;
    const SeriesField& fld;

    void skip_ws() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    std::int64_t parse_int() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
        if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i])))
            throw domain_error("expected integer in series literal: " + s);
        std::int64_t v = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i++] - '0');
            if (v > (std::int64_t(1) << 62) / 10) throw domain_error("exponent overflow");
        }
        return neg ? -v : v;
    }

    // tpow := 'T' ('^' (int | '(' int ('/' int)? ')'))?   exponent in T-units
    Rat parse_tpow() {
        if (!eat('T')) throw domain_error("expected T");
        if (!eat('^')) return Rat(1);
        if (eat('(')) {
            std::int64_t num = parse_int();
            std::int64_t den = 1;
            if (eat('/')) den = parse_int();
            if (!eat(')')) throw domain_error("unterminated T exponent");
            return Rat(num, den);
        }
        return Rat(parse_int());
    }

    // felem := uint | 'g' ('^' uint)?
    FqElem parse_felem() {
        skip_ws();
        if (peek() == 'g') {
            ++i;
            std::int64_t e = 1;
            if (eat('^')) e = parse_int();
            return fld.residue->gen().pow(e);
        }
        std::int64_t v = parse_int();
        return fld.residue->from_int(v);
    }

    // latom := felem ('*' tpow)? | tpow
    LaurentSeries parse_latom() {
        skip_ws();
        FqElem c = fld.residue->one();
        Rat w(0);
        if (peek() == 'T') {
            w = parse_tpow();
        } else {
            c = parse_felem();
            if (eat('*')) w = parse_tpow();
        }
        Rat sexp = w * Rat(fld.e);
        if (!sexp.is_integer())
            throw domain_error("T-exponent " + w.str() + " is not integral in " + fld.label());
        return LaurentSeries::monomial(fld, c, sexp.num);
    }

    LaurentSeries parse_laurent() {
        LaurentSeries acc = parse_latom();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++i;
                acc = acc + parse_latom();
            } else if (peek() == '-') {
                ++i;
                acc = acc - parse_latom();
            } else {
                break;
            }
        }
        return acc;
    }
};

} // namespace

LaurentSeries parse_series(const std::string& src, const SeriesField& fld) {
    SeriesParser p{src, 0, fld};
    LaurentSeries out = p.parse_laurent();
    p.skip_ws();
    if (p.i != src.size()) throw domain_error("trailing input in series literal: " + src);
    return out;
}

} // namespace sparsezeros
