#include "sparsezeros/parser.hpp"

#include <cctype>

namespace sparsezeros {

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, const SeriesField& fld) : s_(s), fld_(fld) {}

    SparsePoly parse() {
        std::vector<SparsePoly::Term> terms;
        bool negate = false;
        if (peek() == '-') {
            ++i_;
            negate = true;
        }
        parse_term(terms, negate);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c == '+' || c == '-') {
                ++i_;
                parse_term(terms, c == '-');
            } else {
                fail("expected '+' or '-'");
            }
        }
        skip_ws();
        if (!at_end()) fail("trailing input");
        try {
            return SparsePoly(fld_, std::move(terms));
        } catch (const domain_error& e) {
            throw parse_error(e.what(), 1, 1);
        }
    }

private:
    const std::string& s_;
    const SeriesField& fld_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t k = 0; k < i_ && k < s_.size(); ++k) {
            if (s_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw parse_error(msg, line, col);
    }

    bool at_end() {
        skip_ws();
        return i_ >= s_.size();
    }
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    char peek2() {
        // first non-space character after the current one
        std::size_t k = i_ + 1;
        while (k < s_.size() && std::isspace(static_cast<unsigned char>(s_[k]))) ++k;
        return k < s_.size() ? s_[k] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }

    std::int64_t parse_uint() {
        skip_ws();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer");
        std::int64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + (s_[i_++] - '0');
            if (v > (std::int64_t(1) << 62) / 10) fail("exponent overflow");
        }
        return v;
    }

    std::int64_t parse_int() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        std::int64_t v = parse_uint();
        return neg ? -v : v;
    }

    // tpow := 'T' ('^' int)?
    std::int64_t parse_tpow() {
        if (!eat('T')) fail("expected T");
        std::int64_t w = 1;
        if (peek() == '^') {
            ++i_;
            if (peek() == '(') { // extension: T^(a/b) for ramified fields
                ++i_;
                std::int64_t num = parse_int();
                std::int64_t den = 1;
                if (eat('/')) den = parse_int();
                if (!eat(')')) fail("unterminated T exponent");
                Rat r(num, den);
                Rat sexp = r * Rat(fld_.e);
                if (!sexp.is_integer()) fail("T-exponent not integral in this field");
                return sexp.num;
            }
            w = parse_int();
        }
        Rat sexp = Rat(w) * Rat(fld_.e);
        return sexp.num;
    }

    // felem := uint | 'g' ('^' uint)?
    FqElem parse_felem() {
        if (peek() == 'g') {
            ++i_;
            std::int64_t e = 1;
            if (peek() == '^') {
                ++i_;
                e = parse_uint();
            }
            return fld_.residue->gen().pow(e);
        }
        return fld_.residue->from_int(parse_uint());
    }

    // latom := felem ('*' tpow)? | tpow
    LaurentSeries parse_latom() {
        char c = peek();
        if (c == 'T') {
            return LaurentSeries::monomial(fld_, fld_.residue->one(), parse_tpow());
        }
        if (!(c == 'g' || std::isdigit(static_cast<unsigned char>(c)))) fail("expected coefficient atom");
        FqElem fe = parse_felem();
        std::int64_t sexp = 0;
        if (peek() == '*' && peek2() == 'T') {
            ++i_; // '*'
            sexp = parse_tpow();
        }
        return LaurentSeries::monomial(fld_, fe, sexp);
    }

    // laurent := latom (('+'|'-') latom)*
    LaurentSeries parse_laurent() {
        LaurentSeries acc = parse_latom();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++i_;
                acc = acc + parse_latom();
            } else if (c == '-') {
                ++i_;
                acc = acc - parse_latom();
            } else {
                break;
            }
        }
        return acc;
    }

    // xpow := 'x' ('^' uint)?
    std::int64_t parse_xpow() {
        if (!eat('x')) fail("expected x");
        if (peek() == '^') {
            ++i_;
            return parse_uint();
        }
        return 1;
    }

    // term := coeff ('*' xpow)? | xpow
    void parse_term(std::vector<SparsePoly::Term>& terms, bool negate) {
        char c = peek();
        LaurentSeries coeff = LaurentSeries::one(fld_);
        std::int64_t n = 0;
        if (c == 'x') {
            n = parse_xpow();
        } else {
            if (c == '(') {
                ++i_;
                coeff = parse_laurent();
                if (!eat(')')) fail("expected ')'");
            } else {
                coeff = parse_latom();
            }
            if (peek() == '*' && peek2() == 'x') {
                ++i_;
                n = parse_xpow();
            }
        }
        if (negate) coeff = -coeff;
        terms.push_back({n, std::move(coeff)});
    }
};

} // namespace

SparsePoly parse_poly(const std::string& src, const SeriesField& fld) {
    return PolyParser(src, fld).parse();
}

} // namespace sparsezeros
