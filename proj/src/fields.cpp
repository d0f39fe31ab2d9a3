#include "sparsezeros/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace sparsezeros {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- dense polynomial helpers over F_p (coefficient = uint32, low-first) ---

using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul_mod(const PPoly& a, const PPoly& b, const PPoly& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    // mod is monic of degree d
    std::size_t d = mod.size() - 1;
    for (std::size_t i = r.size(); i-- > d;) {
        std::uint32_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < d; ++j) {
            std::uint64_t t = std::uint64_t(c) * mod[j] % p;
            r[i - d + j] = static_cast<std::uint32_t>((r[i - d + j] + p - t) % p);
        }
    }
    r.resize(std::min(r.size(), d));
    ptrim(r);
    return r;
}

PPoly ppow_mod(PPoly base, std::uint64_t n, const PPoly& mod, std::uint32_t p) {
    PPoly r = {1};
    while (n) {
        if (n & 1) r = pmul_mod(r, base, mod, p);
        base = pmul_mod(base, base, mod, p);
        n >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b, b monic-ized on the fly
        std::uint32_t lead = b.back();
        std::uint32_t lead_inv = 1;
        // Fermat inverse in F_p
        {
            std::uint64_t r = 1, x = lead, e = p - 2;
            while (e) {
                if (e & 1) r = r * x % p;
                x = x * x % p;
                e >>= 1;
            }
            lead_inv = static_cast<std::uint32_t>(r);
        }
        while (a.size() >= b.size()) {
            std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a.back()) * lead_inv % p);
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[off + j] = static_cast<std::uint32_t>((a[off + j] + p - std::uint64_t(c) * b[j] % p) % p);
            ptrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility test for monic f of degree m over F_p.
bool is_irreducible(const PPoly& f, std::uint32_t p) {
    std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    if (m == 0) return false;
    // x^(p^i) mod f, computed by iterating the p-power map
    PPoly x = {0, 1};
    auto frob_steps = [&](PPoly y, std::uint32_t steps) {
        for (std::uint32_t s = 0; s < steps; ++s) y = ppow_mod(y, p, f, p);
        return y;
    };
    std::vector<std::uint32_t> prime_divs;
    {
        std::uint32_t n = m;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime_divs.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) prime_divs.push_back(n);
    }
    for (std::uint32_t ell : prime_divs) {
        PPoly y = frob_steps(x, m / ell);
        // gcd(y - x, f) must be 1
        PPoly diff = y;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        ptrim(diff);
        PPoly g = pgcd(f, diff, p);
        if (!(g.size() == 1)) return false;
    }
    PPoly y = frob_steps(x, m);
    ptrim(y);
    return y == x;
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> fields;
    struct Embedding {
        std::vector<std::uint32_t> gen_pows;       // rho^i in target, i < m_a
        std::vector<std::vector<std::uint32_t>> section; // m_a rows solving for preimages
        std::vector<int> pivot_cols;
    };
    std::map<std::pair<const FieldSpec*, const FieldSpec*>, Embedding> embeddings;
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec::~FieldSpec() = default;

FqElem FieldSpec::elem(std::uint32_t packed) const {
    if (packed >= q) throw domain_error("packed value out of range for F_" + std::to_string(q));
    return FqElem(this, packed);
}

FqElem FieldSpec::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return FqElem(this, static_cast<std::uint32_t>(r));
}

FqElem FieldSpec::from_repr(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > m) throw domain_error("repr vector longer than extension degree");
    std::uint32_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p) throw domain_error("repr digit out of range");
        v = v * p + coeffs[i];
    }
    return FqElem(this, v);
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t da = a % p, db = b % p;
        a /= p;
        b /= p;
        r += ((da + db) % p) * mult;
        mult *= p;
    }
    return r;
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
    if (p == 2) return a;
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t da = a % p;
        a /= p;
        r += (da == 0 ? 0 : p - da) * mult;
        mult *= p;
    }
    return r;
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldSpec::mul_generic(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    // unpack digits
    std::uint32_t da[32], db[32];
    for (std::uint32_t i = 0; i < m; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    std::uint64_t prod[64] = {0};
    for (std::uint32_t i = 0; i < m; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
    }
    // reduce by monic modulus
    for (std::uint32_t i = 2 * m - 1; i >= m && i < 64; --i) {
        std::uint64_t c = prod[i] % p;
        prod[i] = 0;
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i - m + j] += std::uint64_t(p) * p - c * modulus[j] % p; // keep non-negative
    }
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        r += static_cast<std::uint32_t>(prod[i] % p) * mult;
        mult *= p;
    }
    return r;
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_) {
        std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
        if (s >= q - 1) s -= q - 1;
        return exp_[s];
    }
    return mul_generic(a, b);
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    if (a == 0) throw domain_error("inverse of zero field element");
    if (has_tables_) {
        std::uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : q - 1 - l];
    }
    return pow(a, static_cast<std::int64_t>(q) - 2);
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::int64_t n) const {
    std::int64_t ord = static_cast<std::int64_t>(q) - 1;
    if (a == 0) {
        if (n < 0) throw domain_error("inverse of zero field element");
        return n == 0 ? 1 : 0;
    }
    std::int64_t e = n % ord;
    if (e < 0) e += ord;
    std::uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<FqElem> FieldSpec::elements() const {
    std::vector<FqElem> out;
    out.reserve(q);
    for (std::uint32_t v = 0; v < q; ++v) out.emplace_back(this, v);
    return out;
}

void FieldSpec::build_tables() {
    if (q > (1u << 16)) return;
    // find a primitive element (smallest packed value)
    std::vector<std::uint32_t> prime_divs;
    {
        std::uint32_t n = q - 1;
        for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
            if (n % d == 0) {
                prime_divs.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) prime_divs.push_back(n);
    }
    std::uint32_t gen = 0;
    for (std::uint32_t cand = 1; cand < q; ++cand) {
        bool ok = true;
        for (std::uint32_t ell : prime_divs)
            if (pow(cand, (q - 1) / ell) == 1) { // uses generic mul (tables not yet set)
                ok = false;
                break;
            }
        if (ok) {
            gen = cand;
            break;
        }
    }
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        exp_[i] = acc;
        log_[acc] = i;
        acc = mul_generic(acc, gen);
    }
    has_tables_ = true;
}

// ---------------------------------------------------------------------------
// FqElem operators

std::vector<std::uint32_t> FqElem::repr() const {
    std::vector<std::uint32_t> out(fs_->m);
    std::uint32_t v = v_;
    for (std::uint32_t i = 0; i < fs_->m; ++i) {
        out[i] = v % fs_->p;
        v /= fs_->p;
    }
    return out;
}

FqElem FqElem::operator+(const FqElem& o) const { return FqElem(fs_, fs_->add(v_, o.v_)); }
FqElem FqElem::operator-(const FqElem& o) const { return FqElem(fs_, fs_->sub(v_, o.v_)); }
FqElem FqElem::operator*(const FqElem& o) const { return FqElem(fs_, fs_->mul(v_, o.v_)); }
FqElem FqElem::operator/(const FqElem& o) const { return FqElem(fs_, fs_->mul(v_, fs_->inv(o.v_))); }
FqElem FqElem::operator-() const { return FqElem(fs_, fs_->neg(v_)); }
FqElem FqElem::inv() const { return FqElem(fs_, fs_->inv(v_)); }
FqElem FqElem::pow(std::int64_t n) const { return FqElem(fs_, fs_->pow(v_, n)); }

std::string FqElem::str() const {
    if (v_ == 0) return "0";
    if (fs_->m == 1) return std::to_string(v_);
    if (v_ == 1) return "1";
    // power of the canonical generator, when it is one
    std::uint32_t g = fs_->gen().packed();
    std::uint32_t acc = g;
    for (std::uint32_t i = 1; i < fs_->q; ++i) {
        if (acc == v_) return i == 1 ? "g" : "g^" + std::to_string(i);
        if (acc == 1) break; // generator order exhausted
        acc = fs_->mul(acc, g);
    }
    std::ostringstream os;
    os << "[";
    auto r = repr();
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// fq_make

FieldPtr fq_make(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw domain_error("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw domain_error("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kFieldCap) throw cap_error("q = p^m exceeds the field magnitude cap");
    }

    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(p, m);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return it->second;

    auto fs = std::shared_ptr<FieldSpec>(new FieldSpec());
    fs->p = p;
    fs->m = m;
    fs->q = static_cast<std::uint32_t>(q);

    if (m == 1) {
        fs->modulus = {0, 1}; // x
    } else {
        // enumerate constant-first lexicographic order: n encodes (c0,...,c_{m-1})
        // with c0 in the most significant base-p position
        // Enumerate (c0,...,c_{m-1}) in lexicographic order, c0 compared
        // first: the counter's least significant base-p digit drives c_{m-1}.
        PPoly mod(m + 1, 0);
        mod[m] = 1;
        bool found = false;
        for (std::uint64_t n = 0; n < q && !found; ++n) {
            std::uint64_t t = n;
            for (std::uint32_t i = 0; i < m; ++i) {
                mod[m - 1 - i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (is_irreducible(mod, p)) {
                fs->modulus = mod;
                found = true;
            }
        }
        if (!found) throw domain_error("no irreducible modulus found"); // unreachable
    }

    fs->build_tables();
    FieldPtr out = fs;
    reg.fields.emplace(key, out);
    return out;
}

// ---------------------------------------------------------------------------
// frobenius / embeddings

FqElem frobenius(const FqElem& a, std::int64_t i) {
    const FieldSpec& fs = a.field();
    std::int64_t steps = i % fs.m;
    if (steps < 0) steps += fs.m;
    FqElem r = a;
    for (std::int64_t s = 0; s < steps; ++s) r = r.pow(fs.p);
    return r;
}

namespace {

Registry::Embedding& get_embedding(const FieldSpec* src, const FieldSpec* dst) {
    if (src->p != dst->p) throw domain_error("embedding across different characteristics");
    if (dst->m % src->m != 0) throw domain_error("no embedding: source degree does not divide target degree");
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(src, dst);
    auto it = reg.embeddings.find(key);
    if (it != reg.embeddings.end()) return it->second;

    Registry::Embedding emb;
    const std::uint32_t p = src->p, ma = src->m;
    // root of src's modulus in dst with lexicographically smallest repr
    // vector (constant coefficient compared first)
    std::uint32_t rho = 0;
    bool found = false;
    std::vector<std::uint32_t> best;
    for (std::uint32_t cand = 0; cand < dst->q; ++cand) {
        // Horner evaluation of src->modulus at cand inside dst
        std::uint32_t acc = 0;
        for (std::size_t i = src->modulus.size(); i-- > 0;) {
            acc = dst->mul(acc, cand);
            acc = dst->add(acc, src->modulus[i] % p); // prime-subfield coefficient
        }
        if (acc != 0) continue;
        auto r = FqElem(dst, cand).repr();
        if (!found || std::lexicographical_compare(r.begin(), r.end(), best.begin(), best.end())) {
            rho = cand;
            best = r;
            found = true;
        }
    }
    if (!found) throw domain_error("modulus has no root in target field"); // unreachable for a|b
    emb.gen_pows.resize(ma);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < ma; ++i) {
        emb.gen_pows[i] = acc;
        acc = dst->mul(acc, rho);
    }
    // section: solve  sum_i c_i * rho^i = y  for (c_i) over F_p.
    // Gaussian elimination on the mb x ma matrix whose columns are repr(rho^i).
    const std::uint32_t mb = dst->m;
    std::vector<std::vector<std::uint32_t>> cols(ma);
    for (std::uint32_t i = 0; i < ma; ++i) cols[i] = FqElem(dst, emb.gen_pows[i]).repr();
    // augmented row-reduction precomputation: store matrix rows (mb rows, ma cols)
    std::vector<std::vector<std::uint32_t>> mat(mb, std::vector<std::uint32_t>(ma, 0));
    for (std::uint32_t r = 0; r < mb; ++r)
        for (std::uint32_t c = 0; c < ma; ++c) mat[r][c] = cols[c][r];
    // reduce to echelon, remembering operations as applied to an identity on rows
    std::vector<std::vector<std::uint32_t>> ops(mb, std::vector<std::uint32_t>(mb, 0));
    for (std::uint32_t r = 0; r < mb; ++r) ops[r][r] = 1;
    auto row_scale = [&](std::uint32_t r, std::uint32_t s) {
        for (auto& x : mat[r]) x = static_cast<std::uint32_t>(std::uint64_t(x) * s % p);
        for (auto& x : ops[r]) x = static_cast<std::uint32_t>(std::uint64_t(x) * s % p);
    };
    auto row_axpy = [&](std::uint32_t dst_r, std::uint32_t src_r, std::uint32_t c) {
        for (std::uint32_t j = 0; j < ma; ++j)
            mat[dst_r][j] = static_cast<std::uint32_t>((mat[dst_r][j] + std::uint64_t(c) * mat[src_r][j]) % p);
        for (std::uint32_t j = 0; j < mb; ++j)
            ops[dst_r][j] = static_cast<std::uint32_t>((ops[dst_r][j] + std::uint64_t(c) * ops[src_r][j]) % p);
    };
    std::uint32_t rank = 0;
    emb.pivot_cols.assign(ma, -1);
    for (std::uint32_t c = 0; c < ma && rank < mb; ++c) {
        std::uint32_t piv = rank;
        while (piv < mb && mat[piv][c] == 0) ++piv;
        if (piv == mb) continue;
        std::swap(mat[piv], mat[rank]);
        std::swap(ops[piv], ops[rank]);
        // scale pivot to 1
        std::uint32_t inv = 1;
        {
            std::uint64_t r = 1, x = mat[rank][c], e = p - 2;
            while (e) {
                if (e & 1) r = r * x % p;
                x = x * x % p;
                e >>= 1;
            }
            inv = static_cast<std::uint32_t>(r);
        }
        row_scale(rank, inv);
        for (std::uint32_t r2 = 0; r2 < mb; ++r2) {
            if (r2 != rank && mat[r2][c] != 0) row_axpy(r2, rank, p - mat[r2][c]);
        }
        emb.pivot_cols[c] = static_cast<int>(rank);
        ++rank;
    }
    emb.section = ops; // ops * repr(y) gives, in pivot rows, the coefficients
    auto res = reg.embeddings.emplace(key, std::move(emb));
    return res.first->second;
}

FqElem embed_impl(const FqElem& a, const FieldSpec* dst) {
    const FieldSpec* src = a.field_ptr();
    if (src == dst) return a;
    auto& emb = get_embedding(src, dst);
    auto digits = a.repr();
    std::uint32_t acc = 0;
    for (std::uint32_t i = 0; i < src->m; ++i) {
        if (digits[i] == 0) continue;
        std::uint32_t scaled = dst->mul(emb.gen_pows[i], dst->from_int(digits[i]).packed());
        acc = dst->add(acc, scaled);
    }
    return FqElem(dst, acc);
}

} // namespace

FqElem embed(const FqElem& a, const FieldPtr& target) { return embed_impl(a, target.get()); }

bool in_subfield(const FqElem& y, std::uint32_t sub_m) {
    const FieldSpec& fs = y.field();
    if (fs.m % sub_m != 0) return false;
    return frobenius(y, sub_m) == y;
}

FqElem project(const FqElem& y, const FieldPtr& sub) {
    const FieldSpec* dst = y.field_ptr();
    if (sub.get() == dst) return y;
    auto& emb = get_embedding(sub.get(), dst);
    const std::uint32_t p = dst->p;
    auto digits = y.repr();
    // coefficients = section * digits, read off pivot rows
    std::vector<std::uint32_t> coeffs(sub->m, 0);
    for (std::uint32_t c = 0; c < sub->m; ++c) {
        int row = emb.pivot_cols[c];
        if (row < 0) throw domain_error("embedding section is degenerate");
        std::uint64_t s = 0;
        for (std::uint32_t j = 0; j < dst->m; ++j) s += std::uint64_t(emb.section[row][j]) * digits[j];
        coeffs[c] = static_cast<std::uint32_t>(s % p);
    }
    FqElem cand = sub->from_repr(coeffs);
    if (embed_impl(cand, dst) != y)
        throw domain_error("element does not lie in the requested subfield");
    return cand;
}

std::uint32_t subfield_degree(const FqElem& y, std::uint32_t base_m) {
    const FieldSpec& fs = y.field();
    std::uint32_t j_top = fs.m / base_m;
    for (std::uint32_t j = 1; j <= j_top; ++j) {
        if (j_top % j != 0) continue;
        if (in_subfield(y, base_m * j)) return j;
    }
    return j_top;
}

// ---------------------------------------------------------------------------
// roots over F_q

std::vector<std::pair<FqElem, int>> poly_roots_ff(const std::vector<FqElem>& coeffs) {
    bool all_zero = true;
    for (const auto& c : coeffs)
        if (!c.is_zero()) {
            all_zero = false;
            break;
        }
    if (coeffs.empty() || all_zero) throw domain_error("zero polynomial has no well-defined root set");
    const FieldSpec* fs = coeffs.front().field_ptr();

    std::vector<FqElem> cur = coeffs;
    while (!cur.empty() && cur.back().is_zero()) cur.pop_back();

    auto eval = [&](const std::vector<FqElem>& poly, const FqElem& x) {
        FqElem acc = fs->zero();
        for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
        return acc;
    };
    auto deflate = [&](std::vector<FqElem>& poly, const FqElem& r) {
        // synthetic division by (y - r); remainder is zero when r is a root
        std::size_t n = poly.size() - 1;
        std::vector<FqElem> quot(n, fs->zero());
        FqElem carry = poly[n];
        for (std::size_t i = n; i-- > 0;) {
            quot[i] = carry;
            carry = poly[i] + r * carry;
        }
        poly = quot;
    };

    std::vector<std::pair<FqElem, int>> roots;
    for (std::uint32_t v = 0; v < fs->q; ++v) {
        FqElem x(fs, v);
        if (!eval(cur, x).is_zero()) continue;
        int mult = 0;
        while (cur.size() > 1 && eval(cur, x).is_zero()) {
            deflate(cur, x);
            ++mult;
        }
        roots.emplace_back(x, mult);
        if (cur.size() <= 1) break;
    }
    return roots;
}

FqElem fq_parse(const std::string& text, const FieldPtr& fs) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw domain_error("empty field element");
    if (s.front() == '[') {
        if (s.back() != ']') throw domain_error("unterminated repr vector");
        std::vector<std::uint32_t> digits;
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) digits.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        return fs->from_repr(digits);
    }
    if (s.front() == 'g') {
        std::int64_t e = 1;
        if (s.size() > 1) {
            if (s[1] != '^') throw domain_error("malformed generator power: " + s);
            e = std::stoll(s.substr(2));
        }
        return fs->gen().pow(e);
    }
    return fs->from_int(std::stoll(s));
}

} // namespace sparsezeros
