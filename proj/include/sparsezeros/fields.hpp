#ifndef SPARSEZEROS_FIELDS_HPP
#define SPARSEZEROS_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sparsezeros/errors.hpp"

namespace sparsezeros {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Element of a finite field F_{p^m}.  The value is the coefficient vector
/// of the residue class, packed base p (c0 least significant digit).
class FqElem {
public:
    FqElem() : fs_(nullptr), v_(0) {}
    FqElem(const FieldSpec* fs, std::uint32_t v) : fs_(fs), v_(v) {}

    const FieldSpec& field() const { return *fs_; }
    const FieldSpec* field_ptr() const { return fs_; }
    std::uint32_t packed() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    std::vector<std::uint32_t> repr() const; // length-m coefficient vector over F_p

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator/(const FqElem& o) const;
    FqElem operator-() const;
    FqElem inv() const;
    FqElem pow(std::int64_t n) const;

    friend bool operator==(const FqElem& a, const FqElem& b) { return a.v_ == b.v_ && a.fs_ == b.fs_; }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    std::string str() const; // "0", "1", "g^i", or "[c0,...,c_{m-1}]"

private:
    const FieldSpec* fs_;
    std::uint32_t v_;
};

/// The finite field F_{p^m}, with its canonical modulus and arithmetic
/// tables.  Immutable after construction; obtain instances through fq_make
/// so that each (p, m) pair is represented by a single shared object.
class FieldSpec {
public:
    std::uint32_t p;                    // characteristic, prime
    std::uint32_t m;                    // extension degree over F_p
    std::uint32_t q;                    // p^m
    std::vector<std::uint32_t> modulus; // monic, degree m, coefficients low-first

    FqElem zero() const { return FqElem(this, 0); }
    FqElem one() const { return FqElem(this, 1); }
    /// Canonical generator: the residue class of x for m >= 2, else 1.
    FqElem gen() const { return FqElem(this, m >= 2 ? p : 1); }
    FqElem elem(std::uint32_t packed) const;
    /// Image of the integer n (reduced mod p) in the prime subfield.
    FqElem from_int(std::int64_t n) const;
    FqElem from_repr(const std::vector<std::uint32_t>& coeffs) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::int64_t n) const;

    /// All field elements, packed order 0..q-1.
    std::vector<FqElem> elements() const;

    ~FieldSpec();

private:
    FieldSpec() = default;
    friend FieldPtr fq_make(std::uint32_t p, std::uint32_t m);

    void build_tables();
    // discrete-log tables over a primitive element, built when q fits
    bool has_tables_ = false;
    std::vector<std::uint32_t> exp_, log_;
    std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;
};

/// Largest field size fq_make will construct (exhaustive routines iterate
/// over all q elements).
inline constexpr std::uint64_t kFieldCap = std::uint64_t(1) << 20;

/// Canonical F_{p^m}: the modulus is the lexicographically smallest monic
/// irreducible of degree m over F_p, coefficients compared low-degree-first.
FieldPtr fq_make(std::uint32_t p, std::uint32_t m);

/// a^(p^i), i taken modulo m.
FqElem frobenius(const FqElem& a, std::int64_t i);

/// Image of a under the fixed embedding F_{p^a} -> F_{p^b}; requires a | b.
FqElem embed(const FqElem& a, const FieldPtr& target);

/// Whether y lies in the image of the canonical subfield F_{p^sub_m}.
bool in_subfield(const FqElem& y, std::uint32_t sub_m);

/// Preimage of y under embed(. , y.field); requires in_subfield.
FqElem project(const FqElem& y, const FieldPtr& sub);

/// Degree over F_{p^base_m} of the smallest subfield containing y
/// (base_m | m assumed).
std::uint32_t subfield_degree(const FqElem& y, std::uint32_t base_m);

/// All roots in the coefficient field, with multiplicities, by exhaustive
/// evaluation and deflation.  coeffs is low-first and must not be all zero.
std::vector<std::pair<FqElem, int>> poly_roots_ff(const std::vector<FqElem>& coeffs);

/// Parse "0", "7", "g^3" or "[c0,c1,...]" as an element of fs.
FqElem fq_parse(const std::string& text, const FieldPtr& fs);

} // namespace sparsezeros

#endif
