#pragma once

#include <vector>

#include "readspace/vectors.hpp"

namespace readspace {

// Frozen, documented codings. Everything here is a bijection so that locate()
// can name the exact j-th occurrence of a vector in the enumeration.
//
//  * pair/unpair: Cantor pairing N x N -> N, monotone in each argument.
//  * rational_code: N <-> Q via the Calkin-Wilf tree extended by sign and
//    zero: 0 <-> 0, 2k-1 <-> +cw(k), 2k <-> -cw(k), where cw(k) is the k-th
//    positive rational in breadth-first Calkin-Wilf order (cw(1) = 1/1,
//    cw(2) = 1/2, cw(3) = 2/1, ...). Walks are run-length compressed, so
//    indices with millions of bits stay cheap.
//  * vector_code: N <-> c00(Q). 0 is the zero vector; c >= 1 unpairs into
//    (prefix-list code, last-coordinate code - 1) where the prefix list holds
//    the rational codes of coordinates 1..L-1 (cons-encoded) and the last
//    coordinate is nonzero. Positional, no duplicate codes.

BigInt pair(const BigInt& x, const BigInt& y);
void unpair(const BigInt& z, BigInt& x, BigInt& y);

Rational calkin_wilf(const BigInt& k);        // k >= 1
BigInt calkin_wilf_index(const Rational& q);  // q > 0

Rational rational_decode(const BigInt& code);
BigInt rational_code(const Rational& q);

SparseVec vector_decode(const BigInt& code);
BigInt vector_code(const SparseVec& v);

// Enumeration of c00(Q) listing every element infinitely many times. The
// canonical scheme decodes index n via unpair(n - 1) = (occurrence - 1,
// vector code); a front-loaded scheme prepends a finite list and then either
// continues canonically or stops (a finite lab instance, not a full
// construction).
class EnumerationScheme {
  public:
    EnumerationScheme() = default; // canonical

    static EnumerationScheme canonical() { return EnumerationScheme(); }
    static EnumerationScheme front_loaded(std::vector<SparseVec> prefix, bool continue_canonical = true);

    bool is_canonical() const { return prefix_.empty() && continue_; }
    bool finite() const { return !continue_; }
    std::size_t prefix_size() const { return prefix_.size(); }
    const std::vector<SparseVec>& prefix() const { return prefix_; }

    // n >= 1; throws RangeError past the end of a finite scheme.
    SparseVec enumerate(const BigInt& n) const;

    // Index of the occurrence-th appearance of u (occurrence >= 1). Exactly
    // occurrence-1 smaller indices map to u.
    BigInt locate(const SparseVec& u, const BigInt& occurrence) const;

  private:
    std::vector<SparseVec> prefix_;
    bool continue_ = true;
};

} // namespace readspace
