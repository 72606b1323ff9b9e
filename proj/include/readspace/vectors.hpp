#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "readspace/rational.hpp"

namespace readspace {

// Finitely supported rational sequence indexed from 1. No zero entry is ever
// stored, so equality is structural.
class SparseVec {
  public:
    using Map = std::map<std::int64_t, Rational>;

    SparseVec() = default;

    static SparseVec unit(std::int64_t i); // e_i

    Rational get(std::int64_t i) const;
    void set(std::int64_t i, const Rational& v); // erases on v == 0

    bool is_zero() const { return e_.empty(); }
    std::size_t support_size() const { return e_.size(); }
    std::int64_t max_support() const { return e_.empty() ? 0 : e_.rbegin()->first; }

    Map::const_iterator begin() const { return e_.begin(); }
    Map::const_iterator end() const { return e_.end(); }

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a.e_ == b.e_); }

    std::string str() const;

  private:
    Map e_;
};

Rational dot(const SparseVec& x, const SparseVec& v);
Rational sup_norm(const SparseVec& x);
Rational l1_norm(const SparseVec& v);

SparseVec add(const SparseVec& a, const SparseVec& b);
SparseVec sub(const SparseVec& a, const SparseVec& b);
SparseVec neg(const SparseVec& a);
SparseVec scale(const Rational& c, const SparseVec& a);

// Finitely many overrides plus a constant value beyond the horizon; models
// an eventually-constant bounded sequence (the shape of bidual probes)
// exactly. Indices <= horizon without an override are zero.
class TailVec {
  public:
    TailVec() : tail_(0), horizon_(0) {}
    TailVec(SparseVec head, Rational tail_const, std::int64_t horizon);

    static TailVec constant(const Rational& c) { return TailVec(SparseVec(), c, 0); }
    static TailVec from_sparse(const SparseVec& v) { return TailVec(v, Rational(0), v.max_support()); }

    const SparseVec& head() const { return head_; }
    const Rational& tail_const() const { return tail_; }
    std::int64_t horizon() const { return horizon_; }

    Rational get(std::int64_t i) const;

    // First m coordinates as a sparse vector (the projection S_m).
    SparseVec truncate(std::int64_t m) const;

    bool is_zero() const { return head_.is_zero() && tail_ == 0; }

    friend bool operator==(const TailVec& a, const TailVec& b);
    friend bool operator!=(const TailVec& a, const TailVec& b) { return !(a == b); }

    std::string str() const;

  private:
    SparseVec head_;
    Rational tail_;
    std::int64_t horizon_;
};

Rational dot(const TailVec& x, const SparseVec& v);
Rational sup_norm(const TailVec& x);

TailVec add(const TailVec& a, const TailVec& b);
TailVec scale(const Rational& c, const TailVec& a);

} // namespace readspace
