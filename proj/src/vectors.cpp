#include "readspace/vectors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace readspace {

SparseVec SparseVec::unit(std::int64_t i) {
    SparseVec v;
    v.set(i, Rational(1));
    return v;
}

Rational SparseVec::get(std::int64_t i) const {
    const auto it = e_.find(i);
    return it == e_.end() ? Rational(0) : it->second;
}

void SparseVec::set(std::int64_t i, const Rational& v) {
    if (i < 1) throw PreconditionError("vector index must be >= 1");
    if (v == 0)
        e_.erase(i);
    else
        e_[i] = v;
}

std::string SparseVec::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [i, q] : e_) {
        if (!first) os << ", ";
        first = false;
        os << i << ": " << q.get_str();
    }
    os << "}";
    return os.str();
}

Rational dot(const SparseVec& x, const SparseVec& v) {
    // Iterate over the shorter support.
    const SparseVec& small = x.support_size() <= v.support_size() ? x : v;
    const SparseVec& big = x.support_size() <= v.support_size() ? v : x;
    Rational s(0);
    for (const auto& [i, q] : small) s += q * big.get(i);
    return s;
}

Rational sup_norm(const SparseVec& x) {
    Rational m(0);
    for (const auto& [i, q] : x) {
        Rational a = abs(q);
        if (a > m) m = a;
    }
    return m;
}

Rational l1_norm(const SparseVec& v) {
    Rational s(0);
    for (const auto& [i, q] : v) s += abs(q);
    return s;
}

SparseVec add(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    for (const auto& [i, q] : b) r.set(i, r.get(i) + q);
    return r;
}

SparseVec sub(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    for (const auto& [i, q] : b) r.set(i, r.get(i) - q);
    return r;
}

SparseVec neg(const SparseVec& a) {
    SparseVec r;
    for (const auto& [i, q] : a) r.set(i, -q);
    return r;
}

SparseVec scale(const Rational& c, const SparseVec& a) {
    SparseVec r;
    if (c == 0) return r;
    for (const auto& [i, q] : a) r.set(i, c * q);
    return r;
}

TailVec::TailVec(SparseVec head, Rational tail_const, std::int64_t horizon)
    : head_(std::move(head)), tail_(std::move(tail_const)), horizon_(horizon) {
    if (horizon_ < 0) throw PreconditionError("TailVec horizon must be >= 0");
    if (head_.max_support() > horizon_)
        throw PreconditionError("TailVec horizon must cover every override index");
}

Rational TailVec::get(std::int64_t i) const {
    if (i > horizon_) return tail_;
    return head_.get(i);
}

SparseVec TailVec::truncate(std::int64_t m) const {
    SparseVec r;
    for (const auto& [i, q] : head_) {
        if (i > m) break;
        r.set(i, q);
    }
    if (tail_ != 0) {
        for (std::int64_t i = horizon_ + 1; i <= m; ++i) r.set(i, tail_);
    }
    return r;
}

bool operator==(const TailVec& a, const TailVec& b) {
    if (a.tail_ != b.tail_) return false;
    const std::int64_t h = std::max(a.horizon_, b.horizon_);
    return a.truncate(h) == b.truncate(h);
}

std::string TailVec::str() const {
    std::ostringstream os;
    os << head_.str() << " tail " << tail_.get_str() << " beyond " << horizon_;
    return os.str();
}

Rational dot(const TailVec& x, const SparseVec& v) {
    Rational s(0);
    for (const auto& [i, q] : v) s += x.get(i) * q;
    return s;
}

Rational sup_norm(const TailVec& x) {
    Rational m = abs(x.tail_const());
    for (const auto& [i, q] : x.head()) {
        Rational a = abs(q);
        if (a > m) m = a;
    }
    return m;
}

TailVec add(const TailVec& a, const TailVec& b) {
    const std::int64_t h = std::max(a.horizon(), b.horizon());
    std::set<std::int64_t> idx;
    for (const auto& [i, q] : a.head()) idx.insert(i);
    for (const auto& [i, q] : b.head()) idx.insert(i);
    // Where exactly one tail has started, the sum differs from both tails.
    for (std::int64_t i = std::min(a.horizon(), b.horizon()) + 1; i <= h; ++i) idx.insert(i);
    SparseVec head;
    for (std::int64_t i : idx) head.set(i, a.get(i) + b.get(i));
    return TailVec(std::move(head), a.tail_const() + b.tail_const(), h);
}

TailVec scale(const Rational& c, const TailVec& a) {
    return TailVec(scale(c, a.head()), c * a.tail_const(), a.horizon());
}

} // namespace readspace
