#pragma once

#include <utility>
#include <vector>

#include "recurkit/matrix.hpp"
#include "recurkit/polynomial.hpp"
#include "recurkit/scalar.hpp"

namespace recurkit {

// Inclusive index window [lo, hi] over Z.
struct IndexRange {
    long long lo = 0;
    long long hi = 0;
};

// Constant-coefficient linear recurrence u(a+d) = c_1 u(a+d-1) + ... + c_d u(a)
// with c_d != 0, so the relation also steps backward. Order 0 (empty c) is
// the degenerate annihilator of the zero sequence only.
class LinearRecurrence {
public:
    LinearRecurrence() = default;
    explicit LinearRecurrence(std::vector<ExactScalar> c);

    int order() const { return static_cast<int>(c_.size()); }
    const std::vector<ExactScalar>& c() const { return c_; }

    // T^d - c_1 T^{d-1} - ... - c_d; the order-0 recurrence has char poly 1.
    Polynomial char_poly() const;
    // Inverse transcription; p must be monic with p(0) != 0 (or constant 1).
    static LinearRecurrence from_char_poly(const Polynomial& p);

    bool operator==(const LinearRecurrence& o) const { return c_ == o.c_; }

private:
    std::vector<ExactScalar> c_;
};

// A recurrence plus the initial values u(0..d-1); defined on all of Z.
class RecurrentSequence {
public:
    RecurrentSequence() = default;
    RecurrentSequence(LinearRecurrence rec, std::vector<ExactScalar> initial);

    const LinearRecurrence& rec() const { return rec_; }
    const std::vector<ExactScalar>& initial() const { return initial_; }
    int order() const { return rec_.order(); }

    bool operator==(const RecurrentSequence& o) const {
        return rec_ == o.rec_ && initial_ == o.initial_;
    }

private:
    LinearRecurrence rec_;
    std::vector<ExactScalar> initial_;
};

// u(a) for any integer a; backward steps use
// u(a) = (u(a+d) - c_1 u(a+d-1) - ... - c_{d-1} u(a+1)) / c_d.
ExactScalar eval_at(const RecurrentSequence& seq, long long a);

// u(lo..hi) inclusive, by one linear sweep in each direction.
std::vector<ExactScalar> eval_range(const RecurrentSequence& seq, long long lo, long long hi);

// Companion matrix of the recurrence (d x d, characteristic polynomial
// equal to char_poly()).
ExactMatrix companion_matrix(const LinearRecurrence& rec);

// Independent second evaluator: binary powering of the companion matrix.
// Requires a >= 0.
ExactScalar companion_eval(const RecurrentSequence& seq, long long a);

// The unique minimal-order recurrence satisfied by seq and its
// characteristic polynomial (which divides char_poly(seq.rec) exactly).
// The zero sequence yields (order-0 recurrence, polynomial 1).
std::pair<LinearRecurrence, Polynomial> minimal_recurrence(const RecurrentSequence& seq);

// True iff the candidate relation holds at every anchor index a in the
// window: u(a + r) = sum_i c_i u(a + r - i), r = candidate order.
bool satisfies(const RecurrentSequence& seq, const LinearRecurrence& candidate,
               IndexRange window);

}  // namespace recurkit
