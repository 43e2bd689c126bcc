#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "rado/intmat.hpp"

namespace rado {

/// Witness that a matrix satisfies the columns condition over a ring:
/// a column ordering, block breakpoints k_1 < ... < k_t = m (1-based prefix
/// lengths), and for each block i >= 2 the coefficients expressing its sum
/// over the columns of the earlier blocks.
struct ColumnsCertificate {
    Ring ring;
    std::vector<std::size_t> order;        // permutation of [0, m)
    std::vector<std::size_t> breakpoints;  // strictly increasing, last == m
    std::vector<std::vector<Rat>> lambda;  // lambda[b-1] belongs to block b, size k_b prefix

    std::size_t num_blocks() const { return breakpoints.size(); }
    /// Column indices of block b (0-based).
    std::vector<std::size_t> block(std::size_t b) const;
};

/// Re-checks every certificate equation by substitution in the ring.
bool verify_certificate(const IntMatrix& a, const ColumnsCertificate& cert);

constexpr std::size_t kColumnsSearchBound = 9;

/// Exhaustive ordered-set-partition search; the first certificate in the
/// deterministic enumeration order, or absent (absence proves failure).
std::optional<ColumnsCertificate> check_columns_condition(const IntMatrix& a, const Ring& ring,
                                                          std::size_t search_bound = kColumnsSearchBound);

/// Visits certificates in the same deterministic order until the visitor
/// returns false. Used where the lexicographically first certificate is not
/// the right one to keep.
void for_each_certificate(const IntMatrix& a, const Ring& ring, std::size_t search_bound,
                          const std::function<bool(const ColumnsCertificate&)>& visit);

/// True iff the columns sum to zero over Z.
bool strong_column_condition(const IntMatrix& a);

struct LiftResult {
    IntMatrix matrix;          // A'' == A (mod n), certificate equations exact over Z
    ColumnsCertificate cert;   // same order/breakpoints, integer coefficients
};

/// Rewrites a ModN certificate into an exact integer one by adjusting one
/// designated column per block (the lowest column index in the block) by the
/// block's integer defect, which is divisible by n.
LiftResult lift_certificate_to_Z(const IntMatrix& a, const ColumnsCertificate& cert);

struct ReduceReport {
    IntMatrix input;
    Int n;
    Int dk_input;
    bool identity_shortcut = false;
    ColumnsCertificate cert;               // the ModN certificate that was used
    std::optional<IntMatrix> lifted;       // A'' when the full path ran
    std::vector<Int> smith_d;              // invariant factors of A''
    IntMatrix result;                      // A'
    Int dk_result;
    ColumnsCertificate cert_on_result;     // same structure, valid for A' over ModN
};

/// Reduction to d_k(A') = 1: lift the ModN certificate to Z,
/// take U * A'' from the Smith decomposition and divide row i by d_i. Tries
/// certificates in enumeration order until one lifts without losing rank.
ReduceReport reduce_matrix(const IntMatrix& a, const Int& n,
                           std::size_t search_bound = kColumnsSearchBound);

} // namespace rado
