#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rado/numeric.hpp"

namespace rado {

/// Coefficient ring for column-condition checks and membership queries.
struct Ring {
    enum class Tag { Integers, Rationals, ModN };
    Tag tag = Tag::Integers;
    Int modulus = 0;  // ModN only, >= 2

    static Ring integers() { return {Tag::Integers, 0}; }
    static Ring rationals() { return {Tag::Rationals, 0}; }
    static Ring mod(Int n);

    bool operator==(const Ring& o) const { return tag == o.tag && modulus == o.modulus; }
    std::string name() const;  // "Z", "Q", "Z<n>"
};

/// Dense k x m matrix over Z, row-major, k >= 1, m >= k.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    explicit IntMatrix(const std::vector<std::vector<Int>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// U*A*V = (diag(D) | 0) with unimodular U, V and d_1 | d_2 | ... | d_k, d_i >= 0.
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix v;
    std::vector<Int> d;
};

/// Exact determinant (square input), via fraction-free elimination.
Int determinant(const IntMatrix& a);

/// gcd of all k x k minors; 0 iff rank < k.
Int k_determinantal(const IntMatrix& a);

SnfDecomposition smith_normal_form(const IntMatrix& a);

/// Rational rank. Rejects ModN rings.
std::size_t rank(const IntMatrix& a, const Ring& ring);

/// Coefficients lambda in `ring` with sum lambda_j * gens[j] = v, if any.
/// Entries are integer-valued (denominator 1) unless ring is Q; for ModN they
/// are canonical residues in [0, n).
std::optional<std::vector<Rat>> module_membership(const std::vector<Int>& v,
                                                  const std::vector<std::vector<Int>>& gens,
                                                  const Ring& ring);

/// Substitutes a membership certificate back into the defining equation.
bool verify_membership(const std::vector<Int>& v, const std::vector<std::vector<Int>>& gens,
                       const Ring& ring, const std::vector<Rat>& lambda);

} // namespace rado
