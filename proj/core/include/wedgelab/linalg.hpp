#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wedgelab/rational.hpp"

namespace wedgelab {

/// Arithmetic in F_q for a prime q < 2^31.
struct PrimeField {
    std::uint32_t q;

    explicit PrimeField(std::uint32_t q) : q(q) {
        if (q < 2) throw std::invalid_argument("field size must be a prime >= 2");
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= q ? s - q : s);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q - a; }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % q, base = a % q;
        while (e) {
            if (e & 1) r = r * base % q;
            base = base * base % q;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("division by zero in prime field");
        return pow(a, q - 2);
    }
};

/// Row-echelon rank over F_q; destroys its copy of the matrix.
inline std::size_t rank_mod(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& field) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint32_t inv = field.inv(rows[rank][col]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            const std::uint32_t factor = field.mul(rows[r][col], inv);
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = field.add(rows[r][c], field.neg(field.mul(factor, rows[rank][c])));
        }
        ++rank;
    }
    return rank;
}

/// Exact determinant of a square rational matrix by fraction-preserving
/// Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> rows) {
    const std::size_t n = rows.size();
    for (auto& row : rows)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && rows[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(rows[pivot], rows[col]);
            det = -det;
        }
        det *= rows[col][col];
        const Rational inv = 1 / rows[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[col][c];
        }
    }
    return det;
}

}  // namespace wedgelab
