#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "gxstplc/error.hpp"

namespace gxstplc::ff {

// Moduli are limited to q < 2^31 so that a product of two reduced values
// fits in 64 bits without wrapping.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);

// Least prime q >= n (2 for n < 2). Throws InvalidArgument when the result
// would exceed kMaxModulus.
std::uint64_t smallest_prime_at_least(std::uint64_t n);

// An element of F_q. Carries its modulus so that mixing elements of
// different fields is detected instead of silently producing garbage.
class Fq {
public:
    Fq() = default;

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Fq operator+(Fq rhs) const;
    Fq operator-(Fq rhs) const;
    Fq operator*(Fq rhs) const;
    Fq operator/(Fq rhs) const;
    Fq operator-() const;
    Fq& operator+=(Fq rhs) { return *this = *this + rhs; }
    Fq& operator-=(Fq rhs) { return *this = *this - rhs; }
    Fq& operator*=(Fq rhs) { return *this = *this * rhs; }

    Fq pow(std::uint64_t e) const;
    // Multiplicative inverse; throws SingularMatrix on zero.
    Fq inv() const;

    friend bool operator==(Fq a, Fq b) noexcept {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }

private:
    friend class PrimeField;
    Fq(std::uint64_t v, std::uint64_t q) : value_(v), modulus_(q) {}
    void check_same(Fq rhs) const;

    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fq x);

class PrimeField {
public:
    // Throws InvalidArgument if q is not a prime below kMaxModulus.
    explicit PrimeField(std::uint64_t q);

    std::uint64_t modulus() const noexcept { return q_; }

    Fq element(std::int64_t v) const;
    Fq from_canonical(std::uint64_t v) const; // v already in [0, q)
    Fq zero() const { return Fq(0, q_); }
    Fq one() const { return Fq(1 % q_, q_); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t q_;
};

// Dense row-major matrix over one prime field.
class FieldMatrix {
public:
    FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);
    static FieldMatrix identity(const PrimeField& field, std::size_t n);
    static FieldMatrix diagonal(const PrimeField& field, std::span<const Fq> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const PrimeField& field() const noexcept { return field_; }

    Fq& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    Fq at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    FieldMatrix operator*(const FieldMatrix& rhs) const;
    std::vector<Fq> operator*(std::span<const Fq> column) const;
    FieldMatrix operator-() const;

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Fq> entries_;
};

// Rank by Gaussian elimination, pivoting on the first nonzero entry in row order.
std::size_t mat_rank(const FieldMatrix& m);

// Solves a * x = b for square a. Throws SingularMatrix if a is not invertible.
std::vector<Fq> mat_solve(const FieldMatrix& a, std::span<const Fq> b);

FieldMatrix mat_inverse(const FieldMatrix& a);

// Entry (i, j) = nodes[j]^i for i in [0, height). Throws DuplicateNodes.
FieldMatrix vandermonde(std::span<const Fq> nodes, std::size_t height);

// Throws DuplicateNodes if any two nodes coincide.
void require_distinct(std::span<const Fq> nodes);

} // namespace gxstplc::ff
