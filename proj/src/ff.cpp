#include "gxstplc/ff.hpp"

#include <string>
#include <unordered_set>
#include <utility>

namespace gxstplc::ff {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t smallest_prime_at_least(std::uint64_t n) {
    if (n < 2) return 2;
    for (std::uint64_t q = n; q <= kMaxModulus; ++q) {
        if (is_prime(q)) return q;
    }
    throw InvalidArgument("no prime modulus below 2^31 is >= " + std::to_string(n));
}

void Fq::check_same(Fq rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw FieldMismatch("elements of F_" + std::to_string(modulus_) + " and F_" +
                            std::to_string(rhs.modulus_) + " mixed");
    }
}

Fq Fq::operator+(Fq rhs) const {
    check_same(rhs);
    std::uint64_t s = value_ + rhs.value_;
    return Fq(s >= modulus_ ? s - modulus_ : s, modulus_);
}

Fq Fq::operator-(Fq rhs) const {
    check_same(rhs);
    return Fq(value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_ - rhs.value_,
              modulus_);
}

Fq Fq::operator*(Fq rhs) const {
    check_same(rhs);
    return Fq(value_ * rhs.value_ % modulus_, modulus_);
}

Fq Fq::operator/(Fq rhs) const { return *this * rhs.inv(); }

Fq Fq::operator-() const { return Fq(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

Fq Fq::pow(std::uint64_t e) const {
    Fq base = *this;
    Fq acc(1 % modulus_, modulus_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Fq Fq::inv() const {
    if (value_ == 0) throw SingularMatrix("inverse of zero in F_" + std::to_string(modulus_));
    // Fermat: a^(q-2) = a^-1 for prime q.
    return pow(modulus_ - 2);
}

std::ostream& operator<<(std::ostream& os, Fq x) { return os << x.value(); }

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
    if (q > kMaxModulus) {
        throw InvalidArgument("modulus " + std::to_string(q) + " exceeds 2^31 - 1");
    }
    if (!is_prime(q)) throw InvalidArgument("modulus " + std::to_string(q) + " is not prime");
}

Fq PrimeField::element(std::int64_t v) const {
    const auto q = static_cast<std::int64_t>(q_);
    std::int64_t r = v % q;
    if (r < 0) r += q;
    return Fq(static_cast<std::uint64_t>(r), q_);
}

Fq PrimeField::from_canonical(std::uint64_t v) const {
    if (v >= q_) throw InvalidArgument("value out of range for F_" + std::to_string(q_));
    return Fq(v, q_);
}

FieldMatrix::FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

FieldMatrix FieldMatrix::identity(const PrimeField& field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

FieldMatrix FieldMatrix::diagonal(const PrimeField& field, std::span<const Fq> diag) {
    FieldMatrix m(field, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product with incompatible shapes");
    if (!(field_ == rhs.field_)) throw FieldMismatch("matrix product across fields");
    FieldMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Fq a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    }
    return out;
}

std::vector<Fq> FieldMatrix::operator*(std::span<const Fq> column) const {
    if (column.size() != cols_) throw DimensionMismatch("matrix-vector product length");
    std::vector<Fq> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * column[j];
    }
    return out;
}

FieldMatrix FieldMatrix::operator-() const {
    FieldMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

namespace {

// Reduces `m` (with `aug` carried along) to row echelon form and returns the
// pivot columns. First nonzero entry in row order is the pivot.
std::vector<std::size_t> eliminate(FieldMatrix& m, FieldMatrix* aug) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
            if (aug) {
                for (std::size_t c = 0; c < aug->cols(); ++c) {
                    std::swap(aug->at(piv, c), aug->at(row, c));
                }
            }
        }
        const Fq inv = m.at(row, col).inv();
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(row, c) *= inv;
        if (aug) {
            for (std::size_t c = 0; c < aug->cols(); ++c) aug->at(row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const Fq factor = m.at(r, col);
            if (factor.is_zero()) continue;
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
            if (aug) {
                for (std::size_t c = 0; c < aug->cols(); ++c) {
                    aug->at(r, c) -= factor * aug->at(row, c);
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t mat_rank(const FieldMatrix& m) {
    FieldMatrix work = m;
    return eliminate(work, nullptr).size();
}

std::vector<Fq> mat_solve(const FieldMatrix& a, std::span<const Fq> b) {
    if (a.rows() != a.cols()) throw DimensionMismatch("mat_solve requires a square matrix");
    if (b.size() != a.rows()) throw DimensionMismatch("mat_solve right-hand side length");
    FieldMatrix work = a;
    FieldMatrix rhs(a.field(), b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
    if (eliminate(work, &rhs).size() < a.rows()) {
        throw SingularMatrix("matrix of dimension " + std::to_string(a.rows()) +
                             " is not invertible");
    }
    std::vector<Fq> x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs.at(i, 0);
    return x;
}

FieldMatrix mat_inverse(const FieldMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("mat_inverse requires a square matrix");
    FieldMatrix work = a;
    FieldMatrix inv = FieldMatrix::identity(a.field(), a.rows());
    if (eliminate(work, &inv).size() < a.rows()) {
        throw SingularMatrix("matrix of dimension " + std::to_string(a.rows()) +
                             " is not invertible");
    }
    return inv;
}

void require_distinct(std::span<const Fq> nodes) {
    std::unordered_set<std::uint64_t> seen;
    for (const Fq& x : nodes) {
        if (!seen.insert(x.value()).second) {
            throw DuplicateNodes("node " + std::to_string(x.value()) + " appears twice");
        }
    }
}

FieldMatrix vandermonde(std::span<const Fq> nodes, std::size_t height) {
    if (nodes.empty()) throw InvalidArgument("vandermonde needs at least one node");
    require_distinct(nodes);
    PrimeField field(nodes.front().modulus());
    FieldMatrix m(field, height, nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        Fq p = field.one();
        for (std::size_t i = 0; i < height; ++i) {
            m.at(i, j) = p;
            p *= nodes[j];
        }
    }
    return m;
}

} // namespace gxstplc::ff
