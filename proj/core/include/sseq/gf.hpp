#pragma once

// Exact linear algebra over GF(2) and GF(4).
//
// GF(4) is GF(2)[g]/(g^2+g+1); an element is stored in two bits c0|c1<<1
// meaning c0 + c1*g.  The primitive cube root g prints as "z" (zeta).
// Matrices keep two bit-planes per row so row operations run word-wise;
// for GF(2) the high plane stays zero and the same kernels apply.

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sseq {

enum class Field : uint8_t { GF2, GF4 };

struct Scalar {
    uint8_t v = 0;  // 0..3; over GF2 only 0,1 are legal

    constexpr Scalar() = default;
    constexpr explicit Scalar(uint8_t x) : v(x) {}
    static constexpr Scalar zero() { return Scalar(0); }
    static constexpr Scalar one() { return Scalar(1); }
    static constexpr Scalar g() { return Scalar(2); }  // generator of GF4*

    constexpr bool is_zero() const { return v == 0; }
    friend constexpr bool operator==(Scalar a, Scalar b) { return a.v == b.v; }
    friend constexpr bool operator!=(Scalar a, Scalar b) { return a.v != b.v; }

    friend constexpr Scalar operator+(Scalar a, Scalar b) { return Scalar(a.v ^ b.v); }
    Scalar& operator+=(Scalar b) { v ^= b.v; return *this; }
    friend constexpr Scalar operator*(Scalar a, Scalar b) {
        // (a0+a1 g)(b0+b1 g) = (a0b0+a1b1) + (a0b1+a1b0+a1b1) g
        uint8_t a0 = a.v & 1, a1 = a.v >> 1, b0 = b.v & 1, b1 = b.v >> 1;
        uint8_t c0 = (a0 & b0) ^ (a1 & b1);
        uint8_t c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        return Scalar(static_cast<uint8_t>(c0 | (c1 << 1)));
    }
    Scalar inv() const;          // asserts nonzero
    std::string str() const;     // "0","1","z","z+1"
};

// Bit-packed vector over GF2/GF4.
class Vec {
public:
    Vec() = default;
    Vec(Field f, std::size_t n);
    Field field() const { return field_; }
    std::size_t size() const { return n_; }
    Scalar get(std::size_t i) const;
    void set(std::size_t i, Scalar s);
    bool is_zero() const;
    void add_scaled(const Vec& other, Scalar s);  // *this += s*other
    friend bool operator==(const Vec& a, const Vec& b);
    std::vector<std::size_t> support() const;

private:
    friend class Matrix;
    Field field_ = Field::GF2;
    std::size_t n_ = 0, words_ = 0;
    std::vector<uint64_t> p0_, p1_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix identity(Field f, std::size_t n);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Scalar s);

    Vec row(std::size_t r) const;
    void set_row(std::size_t r, const Vec& v);
    Matrix transpose() const;
    Vec apply(const Vec& x) const;        // m * x  (x indexed by columns)
    Matrix mul(const Matrix& other) const;
    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b);

    void row_swap(std::size_t a, std::size_t b);
    void row_scale(std::size_t r, Scalar s);
    void row_axpy(std::size_t dst, std::size_t src, Scalar s);  // row[dst] += s*row[src]

private:
    Field field_ = Field::GF2;
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> p0_, p1_;
};

struct RowReduceResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
    Matrix reduced;                   // reduced row-echelon form
};

// Deterministic reduced row-echelon form (topmost nonzero entry chosen as pivot).
RowReduceResult row_reduce(const Matrix& m);

// Canonical kernel basis read off the RREF: free columns get unit values in
// ascending free-column order.
std::vector<Vec> kernel_basis(const Matrix& m);
std::vector<Vec> kernel_basis(const RowReduceResult& rr, Field f, std::size_t cols);

// Canonical particular solution of m*x = b (free variables zero), if any.
std::optional<Vec> solve_particular(const Matrix& m, const Vec& b);

std::size_t rank(const Matrix& m);

// Incrementally maintained row space; add() reduces against the stored rows
// and keeps the vector only when it enlarges the span.
class IncrementalSpan {
public:
    explicit IncrementalSpan(Field f, std::size_t n) : field_(f), n_(n) {}
    bool add(Vec v);  // true if the span grew
    std::size_t dim() const { return rows_.size(); }

private:
    Field field_;
    std::size_t n_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace sseq
