#include "sseq/gf.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sseq {

Scalar Scalar::inv() const {
    switch (v) {
        case 1: return Scalar(1);
        case 2: return Scalar(3);  // g * (g+1) = g^2+g = 1
        case 3: return Scalar(2);
        default: throw std::domain_error("inverse of zero");
    }
}

std::string Scalar::str() const {
    switch (v) {
        case 0: return "0";
        case 1: return "1";
        case 2: return "z";
        default: return "z+1";
    }
}

namespace {
inline std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
}  // namespace

Vec::Vec(Field f, std::size_t n)
    : field_(f), n_(n), words_(word_count(n)), p0_(words_, 0), p1_(words_, 0) {}

Scalar Vec::get(std::size_t i) const {
    assert(i < n_);
    uint8_t c0 = (p0_[i / 64] >> (i % 64)) & 1;
    uint8_t c1 = (p1_[i / 64] >> (i % 64)) & 1;
    return Scalar(static_cast<uint8_t>(c0 | (c1 << 1)));
}

void Vec::set(std::size_t i, Scalar s) {
    assert(i < n_);
    assert(field_ == Field::GF4 || s.v < 2);
    uint64_t mask = uint64_t(1) << (i % 64);
    p0_[i / 64] = (p0_[i / 64] & ~mask) | ((s.v & 1) ? mask : 0);
    p1_[i / 64] = (p1_[i / 64] & ~mask) | ((s.v >> 1) ? mask : 0);
}

bool Vec::is_zero() const {
    for (std::size_t w = 0; w < words_; ++w)
        if (p0_[w] | p1_[w]) return false;
    return true;
}

void Vec::add_scaled(const Vec& other, Scalar s) {
    assert(other.n_ == n_ && other.field_ == field_);
    if (s.is_zero()) return;
    uint64_t s0 = (s.v & 1) ? ~uint64_t(0) : 0;
    uint64_t s1 = (s.v >> 1) ? ~uint64_t(0) : 0;
    for (std::size_t w = 0; w < words_; ++w) {
        uint64_t a0 = other.p0_[w], a1 = other.p1_[w];
        uint64_t r0 = (s0 & a0) ^ (s1 & a1);
        uint64_t r1 = (s0 & a1) ^ (s1 & a0) ^ (s1 & a1);
        p0_[w] ^= r0;
        p1_[w] ^= r1;
    }
}

bool operator==(const Vec& a, const Vec& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.p0_ == b.p0_ && a.p1_ == b.p1_;
}

std::vector<std::size_t> Vec::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (!get(i).is_zero()) out.push_back(i);
    return out;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), words_(word_count(cols)),
      p0_(rows * words_, 0), p1_(rows * words_, 0) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one());
    return m;
}

Scalar Matrix::get(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    std::size_t idx = r * words_ + c / 64;
    uint8_t c0 = (p0_[idx] >> (c % 64)) & 1;
    uint8_t c1 = (p1_[idx] >> (c % 64)) & 1;
    return Scalar(static_cast<uint8_t>(c0 | (c1 << 1)));
}

void Matrix::set(std::size_t r, std::size_t c, Scalar s) {
    assert(r < rows_ && c < cols_);
    assert(field_ == Field::GF4 || s.v < 2);
    std::size_t idx = r * words_ + c / 64;
    uint64_t mask = uint64_t(1) << (c % 64);
    p0_[idx] = (p0_[idx] & ~mask) | ((s.v & 1) ? mask : 0);
    p1_[idx] = (p1_[idx] & ~mask) | ((s.v >> 1) ? mask : 0);
}

Vec Matrix::row(std::size_t r) const {
    Vec v(field_, cols_);
    for (std::size_t w = 0; w < words_; ++w) {
        v.p0_[w] = p0_[r * words_ + w];
        v.p1_[w] = p1_[r * words_ + w];
    }
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    assert(v.size() == cols_);
    for (std::size_t w = 0; w < words_; ++w) {
        p0_[r * words_ + w] = v.p0_[w];
        p1_[r * words_ + w] = v.p1_[w];
    }
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            Scalar s = get(r, c);
            if (!s.is_zero()) t.set(c, r, s);
        }
    return t;
}

Vec Matrix::apply(const Vec& x) const {
    assert(x.size() == cols_);
    Vec out(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar acc = Scalar::zero();
        // word-wise dot product
        Vec rv = row(r);
        for (std::size_t i = 0; i < cols_; ++i) {
            Scalar a = rv.get(i);
            if (!a.is_zero()) acc += a * x.get(i);
        }
        out.set(r, acc);
    }
    return out;
}

Matrix Matrix::mul(const Matrix& other) const {
    assert(cols_ == other.rows_);
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Vec acc(field_, other.cols_);
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar a = get(r, k);
            if (!a.is_zero()) acc.add_scaled(other.row(k), a);
        }
        out.set_row(r, acc);
    }
    return out;
}

bool Matrix::is_zero() const {
    for (std::size_t i = 0; i < p0_.size(); ++i)
        if (p0_[i] | p1_[i]) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.p0_ == b.p0_ && a.p1_ == b.p1_;
}

void Matrix::row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w) {
        std::swap(p0_[a * words_ + w], p0_[b * words_ + w]);
        std::swap(p1_[a * words_ + w], p1_[b * words_ + w]);
    }
}

void Matrix::row_scale(std::size_t r, Scalar s) {
    uint64_t s0 = (s.v & 1) ? ~uint64_t(0) : 0;
    uint64_t s1 = (s.v >> 1) ? ~uint64_t(0) : 0;
    for (std::size_t w = 0; w < words_; ++w) {
        uint64_t a0 = p0_[r * words_ + w], a1 = p1_[r * words_ + w];
        p0_[r * words_ + w] = (s0 & a0) ^ (s1 & a1);
        p1_[r * words_ + w] = (s0 & a1) ^ (s1 & a0) ^ (s1 & a1);
    }
}

void Matrix::row_axpy(std::size_t dst, std::size_t src, Scalar s) {
    if (s.is_zero()) return;
    uint64_t s0 = (s.v & 1) ? ~uint64_t(0) : 0;
    uint64_t s1 = (s.v >> 1) ? ~uint64_t(0) : 0;
    for (std::size_t w = 0; w < words_; ++w) {
        uint64_t a0 = p0_[src * words_ + w], a1 = p1_[src * words_ + w];
        p0_[dst * words_ + w] ^= (s0 & a0) ^ (s1 & a1);
        p1_[dst * words_ + w] ^= (s0 & a1) ^ (s1 & a0) ^ (s1 & a1);
    }
}

RowReduceResult row_reduce(const Matrix& m) {
    RowReduceResult rr;
    rr.reduced = m;
    Matrix& a = rr.reduced;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < a.cols() && next_row < a.rows(); ++c) {
        std::size_t pr = a.rows();
        for (std::size_t r = next_row; r < a.rows(); ++r)
            if (!a.get(r, c).is_zero()) { pr = r; break; }
        if (pr == a.rows()) continue;
        a.row_swap(next_row, pr);
        Scalar p = a.get(next_row, c);
        if (p != Scalar::one()) a.row_scale(next_row, p.inv());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == next_row) continue;
            Scalar s = a.get(r, c);
            if (!s.is_zero()) a.row_axpy(r, next_row, s);
        }
        rr.pivots.push_back(c);
        ++next_row;
    }
    rr.rank = rr.pivots.size();
    return rr;
}

std::vector<Vec> kernel_basis(const RowReduceResult& rr, Field f, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(f, cols);
        v.set(fc, Scalar::one());
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            Scalar s = rr.reduced.get(i, fc);
            if (!s.is_zero()) v.set(rr.pivots[i], s);  // char 2: -s = s
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    return kernel_basis(row_reduce(m), m.field(), m.cols());
}

std::optional<Vec> solve_particular(const Matrix& m, const Vec& b) {
    assert(b.size() == m.rows());
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vec rv = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Scalar s = rv.get(c);
            if (!s.is_zero()) aug.set(r, c, s);
        }
        aug.set(r, m.cols(), b.get(r));
    }
    RowReduceResult rr = row_reduce(aug);
    for (std::size_t p : rr.pivots)
        if (p == m.cols()) return std::nullopt;  // inconsistent
    Vec x(m.field(), m.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        x.set(rr.pivots[i], rr.reduced.get(i, m.cols()));
    return x;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank; }

bool IncrementalSpan::add(Vec v) {
    assert(v.size() == n_ && v.field() == field_);
    // reduce in increasing pivot order, so earlier pivots stay eliminated
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    for (std::size_t i : order) {
        Scalar c = v.get(pivots_[i]);
        if (!c.is_zero()) v.add_scaled(rows_[i], c);  // char 2: subtraction = addition
    }
    if (v.is_zero()) return false;
    std::size_t p = 0;
    while (v.get(p).is_zero()) ++p;
    Scalar lead = v.get(p);
    if (lead != Scalar::one()) {
        Vec scaled(field_, n_);
        scaled.add_scaled(v, lead.inv());
        v = scaled;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

}  // namespace sseq
