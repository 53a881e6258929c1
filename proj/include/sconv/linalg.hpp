#pragma once

// Exact rational linear algebra. Everything here is decided without rounding;
// the rest of the library relies on that to emit replayable certificates.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sconv {

/// Arbitrary-precision rational in canonical form (gcd(p, q) = 1, q > 0).
using Rat = mpq_class;

/// Parses "p/q", "p", "+p/q" or "-p/q". Throws ParseError on malformed input
/// or a zero denominator. The result is canonicalized.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

class RatVec {
public:
    RatVec() = default;
    explicit RatVec(std::size_t dim) : coords_(dim) {}
    explicit RatVec(std::vector<Rat> coords) : coords_(std::move(coords)) {}
    RatVec(std::initializer_list<Rat> coords) : coords_(coords) {}

    /// Convenience for tests and literals: integer coordinates.
    static RatVec from_ints(std::initializer_list<long> coords);
    static RatVec unit(std::size_t dim, std::size_t axis);

    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }

    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    Rat& operator[](std::size_t i) { return coords_[i]; }

    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    const std::vector<Rat>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    std::vector<double> to_doubles() const;

    RatVec& operator+=(const RatVec& other);
    RatVec& operator-=(const RatVec& other);
    RatVec& operator*=(const Rat& s);

    friend bool operator==(const RatVec& a, const RatVec& b) { return a.coords_ == b.coords_; }

private:
    std::vector<Rat> coords_;
};

RatVec operator+(RatVec a, const RatVec& b);
RatVec operator-(RatVec a, const RatVec& b);
RatVec operator-(RatVec a);
RatVec operator*(const Rat& s, RatVec v);

/// Inner product; throws DimensionError on length mismatch.
Rat dot(const RatVec& a, const RatVec& b);

/// Σ coeffs[i] * vecs[i]. Requires equal list lengths and a common dimension.
RatVec linear_combination(std::span<const RatVec> vecs, std::span<const Rat> coeffs);

/// True when b = t·a for some rational t > 0 (both nonzero).
bool same_ray(const RatVec& a, const RatVec& b);

/// Ray representative with coprime integer coordinates (positive multiple).
RatVec primitive_ray(const RatVec& v);

std::string to_string(const RatVec& v);

class RatMat {
public:
    RatMat() = default;
    /// Throws DimensionError if the rows are ragged.
    explicit RatMat(std::vector<RatVec> rows);
    RatMat(std::size_t rows, std::size_t cols);

    static RatMat from_columns(std::span<const RatVec> cols);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    const RatVec& row(std::size_t i) const { return rows_[i]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

    RatVec column(std::size_t j) const;
    RatVec operator*(const RatVec& x) const;

private:
    std::vector<RatVec> rows_;
    std::size_t cols_ = 0;
};

std::size_t rank(const RatMat& m);

struct LinearSolution {
    RatVec particular;
    std::vector<RatVec> nullspace;
};

/// Solves A·x = b exactly. Returns nullopt if the system is inconsistent.
/// The particular solution sets every free variable to zero; the nullspace
/// basis has one vector per free variable (that variable set to 1, the
/// other free variables 0), in increasing free-variable order.
std::optional<LinearSolution> solve_linear(const RatMat& a, const RatVec& b);

/// Throws ArgumentError on an empty list, DimensionError on mixed lengths.
bool linearly_independent(std::span<const RatVec> vs);
bool affinely_independent(std::span<const RatVec> vs);

/// Throws DimensionError unless all vectors have the same length.
std::size_t common_dimension(std::span<const RatVec> vs);

}  // namespace sconv
