#include "sconv/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

#include "sconv/errors.hpp"

namespace sconv {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Row echelon form by fraction-free (Bareiss) elimination. Entries below each
// pivot are zeroed; divisions by the previous pivot are exact.
struct Echelon {
    IntMatrix m;
    std::vector<std::size_t> pivot_cols;
};

Echelon fraction_free_echelon(IntMatrix m, std::size_t cols) {
    Echelon out;
    const std::size_t rows = m.size();
    mpz_class prev = 1;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        std::size_t piv = pr;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[pr]);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = m[pr][col] * m[i][j] - m[i][col] * m[pr][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[pr][col];
        out.pivot_cols.push_back(col);
        ++pr;
    }
    out.m = std::move(m);
    return out;
}

// Scales a rational row by the lcm of its denominators.
std::vector<mpz_class> integer_row(const RatVec& row) {
    mpz_class l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(row.size());
    for (const auto& x : row) out.emplace_back(x.get_num() * (l / x.get_den()));
    return out;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational: \"" + std::string(text) + "\"");
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    Rat r(negative ? mpz_class(-p) : p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

RatVec RatVec::from_ints(std::initializer_list<long> coords) {
    RatVec v;
    v.coords_.reserve(coords.size());
    for (long c : coords) v.coords_.emplace_back(c);
    return v;
}

RatVec RatVec::unit(std::size_t dim, std::size_t axis) {
    RatVec v(dim);
    v[axis] = 1;
    return v;
}

bool RatVec::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& x) { return x == 0; });
}

std::vector<double> RatVec::to_doubles() const {
    std::vector<double> out;
    out.reserve(coords_.size());
    for (const auto& x : coords_) out.push_back(x.get_d());
    return out;
}

RatVec& RatVec::operator+=(const RatVec& other) {
    if (other.size() != size()) throw DimensionError("vector addition: length mismatch");
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

RatVec& RatVec::operator-=(const RatVec& other) {
    if (other.size() != size()) throw DimensionError("vector subtraction: length mismatch");
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

RatVec& RatVec::operator*=(const Rat& s) {
    for (auto& x : coords_) x *= s;
    return *this;
}

RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
RatVec operator-(RatVec a) { return a *= Rat(-1); }
RatVec operator*(const Rat& s, RatVec v) { return v *= s; }

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionError("dot product: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec linear_combination(std::span<const RatVec> vecs, std::span<const Rat> coeffs) {
    if (vecs.size() != coeffs.size())
        throw DimensionError("linear combination: coefficient count mismatch");
    if (vecs.empty()) throw ArgumentError("linear combination of an empty family");
    RatVec out(common_dimension(vecs));
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += coeffs[i] * vecs[i][k];
    }
    return out;
}

bool same_ray(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionError("same_ray: length mismatch");
    if (a.is_zero() || b.is_zero()) return false;
    std::optional<Rat> ratio;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return false;
        if (a[i] == 0) continue;
        Rat t = b[i] / a[i];
        if (t <= 0) return false;
        if (ratio && *ratio != t) return false;
        ratio = t;
    }
    return true;
}

RatVec primitive_ray(const RatVec& v) {
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return v;
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i].get_num() * (l / v[i].get_den()) / g);
    return out;
}

std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

RatMat::RatMat(std::vector<RatVec> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_.front().size();
    for (const auto& r : rows_)
        if (r.size() != cols_) throw DimensionError("ragged matrix");
}

RatMat::RatMat(std::size_t rows, std::size_t cols) : rows_(rows, RatVec(cols)), cols_(cols) {}

RatMat RatMat::from_columns(std::span<const RatVec> cols) {
    if (cols.empty()) return RatMat{};
    const std::size_t n = common_dimension(cols);
    RatMat m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    return m;
}

RatVec RatMat::column(std::size_t j) const {
    RatVec c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
    return c;
}

RatVec RatMat::operator*(const RatVec& x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector product: length mismatch");
    RatVec out(rows());
    for (std::size_t i = 0; i < rows(); ++i) out[i] = dot(rows_[i], x);
    return out;
}

std::size_t rank(const RatMat& m) {
    IntMatrix im;
    im.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) im.push_back(integer_row(m.row(i)));
    return fraction_free_echelon(std::move(im), m.cols()).pivot_cols.size();
}

std::optional<LinearSolution> solve_linear(const RatMat& a, const RatVec& b) {
    if (a.rows() != b.size()) throw DimensionError("solve_linear: row count differs from rhs length");
    const std::size_t n = a.cols();
    IntMatrix im;
    im.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        RatVec aug(n + 1);
        for (std::size_t j = 0; j < n; ++j) aug[j] = a(i, j);
        aug[n] = b[i];
        im.push_back(integer_row(aug));
    }
    const Echelon e = fraction_free_echelon(std::move(im), n + 1);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) return std::nullopt;

    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    // Back substitution for a given assignment of the free variables and rhs.
    auto back_substitute = [&](RatVec x, bool with_rhs) {
        for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
            const std::size_t pc = e.pivot_cols[r];
            Rat acc = with_rhs ? Rat(e.m[r][n]) : Rat(0);
            for (std::size_t j = pc + 1; j < n; ++j)
                if (e.m[r][j] != 0) acc -= Rat(e.m[r][j]) * x[j];
            x[pc] = acc / Rat(e.m[r][pc]);
        }
        return x;
    };

    LinearSolution sol;
    sol.particular = back_substitute(RatVec(n), true);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec x(n);
        x[f] = 1;
        sol.nullspace.push_back(back_substitute(std::move(x), false));
    }
    return sol;
}

std::size_t common_dimension(std::span<const RatVec> vs) {
    if (vs.empty()) return 0;
    const std::size_t n = vs.front().size();
    for (const auto& v : vs)
        if (v.size() != n) throw DimensionError("vectors of mixed dimension");
    return n;
}

bool linearly_independent(std::span<const RatVec> vs) {
    if (vs.empty()) throw ArgumentError("linear independence of an empty family");
    common_dimension(vs);
    return rank(RatMat(std::vector<RatVec>(vs.begin(), vs.end()))) == vs.size();
}

bool affinely_independent(std::span<const RatVec> vs) {
    if (vs.empty()) throw ArgumentError("affine independence of an empty family");
    common_dimension(vs);
    if (vs.size() == 1) return true;
    std::vector<RatVec> diffs;
    diffs.reserve(vs.size() - 1);
    for (std::size_t k = 1; k < vs.size(); ++k) diffs.push_back(vs[k] - vs[0]);
    return linearly_independent(diffs);
}

}  // namespace sconv
