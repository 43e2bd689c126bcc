#include "rado/intmat.hpp"

#include <algorithm>
#include <sstream>

#include "rado/errors.hpp"

namespace rado {

Ring Ring::mod(Int n) {
    if (n < 2) throw validation_error("ModN ring requires n >= 2");
    return {Tag::ModN, std::move(n)};
}

std::string Ring::name() const {
    switch (tag) {
        case Tag::Integers: return "Z";
        case Tag::Rationals: return "Q";
        case Tag::ModN: return "Z" + modulus.get_str();
    }
    return "?";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < rows)
        throw validation_error("IntMatrix requires 1 <= rows <= cols");
    data_.assign(rows * cols, Int(0));
}

IntMatrix::IntMatrix(const std::vector<std::vector<Int>>& rows)
    : IntMatrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
        if (rows[i].size() != cols_) throw validation_error("ragged matrix rows");
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = rows[i][j];
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw validation_error("dimension mismatch in multiply");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Int& ail = a.at(i, l);
            if (ail == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += ail * b.at(l, j);
        }
    return r;
}

namespace {

// Bareiss fraction-free determinant; mutates its argument.
Int det_bareiss(std::vector<std::vector<Int>>& w) {
    const std::size_t n = w.size();
    if (n == 0) return 1;
    Int prev(1);
    int sign = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (w[p][p] == 0) {
            std::size_t q = p + 1;
            while (q < n && w[q][p] == 0) ++q;
            if (q == n) return 0;
            std::swap(w[p], w[q]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i)
            for (std::size_t j = p + 1; j < n; ++j)
                w[i][j] = int_divexact(w[i][j] * w[p][p] - w[i][p] * w[p][j], prev);
        prev = w[p][p];
    }
    return sign > 0 ? w[n - 1][n - 1] : -w[n - 1][n - 1];
}

} // namespace

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw validation_error("determinant of non-square matrix");
    std::vector<std::vector<Int>> w(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) w[i] = a.row(i);
    return det_bareiss(w);
}

Int k_determinantal(const IntMatrix& a) {
    const std::size_t k = a.rows(), m = a.cols();
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    Int g(0);
    while (true) {
        std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = a.at(i, pick[j]);
        g = int_gcd(g, det_bareiss(sub));
        if (g == 1) return g;
        // next k-combination of [0, m)
        std::size_t i = k;
        while (i-- > 0) {
            if (pick[i] != m - k + i) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return g;
        }
    }
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

namespace {

struct SnfWork {
    std::size_t k, m;
    std::vector<std::vector<Int>> w;  // k x m
    std::vector<std::vector<Int>> u;  // k x k
    std::vector<std::vector<Int>> v;  // m x m

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(w[a], w[b]);
        std::swap(u[a], u[b]);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < k; ++i) std::swap(w[i][a], w[i][b]);
        for (std::size_t i = 0; i < m; ++i) std::swap(v[i][a], v[i][b]);
    }
    void add_row(std::size_t dst, std::size_t src, const Int& c) {  // row dst += c * row src
        for (std::size_t j = 0; j < m; ++j) w[dst][j] += c * w[src][j];
        for (std::size_t j = 0; j < k; ++j) u[dst][j] += c * u[src][j];
    }
    void add_col(std::size_t dst, std::size_t src, const Int& c) {  // col dst += c * col src
        for (std::size_t i = 0; i < k; ++i) w[i][dst] += c * w[i][src];
        for (std::size_t i = 0; i < m; ++i) v[i][dst] += c * v[i][src];
    }
    void negate_row(std::size_t r) {
        for (auto& x : w[r]) x = -x;
        for (auto& x : u[r]) x = -x;
    }

    // smallest |entry| != 0 in the trailing submatrix, ties by row-major position
    bool find_pivot(std::size_t s, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = s; i < k; ++i)
            for (std::size_t j = s; j < m; ++j) {
                if (w[i][j] == 0) continue;
                Int a = abs(w[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

} // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t k = a.rows(), m = a.cols();
    SnfWork s{k, m, {}, {}, {}};
    s.w.resize(k);
    for (std::size_t i = 0; i < k; ++i) s.w[i] = a.row(i);
    s.u.assign(k, std::vector<Int>(k, 0));
    s.v.assign(m, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < k; ++i) s.u[i][i] = 1;
    for (std::size_t i = 0; i < m; ++i) s.v[i][i] = 1;

    for (std::size_t step = 0; step < k; ++step) {
        std::size_t pi = 0, pj = 0;
        if (!s.find_pivot(step, pi, pj)) break;  // rest of the diagonal stays 0
        s.swap_rows(step, pi);
        s.swap_cols(step, pj);
        while (true) {
            bool clean = true;
            for (std::size_t i = step + 1; i < k; ++i) {
                if (s.w[i][step] == 0) continue;
                Int q = s.w[i][step] / s.w[step][step];
                if (q != 0) s.add_row(i, step, -q);
                if (s.w[i][step] != 0) clean = false;
            }
            for (std::size_t j = step + 1; j < m; ++j) {
                if (s.w[step][j] == 0) continue;
                Int q = s.w[step][j] / s.w[step][step];
                if (q != 0) s.add_col(j, step, -q);
                if (s.w[step][j] != 0) clean = false;
            }
            if (!clean) {
                std::size_t pi2 = 0, pj2 = 0;
                s.find_pivot(step, pi2, pj2);
                s.swap_rows(step, pi2);
                s.swap_cols(step, pj2);
                continue;
            }
            // pivot must divide the trailing block, else absorb the offender
            bool divides = true;
            for (std::size_t i = step + 1; i < k && divides; ++i)
                for (std::size_t j = step + 1; j < m && divides; ++j)
                    if (!mpz_divisible_p(s.w[i][j].get_mpz_t(), s.w[step][step].get_mpz_t())) {
                        s.add_row(step, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        if (s.w[i][i] < 0) s.negate_row(i);

    SnfDecomposition out{IntMatrix(k, k), IntMatrix(m, m), {}};
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out.u.at(i, j) = s.u[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.v.at(i, j) = s.v[i][j];
    out.d.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.d[i] = s.w[i][i];
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (out.d[i] != 0 && out.d[i + 1] != 0 &&
            !mpz_divisible_p(out.d[i + 1].get_mpz_t(), out.d[i].get_mpz_t()))
            throw std::logic_error("smith_normal_form: divisibility chain violated");
    return out;
}

std::size_t rank(const IntMatrix& a, const Ring& ring) {
    if (ring.tag == Ring::Tag::ModN)
        throw validation_error("rank is defined over Z and Q only");
    std::vector<std::vector<Int>> w(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) w[i] = a.row(i);
    const std::size_t k = a.rows(), m = a.cols();
    std::size_t r = 0;
    Int prev(1);
    for (std::size_t c = 0; c < m && r < k; ++c) {
        std::size_t p = r;
        while (p < k && w[p][c] == 0) ++p;
        if (p == k) continue;
        std::swap(w[r], w[p]);
        for (std::size_t i = r + 1; i < k; ++i)
            for (std::size_t j = c + 1; j < m; ++j)
                w[i][j] = int_divexact(w[i][j] * w[r][c] - w[i][c] * w[r][j], prev);
        for (std::size_t i = r + 1; i < k; ++i) w[i][c] = 0;
        prev = w[r][c];
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Module membership
// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<Rat>> membership_rationals(const std::vector<Int>& v,
                                                     const std::vector<std::vector<Int>>& gens) {
    const std::size_t k = v.size(), g = gens.size();
    std::vector<std::vector<Rat>> w(k, std::vector<Rat>(g + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < g; ++j) w[i][j] = Rat(gens[j][i]);
        w[i][g] = Rat(v[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < g && r < k; ++c) {
        std::size_t p = r;
        while (p < k && w[p][c] == 0) ++p;
        if (p == k) continue;
        std::swap(w[r], w[p]);
        Rat inv = 1 / w[r][c];
        for (auto& x : w[r]) x *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (std::size_t j = c; j <= g; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < k; ++i)
        if (w[i][g] != 0) return std::nullopt;
    std::vector<Rat> lambda(g, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) lambda[pivot_col[i]] = w[i][g];
    return lambda;
}

std::optional<std::vector<Rat>> membership_integers(const std::vector<Int>& v,
                                                    const std::vector<std::vector<Int>>& gens) {
    const std::size_t k = v.size(), g = gens.size();
    // column echelon form via integer column operations, transform tracked in t
    std::vector<std::vector<Int>> w(k, std::vector<Int>(g));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < g; ++j) w[i][j] = gens[j][i];
    std::vector<std::vector<Int>> t(g, std::vector<Int>(g, 0));
    for (std::size_t j = 0; j < g; ++j) t[j][j] = 1;

    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < k; ++i) w[i][dst] += c * w[i][src];
        for (std::size_t i = 0; i < g; ++i) t[i][dst] += c * t[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < k; ++i) std::swap(w[i][a], w[i][b]);
        for (std::size_t i = 0; i < g; ++i) std::swap(t[i][a], t[i][b]);
    };
    auto col_negate = [&](std::size_t c) {
        for (std::size_t i = 0; i < k; ++i) w[i][c] = -w[i][c];
        for (std::size_t i = 0; i < g; ++i) t[i][c] = -t[i][c];
    };

    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t c = 0;
    for (std::size_t r = 0; r < k && c < g; ++r) {
        while (true) {
            std::size_t best = g;
            for (std::size_t j = c; j < g; ++j) {
                if (w[r][j] == 0) continue;
                if (best == g || abs(w[r][j]) < abs(w[r][best])) best = j;
            }
            if (best == g) break;
            col_swap(c, best);
            bool clean = true;
            for (std::size_t j = c + 1; j < g; ++j) {
                if (w[r][j] == 0) continue;
                Int q = w[r][j] / w[r][c];
                if (q != 0) col_axpy(j, c, -q);
                if (w[r][j] != 0) clean = false;
            }
            if (clean) {
                if (w[r][c] < 0) col_negate(c);
                pivots.emplace_back(r, c);
                ++c;
                break;
            }
        }
    }

    std::vector<Int> rem = v;
    std::vector<Int> mu(g, 0);
    for (auto [r, pc] : pivots) {
        if (!mpz_divisible_p(rem[r].get_mpz_t(), w[r][pc].get_mpz_t())) return std::nullopt;
        Int q = int_divexact(rem[r], w[r][pc]);
        mu[pc] = q;
        for (std::size_t i = 0; i < k; ++i) rem[i] -= q * w[i][pc];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    std::vector<Rat> lambda(g, Rat(0));
    for (std::size_t j = 0; j < g; ++j) {
        Int acc(0);
        for (std::size_t c2 = 0; c2 < g; ++c2) acc += t[j][c2] * mu[c2];
        lambda[j] = Rat(acc);
    }
    return lambda;
}

struct HowellRow {
    std::vector<Int> v;    // length k, residues mod n
    std::vector<Int> aug;  // length g, combination of the original rows
    std::size_t lead = 0;
};

class HowellForm {
public:
    HowellForm(const std::vector<std::vector<Int>>& rows, const Int& n, std::size_t width)
        : n_(n), width_(width), basis_(width) {
        std::size_t g = rows.size();
        for (std::size_t r = 0; r < g; ++r) {
            HowellRow h;
            h.v.resize(width_);
            for (std::size_t j = 0; j < width_; ++j) h.v[j] = int_mod(rows[r][j], n_);
            h.aug.assign(g, Int(0));
            h.aug[r] = 1;
            insert(std::move(h));
        }
    }

    /// Reduces v by the form; on success fills lambda (length = #original rows).
    bool member(const std::vector<Int>& v, std::vector<Int>& lambda) const {
        std::vector<Int> w(width_);
        for (std::size_t j = 0; j < width_; ++j) w[j] = int_mod(v[j], n_);
        std::size_t g = lambda.size();
        std::fill(lambda.begin(), lambda.end(), Int(0));
        for (std::size_t j = 0; j < width_; ++j) {
            if (w[j] == 0) continue;
            const auto& b = basis_[j];
            if (!b || !mpz_divisible_p(w[j].get_mpz_t(), b->v[j].get_mpz_t())) return false;
            Int q = int_divexact(w[j], b->v[j]);
            for (std::size_t c = j; c < width_; ++c) w[c] = int_mod(w[c] - q * b->v[c], n_);
            for (std::size_t c = 0; c < g; ++c) lambda[c] = int_mod(lambda[c] + q * b->aug[c], n_);
        }
        return true;
    }

    /// Pivot columns with their leading values, for canonical-form comparisons.
    std::vector<std::pair<std::size_t, Int>> pivots() const {
        std::vector<std::pair<std::size_t, Int>> p;
        for (std::size_t j = 0; j < width_; ++j)
            if (basis_[j]) p.emplace_back(j, basis_[j]->v[j]);
        return p;
    }

private:
    Int n_;
    std::size_t width_;
    std::vector<std::optional<HowellRow>> basis_;

    static std::size_t lead_of(const std::vector<Int>& v) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) return j;
        return v.size();
    }

    // unit u (mod n) with u * a == gcd(a, n) (mod n)
    Int lead_unit(const Int& a) const {
        Int d = int_gcd(a, n_);
        Int nd = int_divexact(n_, d);
        Int x, y;
        int_gcdext(int_divexact(a, d), nd, x, y);
        Int u = int_mod(x, nd);
        if (u == 0) u = nd;  // a/d == 1 mod nd case still needs a unit mod n
        while (int_gcd(u, n_) != 1) u += nd;
        return int_mod(u, n_);
    }

    void scale(HowellRow& r, const Int& c) const {
        for (auto& x : r.v) x = int_mod(x * c, n_);
        for (auto& x : r.aug) x = int_mod(x * c, n_);
    }

    HowellRow combine(const HowellRow& a, const Int& ca, const HowellRow& b, const Int& cb) const {
        HowellRow r;
        r.v.resize(width_);
        r.aug.resize(a.aug.size());
        for (std::size_t j = 0; j < width_; ++j) r.v[j] = int_mod(ca * a.v[j] + cb * b.v[j], n_);
        for (std::size_t j = 0; j < a.aug.size(); ++j)
            r.aug[j] = int_mod(ca * a.aug[j] + cb * b.aug[j], n_);
        return r;
    }

    void insert(HowellRow row) {
        std::vector<HowellRow> work;
        work.push_back(std::move(row));
        while (!work.empty()) {
            HowellRow r = std::move(work.back());
            work.pop_back();
            std::size_t j = lead_of(r.v);
            while (j < width_) {
                if (!basis_[j]) {
                    Int u = lead_unit(r.v[j]);
                    scale(r, u);
                    Int d = r.v[j];
                    basis_[j] = r;
                    Int q = int_divexact(n_, d);
                    HowellRow ann = combine(*basis_[j], q, *basis_[j], Int(0));
                    work.push_back(std::move(ann));
                    break;
                }
                const Int d = basis_[j]->v[j];
                const Int a = r.v[j];
                if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
                    r = combine(r, Int(1), *basis_[j], -int_divexact(a, d));
                    j = lead_of(r.v);
                    continue;
                }
                Int x, y;
                Int gg = int_gcdext(d, a, x, y);
                HowellRow comb = combine(*basis_[j], x, r, y);
                HowellRow repl = combine(r, int_divexact(d, gg), *basis_[j], -int_divexact(a, gg));
                basis_[j] = std::move(comb);
                Int q = int_divexact(n_, gg);
                work.push_back(combine(*basis_[j], q, *basis_[j], Int(0)));
                r = std::move(repl);
                j = lead_of(r.v);
            }
        }
    }
};

std::optional<std::vector<Rat>> membership_modn(const std::vector<Int>& v,
                                                const std::vector<std::vector<Int>>& gens,
                                                const Int& n) {
    const std::size_t k = v.size(), g = gens.size();
    std::vector<std::vector<Int>> rows(g, std::vector<Int>(k));
    for (std::size_t r = 0; r < g; ++r)
        for (std::size_t j = 0; j < k; ++j) rows[r][j] = gens[r][j];
    HowellForm hf(rows, n, k);
    std::vector<Int> lambda(g);
    if (!hf.member(v, lambda)) return std::nullopt;
    std::vector<Rat> out(g);
    for (std::size_t j = 0; j < g; ++j) out[j] = Rat(lambda[j]);
    return out;
}

} // namespace

std::optional<std::vector<Rat>> module_membership(const std::vector<Int>& v,
                                                  const std::vector<std::vector<Int>>& gens,
                                                  const Ring& ring) {
    for (const auto& gv : gens)
        if (gv.size() != v.size()) throw validation_error("generator length mismatch");
    std::optional<std::vector<Rat>> lambda;
    switch (ring.tag) {
        case Ring::Tag::Rationals: lambda = membership_rationals(v, gens); break;
        case Ring::Tag::Integers: lambda = membership_integers(v, gens); break;
        case Ring::Tag::ModN: lambda = membership_modn(v, gens, ring.modulus); break;
    }
    if (lambda && !verify_membership(v, gens, ring, *lambda))
        throw std::logic_error("module_membership produced a non-verifying certificate");
    return lambda;
}

bool verify_membership(const std::vector<Int>& v, const std::vector<std::vector<Int>>& gens,
                       const Ring& ring, const std::vector<Rat>& lambda) {
    if (lambda.size() != gens.size()) return false;
    const std::size_t k = v.size();
    std::vector<Rat> acc(k, Rat(0));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) acc[i] += lambda[j] * Rat(gens[j][i]);
    for (std::size_t i = 0; i < k; ++i) {
        if (ring.tag == Ring::Tag::ModN) {
            if (acc[i].get_den() != 1) return false;
            if (int_mod(acc[i].get_num() - v[i], ring.modulus) != 0) return false;
        } else {
            if (ring.tag == Ring::Tag::Integers && acc[i].get_den() != 1) return false;
            if (acc[i] != Rat(v[i])) return false;
        }
    }
    return true;
}

} // namespace rado
