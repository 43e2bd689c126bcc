#include "rado/columns.hpp"

#include <algorithm>

#include "rado/errors.hpp"

namespace rado {

namespace {

bool zero_in_ring(const std::vector<Int>& v, const Ring& ring) {
    for (const auto& x : v) {
        if (ring.tag == Ring::Tag::ModN) {
            if (int_mod(x, ring.modulus) != 0) return false;
        } else if (x != 0) {
            return false;
        }
    }
    return true;
}

struct CertSearch {
    const IntMatrix& a;
    Ring ring;
    const std::function<bool(const ColumnsCertificate&)>& visit;
    std::size_t m;
    std::vector<std::vector<Int>> cols;

    std::vector<std::size_t> order;                 // columns committed so far
    std::vector<std::size_t> breakpoints;
    std::vector<std::vector<Rat>> lambdas;
    std::vector<std::vector<Int>> prefix_gens;      // columns of committed blocks
    bool stopped = false;

    // subsets of `remaining` in lex order on their ascending index sequences
    void blocks(const std::vector<std::size_t>& remaining) {
        if (stopped) return;
        if (remaining.empty()) {
            ColumnsCertificate cert{ring, order, breakpoints, lambdas};
            if (!verify_certificate(a, cert))
                throw std::logic_error("columns search built a non-verifying certificate");
            if (!visit(cert)) stopped = true;
            return;
        }
        std::vector<std::size_t> chosen;
        std::vector<Int> sum(a.rows(), 0);
        subsets(remaining, 0, chosen, sum);
    }

    void subsets(const std::vector<std::size_t>& remaining, std::size_t start,
                 std::vector<std::size_t>& chosen, std::vector<Int>& sum) {
        for (std::size_t i = start; i < remaining.size() && !stopped; ++i) {
            std::size_t col = remaining[i];
            chosen.push_back(col);
            for (std::size_t r = 0; r < a.rows(); ++r) sum[r] += a.at(r, col);
            try_block(remaining, chosen, sum);
            if (!stopped) subsets(remaining, i + 1, chosen, sum);
            for (std::size_t r = 0; r < a.rows(); ++r) sum[r] -= a.at(r, col);
            chosen.pop_back();
        }
    }

    void try_block(const std::vector<std::size_t>& remaining,
                   const std::vector<std::size_t>& chosen, const std::vector<Int>& sum) {
        std::optional<std::vector<Rat>> lam;
        if (breakpoints.empty()) {
            if (!zero_in_ring(sum, ring)) return;
        } else {
            lam = module_membership(sum, prefix_gens, ring);
            if (!lam) return;
        }
        // commit the block
        std::size_t before = order.size();
        for (auto c : chosen) order.push_back(c);
        breakpoints.push_back(order.size());
        if (lam) lambdas.push_back(*lam);
        for (auto c : chosen) prefix_gens.push_back(cols[c]);

        std::vector<std::size_t> rest;
        rest.reserve(remaining.size() - chosen.size());
        std::set_difference(remaining.begin(), remaining.end(), chosen.begin(), chosen.end(),
                            std::back_inserter(rest));
        blocks(rest);

        prefix_gens.resize(before);
        if (lam) lambdas.pop_back();
        breakpoints.pop_back();
        order.resize(before);
    }
};

} // namespace

std::vector<std::size_t> ColumnsCertificate::block(std::size_t b) const {
    std::size_t lo = b == 0 ? 0 : breakpoints[b - 1];
    std::size_t hi = breakpoints[b];
    return {order.begin() + static_cast<std::ptrdiff_t>(lo),
            order.begin() + static_cast<std::ptrdiff_t>(hi)};
}

bool verify_certificate(const IntMatrix& a, const ColumnsCertificate& cert) {
    const std::size_t m = a.cols(), k = a.rows();
    if (cert.order.size() != m) return false;
    std::vector<bool> seen(m, false);
    for (auto c : cert.order) {
        if (c >= m || seen[c]) return false;
        seen[c] = true;
    }
    if (cert.breakpoints.empty() || cert.breakpoints.back() != m) return false;
    for (std::size_t i = 0; i < cert.breakpoints.size(); ++i) {
        if (cert.breakpoints[i] == 0 || cert.breakpoints[i] > m) return false;
        if (i && cert.breakpoints[i] <= cert.breakpoints[i - 1]) return false;
    }
    if (cert.lambda.size() + 1 != cert.breakpoints.size()) return false;

    const bool modn = cert.ring.tag == Ring::Tag::ModN;
    const bool rational = cert.ring.tag == Ring::Tag::Rationals;
    for (std::size_t b = 0; b < cert.num_blocks(); ++b) {
        std::size_t prefix = b == 0 ? 0 : cert.breakpoints[b - 1];
        if (b > 0 && cert.lambda[b - 1].size() != prefix) return false;
        for (std::size_t r = 0; r < k; ++r) {
            Rat s(0);
            for (std::size_t pos = prefix; pos < cert.breakpoints[b]; ++pos)
                s += Rat(a.at(r, cert.order[pos]));
            if (b > 0)
                for (std::size_t pos = 0; pos < prefix; ++pos) {
                    const Rat& lam = cert.lambda[b - 1][pos];
                    if (!rational && lam.get_den() != 1) return false;
                    s -= lam * Rat(a.at(r, cert.order[pos]));
                }
            if (modn) {
                if (s.get_den() != 1) return false;
                if (int_mod(s.get_num(), cert.ring.modulus) != 0) return false;
            } else if (s != 0) {
                return false;
            }
        }
    }
    return true;
}

void for_each_certificate(const IntMatrix& a, const Ring& ring, std::size_t search_bound,
                          const std::function<bool(const ColumnsCertificate&)>& visit) {
    if (a.cols() > search_bound)
        throw capacity_error("columns-condition search limited to " +
                             std::to_string(search_bound) +
                             " columns (ordered set partitions grow like Fubini numbers)");
    CertSearch s{a, ring, visit, a.cols(), {}, {}, {}, {}, {}, false};
    s.cols.resize(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) s.cols[j] = a.column(j);
    std::vector<std::size_t> all(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) all[j] = j;
    s.blocks(all);
}

std::optional<ColumnsCertificate> check_columns_condition(const IntMatrix& a, const Ring& ring,
                                                          std::size_t search_bound) {
    std::optional<ColumnsCertificate> found;
    for_each_certificate(a, ring, search_bound, [&](const ColumnsCertificate& c) {
        found = c;
        return false;
    });
    return found;
}

bool strong_column_condition(const IntMatrix& a) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Int s(0);
        for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(r, j);
        if (s != 0) return false;
    }
    return true;
}

LiftResult lift_certificate_to_Z(const IntMatrix& a, const ColumnsCertificate& cert) {
    if (cert.ring.tag != Ring::Tag::ModN)
        throw validation_error("lift_certificate_to_Z expects a ModN certificate");
    if (!verify_certificate(a, cert))
        throw validation_error("certificate does not verify for the given matrix");
    const Int& n = cert.ring.modulus;
    const std::size_t k = a.rows();

    IntMatrix lifted = a;
    ColumnsCertificate out = cert;
    out.ring = Ring::integers();
    for (auto& lam : out.lambda)
        for (auto& x : lam) x = Rat(x.get_num());  // verified integral above

    for (std::size_t b = 0; b < cert.num_blocks(); ++b) {
        std::size_t prefix = b == 0 ? 0 : cert.breakpoints[b - 1];
        std::vector<Int> defect(k, 0);
        for (std::size_t pos = prefix; pos < cert.breakpoints[b]; ++pos)
            for (std::size_t r = 0; r < k; ++r) defect[r] += lifted.at(r, cert.order[pos]);
        for (std::size_t pos = 0; pos < prefix; ++pos) {
            const Int lam = out.lambda[b - 1][pos].get_num();
            if (lam == 0) continue;
            for (std::size_t r = 0; r < k; ++r) defect[r] -= lam * lifted.at(r, cert.order[pos]);
        }
        for (std::size_t r = 0; r < k; ++r)
            if (int_mod(defect[r], n) != 0)
                throw std::logic_error("lift defect is not divisible by n");
        std::size_t designated = *std::min_element(cert.order.begin() + static_cast<std::ptrdiff_t>(prefix),
                                                   cert.order.begin() + static_cast<std::ptrdiff_t>(cert.breakpoints[b]));
        for (std::size_t r = 0; r < k; ++r) lifted.at(r, designated) -= defect[r];
    }

    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (int_mod(lifted.at(r, j) - a.at(r, j), n) != 0)
                throw std::logic_error("lift changed the matrix mod n");
    if (!verify_certificate(lifted, out))
        throw std::logic_error("lifted certificate does not hold exactly over Z");
    return {std::move(lifted), std::move(out)};
}

ReduceReport reduce_matrix(const IntMatrix& a, const Int& n, std::size_t search_bound) {
    if (n < 2) throw validation_error("reduce_matrix requires n >= 2");
    const std::size_t k = a.rows();
    if (rank(a, Ring::rationals()) != k)
        throw validation_error("reduce_matrix requires full row rank over Q");
    const Int dk = k_determinantal(a);

    bool found_cert = false, done = false;
    ReduceReport rep{a, n, dk, false, {}, std::nullopt, {}, a, dk, {}};

    for_each_certificate(a, Ring::mod(n), search_bound, [&](const ColumnsCertificate& cert) {
        found_cert = true;
        if (dk == 1) {
            rep.identity_shortcut = true;
            rep.cert = cert;
            rep.cert_on_result = cert;
            done = true;
            return false;
        }
        LiftResult lift = lift_certificate_to_Z(a, cert);
        if (rank(lift.matrix, Ring::rationals()) != k) return true;  // next certificate

        SnfDecomposition snf = smith_normal_form(lift.matrix);
        IntMatrix b = multiply(snf.u, lift.matrix);
        IntMatrix result(b.rows(), b.cols());
        for (std::size_t i = 0; i < k; ++i) {
            if (snf.d[i] == 0) throw std::logic_error("zero invariant factor at full rank");
            for (std::size_t j = 0; j < b.cols(); ++j)
                result.at(i, j) = int_divexact(b.at(i, j), snf.d[i]);  // row i of U*A'' is divisible by d_i
        }

        Int dk_result = k_determinantal(result);
        if (dk_result != 1) throw std::logic_error("reduced matrix has d_k != 1");

        // certificate equations are homogeneous column relations of A'': they
        // survive the row operations and the row scaling
        ColumnsCertificate on_result = lift.cert;
        if (!verify_certificate(result, on_result))
            throw std::logic_error("certificate lost during reduction");
        ColumnsCertificate on_result_modn = on_result;
        on_result_modn.ring = Ring::mod(n);
        for (auto& lam : on_result_modn.lambda)
            for (auto& x : lam) x = Rat(int_mod(x.get_num(), n));
        if (!verify_certificate(result, on_result_modn))
            throw std::logic_error("ModN certificate lost during reduction");

        rep.cert = cert;
        rep.lifted = lift.matrix;
        rep.smith_d = snf.d;
        rep.result = result;
        rep.dk_result = dk_result;
        rep.cert_on_result = on_result_modn;
        done = true;
        return false;
    });

    if (!found_cert)
        throw validation_error("matrix does not satisfy the " + n.get_str() + "-columns condition");
    if (!done)
        throw validation_error("no certificate admits a rank-preserving integer lift");
    return rep;
}

} // namespace rado
