#include "qse/fock.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qse {

std::size_t fock_dimension(std::size_t n_modes, int n_max) {
    if (n_max < 0) throw std::invalid_argument("fock_dimension: n_max must be >= 0");
    const std::size_t M = n_modes;
    std::size_t total = 0;
    for (int s = 0; s <= n_max; ++s) {
        // C(M + s - 1, s), exact iterative binomial
        unsigned long long b = 1;
        for (int i = 1; i <= s; ++i) {
            unsigned long long num = M - 1 + static_cast<unsigned long long>(i);
            if (b > std::numeric_limits<unsigned long long>::max() / num)
                throw std::length_error("fock_dimension: overflow");
            b = b * num / i;
        }
        if (total > std::numeric_limits<std::size_t>::max() - b)
            throw std::length_error("fock_dimension: overflow");
        total += b;
    }
    return total;
}

TruncatedFock::TruncatedFock(ModeSet modes, int n_max, std::size_t dim_cap)
    : modes_(std::move(modes)), nmax_(n_max) {
    if (n_max < 0 || n_max > 8)
        throw std::invalid_argument("TruncatedFock: n_max must be in [0, 8]");
    if (modes_.n_modes() > 255)
        throw std::invalid_argument("TruncatedFock: at most 255 modes supported");
    const std::size_t dim = fock_dimension(modes_.n_modes(), nmax_);
    if (dim > dim_cap) throw std::length_error("TruncatedFock: dimension exceeds cap");

    const int M = static_cast<int>(modes_.n_modes());
    occ_.reserve(dim * std::max(nmax_, 1));
    size_.reserve(dim);
    index_.reserve(dim);
    sector_offset_.assign(nmax_ + 2, 0);

    std::uint8_t cur[8];
    for (int s = 0; s <= nmax_; ++s) {
        sector_offset_[s] = size_.size();
        if (s > 0 && M == 0) continue;
        for (int i = 0; i < s; ++i) cur[i] = 0;
        while (true) {
            const std::uint32_t idx = static_cast<std::uint32_t>(size_.size());
            for (int i = 0; i < nmax_; ++i)
                occ_.push_back(i < s ? cur[i] : std::uint8_t{0xFF});
            size_.push_back(static_cast<std::uint8_t>(s));
            index_.emplace(key_of(cur, s), idx);
            if (s == 0) break;
            // next nondecreasing tuple
            int p = s - 1;
            while (p >= 0 && cur[p] == M - 1) --p;
            if (p < 0) break;
            const std::uint8_t v = static_cast<std::uint8_t>(cur[p] + 1);
            for (int i = p; i < s; ++i) cur[i] = v;
        }
    }
    sector_offset_[nmax_ + 1] = size_.size();
}

std::uint64_t TruncatedFock::key_of(const std::uint8_t* occ, int n) const {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) key |= static_cast<std::uint64_t>(occ[i] + 1) << (8 * i);
    return key;
}

std::size_t TruncatedFock::prefix_dim(int drop) const {
    const int top = nmax_ - drop;
    if (top < 0) return 0;
    return sector_offset_.at(top + 1);
}

TruncatedFock::SparseVec TruncatedFock::apply_ladder_basis(std::size_t v, const std::vector<Complex>& c,
                                                           const std::vector<Complex>& d) const {
    const int M = static_cast<int>(modes_.n_modes());
    if (static_cast<int>(c.size()) != M || static_cast<int>(d.size()) != M)
        throw std::invalid_argument("apply_ladder_basis: coefficient size mismatch");
    const int n = size_[v];
    const std::uint8_t* o = occ_ptr(v);
    SparseVec out;
    std::uint8_t buf[9];

    // annihilation over distinct occupied modes
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && o[j] == o[i]) ++j;
        if (c[o[i]] != Complex{}) {
            int w = 0;
            for (int t = 0; t < n; ++t)
                if (t != i) buf[w++] = o[t];
            const auto it = index_.find(key_of(buf, n - 1));
            out.emplace_back(it->second, c[o[i]] * std::sqrt(double(j - i)));
        }
        i = j;
    }
    // creation (dropped when already at the truncation sector)
    if (n < nmax_) {
        for (int m = 0; m < M; ++m) {
            if (d[m] == Complex{}) continue;
            int mult = 0, w = 0;
            bool placed = false;
            for (int t = 0; t < n; ++t) {
                if (o[t] == m) ++mult;
                if (!placed && o[t] > m) {
                    buf[w++] = static_cast<std::uint8_t>(m);
                    placed = true;
                }
                buf[w++] = o[t];
            }
            if (!placed) buf[w++] = static_cast<std::uint8_t>(m);
            const auto it = index_.find(key_of(buf, n + 1));
            out.emplace_back(it->second, d[m] * std::sqrt(double(mult + 1)));
        }
    }
    return out;
}

Eigen::VectorXcd TruncatedFock::apply_ladder(const Eigen::VectorXcd& in, const std::vector<Complex>& c,
                                             const std::vector<Complex>& d) const {
    if (static_cast<std::size_t>(in.size()) != dim())
        throw std::invalid_argument("apply_ladder: vector size mismatch");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
    for (std::size_t v = 0; v < dim(); ++v) {
        if (in[v] == Complex{}) continue;
        for (const auto& [idx, coeff] : apply_ladder_basis(v, c, d)) out[idx] += in[v] * coeff;
    }
    return out;
}

Eigen::SparseMatrix<TruncatedFock::Complex> TruncatedFock::annihilator(std::size_t m) const {
    if (m >= modes_.n_modes()) throw std::out_of_range("annihilator: mode index");
    std::vector<Eigen::Triplet<Complex>> trips;
    std::uint8_t buf[9];
    for (std::size_t v = 0; v < dim(); ++v) {
        const int n = size_[v];
        const std::uint8_t* o = occ_ptr(v);
        int mult = 0;
        for (int t = 0; t < n; ++t)
            if (o[t] == m) ++mult;
        if (mult == 0) continue;
        int w = 0;
        bool removed = false;
        for (int t = 0; t < n; ++t) {
            if (!removed && o[t] == m) {
                removed = true;
                continue;
            }
            buf[w++] = o[t];
        }
        const auto it = index_.find(key_of(buf, n - 1));
        trips.emplace_back(static_cast<int>(it->second), static_cast<int>(v), Complex(std::sqrt(double(mult)), 0.0));
    }
    Eigen::SparseMatrix<Complex> a(static_cast<int>(dim()), static_cast<int>(dim()));
    a.setFromTriplets(trips.begin(), trips.end());
    return a;
}

std::vector<double> TruncatedFock::hf_diagonal() const {
    std::vector<double> diag(dim(), 0.0);
    for (std::size_t v = 0; v < dim(); ++v) {
        const int n = size_[v];
        const std::uint8_t* o = occ_ptr(v);
        double e = 0.0;
        for (int t = 0; t < n; ++t) e += modes_.k_of(o[t]).norm();
        diag[v] = e;
    }
    return diag;
}

Eigen::MatrixXcd TruncatedFock::number_form_matrix(const Eigen::MatrixXcd& K, std::size_t block_dim) const {
    const int M = static_cast<int>(modes_.n_modes());
    if (K.rows() != M || K.cols() != M)
        throw std::invalid_argument("number_form_matrix: K must be n_modes x n_modes");
    if (block_dim > dim()) throw std::out_of_range("number_form_matrix: block exceeds dimension");
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(block_dim, block_dim);
    std::uint8_t buf[9];
    for (std::size_t v = 0; v < block_dim; ++v) {
        const int n = size_[v];
        const std::uint8_t* o = occ_ptr(v);
        for (int i = 0; i < n;) {
            int j = i;
            while (j < n && o[j] == o[i]) ++j;
            const int src = o[i];
            const double amp_n = std::sqrt(double(j - i));
            int w = 0;
            for (int t = 0; t < n; ++t)
                if (t != i) buf[w++] = o[t];
            // buf now holds v minus one photon in mode src (length n-1)
            for (int m = 0; m < M; ++m) {
                if (K(m, src) == Complex{}) continue;
                int mult = 0;
                std::uint8_t buf2[9];
                int w2 = 0;
                bool placed = false;
                for (int t = 0; t < n - 1; ++t) {
                    if (buf[t] == m) ++mult;
                    if (!placed && buf[t] > m) {
                        buf2[w2++] = static_cast<std::uint8_t>(m);
                        placed = true;
                    }
                    buf2[w2++] = buf[t];
                }
                if (!placed) buf2[w2++] = static_cast<std::uint8_t>(m);
                const auto it = index_.find(key_of(buf2, n));
                B(it->second, v) += K(m, src) * amp_n * std::sqrt(double(mult + 1));
            }
            i = j;
        }
    }
    return B;
}

}  // namespace qse
