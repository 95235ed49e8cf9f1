#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qse/modes.hpp"

namespace qse {

// Bosonic Fock space over a finite mode set, truncated at total occupation
// n_max.  Basis states are multisets of mode indices, enumerated sector by
// sector (total occupation 0, 1, ..., n_max), lexicographically within each
// sector, so every sector is a contiguous index range and the sectors with
// occupation <= n_max - d form a prefix of the basis.
//
// Truncation discipline: applying a one-ladder operator to a state of
// occupation <= n_max - 1 is exact; quadratic forms of operators that add at
// most two photons are exact on the prefix of sectors <= n_max - 2.
class TruncatedFock {
public:
    using Complex = std::complex<double>;
    using SparseVec = std::vector<std::pair<std::uint32_t, Complex>>;

    TruncatedFock(ModeSet modes, int n_max, std::size_t dim_cap = 250000);

    const ModeSet& modes() const { return modes_; }
    int n_max() const { return nmax_; }
    std::size_t n_modes() const { return modes_.n_modes(); }
    std::size_t dim() const { return size_.size(); }

    std::size_t sector_begin(int s) const { return sector_offset_.at(s); }
    std::size_t sector_end(int s) const { return sector_offset_.at(s + 1); }
    // Dimension of the prefix spanned by sectors with occupation <= n_max - drop.
    std::size_t prefix_dim(int drop) const;

    int occupation_of(std::size_t idx) const { return size_[idx]; }

    // out = sum_m (c[m] a_m + d[m] a*_m) |in>; creation out of the top sector
    // is dropped (truncation).  c and d have length n_modes().
    Eigen::VectorXcd apply_ladder(const Eigen::VectorXcd& in, const std::vector<Complex>& c,
                                  const std::vector<Complex>& d) const;

    // Same operator applied to the basis vector e_v, returned sparse.
    SparseVec apply_ladder_basis(std::size_t v, const std::vector<Complex>& c,
                                 const std::vector<Complex>& d) const;

    // Annihilation operator a_m as a sparse matrix.
    Eigen::SparseMatrix<Complex> annihilator(std::size_t m) const;

    // Diagonal of the field energy sum_m |k_m| a*_m a_m.
    std::vector<double> hf_diagonal() const;

    // <u| sum_{mn} K_{mn} a*_m a_n |u> applied as a matrix on the basis
    // prefix of sectors <= n_max (number conserving, always exact).
    Eigen::MatrixXcd number_form_matrix(const Eigen::MatrixXcd& K, std::size_t block_dim) const;

private:
    ModeSet modes_;
    int nmax_ = 0;
    std::vector<std::uint8_t> occ_;   // dim * nmax_ sorted mode indices, 0xFF pad
    std::vector<std::uint8_t> size_;  // occupation count per state
    std::vector<std::size_t> sector_offset_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;

    std::uint64_t key_of(const std::uint8_t* occ, int n) const;
    const std::uint8_t* occ_ptr(std::size_t idx) const { return occ_.data() + idx * nmax_; }
};

// Exact truncated dimension sum_{s<=n_max} C(M+s-1, s); throws on overflow.
std::size_t fock_dimension(std::size_t n_modes, int n_max);

}  // namespace qse
