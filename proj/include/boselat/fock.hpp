#ifndef BOSELAT_FOCK_HPP
#define BOSELAT_FOCK_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "boselat/errors.hpp"

namespace boselat {

/// Occupation numbers, one entry per lattice mode. All entries >= 0.
using OccupationVector = std::vector<int>;

inline constexpr std::size_t kDefaultDimensionCap = 1'000'000;

/// Number of occupation vectors over `mode_count` modes summing to
/// `total_particles`, i.e. C(N+L-1, L-1). Throws CapacityError if the
/// count exceeds `cap`.
std::size_t sector_dimension(int mode_count, int total_particles,
                             std::size_t cap = kDefaultDimensionCap);

/// Basis of the fixed-total-particle-number subspace over L modes.
///
/// The basis order is frozen: occupation vectors sorted lexicographically
/// descending, so for L=2 the state with i particles in mode 0 sits at
/// position N-i. Every downstream matrix depends on this ordering.
/// Immutable after construction; safe to share across threads.
class FockSector {
public:
    FockSector(int mode_count, int total_particles,
               std::size_t dimension_cap = kDefaultDimensionCap);

    int mode_count() const noexcept { return mode_count_; }
    int total_particles() const noexcept { return total_particles_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    const std::vector<OccupationVector>& basis() const noexcept { return basis_; }
    const OccupationVector& state(std::size_t k) const { return basis_.at(k); }

    /// Exact inverse of state(): index_of(state(k)) == k.
    std::size_t index_of(const OccupationVector& occ) const;
    bool contains(const OccupationVector& occ) const;

private:
    int mode_count_;
    int total_particles_;
    std::vector<OccupationVector> basis_;
    std::map<OccupationVector, std::size_t> index_;
};

std::shared_ptr<const FockSector> enumerate_sector(
    int mode_count, int total_particles,
    std::size_t dimension_cap = kDefaultDimensionCap);

struct HoppingElement {
    OccupationVector state;  ///< image of c_i^dag c_j applied to the input
    double amplitude;        ///< sqrt((n_i+1) n_j); 0 if the source mode is empty
};

/// Matrix element of c_{to}^dag c_{from} on a Fock state. If the source
/// mode is empty the amplitude is 0 and the state is returned unchanged.
HoppingElement hopping_element(const OccupationVector& state, int to_mode,
                               int from_mode);

struct NumberExpectations {
    std::vector<double> n;          ///< per-basis-state n_mode
    std::vector<double> n_squared;  ///< per-basis-state n_mode^2
};

/// Diagonal values of n_mode and n_mode^2 in basis order.
NumberExpectations number_expectations(const FockSector& sector, int mode);

}  // namespace boselat

#endif
