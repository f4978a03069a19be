#include "boselat/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace boselat {

std::size_t sector_dimension(int mode_count, int total_particles,
                             std::size_t cap) {
    if (mode_count < 1) throw std::invalid_argument("mode_count must be >= 1");
    if (total_particles < 0)
        throw std::invalid_argument("total_particles must be >= 0");
    // C(N+L-1, L-1) built multiplicatively; each prefix product of
    // C(N+k, k) is itself a binomial so the integer division is exact.
    unsigned __int128 dim = 1;
    for (int k = 1; k <= mode_count - 1; ++k) {
        dim = dim * static_cast<unsigned>(total_particles + k) /
              static_cast<unsigned>(k);
        if (dim > static_cast<unsigned __int128>(cap) * 2) break;
    }
    if (dim > cap) {
        throw CapacityError("sector dimension C(" +
                            std::to_string(total_particles + mode_count - 1) +
                            "," + std::to_string(mode_count - 1) +
                            ") exceeds cap " + std::to_string(cap));
    }
    return static_cast<std::size_t>(dim);
}

namespace {

void enumerate_rec(int modes_left, int particles_left, OccupationVector& head,
                   std::vector<OccupationVector>& out) {
    if (modes_left == 1) {
        head.push_back(particles_left);
        out.push_back(head);
        head.pop_back();
        return;
    }
    // descending first entry gives lexicographically descending output
    for (int k = particles_left; k >= 0; --k) {
        head.push_back(k);
        enumerate_rec(modes_left - 1, particles_left - k, head, out);
        head.pop_back();
    }
}

}  // namespace

FockSector::FockSector(int mode_count, int total_particles,
                       std::size_t dimension_cap)
    : mode_count_(mode_count), total_particles_(total_particles) {
    const std::size_t dim =
        sector_dimension(mode_count, total_particles, dimension_cap);
    basis_.reserve(dim);
    OccupationVector head;
    head.reserve(static_cast<std::size_t>(mode_count));
    enumerate_rec(mode_count, total_particles, head, basis_);
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

std::size_t FockSector::index_of(const OccupationVector& occ) const {
    auto it = index_.find(occ);
    if (it == index_.end())
        throw std::out_of_range("occupation vector not in sector");
    return it->second;
}

bool FockSector::contains(const OccupationVector& occ) const {
    return index_.find(occ) != index_.end();
}

std::shared_ptr<const FockSector> enumerate_sector(int mode_count,
                                                   int total_particles,
                                                   std::size_t dimension_cap) {
    return std::make_shared<const FockSector>(mode_count, total_particles,
                                              dimension_cap);
}

HoppingElement hopping_element(const OccupationVector& state, int to_mode,
                               int from_mode) {
    const int modes = static_cast<int>(state.size());
    if (to_mode < 0 || to_mode >= modes || from_mode < 0 || from_mode >= modes)
        throw std::out_of_range("hopping_element: mode index out of range");
    if (to_mode == from_mode)
        throw std::invalid_argument("hopping_element: modes must differ");
    const int nj = state[static_cast<std::size_t>(from_mode)];
    if (nj == 0) return {state, 0.0};
    OccupationVector image = state;
    image[static_cast<std::size_t>(from_mode)] -= 1;
    image[static_cast<std::size_t>(to_mode)] += 1;
    const int ni = state[static_cast<std::size_t>(to_mode)];
    return {std::move(image), std::sqrt(static_cast<double>(ni + 1) *
                                        static_cast<double>(nj))};
}

NumberExpectations number_expectations(const FockSector& sector, int mode) {
    if (mode < 0 || mode >= sector.mode_count())
        throw std::out_of_range("number_expectations: mode index out of range");
    NumberExpectations out;
    out.n.reserve(sector.dimension());
    out.n_squared.reserve(sector.dimension());
    for (const auto& occ : sector.basis()) {
        const double v = occ[static_cast<std::size_t>(mode)];
        out.n.push_back(v);
        out.n_squared.push_back(v * v);
    }
    return out;
}

}  // namespace boselat
