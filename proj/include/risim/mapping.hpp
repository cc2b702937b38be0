#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "risim/common.hpp"

namespace risim::mapping {

/// MSB-first bit word, one 0/1 entry per bit.
using BitWord = std::vector<std::uint8_t>;

BitWord index_to_bits(std::uint64_t index, std::size_t width);
std::uint64_t bits_to_index(const BitWord& bits);

/// A set of selected receive antennas. Indices are 0-based and kept sorted.
class AntennaCombination {
public:
    AntennaCombination(std::size_t n_r, std::vector<std::size_t> antennas);

    std::size_t n_r() const { return n_r_; }
    std::size_t n_a() const { return antennas_.size(); }
    const std::vector<std::size_t>& antennas() const { return antennas_; }
    std::vector<bool> mask() const;
    bool contains(std::size_t antenna) const;

    bool operator==(const AntennaCombination& o) const { return antennas_ == o.antennas_; }

private:
    std::size_t n_r_;
    std::vector<std::size_t> antennas_;
};

/// Ascending size, then lexicographic on the sorted index set.
bool canonical_less(const AntennaCombination& a, const AntennaCombination& b);

struct AcTable {
    std::vector<AntennaCombination> entries;
    std::size_t n_r = 0;
    std::size_t bits_per_ac = 0;

    std::size_t size() const { return entries.size(); }
};

/// Validates distinctness, power-of-two size and index range, then fills bits_per_ac.
AcTable make_table(std::size_t n_r, std::vector<AntennaCombination> entries);

std::vector<AntennaCombination> enumerate_acs(std::size_t n_r);
AcTable select_predefined_acs(std::size_t n_r);

AntennaCombination bits_to_ac(const AcTable& table, const BitWord& bits);
BitWord ac_to_bits(const AcTable& table, const AntennaCombination& ac);

/// 1-based index arrays, e.g. [[1],[2],[1,2]].
std::string table_to_json(const AcTable& table);
AcTable table_from_json(const std::string& text, std::size_t n_r);

enum class ConstellationKind { psk, qam };

struct Constellation {
    ConstellationKind kind = ConstellationKind::psk;
    std::size_t m = 2;
    std::vector<cdouble> points;       // unit average energy
    std::vector<std::uint32_t> label;  // Gray label of point k
    std::vector<std::uint32_t> point_of_label;

    std::size_t bits_per_symbol() const;
};

Constellation build_constellation(ConstellationKind kind, std::size_t m);

cdouble bits_to_symbol(const Constellation& c, const BitWord& bits);
BitWord symbol_to_bits(const Constellation& c, std::size_t k);

std::size_t log2_exact(std::uint64_t v);
bool is_power_of_two(std::uint64_t v);

}  // namespace risim::mapping
