#include "risim/mapping.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>

#include <nlohmann/json.hpp>

namespace risim::mapping {

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::size_t log2_exact(std::uint64_t v) {
    if (!is_power_of_two(v)) fail(ErrorKind::unsupported_configuration, "value is not a power of two");
    return static_cast<std::size_t>(std::countr_zero(v));
}

BitWord index_to_bits(std::uint64_t index, std::size_t width) {
    BitWord bits(width);
    for (std::size_t b = 0; b < width; ++b) {
        bits[width - 1 - b] = static_cast<std::uint8_t>((index >> b) & 1U);
    }
    return bits;
}

std::uint64_t bits_to_index(const BitWord& bits) {
    std::uint64_t v = 0;
    for (auto b : bits) v = (v << 1) | (b & 1U);
    return v;
}

AntennaCombination::AntennaCombination(std::size_t n_r, std::vector<std::size_t> antennas)
    : n_r_(n_r), antennas_(std::move(antennas)) {
    std::sort(antennas_.begin(), antennas_.end());
    if (antennas_.empty()) fail(ErrorKind::invalid_dimension, "antenna combination is empty");
    if (std::adjacent_find(antennas_.begin(), antennas_.end()) != antennas_.end()) {
        fail(ErrorKind::invalid_dimension, "antenna combination repeats an antenna");
    }
    if (antennas_.back() >= n_r_) fail(ErrorKind::invalid_dimension, "antenna index out of range");
}

std::vector<bool> AntennaCombination::mask() const {
    std::vector<bool> m(n_r_, false);
    for (auto a : antennas_) m[a] = true;
    return m;
}

bool AntennaCombination::contains(std::size_t antenna) const {
    return std::binary_search(antennas_.begin(), antennas_.end(), antenna);
}

bool canonical_less(const AntennaCombination& a, const AntennaCombination& b) {
    if (a.n_a() != b.n_a()) return a.n_a() < b.n_a();
    return a.antennas() < b.antennas();
}

AcTable make_table(std::size_t n_r, std::vector<AntennaCombination> entries) {
    if (!is_power_of_two(entries.size())) {
        fail(ErrorKind::unsupported_configuration, "AC table size must be a power of two");
    }
    std::set<std::vector<std::size_t>> seen;
    for (const auto& e : entries) {
        if (e.n_r() != n_r) fail(ErrorKind::invalid_dimension, "AC built for a different antenna count");
        if (!seen.insert(e.antennas()).second) {
            fail(ErrorKind::unsupported_configuration, "AC table entries must be distinct");
        }
    }
    AcTable t;
    t.n_r = n_r;
    t.bits_per_ac = log2_exact(entries.size());
    t.entries = std::move(entries);
    return t;
}

namespace {

// Every size-k subset of {0..n-1} in lexicographic order.
void append_combinations(std::size_t n, std::size_t k, std::vector<AntennaCombination>& out) {
    std::vector<std::size_t> idx(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = j;
    while (true) {
        out.emplace_back(n, idx);
        std::size_t j = k;
        while (j > 0 && idx[j - 1] == n - k + (j - 1)) --j;
        if (j == 0) break;
        ++idx[j - 1];
        for (std::size_t q = j; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
}

constexpr std::size_t max_enumerated_antennas = 20;

}  // namespace

std::vector<AntennaCombination> enumerate_acs(std::size_t n_r) {
    if (n_r == 0) fail(ErrorKind::invalid_dimension, "need at least one receive antenna");
    if (n_r > max_enumerated_antennas) {
        fail(ErrorKind::unsupported_configuration, "too many antennas to enumerate combinations");
    }
    std::vector<AntennaCombination> all;
    all.reserve((std::size_t{1} << n_r) - 1);
    for (std::size_t k = 1; k <= n_r; ++k) append_combinations(n_r, k, all);
    return all;
}

AcTable select_predefined_acs(std::size_t n_r) {
    if (n_r < 2) {
        fail(ErrorKind::unsupported_configuration, "pre-defined AC selection needs n_r >= 2");
    }
    auto all = enumerate_acs(n_r);
    std::erase_if(all, [n_r](const AntennaCombination& c) { return c.n_a() == n_r; });
    std::stable_sort(all.begin(), all.end(), canonical_less);
    const std::size_t d = std::size_t{1} << (n_r - 1);
    all.resize(d, all.front());
    return make_table(n_r, std::move(all));
}

AntennaCombination bits_to_ac(const AcTable& table, const BitWord& bits) {
    if (bits.size() != table.bits_per_ac) fail(ErrorKind::invalid_dimension, "AC bit word length");
    return table.entries[bits_to_index(bits)];
}

BitWord ac_to_bits(const AcTable& table, const AntennaCombination& ac) {
    const auto it = std::find(table.entries.begin(), table.entries.end(), ac);
    if (it == table.entries.end()) fail(ErrorKind::unknown_combination, "AC not in table");
    return index_to_bits(static_cast<std::uint64_t>(it - table.entries.begin()), table.bits_per_ac);
}

std::string table_to_json(const AcTable& table) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : table.entries) {
        nlohmann::json row = nlohmann::json::array();
        for (auto a : e.antennas()) row.push_back(a + 1);
        j.push_back(row);
    }
    return j.dump();
}

AcTable table_from_json(const std::string& text, std::size_t n_r) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::config, std::string("AC table JSON: ") + e.what());
    }
    if (!j.is_array()) fail(ErrorKind::config, "AC table JSON must be an array of index arrays");
    std::vector<AntennaCombination> entries;
    for (const auto& row : j) {
        if (!row.is_array()) fail(ErrorKind::config, "AC table row must be an array");
        std::vector<std::size_t> idx;
        for (const auto& v : row) {
            const auto one_based = v.get<std::int64_t>();
            if (one_based < 1) fail(ErrorKind::config, "AC indices are 1-based");
            idx.push_back(static_cast<std::size_t>(one_based - 1));
        }
        entries.emplace_back(n_r, std::move(idx));
    }
    return make_table(n_r, std::move(entries));
}

std::size_t Constellation::bits_per_symbol() const { return log2_exact(m); }

namespace {

std::uint32_t gray(std::uint32_t v) { return v ^ (v >> 1); }

}  // namespace

Constellation build_constellation(ConstellationKind kind, std::size_t m) {
    if (m < 2 || !is_power_of_two(m) || m > (std::size_t{1} << 16)) {
        fail(ErrorKind::config, "constellation order must be a power of two in [2, 65536]");
    }
    Constellation c;
    c.kind = kind;
    c.m = m;
    c.points.resize(m);
    c.label.resize(m);
    c.point_of_label.resize(m);

    if (kind == ConstellationKind::psk) {
        const double offset = m == 2 ? 0.0 : std::numbers::pi / static_cast<double>(m);
        for (std::size_t k = 0; k < m; ++k) {
            c.points[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                              static_cast<double>(m) + offset);
            c.label[k] = gray(static_cast<std::uint32_t>(k));
        }
        if (m == 2) c.points[1] = {-1.0, 0.0};
    } else {
        // Square (even bit count) or rectangular grid, Gray coded per axis.
        const std::size_t b = log2_exact(m);
        const std::size_t b_q = b / 2;
        const std::size_t b_i = b - b_q;
        const std::size_t l_i = std::size_t{1} << b_i;
        const std::size_t l_q = std::size_t{1} << b_q;
        double energy = 0.0;
        for (std::size_t ii = 0; ii < l_i; ++ii) {
            for (std::size_t iq = 0; iq < l_q; ++iq) {
                const std::size_t k = ii * l_q + iq;
                const double re = 2.0 * static_cast<double>(ii) - static_cast<double>(l_i - 1);
                const double im = 2.0 * static_cast<double>(iq) - static_cast<double>(l_q - 1);
                c.points[k] = {re, im};
                c.label[k] = (gray(static_cast<std::uint32_t>(ii)) << b_q) |
                             gray(static_cast<std::uint32_t>(iq));
                energy += re * re + im * im;
            }
        }
        const double scale = 1.0 / std::sqrt(energy / static_cast<double>(m));
        for (auto& p : c.points) p *= scale;
    }
    for (std::size_t k = 0; k < m; ++k) c.point_of_label[c.label[k]] = static_cast<std::uint32_t>(k);
    return c;
}

cdouble bits_to_symbol(const Constellation& c, const BitWord& bits) {
    if (bits.size() != c.bits_per_symbol()) fail(ErrorKind::invalid_dimension, "symbol bit word length");
    return c.points[c.point_of_label[bits_to_index(bits)]];
}

BitWord symbol_to_bits(const Constellation& c, std::size_t k) {
    if (k >= c.m) fail(ErrorKind::invalid_dimension, "symbol index out of range");
    return index_to_bits(c.label[k], c.bits_per_symbol());
}

}  // namespace risim::mapping
