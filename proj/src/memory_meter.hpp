#pragma once

#include <algorithm>
#include <cstdint>

namespace hypercore {

// Deterministic accounting of algorithm-owned auxiliary storage. Algorithms
// report every slot they allocate or release; the meter keeps high-water
// marks. Bytes are entries times the nominal slot width, a portable measure
// rather than an OS heap sample.
//
// pair entries are counted separately: slots of containers that hold one
// record per node *pair* and live across the whole peel (the structure whose
// growth separates the count-only peel from the explicit-neighbour one).
// Per-node transient scratch is ordinary entries.
class MemoryMeter {
public:
    void add(std::uint64_t entries, std::uint64_t slot_bytes) {
        cur_entries_ += entries;
        cur_bytes_ += entries * slot_bytes;
        bump();
    }
    void sub(std::uint64_t entries, std::uint64_t slot_bytes) {
        cur_entries_ -= entries;
        cur_bytes_ -= entries * slot_bytes;
    }
    void add_pairs(std::uint64_t entries, std::uint64_t slot_bytes) {
        cur_pairs_ += entries;
        cur_bytes_ += entries * slot_bytes;
        bump();
    }
    void sub_pairs(std::uint64_t entries, std::uint64_t slot_bytes) {
        cur_pairs_ -= entries;
        cur_bytes_ -= entries * slot_bytes;
    }

    std::uint64_t peak_entries() const { return peak_entries_; }
    std::uint64_t peak_pair_entries() const { return peak_pairs_; }
    std::uint64_t peak_bytes() const { return peak_bytes_; }

private:
    void bump() {
        peak_entries_ = std::max(peak_entries_, cur_entries_ + cur_pairs_);
        peak_pairs_ = std::max(peak_pairs_, cur_pairs_);
        peak_bytes_ = std::max(peak_bytes_, cur_bytes_);
    }

    std::uint64_t cur_entries_ = 0;
    std::uint64_t cur_pairs_ = 0;
    std::uint64_t cur_bytes_ = 0;
    std::uint64_t peak_entries_ = 0;
    std::uint64_t peak_pairs_ = 0;
    std::uint64_t peak_bytes_ = 0;
};

struct MemoryReport {
    std::uint64_t peak_entries = 0;       // all accounted slots
    std::uint64_t peak_pair_entries = 0;  // persistent per-pair slots only
    std::uint64_t peak_bytes = 0;
};

}  // namespace hypercore
