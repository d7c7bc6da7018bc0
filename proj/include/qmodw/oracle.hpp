#pragma once

// Phase oracle with a global query counter. This is the only access path to
// the hidden input string.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmodw/linalg.hpp"

namespace qmodw {

/// Input positions are 1-based, as in x = x_1 x_2 ... x_n.
using Index = std::size_t;

/// Bits of an input string, x[0] holding x_1.
using BitString = std::vector<std::uint8_t>;

/// Parses a string over {0,1}. Throws ParseError on any other character or when empty.
BitString parse_bits(std::string_view text);
std::string format_bits(const BitString& bits);

/// Local view of the oracle: local basis state j < map.size() picks up the
/// phase of global input position map[j]; the trailing `padding` basis states
/// are left untouched.
struct BlockView {
    std::vector<Index> map;
    std::size_t padding = 0;

    std::size_t dim() const { return map.size() + padding; }
};

struct QueryEvent {
    enum class Kind { Phase, Bit };
    Kind kind;
    std::vector<Index> indices;  // BlockView map, or the single bit index
    std::size_t padding = 0;
    std::uint64_t count = 0;     // running total after this query
};

class CountingOracle {
public:
    explicit CountingOracle(BitString hidden);

    CountingOracle(const CountingOracle&) = delete;
    CountingOracle& operator=(const CountingOracle&) = delete;
    CountingOracle(CountingOracle&&) = default;
    CountingOracle& operator=(CountingOracle&&) = default;

    std::size_t size() const { return hidden_.size(); }
    std::uint64_t query_count() const { return queries_; }

    /// Multiplies entry j by (-1)^{x[map[j]]}. Costs one query.
    StateVector phase_apply(const BlockView& view, const StateVector& v);

    /// Classical read of x_i. Costs one query.
    std::uint8_t query_bit(Index i);

    void record_transcript(bool on) { recording_ = on; }
    const std::vector<QueryEvent>& transcript() const { return transcript_; }

private:
    void check_index(Index i) const;

    BitString hidden_;
    std::uint64_t queries_ = 0;
    bool recording_ = false;
    std::vector<QueryEvent> transcript_;
};

inline std::uint64_t query_count(const CountingOracle& o) { return o.query_count(); }

Json to_json(const std::vector<QueryEvent>& transcript);

}  // namespace qmodw
