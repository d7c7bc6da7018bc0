#include "qmodw/oracle.hpp"

#include <algorithm>

#include "qmodw/errors.hpp"

namespace qmodw {

BitString parse_bits(std::string_view text) {
    if (text.empty()) throw ParseError("bit string is empty");
    BitString bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1') throw ParseError("bit string may only contain '0' and '1': '" + std::string(text) + "'");
        bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return bits;
}

std::string format_bits(const BitString& bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

CountingOracle::CountingOracle(BitString hidden) : hidden_(std::move(hidden)) {
    for (auto b : hidden_)
        if (b > 1) throw DomainError("oracle input must be a bit string");
}

void CountingOracle::check_index(Index i) const {
    if (i < 1 || i > hidden_.size())
        throw IndexOutOfRange("input index " + std::to_string(i) + " outside [1, " + std::to_string(hidden_.size()) + "]");
}

StateVector CountingOracle::phase_apply(const BlockView& view, const StateVector& v) {
    if (v.dim() != view.dim())
        throw DimensionMismatch("state dimension " + std::to_string(v.dim()) + " does not match view dimension " +
                                std::to_string(view.dim()));
    for (Index i : view.map) check_index(i);
    for (std::size_t a = 0; a < view.map.size(); ++a)
        for (std::size_t b = a + 1; b < view.map.size(); ++b)
            if (view.map[a] == view.map[b]) throw DomainError("block view indices must be distinct");

    StateVector out = v;
    for (std::size_t j = 0; j < view.map.size(); ++j)
        if (hidden_[view.map[j] - 1] != 0) out[j] = -out[j];
    ++queries_;
    if (recording_) transcript_.push_back({QueryEvent::Kind::Phase, view.map, view.padding, queries_});
    return out;
}

std::uint8_t CountingOracle::query_bit(Index i) {
    check_index(i);
    ++queries_;
    if (recording_) transcript_.push_back({QueryEvent::Kind::Bit, {i}, 0, queries_});
    return hidden_[i - 1];
}

Json to_json(const std::vector<QueryEvent>& transcript) {
    Json out = Json::array();
    for (const auto& e : transcript) {
        Json ev;
        if (e.kind == QueryEvent::Kind::Phase) {
            ev["kind"] = "phase";
            ev["map"] = e.indices;
            ev["padding"] = e.padding;
        } else {
            ev["kind"] = "bit";
            ev["index"] = e.indices.front();
        }
        ev["count"] = e.count;
        out.push_back(std::move(ev));
    }
    return out;
}

}  // namespace qmodw
