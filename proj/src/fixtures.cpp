#include "qmodw/fixtures.hpp"

#include "qmodw/errors.hpp"

namespace qmodw {

namespace {

// Five entries per state, states in the order psi1, psi2, psi3, psi4.
constexpr const char* kStateTableJson = R"json({
  "000": [["1", "0", "0", "0", "0"],
          ["1", "0", "0", "0", "0"],
          ["1", "0", "0", "0", "0"],
          ["1", "0", "0", "0", "0"]],
  "100": [["1/3", "-2/3", "-2/3", "0", "0"],
          ["1/3", "1/12 - 1/4·i√3", "1/12 + 1/4·i√3", "-1/2", "-1/2"],
          ["0", "-1/4 - 1/4·i√3", "-1/4 + 1/4·i√3", "-1/2", "-1/2"],
          ["0", "-1/2·√2", "-1/2·√2", "0", "0"]],
  "010": [["1/3", "1/3 + 1/3·i√3", "1/3 - 1/3·i√3", "0", "0"],
          ["1/3", "-5/12 + 1/12·i√3", "-5/12 - 1/12·i√3", "1/4 + 1/4·i√3", "1/4 - 1/4·i√3"],
          ["0", "-1/4 + 1/4·i√3", "-1/4 - 1/4·i√3", "1/4 + 1/4·i√3", "1/4 - 1/4·i√3"],
          ["0", "1/4·√2 + 1/4·i√6", "1/4·√2 - 1/4·i√6", "0", "0"]],
  "001": [["1/3", "1/3 - 1/3·i√3", "1/3 + 1/3·i√3", "0", "0"],
          ["1/3", "1/3 + 1/6·i√3", "1/3 - 1/6·i√3", "1/4 - 1/4·i√3", "1/4 + 1/4·i√3"],
          ["0", "1/2", "1/2", "1/4 - 1/4·i√3", "1/4 + 1/4·i√3"],
          ["0", "1/4·√2 - 1/4·i√6", "1/4·√2 + 1/4·i√6", "0", "0"]],
  "011": [["-1/3", "2/3", "2/3", "0", "0"],
          ["-1/3", "-1/12 + 1/4·i√3", "-1/12 - 1/4·i√3", "1/2", "1/2"],
          ["0", "-1/4 - 1/4·i√3", "-1/4 + 1/4·i√3", "1/2", "1/2"],
          ["0", "0", "0", "-1/4·√2 - 1/4·i√6", "-1/4·√2 + 1/4·i√6"]],
  "101": [["-1/3", "-1/3 - 1/3·i√3", "-1/3 + 1/3·i√3", "0", "0"],
          ["-1/3", "5/12 - 1/12·i√3", "5/12 + 1/12·i√3", "-1/4 - 1/4·i√3", "-1/4 + 1/4·i√3"],
          ["0", "-1/4 + 1/4·i√3", "-1/4 - 1/4·i√3", "-1/4 - 1/4·i√3", "-1/4 + 1/4·i√3"],
          ["0", "0", "0", "-1/4·√2 + 1/4·i√6", "-1/4·√2 - 1/4·i√6"]],
  "110": [["-1/3", "-1/3 + 1/3·i√3", "-1/3 - 1/3·i√3", "0", "0"],
          ["-1/3", "-1/3 - 1/6·i√3", "-1/3 + 1/6·i√3", "-1/4 + 1/4·i√3", "-1/4 - 1/4·i√3"],
          ["0", "1/2", "1/2", "-1/4 + 1/4·i√3", "-1/4 - 1/4·i√3"],
          ["0", "0", "0", "1/2·√2", "1/2·√2"]],
  "111": [["-1", "0", "0", "0", "0"],
          ["-1", "0", "0", "0", "0"],
          ["1", "0", "0", "0", "0"],
          ["1", "0", "0", "0", "0"]]
})json";

// Twice the Gram matrix.
constexpr int kTwiceGram[8][8] = {
    {2, 0, 0, 0, 0, 0, 0, 2},   {0, 2, -1, 0, -1, 0, 0, 0}, {0, -1, 2, 0, -1, 0, 0, 0},
    {0, 0, 0, 2, 0, -1, -1, 0}, {0, -1, -1, 0, 2, 0, 0, 0}, {0, 0, 0, -1, 0, 2, -1, 0},
    {0, 0, 0, -1, 0, -1, 2, 0}, {2, 0, 0, 0, 0, 0, 0, 2},
};

}  // namespace

const std::vector<std::string>& table_column_order() {
    static const std::vector<std::string> order = {"000", "100", "010", "001", "011", "101", "110", "111"};
    return order;
}

StateTable state_table_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("state table must be a JSON object keyed by input");
    StateTable table;
    for (const auto& [key, states] : j.items()) {
        if (!states.is_array() || states.size() != 4) throw ParseError("input " + key + ": expected 4 states");
        std::array<StateVector, 4> row;
        for (std::size_t k = 0; k < 4; ++k) row[k] = state_from_json(states[k]);
        table.emplace(key, std::move(row));
    }
    return table;
}

Json to_json(const StateTable& table) {
    Json out = Json::object();
    for (const auto& key : table_column_order()) {
        const auto it = table.find(key);
        if (it == table.end()) continue;
        Json states = Json::array();
        for (const auto& s : it->second) states.push_back(to_json(s));
        out[key] = std::move(states);
    }
    return out;
}

const StateTable& embedded_state_table() {
    static const StateTable table = state_table_from_json(Json::parse(kStateTableJson));
    return table;
}

const SquareMatrix& embedded_gram_matrix() {
    static const SquareMatrix g = [] {
        SquareMatrix m(8);
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c) m(r, c) = make_rational(kTwiceGram[r][c], 2);
        return m;
    }();
    return g;
}

}  // namespace qmodw
