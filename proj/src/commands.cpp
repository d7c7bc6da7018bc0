#include "qmodw/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "qmodw/errors.hpp"
#include "qmodw/fixtures.hpp"
#include "qmodw/polymethod.hpp"
#include "qmodw/subroutines.hpp"

namespace qmodw {

namespace {

constexpr std::uint64_t kSweepChunk = 512;

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0U) != 0x80U) ++w;
    return w;
}

std::string pad(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    return w >= width ? s : s + std::string(width - w, ' ');
}

std::string rpad_left(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    return w >= width ? s : std::string(width - w, ' ') + s;
}

BitString bits_of(std::uint64_t idx, std::size_t n) {
    BitString x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>((idx >> i) & 1U);
    return x;
}

struct ChunkResult {
    std::uint64_t inputs = 0;
    std::uint64_t failures = 0;
    std::uint64_t max_queries = 0;
    std::optional<std::uint64_t> zero_queries;
};

ChunkResult sweep_chunk(std::size_t n, std::uint64_t m, std::uint64_t begin, std::uint64_t end) {
    ChunkResult r;
    std::vector<Index> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const BitString x = bits_of(idx, n);
        ++r.inputs;
        try {
            CountingOracle oracle(x);
            const PartitionResult result = partition_weight(oracle, all, m);
            const auto weight = static_cast<std::uint64_t>(std::count(x.begin(), x.end(), 1));
            const bool ok = result.w2 % m == weight % m && audit_partition(x, all, m, result).empty() &&
                            result.queries == oracle.query_count();
            if (!ok) ++r.failures;
            r.max_queries = std::max(r.max_queries, result.queries);
            if (idx == 0) r.zero_queries = result.queries;
        } catch (const Error&) {
            ++r.failures;
        }
    }
    return r;
}

std::string state_label(std::size_t k) { return "ψ" + std::to_string(k + 1); }

void print_state_table(std::ostream& out, const StateTable& table) {
    const auto& order = table_column_order();
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"state", "entry"});
    rows.back().insert(rows.back().end(), order.begin(), order.end());
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t e = 0; e < kMod3Dim; ++e) {
            std::vector<std::string> row = {state_label(s), "|" + std::to_string(e) + "⟩"};
            for (const auto& key : order) row.push_back(table.at(key)[s][e].to_string());
            rows.push_back(std::move(row));
        }
    std::vector<std::size_t> widths(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += c + 1 == row.size() ? row[c] : pad(row[c], widths[c]);
        }
        out << line << '\n';
    }
}

StateTable computed_state_table() {
    StateTable table;
    for (const auto& key : table_column_order()) table.emplace(key, trace_mod3(parse_bits(key)).states);
    return table;
}

std::string sign_name(const std::array<int, 3>& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < 3; ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

}  // namespace

RunReport make_run_report(const std::string& bits, std::uint64_t m, bool trace) {
    RunReport report;
    report.input = bits;
    report.m = m;
    CountingOracle oracle(parse_bits(bits));
    factor_split(m);
    oracle.record_transcript(trace);
    report.partition = partition_all(oracle, m);
    report.residue = report.partition.w2 % m;
    report.queries = report.partition.queries;
    report.bound = query_bound(oracle.size(), m);
    if (trace) report.transcript = oracle.transcript();
    if (report.queries > report.bound)
        throw InternalInvariantViolation("used " + std::to_string(report.queries) + " queries, bound is " +
                                         std::to_string(report.bound));
    return report;
}

Json to_json(const RunReport& report) {
    Json j;
    j["x"] = report.input;
    j["m"] = report.m;
    j["residue"] = report.residue;
    j["queries"] = report.queries;
    j["bound"] = report.bound;
    j["blocks"] = report.partition.blocks;
    j["s2"] = report.partition.s2;
    j["w2"] = report.partition.w2;
    if (report.transcript) j["transcript"] = to_json(*report.transcript);
    return j;
}

std::uint64_t SweepReport::total_failures() const {
    std::uint64_t total = 0;
    for (const auto& r : rows) total += r.failures;
    return total;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("QMODW_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

SweepReport run_sweep(std::size_t n_max, const std::vector<std::uint64_t>& moduli, unsigned threads) {
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    if (n_max > 40) throw DomainError("n_max above 40 is not an exhaustive sweep anyone can wait for");
    for (auto m : moduli) factor_split(m);
    std::vector<std::uint64_t> ms = moduli;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

    struct Task {
        std::size_t row;
        std::size_t n;
        std::uint64_t m;
        std::uint64_t begin;
        std::uint64_t end;
    };
    SweepReport report;
    std::vector<Task> tasks;
    for (std::size_t n = 1; n <= n_max; ++n)
        for (auto m : ms) {
            const std::size_t row = report.rows.size();
            report.rows.push_back({n, m, 0, 0, 0, query_bound(n, m), 0});
            const std::uint64_t total = std::uint64_t{1} << n;
            for (std::uint64_t b = 0; b < total; b += kSweepChunk) tasks.push_back({row, n, m, b, std::min(total, b + kSweepChunk)});
        }

    std::vector<ChunkResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++)
            results[t] = sweep_chunk(tasks[t].n, tasks[t].m, tasks[t].begin, tasks[t].end);
    };
    const unsigned count = std::max(1U, std::min<unsigned>(threads == 0 ? default_thread_count() : threads,
                                                           static_cast<unsigned>(tasks.size())));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < count; ++k) pool.emplace_back(worker);
    }

    for (std::size_t t = 0; t < tasks.size(); ++t) {
        SweepRow& row = report.rows[tasks[t].row];
        row.inputs += results[t].inputs;
        row.failures += results[t].failures;
        row.max_queries = std::max(row.max_queries, results[t].max_queries);
        if (results[t].zero_queries) row.zero_input_queries = *results[t].zero_queries;
    }
    return report;
}

std::string sweep_csv(const SweepReport& report) {
    std::ostringstream os;
    os << "n,m,inputs,failures,max_queries,bound,all_correct\n";
    for (const auto& r : report.rows)
        os << r.n << ',' << r.m << ',' << r.inputs << ',' << r.failures << ',' << r.max_queries << ',' << r.bound << ','
           << (r.all_correct() ? "true" : "false") << '\n';
    return os.str();
}

std::string lower_bound_csv(std::size_t n_max) {
    std::ostringstream os;
    os << "n,m,zero_weights,bound,matches_upper_bound\n";
    for (std::size_t n = 2; n <= n_max; ++n)
        for (std::size_t m = 2; m <= n; ++m) {
            const LowerBoundRow row = lower_bound_row(n, m);
            os << row.n << ',' << row.m << ',' << row.zero_weights << ',' << row.bound << ','
               << (row.matches_upper_bound ? "true" : "false") << '\n';
        }
    return os.str();
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.m < 2) {
        err << "error: --m must be at least 2\n";
        return kExitUsage;
    }
    try {
        const RunReport report = make_run_report(opts.x, static_cast<std::uint64_t>(opts.m), opts.trace);
        out << to_json(report).dump(2) << '\n';
        return kExitOk;
    } catch (const UnsupportedModulus& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnsupportedModulus;
    } catch (const InternalInvariantViolation& e) {
        err << "verification failure: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.n_max < 1) {
        err << "error: --n-max must be at least 1\n";
        return kExitUsage;
    }
    if (opts.moduli.empty()) {
        err << "error: --moduli needs at least one modulus\n";
        return kExitUsage;
    }
    std::vector<std::uint64_t> moduli;
    for (auto m : opts.moduli) {
        if (m < 2) {
            err << "error: moduli must be at least 2\n";
            return kExitUsage;
        }
        moduli.push_back(static_cast<std::uint64_t>(m));
    }
    try {
        const SweepReport report = run_sweep(static_cast<std::size_t>(opts.n_max), moduli, opts.threads);
        out << sweep_csv(report);
        if (report.total_failures() != 0) {
            err << "verification failure: " << report.total_failures() << " failing inputs\n";
            return kExitVerificationFailed;
        }
        return kExitOk;
    } catch (const UnsupportedModulus& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnsupportedModulus;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_verify_states(const VerifyStatesOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.format != "table" && opts.format != "json") {
        err << "error: --format must be 'table' or 'json'\n";
        return kExitUsage;
    }
    StateTable fixture;
    try {
        if (opts.fixture_path.empty()) {
            fixture = embedded_state_table();
        } else {
            std::ifstream in(opts.fixture_path);
            if (!in) {
                err << "error: cannot open fixture " << opts.fixture_path << '\n';
                return kExitUsage;
            }
            fixture = state_table_from_json(Json::parse(in));
        }
    } catch (const std::exception& e) {
        err << "error: malformed fixture: " << e.what() << '\n';
        return kExitUsage;
    }

    const StateTable computed = computed_state_table();
    std::vector<std::string> mismatches;
    std::size_t matched = 0;
    for (const auto& key : table_column_order())
        for (std::size_t s = 0; s < 4; ++s) {
            const auto it = fixture.find(key);
            if (it != fixture.end() && it->second[s] == computed.at(key)[s])
                ++matched;
            else
                mismatches.push_back(state_label(s) + "(" + key + ")");
        }

    if (opts.format == "json") {
        Json j;
        j["match"] = mismatches.empty();
        j["matched"] = matched;
        j["total"] = 32;
        j["mismatches"] = mismatches;
        j["states"] = to_json(computed);
        out << j.dump(2) << '\n';
    } else {
        print_state_table(out, computed);
        out << "\nfixture match: " << matched << "/32 states\n";
        for (const auto& m : mismatches) out << "mismatch: " << m << '\n';
    }
    if (!mismatches.empty()) {
        err << "verification failure: " << mismatches.size() << " states differ from the fixture\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_gram(const GramOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.format != "grid" && opts.format != "json") {
        err << "error: --format must be 'grid' or 'json'\n";
        return kExitUsage;
    }
    const SquareMatrix g = gram_matrix();
    const bool matches_display = g == embedded_gram_matrix();

    std::size_t agree48 = 0;
    std::size_t agree16 = 0;
    std::vector<std::string> disagreements;
    if (opts.closed_form) {
        for (std::size_t x = 0; x < 8; ++x)
            for (std::size_t y = 0; y < 8; ++y) {
                const BitString bx = three_bit_input(x);
                const BitString by = three_bit_input(y);
                std::array<int, 3> a{};
                std::array<int, 3> b{};
                for (std::size_t i = 0; i < 3; ++i) {
                    a[i] = bx[i] ? -1 : 1;
                    b[i] = by[i] ? -1 : 1;
                }
                const bool ok48 = gram_closed_form(a, b, GramVariant::Scaled48) == g(x, y);
                const bool ok16 = gram_closed_form(a, b, GramVariant::Scaled16) == g(x, y);
                agree48 += ok48;
                agree16 += ok16;
                if (!ok48 || !ok16) disagreements.push_back(sign_name(a) + " " + sign_name(b));
            }
    }

    std::vector<std::string> order;
    for (std::size_t x = 0; x < 8; ++x) order.push_back(format_bits(three_bit_input(x)));

    if (opts.format == "json") {
        Json j;
        j["order"] = order;
        j["matrix"] = to_json(g);
        Json twice = Json::array();
        for (std::size_t r = 0; r < 8; ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < 8; ++c) row.push_back((g(r, c) * AlgebraicNumber(2L)).to_string());
            twice.push_back(std::move(row));
        }
        j["twice"] = std::move(twice);
        j["matches_display"] = matches_display;
        if (opts.closed_form) {
            j["closed_form_48_agree"] = agree48;
            j["closed_form_16_agree"] = agree16;
            j["pairs"] = 64;
        }
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> cells(8, std::vector<std::string>(8));
        std::size_t width = 0;
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c) {
                cells[r][c] = (g(r, c) * AlgebraicNumber(2L)).to_string();
                width = std::max(width, display_width(cells[r][c]));
            }
        out << "G = 1/2 ×   (rows and columns: ";
        for (std::size_t k = 0; k < 8; ++k) out << (k ? " " : "") << order[k];
        out << ")\n";
        for (std::size_t r = 0; r < 8; ++r) {
            out << "  [";
            for (std::size_t c = 0; c < 8; ++c) out << (c ? " " : "") << rpad_left(cells[r][c], width);
            out << " ]\n";
        }
        out << "matches displayed matrix: " << (matches_display ? "yes" : "no") << '\n';
        if (opts.closed_form) {
            out << "closed form 48·G: " << agree48 << "/64 pairs agree\n";
            out << "closed form 16·G: " << agree16 << "/64 pairs agree\n";
            for (const auto& d : disagreements) out << "disagreement: " << d << '\n';
        }
    }
    if (!matches_display || (opts.closed_form && (agree48 != 64 || agree16 != 64))) {
        err << "verification failure: Gram matrix check failed\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_lower_bound(const LowerBoundOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.sweep) {
            if (opts.n || opts.m) {
                err << "error: --sweep cannot be combined with --n/--m\n";
                return kExitUsage;
            }
            if (opts.n_max < 2) {
                err << "error: --n-max must be at least 2\n";
                return kExitUsage;
            }
            const std::string csv = lower_bound_csv(static_cast<std::size_t>(opts.n_max));
            out << csv;
            if (csv.find(",false\n") != std::string::npos) {
                err << "verification failure: zero-weight count differs from the query bound\n";
                return kExitVerificationFailed;
            }
            return kExitOk;
        }
        if (!opts.n || !opts.m) {
            err << "error: lower-bound needs --n and --m, or --sweep\n";
            return kExitUsage;
        }
        if (*opts.n < 1 || *opts.m < 2) {
            err << "error: MOD_m is defined for 2 <= m <= n\n";
            return kExitUsage;
        }
        const LowerBoundRow row = lower_bound_row(static_cast<std::size_t>(*opts.n), static_cast<std::size_t>(*opts.m));
        Json j;
        j["n"] = row.n;
        j["m"] = row.m;
        j["zero_weights"] = row.zero_weights;
        j["bound"] = row.bound;
        j["matches_upper_bound"] = row.matches_upper_bound;
        out << j.dump(2) << '\n';
        return row.matches_upper_bound ? kExitOk : kExitVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace qmodw
