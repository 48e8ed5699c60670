#pragma once

#include "omep/galois.hpp"
#include "omep/plan.hpp"
#include "omep/verification.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace omep {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline void require_plain_token(const std::string& s, const char* what) {
    if (s.empty()) throw ParseError(std::string(what) + " must not be empty");
    for (char c : s)
        if (c == ' ' || c == '\t' || c == '\n' || c == ',')
            throw ParseError(std::string(what) + " '" + s + "' contains whitespace or a comma");
}

inline std::size_t parse_count(const std::string& s, const char* what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(std::string("cannot parse ") + what + " from '" + s + "'");
    return static_cast<std::size_t>(std::stoull(s));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Structured plan format
// ---------------------------------------------------------------------------
//
//   omep-plan 1
//   factor <name> <levels> <block|-> <label> ... <label>
//   ...
//   runs <n>
//   <n run-major lines of <factor-count> labels>

inline std::string plan_to_text(const Plan& p) {
    validate_plan(p);
    std::string out = "omep-plan 1\n";
    for (const auto& f : p.factors) {
        detail::require_plain_token(f.name, "factor name");
        out += "factor " + f.name + " " + std::to_string(f.levels) + " ";
        out += (p.block_factor && *p.block_factor == f.name) ? "block" : "-";
        for (const auto& l : f.labels) {
            detail::require_plain_token(l, "level label");
            out += " " + l;
        }
        out += "\n";
    }
    out += "runs " + std::to_string(p.runs) + "\n";
    for (std::size_t r = 0; r < p.runs; ++r) {
        for (std::size_t f = 0; f < p.factors.size(); ++f) {
            if (f) out += " ";
            out += p.factors[f].labels[p.table[f][r]];
        }
        out += "\n";
    }
    return out;
}

inline Plan plan_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](const char* what) {
        while (std::getline(in, line)) {
            if (!detail::tokens(line).empty()) return;
        }
        throw ParseError(std::string("unexpected end of plan file, expected ") + what);
    };

    next_line("header");
    auto head = detail::tokens(line);
    if (head.size() != 2 || head[0] != "omep-plan")
        throw ParseError("not a plan file: missing 'omep-plan' header");
    if (head[1] != "1") throw ParseError("unsupported plan format version '" + head[1] + "'");

    Plan p;
    while (true) {
        next_line("factor lines or runs");
        auto t = detail::tokens(line);
        if (t[0] == "runs") {
            if (t.size() != 2) throw ParseError("malformed runs line");
            p.runs = detail::parse_count(t[1], "run count");
            break;
        }
        if (t[0] != "factor") throw ParseError("expected 'factor' or 'runs', got '" + t[0] + "'");
        if (t.size() < 4) throw ParseError("malformed factor line: " + line);
        Factor f;
        f.name = t[1];
        f.levels = detail::parse_count(t[2], "level count");
        if (t[3] == "block") {
            if (p.block_factor) throw ParseError("more than one block factor");
            p.block_factor = f.name;
        } else if (t[3] != "-") {
            throw ParseError("factor flag must be 'block' or '-', got '" + t[3] + "'");
        }
        f.labels.assign(t.begin() + 4, t.end());
        if (f.labels.size() != f.levels)
            throw ParseError("factor '" + f.name + "' declares " + t[2] + " levels but lists " +
                             std::to_string(f.labels.size()) + " labels");
        p.factors.push_back(std::move(f));
    }
    if (p.factors.empty()) throw ParseError("plan file declares no factors");

    std::vector<std::map<std::string, std::size_t>> level_of(p.factors.size());
    for (std::size_t f = 0; f < p.factors.size(); ++f)
        for (std::size_t l = 0; l < p.factors[f].labels.size(); ++l)
            level_of[f][p.factors[f].labels[l]] = l;

    p.table.assign(p.factors.size(), std::vector<std::size_t>(p.runs, 0));
    for (std::size_t r = 0; r < p.runs; ++r) {
        next_line("run line");
        auto t = detail::tokens(line);
        if (t.size() != p.factors.size())
            throw ParseError("run " + std::to_string(r) + " has " + std::to_string(t.size()) +
                             " entries, expected " + std::to_string(p.factors.size()));
        for (std::size_t f = 0; f < p.factors.size(); ++f) {
            auto it = level_of[f].find(t[f]);
            if (it == level_of[f].end())
                throw ParseError("run " + std::to_string(r) + ": unknown level '" + t[f] +
                                 "' for factor '" + p.factors[f].name + "'");
            p.table[f][r] = it->second;
        }
    }
    validate_plan(p);
    return p;
}

// ---------------------------------------------------------------------------
// CSV format
// ---------------------------------------------------------------------------
//
// First row: factor names (a trailing '*' marks the block factor).
// Optional second row: level counts (always written; on input it is read as
// counts only when every cell is an integer >= 2 matching the distinct label
// count of its column). Remaining rows: one run per line.

namespace detail {

inline std::vector<std::string> csv_cells(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

inline bool all_integer_labels(const std::vector<std::string>& labels) {
    for (const auto& l : labels) {
        if (l.empty()) return false;
        std::size_t i = l[0] == '-' ? 1 : 0;
        if (i == l.size()) return false;
        for (; i < l.size(); ++i)
            if (l[i] < '0' || l[i] > '9') return false;
    }
    return true;
}

}  // namespace detail

inline std::string plan_to_csv(const Plan& p) {
    validate_plan(p);
    std::string out;
    for (std::size_t f = 0; f < p.factors.size(); ++f) {
        if (f) out += ",";
        detail::require_plain_token(p.factors[f].name, "factor name");
        if (p.factors[f].name.back() == '*')
            throw std::invalid_argument("plan_to_csv: factor name '" + p.factors[f].name +
                                        "' would collide with the csv block marker");
        out += p.factors[f].name;
        if (p.block_factor && *p.block_factor == p.factors[f].name) out += "*";
    }
    out += "\n";
    for (std::size_t f = 0; f < p.factors.size(); ++f) {
        if (f) out += ",";
        out += std::to_string(p.factors[f].levels);
    }
    out += "\n";
    for (std::size_t r = 0; r < p.runs; ++r) {
        for (std::size_t f = 0; f < p.factors.size(); ++f) {
            if (f) out += ",";
            out += p.factors[f].labels[p.table[f][r]];
        }
        out += "\n";
    }
    return out;
}

inline Plan plan_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto cells = detail::csv_cells(line);
        if (!cells.empty() && !std::all_of(cells.begin(), cells.end(),
                                           [](const std::string& c) { return c.empty(); }))
            rows.push_back(std::move(cells));
    }
    if (rows.size() < 2) throw ParseError("csv plan needs a header row and at least one run");

    Plan p;
    const std::size_t nf = rows[0].size();
    for (auto name : rows[0]) {
        Factor f;
        const bool is_block = !name.empty() && name.back() == '*';
        if (is_block) name.pop_back();
        if (name.empty()) throw ParseError("csv plan has an empty factor name");
        f.name = name;
        if (is_block) {
            if (p.block_factor) throw ParseError("more than one block factor");
            p.block_factor = name;
        }
        p.factors.push_back(std::move(f));
    }

    // optional counts row
    std::size_t first_data = 1;
    if (rows.size() > 2 && rows[1].size() == nf) {
        bool counts = true;
        std::vector<std::size_t> values(nf);
        for (std::size_t f = 0; f < nf && counts; ++f) {
            const auto& c = rows[1][f];
            counts = !c.empty() && std::all_of(c.begin(), c.end(),
                                               [](char ch) { return ch >= '0' && ch <= '9'; });
            if (counts) {
                values[f] = static_cast<std::size_t>(std::stoull(c));
                counts = values[f] >= 2;
            }
        }
        if (counts) {
            // accept as counts only if consistent with the remaining rows
            for (std::size_t f = 0; f < nf && counts; ++f) {
                std::set<std::string> distinct;
                for (std::size_t r = 2; r < rows.size(); ++r) {
                    if (rows[r].size() != nf)
                        throw ParseError("csv row " + std::to_string(r + 1) +
                                         " has the wrong number of cells");
                    distinct.insert(rows[r][f]);
                }
                counts = distinct.size() == values[f];
            }
            if (counts) first_data = 2;
        }
    }

    const std::size_t runs = rows.size() - first_data;
    if (runs == 0) throw ParseError("csv plan has no runs");
    p.runs = runs;

    for (std::size_t f = 0; f < nf; ++f) {
        std::set<std::string> distinct;
        for (std::size_t r = first_data; r < rows.size(); ++r) {
            if (rows[r].size() != nf)
                throw ParseError("csv row " + std::to_string(r + 1) +
                                 " has the wrong number of cells");
            distinct.insert(rows[r][f]);
        }
        std::vector<std::string> labels(distinct.begin(), distinct.end());
        if (detail::all_integer_labels(labels))
            std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
                return std::stoll(a) < std::stoll(b);
            });
        p.factors[f].levels = labels.size();
        p.factors[f].labels = labels;
    }

    p.table.assign(nf, std::vector<std::size_t>(p.runs, 0));
    for (std::size_t f = 0; f < nf; ++f) {
        std::map<std::string, std::size_t> level_of;
        for (std::size_t l = 0; l < p.factors[f].labels.size(); ++l)
            level_of[p.factors[f].labels[l]] = l;
        for (std::size_t r = 0; r < p.runs; ++r)
            p.table[f][r] = level_of.at(rows[first_data + r][f]);
    }
    validate_plan(p);
    return p;
}

// ---------------------------------------------------------------------------
// Orthogonal array format: "OA n m k t lambda" header, then m symbol rows
// ---------------------------------------------------------------------------

inline std::string oa_to_text(const OrthogonalArray& oa) {
    for (std::size_t s : oa.symbol_counts)
        if (s != oa.symbol_counts.front())
            throw std::invalid_argument("oa_to_text: mixed symbol counts are not supported");
    std::string out = "OA " + std::to_string(oa.runs) + " " + std::to_string(oa.rows) + " " +
                      std::to_string(oa.symbol_counts.front()) + " " +
                      std::to_string(oa.strength) + " " + std::to_string(oa.index) + "\n";
    for (std::size_t i = 0; i < oa.rows; ++i) {
        for (std::size_t r = 0; r < oa.runs; ++r) {
            if (r) out += " ";
            out += std::to_string(oa.cells[i][r]);
        }
        out += "\n";
    }
    return out;
}

inline OrthogonalArray oa_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty orthogonal-array file");
    auto head = detail::tokens(line);
    if (head.size() != 6 || head[0] != "OA")
        throw ParseError("orthogonal-array file must start with 'OA n m k t lambda'");
    OrthogonalArray oa;
    oa.runs = detail::parse_count(head[1], "run count");
    oa.rows = detail::parse_count(head[2], "row count");
    const std::size_t k = detail::parse_count(head[3], "symbol count");
    oa.strength = detail::parse_count(head[4], "strength");
    oa.index = detail::parse_count(head[5], "index");
    oa.symbol_counts.assign(oa.rows, k);
    oa.cells.assign(oa.rows, std::vector<unsigned>(oa.runs, 0));
    for (std::size_t i = 0; i < oa.rows; ++i) {
        if (!std::getline(in, line))
            throw ParseError("orthogonal-array file ends before row " + std::to_string(i));
        auto t = detail::tokens(line);
        if (t.size() != oa.runs)
            throw ParseError("orthogonal-array row " + std::to_string(i) + " has " +
                             std::to_string(t.size()) + " entries, expected " +
                             std::to_string(oa.runs));
        for (std::size_t r = 0; r < oa.runs; ++r) {
            const std::size_t v = detail::parse_count(t[r], "symbol");
            if (v >= k)
                throw ParseError("orthogonal-array symbol " + t[r] + " out of range 0.." +
                                 std::to_string(k - 1));
            oa.cells[i][r] = static_cast<unsigned>(v);
        }
    }
    if (oa.strength != 2)
        throw ParseError("only strength-2 arrays are supported (declared t=" +
                         std::to_string(oa.strength) + ")");
    if (!oa_check_strength2(oa)) throw ParseError("array fails the strength-2 pair-count check");
    if (oa.index != oa.runs / (k * k))
        throw ParseError("declared index disagrees with the run and symbol counts");
    return oa;
}

// ---------------------------------------------------------------------------
// Claim report rendering
// ---------------------------------------------------------------------------

inline std::string reports_to_text(const std::vector<ClaimReport>& reports) {
    std::string out;
    for (const auto& c : reports) {
        const char* v = c.verdict == Verdict::pass   ? "[pass]"
                        : c.verdict == Verdict::fail ? "[FAIL]"
                                                     : "[ n/a]";
        out += std::string(v) + " " + c.id + "  " + c.statement + "\n";
        if (c.verdict == Verdict::fail) {
            out += "       expected: " + c.expected + "\n";
            out += "       computed: " + c.computed + "\n";
        }
        if (!c.notes.empty()) out += "       note: " + c.notes + "\n";
    }
    std::size_t pass = 0, fail = 0, na = 0;
    for (const auto& c : reports) {
        pass += c.verdict == Verdict::pass;
        fail += c.verdict == Verdict::fail;
        na += c.verdict == Verdict::not_applicable;
    }
    out += std::to_string(reports.size()) + " claims: " + std::to_string(pass) + " pass, " +
           std::to_string(fail) + " fail, " + std::to_string(na) + " not applicable\n";
    return out;
}

/// One JSON object per line: id, statement, expected, computed, verdict, notes.
inline std::string reports_to_jsonl(const std::vector<ClaimReport>& reports) {
    std::string out;
    for (const auto& c : reports) {
        nlohmann::json j{{"id", c.id},
                         {"statement", c.statement},
                         {"expected", c.expected},
                         {"computed", c.computed},
                         {"verdict", verdict_name(c.verdict)},
                         {"notes", c.notes}};
        out += j.dump() + "\n";
    }
    return out;
}

}  // namespace omep
