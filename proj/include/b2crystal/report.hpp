#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace b2crystal {

enum class CheckStatus { pass, fail, vacuous };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "vacuous";
    }
}

struct CheckEntry {
    std::string axiom;
    CheckStatus status = CheckStatus::pass;
    std::vector<std::string> witnesses;
    std::string note;
};

// Outcome of a verification run: one entry per axiom or derived property,
// failures carrying the witnessing vertices/edges.
struct Report {
    std::vector<CheckEntry> entries;

    bool passed() const {
        for (const auto& e : entries)
            if (e.status == CheckStatus::fail) return false;
        return true;
    }

    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& e : entries)
            if (e.status == CheckStatus::fail) ++n;
        return n;
    }

    CheckEntry& add(std::string axiom, CheckStatus status) {
        entries.push_back({std::move(axiom), status, {}, {}});
        return entries.back();
    }

    void add_pass(std::string axiom, std::string note = {}) {
        entries.push_back({std::move(axiom), CheckStatus::pass, {}, std::move(note)});
    }

    void add_vacuous(std::string axiom, std::string note) {
        entries.push_back({std::move(axiom), CheckStatus::vacuous, {}, std::move(note)});
    }

    void add_fail(std::string axiom, std::vector<std::string> witnesses,
                  std::string note = {}) {
        entries.push_back({std::move(axiom), CheckStatus::fail, std::move(witnesses),
                           std::move(note)});
    }

    bool axiom_passed(const std::string& axiom) const {
        bool seen = false;
        for (const auto& e : entries) {
            if (e.axiom != axiom) continue;
            seen = true;
            if (e.status == CheckStatus::fail) return false;
        }
        return seen;
    }

    void merge(Report other) {
        for (auto& e : other.entries) entries.push_back(std::move(e));
    }

    nlohmann::ordered_json to_json() const {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            nlohmann::ordered_json j{{"axiom", e.axiom},
                                     {"status", to_string(e.status)},
                                     {"witnesses", e.witnesses}};
            if (!e.note.empty()) j["note"] = e.note;
            arr.push_back(std::move(j));
        }
        return arr;
    }

    std::string to_text() const {
        std::string out;
        for (const auto& e : entries) {
            out += to_string(e.status);
            out += "  ";
            out += e.axiom;
            if (!e.note.empty()) out += "  (" + e.note + ")";
            out += '\n';
            for (const auto& w : e.witnesses) out += "        witness: " + w + '\n';
        }
        return out;
    }
};

} // namespace b2crystal
