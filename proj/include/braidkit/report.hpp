#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidkit {

struct CheckRecord {
    std::string axiom;
    std::string element;
    bool pass = true;
    std::string residual;  // "0" on success
};

struct AxiomReport {
    std::string name;
    std::vector<CheckRecord> records;

    bool pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& r : records) n += r.pass ? 0 : 1;
        return n;
    }
    void add(std::string axiom, std::string element, bool ok, std::string residual = "0") {
        records.push_back({std::move(axiom), std::move(element), ok, ok ? "0" : std::move(residual)});
    }
    // Residual must provide is_zero(); the printer is only called on failure.
    template <class T, class Printer>
    bool add_residual(std::string axiom, std::string element, const T& residual, Printer&& print) {
        bool ok = residual.is_zero();
        records.push_back({std::move(axiom), std::move(element), ok, ok ? "0" : print(residual)});
        return ok;
    }
    void merge(const AxiomReport& o, const std::string& prefix = "") {
        for (auto r : o.records) {
            if (!prefix.empty()) r.axiom = prefix + "/" + r.axiom;
            records.push_back(std::move(r));
        }
    }
    // axiom -> (checks, failures), sorted by axiom name.
    std::map<std::string, std::pair<std::size_t, std::size_t>> summary() const {
        std::map<std::string, std::pair<std::size_t, std::size_t>> s;
        for (const auto& r : records) {
            auto& e = s[r.axiom];
            ++e.first;
            if (!r.pass) ++e.second;
        }
        return s;
    }
};

}  // namespace braidkit
